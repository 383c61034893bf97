#pragma once

// Orbit space of N-level states under unitary conjugation, parameterized by
// the Bloch radius r and N - 2 angles on the unit sphere of the Cartan
// subalgebra:
//
//   r_i = 1/N + sqrt(2(N-1)/N) r mu_i . n(angles)
//
// Angle convention: angles = [phi, theta_1, ..., theta_{N-3}]. The last
// Cartan direction is the polar axis, recursing inward; the innermost pair
// (lambda_3, lambda_8) is at azimuth phi/3:
//
//   n = (sin th_{N-3} ... sin th_1 cos(phi/3),
//        sin th_{N-3} ... sin th_1 sin(phi/3),
//        sin th_{N-3} ... cos th_1,
//        ...,
//        cos th_{N-3})
//
// For N = 3 this is n = (cos(phi/3), sin(phi/3)); for N = 4,
// n = (sin th cos(phi/3), sin th sin(phi/3), cos th).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qudit/su_algebra.hpp"
#include "qudit/types.hpp"

namespace qudit {

inline constexpr const char* kAngleConvention = "cartan-polar-last/phi-over-3";

struct OrbitCoordinates {
  int dim = 0;
  double radius = 0.0;
  std::vector<double> angles;
  std::string convention = kAngleConvention;
  /// Set by orbit_from_spectrum when r = 0 (angles are then arbitrary zeros)
  /// or when a polar angle of the recursion is undefined.
  bool degenerate = false;
};

/// Unit vector in R^{N-1} from N - 2 angles. N = 2 gives the 1-vector (1).
RealVector unit_vector(int N, std::span<const double> angles);

struct OrbitSpectrum {
  /// In weight order, possibly not descending.
  std::vector<double> raw;
  Spectrum sorted;
  /// All raw entries >= -1e-12.
  bool valid = false;
};

OrbitSpectrum spectrum_from_orbit(const OrbitCoordinates& coords, const WeightSystem& weights);
OrbitSpectrum spectrum_from_orbit(const OrbitCoordinates& coords);

/// Cartan components I_alpha = sqrt(N/(2(N-1))) sum_i r_i (H_alpha)_ii of
/// the diagonal state with the given eigenvalues, in the given order.
RealVector cartan_coordinates(std::span<const double> eigenvalues, const BasisSet& basis);

/// Radius |I| and angles inverting unit_vector.
OrbitCoordinates orbit_from_spectrum(const Spectrum& spec, const BasisSet& basis);
OrbitCoordinates orbit_from_spectrum(const Spectrum& spec);

/// t_2 = 1/N + (N-1)/N r^2.
double purity_from_radius(int N, double r);

/// True iff the raw tuple is descending and non-negative (within 1e-12).
bool ordered_domain_check(const OrbitCoordinates& coords);

struct StratumReport {
  /// "O" followed by 1..N with '|' between equal neighbours, e.g. O123,
  /// O1|23 (r1 = r2 > r3), O12|3 (r1 > r2 = r3).
  std::string label;
  /// N^2 - sum of squared multiplicities.
  int orbit_dimension = 0;
  int rank = 0;
  /// "interior", "boundary-rank-k" or "pure".
  std::string stratum;
  Spectrum spectrum;
};

inline constexpr double kDegeneracyTol = 1e-9;

StratumReport rank_strata(const OrbitCoordinates& coords);
/// Same report for a spectrum given directly.
StratumReport classify_spectrum(const Spectrum& spec);

/// Qutrit rank-2 curve r = 1 / (2 sin(phi/3)).
double qutrit_rank2_radius(double phi);
/// Quatrit rank-3 surface cos(theta) = 1/(3r); DomainError unless r in [1/3, 1].
double quatrit_rank3_cos_theta(double r);

enum class NestedKind { QubitInQutrit, QutritInQuatrit, QubitInQutritInQuatrit };

NestedKind parse_nested_kind(const std::string& name);
std::string to_string(NestedKind kind);
/// Lower end of the admissible radius interval for `kind`.
double nested_threshold(NestedKind kind);

/// Bloch radius of the effective lower-dimensional system on a boundary
/// stratum. DomainError outside [threshold, 1].
double effective_radius(NestedKind kind, double r);

/// (x^2 + y^2)(y - 3a) + 4a^3 with a = 1/2, x = r cos(phi), y = r sin(phi).
double trisectrix_residual(double r, double phi);

struct ArcReport {
  double radius = 0.0;
  /// Radius sqrt(2/3) r of the circle around C = (1/3, 1/3, 1/3).
  double circle_radius = 0.0;
  /// Range of phi/3 on the ordered simplex.
  double psi_begin = 0.0;
  double psi_end = 0.0;
  double angular_extent = 0.0;
  double arc_length = 0.0;
  std::vector<double> begin_point;
  std::vector<double> end_point;
};

/// Ordered-simplex part of the qutrit eigenvalue circle at Bloch radius r.
ArcReport qutrit_intersection_arc(double r);

struct PolyhedronReport {
  double radius = 0.0;
  /// Radius (sqrt(3)/2) r of the 2-sphere around D = (1/4, 1/4, 1/4, 1/4).
  double sphere_radius = 0.0;
  std::vector<std::vector<double>> vertices;
  /// "point", "triangle" or "quadrilateral".
  std::string shape;
};

/// Vertices of the ordered tetrahedron cut by the sphere at Bloch radius r:
/// one per tetrahedron edge crossed by the sphere.
PolyhedronReport quatrit_intersection_polyhedron(double r);

/// Radii in (0, 1) at which the vertex count of the quatrit polyhedron
/// changes, located by bisection.
std::vector<double> quatrit_transition_radii(double tol = 1e-13);

}  // namespace qudit
