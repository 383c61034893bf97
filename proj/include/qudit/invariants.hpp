#pragma once

// SU(N)-invariant polynomials of a density matrix: trace invariants
// t_k = tr(rho^k), characteristic-polynomial coefficients, the Bezoutian
// (Hankel matrix of power sums) and the Casimir polynomials built from the
// symmetric structure constants.

#include <vector>

#include "qudit/su_algebra.hpp"
#include "qudit/types.hpp"

namespace qudit {

struct TraceInvariants {
  int dim = 0;
  /// values[k-1] = t_k.
  std::vector<double> values;
  /// central[k-1] = tr((rho - t_1/N)^k) when the traces were taken from a
  /// matrix or spectrum; empty for a bare tuple. Shifting before powering keeps
  /// the spread of a nearly mixed state that rounding of t_k would lose.
  std::vector<double> central;

  int count() const { return static_cast<int>(values.size()); }
  /// t_k for 0 <= k <= count(); t_0 = dim.
  double t(int k) const;
};

/// tr(rho^k) for k = 1..upto by repeated multiplication, plus the central
/// power sums.
TraceInvariants trace_invariants(const HermitianMatrix& rho, int upto);

/// Power sums of the eigenvalues. Same thing as trace_invariants for a
/// diagonal matrix, without building one.
TraceInvariants trace_invariants(const std::vector<double>& eigenvalues, int upto);

/// Extends t_1..t_N to t_upto with Newton's recursion
///   t_k = S_1 t_{k-1} - S_2 t_{k-2} + ... +- S_N t_{k-N}.
/// Returns the input unchanged when upto does not exceed its length.
TraceInvariants newton_extend(const TraceInvariants& t, int upto);

struct CharCoefficients {
  int dim = 0;
  /// values[k-1] = S_k, so det(x - rho) = x^N - S_1 x^{N-1} + ... +- S_N.
  std::vector<double> values;
  /// S_0 = 1.
  double S(int k) const { return k == 0 ? 1.0 : values[static_cast<std::size_t>(k - 1)]; }
  double min() const;
};

/// S_1..S_N from t_1..t_N. The k x k Newton determinant expanded along its
/// last column gives k S_k = sum_{i=1..k} (-1)^{i-1} S_{k-i} t_i.
CharCoefficients char_coefficients(const TraceInvariants& t);

struct Bezoutian {
  int dim = 0;
  /// B_ij = t_{i+j-2} (1-based) with t_0 = N.
  RealMatrix matrix;
};

Bezoutian bezoutian(const TraceInvariants& t);

/// det B = prod_{i>j} (r_i - r_j)^2, evaluated on power sums of the
/// eigenvalues shifted to zero mean and unit variance, then rescaled.
double discriminant(const TraceInvariants& t);

/// Discriminant of the standardized roots (zero mean, unit variance). Scale
/// free, so its sign can be compared against a fixed tolerance.
double standardized_discriminant(const TraceInvariants& t);

/// All roots real, i.e. B positive semi-definite. Tested on the standardized
/// Hankel matrix, which is congruent to B.
bool has_real_roots(const TraceInvariants& t, double tol = 1e-12);

inline constexpr double kRankTol = 1e-14;

/// Number of distinct eigenvalues, the rank of B. Roots of the standardized
/// characteristic polynomial are grouped into clusters whose spread matches a
/// multiple root perturbed at the rounding level of the input (at least
/// rel_tol relative).
int bezoutian_rank(const TraceInvariants& t, double rel_tol = kRankTol);

/// Grad_ij = i j B_ij: the Bezoutian congruent under diag(1, ..., N).
RealMatrix grad_matrix(const TraceInvariants& t);

/// PSD test invariant under positive diagonal congruence: the matrix is
/// equilibrated to unit diagonal before its smallest eigenvalue is compared
/// with -tol.
bool is_positive_semidefinite(const RealMatrix& m, double tol = 1e-12);

struct CasimirValues {
  int dim = 0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  double c5 = 0.0;
  double c6 = 0.0;
};

/// With u = xi v xi, w = u v xi, z = w v xi:
///   c2 = (N-1) xi.xi   c3 = (N-1) xi.u   c4 = (N-1) u.u
///   c5 = (N-1) z.xi    c6 = (N-1) w.w
CasimirValues casimirs(const BlochVector& xi, const StructureTensors& tensors);

struct LowTraces {
  double t2 = 0.0;
  double t3 = 0.0;
  double t4 = 0.0;
};

/// Expansion of the low trace invariants over Casimirs, valid for every N:
///   t2 = (1 + c2) / N
///   t3 = (1 + 3 c2 + c3) / N^2
///   t4 = (1 + 6 c2 + 4 c3 + c2^2 + c4) / N^3
LowTraces traces_from_casimirs(const CasimirValues& c);

/// Quatrit t2, t3, t4 in terms of the Bloch radius and the two angles.
LowTraces quatrit_trace_from_angles(double r, double theta, double phi);

/// Qutrit t3 as a cubic polynomial in the eight Bloch components.
double qutrit_t3_bloch(const BlochVector& xi);

}  // namespace qudit
