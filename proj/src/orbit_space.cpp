#include "qudit/orbit_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qudit {
namespace {

constexpr double kPi = std::numbers::pi;

void require_dim(int N, const char* where) {
  if (N < 2) throw InvalidDimension(std::string(where) + ": N must be >= 2, got " + std::to_string(N));
}

}  // namespace

RealVector unit_vector(int N, std::span<const double> angles) {
  require_dim(N, "unit_vector");
  if (static_cast<int>(angles.size()) != N - 2) {
    throw DimensionMismatch("unit_vector: N = " + std::to_string(N) + " needs " + std::to_string(N - 2) +
                            " angles, got " + std::to_string(angles.size()));
  }
  RealVector n = RealVector::Zero(N - 1);
  if (N == 2) {
    n(0) = 1.0;
    return n;
  }
  const double psi = angles[0] / 3.0;
  n(0) = std::cos(psi);
  n(1) = std::sin(psi);
  // Each polar angle tilts the vector built so far away from a new axis.
  for (int m = 2; m <= N - 2; ++m) {
    const double theta = angles[static_cast<std::size_t>(m - 1)];
    n.head(m) *= std::sin(theta);
    n(m) = std::cos(theta);
  }
  return n;
}

OrbitSpectrum spectrum_from_orbit(const OrbitCoordinates& coords, const WeightSystem& weights) {
  const int N = coords.dim;
  require_dim(N, "spectrum_from_orbit");
  if (weights.dim != N) throw DimensionMismatch("spectrum_from_orbit: weight system has wrong dimension");
  const RealVector n = unit_vector(N, coords.angles);
  const double scale = std::sqrt(2.0 * (N - 1) / N) * coords.radius;
  OrbitSpectrum out;
  out.raw.reserve(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    out.raw.push_back(1.0 / N + scale * weights.weights[static_cast<std::size_t>(i)].dot(n));
  }
  out.sorted = Spectrum(out.raw);
  out.valid = std::all_of(out.raw.begin(), out.raw.end(), [](double v) { return v >= -1e-12; });
  return out;
}

OrbitSpectrum spectrum_from_orbit(const OrbitCoordinates& coords) {
  return spectrum_from_orbit(coords, weight_vectors(coords.dim));
}

RealVector cartan_coordinates(std::span<const double> eigenvalues, const BasisSet& basis) {
  const int N = basis.dim;
  if (static_cast<int>(eigenvalues.size()) != N) {
    throw DimensionMismatch("cartan_coordinates: expected " + std::to_string(N) + " eigenvalues");
  }
  const double scale = std::sqrt(N / (2.0 * (N - 1)));
  RealVector I(N - 1);
  for (int alpha = 0; alpha < N - 1; ++alpha) {
    const ComplexMatrix& h = basis.cartan(alpha);
    double acc = 0.0;
    for (int i = 0; i < N; ++i) acc += eigenvalues[static_cast<std::size_t>(i)] * h(i, i).real();
    I(alpha) = scale * acc;
  }
  return I;
}

OrbitCoordinates orbit_from_spectrum(const Spectrum& spec, const BasisSet& basis) {
  const int N = spec.dim();
  require_dim(N, "orbit_from_spectrum");
  const RealVector I = cartan_coordinates(spec.values(), basis);
  OrbitCoordinates out;
  out.dim = N;
  out.radius = I.norm();
  out.angles.assign(static_cast<std::size_t>(N - 2), 0.0);
  if (out.radius <= 1e-15) {
    out.radius = 0.0;
    out.degenerate = true;
    return out;
  }
  if (N == 2) return out;
  const RealVector n = I / out.radius;
  for (int m = N - 2; m >= 2; --m) {
    const double rho = n.head(m + 1).norm();
    if (rho <= 1e-15) {
      out.degenerate = true;
      continue;
    }
    out.angles[static_cast<std::size_t>(m - 1)] = std::acos(std::clamp(n(m) / rho, -1.0, 1.0));
  }
  if (n.head(2).norm() <= 1e-15) out.degenerate = true;
  out.angles[0] = 3.0 * std::atan2(n(1), n(0));
  return out;
}

OrbitCoordinates orbit_from_spectrum(const Spectrum& spec) {
  return orbit_from_spectrum(spec, *shared_basis(spec.dim()));
}

double purity_from_radius(int N, double r) { return 1.0 / N + (N - 1.0) / N * r * r; }

bool ordered_domain_check(const OrbitCoordinates& coords) {
  const OrbitSpectrum s = spectrum_from_orbit(coords);
  if (!s.valid) return false;
  for (std::size_t i = 1; i < s.raw.size(); ++i) {
    if (s.raw[i] > s.raw[i - 1] + 1e-12) return false;
  }
  return true;
}

StratumReport classify_spectrum(const Spectrum& spec) {
  const int N = spec.dim();
  StratumReport rep;
  rep.spectrum = spec;
  rep.label = "O";
  int multiplicity = 1;
  int sum_sq = 0;
  for (int i = 0; i < N; ++i) {
    if (i > 0) {
      if (spec[i - 1] - spec[i] <= kDegeneracyTol) {
        rep.label += '|';
        ++multiplicity;
      } else {
        sum_sq += multiplicity * multiplicity;
        multiplicity = 1;
      }
    }
    rep.label += std::to_string(i + 1);
  }
  sum_sq += multiplicity * multiplicity;
  rep.orbit_dimension = N * N - sum_sq;
  rep.rank = static_cast<int>(
      std::count_if(spec.values().begin(), spec.values().end(), [](double v) { return v > kDegeneracyTol; }));
  if (rep.rank == N) {
    rep.stratum = "interior";
  } else if (rep.rank == 1) {
    rep.stratum = "pure";
  } else {
    rep.stratum = "boundary-rank-" + std::to_string(rep.rank);
  }
  return rep;
}

StratumReport rank_strata(const OrbitCoordinates& coords) {
  return classify_spectrum(spectrum_from_orbit(coords).sorted);
}

double qutrit_rank2_radius(double phi) { return 1.0 / (2.0 * std::sin(phi / 3.0)); }

double quatrit_rank3_cos_theta(double r) {
  if (r < 1.0 / 3.0 - 1e-12 || r > 1.0 + 1e-12) {
    throw DomainError("quatrit_rank3_cos_theta: rank-3 states need r in [1/3, 1], got " + std::to_string(r));
  }
  return std::min(1.0, 1.0 / (3.0 * r));
}

NestedKind parse_nested_kind(const std::string& name) {
  if (name == "qubit-in-qutrit") return NestedKind::QubitInQutrit;
  if (name == "qutrit-in-quatrit") return NestedKind::QutritInQuatrit;
  if (name == "qubit-in-qutrit-in-quatrit") return NestedKind::QubitInQutritInQuatrit;
  throw DomainError("unknown nesting kind '" + name + "'");
}

std::string to_string(NestedKind kind) {
  switch (kind) {
    case NestedKind::QubitInQutrit:
      return "qubit-in-qutrit";
    case NestedKind::QutritInQuatrit:
      return "qutrit-in-quatrit";
    case NestedKind::QubitInQutritInQuatrit:
      return "qubit-in-qutrit-in-quatrit";
  }
  return {};
}

double nested_threshold(NestedKind kind) {
  switch (kind) {
    case NestedKind::QubitInQutrit:
      return 0.5;
    case NestedKind::QutritInQuatrit:
      return 1.0 / 3.0;
    case NestedKind::QubitInQutritInQuatrit:
      return 1.0 / std::sqrt(3.0);
  }
  return 0.0;
}

double effective_radius(NestedKind kind, double r) {
  const double lo = nested_threshold(kind);
  if (r < lo - 1e-12 || r > 1.0 + 1e-12) {
    throw DomainError("effective_radius(" + to_string(kind) + "): r = " + std::to_string(r) +
                      " outside [" + std::to_string(lo) + ", 1]");
  }
  const double root = std::sqrt(std::max(0.0, r * r - lo * lo));
  switch (kind) {
    case NestedKind::QubitInQutrit:
      return 2.0 / std::sqrt(3.0) * root;
    case NestedKind::QutritInQuatrit:
      return 3.0 / (2.0 * std::sqrt(2.0)) * root;
    case NestedKind::QubitInQutritInQuatrit:
      return 3.0 / std::sqrt(6.0) * root;
  }
  return 0.0;
}

double trisectrix_residual(double r, double phi) {
  constexpr double a = 0.5;
  const double x = r * std::cos(phi);
  const double y = r * std::sin(phi);
  return (x * x + y * y) * (y - 3.0 * a) + 4.0 * a * a * a;
}

ArcReport qutrit_intersection_arc(double r) {
  if (r < 0.0 || r > 1.0 + 1e-12) throw DomainError("qutrit_intersection_arc: r must lie in [0, 1]");
  ArcReport rep;
  rep.radius = r;
  rep.circle_radius = std::sqrt(2.0 / 3.0) * r;
  rep.psi_begin = kPi / 6.0;
  // r_3 = 1/3 - (2/3) r sin(psi) >= 0 caps psi once r > 1/2.
  rep.psi_end = (2.0 * r <= 1.0) ? kPi / 2.0 : std::asin(std::min(1.0, 1.0 / (2.0 * r)));
  if (r == 0.0) rep.psi_end = rep.psi_begin;
  rep.angular_extent = rep.psi_end - rep.psi_begin;
  rep.arc_length = rep.circle_radius * rep.angular_extent;
  auto point = [r](double psi) {
    OrbitCoordinates c;
    c.dim = 3;
    c.radius = r;
    c.angles = {3.0 * psi};
    return spectrum_from_orbit(c).raw;
  };
  rep.begin_point = point(rep.psi_begin);
  rep.end_point = point(rep.psi_end);
  return rep;
}

PolyhedronReport quatrit_intersection_polyhedron(double r) {
  if (r < 0.0 || r > 1.0 + 1e-12) throw DomainError("quatrit_intersection_polyhedron: r must lie in [0, 1]");
  using Vec4 = Eigen::Vector4d;
  const Vec4 center = Vec4::Constant(0.25);
  const std::array<Vec4, 4> corners{Vec4(1.0, 0.0, 0.0, 0.0), Vec4(0.5, 0.5, 0.0, 0.0),
                                    Vec4(1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0), center};
  PolyhedronReport rep;
  rep.radius = r;
  rep.sphere_radius = std::sqrt(3.0) / 2.0 * r;
  const double R2 = rep.sphere_radius * rep.sphere_radius;

  std::vector<Vec4> found;
  auto add = [&found](const Vec4& v) {
    for (const auto& f : found)
      if ((f - v).norm() <= 1e-9) return;
    found.push_back(v);
  };
  if (r == 0.0) {
    add(center);
  } else {
    for (std::size_t a = 0; a < corners.size(); ++a) {
      for (std::size_t b = a + 1; b < corners.size(); ++b) {
        // |P + u (Q - P) - D|^2 = R^2 on u in [0, 1].
        const Vec4 p = corners[a] - center;
        const Vec4 dir = corners[b] - corners[a];
        const double qa = dir.squaredNorm();
        const double qb = 2.0 * p.dot(dir);
        const double qc = p.squaredNorm() - R2;
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc < -1e-14) continue;
        const double sq = std::sqrt(std::max(0.0, disc));
        for (const double u : {(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)}) {
          if (u >= -1e-12 && u <= 1.0 + 1e-12) add(corners[a] + std::clamp(u, 0.0, 1.0) * dir);
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Vec4& x, const Vec4& y) {
    return std::lexicographical_compare(x.data(), x.data() + 4, y.data(), y.data() + 4, std::greater<>());
  });
  for (const auto& v : found) rep.vertices.push_back({v(0), v(1), v(2), v(3)});
  switch (rep.vertices.size()) {
    case 1:
      rep.shape = "point";
      break;
    case 3:
      rep.shape = "triangle";
      break;
    case 4:
      rep.shape = "quadrilateral";
      break;
    default:
      rep.shape = std::to_string(rep.vertices.size()) + "-gon";
  }
  return rep;
}

std::vector<double> quatrit_transition_radii(double tol) {
  auto count = [](double r) { return quatrit_intersection_polyhedron(r).vertices.size(); };
  constexpr int kGrid = 2000;
  std::vector<double> out;
  double lo = 1.0 / kGrid;
  auto c_lo = count(lo);
  for (int i = 2; i < kGrid; ++i) {
    const double hi = static_cast<double>(i) / kGrid;
    const auto c_hi = count(hi);
    if (c_hi != c_lo) {
      double a = lo;
      double b = hi;
      while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        (count(mid) == c_lo ? a : b) = mid;
      }
      out.push_back(0.5 * (a + b));
    }
    lo = hi;
    c_lo = c_hi;
  }
  return out;
}

}  // namespace qudit
