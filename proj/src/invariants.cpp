#include "qudit/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

namespace qudit {

double TraceInvariants::t(int k) const {
  if (k == 0) return static_cast<double>(dim);
  if (k < 0 || k > count()) {
    throw DomainError("TraceInvariants: t_" + std::to_string(k) + " not available (have up to t_" +
                      std::to_string(count()) + ")");
  }
  return values[static_cast<std::size_t>(k - 1)];
}

double CharCoefficients::min() const { return *std::min_element(values.begin(), values.end()); }

TraceInvariants trace_invariants(const HermitianMatrix& rho, int upto) {
  if (upto < 1) throw DomainError("trace_invariants: upto must be >= 1");
  TraceInvariants out;
  out.dim = rho.dim();
  out.values.reserve(static_cast<std::size_t>(upto));
  const ComplexMatrix shifted =
      rho.matrix() - (rho.trace() / static_cast<double>(out.dim)) * ComplexMatrix::Identity(out.dim, out.dim);
  ComplexMatrix power = rho.matrix();
  ComplexMatrix central = shifted;
  for (int k = 1; k <= upto; ++k) {
    if (k > 1) {
      power = power * rho.matrix();
      central = central * shifted;
    }
    const Complex tr = power.trace();
    if (std::abs(tr.imag()) > 1e-12 * std::max(1.0, std::abs(tr.real()))) {
      throw NumericalError("trace_invariants: tr(rho^" + std::to_string(k) +
                           ") has imaginary part " + std::to_string(tr.imag()));
    }
    out.values.push_back(tr.real());
    out.central.push_back(central.trace().real());
  }
  return out;
}

TraceInvariants trace_invariants(const std::vector<double>& eigenvalues, int upto) {
  if (upto < 1) throw DomainError("trace_invariants: upto must be >= 1");
  TraceInvariants out;
  out.dim = static_cast<int>(eigenvalues.size());
  double mean = 0.0;
  for (double x : eigenvalues) mean += x;
  mean /= static_cast<double>(std::max<std::size_t>(eigenvalues.size(), 1));
  std::vector<double> powers(eigenvalues);
  std::vector<double> centred(eigenvalues.size());
  for (std::size_t i = 0; i < centred.size(); ++i) centred[i] = eigenvalues[i] - mean;
  std::vector<double> cpowers(centred);
  for (int k = 1; k <= upto; ++k) {
    double sum = 0.0;
    double csum = 0.0;
    for (std::size_t i = 0; i < powers.size(); ++i) {
      if (k > 1) {
        powers[i] *= eigenvalues[i];
        cpowers[i] *= centred[i];
      }
      sum += powers[i];
      csum += cpowers[i];
    }
    out.values.push_back(sum);
    out.central.push_back(csum);
  }
  return out;
}

namespace {

void require_full(const TraceInvariants& t, const char* where) {
  if (t.dim < 1) throw InvalidDimension(std::string(where) + ": dimension must be >= 1");
  if (t.count() < t.dim) {
    throw DomainError(std::string(where) + ": need t_1..t_" + std::to_string(t.dim) + ", got " +
                      std::to_string(t.count()) + " values");
  }
}

// Newton's recursion on a raw power-sum sequence p_1..p_N of N roots.
std::vector<double> elementary_from_power_sums(const std::vector<double>& p, int N) {
  std::vector<double> e(static_cast<std::size_t>(N) + 1, 0.0);
  e[0] = 1.0;
  for (int k = 1; k <= N; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) {
      const double term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i - 1)];
      acc += (i % 2 == 1) ? term : -term;
    }
    e[static_cast<std::size_t>(k)] = acc / k;
  }
  return e;
}

void extend_power_sums(std::vector<double>& p, int N, int upto) {
  if (static_cast<int>(p.size()) >= upto) return;
  const std::vector<double> e = elementary_from_power_sums(p, N);
  for (int k = static_cast<int>(p.size()) + 1; k <= upto; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= N; ++i) {
      const double term = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i - 1)];
      acc += (i % 2 == 1) ? term : -term;
    }
    p.push_back(acc);
  }
}

// Root grouping in bezoutian_rank: allowed spread relative to the multiple-root
// perturbation estimate, and largest centre gap relative to the spread.
constexpr double kClusterScale = 0.5;
constexpr double kClusterSeparation = 10.0;

// Power sums m_0..m_count of x_i = (r_i - c) / s, with c the mean and s the
// standard deviation of the roots (s = 1 when the roots coincide).
struct Standardized {
  std::vector<double> m;
  double scale = 1.0;
  bool coincident = false;
  // Relative rounding level of the moments.
  double noise = 0.0;
};

Standardized standardized_moments(const TraceInvariants& t, int count) {
  const int N = t.dim;
  const double c = t.t(1) / N;
  const bool have_central = static_cast<int>(t.central.size()) >= N;
  const double eps = std::numeric_limits<double>::epsilon();
  Standardized out;
  double var = 0.0;
  if (have_central) {
    var = (N >= 2 ? t.central[1] : 0.0) / N;
    // The matrix entries themselves carry rounding of order eps * |c|.
    const double floor = 64.0 * eps * std::max(std::abs(c), 1e-300);
    out.coincident = var <= floor * floor;
  } else {
    var = t.t(2) / N - c * c;
    out.coincident = std::abs(var) <= 64.0 * eps * std::max(c * c, 1e-300);
  }
  out.scale = out.coincident ? 1.0 : std::sqrt(std::abs(var));
  const double s = out.scale;

  std::vector<double> p;
  if (have_central) {
    out.noise = 8.0 * N * eps * (std::abs(c) / s + 1.0);
    for (int k = 1; k <= N; ++k) p.push_back(t.central[static_cast<std::size_t>(k - 1)] / std::pow(s, k));
  } else {
    // First N shifted power sums by binomial expansion, which amplifies the
    // rounding of t_k by about (|c|/s + 1)^k.
    out.noise = 8.0 * N * eps * std::pow(std::abs(c) / s + 1.0, N);
    for (int k = 1; k <= N; ++k) {
      double acc = 0.0;
      double binom = 1.0;
      for (int j = 0; j <= k; ++j) {
        if (j > 0) binom = binom * (k - j + 1) / j;
        acc += binom * std::pow(-c, k - j) * t.t(j);
      }
      p.push_back(acc / std::pow(s, k));
    }
  }
  extend_power_sums(p, N, count);
  out.m.push_back(static_cast<double>(N));
  out.m.insert(out.m.end(), p.begin(), p.end());
  return out;
}

std::vector<double> standardized_elementary(const Standardized& st, int N) {
  return elementary_from_power_sums(std::vector<double>(st.m.begin() + 1, st.m.begin() + 1 + N), N);
}

// Roots of x^N - e1 x^(N-1) + e2 x^(N-2) - ... via companion eigenvalues. The
// unshifted QR can stall on symmetric root sets, so the variable is shifted and
// the solve retried when it does not converge.
std::vector<Complex> polynomial_roots(const std::vector<double>& e, int N) {
  for (double shift : {0.0, 0.2718281828, -0.3141592654, 0.5772156649}) {
    // Coefficients of q(y) = p(y + shift), lowest degree first.
    std::vector<double> a(static_cast<std::size_t>(N) + 1, 0.0);
    for (int k = 0; k <= N; ++k) {
      const double c = (k % 2 == 0) ? e[static_cast<std::size_t>(k)] : -e[static_cast<std::size_t>(k)];
      const int deg = N - k;
      double binom = 1.0;
      for (int j = 0; j <= deg; ++j) {
        if (j > 0) binom = binom * (deg - j + 1) / j;
        a[static_cast<std::size_t>(j)] += c * binom * std::pow(shift, deg - j);
      }
    }
    RealMatrix companion = RealMatrix::Zero(N, N);
    for (int i = 1; i < N; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < N; ++i) companion(i, N - 1) = -a[static_cast<std::size_t>(i)];
    const Eigen::EigenSolver<RealMatrix> solver(companion, false);
    if (solver.info() != Eigen::Success) continue;
    std::vector<Complex> roots;
    for (Eigen::Index i = 0; i < N; ++i) roots.push_back(solver.eigenvalues()(i) + shift);
    return roots;
  }
  throw NumericalError("polynomial root finding did not converge");
}

RealMatrix hankel(const std::vector<double>& m, int N) {
  RealMatrix h(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) h(i, j) = m[static_cast<std::size_t>(i + j)];
  return h;
}

}  // namespace

TraceInvariants newton_extend(const TraceInvariants& t, int upto) {
  require_full(t, "newton_extend");
  TraceInvariants out = t;
  extend_power_sums(out.values, t.dim, upto);
  return out;
}

CharCoefficients char_coefficients(const TraceInvariants& t) {
  require_full(t, "char_coefficients");
  const std::vector<double> e = elementary_from_power_sums(t.values, t.dim);
  CharCoefficients out;
  out.dim = t.dim;
  out.values.assign(e.begin() + 1, e.end());
  return out;
}

Bezoutian bezoutian(const TraceInvariants& t) {
  require_full(t, "bezoutian");
  const int N = t.dim;
  const TraceInvariants full = newton_extend(t, 2 * N - 2);
  std::vector<double> m{static_cast<double>(N)};
  m.insert(m.end(), full.values.begin(), full.values.end());
  return Bezoutian{N, hankel(m, N)};
}

double discriminant(const TraceInvariants& t) {
  require_full(t, "discriminant");
  const int N = t.dim;
  if (N == 1) return 1.0;
  return standardized_discriminant(t) * std::pow(standardized_moments(t, N).scale, N * (N - 1));
}

double standardized_discriminant(const TraceInvariants& t) {
  require_full(t, "standardized_discriminant");
  const int N = t.dim;
  if (N == 1) return 1.0;
  const Standardized st = standardized_moments(t, N);
  if (st.coincident) return 0.0;
  // det of the Hankel matrix equals prod_{i<j} (x_i - x_j)^2; the product over
  // roots keeps the relative accuracy that an LU determinant of the
  // ill-conditioned Hankel matrix loses.
  const std::vector<Complex> roots = polynomial_roots(standardized_elementary(st, N), N);
  Complex prod = 1.0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      const Complex d = roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
      prod *= d * d;
    }
  return prod.real();
}

bool has_real_roots(const TraceInvariants& t, double tol) {
  require_full(t, "has_real_roots");
  const int N = t.dim;
  const Standardized st = standardized_moments(t, 2 * N - 2);
  if (st.coincident) return true;
  return is_positive_semidefinite(hankel(st.m, N), tol);
}

int bezoutian_rank(const TraceInvariants& t, double rel_tol) {
  require_full(t, "bezoutian_rank");
  const int N = t.dim;
  const Standardized st = standardized_moments(t, N);
  if (st.coincident) return 1;

  // rank B = number of distinct roots. Roots of the standardized polynomial are
  // grouped when their spread is what an m-fold root perturbed at the noise
  // level would show.
  const std::vector<double> e = standardized_elementary(st, N);
  const std::vector<Complex> roots = polynomial_roots(e, N);
  const double eta = std::max(rel_tol, st.noise);

  // Size of the coefficient noise at z: coefficients e_k are bounded by
  // C(N, k) R^k with R the largest root modulus.
  double R = 1.0;
  for (const Complex& z : roots) R = std::max(R, std::abs(z));
  const auto abs_poly = [&](Complex z) { return std::pow(std::abs(z) + R, N); };
  const auto centroid = [&](const std::vector<std::size_t>& group) {
    Complex c = 0.0;
    for (std::size_t g : group) c += roots[g];
    return c / static_cast<double>(group.size());
  };
  const auto spread = [&](const std::vector<std::size_t>& group) {
    const Complex c = centroid(group);
    double r = 0.0;
    for (std::size_t g : group) r = std::max(r, std::abs(roots[g] - c));
    return r;
  };
  // Ratio of the spread of a group to what an m-fold root allows.
  const auto fit_ratio = [&](const std::vector<std::size_t>& group) {
    const Complex c = centroid(group);
    double outside = 1.0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (std::find(group.begin(), group.end(), j) != group.end()) continue;
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t g : group) nearest = std::min(nearest, std::abs(roots[g] - roots[j]));
      outside *= nearest;
    }
    const double m = static_cast<double>(group.size());
    const double allowed = kClusterScale * std::pow(eta * abs_poly(c) / std::max(outside, 1e-300), 1.0 / m);
    return spread(group) / allowed;
  };

  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < roots.size(); ++i) clusters.push_back({i});
  while (clusters.size() > 1) {
    // Closest eligible pair of clusters first.
    std::size_t bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    bool found = false;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        // Pieces of one split root sit about as far apart as they are wide.
        const double inner = std::max(spread(clusters[i]), spread(clusters[j]));
        const double gap = std::abs(centroid(clusters[i]) - centroid(clusters[j]));
        if (inner > 0.0 && gap > kClusterSeparation * inner) continue;
        std::vector<std::size_t> merged = clusters[i];
        merged.insert(merged.end(), clusters[j].begin(), clusters[j].end());
        if (fit_ratio(merged) > 1.0) continue;
        const double size = spread(merged);
        if (size < best) {
          best = size;
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    clusters[bi].insert(clusters[bi].end(), clusters[bj].begin(), clusters[bj].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  return static_cast<int>(clusters.size());
}

RealMatrix grad_matrix(const TraceInvariants& t) {
  RealMatrix g = bezoutian(t).matrix;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) *= static_cast<double>((i + 1) * (j + 1));
  return g;
}

bool is_positive_semidefinite(const RealMatrix& m, double tol) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DimensionMismatch("is_positive_semidefinite: matrix is not square");
  const double top = m.diagonal().cwiseAbs().maxCoeff();
  if (top == 0.0) return m.cwiseAbs().maxCoeff() == 0.0;

  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = m(i, i);
    if (d < -tol * top) return false;
    if (d <= tol * top) {
      // A vanishing diagonal entry forces the whole row to vanish.
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j != i && std::abs(m(i, j)) > std::sqrt(tol) * top) return false;
      }
      continue;
    }
    keep.push_back(i);
  }
  const auto k = static_cast<Eigen::Index>(keep.size());
  RealMatrix eq(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      const Eigen::Index i = keep[static_cast<std::size_t>(a)];
      const Eigen::Index j = keep[static_cast<std::size_t>(b)];
      eq(a, b) = m(i, j) / std::sqrt(m(i, i) * m(j, j));
    }
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(eq, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

CasimirValues casimirs(const BlochVector& xi, const StructureTensors& tensors) {
  if (xi.dim() != tensors.dim) {
    throw DimensionMismatch("casimirs: Bloch vector has N = " + std::to_string(xi.dim()) +
                            ", tensors have N = " + std::to_string(tensors.dim));
  }
  const RealVector& x = xi.components();
  const RealVector u = vee_product(x, x, tensors);
  const RealVector w = vee_product(u, x, tensors);
  const RealVector z = vee_product(w, x, tensors);
  const double k = xi.dim() - 1.0;
  return CasimirValues{xi.dim(), k * x.squaredNorm(), k * x.dot(u), k * u.squaredNorm(), k * z.dot(x),
                       k * w.squaredNorm()};
}

LowTraces traces_from_casimirs(const CasimirValues& c) {
  const double N = c.dim;
  return LowTraces{(1.0 + c.c2) / N, (1.0 + 3.0 * c.c2 + c.c3) / (N * N),
                   (1.0 + 6.0 * c.c2 + 4.0 * c.c3 + c.c2 * c.c2 + c.c4) / (N * N * N)};
}

LowTraces quatrit_trace_from_angles(double r, double theta, double phi) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double sqrt2 = std::sqrt(2.0);
  const double r2 = r * r;
  const double cubic = 4.0 * sqrt2 * s * s * s * std::sin(phi) - 3.0 * c - 5.0 * std::cos(3.0 * theta);
  const double quartic = 32.0 * sqrt2 * s * s * s * c * std::sin(phi) + 4.0 * std::cos(2.0 * theta) +
                         7.0 * std::cos(4.0 * theta) + 45.0;
  LowTraces out;
  out.t2 = 0.25 + 0.75 * r2;
  out.t3 = 1.0 / 16.0 + 9.0 / 16.0 * r2 + 3.0 / 64.0 * r2 * r * cubic;
  out.t4 = 1.0 / 64.0 + 9.0 / 32.0 * r2 + 3.0 / 64.0 * r2 * r * cubic + 3.0 / 512.0 * r2 * r2 * quartic;
  return out;
}

double qutrit_t3_bloch(const BlochVector& xi) {
  if (xi.dim() != 3) {
    throw DimensionMismatch("qutrit_t3_bloch: expected 8 components, got " +
                            std::to_string(xi.components().size()));
  }
  // x[1]..x[8] in the usual 1-based numbering.
  std::array<double, 9> x{};
  for (int i = 0; i < 8; ++i) x[static_cast<std::size_t>(i + 1)] = xi[i];
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const double r2 = xi.components().squaredNorm();
  const double a = x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  const double b = x[4] * x[4] + x[5] * x[5] + x[6] * x[6] + x[7] * x[7];
  return 1.0 / 9.0 + 2.0 / 3.0 * r2 + 2.0 * inv_sqrt3 * x[1] * (x[4] * x[6] + x[5] * x[7]) +
         2.0 * inv_sqrt3 * x[2] * (x[5] * x[6] - x[4] * x[7]) +
         inv_sqrt3 * x[3] * (x[4] * x[4] + x[5] * x[5] - x[6] * x[6] - x[7] * x[7]) +
         x[8] * (6.0 * a - 3.0 * b - 2.0 * x[8] * x[8]) / 9.0;
}

}  // namespace qudit
