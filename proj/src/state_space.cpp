#include "qudit/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/QR>

namespace qudit {
namespace {

double embedding_scale(int N) { return std::sqrt((N - 1.0) / (2.0 * N)); }

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

}  // namespace

HermitianMatrix from_bloch(const BlochVector& xi) { return from_bloch(xi, *shared_basis(xi.dim())); }

HermitianMatrix from_bloch(const BlochVector& xi, const BasisSet& basis) {
  const int N = xi.dim();
  if (basis.dim != N) throw DimensionMismatch("from_bloch: basis dimension does not match Bloch vector");
  ComplexMatrix traceless = ComplexMatrix::Zero(N, N);
  for (int i = 0; i < basis.size(); ++i) {
    if (xi[i] != 0.0) traceless += xi[i] * basis.elements[static_cast<std::size_t>(i)];
  }
  ComplexMatrix rho = embedding_scale(N) * traceless;
  rho.diagonal().array() += 1.0 / N;
  return HermitianMatrix::symmetrized(rho);
}

BlochVector to_bloch(const HermitianMatrix& rho) { return to_bloch(rho, *shared_basis(rho.dim())); }

BlochVector to_bloch(const HermitianMatrix& rho, const BasisSet& basis) {
  const int N = rho.dim();
  if (N < 2) throw InvalidDimension("to_bloch: N must be >= 2");
  if (basis.dim != N) throw DimensionMismatch("to_bloch: basis dimension does not match matrix");
  if (std::abs(rho.trace() - 1.0) > 1e-10) {
    throw DomainError("to_bloch: trace is " + std::to_string(rho.trace()) + ", expected 1");
  }
  RealVector xi(basis.size());
  const double scale = 1.0 / (2.0 * embedding_scale(N));
  for (int i = 0; i < basis.size(); ++i) {
    const ComplexMatrix& l = basis.elements[static_cast<std::size_t>(i)];
    xi(i) = scale * (rho.matrix().array() * l.transpose().array()).sum().real();
  }
  return BlochVector(std::move(xi));
}

std::string stratum_label(int rank, int N) {
  if (rank == N) return "interior";
  if (rank == 1) return "pure";
  return "boundary-rank-" + std::to_string(rank);
}

namespace {

int rank_from_coefficients(const CharCoefficients& s) {
  int rank = s.dim;
  while (rank > 0 && std::abs(s.S(rank)) <= kRankCoefficientTol) --rank;
  return rank;
}

StateClassification classify(bool is_state, int rank, int N, double margin) {
  StateClassification c;
  c.is_state = is_state;
  c.rank = rank;
  c.margin = margin;
  c.stratum = is_state ? stratum_label(rank, N) : "exterior";
  return c;
}

}  // namespace

StateClassification check_state_bloch(const BlochVector& xi, double tol) {
  const int N = xi.dim();
  const HermitianMatrix rho = from_bloch(xi);
  const CharCoefficients s = char_coefficients(trace_invariants(rho, N));
  const bool is_state = s.min() >= -tol;

  int rank = rank_from_coefficients(s);
  const Spectrum spec = eig_oracle(rho);
  const auto oracle_rank = static_cast<int>(
      std::count_if(spec.values().begin(), spec.values().end(), [tol](double v) { return std::abs(v) > tol; }));
  if (oracle_rank != rank) rank = oracle_rank;
  return classify(is_state, rank, N, s.min());
}

StateClassification check_state_traces(const TraceInvariants& t, double tol) {
  const int N = t.dim;
  if (t.count() < N) {
    throw DomainError("check_state_traces: need t_1..t_" + std::to_string(N));
  }
  if (std::abs(t.t(1) - 1.0) > 1e-10) {
    throw DomainError("check_state_traces: t_1 = " + std::to_string(t.t(1)) + ", expected 1");
  }
  const CharCoefficients s = char_coefficients(t);
  // Disc >= 0 alone does not exclude two complex-conjugate pairs once N >= 4;
  // real-rootedness is semi-definiteness of the whole Bezoutian.
  const bool real_roots = standardized_discriminant(t) >= -tol && has_real_roots(t);
  const bool is_state = real_roots && s.min() >= -tol;
  return classify(is_state, rank_from_coefficients(s), N, s.min());
}

EigenSystem jacobi_eigensystem(const HermitianMatrix& rho) {
  const int n = rho.dim();
  ComplexMatrix a = rho.matrix();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double scale = std::max(1.0, a.norm());
  const double target = 1e-15 * scale;

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex h = a(p, q);
        const double mag = std::abs(h);
        if (mag < 1e-300) continue;
        // Phase e^{-i alpha} on column q makes the (p, q) entry real, then a
        // real rotation annihilates it.
        const Complex phase = std::conj(h) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * phase;
        const Complex uqq = c * phase;

        for (int k = 0; k < n; ++k) {  // a <- a U
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (int k = 0; k < n; ++k) {  // a <- U^H a
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (int k = 0; k < n; ++k) {  // v <- v U
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }
  const double off = off_diagonal_norm(a);
  if (off > 1e-12 * scale) {
    throw NumericalError("jacobi_eigensystem: no convergence after " + std::to_string(sweep) +
                         " sweeps (off-diagonal norm " + std::to_string(off) + ")");
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });
  std::vector<double> values;
  ComplexMatrix vectors(n, n);
  for (int k = 0; k < n; ++k) {
    values.push_back(a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real());
    vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return EigenSystem{Spectrum(std::move(values)), std::move(vectors), sweep};
}

Spectrum eig_oracle(const HermitianMatrix& rho) { return jacobi_eigensystem(rho).values; }

SamplingMode parse_sampling_mode(const std::string& name) {
  if (name == "bloch-rejection") return SamplingMode::BlochRejection;
  if (name == "spectrum-haar") return SamplingMode::SpectrumHaar;
  throw DomainError("unknown sampling mode '" + name + "' (expected bloch-rejection or spectrum-haar)");
}

std::string to_string(SamplingMode mode) {
  return mode == SamplingMode::BlochRejection ? "bloch-rejection" : "spectrum-haar";
}

ComplexMatrix haar_unitary(int N, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) g(i, j) = Complex(gauss(rng), gauss(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < N; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0);
  }
  return q;
}

std::vector<double> uniform_simplex(int N, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(static_cast<std::size_t>(N));
  for (auto& x : p) x = expo(rng);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= total;
  return p;
}

SpectrumSample sample_spectrum_haar(int N, std::mt19937_64& rng) {
  std::vector<double> spectrum = uniform_simplex(N, rng);
  const ComplexMatrix u = haar_unitary(N, rng);
  RealVector diag = Eigen::Map<const RealVector>(spectrum.data(), N);
  const ComplexMatrix rho = u * diag.cast<Complex>().asDiagonal() * u.adjoint();
  return SpectrumSample{std::move(spectrum), HermitianMatrix::symmetrized(rho)};
}

std::vector<HermitianMatrix> sample_states(int N, int count, SamplingMode mode, std::uint64_t seed) {
  if (N < 2) throw InvalidDimension("sample_states: N must be >= 2");
  if (count < 1) throw DomainError("sample_states: count must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<HermitianMatrix> out;
  out.reserve(static_cast<std::size_t>(count));

  if (mode == SamplingMode::SpectrumHaar) {
    for (int i = 0; i < count; ++i) out.push_back(sample_spectrum_haar(N, rng).rho);
    return out;
  }

  const int n = N * N - 1;
  const auto basis = shared_basis(N);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  constexpr long kMaxAttempts = 10'000'000;
  for (int i = 0; i < count; ++i) {
    long attempts = 0;
    while (true) {
      if (++attempts > kMaxAttempts) {
        throw NumericalError("sample_states: bloch-rejection acceptance too low for N = " + std::to_string(N));
      }
      RealVector xi(n);
      for (int k = 0; k < n; ++k) xi(k) = gauss(rng);
      xi *= std::pow(unif(rng), 1.0 / n) / xi.norm();
      const BlochVector bv(std::move(xi));
      const HermitianMatrix rho = from_bloch(bv, *basis);
      if (char_coefficients(trace_invariants(rho, N)).min() >= 0.0) {
        out.push_back(rho);
        break;
      }
    }
  }
  return out;
}

}  // namespace qudit
