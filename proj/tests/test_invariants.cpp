#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qudit/invariants.hpp"
#include "qudit/state_space.hpp"

using namespace qudit;

namespace {

HermitianMatrix diagonal(const std::vector<double>& d) {
  RealVector v = Eigen::Map<const RealVector>(d.data(), static_cast<Eigen::Index>(d.size()));
  return HermitianMatrix(v.cast<Complex>().asDiagonal());
}

TraceInvariants traces_of(const std::vector<double>& spectrum) {
  return trace_invariants(spectrum, static_cast<int>(spectrum.size()));
}

bool close_rel(double a, double b, double rel, double abs_floor) {
  return std::abs(a - b) <= std::max(rel * std::abs(b), abs_floor);
}

}  // namespace

TEST_CASE("trace invariants of simple states") {
  const auto mixed = trace_invariants(diagonal({1.0 / 3, 1.0 / 3, 1.0 / 3}), 3);
  CHECK(std::abs(mixed.t(2) - 1.0 / 3) < 1e-15);
  CHECK(std::abs(mixed.t(3) - 1.0 / 9) < 1e-15);
  CHECK(mixed.t(0) == 3.0);

  for (int N = 2; N <= 6; ++N) {
    std::vector<double> pure(static_cast<std::size_t>(N), 0.0);
    pure[0] = 1.0;
    std::mt19937_64 rng(static_cast<std::uint64_t>(N));
    const auto u = oracle::random_unitary(N, rng);
    const auto t = trace_invariants(HermitianMatrix(oracle::conjugated_diagonal(pure, u)), 2 * N);
    for (int k = 1; k <= 2 * N; ++k) CHECK(std::abs(t.t(k) - 1.0) < 1e-12);
  }

  CHECK(std::abs(trace_invariants(diagonal({0.75, 0.25}), 2).t(2) - 0.625) < 1e-15);
  CHECK_THROWS_AS(trace_invariants(diagonal({0.5, 0.5}), 0), DomainError);
}

TEST_CASE("non-Hermitian input is rejected before reaching trace_invariants") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) * 0.5;
  m(0, 1) = 0.3;
  CHECK_THROWS_AS(HermitianMatrix{m}, ConsistencyError);
}

TEST_CASE("newton_extend") {
  TraceInvariants t{2, {1.0, 0.5}, {}};
  CHECK(std::abs(newton_extend(t, 3).t(3) - 0.25) < 1e-15);

  const std::vector<double> spec{0.5, 1.0 / 3, 1.0 / 6};
  const auto ext = newton_extend(traces_of(spec), 4);
  CHECK(std::abs(ext.t(4) - oracle::power_sum(spec, 4)) < 1e-15);

  const auto pure = newton_extend(traces_of({1.0, 0.0, 0.0, 0.0}), 5);
  CHECK(std::abs(pure.t(5) - 1.0) < 1e-15);

  // upto below the current length is a no-op.
  CHECK(newton_extend(traces_of(spec), 2).count() == 3);

  std::mt19937_64 rng(11);
  for (int N = 2; N <= 6; ++N) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto s = uniform_simplex(N, rng);
      const auto e = newton_extend(traces_of(s), 3 * N);
      for (int k = 1; k <= 3 * N; ++k) CHECK(std::abs(e.t(k) - oracle::power_sum(s, k)) < 1e-13);
    }
  }
}

TEST_CASE("char_coefficients") {
  CHECK(std::abs(char_coefficients(traces_of({0.5, 0.5})).S(2) - 0.25) < 1e-15);
  CHECK(std::abs(char_coefficients(traces_of({0.5, 1.0 / 3, 1.0 / 6})).S(3) - 1.0 / 36) < 1e-15);
  const auto pure = char_coefficients(traces_of({1.0, 0.0, 0.0, 0.0}));
  CHECK(std::abs(pure.S(1) - 1.0) < 1e-15);
  for (int k = 2; k <= 4; ++k) CHECK(std::abs(pure.S(k)) < 1e-15);

  SUBCASE("agrees with the Newton determinant and with subset sums") {
    for (int N = 2; N <= 6; ++N) {
      for (const auto& entry : oracle::hermitian_corpus(N, 2000, 100 + static_cast<std::uint64_t>(N))) {
        const auto t = trace_invariants(HermitianMatrix(entry.rho, 1e-10), N);
        const auto s = char_coefficients(t);
        const auto e = oracle::elementary_symmetric(entry.spectrum);
        for (int k = 1; k <= N; ++k) {
          CAPTURE(N);
          CAPTURE(k);
          CHECK(close_rel(s.S(k), e[static_cast<std::size_t>(k)], 1e-8, 1e-12));
          CHECK(close_rel(s.S(k), oracle::newton_determinant(t.values, k), 1e-8, 1e-12));
        }
      }
    }
  }
}

TEST_CASE("bezoutian") {
  const auto b = bezoutian(traces_of({0.5, 0.5}));
  CHECK(b.matrix(0, 0) == 2.0);
  CHECK(b.matrix(0, 1) == 1.0);
  CHECK(b.matrix(1, 0) == 1.0);
  CHECK(std::abs(b.matrix(1, 1) - 0.5) < 1e-15);
  CHECK(std::abs(b.matrix.determinant()) < 1e-15);
  CHECK(discriminant(traces_of({0.5, 0.5})) == 0.0);

  CHECK(std::abs(bezoutian(traces_of({0.75, 0.25})).matrix.determinant() - 0.25) < 1e-15);
  CHECK(std::abs(discriminant(traces_of({0.75, 0.25})) - 0.25) < 1e-15);

  CHECK(bezoutian_rank(traces_of({1.0, 0.0, 0.0})) == 2);
  CHECK(bezoutian_rank(traces_of({1.0 / 3, 1.0 / 3, 1.0 / 3})) == 1);
  CHECK(bezoutian_rank(traces_of({0.5, 1.0 / 3, 1.0 / 6})) == 3);

  const auto b5 = bezoutian(traces_of({0.4, 0.3, 0.1, 0.1, 0.1}));
  CHECK((b5.matrix - b5.matrix.transpose()).norm() == 0.0);
  CHECK(b5.matrix(0, 0) == 5.0);
}

TEST_CASE("discriminant equals the Vandermonde product") {
  CHECK(std::abs(discriminant(traces_of({0.5, 1.0 / 3, 1.0 / 6})) - 1.0 / 11664) < 1e-18);
  CHECK(std::abs(discriminant(traces_of({0.4, 0.4, 0.2}))) < 1e-15);
  CHECK(discriminant(traces_of({0.25, 0.25, 0.25, 0.25})) == 0.0);

  SUBCASE("generic random Hermitian matrices") {
    for (int N = 2; N <= 6; ++N) {
      for (const auto& entry : oracle::gue_corpus(N, 2000, 200 + static_cast<std::uint64_t>(N))) {
        const auto t = trace_invariants(HermitianMatrix(entry.rho, 1e-10), N);
        CAPTURE(N);
        CHECK(close_rel(discriminant(t), oracle::vandermonde_discriminant(entry.spectrum), 1e-8, 1e-12));
        CHECK(bezoutian_rank(t) == oracle::distinct_count(entry.spectrum, 1e-7));
      }
    }
  }
  SUBCASE("spectra with exact zeros and repeated eigenvalues") {
    // Random near-coincidences (gaps ~1e-4 at scale ~5) sit at the conditioning
    // limit of double-precision power sums, so a handful of misses is allowed.
    for (int N = 2; N <= 5; ++N) {
      int disc_miss = 0;
      int rank_miss = 0;
      for (const auto& entry : oracle::hermitian_corpus(N, 3000, 300 + static_cast<std::uint64_t>(N))) {
        const auto t = trace_invariants(HermitianMatrix(entry.rho, 1e-10), N);
        if (!close_rel(discriminant(t), oracle::vandermonde_discriminant(entry.spectrum), 1e-8, 1e-12)) ++disc_miss;
        if (bezoutian_rank(t) != oracle::distinct_count(entry.spectrum, 1e-7)) ++rank_miss;
      }
      CAPTURE(N);
      CHECK(disc_miss <= 3);
      CHECK(rank_miss <= 1);
    }
  }
  SUBCASE("bare trace tuples without central sums") {
    for (int N = 2; N <= 4; ++N) {
      for (const auto& entry : oracle::gue_corpus(N, 500, 400 + static_cast<std::uint64_t>(N))) {
        auto t = trace_invariants(HermitianMatrix(entry.rho, 1e-10), N);
        t.central.clear();
        CHECK(close_rel(discriminant(t), oracle::vandermonde_discriminant(entry.spectrum), 1e-6, 1e-10));
      }
    }
    CHECK(bezoutian_rank(TraceInvariants{3, {1.0, 1.0, 1.0}, {}}) == 2);
    CHECK(bezoutian_rank(TraceInvariants{2, {1.0, 0.5}, {}}) == 1);
  }
}

TEST_CASE("grad matrix is the Bezoutian scaled by diag(1..N)") {
  const auto g = grad_matrix(traces_of({0.5, 0.5}));
  CHECK(g(0, 0) == 2.0);
  CHECK(g(0, 1) == 2.0);
  CHECK(g(1, 1) == 2.0);
  CHECK(is_positive_semidefinite(g));
  CHECK(std::abs(grad_matrix(traces_of({0.75, 0.25})).determinant() - 1.0) < 1e-14);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.2, 0.2);
  for (int trial = 0; trial < 1000; ++trial) {
    const int N = 2 + trial % 4;
    auto t = traces_of(uniform_simplex(N, rng));
    t.central.clear();
    if (trial % 2 == 1)
      for (int k = 2; k <= N; ++k) t.values[static_cast<std::size_t>(k - 1)] += u(rng);
    CHECK(is_positive_semidefinite(grad_matrix(t)) == is_positive_semidefinite(bezoutian(t).matrix));
  }
}

TEST_CASE("is_positive_semidefinite") {
  RealMatrix m(2, 2);
  m << 1.0, 2.0, 2.0, 1.0;
  CHECK_FALSE(is_positive_semidefinite(m));
  m << 1.0, 1.0, 1.0, 1.0;
  CHECK(is_positive_semidefinite(m));
  m << 0.0, 0.0, 0.0, 3.0;
  CHECK(is_positive_semidefinite(m));
  m << 0.0, 1.0, 1.0, 3.0;
  CHECK_FALSE(is_positive_semidefinite(m));
  m << -1.0, 0.0, 0.0, 3.0;
  CHECK_FALSE(is_positive_semidefinite(m));
}

TEST_CASE("Casimirs") {
  const auto t4 = structure_constants(gell_mann_basis(4));
  SUBCASE("vanish at the maximally mixed state") {
    const auto c = casimirs(BlochVector(RealVector::Zero(15)), t4);
    CHECK(c.c2 == 0.0);
    CHECK(c.c3 == 0.0);
    CHECK(c.c4 == 0.0);
    CHECK(c.c5 == 0.0);
    CHECK(c.c6 == 0.0);
  }
  SUBCASE("cubic and quartic Casimirs of a diagonal quatrit state") {
    const double I3 = 0.21, I8 = 0.33, I15 = 0.17;
    RealVector xi = RealVector::Zero(15);
    xi(2) = I3;
    xi(7) = I8;
    xi(14) = I15;
    const auto c = casimirs(BlochVector(xi), t4);
    const double s2 = std::sqrt(2.0);
    const double a = I3 * I3 + I8 * I8;
    const double c3 = 9 * I15 * a + 9 * s2 * I8 * (I3 * I3 - I8 * I8 / 3) - 6 * I15 * I15 * I15;
    const double c4 = 9 * a * a + 36 * s2 * I8 * I15 * (I3 * I3 - I8 * I8 / 3) + 12 * std::pow(I15, 4);
    CHECK(std::abs(c.c3 - c3) < 1e-12);
    CHECK(std::abs(c.c4 - c4) < 1e-12);
  }
  SUBCASE("traces from Casimirs reproduce tr(rho^k), N = 2..6") {
    std::mt19937_64 rng(21);
    for (int N = 2; N <= 6; ++N) {
      const auto tensors = structure_constants(gell_mann_basis(N));
      for (int trial = 0; trial < (N == 4 ? 1000 : 100); ++trial) {
        const auto s = sample_spectrum_haar(N, rng);
        const BlochVector xi = to_bloch(s.rho);
        const auto c = casimirs(xi, tensors);
        const auto low = traces_from_casimirs(c);
        CHECK(std::abs(low.t2 - oracle::power_sum(s.spectrum, 2)) < 1e-9);
        CHECK(std::abs(low.t3 - oracle::power_sum(s.spectrum, 3)) < 1e-9);
        CHECK(std::abs(low.t4 - oracle::power_sum(s.spectrum, 4)) < 1e-9);
      }
    }
  }
  SUBCASE("pure quatrit state: t3 from the chain equals 1") {
    // r = 1, cos(theta) = 1/3, phi = pi/2 is the diagonal state diag(1,0,0,0).
    const auto xi = to_bloch(HermitianMatrix(ComplexMatrix(Eigen::Vector4cd(1, 0, 0, 0).asDiagonal())));
    const auto c = casimirs(xi, t4);
    CHECK(std::abs(c.c2 - 3.0) < 1e-12);
    CHECK(std::abs((1 + 3 * c.c2 + c.c3) / 16 - 1.0) < 1e-12);
    CHECK(std::abs(traces_from_casimirs(c).t4 - 1.0) < 1e-12);
  }
  SUBCASE("all five are invariant under unitary conjugation") {
    std::mt19937_64 rng(8);
    for (int N : {3, 4, 5}) {
      const auto tensors = structure_constants(gell_mann_basis(N));
      const auto s = sample_spectrum_haar(N, rng);
      const auto u = oracle::random_unitary(N, rng);
      const HermitianMatrix moved = HermitianMatrix::symmetrized(u * s.rho.matrix() * u.adjoint());
      const auto a = casimirs(to_bloch(s.rho), tensors);
      const auto b = casimirs(to_bloch(moved), tensors);
      CHECK(std::abs(a.c2 - b.c2) < 1e-11);
      CHECK(std::abs(a.c3 - b.c3) < 1e-11);
      CHECK(std::abs(a.c4 - b.c4) < 1e-11);
      CHECK(std::abs(a.c5 - b.c5) < 1e-11);
      CHECK(std::abs(a.c6 - b.c6) < 1e-11);
      CHECK(a.c2 >= 0.0);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(casimirs(BlochVector(RealVector::Zero(8)), t4), DimensionMismatch);
  }
}

TEST_CASE("quatrit traces in (r, theta, phi)") {
  const auto zero = quatrit_trace_from_angles(0.0, 0.4, 1.0);
  CHECK(std::abs(zero.t2 - 0.25) < 1e-15);
  CHECK(std::abs(zero.t3 - 1.0 / 16) < 1e-15);
  CHECK(std::abs(zero.t4 - 1.0 / 64) < 1e-15);

  const auto pure = quatrit_trace_from_angles(1.0, std::acos(1.0 / 3.0), std::numbers::pi / 2);
  CHECK(std::abs(pure.t2 - 1.0) < 1e-12);
  CHECK(std::abs(pure.t3 - 1.0) < 1e-12);
  CHECK(std::abs(pure.t4 - 1.0) < 1e-12);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double r = u(rng), theta = std::numbers::pi * u(rng), phi = 3 * std::numbers::pi * u(rng);
    // Diagonal state from the angle form of the eigenvalues, written out directly.
    const double s = std::sin(theta), c = std::cos(theta), q = 1.0 / std::sqrt(2.0);
    const std::vector<double> spec{
        0.25 - q * r * (s * std::sin((phi + 4 * std::numbers::pi) / 3) - c / (2 * std::sqrt(2.0))),
        0.25 - q * r * (s * std::sin((phi + 2 * std::numbers::pi) / 3) - c / (2 * std::sqrt(2.0))),
        0.25 - q * r * (s * std::sin(phi / 3) - c / (2 * std::sqrt(2.0))), 0.25 - 0.75 * r * c};
    const auto t = quatrit_trace_from_angles(r, theta, phi);
    CHECK(std::abs(t.t2 - oracle::power_sum(spec, 2)) < 1e-12);
    CHECK(std::abs(t.t3 - oracle::power_sum(spec, 3)) < 1e-12);
    CHECK(std::abs(t.t4 - oracle::power_sum(spec, 4)) < 1e-12);
  }
}

TEST_CASE("qutrit t3 from eight Bloch components") {
  CHECK(std::abs(qutrit_t3_bloch(BlochVector(RealVector::Zero(8))) - 1.0 / 9) < 1e-15);
  const double r = 0.6;
  CHECK(std::abs(qutrit_t3_bloch(BlochVector(RealVector(r * RealVector::Unit(8, 7)))) -
                 (1.0 / 9 + 2.0 / 3 * r * r - 2.0 / 9 * r * r * r)) < 1e-15);

  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 300; ++trial) {
    RealVector xi(8);
    for (int i = 0; i < 8; ++i) xi(i) = g(rng);
    xi *= std::uniform_real_distribution<double>(0.0, 1.0)(rng) / xi.norm();
    const BlochVector bv(xi);
    const auto spec = oracle::eigen_spectrum(from_bloch(bv).matrix());
    CHECK(std::abs(qutrit_t3_bloch(bv) - oracle::power_sum(spec, 3)) < 1e-10);
  }
  CHECK_THROWS_AS(qutrit_t3_bloch(BlochVector(RealVector::Zero(15))), DimensionMismatch);
}
