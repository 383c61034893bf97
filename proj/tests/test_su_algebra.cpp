#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qudit/su_algebra.hpp"

using namespace qudit;

namespace {

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) { return (a * b).trace(); }

}  // namespace

TEST_CASE("gell_mann_basis rejects N < 2") {
  CHECK_THROWS_AS(gell_mann_basis(1), InvalidDimension);
  CHECK_THROWS_AS(gell_mann_basis(0), InvalidDimension);
  CHECK_THROWS_AS(weight_vectors(1), InvalidDimension);
  CHECK_THROWS_AS(darboux_frame(-3), InvalidDimension);
}

TEST_CASE("Cartan elements match the printed diagonals") {
  const BasisSet b2 = gell_mann_basis(2);
  REQUIRE(b2.size() == 3);
  REQUIRE(b2.cartan_indices == std::vector<int>{2});
  CHECK(std::abs(b2.cartan(0)(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(b2.cartan(0)(1, 1) + 1.0) < 1e-15);

  const BasisSet b3 = gell_mann_basis(3);
  REQUIRE(b3.cartan_indices == std::vector<int>{2, 7});
  const double s = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(b3.cartan(1)(0, 0) - s) < 1e-15);
  CHECK(std::abs(b3.cartan(1)(1, 1) - s) < 1e-15);
  CHECK(std::abs(b3.cartan(1)(2, 2) + 2.0 * s) < 1e-15);

  // H_3 for su(4) = (1/sqrt6) diag(1, 1, 1, -3).
  const BasisSet b4 = gell_mann_basis(4);
  REQUIRE(b4.cartan_indices == std::vector<int>{2, 7, 14});
  CHECK(std::abs(b4.cartan(2)(3, 3) + 3.0 / std::sqrt(6.0)) < 1e-15);
}

TEST_CASE("su(3) block follows the conventional Gell-Mann numbering") {
  const BasisSet b = gell_mann_basis(3);
  const Complex i(0.0, 1.0);
  // lambda_2 = sigma_y on (1,2), lambda_5 = sigma_y on (1,3), lambda_7 on (2,3).
  CHECK(b.elements[1](0, 1) == -i);
  CHECK(b.elements[4](0, 2) == -i);
  CHECK(b.elements[6](1, 2) == -i);
  CHECK(b.elements[3](0, 2) == Complex(1.0));
  CHECK(b.elements[5](1, 2) == Complex(1.0));
}

TEST_CASE("basis is traceless, Hermitian and orthonormal for N = 2..6") {
  for (int N = 2; N <= 6; ++N) {
    CAPTURE(N);
    const BasisSet b = gell_mann_basis(N);
    REQUIRE(b.size() == N * N - 1);
    for (const auto& l : b.elements) {
      CHECK(std::abs(l.trace()) < 1e-12);
      CHECK((l - l.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    }
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < b.size(); ++j)
        CHECK(std::abs(trace_product(b.elements[i], b.elements[j]) - (i == j ? 2.0 : 0.0)) < 1e-12);
    for (int idx : b.cartan_indices) {
      const ComplexMatrix& h = b.elements[static_cast<std::size_t>(idx)];
      CHECK((h - ComplexMatrix(h.diagonal().real().cast<Complex>().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("Cartan-subalgebra d values of the su(3) and su(4) table") {
  const double s3 = 1.0 / std::sqrt(3.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  const auto t3 = structure_constants(gell_mann_basis(3));
  CHECK(std::abs(t3.d_at(2, 2, 7) - s3) < 1e-12);
  CHECK(std::abs(t3.d_at(7, 7, 7) + s3) < 1e-12);

  const auto t4 = structure_constants(gell_mann_basis(4));
  CHECK(std::abs(t4.d_at(2, 2, 7) - s3) < 1e-12);
  CHECK(std::abs(t4.d_at(2, 2, 14) - s6) < 1e-12);
  CHECK(std::abs(t4.d_at(7, 7, 7) + s3) < 1e-12);
  CHECK(std::abs(t4.d_at(7, 7, 14) - s6) < 1e-12);
  CHECK(std::abs(t4.d_at(14, 14, 14) + std::sqrt(2.0 / 3.0)) < 1e-12);
  // Permuted lookups.
  CHECK(t4.d_at(14, 2, 2) == t4.d_at(2, 2, 14));
  CHECK(t4.d_at(7, 14, 7) == t4.d_at(7, 7, 14));
}

TEST_CASE("su(2) has no d tensor and f = epsilon") {
  const auto t = structure_constants(gell_mann_basis(2));
  CHECK(t.d.empty());
  CHECK(t.f.size() == 1);
  CHECK(std::abs(t.f_at(0, 1, 2) - 1.0) < 1e-15);
  CHECK(std::abs(t.f_at(1, 0, 2) + 1.0) < 1e-15);
  CHECK(std::abs(t.f_at(2, 0, 1) - 1.0) < 1e-15);
  CHECK(t.f_at(0, 0, 2) == 0.0);
}

TEST_CASE("su(3) f values match the standard ones") {
  const auto t = structure_constants(gell_mann_basis(3));
  CHECK(std::abs(t.f_at(0, 1, 2) - 1.0) < 1e-12);
  CHECK(std::abs(t.f_at(0, 3, 6) - 0.5) < 1e-12);
  CHECK(std::abs(t.f_at(0, 4, 5) + 0.5) < 1e-12);
  CHECK(std::abs(t.f_at(3, 4, 7) - std::sqrt(3.0) / 2.0) < 1e-12);
  CHECK(std::abs(t.f_at(5, 6, 7) - std::sqrt(3.0) / 2.0) < 1e-12);
}

TEST_CASE("structure constants rebuild every product lambda_i lambda_j, N <= 5") {
  for (int N = 2; N <= 5; ++N) {
    CAPTURE(N);
    const BasisSet b = gell_mann_basis(N);
    const auto t = structure_constants(b);
    CHECK(reconstruction_error(b, t) < 1e-10);
    for (const auto& [key, value] : t.d) CHECK(std::abs(value) > 1e-2);
    for (const auto& [key, value] : t.f) CHECK(std::abs(value) > 1e-2);
  }
}

TEST_CASE("Jacobi identity on f for random quadruples") {
  for (int N : {3, 4, 5}) {
    const auto t = structure_constants(gell_mann_basis(N));
    const int n = N * N - 1;
    std::mt19937_64 rng(static_cast<std::uint64_t>(N) * 17);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const int i = pick(rng), j = pick(rng), k = pick(rng), l = pick(rng);
      double sum = 0.0;
      for (int m = 0; m < n; ++m) {
        sum += t.f_at(i, j, m) * t.f_at(m, k, l) + t.f_at(j, k, m) * t.f_at(m, i, l) +
               t.f_at(k, i, m) * t.f_at(m, j, l);
      }
      CHECK(std::abs(sum) < 1e-10);
    }
  }
}

TEST_CASE("structure_constants refuses a non-orthonormal basis") {
  BasisSet b = gell_mann_basis(3);
  b.elements[4] *= 1.5;
  CHECK_THROWS_AS(structure_constants(b), ConsistencyError);
}

TEST_CASE("fundamental weights") {
  const auto w2 = weight_vectors(2);
  CHECK(std::abs(w2.weights[0](0) - 0.5) < 1e-15);
  CHECK(std::abs(w2.weights[1](0) + 0.5) < 1e-15);

  const auto w3 = weight_vectors(3);
  CHECK(std::abs(w3.weights[0](1) - 1.0 / (2.0 * std::sqrt(3.0))) < 1e-15);
  CHECK(std::abs(w3.weights[2](0)) < 1e-15);
  CHECK(std::abs(w3.weights[2](1) + 1.0 / std::sqrt(3.0)) < 1e-15);

  const auto w4 = weight_vectors(4);
  CHECK(std::abs(w4.weights[3](2) + 3.0 / (2.0 * std::sqrt(6.0))) < 1e-15);
  CHECK(std::abs(w4.weights[0](2) - 1.0 / (2.0 * std::sqrt(6.0))) < 1e-15);

  for (int N = 2; N <= 8; ++N) {
    CAPTURE(N);
    const auto w = weight_vectors(N);
    const BasisSet b = gell_mann_basis(N);
    RealVector total = RealVector::Zero(N - 1);
    RealMatrix gram = RealMatrix::Zero(N - 1, N - 1);
    for (const auto& mu : w.weights) {
      total += mu;
      gram += mu * mu.transpose();
    }
    CHECK(total.cwiseAbs().maxCoeff() < 1e-12);
    CHECK((gram - 0.5 * RealMatrix::Identity(N - 1, N - 1)).cwiseAbs().maxCoeff() < 1e-12);
    for (int a = 0; a < N - 1; ++a)
      for (int i = 0; i < N; ++i)
        CHECK(std::abs(b.cartan(a)(i, i).real() - 2.0 * w.weights[static_cast<std::size_t>(i)](a)) < 1e-12);
  }
}

TEST_CASE("vee product") {
  SUBCASE("vanishes for su(2)") {
    const auto t = structure_constants(gell_mann_basis(2));
    const RealVector xi = RealVector::LinSpaced(3, 0.2, 0.7);
    CHECK(vee_product(xi, xi, t).norm() == 0.0);
  }
  SUBCASE("e_8 v e_8 for su(3)") {
    const auto t = structure_constants(gell_mann_basis(3));
    const RealVector e8 = RealVector::Unit(8, 7);
    const RealVector v = vee_product(e8, e8, t);
    CHECK(std::abs(v(7) + 1.0) < 1e-12);
  }
  SUBCASE("e_15 v e_15 for su(4)") {
    const auto t = structure_constants(gell_mann_basis(4));
    const RealVector e = RealVector::Unit(15, 14);
    CHECK(std::abs(vee_product(e, e, t)(14) + 2.0) < 1e-12);
  }
  SUBCASE("symmetric and bilinear, matches a dense contraction") {
    const int N = 4;
    const auto t = structure_constants(gell_mann_basis(N));
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    RealVector x(15), y(15);
    for (int i = 0; i < 15; ++i) {
      x(i) = g(rng);
      y(i) = g(rng);
    }
    const RealVector xy = vee_product(x, y, t);
    CHECK((xy - vee_product(y, x, t)).norm() < 1e-12);
    CHECK((vee_product(2.0 * x + y, y, t) - 2.0 * xy - vee_product(y, y, t)).norm() < 1e-12);
    RealVector dense = RealVector::Zero(15);
    for (int i = 0; i < 15; ++i)
      for (int j = 0; j < 15; ++j)
        for (int k = 0; k < 15; ++k) dense(k) += t.d_at(i, j, k) * x(i) * y(j);
    CHECK((xy - std::sqrt(6.0) * dense).norm() < 1e-12);
  }
  SUBCASE("dimension mismatch") {
    const auto t = structure_constants(gell_mann_basis(3));
    CHECK_THROWS_AS(vee_product(RealVector::Zero(3), RealVector::Zero(8), t), DimensionMismatch);
  }
}

TEST_CASE("Darboux frame") {
  const auto f2 = darboux_frame(2);
  CHECK(std::abs(f2[0](0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(f2[0](1) + 1.0 / std::sqrt(2.0)) < 1e-15);

  const auto f3 = darboux_frame(3);
  CHECK(std::abs(f3[1](0) - 1.0 / std::sqrt(6.0)) < 1e-15);
  CHECK(std::abs(f3[1](2) + 2.0 / std::sqrt(6.0)) < 1e-15);

  for (int N = 2; N <= 8; ++N) {
    const auto frame = darboux_frame(N);
    const RealVector d = RealVector::Constant(N, 1.0 / N);
    for (int a = 0; a < N - 1; ++a) {
      CHECK(std::abs(d.dot(frame[static_cast<std::size_t>(a)])) < 1e-12);
      for (int b = 0; b < N - 1; ++b) {
        CHECK(std::abs(frame[static_cast<std::size_t>(a)].dot(frame[static_cast<std::size_t>(b)]) - (a == b)) <
              1e-12);
      }
    }
  }
}

TEST_CASE("shared instances are cached") {
  CHECK(shared_basis(4).get() == shared_basis(4).get());
  CHECK(shared_structure_constants(3)->d.size() == structure_constants(gell_mann_basis(3)).d.size());
}
