#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qudit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// ── Errors ──────────────────────────────────────────────────────────────────
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidDimension : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct ConsistencyError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NumericalError : Error {
  using Error::Error;
};

inline constexpr double kHermitianTol = 1e-12;

/// Square complex matrix equal to its conjugate transpose within kHermitianTol.
/// Hosts density matrices as well as the traceless basis elements.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m, double tol = kHermitianTol);

  /// Hermitian part of `m`, skipping validation. Used after arithmetic that is
  /// Hermitian in exact arithmetic (unitary conjugation, convex mixtures).
  static HermitianMatrix symmetrized(const ComplexMatrix& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

 private:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Real coefficient vector of length N^2 - 1 in the Gell-Mann expansion
///   rho = I/N + sqrt((N-1)/(2N)) * sum_i xi_i lambda_i.
class BlochVector {
 public:
  explicit BlochVector(RealVector xi);
  BlochVector(int N, std::vector<double> xi);

  /// N such that N^2 - 1 == length, or throws InvalidDimension.
  static int dim_from_length(std::size_t length);

  int dim() const { return dim_; }
  const RealVector& components() const { return xi_; }
  double operator[](int i) const { return xi_(i); }
  double radius() const { return xi_.norm(); }

 private:
  int dim_;
  RealVector xi_;
};

/// Eigenvalues in descending order. Membership in the ordered simplex is a
/// separate predicate: non-states also have spectra.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts the values descending.
  explicit Spectrum(std::vector<double> values);

  int dim() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  double sum() const;

  /// Unit sum within `tol` and smallest entry >= -tol.
  bool in_simplex(double tol = 1e-12) const;

 private:
  std::vector<double> values_;
};

}  // namespace qudit
