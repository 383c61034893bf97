#include "qudit/types.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace qudit {

HermitianMatrix::HermitianMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw DimensionMismatch("HermitianMatrix: matrix is not square");
  }
  if (m_.rows() < 1) {
    throw InvalidDimension("HermitianMatrix: empty matrix");
  }
  const double err = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (!(err <= tol)) {
    throw ConsistencyError("HermitianMatrix: matrix is not Hermitian (deviation " +
                           std::to_string(err) + ")");
  }
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("HermitianMatrix: matrix is not square");
  }
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  return HermitianMatrix(std::move(h), Unchecked{});
}

int BlochVector::dim_from_length(std::size_t length) {
  const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(length) + 1.0)));
  if (n < 2 || static_cast<std::size_t>(n * n - 1) != length) {
    throw InvalidDimension("Bloch vector length " + std::to_string(length) +
                           " is not of the form N^2 - 1 with N >= 2");
  }
  return n;
}

BlochVector::BlochVector(RealVector xi)
    : dim_(dim_from_length(static_cast<std::size_t>(xi.size()))), xi_(std::move(xi)) {}

BlochVector::BlochVector(int N, std::vector<double> xi)
    : dim_(N), xi_(Eigen::Map<const RealVector>(xi.data(), static_cast<Eigen::Index>(xi.size()))) {
  if (N < 2) throw InvalidDimension("BlochVector: N must be >= 2");
  if (static_cast<int>(xi.size()) != N * N - 1) {
    throw DimensionMismatch("BlochVector: expected " + std::to_string(N * N - 1) +
                            " components for N = " + std::to_string(N) + ", got " +
                            std::to_string(xi.size()));
  }
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

bool Spectrum::in_simplex(double tol) const {
  if (values_.empty()) return false;
  return std::abs(sum() - 1.0) <= tol && values_.back() >= -tol;
}

}  // namespace qudit
