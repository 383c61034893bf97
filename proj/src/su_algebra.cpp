#include "qudit/su_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <unordered_map>

namespace qudit {
namespace {

void require_dim(int N, const char* where) {
  if (N < 2) {
    throw InvalidDimension(std::string(where) + ": N must be >= 2, got " + std::to_string(N));
  }
}

// Diagonal of H_{k-1} for block k (1-based k >= 2).
RealVector cartan_diagonal(int N, int k) {
  RealVector diag = RealVector::Zero(N);
  const double scale = std::sqrt(2.0 / (static_cast<double>(k) * (k - 1)));
  for (int i = 0; i < k - 1; ++i) diag(i) = scale;
  diag(k - 1) = -scale * (k - 1);
  return diag;
}

IndexTriple sorted(int i, int j, int k) {
  IndexTriple t{i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

BasisSet gell_mann_basis(int N) {
  require_dim(N, "gell_mann_basis");
  BasisSet basis;
  basis.dim = N;
  basis.elements.reserve(static_cast<std::size_t>(N * N - 1));
  const Complex I(0.0, 1.0);
  for (int k = 2; k <= N; ++k) {
    const int col = k - 1;
    for (int row = 0; row < col; ++row) {
      ComplexMatrix sym = ComplexMatrix::Zero(N, N);
      sym(row, col) = 1.0;
      sym(col, row) = 1.0;
      basis.elements.push_back(std::move(sym));

      ComplexMatrix anti = ComplexMatrix::Zero(N, N);
      anti(row, col) = -I;
      anti(col, row) = I;
      basis.elements.push_back(std::move(anti));
    }
    basis.cartan_indices.push_back(static_cast<int>(basis.elements.size()));
    basis.elements.push_back(cartan_diagonal(N, k).cast<Complex>().asDiagonal());
  }
  return basis;
}

double orthonormality_error(const BasisSet& basis) {
  double err = 0.0;
  const int n = basis.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      // tr(A B) = sum_{ab} A_ab B_ba
      const Complex tr = (basis.elements[i].array() * basis.elements[j].transpose().array()).sum();
      const double expected = (i == j) ? 2.0 : 0.0;
      err = std::max(err, std::abs(tr - expected));
    }
  }
  return err;
}

double StructureTensors::d_at(int i, int j, int k) const {
  auto it = d.find(sorted(i, j, k));
  return it == d.end() ? 0.0 : it->second;
}

double StructureTensors::f_at(int i, int j, int k) const {
  if (i == j || j == k || i == k) return 0.0;
  // Parity of the permutation sorting (i, j, k).
  int inversions = (i > j) + (i > k) + (j > k);
  auto it = f.find(sorted(i, j, k));
  if (it == f.end()) return 0.0;
  return (inversions % 2 == 0) ? it->second : -it->second;
}

StructureTensors structure_constants(const BasisSet& basis, double tolerance) {
  const double ortho = orthonormality_error(basis);
  if (ortho > 1e-10) {
    throw ConsistencyError("structure_constants: basis is not orthonormal (error " +
                           std::to_string(ortho) + ")");
  }
  StructureTensors out;
  out.dim = basis.dim;
  out.tolerance = tolerance;
  const int n = basis.size();
  const auto& L = basis.elements;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const ComplexMatrix ij = L[i] * L[j];
      const ComplexMatrix ji = L[j] * L[i];
      const ComplexMatrix anti = ij + ji;
      const ComplexMatrix comm = ij - ji;
      for (int k = j; k < n; ++k) {
        const ComplexMatrix lk_t = L[k].transpose();
        const double dv = 0.25 * (anti.array() * lk_t.array()).sum().real();
        if (std::abs(dv) > tolerance) out.d[{i, j, k}] = dv;
        if (i < j && j < k) {
          const Complex tr = (comm.array() * lk_t.array()).sum();
          const double fv = (Complex(0.0, -0.25) * tr).real();
          if (std::abs(fv) > tolerance) out.f[{i, j, k}] = fv;
        }
      }
    }
  }
  return out;
}

double reconstruction_error(const BasisSet& basis, const StructureTensors& tensors) {
  const int n = basis.size();
  const int N = basis.dim;
  const auto& L = basis.elements;
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ComplexMatrix rhs = ComplexMatrix::Zero(N, N);
      if (i == j) rhs.diagonal().setConstant(2.0 / N);
      for (int k = 0; k < n; ++k) {
        const Complex c(tensors.d_at(i, j, k), tensors.f_at(i, j, k));
        if (c != Complex(0.0)) rhs += c * L[k];
      }
      err = std::max(err, (L[i] * L[j] - rhs).cwiseAbs().maxCoeff());
    }
  }
  return err;
}

namespace {

template <typename T, typename Build>
std::shared_ptr<const T> cached(int N, Build build) {
  static std::mutex mu;
  static std::unordered_map<int, std::shared_ptr<const T>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(N); it != cache.end()) return it->second;
  }
  auto value = std::make_shared<const T>(build(N));
  std::lock_guard lock(mu);
  return cache.emplace(N, std::move(value)).first->second;
}

}  // namespace

std::shared_ptr<const BasisSet> shared_basis(int N) {
  require_dim(N, "shared_basis");
  return cached<BasisSet>(N, [](int n) { return gell_mann_basis(n); });
}

std::shared_ptr<const StructureTensors> shared_structure_constants(int N) {
  require_dim(N, "shared_structure_constants");
  return cached<StructureTensors>(N, [](int n) { return structure_constants(*shared_basis(n)); });
}

WeightSystem weight_vectors(int N) {
  require_dim(N, "weight_vectors");
  WeightSystem ws;
  ws.dim = N;
  ws.weights.assign(static_cast<std::size_t>(N), RealVector::Zero(N - 1));
  for (int k = 2; k <= N; ++k) {
    const RealVector diag = cartan_diagonal(N, k);
    for (int i = 0; i < N; ++i) ws.weights[static_cast<std::size_t>(i)](k - 2) = 0.5 * diag(i);
  }
  return ws;
}

RealVector vee_product(const RealVector& xi, const RealVector& eta, const StructureTensors& tensors) {
  const int N = tensors.dim;
  const Eigen::Index n = static_cast<Eigen::Index>(N) * N - 1;
  if (xi.size() != n || eta.size() != n) {
    throw DimensionMismatch("vee_product: vectors must have length " + std::to_string(n) +
                            " for N = " + std::to_string(N));
  }
  RealVector out = RealVector::Zero(n);
  // Each stored (i <= j <= k) stands for all distinct index permutations.
  for (const auto& [key, value] : tensors.d) {
    const auto [i, j, k] = key;
    std::array<IndexTriple, 6> perms{{{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}}};
    std::sort(perms.begin(), perms.end());
    const auto last = std::unique(perms.begin(), perms.end());
    for (auto p = perms.begin(); p != last; ++p) {
      out((*p)[2]) += value * xi((*p)[0]) * eta((*p)[1]);
    }
  }
  return std::sqrt(N * (N - 1) / 2.0) * out;
}

std::vector<RealVector> darboux_frame(int N) {
  require_dim(N, "darboux_frame");
  const WeightSystem ws = weight_vectors(N);
  std::vector<RealVector> frame(static_cast<std::size_t>(N - 1), RealVector::Zero(N));
  for (int alpha = 0; alpha < N - 1; ++alpha) {
    for (int i = 0; i < N; ++i) {
      frame[static_cast<std::size_t>(alpha)](i) = std::sqrt(2.0) * ws.weights[static_cast<std::size_t>(i)](alpha);
    }
  }
  return frame;
}

}  // namespace qudit
