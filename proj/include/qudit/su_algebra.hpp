#pragma once

// Generalized Gell-Mann basis of su(N) and the data derived from it:
// structure constants, fundamental weights, the vee product and the Darboux
// frame of the eigenvalue hyperplane.
//
// Index conventions: all C++ accessors are 0-based. Position p holds the
// matrix usually written lambda_{p+1}; JSON output is 1-based.

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "qudit/types.hpp"

namespace qudit {

struct BasisSet {
  int dim = 0;
  /// N^2 - 1 traceless Hermitian matrices with tr(l_i l_j) = 2 delta_ij.
  std::vector<ComplexMatrix> elements;
  /// Positions k^2 - 2 (0-based) for k = 2..N holding H_1..H_{N-1}.
  std::vector<int> cartan_indices;

  int size() const { return static_cast<int>(elements.size()); }
  const ComplexMatrix& cartan(int alpha) const {
    return elements[static_cast<std::size_t>(cartan_indices[static_cast<std::size_t>(alpha)])];
  }
};

/// Generalized Gell-Mann basis. For each k = 2..N the block contributes the
/// symmetric and antisymmetric pairs (i, k), i < k, followed by the diagonal
///   H_{k-1} = sqrt(2/(k(k-1))) diag(1, ..., 1, -(k-1), 0, ..., 0),
/// so su(3) comes out in the conventional lambda_1..lambda_8 order.
BasisSet gell_mann_basis(int N);

/// Largest |tr(l_i l_j) - 2 delta_ij| over all pairs.
double orthonormality_error(const BasisSet& basis);

using IndexTriple = std::array<int, 3>;

struct StructureTensors {
  int dim = 0;
  /// d_ijk keyed by i <= j <= k.
  std::map<IndexTriple, double> d;
  /// f_ijk keyed by i < j < k.
  std::map<IndexTriple, double> f;
  double tolerance = 1e-12;

  /// Totally symmetric lookup, any index order.
  double d_at(int i, int j, int k) const;
  /// Totally antisymmetric lookup, any index order.
  double f_at(int i, int j, int k) const;
};

inline constexpr double kStructureTol = 1e-12;

/// d_ijk = 1/4 tr({l_i, l_j} l_k),  f_ijk = -i/4 tr([l_i, l_j] l_k).
/// Throws ConsistencyError if the basis is not orthonormal.
StructureTensors structure_constants(const BasisSet& basis, double tolerance = kStructureTol);

/// Largest entrywise deviation of
///   l_i l_j - (2/N) delta_ij I - sum_k (d_ijk + i f_ijk) l_k
/// over all pairs.
double reconstruction_error(const BasisSet& basis, const StructureTensors& tensors);

/// Shared immutable instances, built once per N.
std::shared_ptr<const BasisSet> shared_basis(int N);
std::shared_ptr<const StructureTensors> shared_structure_constants(int N);

struct WeightSystem {
  int dim = 0;
  /// weights[i] is mu_{i+1}, a vector of length N - 1.
  std::vector<RealVector> weights;
};

/// Weights of the fundamental representation, mu_i^alpha = (H_alpha)_ii / 2.
WeightSystem weight_vectors(int N);

/// (xi v eta)_k = sqrt(N(N-1)/2) d_ijk xi_i eta_j.
RealVector vee_product(const RealVector& xi, const RealVector& eta, const StructureTensors& tensors);

/// N - 1 orthonormal vectors in R^N orthogonal to (1/N, ..., 1/N):
/// e^(alpha)_i = sqrt(2) mu_i^alpha.
std::vector<RealVector> darboux_frame(int N);

}  // namespace qudit
