#pragma once

// Density matrices <-> Bloch vectors, positivity certificates from the
// characteristic coefficients and the trace invariants, an independent
// Jacobi eigensolver used as oracle, and seeded random-state samplers.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qudit/invariants.hpp"
#include "qudit/su_algebra.hpp"
#include "qudit/types.hpp"

namespace qudit {

/// Tolerance on S_k and on eigenvalues for accepting a matrix as a state.
inline constexpr double kPositivityTol = 1e-9;
/// Below this a trailing S_k counts as zero when reading off the rank.
inline constexpr double kRankCoefficientTol = 1e-13;

HermitianMatrix from_bloch(const BlochVector& xi);
HermitianMatrix from_bloch(const BlochVector& xi, const BasisSet& basis);

/// Inverse of from_bloch through xi_i = sqrt(N/(2(N-1))) tr(rho lambda_i).
/// Throws DomainError if |tr rho - 1| > 1e-10.
BlochVector to_bloch(const HermitianMatrix& rho);
BlochVector to_bloch(const HermitianMatrix& rho, const BasisSet& basis);

struct StateClassification {
  bool is_state = false;
  int rank = 0;
  /// "interior", "boundary-rank-k", "pure", or "exterior" for non-states.
  std::string stratum;
  /// Smallest characteristic coefficient.
  double margin = 0.0;
};

std::string stratum_label(int rank, int N);

/// S_k(xi) >= -tol for k = 1..N. The rank from the vanishing tail of S_k is
/// cross-checked against the oracle zero-eigenvalue count; the oracle wins.
StateClassification check_state_bloch(const BlochVector& xi, double tol = kPositivityTol);

/// Disc >= -tol and S_k >= -tol with t_1 = 1. Throws DomainError when
/// |t_1 - 1| > 1e-10.
StateClassification check_state_traces(const TraceInvariants& t, double tol = kPositivityTol);

struct EigenSystem {
  /// Descending.
  Spectrum values;
  /// Column i is the eigenvector of values[i].
  ComplexMatrix vectors;
  int sweeps = 0;
};

inline constexpr int kMaxJacobiSweeps = 100;

/// Cyclic complex Jacobi rotations. Throws NumericalError if the
/// off-diagonal norm has not dropped below 1e-12 after kMaxJacobiSweeps.
EigenSystem jacobi_eigensystem(const HermitianMatrix& rho);
Spectrum eig_oracle(const HermitianMatrix& rho);

enum class SamplingMode { BlochRejection, SpectrumHaar };

SamplingMode parse_sampling_mode(const std::string& name);
std::string to_string(SamplingMode mode);

/// Haar-random unitary: QR of a complex Ginibre matrix with R's diagonal
/// phases moved into Q.
ComplexMatrix haar_unitary(int N, std::mt19937_64& rng);

/// Uniform point of the probability simplex (normalized exponentials).
std::vector<double> uniform_simplex(int N, std::mt19937_64& rng);

/// Deterministic for a fixed seed. BlochRejection draws xi uniformly in the
/// unit ball and keeps it if check_state_bloch accepts; SpectrumHaar
/// conjugates diag(uniform simplex point) by a Haar unitary.
std::vector<HermitianMatrix> sample_states(int N, int count, SamplingMode mode, std::uint64_t seed);

/// Spectra drawn alongside sample_states in SpectrumHaar mode.
struct SpectrumSample {
  std::vector<double> spectrum;
  HermitianMatrix rho;
};
SpectrumSample sample_spectrum_haar(int N, std::mt19937_64& rng);

}  // namespace qudit
