// random.hpp — seeded, counter-based random generation. Streams are keyed by
// (seed, fork tags...) so independent trials draw from independent,
// schedule-free sequences and every report is bit-reproducible.

#pragma once

#include "ossa/algebra.hpp"

#include <cstdint>

namespace ossa {

/// Counter-based stream: the n-th draw is a SplitMix64 finalizer applied to
/// key + n * gamma. fork(tag) derives an independent child stream, so a suite
/// can key sub-streams by (seed, check, dims-index, trial) without sharing
/// state across threads or trials.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  RandomStream fork(std::uint64_t tag) const;

  std::uint64_t key() const { return key_; }
  std::uint64_t next_u64();

  double uniform();  // (0, 1]
  double gauss();    // standard normal, Box-Muller
  Complex cgauss();  // independent N(0,1) real and imaginary parts

 private:
  RandomStream() = default;
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

Vector random_vector(Index d, RandomStream& rng);
Vector random_pure(Index d, RandomStream& rng);
Matrix random_matrix(Index rows, Index cols, RandomStream& rng);
Matrix random_hermitian(Index d, RandomStream& rng);

/// G G^dagger / tr(G G^dagger) with G a d x rank complex Gaussian matrix.
/// PSD and unit trace are validated before returning.
Matrix random_density(Index d, Index rank, RandomStream& rng);

/// Full-rank density, redrawn until min/max eigenvalue ratio clears the floor.
Matrix random_full_rank_density(Index d, RandomStream& rng,
                                double min_eig_ratio = 1e-8, int max_tries = 64);

/// Full-rank density mixed with ridge * I/d; keeps Gram matrices of faithful
/// weights well conditioned in GNS-heavy checks.
Matrix random_density_ridged(Index d, RandomStream& rng, double ridge = 1e-3);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fixing).
Matrix random_unitary(Index d, RandomStream& rng);

enum class SubalgebraPattern {
  Diagonal,     // maximal abelian diagonal algebra
  Block,        // direct sum of k x k blocks
  FactorSplit,  // M_p (x) 1 for the smallest nontrivial split d = p * q
};

/// Unconjugated pattern algebra and its commutant (both in closed form).
MatrixAlgebra pattern_algebra(Index d, SubalgebraPattern pattern, Index block_size = 2);
MatrixAlgebra pattern_commutant(Index d, SubalgebraPattern pattern, Index block_size = 2);

/// Haar-random unitary conjugate of the pattern algebra.
MatrixAlgebra random_subalgebra(Index ambient_dim, SubalgebraPattern pattern,
                                Index block_size, RandomStream& rng);

}  // namespace ossa
