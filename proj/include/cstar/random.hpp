#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cstar/linmap.hpp"

namespace cstar {

/// Seeded generator for one instance; (seed, index) fully determines the stream.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t index);
  double normal();
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);
  bool coin(double p = 0.5);
  Complex complex_normal();
  Complex unit_phase();

 private:
  std::mt19937_64 engine_;
};

Matrix random_matrix(Rng& rng, Index rows, Index cols);
/// Haar-like unitary from the QR factor of a Gaussian matrix.
Matrix random_unitary(Rng& rng, Index n);
/// U diag(s) V* with s uniform in [1, max_condition].
Matrix random_well_conditioned(Rng& rng, Index n, double max_condition = 3.0);
/// Product of Gaussian factors of inner size `rank`.
Matrix random_rank(Rng& rng, Index rows, Index cols, Index rank);

/// Jordan data for one block: an upper-triangular invertible core and
/// nilpotent Jordan blocks.
struct JordanData {
  Matrix core;
  std::vector<int> nilpotent_sizes;
  /// blockdiag(core, J_{s1}, J_{s2}, ...).
  Matrix structured() const;
  /// Largest nilpotent block size.
  int index() const;
};

/// Core eigenvalues have modulus in [0.8, 1.25]; nilpotent blocks are ≤ 4.
JordanData random_jordan(Rng& rng, Index dim);

struct RandomEndomorphism {
  AdjointableMap f;
  /// Known from the construction.
  int expected_index = 0;
};

/// F_b = S_b J_b S_b^{-1} with cond(S_b) ≤ 3 over A^m.
RandomEndomorphism random_endomorphism(Rng& rng, const AlgebraShape& shape, int m);

/// A map A^m → A^n with random per-block ranks (possibly full, possibly zero).
AdjointableMap random_map(Rng& rng, const AlgebraShape& shape, int codomain, int domain);
/// As random_map with per-block rank at most `max_rank`.
AdjointableMap random_low_rank_map(Rng& rng, const AlgebraShape& shape, int codomain, int domain, int max_rank);

struct CommutingPair {
  AdjointableMap f;
  AdjointableMap d;
};

/// f = p(B), d = q(B) for one random structured B of the given dimension over
/// the trivial algebra; p and q have degree ≤ 3 and may vanish at eigenvalues of B.
CommutingPair random_commuting_pair(Rng& rng, int dim);

/// A random subspace of C^d of the given dimension.
Subspace random_subspace(Rng& rng, Index d, Index dim);
/// A complement of `s` that is oblique: span of (s^⊥ basis + s basis · G) with ||G|| ≤ skew.
Subspace random_oblique_complement(Rng& rng, const Subspace& s, double skew);

}  // namespace cstar
