#pragma once

#include <array>

#include "cstar/subspace.hpp"

namespace cstar {

/// A chosen complement C of a range R together with the projection onto C
/// along R. Quotients Y / R are realized through C.
struct RangeComplement {
  Subspace complement;
  Matrix projector;
};

RangeComplement orthogonal_range_complement(const Subspace& range);
/// Throws UnmetHypothesis unless `complement` is an algebraic complement of `range`.
RangeComplement oblique_range_complement(const Subspace& range, const Subspace& complement);

/// The six-term sequence
///   0 → ker F → ker GF → ker G → Im F° → Im GF° → Im G° → 0
/// for F: X → Y and G: Y → Z over plain complex spaces.
///
/// Connecting maps are written in the orthonormal bases of the six spaces:
/// inclusion, restriction of F, projection onto Im F° along Im F, G followed
/// by projection onto Im GF°, and projection onto Im G°.
struct ExactSequenceData {
  std::array<Subspace, 6> spaces;
  std::array<Matrix, 5> maps;
  /// Per node: sin of the largest principal angle between the image of the
  /// incoming map and the kernel of the outgoing one; 1 on a dimension mismatch.
  std::array<double, 6> residuals{};
  /// How far each connecting map leaves its target space (should be ~0).
  double leak = 0.0;
  long long alternating_dim_sum = 0;
};

/// f_scale and g_scale floor the magnitudes used for rank decisions (see decide_rank).
ExactSequenceData build_exact_sequence(const Matrix& f, const Matrix& g, const RangeComplement& f_complement,
                                       const RangeComplement& gf_complement, const RangeComplement& g_complement,
                                       double f_scale = 0.0, double g_scale = 0.0);

}  // namespace cstar
