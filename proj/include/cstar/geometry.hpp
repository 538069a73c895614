#pragma once

#include <cstdint>

#include "cstar/linmap.hpp"

namespace cstar {

/// c0(M, N) = ||P_M P_N||, cross-checked against the largest singular value
/// of Q_M* Q_N. Throws TheoremViolation if the two computations disagree.
double dixmier_angle(const Subspace& m, const Subspace& n);
double dixmier_angle(const Submodule& m, const Submodule& n);

/// δ = m(P|_N) with P the orthogonal projection onto M^⊥. +inf when N = 0.
double min_modulus_restricted(const Subspace& m, const Subspace& n);
double min_modulus_restricted(const Submodule& m, const Submodule& n);

struct GeometryReport {
  /// Both computations of the Dixmier angle cosine.
  double c0 = 0.0;
  double c0_sup = 0.0;
  double delta = kInfinity;
  /// (δ+1)/δ; +inf for δ = 0 and 1 when N is zero.
  double bound_c = 1.0;
  /// N (after reduction) is zero, so δ is vacuous.
  bool delta_degenerate = false;
  /// M ∩ N was nonzero and both were replaced by their complements of it.
  bool reduced = false;
  Index intersection_dim = 0;
  /// |c0² + δ² − 1|, 0 when degenerate.
  double identity_residual = 0.0;
  int samples = 0;
  /// Largest ||x|| / ||x + y|| seen across random samples.
  double max_sample_ratio = 0.0;
  /// The same ratio for the principal-vector pair realizing the smallest angle.
  double adversarial_ratio = 0.0;
  int violations = 0;
  bool inequality_holds = true;
};

GeometryReport closed_sum_report(const Subspace& m, const Subspace& n, std::uint64_t seed, int samples = 10000);
GeometryReport closed_sum_report(const Submodule& m, const Submodule& n, std::uint64_t seed, int samples = 10000);

/// Closed-range test for a composition DF through K = ker D ∩ Im F.
struct BouldinReport {
  Submodule k;
  /// m(P|_{Im F ⊖ K}) with P onto (ker D)^⊥.
  double margin_p = kInfinity;
  /// m(Q|_{ker D ⊖ K}) with Q onto (Im F)^⊥.
  double margin_q = kInfinity;
  bool p_degenerate = false;
  bool q_degenerate = false;
  /// Margins compared against bounded_below_tau.
  bool p_bounded = true;
  bool q_bounded = true;
  bool verdicts_agree = true;
  double gamma_df = kInfinity;
  /// δ of the reduced pair (ker D, Im F), which should match margin_q.
  double closed_sum_delta = kInfinity;
  bool bridge_agrees = true;
};

BouldinReport bouldin_criterion(const AdjointableMap& f, const AdjointableMap& d);

}  // namespace cstar
