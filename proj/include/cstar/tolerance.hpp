#pragma once

#include "cstar/types.hpp"

namespace cstar {

/// Process-wide numerical thresholds. Every rank, angle and residual decision
/// in the library reads these values.
struct ToleranceConfig {
  /// Singular values below rank_tol * sigma_max * ambient_dim count as zero.
  double rank_tol = 1e-10;
  /// Two subspaces are equal when their largest principal angle is below this.
  double angle_tol = 1e-8;
  /// Generic residual bound for algebraic identities (relative).
  double residual_tol = 1e-9;
  /// ||FD - DF|| <= comm_tol * ||F|| * ||D|| counts as commuting.
  double comm_tol = 1e-10;
  /// Finite proxy for "bounded below" in truncation families.
  double bounded_below_tau = 1e-6;
  /// Oblique projections with norm above this are flagged ill-posed.
  double ill_posed_norm = 1e6;
};

const ToleranceConfig& tolerances();
void set_tolerances(const ToleranceConfig& config);

/// Installs a configuration for the lifetime of the guard.
class ScopedTolerances {
 public:
  explicit ScopedTolerances(const ToleranceConfig& config);
  ~ScopedTolerances();
  ScopedTolerances(const ScopedTolerances&) = delete;
  ScopedTolerances& operator=(const ScopedTolerances&) = delete;

 private:
  ToleranceConfig saved_;
};

/// Outcome of a numerical rank decision.
///
/// margin is the normalized singular-value gap (sigma_r - sigma_{r+1}) / sigma_max
/// that separates kept from dropped values; +inf for the zero matrix.
struct RankDecision {
  Index rank = 0;
  double threshold = 0.0;
  double margin = kInfinity;
};

/// Decides the numerical rank of descending singular values. `scale` is an a
/// priori magnitude for the matrix (e.g. ||A|| ||B|| for a product AB); the
/// threshold uses max(sigma_max, scale) so pure roundoff is not mistaken for rank.
RankDecision decide_rank(const RealVector& singular_values, Index ambient_dim, double scale = 0.0);

}  // namespace cstar
