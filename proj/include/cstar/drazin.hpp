#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cstar/linmap.hpp"

namespace cstar {

/// ker F^k for k = 0..depth, each obtained as the preimage of the previous one.
std::vector<Submodule> kernel_chain(const AdjointableMap& f, int depth);
/// Im F^k for k = 0..depth, pushing orthonormal bases forward one power at a time.
std::vector<Submodule> image_chain(const AdjointableMap& f, int depth);

/// Least p with ker F^p = ker F^{p+1}.
int ascent(const AdjointableMap& f);
/// Least p with Im F^p = Im F^{p+1}.
int descent(const AdjointableMap& f);

/// Per-block coordinates for an oblique splitting ambient = M ⊕̃ N.
/// W_b = [Q_M Q_N] with orthonormal bases of the two parts.
struct BlockSplit {
  Submodule first;
  Submodule second;
  std::vector<Matrix> frame;
  std::vector<Matrix> frame_inverse;
  /// max_b ||W_b|| ||W_b^{-1}||.
  double condition = 1.0;
  /// Norm of the projection onto `first` along `second`.
  double projection_norm = 1.0;
};

/// Throws UnmetHypothesis unless the two submodules are complements.
BlockSplit block_split(const Submodule& first, const Submodule& second);

/// The 2×2 block form of an endomorphism w.r.t. a split, per algebra block.
struct BlockForm {
  std::vector<Matrix> b11, b12, b21, b22;
  /// max ||B12||, ||B21|| relative to ||F|| (0 for F = 0).
  double off_diagonal = 0.0;
};

BlockForm block_form(const AdjointableMap& f, const BlockSplit& s);

struct DrazinResiduals {
  /// ||XFX − X|| / (||X||² ||F||)
  double xfx = 0.0;
  /// ||FX − XF|| / (||F|| ||X||)
  double commute = 0.0;
  /// ||F^{p+1} X − F^p|| / max(||F^{p+1}|| ||X||, ||F^p||)
  double power = 0.0;
  double max() const;
};

DrazinResiduals drazin_residuals(const AdjointableMap& f, const AdjointableMap& x, int p);

struct DrazinReport {
  int index = 0;
  AdjointableMap inverse;
  AdjointableMap core_part;
  AdjointableMap nilpotent_part;
  /// Im F^p and ker F^p.
  BlockSplit decomposition;
  DrazinResiduals residuals;
  /// ||nilpotent_part^p|| relative to ||F||.
  double nilpotent_residual = 0.0;
  /// γ of the core block, the margin by which it is invertible.
  double core_gamma = kInfinity;
  /// Off-diagonal leakage of F in the splitting.
  double off_diagonal = 0.0;
};

DrazinReport drazin_inverse(const AdjointableMap& f);

struct DualReport {
  int index = 0;
  int adjoint_index = 0;
  /// ||D(F*) − D(F)*|| / max(1, ||D(F)||).
  double inverse_distance = 0.0;
  /// max over k ≤ p of the distance between ker F*^k and (Im F^k)^⊥.
  double orthogonality_residual = 0.0;
  bool holds = false;
};

/// Throws TheoremViolation if duality fails.
DualReport drazin_dual_check(const AdjointableMap& f);

struct CriterionHit {
  int k = 0;
  int s = 0;
  int k_prime = 0;
  int t = 0;
};

struct CriterionReport {
  /// Drazin index of FD.
  int p = 0;
  std::optional<CriterionHit> found;
  /// k0(Im F^k ∩ ker D^p) for k = 0, 1, ... until the chain is stable.
  std::vector<K0Class> intersection_classes;
  /// k0(Im F*^k ∩ ker D*^p), same range.
  std::vector<K0Class> adjoint_classes;
  bool verdict = false;
  /// F is Drazin invertible by the independent test (axioms within tolerance).
  bool direct_verdict = false;
  double commutator = 0.0;
  std::string note;
};

/// Throws UnmetHypothesis if F and D do not commute.
CriterionReport commuting_drazin_criterion(const AdjointableMap& f, const AdjointableMap& d);

struct BrowderWitness {
  int index = 0;
  Submodule m;
  Submodule n;
  AdjointableMap f1;
  AdjointableMap f4;
  double f1_gamma = kInfinity;
  double off_diagonal = 0.0;
  double split_condition = 1.0;
  /// Always true over a finite-dimensional algebra.
  bool n_finitely_generated = true;
};

BrowderWitness browder_decomposition(const AdjointableMap& f);

struct CommutingBrowderReport {
  int p = 0;
  BlockSplit decomposition;
  double f_off_diagonal = 0.0;
  double d_off_diagonal = 0.0;
  double f_core_gamma = kInfinity;
  double d_core_gamma = kInfinity;
  /// ker F^p D^p = ker F^{p+1} D^{p+1}.
  bool kernel_identity_holds = false;
  double commutator = 0.0;
};

/// Throws UnmetHypothesis if F and D do not commute and TheoremViolation if
/// the shared decomposition does not reduce both maps.
CommutingBrowderReport commuting_browder_check(const AdjointableMap& f, const AdjointableMap& d);

enum class ShiftKind { RangeStrict, KernelStrict };

struct ShiftExample {
  ShiftKind kind = ShiftKind::RangeStrict;
  int n = 0;
  /// diag(2·1, L_S) on A² over M_n, S the truncated forward shift; its adjoint
  /// for the kernel-strict kind.
  AdjointableMap f;
  /// Projection onto the first coordinate.
  AdjointableMap p;
  /// dim Im F^k (range) or dim ker F^k (kernel) in K₀ units, k = 0..n+1.
  std::vector<long long> chain;
  /// rank of Im F^k ∩ ker P, k = 0..n+1.
  std::vector<long long> kernel_p_chain;
  /// Number of strict steps before the chain stabilizes.
  int strict_depth = 0;
  int fp_drazin_index = 0;
  double fp_residual = 0.0;
  double commutator = 0.0;
  std::string note;
};

/// Throws StructuralError for n < 2.
ShiftExample shift_counterexample(ShiftKind kind, int n);

}  // namespace cstar
