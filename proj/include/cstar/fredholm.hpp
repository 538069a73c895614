#pragma once

#include <array>
#include <string>
#include <vector>

#include "cstar/exact_sequence.hpp"
#include "cstar/linmap.hpp"

namespace cstar {

/// Every map between finitely generated free modules over a finite-dimensional
/// algebra has closed range and finitely generated kernel and cokernel, so it is
/// A-Fredholm; reports state this instead of testing bare membership.
inline constexpr const char* kFiniteModelNote =
    "finite-dimensional model: every map is A-Fredholm with closed range; "
    "witness identities are checked instead of class membership";

struct FredholmReport {
  Submodule kernel;
  Submodule image;
  K0Class kernel_class;
  /// k0(Im F^⊥).
  K0Class coker_class;
  /// kernel_class − coker_class.
  K0Class index;
  bool is_weyl_zero_index = false;
  bool is_generalized_weyl = false;
  /// Smallest rank-decision margin behind the kernel and image.
  double margin = kInfinity;
};

FredholmReport fredholm_report(const AdjointableMap& f);

struct WeylCheck {
  bool generalized_weyl = false;
  double margin = kInfinity;
};

/// ker F ≅ Im F^⊥, decided by K₀ equality.
WeylCheck generalized_weyl_check(const AdjointableMap& f);

/// Componentwise-minimal nonnegative (N, Ñ) with N + [ker F] = Ñ + [Im F^⊥].
struct WitnessPair {
  K0Class n;
  K0Class n_tilde;
};

WitnessPair tilde_weyl_witness(const AdjointableMap& f);

/// The six-term sequence 0 → ker F → ker GF → ker G → Im F^⊥ → Im GF^⊥ → Im G^⊥ → 0
/// with orthogonal complements, built blockwise.
struct ExactSequenceReport {
  std::array<Submodule, 6> spaces;
  std::array<AdjointableMap, 5> maps;
  std::array<double, 6> residuals{};
  double leak = 0.0;
  long long alternating_dim_sum = 0;
  K0Class alternating_k0_sum;
  double max_residual() const;
};

/// F: X → Y, G: Y → Z.
ExactSequenceReport exact_sequence(const AdjointableMap& f, const AdjointableMap& g);

/// The constructed pieces of the finite-rank perturbation argument for T + F.
///
/// ker T = (ker T ∩ ker F) ⊕ M, ker(T+F) = (ker T ∩ ker F) ⊕ M′,
/// Im T = T(ker F) ⊕ N, Im(T+F) = T(ker F) ⊕ N′, and (R, R′) the witness pair
/// of T. The identity
///   [ker(T+F)] + [M] + [N] + [R] = [Im(T+F)^⊥] + [M′] + [N′] + [R′]
/// must hold in K₀.
struct ChainReport {
  Submodule m, m_prime, n, n_prime;
  K0Class r, r_prime;
  K0Class lhs, rhs;
  bool identity_holds = false;
  /// Intermediate orthogonal splittings checked along the way.
  bool image_splittings_hold = false;
  bool kernel_splittings_hold = false;
  double margin = kInfinity;
  std::string note = kFiniteModelNote;
};

/// Throws TheoremViolation if the identity fails.
ChainReport weyl_perturbation_chain(const AdjointableMap& t, const AdjointableMap& f);

/// For F: X → Y and D: Y → Z with witness pairs (N, Ñ) of F and (N′, Ñ′) of D,
/// verifies the chain
///   [ker DF] + N + N′ = [ker F] + [ker D ∩ Im F] + N + N′
///                    = [Im F^⊥] + [ker D ∩ Im F] + Ñ + N′
///                    = [Im DF^⊥] + Ñ + Ñ′.
struct ProductChainReport {
  WitnessPair f_witness;
  WitnessPair d_witness;
  Submodule kernel_d_cap_image_f;
  std::vector<K0Class> links;
  bool identity_holds = false;
  bool product_generalized_weyl = false;
  double margin = kInfinity;
};

/// Throws TheoremViolation if consecutive links disagree.
ProductChainReport product_chain(const AdjointableMap& d, const AdjointableMap& f);

struct BFredholmReport {
  /// Least n with rank F^n = rank F^{n+1}.
  int stabilization_exponent = 0;
  Submodule stable_image;
  /// F restricted to Im F^n.
  AdjointableMap restricted_map;
  FredholmReport restricted_report;
  K0Class b_index;
  /// ker F ∩ Im F^n (always zero here).
  Submodule kernel_on_stable_image;
};

BFredholmReport b_fredholm_report(const AdjointableMap& f);

struct BFredholmCommutingReport {
  BFredholmReport f, d, df;
  bool index_additive = false;
  Submodule kernel_f_on_df_image;
  Submodule kernel_d_on_df_image;
  bool intersections_consistent = false;
  double commutator = 0.0;
};

/// Throws UnmetHypothesis if F and D do not commute.
BFredholmCommutingReport b_fredholm_commuting_check(const AdjointableMap& f, const AdjointableMap& d);

/// Least n ≤ bound with image classes of F^n and F^{n+1} equal, computed by
/// pushing orthonormal bases forward one power at a time.
int image_stabilization(const AdjointableMap& f, std::vector<Submodule>* chain = nullptr);

}  // namespace cstar
