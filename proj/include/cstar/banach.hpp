#pragma once

#include <optional>

#include "cstar/exact_sequence.hpp"
#include "cstar/subspace.hpp"

namespace cstar {

/// ambient = Im E ⊕̃ ker E for an idempotent E, not necessarily self-adjoint.
struct ObliqueDecomposition {
  Subspace range;
  Subspace kernel;
  Matrix e;
  double norm = 1.0;
  double idempotency_residual = 0.0;
  /// ||E|| above ill_posed_norm.
  bool ill_posed = false;
};

/// Throws UnmetHypothesis unless the two subspaces are complements.
ObliqueDecomposition oblique_decomposition(const Subspace& range, const Subspace& kernel);

/// A bounded operator between finite-dimensional spaces with chosen
/// complements for its kernel and image, and the generalized inverse they fix.
struct RegularOperator {
  Matrix t;
  Matrix t_prime;
  Subspace kernel;
  Subspace image;
  /// X = ker T ⊕̃ kernel_complement, Y = Im T ⊕̃ image_complement.
  Subspace kernel_complement;
  Subspace image_complement;
  /// T′T: projection onto kernel_complement along ker T.
  ObliqueDecomposition domain_split;
  /// TT′: projection onto Im T along image_complement.
  ObliqueDecomposition codomain_split;
  /// ||TT′T − T|| / ||T|| and ||T′TT′ − T′|| / ||T′||.
  double inner_residual = 0.0;
  double outer_residual = 0.0;
  /// Distance of TT′ and T′T from the two projections above.
  double projection_residual = 0.0;
  bool ill_posed = false;

  Index domain_dim() const { return t.cols(); }
  Index codomain_dim() const { return t.rows(); }
  Index kernel_dim() const { return kernel.dim(); }
  Index codim_image() const { return t.rows() - image.dim(); }
};

/// T′ inverts T from `kernel_complement` onto Im T and vanishes on
/// `image_complement`. Throws UnmetHypothesis on non-complement input.
RegularOperator make_regular(const Matrix& t, const Subspace& kernel_complement, const Subspace& image_complement);
/// The orthogonal choice; T′ is then the Moore–Penrose pseudoinverse.
RegularOperator make_regular_orthogonal(const Matrix& t);

/// dim ker T = codim Im T.
bool generalized_weyl_banach(const RegularOperator& t);

/// dim ker T + z1 = codim Im T + z2, minimal.
struct BanachWitness {
  Index z1 = 0;
  Index z2 = 0;
};

BanachWitness phi0gc_witness(const RegularOperator& t);

struct BanachPerturbationReport {
  Index rank_f = 0;
  /// rank F / min(dim X, dim Y).
  double relative_rank = 0.0;
  Subspace t_ker_f;
  Subspace n, n_prime;
  Subspace m, m_prime;
  Subspace common_kernel;
  /// Y = Im(T+F) ⊕̃ v.
  Subspace v;
  /// X = ker(T+F) ⊕̃ kernel_complement.
  Subspace kernel_complement;
  RegularOperator perturbed;
  BanachWitness witness;
  BanachWitness perturbed_witness;
  long long lhs = 0;
  long long rhs = 0;
  bool identity_holds = false;
  /// Largest ||E|| over the oblique projections used.
  double max_projection_norm = 1.0;
  bool ill_posed = false;
};

/// Runs the perturbation argument for T + F with oblique projections.
/// `ker_f_complement` is the chosen complement of ker F in X. Throws
/// TheoremViolation if the dimension identity fails.
BanachPerturbationReport banach_perturbation(const RegularOperator& t, const Matrix& f,
                                             const Subspace& ker_f_complement);
BanachPerturbationReport banach_perturbation(const RegularOperator& t, const Matrix& f);

struct BanachProductReport {
  RegularOperator product;
  bool s_weyl = false;
  bool t_weyl = false;
  bool product_weyl = false;
  /// ||A B A − A|| / ||A|| for A = S restricted to T(X) and B = T U.
  double restricted_inverse_residual = 0.0;
  /// ker S ∩ T(X) and the complement of it in T(X) fixed by TU.
  Subspace kernel_on_image;
  Subspace kernel_on_image_complement;
  bool kernel_on_image_complemented = false;
  /// index(ST) = index(S) + index(T).
  bool index_additive = false;
  BanachWitness product_witness;
  ExactSequenceData sequence;
};

/// S: Y → Z after T: X → Y. The product's generalized inverse is built with
/// orthogonal complements unless supplied. Throws TheoremViolation if S and T
/// are generalized Weyl and ST is not.
BanachProductReport banach_product(const RegularOperator& s, const RegularOperator& t,
                                   const std::optional<RegularOperator>& product = std::nullopt);

}  // namespace cstar
