#include "cstar/banach.hpp"

#include <algorithm>
#include <sstream>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

double rel(double num, double den) { return den > 0.0 ? num / den : num; }

double norm_or_zero(const Matrix& m) { return m.size() == 0 ? 0.0 : spectral_norm(m); }

Matrix pseudo_inverse_full_column(const Matrix& a) {
  if (a.cols() == 0) return Matrix::Zero(0, a.rows());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector sv = svd.singularValues();
  Matrix sinv = Matrix::Zero(sv.size(), sv.size());
  for (Index i = 0; i < sv.size(); ++i) sinv(i, i) = 1.0 / sv(i);
  return svd.matrixV() * sinv * svd.matrixU().adjoint();
}

std::string complement_failure(const char* what, const Subspace& a, const Subspace& b) {
  std::ostringstream os;
  os << what << ": dims " << a.dim() << " + " << b.dim() << " in ambient " << a.ambient_dim() << ", intersection dim "
     << subspace_intersection(a, b).dim();
  return os.str();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw TheoremViolation(message);
}

}  // namespace

ObliqueDecomposition oblique_decomposition(const Subspace& range, const Subspace& kernel) {
  if (!are_complements(range, kernel)) {
    throw UnmetHypothesis(complement_failure("oblique_decomposition: not complements", range, kernel));
  }
  const ObliqueProjector p = oblique_projector(range, kernel);
  ObliqueDecomposition d;
  d.range = range;
  d.kernel = kernel;
  d.e = p.matrix;
  d.norm = p.norm;
  d.idempotency_residual = rel(norm_or_zero(d.e * d.e - d.e), d.norm);
  d.ill_posed = d.norm > tolerances().ill_posed_norm;
  return d;
}

RegularOperator make_regular(const Matrix& t, const Subspace& kernel_complement, const Subspace& image_complement) {
  if (kernel_complement.ambient_dim() != t.cols() || image_complement.ambient_dim() != t.rows()) {
    throw StructuralError("make_regular: complements live in the wrong spaces");
  }
  RegularOperator r;
  r.t = t;
  KernelImage ki = kernel_image(t);
  r.kernel = std::move(ki.kernel);
  r.image = std::move(ki.image);
  if (!are_complements(r.kernel, kernel_complement)) {
    throw UnmetHypothesis(complement_failure("make_regular: bad complement of ker T", r.kernel, kernel_complement));
  }
  if (!are_complements(r.image, image_complement)) {
    throw UnmetHypothesis(complement_failure("make_regular: bad complement of Im T", r.image, image_complement));
  }
  r.kernel_complement = kernel_complement;
  r.image_complement = image_complement;
  r.domain_split = oblique_decomposition(kernel_complement, r.kernel);
  r.codomain_split = oblique_decomposition(r.image, image_complement);

  const Matrix& qc = kernel_complement.basis();
  r.t_prime = qc * pseudo_inverse_full_column(t * qc) * r.codomain_split.e;

  const Matrix& tp = r.t_prime;
  r.inner_residual = rel(norm_or_zero(t * tp * t - t), norm_or_zero(t));
  r.outer_residual = rel(norm_or_zero(tp * t * tp - tp), norm_or_zero(tp));
  r.projection_residual =
      std::max(norm_or_zero(t * tp - r.codomain_split.e), norm_or_zero(tp * t - r.domain_split.e));
  r.ill_posed = r.domain_split.ill_posed || r.codomain_split.ill_posed;
  return r;
}

RegularOperator make_regular_orthogonal(const Matrix& t) {
  const KernelImage ki = kernel_image(t);
  return make_regular(t, ki.kernel.complement(), ki.image.complement());
}

bool generalized_weyl_banach(const RegularOperator& t) { return t.kernel_dim() == t.codim_image(); }

BanachWitness phi0gc_witness(const RegularOperator& t) {
  const Index k = t.kernel_dim();
  const Index c = t.codim_image();
  return {std::max<Index>(0, c - k), std::max<Index>(0, k - c)};
}

BanachPerturbationReport banach_perturbation(const RegularOperator& t, const Matrix& f,
                                             const Subspace& ker_f_complement) {
  if (f.rows() != t.t.rows() || f.cols() != t.t.cols()) {
    throw StructuralError("banach_perturbation: T and F have different sizes");
  }
  BanachPerturbationReport r;
  const KernelImage fki = kernel_image(f);
  const Subspace& ker_f = fki.kernel;
  r.rank_f = fki.decision.rank;
  r.relative_rank = rel(static_cast<double>(r.rank_f), static_cast<double>(std::min(f.rows(), f.cols())));
  if (!are_complements(ker_f, ker_f_complement)) {
    throw UnmetHypothesis(complement_failure("banach_perturbation: bad complement of ker F", ker_f, ker_f_complement));
  }
  const Matrix tf = t.t + f;

  // Im T = T(ker F) ⊕̃ N and Im(T+F) = T(ker F) ⊕̃ N′, with N, N′ taken inside
  // the images of ker F°.
  r.t_ker_f = map_subspace(t.t, ker_f);
  const Subspace t_c = map_subspace(t.t, ker_f_complement);
  r.n = relative_complement(t_c, subspace_intersection(t_c, r.t_ker_f));
  const Subspace tf_c = map_subspace(tf, ker_f_complement);
  r.n_prime = relative_complement(tf_c, subspace_intersection(tf_c, r.t_ker_f));
  const KernelImage tfki = kernel_image(tf);
  require(same_subspace(subspace_sum(r.t_ker_f, r.n), t.image) && r.t_ker_f.dim() + r.n.dim() == t.image.dim(),
          "banach_perturbation: Im T is not T(ker F) ⊕̃ N");
  require(same_subspace(subspace_sum(r.t_ker_f, r.n_prime), tfki.image) &&
              r.t_ker_f.dim() + r.n_prime.dim() == tfki.image.dim(),
          "banach_perturbation: Im(T+F) is not T(ker F) ⊕̃ N′");

  // Y = T(ker F) ⊕̃ N ⊕̃ Im T°, so T(ker F)° = N ⊕̃ Im T°.
  const Subspace t_ker_f_c = subspace_sum(r.n, t.image_complement);
  const ObliqueDecomposition q = oblique_decomposition(t_ker_f_c, r.t_ker_f);
  const Subspace q_n_prime = map_subspace(q.e, r.n_prime);
  require(q_n_prime.dim() == r.n_prime.dim(), "banach_perturbation: Q is not injective on N′");
  r.v = relative_complement(t_ker_f_c, q_n_prime);
  require(are_complements(tfki.image, r.v), "banach_perturbation: Y is not Im(T+F) ⊕̃ V");

  // ker T = (ker T ∩ ker F) ⊕̃ M and ker(T+F) = (ker T ∩ ker F) ⊕̃ M′.
  const ObliqueDecomposition p = oblique_decomposition(ker_f_complement, ker_f);
  r.common_kernel = subspace_intersection(t.kernel, ker_f);
  require(same_subspace(r.common_kernel, subspace_intersection(tfki.kernel, ker_f)),
          "banach_perturbation: ker T ∩ ker F differs from ker(T+F) ∩ ker F");
  r.m = relative_complement(t.kernel, r.common_kernel);
  r.m_prime = relative_complement(tfki.kernel, r.common_kernel);
  require(map_subspace(p.e, r.m).dim() == r.m.dim() && map_subspace(p.e, r.m_prime).dim() == r.m_prime.dim(),
          "banach_perturbation: P is not injective on M or M′");

  // X = (ker T ∩ ker F) ⊕̃ (M ⊕̃ ker T°); split M′ off that complement.
  const Subspace c0 = subspace_sum(r.m, t.kernel_complement);
  const ObliqueDecomposition e0 = oblique_decomposition(c0, r.common_kernel);
  r.kernel_complement = relative_complement(c0, map_subspace(e0.e, r.m_prime));
  require(are_complements(tfki.kernel, r.kernel_complement), "banach_perturbation: no complement of ker(T+F)");

  r.perturbed = make_regular(tf, r.kernel_complement, r.v);
  r.witness = phi0gc_witness(t);
  r.perturbed_witness = phi0gc_witness(r.perturbed);
  r.lhs = static_cast<long long>(tfki.kernel.dim() + r.m.dim() + r.n.dim() + r.witness.z1);
  r.rhs = static_cast<long long>(r.v.dim() + r.m_prime.dim() + r.n_prime.dim() + r.witness.z2);
  r.identity_holds = r.lhs == r.rhs;
  r.max_projection_norm = std::max({q.norm, p.norm, e0.norm, t.domain_split.norm, t.codomain_split.norm,
                                    r.perturbed.domain_split.norm, r.perturbed.codomain_split.norm});
  r.ill_posed = r.max_projection_norm > tolerances().ill_posed_norm;
  if (!r.identity_holds) {
    std::ostringstream os;
    os << "banach_perturbation: dimension identity fails (" << r.lhs << " != " << r.rhs << ")";
    throw TheoremViolation(os.str());
  }
  return r;
}

BanachPerturbationReport banach_perturbation(const RegularOperator& t, const Matrix& f) {
  return banach_perturbation(t, f, kernel(f).complement());
}

BanachProductReport banach_product(const RegularOperator& s, const RegularOperator& t,
                                   const std::optional<RegularOperator>& product) {
  if (s.t.cols() != t.t.rows()) throw StructuralError("banach_product: S and T are not composable");
  const Matrix st = s.t * t.t;
  BanachProductReport r;
  if (product) {
    if (product->t.rows() != st.rows() || product->t.cols() != st.cols() ||
        norm_or_zero(product->t - st) > tolerances().residual_tol * std::max(1.0, norm_or_zero(st))) {
      throw UnmetHypothesis("banach_product: supplied regular operator is not ST");
    }
    r.product = *product;
  } else {
    r.product = make_regular_orthogonal(st);
  }

  // TU is a generalized inverse of S restricted to T(X), written in an
  // orthonormal basis of T(X).
  const Matrix& q = t.image.basis();
  const Matrix a = s.t * q;
  const Matrix b = q.adjoint() * t.t * r.product.t_prime;
  r.restricted_inverse_residual = rel(norm_or_zero(a * b * a - a), norm_or_zero(a));
  const Subspace ker_a = kernel(a);
  const Subspace comp_a = q.cols() == 0 ? Subspace::zero(0) : image(b * a);
  r.kernel_on_image_complemented = are_complements(ker_a, comp_a);
  r.kernel_on_image = map_subspace(q, ker_a);
  r.kernel_on_image_complement = map_subspace(q, comp_a);
  require(same_subspace(r.kernel_on_image, subspace_intersection(s.kernel, t.image)),
          "banach_product: ker S ∩ T(X) disagrees with the kernel of S on T(X)");

  r.s_weyl = generalized_weyl_banach(s);
  r.t_weyl = generalized_weyl_banach(t);
  r.product_weyl = generalized_weyl_banach(r.product);
  auto index = [](const RegularOperator& x) {
    return static_cast<long long>(x.kernel_dim()) - static_cast<long long>(x.codim_image());
  };
  r.index_additive = index(r.product) == index(s) + index(t);
  r.product_witness = phi0gc_witness(r.product);
  r.sequence = build_exact_sequence(t.t, s.t, oblique_range_complement(t.image, t.image_complement),
                                    oblique_range_complement(r.product.image, r.product.image_complement),
                                    oblique_range_complement(s.image, s.image_complement));
  if (r.s_weyl && r.t_weyl && !r.product_weyl) {
    throw TheoremViolation("banach_product: S and T are generalized Weyl but ST is not");
  }
  return r;
}

}  // namespace cstar
