#include "cstar/fredholm.hpp"

#include <algorithm>
#include <sstream>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

double min_margin(std::initializer_list<double> values) {
  double m = kInfinity;
  for (double v : values) m = std::min(m, v);
  return m;
}

std::string describe(const char* what, const K0Class& a, const K0Class& b) {
  std::ostringstream os;
  os << what << ": " << a << " != " << b;
  return os.str();
}

}  // namespace

FredholmReport fredholm_report(const AdjointableMap& f) {
  std::vector<Subspace> ker_parts;
  std::vector<Subspace> im_parts;
  double margin = kInfinity;
  for (const auto& m : f.blocks()) {
    KernelImage ki = kernel_image(m, f.scale());
    margin = std::min(margin, ki.decision.margin);
    ker_parts.push_back(std::move(ki.kernel));
    im_parts.push_back(std::move(ki.image));
  }
  FredholmReport r;
  r.kernel = Submodule(f.shape(), std::move(ker_parts));
  r.image = Submodule(f.shape(), std::move(im_parts));
  r.kernel_class = r.kernel.k0_class();
  r.coker_class = f.codomain_class() - r.image.k0_class();
  r.index = r.kernel_class - r.coker_class;
  r.is_weyl_zero_index = r.index.is_zero();
  r.is_generalized_weyl = r.kernel_class == r.coker_class;
  r.margin = margin;
  if (f.is_endomorphism() && !r.index.is_zero()) {
    throw TheoremViolation("fredholm_report: endomorphism with nonzero index " + r.index.to_string());
  }
  return r;
}

WeylCheck generalized_weyl_check(const AdjointableMap& f) {
  const FredholmReport r = fredholm_report(f);
  return {r.is_generalized_weyl, r.margin};
}

WitnessPair tilde_weyl_witness(const AdjointableMap& f) {
  const FredholmReport r = fredholm_report(f);
  WitnessPair w{positive_part(r.coker_class - r.kernel_class), positive_part(r.kernel_class - r.coker_class)};
  if (!(w.n + r.kernel_class == w.n_tilde + r.coker_class)) {
    throw TheoremViolation("tilde_weyl_witness: witness identity fails");
  }
  return w;
}

double ExactSequenceReport::max_residual() const {
  return *std::max_element(residuals.begin(), residuals.end());
}

ExactSequenceReport exact_sequence(const AdjointableMap& f, const AdjointableMap& g) {
  if (!(g.domain_class() == f.codomain_class()) || !(g.shape() == f.shape())) {
    throw StructuralError("exact_sequence: G ∘ F is not defined");
  }
  const AlgebraShape& shape = f.shape();
  const int nb = shape.num_blocks();
  std::array<std::vector<Subspace>, 6> space_parts;
  std::array<std::vector<Matrix>, 5> map_parts;
  ExactSequenceReport report;
  std::vector<long long> k0_alt(nb, 0);
  for (int b = 0; b < nb; ++b) {
    const Matrix& fb = f.block(b);
    const Matrix& gb = g.block(b);
    const ExactSequenceData d =
        build_exact_sequence(fb, gb, orthogonal_range_complement(image(fb, f.scale())),
                             orthogonal_range_complement(image(gb * fb, f.scale() * g.scale())),
                             orthogonal_range_complement(image(gb, g.scale())), f.scale(), g.scale());
    for (int k = 0; k < 6; ++k) {
      space_parts[k].push_back(d.spaces[k]);
      report.residuals[k] = std::max(report.residuals[k], d.residuals[k]);
    }
    for (int k = 0; k < 5; ++k) map_parts[k].push_back(d.maps[k]);
    report.leak = std::max(report.leak, d.leak);
    k0_alt[b] = d.alternating_dim_sum;
  }
  for (int k = 0; k < 6; ++k) report.spaces[k] = Submodule(shape, std::move(space_parts[k]));
  for (int k = 0; k < 5; ++k) report.maps[k] = AdjointableMap(shape, std::move(map_parts[k]));
  report.alternating_k0_sum = K0Class(k0_alt);
  report.alternating_dim_sum = report.alternating_k0_sum.complex_dim(shape);
  return report;
}

ChainReport weyl_perturbation_chain(const AdjointableMap& t, const AdjointableMap& f) {
  if (!(t.domain_class() == f.domain_class()) || !(t.codomain_class() == f.codomain_class())) {
    throw StructuralError("weyl_perturbation_chain: T and F must share domain and codomain");
  }
  const AdjointableMap tf = t + f;
  const Submodule ker_f = kernel(f);
  const Submodule ker_t = kernel(t);
  const Submodule ker_tf = kernel(tf);
  const Submodule im_t = image(t);
  const Submodule im_tf = image(tf);

  // Im T = T(ker F) ⊕ N and Im(T+F) = T(ker F) ⊕ N′ with N = Q(Im T), N′ = Q(Im(T+F)).
  const Submodule t_ker_f = map_submodule(t, ker_f);
  const AdjointableMap q = orthogonal_projection(orth_complement(t_ker_f));
  ChainReport c;
  c.n = map_submodule(q, im_t);
  c.n_prime = map_submodule(q, im_tf);

  // ker T = (ker T ∩ ker F) ⊕ M and ker(T+F) = (ker T ∩ ker F) ⊕ M′.
  const Submodule common = submodule_intersection(ker_t, ker_f);
  const Submodule common_prime = submodule_intersection(ker_tf, ker_f);
  c.m = relative_complement(ker_t, common);
  c.m_prime = relative_complement(ker_tf, common);

  const WitnessPair w = tilde_weyl_witness(t);
  c.r = w.n;
  c.r_prime = w.n_tilde;

  const Submodule t_ker_f_perp = orth_complement(t_ker_f);
  c.image_splittings_hold = same_submodule(submodule_sum(t_ker_f, c.n), im_t) &&
                            same_submodule(submodule_sum(t_ker_f, c.n_prime), im_tf) &&
                            same_submodule(submodule_sum(orth_complement(im_t), c.n), t_ker_f_perp) &&
                            same_submodule(submodule_sum(orth_complement(im_tf), c.n_prime), t_ker_f_perp);

  // P restricted to M is an isomorphism onto P(ker T), P the projection onto ker F^⊥.
  const AdjointableMap p = orthogonal_projection(orth_complement(ker_f));
  c.kernel_splittings_hold = same_submodule(common, common_prime) &&
                             same_submodule(submodule_sum(common, c.m), ker_t) &&
                             same_submodule(submodule_sum(common, c.m_prime), ker_tf) &&
                             map_submodule(p, c.m).k0_class() == c.m.k0_class() &&
                             map_submodule(p, c.m_prime).k0_class() == c.m_prime.k0_class();

  c.lhs = ker_tf.k0_class() + c.m.k0_class() + c.n.k0_class() + c.r;
  c.rhs = orth_complement(im_tf).k0_class() + c.m_prime.k0_class() + c.n_prime.k0_class() + c.r_prime;
  c.identity_holds = c.lhs == c.rhs;
  c.margin = min_margin({ker_f.margin(), ker_t.margin(), ker_tf.margin(), im_t.margin(), im_tf.margin(),
                         t_ker_f.margin(), c.n.margin(), c.n_prime.margin(), common.margin(), c.m.margin(),
                         c.m_prime.margin()});
  if (!c.identity_holds) {
    throw TheoremViolation(describe("weyl_perturbation_chain: K0 identity fails", c.lhs, c.rhs));
  }
  return c;
}

ProductChainReport product_chain(const AdjointableMap& d, const AdjointableMap& f) {
  const AdjointableMap df = compose(d, f);
  ProductChainReport r;
  r.f_witness = tilde_weyl_witness(f);
  r.d_witness = tilde_weyl_witness(d);
  const Submodule ker_f = kernel(f);
  const Submodule im_f = image(f);
  const Submodule ker_d = kernel(d);
  const Submodule ker_df = kernel(df);
  r.kernel_d_cap_image_f = submodule_intersection(ker_d, im_f);
  const K0Class k = r.kernel_d_cap_image_f.k0_class();

  // F maps ker DF ⊖ ker F isomorphically onto ker D ∩ Im F.
  const Submodule lifted = relative_complement(ker_df, ker_f);
  const Submodule pushed = map_submodule(f, lifted);
  const bool lift_ok = pushed.k0_class() == lifted.k0_class() && same_submodule(pushed, r.kernel_d_cap_image_f);

  const WitnessPair& wf = r.f_witness;
  const WitnessPair& wd = r.d_witness;
  r.links = {
      ker_df.k0_class() + wf.n + wd.n,
      ker_f.k0_class() + k + wf.n + wd.n,
      orth_complement(im_f).k0_class() + k + wf.n_tilde + wd.n,
      orth_complement(image(df)).k0_class() + wf.n_tilde + wd.n_tilde,
  };
  r.identity_holds = lift_ok;
  for (std::size_t i = 1; i < r.links.size(); ++i) r.identity_holds = r.identity_holds && r.links[i] == r.links[0];
  r.product_generalized_weyl = generalized_weyl_check(df).generalized_weyl;
  r.margin = min_margin({ker_f.margin(), im_f.margin(), ker_d.margin(), ker_df.margin(),
                         r.kernel_d_cap_image_f.margin(), lifted.margin()});
  if (!r.identity_holds) {
    std::ostringstream os;
    os << "product_chain: chain broken:";
    for (const auto& l : r.links) os << ' ' << l;
    if (!lift_ok) os << " (ker DF ⊖ ker F is not carried onto ker D ∩ Im F)";
    throw TheoremViolation(os.str());
  }
  return r;
}

int image_stabilization(const AdjointableMap& f, std::vector<Submodule>* chain) {
  if (!f.is_endomorphism()) throw StructuralError("image_stabilization: map is not an endomorphism");
  const long long bound = f.domain_class().complex_dim(f.shape()) + 1;
  Submodule current = Submodule::full(f.shape(), f.domain_class());
  if (chain) chain->assign(1, current);
  for (int k = 0; k <= bound; ++k) {
    Submodule next = map_submodule(f, current);
    if (chain) chain->push_back(next);
    if (next.k0_class() == current.k0_class()) return k;
    current = std::move(next);
  }
  throw TheoremViolation("image_stabilization: image chain did not stabilize within the dimension bound");
}

BFredholmReport b_fredholm_report(const AdjointableMap& f) {
  std::vector<Submodule> chain;
  BFredholmReport r;
  r.stabilization_exponent = image_stabilization(f, &chain);
  r.stable_image = chain[r.stabilization_exponent];
  r.restricted_map = restrict_map(f, r.stable_image, r.stable_image);
  r.restricted_report = fredholm_report(r.restricted_map);
  r.b_index = r.restricted_report.index;
  r.kernel_on_stable_image = submodule_intersection(kernel(f), r.stable_image);
  if (!r.b_index.is_zero() || !r.restricted_report.kernel.is_zero()) {
    throw TheoremViolation("b_fredholm_report: restriction to the stable image is not invertible");
  }
  return r;
}

BFredholmCommutingReport b_fredholm_commuting_check(const AdjointableMap& f, const AdjointableMap& d) {
  BFredholmCommutingReport r;
  r.commutator = commutator_residual(f, d);
  if (r.commutator > tolerances().comm_tol) {
    std::ostringstream os;
    os << "b_fredholm_commuting_check: FD != DF (relative commutator " << r.commutator << ")";
    throw UnmetHypothesis(os.str());
  }
  r.f = b_fredholm_report(f);
  r.d = b_fredholm_report(d);
  r.df = b_fredholm_report(compose(d, f));
  r.index_additive = r.df.b_index == r.d.b_index + r.f.b_index;
  r.kernel_f_on_df_image = submodule_intersection(kernel(f), r.df.stable_image);
  r.kernel_d_on_df_image = submodule_intersection(kernel(d), r.df.stable_image);
  r.intersections_consistent = r.kernel_f_on_df_image.k0_class().is_zero() &&
                               r.kernel_d_on_df_image.k0_class().is_zero();
  if (!r.index_additive) {
    throw TheoremViolation(describe("b_fredholm_commuting_check: index not additive", r.df.b_index,
                                    r.d.b_index + r.f.b_index));
  }
  return r;
}

}  // namespace cstar
