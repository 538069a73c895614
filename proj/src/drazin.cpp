#include "cstar/drazin.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <sstream>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

void require_endomorphism(const AdjointableMap& f, const char* where) {
  if (!f.is_endomorphism()) throw StructuralError(std::string(where) + ": map is not an endomorphism");
}

// Chains over A^m stabilize after at most max_b k_b steps.
int chain_bound(const AdjointableMap& f) {
  const K0Class domain = f.domain_class();
  long long m = 0;
  for (long long k : domain.ranks()) m = std::max(m, k);
  return static_cast<int>(m) + 1;
}

double ratio(double num, double den) { return den > 0.0 ? num / den : num; }

// Noise floor for identities that pass through an oblique split.
double split_tol(double condition) { return tolerances().residual_tol * std::max(1.0, condition); }

Matrix inverse_or_throw(const Matrix& m, const char* where) {
  if (m.rows() == 0) return m;
  Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible()) throw TheoremViolation(std::string(where) + ": core block is singular");
  return lu.inverse();
}

double min_singular(const std::vector<Matrix>& blocks) {
  double g = kInfinity;
  for (const auto& m : blocks) {
    if (m.rows() == 0) continue;
    const RealVector sv = singular_values(m);
    g = std::min(g, sv(sv.size() - 1));
  }
  return g;
}

}  // namespace

std::vector<Submodule> kernel_chain(const AdjointableMap& f, int depth) {
  require_endomorphism(f, "kernel_chain");
  std::vector<Submodule> chain{Submodule::zero(f.shape(), f.domain_class())};
  for (int k = 0; k < depth; ++k) chain.push_back(preimage(f, chain.back()));
  return chain;
}

std::vector<Submodule> image_chain(const AdjointableMap& f, int depth) {
  require_endomorphism(f, "image_chain");
  std::vector<Submodule> chain{Submodule::full(f.shape(), f.domain_class())};
  for (int k = 0; k < depth; ++k) chain.push_back(map_submodule(f, chain.back()));
  return chain;
}

int ascent(const AdjointableMap& f) {
  require_endomorphism(f, "ascent");
  Submodule current = Submodule::zero(f.shape(), f.domain_class());
  for (int k = 0; k <= chain_bound(f); ++k) {
    Submodule next = preimage(f, current);
    if (next.k0_class() == current.k0_class()) return k;
    current = std::move(next);
  }
  throw TheoremViolation("ascent: kernel chain did not stabilize within the dimension bound");
}

int descent(const AdjointableMap& f) {
  require_endomorphism(f, "descent");
  Submodule current = Submodule::full(f.shape(), f.domain_class());
  for (int k = 0; k <= chain_bound(f); ++k) {
    Submodule next = map_submodule(f, current);
    if (next.k0_class() == current.k0_class()) return k;
    current = std::move(next);
  }
  throw TheoremViolation("descent: image chain did not stabilize within the dimension bound");
}

BlockSplit block_split(const Submodule& first, const Submodule& second) {
  if (!(first.ambient_class() == second.ambient_class())) {
    throw StructuralError("block_split: submodules live in different modules");
  }
  if (!are_complements(first, second)) {
    throw UnmetHypothesis("block_split: the two submodules are not complements");
  }
  BlockSplit s;
  s.first = first;
  s.second = second;
  for (int b = 0; b < first.num_blocks(); ++b) {
    const Matrix& qm = first.part(b).basis();
    const Matrix& qn = second.part(b).basis();
    Matrix w(qm.rows(), qm.cols() + qn.cols());
    w << qm, qn;
    Matrix wi = inverse_or_throw(w, "block_split");
    if (w.rows() > 0) {
      s.condition = std::max(s.condition, spectral_norm(w) * spectral_norm(wi));
      if (qm.cols() > 0) s.projection_norm = std::max(s.projection_norm, spectral_norm(wi.topRows(qm.cols())));
    }
    s.frame.push_back(std::move(w));
    s.frame_inverse.push_back(std::move(wi));
  }
  return s;
}

BlockForm block_form(const AdjointableMap& f, const BlockSplit& s) {
  require_endomorphism(f, "block_form");
  if (!(f.domain_class() == s.first.ambient_class())) throw StructuralError("block_form: split does not fit the map");
  BlockForm out;
  double off = 0.0;
  for (int b = 0; b < f.num_blocks(); ++b) {
    const Matrix t = s.frame_inverse[b] * f.block(b) * s.frame[b];
    const Index r = s.first.part(b).dim();
    const Index q = t.rows() - r;
    out.b11.push_back(t.topLeftCorner(r, r));
    out.b12.push_back(t.topRightCorner(r, q));
    out.b21.push_back(t.bottomLeftCorner(q, r));
    out.b22.push_back(t.bottomRightCorner(q, q));
    if (out.b12.back().size() > 0) off = std::max(off, spectral_norm(out.b12.back()));
    if (out.b21.back().size() > 0) off = std::max(off, spectral_norm(out.b21.back()));
  }
  out.off_diagonal = ratio(off, f.norm());
  return out;
}

double DrazinResiduals::max() const { return std::max({xfx, commute, power}); }

DrazinResiduals drazin_residuals(const AdjointableMap& f, const AdjointableMap& x, int p) {
  const double nf = f.norm();
  const double nx = x.norm();
  const AdjointableMap fp = power(f, p);
  const AdjointableMap fp1 = compose(f, fp);
  DrazinResiduals r;
  r.xfx = ratio(distance(x * f * x, x), nx * nx * nf);
  r.commute = ratio(distance(f * x, x * f), nf * nx);
  // scale() rather than norm(): F^p may be pure roundoff when F is nilpotent
  r.power = ratio(distance(fp1 * x, fp), std::max(fp1.scale() * nx, fp.scale()));
  return r;
}

DrazinReport drazin_inverse(const AdjointableMap& f) {
  require_endomorphism(f, "drazin_inverse");
  DrazinReport r;
  r.index = ascent(f);
  const int d = descent(f);
  if (d != r.index) {
    std::ostringstream os;
    os << "drazin_inverse: ascent " << r.index << " differs from descent " << d;
    throw TheoremViolation(os.str());
  }
  r.decomposition = block_split(image_chain(f, r.index).back(), kernel_chain(f, r.index).back());
  const BlockForm form = block_form(f, r.decomposition);
  r.off_diagonal = form.off_diagonal;

  std::vector<Matrix> x, core, nil;
  for (int b = 0; b < f.num_blocks(); ++b) {
    const Matrix& w = r.decomposition.frame[b];
    const Matrix& wi = r.decomposition.frame_inverse[b];
    const Index k = w.rows();
    const Index rk = form.b11[b].rows();
    Matrix mid = Matrix::Zero(k, k);
    mid.topLeftCorner(rk, rk) = inverse_or_throw(form.b11[b], "drazin_inverse");
    x.push_back(w * mid * wi);
    mid.setZero();
    mid.topLeftCorner(rk, rk) = form.b11[b];
    core.push_back(w * mid * wi);
    mid.setZero();
    mid.bottomRightCorner(k - rk, k - rk) = form.b22[b];
    nil.push_back(w * mid * wi);
  }
  r.inverse = AdjointableMap(f.shape(), std::move(x));
  r.core_part = AdjointableMap(f.shape(), std::move(core));
  r.nilpotent_part = AdjointableMap(f.shape(), std::move(nil));
  r.core_gamma = min_singular(form.b11);
  r.residuals = drazin_residuals(f, r.inverse, r.index);
  // N^0 = 1 even when the nilpotent part lives on the zero module
  r.nilpotent_residual = ratio(power(r.nilpotent_part, std::max(r.index, 1)).norm(), std::max(1.0, f.norm()));
  return r;
}

DualReport drazin_dual_check(const AdjointableMap& f) {
  const DrazinReport dr = drazin_inverse(f);
  const AdjointableMap fs = adjoint(f);
  const DrazinReport ds = drazin_inverse(fs);
  DualReport r;
  r.index = dr.index;
  r.adjoint_index = ds.index;
  r.inverse_distance = distance(ds.inverse, adjoint(dr.inverse)) / std::max(1.0, dr.inverse.norm());
  const std::vector<Submodule> im = image_chain(f, r.index);
  const std::vector<Submodule> ker = kernel_chain(fs, r.index);
  for (int k = 0; k <= r.index; ++k) {
    r.orthogonality_residual = std::max(r.orthogonality_residual, submodule_distance(ker[k], orth_complement(im[k])));
  }
  const double tol = split_tol(std::max(dr.decomposition.condition, ds.decomposition.condition));
  r.holds = r.index == r.adjoint_index && r.inverse_distance <= tol &&
            r.orthogonality_residual <= tolerances().angle_tol;
  if (!r.holds) {
    std::ostringstream os;
    os << "drazin_dual_check: index " << r.index << " vs " << r.adjoint_index << ", inverse distance "
       << r.inverse_distance << ", orthogonality residual " << r.orthogonality_residual;
    throw TheoremViolation(os.str());
  }
  return r;
}

namespace {

// First (k, s) in lexicographic order with Im F^k ∩ K = Im F^{k+s} ∩ K,
// k ∈ [p, dim], s ∈ [1, dim]. Classes for k = 0..stable+1 go to `classes`.
std::optional<std::pair<int, int>> stabilization_search(const AdjointableMap& f, const Submodule& k_sub, int p,
                                                        int dim, std::vector<K0Class>& classes) {
  const int depth = chain_bound(f);
  std::vector<Submodule> cap;
  for (const auto& im : image_chain(f, depth)) cap.push_back(submodule_intersection(im, k_sub));
  auto at = [&](int j) -> const Submodule& { return cap[std::min<std::size_t>(j, cap.size() - 1)]; };
  for (const auto& c : cap) classes.push_back(c.k0_class());
  for (int k = p; k <= dim; ++k) {
    for (int s = 1; s <= dim; ++s) {
      if (same_submodule(at(k), at(k + s))) return std::make_pair(k, s);
      // decreasing chain: once the class drops, larger s cannot match
      if (!(at(k + s).k0_class() == at(k).k0_class())) break;
    }
  }
  return std::nullopt;
}

}  // namespace

CriterionReport commuting_drazin_criterion(const AdjointableMap& f, const AdjointableMap& d) {
  require_endomorphism(f, "commuting_drazin_criterion");
  CriterionReport r;
  r.commutator = commutator_residual(f, d);
  if (r.commutator > tolerances().comm_tol) {
    std::ostringstream os;
    os << "commuting_drazin_criterion: FD != DF (relative commutator " << r.commutator << ")";
    throw UnmetHypothesis(os.str());
  }
  r.p = ascent(compose(f, d));
  const int dim = std::max<int>(1, static_cast<int>(f.domain_class().complex_dim(f.shape())));
  const Submodule ker_dp = kernel(power(d, r.p));
  const AdjointableMap fs = adjoint(f);
  const Submodule ker_dsp = kernel(power(adjoint(d), r.p));
  const auto left = stabilization_search(f, ker_dp, r.p, dim, r.intersection_classes);
  const auto right = stabilization_search(fs, ker_dsp, r.p, dim, r.adjoint_classes);
  if (left && right) r.found = CriterionHit{left->first, left->second, right->first, right->second};
  r.verdict = r.found.has_value();

  const DrazinReport direct = drazin_inverse(f);
  const double tol = split_tol(direct.decomposition.condition);
  r.direct_verdict = direct.residuals.max() <= tol && direct.nilpotent_residual <= tol;
  r.note = "closedness of Im F^k holds automatically in finite dimensions, so both verdicts are true in this model";
  return r;
}

BrowderWitness browder_decomposition(const AdjointableMap& f) {
  const DrazinReport dr = drazin_inverse(f);
  const BlockForm form = block_form(f, dr.decomposition);
  BrowderWitness w;
  w.index = dr.index;
  w.m = dr.decomposition.first;
  w.n = dr.decomposition.second;
  w.f1 = AdjointableMap(f.shape(), form.b11);
  w.f4 = AdjointableMap(f.shape(), form.b22);
  w.f1_gamma = min_singular(form.b11);
  w.off_diagonal = form.off_diagonal;
  w.split_condition = dr.decomposition.condition;
  return w;
}

CommutingBrowderReport commuting_browder_check(const AdjointableMap& f, const AdjointableMap& d) {
  require_endomorphism(f, "commuting_browder_check");
  CommutingBrowderReport r;
  r.commutator = commutator_residual(f, d);
  if (r.commutator > tolerances().comm_tol) {
    std::ostringstream os;
    os << "commuting_browder_check: FD != DF (relative commutator " << r.commutator << ")";
    throw UnmetHypothesis(os.str());
  }
  const AdjointableMap df = compose(d, f);
  r.p = ascent(df);
  const AdjointableMap dfp = power(df, r.p);
  r.decomposition = block_split(image(dfp), kernel(dfp));
  const BlockForm ff = block_form(f, r.decomposition);
  const BlockForm fd = block_form(d, r.decomposition);
  r.f_off_diagonal = ff.off_diagonal;
  r.d_off_diagonal = fd.off_diagonal;
  r.f_core_gamma = min_singular(ff.b11);
  r.d_core_gamma = min_singular(fd.b11);
  const AdjointableMap lhs = compose(power(f, r.p), power(d, r.p));
  const AdjointableMap rhs = compose(power(f, r.p + 1), power(d, r.p + 1));
  r.kernel_identity_holds = same_submodule(kernel(lhs), kernel(rhs));

  const double tol = split_tol(r.decomposition.condition);
  auto invertible = [](const std::vector<Matrix>& blocks) {
    for (const auto& m : blocks) {
      if (m.rows() > 0 && kernel_image(m).decision.rank != m.rows()) return false;
    }
    return true;
  };
  std::ostringstream os;
  if (r.f_off_diagonal > tol || r.d_off_diagonal > tol) os << " decomposition does not reduce F and D;";
  if (!invertible(ff.b11) || !invertible(fd.b11)) os << " a core block is singular;";
  if (!r.kernel_identity_holds) os << " ker F^p D^p != ker F^{p+1} D^{p+1};";
  if (!os.str().empty()) throw TheoremViolation("commuting_browder_check:" + os.str());
  return r;
}

ShiftExample shift_counterexample(ShiftKind kind, int n) {
  if (n < 2) throw StructuralError("shift_counterexample: n must be at least 2");
  const AlgebraShape shape({n});
  Matrix s = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) s(i + 1, i) = 1.0;
  const AlgebraElement zero = AlgebraElement::zero(shape);
  const AlgebraElement shift(shape, {s});
  const AdjointableMap forward =
      AdjointableMap::from_entries(shape, {{AlgebraElement::scalar(shape, 2.0), zero}, {zero, shift}});

  ShiftExample ex;
  ex.kind = kind;
  ex.n = n;
  ex.f = kind == ShiftKind::RangeStrict ? forward : adjoint(forward);
  ex.p = AdjointableMap::from_entries(shape, {{AlgebraElement::identity(shape), zero}, {zero, zero}});
  ex.commutator = commutator_residual(ex.f, ex.p);

  const std::vector<Submodule> chain =
      kind == ShiftKind::RangeStrict ? image_chain(ex.f, n + 1) : kernel_chain(ex.f, n + 1);
  const Submodule ker_p = kernel(ex.p);
  const std::vector<Submodule> images = image_chain(ex.f, n + 1);
  for (int k = 0; k <= n + 1; ++k) {
    ex.chain.push_back(chain[k].k0_class()[0]);
    ex.kernel_p_chain.push_back(submodule_intersection(images[k], ker_p).k0_class()[0]);
  }
  while (ex.strict_depth + 1 < static_cast<int>(ex.chain.size()) &&
         ex.chain[ex.strict_depth + 1] != ex.chain[ex.strict_depth]) {
    ++ex.strict_depth;
  }
  const DrazinReport fp = drazin_inverse(compose(ex.f, ex.p));
  ex.fp_drazin_index = fp.index;
  ex.fp_residual = fp.residuals.max();
  std::ostringstream note;
  note << "finite truncation: the chain is strict for " << ex.strict_depth
       << " steps and then stabilizes; the stabilization depth grows with n";
  ex.note = note.str();
  return ex;
}

}  // namespace cstar
