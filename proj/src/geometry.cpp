#include "cstar/geometry.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

double largest_singular(const Matrix& m) { return m.size() == 0 ? 0.0 : spectral_norm(m); }

// V_b ⊗ C^{n_b} has the same principal angles as V_b, so the blocks are
// stacked without amplification.
Subspace stacked(const Submodule& s) {
  Index rows = 0, cols = 0;
  for (const auto& p : s.parts()) {
    rows += p.ambient_dim();
    cols += p.dim();
  }
  Matrix basis = Matrix::Zero(rows, cols);
  Index r = 0, c = 0;
  for (const auto& p : s.parts()) {
    basis.block(r, c, p.ambient_dim(), p.dim()) = p.basis();
    r += p.ambient_dim();
    c += p.dim();
  }
  return Subspace::from_orthonormal(std::move(basis), s.margin());
}

Vector gaussian(std::mt19937_64& rng, Index n) {
  std::normal_distribution<double> g;
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

}  // namespace

double dixmier_angle(const Subspace& m, const Subspace& n) {
  if (m.is_zero() || n.is_zero()) return 0.0;
  const double by_norm = largest_singular(m.projector() * n.projector());
  const double by_sup = largest_singular(m.basis().adjoint() * n.basis());
  if (std::abs(by_norm - by_sup) > tolerances().angle_tol) {
    std::ostringstream os;
    os << "dixmier_angle: operator-norm and supremum computations differ (" << by_norm << " vs " << by_sup << ")";
    throw TheoremViolation(os.str());
  }
  return by_norm;
}

double dixmier_angle(const Submodule& m, const Submodule& n) {
  return dixmier_angle(stacked(m), stacked(n));
}

double min_modulus_restricted(const Subspace& m, const Subspace& n) {
  if (n.is_zero()) return kInfinity;
  const Matrix& qn = n.basis();
  const Matrix rest = qn - m.basis() * (m.basis().adjoint() * qn);
  const RealVector sv = singular_values(rest);
  const double delta = sv.size() < qn.cols() ? 0.0 : sv(qn.cols() - 1);
  const bool meets = !subspace_intersection(m, n).is_zero();
  const double rank_tol = tolerances().rank_tol;
  if ((meets && delta > std::sqrt(rank_tol)) || (!meets && delta < rank_tol)) {
    std::ostringstream os;
    os << "min_modulus_restricted: δ = " << delta << " inconsistent with the intersection being "
       << (meets ? "nonzero" : "zero");
    throw TheoremViolation(os.str());
  }
  return delta;
}

double min_modulus_restricted(const Submodule& m, const Submodule& n) {
  return min_modulus_restricted(stacked(m), stacked(n));
}

GeometryReport closed_sum_report(const Subspace& m_in, const Subspace& n_in, std::uint64_t seed, int samples) {
  GeometryReport r;
  const Subspace common = subspace_intersection(m_in, n_in);
  r.intersection_dim = common.dim();
  r.reduced = !common.is_zero();
  const Subspace m = r.reduced ? relative_complement(m_in, common) : m_in;
  const Subspace n = r.reduced ? relative_complement(n_in, common) : n_in;

  r.delta = min_modulus_restricted(m, n);
  r.delta_degenerate = n.is_zero();
  r.c0 = dixmier_angle(m, n);
  r.c0_sup = m.is_zero() || n.is_zero() ? 0.0 : largest_singular(m.basis().adjoint() * n.basis());
  if (r.delta_degenerate) {
    r.bound_c = 1.0;
  } else if (r.delta == 0.0) {
    r.bound_c = kInfinity;
  } else {
    r.bound_c = (r.delta + 1.0) / r.delta;
    r.identity_residual = std::abs(r.c0 * r.c0 + r.delta * r.delta - 1.0);
  }

  const double slack = tolerances().angle_tol * r.bound_c;
  auto check = [&](const Vector& x, const Vector& y) -> double {
    const double s = (x + y).norm();
    if (s == 0.0) return 0.0;
    const double ratio = x.norm() / s;
    if (ratio > r.bound_c + slack) ++r.violations;
    return ratio;
  };

  if (!m.is_zero() && !n.is_zero()) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
      const Vector x = m.basis() * gaussian(rng, m.dim());
      const Vector y = n.basis() * gaussian(rng, n.dim());
      r.max_sample_ratio = std::max(r.max_sample_ratio, check(x, y));
      ++r.samples;
    }
    // the pair of principal vectors at the smallest angle gives the worst ratio
    Eigen::JacobiSVD<Matrix> svd(m.basis().adjoint() * n.basis(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector u = m.basis() * svd.matrixU().col(0);
    const Vector v = n.basis() * svd.matrixV().col(0);
    const Vector y = -(v.dot(u)) * v;
    r.adversarial_ratio = check(u, y);
    ++r.samples;
  }
  r.inequality_holds = r.violations == 0;
  return r;
}

GeometryReport closed_sum_report(const Submodule& m, const Submodule& n, std::uint64_t seed, int samples) {
  GeometryReport r = closed_sum_report(stacked(m), stacked(n), seed, samples);
  // report the intersection in complex dimensions of the module
  r.intersection_dim = submodule_intersection(m, n).complex_dim();
  return r;
}

BouldinReport bouldin_criterion(const AdjointableMap& f, const AdjointableMap& d) {
  if (!(d.domain_class() == f.codomain_class()) || !(d.shape() == f.shape())) {
    throw StructuralError("bouldin_criterion: D ∘ F is not defined");
  }
  BouldinReport r;
  const Submodule im_f = image(f);
  const Submodule ker_d = kernel(d);
  r.k = submodule_intersection(ker_d, im_f);
  const Submodule im_rest = relative_complement(im_f, r.k);
  const Submodule ker_rest = relative_complement(ker_d, r.k);
  r.p_degenerate = im_rest.is_zero();
  r.q_degenerate = ker_rest.is_zero();
  r.margin_p = min_modulus_restricted(ker_d, im_rest);
  r.margin_q = min_modulus_restricted(im_f, ker_rest);
  const double tau = tolerances().bounded_below_tau;
  r.p_bounded = r.margin_p > tau;
  r.q_bounded = r.margin_q > tau;
  r.verdicts_agree = r.p_bounded == r.q_bounded;
  r.gamma_df = reduced_minimum_modulus(compose(d, f));
  r.closed_sum_delta = min_modulus_restricted(im_rest, ker_rest);
  r.bridge_agrees = (r.closed_sum_delta > tau) == r.q_bounded;
  return r;
}

}  // namespace cstar
