#include "cstar/probes.hpp"

#include <cmath>
#include <sstream>

#include "cstar/errors.hpp"
#include "cstar/geometry.hpp"

namespace cstar {

AdjointableMap multiplier_family(int n) {
  if (n < 1) throw StructuralError("multiplier_family: n must be positive");
  const AlgebraShape shape(std::vector<int>(n, 1));
  std::vector<Matrix> blocks;
  for (int j = 1; j <= n; ++j) blocks.push_back(Matrix::Constant(1, 1, static_cast<double>(j) / (n + 1)));
  return AdjointableMap(shape, std::move(blocks));
}

AdjointableMap left_multiplier_family(const Matrix& s) {
  if (s.rows() != s.cols() || s.rows() == 0) throw StructuralError("left_multiplier_family: S must be square");
  const AlgebraShape shape({static_cast<int>(s.rows())});
  const AdjointableMap f = AdjointableMap::from_entries(shape, {{AlgebraElement(shape, {s})}});
  const double gf = reduced_minimum_modulus(f);
  const RealVector sv = singular_values(s);
  const RankDecision d = decide_rank(sv, s.rows());
  const double gs = d.rank == 0 ? kInfinity : sv(d.rank - 1);
  if (std::abs(gf - gs) > tolerances().residual_tol * std::max(1.0, gs)) {
    std::ostringstream os;
    os << "left_multiplier_family: γ(F) = " << gf << " but γ(S) = " << gs;
    throw TheoremViolation(os.str());
  }
  return f;
}

Matrix decaying_shift(int n, double weight) {
  Matrix s = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) s(i + 1, i) = 1.0;
  for (int i = 0; i < n; ++i) s(i, i) = weight / (i + 1);
  return s;
}

AdjointableMap nonclosed_square_family(int n) {
  if (n < 1) throw StructuralError("nonclosed_square_family: n must be positive");
  const int d = 2 * n;
  Matrix f = Matrix::Zero(d, d);
  for (int j = 1; j <= n; ++j) {
    const int even = 2 * (j - 1);
    const double w = 1.0 / j;
    const double norm = std::sqrt(1.0 + w * w);
    // u_j = (e_{2j+1} − e_{2j}/j)/|·| spans N^⊥ in this pair; F = Σ e_{2j} u_j*
    f(even, even) = -w / norm;
    f(even, even + 1) = 1.0 / norm;
  }
  const AlgebraShape shape({d});
  return AdjointableMap::from_entries(shape, {{AlgebraElement(shape, {f})}});
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"multiplier", "left-multiplier", "nonclosed-square"};
  return names;
}

namespace {

AdjointableMap build_family(const std::string& family, int n) {
  if (family == "multiplier") return multiplier_family(n);
  if (family == "left-multiplier") return left_multiplier_family(decaying_shift(n, 1.0));
  if (family == "nonclosed-square") return nonclosed_square_family(n);
  throw StructuralError("unknown family '" + family + "'");
}

}  // namespace

FamilyDiagnostic family_diagnostic(const std::string& family, const std::vector<int>& sizes) {
  if (sizes.empty()) throw StructuralError("family_diagnostic: no sizes given");
  FamilyDiagnostic out;
  out.family = family;
  out.sizes = sizes;
  const double tau = tolerances().bounded_below_tau;
  for (int n : sizes) {
    const AdjointableMap f = build_family(family, n);
    FamilyRow row;
    row.n = n;
    row.gamma_f = reduced_minimum_modulus(f);
    row.gamma_f2 = reduced_minimum_modulus(compose(f, f));
    const GeometryReport g = closed_sum_report(image(f), kernel(f), 0, 0);
    row.c0 = g.c0;
    row.delta = g.delta;
    const BouldinReport b = bouldin_criterion(f, f);
    row.margin_p = b.margin_p;
    row.margin_q = b.margin_q;
    row.closed_sum_verdict = g.delta > tau;
    row.gamma_f2_verdict = row.gamma_f2 > tau;
    row.bridge_agrees = row.closed_sum_verdict == row.gamma_f2_verdict;
    if (family == "multiplier") out.gamma_exact = out.gamma_exact && row.gamma_f == 1.0 / (n + 1);
    out.gamma_f_floor = std::min(out.gamma_f_floor, row.gamma_f);
    out.rows.push_back(row);
  }
  if (family != "multiplier") out.gamma_exact = false;

  out.gamma_f2_strictly_decreasing = out.rows.size() > 1;
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    if (!(out.rows[i].gamma_f2 < out.rows[i - 1].gamma_f2)) out.gamma_f2_strictly_decreasing = false;
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& r : out.rows) {
    if (!std::isfinite(r.gamma_f2) || r.gamma_f2 <= 0.0) continue;
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.gamma_f2);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  const double den = count * sxx - sx * sx;
  if (count >= 2 && den > 0.0) out.gamma_f2_exponent = (count * sxy - sx * sy) / den;
  return out;
}

}  // namespace cstar
