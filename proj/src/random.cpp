#include "cstar/random.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>

namespace cstar {

// Distributions are built from raw engine output so streams do not depend on
// the standard library's distribution implementations.
Rng::Rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double Rng::normal() {
  double u1 = uniform(0.0, 1.0);
  while (u1 <= 0.0) u1 = uniform(0.0, 1.0);
  const double u2 = uniform(0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int Rng::integer(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

bool Rng::coin(double p) { return uniform(0.0, 1.0) < p; }

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
}

Complex Rng::unit_phase() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

Matrix random_matrix(Rng& rng, Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.complex_normal();
  }
  return m;
}

Matrix random_unitary(Rng& rng, Index n) {
  if (n == 0) return Matrix(0, 0);
  Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, n, n));
  return qr.householderQ() * Matrix::Identity(n, n);
}

Matrix random_well_conditioned(Rng& rng, Index n, double max_condition) {
  const Matrix u = random_unitary(rng, n);
  const Matrix v = random_unitary(rng, n);
  Matrix s = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) s(i, i) = rng.uniform(1.0, max_condition);
  return u * s * v.adjoint();
}

Matrix random_rank(Rng& rng, Index rows, Index cols, Index rank) {
  return random_matrix(rng, rows, rank) * random_matrix(rng, rank, cols);
}

Matrix JordanData::structured() const {
  Index dim = core.rows();
  for (int s : nilpotent_sizes) dim += s;
  Matrix j = Matrix::Zero(dim, dim);
  j.topLeftCorner(core.rows(), core.cols()) = core;
  Index at = core.rows();
  for (int s : nilpotent_sizes) {
    for (int i = 0; i + 1 < s; ++i) j(at + i, at + i + 1) = 1.0;
    at += s;
  }
  return j;
}

int JordanData::index() const {
  int p = 0;
  for (int s : nilpotent_sizes) p = std::max(p, s);
  return p;
}

JordanData random_jordan(Rng& rng, Index dim) {
  JordanData jd;
  Index nil = rng.coin(0.2) ? 0 : rng.integer(0, static_cast<int>(dim));
  const Index core = dim - nil;
  while (nil > 0) {
    const int s = rng.integer(1, static_cast<int>(std::min<Index>(4, nil)));
    jd.nilpotent_sizes.push_back(s);
    nil -= s;
  }
  jd.core = Matrix::Zero(core, core);
  for (Index i = 0; i < core; ++i) {
    jd.core(i, i) = rng.uniform(0.8, 1.25) * rng.unit_phase();
    for (Index j = i + 1; j < core; ++j) jd.core(i, j) = 0.3 * rng.complex_normal();
  }
  return jd;
}

RandomEndomorphism random_endomorphism(Rng& rng, const AlgebraShape& shape, int m) {
  RandomEndomorphism out;
  std::vector<Matrix> blocks;
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const Index k = static_cast<Index>(m) * shape.block_size(b);
    const JordanData jd = random_jordan(rng, k);
    const Matrix s = random_well_conditioned(rng, k);
    blocks.push_back(s * jd.structured() * s.inverse());
    out.expected_index = std::max(out.expected_index, jd.index());
  }
  out.f = AdjointableMap(shape, std::move(blocks));
  return out;
}

AdjointableMap random_low_rank_map(Rng& rng, const AlgebraShape& shape, int codomain, int domain, int max_rank) {
  std::vector<Matrix> blocks;
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const Index rows = static_cast<Index>(codomain) * shape.block_size(b);
    const Index cols = static_cast<Index>(domain) * shape.block_size(b);
    const int cap = static_cast<int>(std::min<Index>({rows, cols, static_cast<Index>(max_rank)}));
    blocks.push_back(random_rank(rng, rows, cols, rng.integer(0, cap)));
  }
  return AdjointableMap(shape, std::move(blocks));
}

AdjointableMap random_map(Rng& rng, const AlgebraShape& shape, int codomain, int domain) {
  int cap = 0;
  for (int n : shape.block_sizes()) cap = std::max(cap, n * std::max(codomain, domain));
  return random_low_rank_map(rng, shape, codomain, domain, cap);
}

namespace {

Matrix eval_polynomial(const Matrix& j, Complex lead, const std::vector<Complex>& roots) {
  const Index n = j.rows();
  Matrix acc = lead * Matrix::Identity(n, n);
  for (const Complex& r : roots) acc = acc * (j - r * Matrix::Identity(n, n));
  return acc;
}

std::vector<Complex> random_roots(Rng& rng, const JordanData& jd) {
  std::vector<Complex> roots;
  const int degree = rng.integer(1, 3);
  for (int i = 0; i < degree; ++i) {
    const double pick = rng.uniform(0.0, 1.0);
    if (pick < 0.35) {
      roots.emplace_back(0.0);
    } else if (pick < 0.6 && jd.core.rows() > 0) {
      const int k = rng.integer(0, static_cast<int>(jd.core.rows()) - 1);
      roots.push_back(jd.core(k, k));
    } else {
      // away from the spectrum, which sits in {0} ∪ {0.8 ≤ |λ| ≤ 1.25}
      roots.push_back(rng.uniform(1.6, 2.5) * rng.unit_phase());
    }
  }
  return roots;
}

}  // namespace

CommutingPair random_commuting_pair(Rng& rng, int dim) {
  const JordanData jd = random_jordan(rng, dim);
  const Matrix j = jd.structured();
  const Matrix s = random_well_conditioned(rng, dim);
  const Matrix si = s.inverse();
  const Matrix pf = eval_polynomial(j, rng.uniform(0.5, 2.0) * rng.unit_phase(), random_roots(rng, jd));
  const Matrix pd = eval_polynomial(j, rng.uniform(0.5, 2.0) * rng.unit_phase(), random_roots(rng, jd));
  const AlgebraShape shape = AlgebraShape::trivial();
  return {AdjointableMap(shape, {s * pf * si}), AdjointableMap(shape, {s * pd * si})};
}

Subspace random_subspace(Rng& rng, Index d, Index dim) {
  if (dim == 0) return Subspace::zero(d);
  Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, d, dim));
  return Subspace::from_orthonormal(qr.householderQ() * Matrix::Identity(d, dim));
}

Subspace random_oblique_complement(Rng& rng, const Subspace& s, double skew) {
  const Subspace perp = s.complement();
  if (perp.is_zero() || s.is_zero()) return perp;
  Matrix g = random_matrix(rng, s.dim(), perp.dim());
  g *= rng.uniform(0.0, skew) / spectral_norm(g);
  return Subspace::span(perp.basis() + s.basis() * g);
}

}  // namespace cstar
