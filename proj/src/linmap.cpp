#include "cstar/linmap.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "cstar/errors.hpp"

namespace cstar {

struct AdjointableMap::Cache {
  std::once_flag once;
  Matrix realization;
  std::once_flag norm_once;
  double norm = 0.0;
};

AdjointableMap::AdjointableMap() : cache_(std::make_shared<Cache>()) {}

AdjointableMap::AdjointableMap(AlgebraShape shape, std::vector<Matrix> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)), cache_(std::make_shared<Cache>()) {
  if (static_cast<int>(blocks_.size()) != shape_.num_blocks()) {
    throw StructuralError("AdjointableMap: one matrix per block is required");
  }
}

AdjointableMap AdjointableMap::from_entries(const AlgebraShape& shape,
                                            const std::vector<std::vector<AlgebraElement>>& entries) {
  const int n = static_cast<int>(entries.size());
  const int m = n == 0 ? 0 : static_cast<int>(entries.front().size());
  std::vector<Matrix> blocks;
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const int nb = shape.block_size(b);
    Matrix fb(static_cast<Index>(n) * nb, static_cast<Index>(m) * nb);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(entries[i].size()) != m) {
        throw StructuralError("from_entries: ragged entry matrix");
      }
      for (int j = 0; j < m; ++j) {
        if (!(entries[i][j].shape() == shape)) throw StructuralError("from_entries: entry has wrong shape");
        fb.block(static_cast<Index>(i) * nb, static_cast<Index>(j) * nb, nb, nb) = entries[i][j].block(b);
      }
    }
    blocks.push_back(std::move(fb));
  }
  return AdjointableMap(shape, std::move(blocks));
}

AdjointableMap AdjointableMap::identity(const AlgebraShape& shape, int m) {
  return identity_on(shape, free_module_class(shape, m));
}

AdjointableMap AdjointableMap::identity_on(const AlgebraShape& shape, const K0Class& module) {
  std::vector<Matrix> blocks;
  for (int b = 0; b < shape.num_blocks(); ++b) blocks.push_back(Matrix::Identity(module[b], module[b]));
  return AdjointableMap(shape, std::move(blocks));
}

AdjointableMap AdjointableMap::zero(const AlgebraShape& shape, int codomain, int domain) {
  return zero_between(shape, free_module_class(shape, codomain), free_module_class(shape, domain));
}

AdjointableMap AdjointableMap::zero_between(const AlgebraShape& shape, const K0Class& codomain,
                                            const K0Class& domain) {
  std::vector<Matrix> blocks;
  for (int b = 0; b < shape.num_blocks(); ++b) blocks.push_back(Matrix::Zero(codomain[b], domain[b]));
  return AdjointableMap(shape, std::move(blocks));
}

AdjointableMap AdjointableMap::scalar_lift(const AlgebraShape& shape, const Matrix& c) {
  std::vector<Matrix> blocks;
  for (int nb : shape.block_sizes()) {
    Matrix fb = Matrix::Zero(c.rows() * nb, c.cols() * nb);
    for (Index i = 0; i < c.rows(); ++i) {
      for (Index j = 0; j < c.cols(); ++j) fb.block(i * nb, j * nb, nb, nb).diagonal().setConstant(c(i, j));
    }
    blocks.push_back(std::move(fb));
  }
  return AdjointableMap(shape, std::move(blocks));
}

AdjointableMap AdjointableMap::from_realization(const AlgebraShape& shape, int codomain, int domain,
                                                const Matrix& realization) {
  const K0Class dom = free_module_class(shape, domain);
  const K0Class cod = free_module_class(shape, codomain);
  if (realization.rows() != cod.complex_dim(shape) || realization.cols() != dom.complex_dim(shape)) {
    throw StructuralError("from_realization: realization has the wrong size");
  }
  std::vector<Matrix> blocks;
  for (int b = 0; b < shape.num_blocks(); ++b) {
    blocks.push_back(realization.block(coordinate_offset(shape, cod, b), coordinate_offset(shape, dom, b),
                                       cod[b], dom[b]));
  }
  AdjointableMap f(shape, std::move(blocks));
  const double scale = std::max(1.0, spectral_norm(realization));
  const double defect = spectral_norm(f.realization() - realization);
  if (defect > tolerances().residual_tol * scale) {
    std::ostringstream os;
    os << "from_realization: matrix does not commute with the right A-action (defect " << defect << ")";
    throw InvarianceError(os.str());
  }
  return f;
}

K0Class AdjointableMap::domain_class() const {
  std::vector<long long> r;
  for (const auto& m : blocks_) r.push_back(m.cols());
  return K0Class(std::move(r));
}

K0Class AdjointableMap::codomain_class() const {
  std::vector<long long> r;
  for (const auto& m : blocks_) r.push_back(m.rows());
  return K0Class(std::move(r));
}

namespace {

std::optional<int> free_rank(const AlgebraShape& shape, const K0Class& k) {
  if (k.size() == 0 || k[0] % shape.block_size(0) != 0) return std::nullopt;
  const int m = static_cast<int>(k[0] / shape.block_size(0));
  if (free_module_class(shape, m) == k) return m;
  return std::nullopt;
}

}  // namespace

std::optional<int> AdjointableMap::domain_rank() const { return free_rank(shape_, domain_class()); }

std::optional<int> AdjointableMap::codomain_rank() const { return free_rank(shape_, codomain_class()); }

AlgebraElement AdjointableMap::entry(int i, int j) const {
  if (!domain_rank() || !codomain_rank()) {
    throw StructuralError("entry: A-matrix entries exist only for maps between free modules");
  }
  std::vector<Matrix> out;
  for (int b = 0; b < shape_.num_blocks(); ++b) {
    const int nb = shape_.block_size(b);
    out.push_back(blocks_[b].block(static_cast<Index>(i) * nb, static_cast<Index>(j) * nb, nb, nb));
  }
  return AlgebraElement(shape_, std::move(out));
}

const Matrix& AdjointableMap::realization() const {
  std::call_once(cache_->once, [this] {
    const K0Class dom = domain_class();
    const K0Class cod = codomain_class();
    Matrix r = Matrix::Zero(cod.complex_dim(shape_), dom.complex_dim(shape_));
    for (int b = 0; b < shape_.num_blocks(); ++b) {
      const int nb = shape_.block_size(b);
      const Index ro = coordinate_offset(shape_, cod, b);
      const Index co = coordinate_offset(shape_, dom, b);
      for (int c = 0; c < nb; ++c) {
        r.block(ro + c * cod[b], co + c * dom[b], cod[b], dom[b]) = blocks_[b];
      }
    }
    cache_->realization = std::move(r);
  });
  return cache_->realization;
}

ModuleVector AdjointableMap::apply(const ModuleVector& x) const {
  const auto m = domain_rank();
  const auto n = codomain_rank();
  if (!m || !n || x.rank() != *m || !(x.shape == shape_)) {
    throw StructuralError("apply: vector is not in the domain of the map");
  }
  ModuleVector y = ModuleVector::zero(shape_, *n);
  for (int i = 0; i < *n; ++i) {
    AlgebraElement acc = AlgebraElement::zero(shape_);
    for (int j = 0; j < *m; ++j) acc = acc + entry(i, j) * x.entries[j];
    y.entries[i] = acc;
  }
  return y;
}

double AdjointableMap::norm() const {
  std::call_once(cache_->norm_once, [this] {
    double n = 0.0;
    for (const auto& m : blocks_) n = std::max(n, spectral_norm(m));
    cache_->norm = n;
  });
  return cache_->norm;
}

double AdjointableMap::scale() const { return std::max(norm(), scale_hint_); }

AdjointableMap AdjointableMap::with_scale(double scale) const {
  AdjointableMap out = *this;
  out.scale_hint_ = std::max(scale_hint_, scale);
  return out;
}

namespace {

void require_same_shape(const AdjointableMap& f, const AdjointableMap& g) {
  if (!(f.shape() == g.shape())) throw StructuralError("maps are over different algebras");
}

template <typename Op>
AdjointableMap per_block(const AdjointableMap& f, const AdjointableMap& g, Op op) {
  require_same_shape(f, g);
  std::vector<Matrix> out;
  for (int b = 0; b < f.num_blocks(); ++b) out.push_back(op(f.block(b), g.block(b)));
  return AdjointableMap(f.shape(), std::move(out));
}

}  // namespace

AdjointableMap adjoint(const AdjointableMap& f) {
  std::vector<Matrix> out;
  for (const auto& m : f.blocks()) out.push_back(m.adjoint());
  return AdjointableMap(f.shape(), std::move(out)).with_scale(f.scale());
}

AdjointableMap compose(const AdjointableMap& f, const AdjointableMap& g) {
  if (!(f.domain_class() == g.codomain_class())) {
    std::ostringstream os;
    os << "compose: domain " << f.domain_class() << " does not match codomain " << g.codomain_class();
    throw StructuralError(os.str());
  }
  return per_block(f, g, [](const Matrix& a, const Matrix& b) -> Matrix { return a * b; })
      .with_scale(f.scale() * g.scale());
}

AdjointableMap operator*(const AdjointableMap& f, const AdjointableMap& g) { return compose(f, g); }

AdjointableMap operator+(const AdjointableMap& f, const AdjointableMap& g) {
  if (!(f.domain_class() == g.domain_class()) || !(f.codomain_class() == g.codomain_class())) {
    throw StructuralError("operator+: maps have different domains or codomains");
  }
  return per_block(f, g, [](const Matrix& a, const Matrix& b) -> Matrix { return a + b; })
      .with_scale(std::max(f.scale(), g.scale()));
}

AdjointableMap operator-(const AdjointableMap& f, const AdjointableMap& g) {
  return f + Complex(-1.0) * g;
}

AdjointableMap operator*(Complex s, const AdjointableMap& f) {
  std::vector<Matrix> out;
  for (const auto& m : f.blocks()) out.push_back(s * m);
  return AdjointableMap(f.shape(), std::move(out)).with_scale(std::abs(s) * f.scale());
}

AdjointableMap power(const AdjointableMap& f, int k) {
  if (!f.is_endomorphism()) throw StructuralError("power: map is not an endomorphism");
  AdjointableMap acc = AdjointableMap::identity_on(f.shape(), f.domain_class());
  for (int i = 0; i < k; ++i) acc = compose(acc, f);
  return acc;
}

double distance(const AdjointableMap& f, const AdjointableMap& g) { return (f - g).norm(); }

Submodule kernel(const AdjointableMap& f) {
  std::vector<Subspace> parts;
  for (const auto& m : f.blocks()) parts.push_back(kernel(m, f.scale()));
  return Submodule(f.shape(), std::move(parts));
}

Submodule image(const AdjointableMap& f) {
  std::vector<Subspace> parts;
  for (const auto& m : f.blocks()) parts.push_back(image(m, f.scale()));
  return Submodule(f.shape(), std::move(parts));
}

Submodule map_submodule(const AdjointableMap& f, const Submodule& n) {
  if (!(n.ambient_class() == f.domain_class())) throw StructuralError("map_submodule: not a submodule of the domain");
  std::vector<Subspace> parts;
  for (int b = 0; b < f.num_blocks(); ++b) parts.push_back(map_subspace(f.block(b), n.part(b), f.scale()));
  return Submodule(f.shape(), std::move(parts));
}

Submodule preimage(const AdjointableMap& f, const Submodule& w) {
  if (!(w.ambient_class() == f.codomain_class())) throw StructuralError("preimage: not a submodule of the codomain");
  std::vector<Subspace> parts;
  for (int b = 0; b < f.num_blocks(); ++b) parts.push_back(preimage(f.block(b), w.part(b), f.scale()));
  return Submodule(f.shape(), std::move(parts));
}

AdjointableMap orthogonal_projection(const Submodule& n) {
  std::vector<Matrix> out;
  for (const auto& p : n.parts()) out.push_back(p.projector());
  return AdjointableMap(n.shape(), std::move(out));
}

AdjointableMap restrict_map(const AdjointableMap& f, const Submodule& from, const Submodule& to) {
  if (!(from.ambient_class() == f.domain_class()) || !(to.ambient_class() == f.codomain_class())) {
    throw StructuralError("restrict_map: submodules do not live in the domain and codomain");
  }
  std::vector<Matrix> out;
  for (int b = 0; b < f.num_blocks(); ++b) {
    const Matrix image_part = f.block(b) * from.part(b).basis();
    const Matrix coords = to.part(b).basis().adjoint() * image_part;
    const Matrix leak = image_part - to.part(b).basis() * coords;
    const double scale = std::max(1.0, f.norm());
    if (leak.size() > 0 && spectral_norm(leak) > std::sqrt(tolerances().residual_tol) * scale) {
      throw UnmetHypothesis("restrict_map: the map does not send the source submodule into the target");
    }
    out.push_back(coords);
  }
  return AdjointableMap(f.shape(), std::move(out)).with_scale(f.scale());
}

AdjointableMap mp_pseudoinverse(const AdjointableMap& f) {
  std::vector<Matrix> out;
  for (const auto& m : f.blocks()) {
    if (m.size() == 0) {
      out.push_back(Matrix::Zero(m.cols(), m.rows()));
      continue;
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RankDecision rd = decide_rank(svd.singularValues(), std::max(m.rows(), m.cols()), f.scale());
    const Index r = rd.rank;
    const RealVector inv = svd.singularValues().head(r).cwiseInverse();
    out.push_back(svd.matrixV().leftCols(r) * inv.asDiagonal() * svd.matrixU().leftCols(r).adjoint());
  }
  return AdjointableMap(f.shape(), std::move(out));
}

SingularData singular_data(const AdjointableMap& f) {
  std::vector<double> all;
  SingularData sd;
  const double ref = f.scale();
  for (int b = 0; b < f.num_blocks(); ++b) {
    const Matrix& m = f.block(b);
    const RealVector sv = singular_values(m);
    const RankDecision rd = decide_rank(sv, std::max(m.rows(), m.cols()), ref);
    const int nb = f.shape().block_size(b);
    for (Index i = 0; i < sv.size(); ++i) {
      for (int c = 0; c < nb; ++c) all.push_back(sv(i));
    }
    sd.rank += rd.rank * nb;
    if (rd.rank > 0) sd.gamma = std::min(sd.gamma, sv(rd.rank - 1));
    if (sv.size() > 0 && ref > 0.0) sd.margin = std::min(sd.margin, rd.margin);
  }
  std::sort(all.begin(), all.end(), std::greater<>());
  sd.singular_values = Eigen::Map<RealVector>(all.data(), static_cast<Index>(all.size()));
  return sd;
}

double reduced_minimum_modulus(const AdjointableMap& f) { return singular_data(f).gamma; }

double commutator_residual(const AdjointableMap& f, const AdjointableMap& d) {
  const double scale = f.norm() * d.norm();
  if (scale == 0.0) return 0.0;
  return distance(f * d, d * f) / scale;
}

}  // namespace cstar
