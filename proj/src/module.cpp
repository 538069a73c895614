#include "cstar/module.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "cstar/errors.hpp"

namespace cstar {

bool K0Class::is_zero() const {
  return std::all_of(ranks_.begin(), ranks_.end(), [](long long r) { return r == 0; });
}

bool K0Class::is_nonnegative() const {
  return std::all_of(ranks_.begin(), ranks_.end(), [](long long r) { return r >= 0; });
}

long long K0Class::complex_dim(const AlgebraShape& shape) const {
  long long d = 0;
  for (std::size_t b = 0; b < ranks_.size(); ++b) d += ranks_[b] * shape.block_size(static_cast<int>(b));
  return d;
}

std::string K0Class::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

K0Class& K0Class::operator+=(const K0Class& other) {
  if (other.size() != size()) throw StructuralError("K0Class: block counts differ");
  for (std::size_t i = 0; i < ranks_.size(); ++i) ranks_[i] += other.ranks_[i];
  return *this;
}

K0Class& K0Class::operator-=(const K0Class& other) {
  if (other.size() != size()) throw StructuralError("K0Class: block counts differ");
  for (std::size_t i = 0; i < ranks_.size(); ++i) ranks_[i] -= other.ranks_[i];
  return *this;
}

std::ostream& operator<<(std::ostream& os, const K0Class& k) {
  os << '(';
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  return os << ')';
}

K0Class positive_part(const K0Class& k) {
  std::vector<long long> r(k.ranks());
  for (auto& x : r) x = std::max(0LL, x);
  return K0Class(std::move(r));
}

K0Class free_module_class(const AlgebraShape& shape, int m) {
  std::vector<long long> r;
  for (int n : shape.block_sizes()) r.push_back(static_cast<long long>(m) * n);
  return K0Class(std::move(r));
}

ModuleVector ModuleVector::zero(const AlgebraShape& shape, int m) {
  return ModuleVector{shape, std::vector<AlgebraElement>(m, AlgebraElement::zero(shape))};
}

ModuleVector ModuleVector::unit(const AlgebraShape& shape, int m, int i) {
  ModuleVector v = zero(shape, m);
  v.entries.at(i) = AlgebraElement::identity(shape);
  return v;
}

ModuleVector ModuleVector::times(const AlgebraElement& a) const {
  ModuleVector out{shape, {}};
  out.entries.reserve(entries.size());
  for (const auto& e : entries) out.entries.push_back(e * a);
  return out;
}

AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y) {
  if (!(x.shape == y.shape) || x.rank() != y.rank()) {
    throw StructuralError("inner_product: vectors live in different modules");
  }
  AlgebraElement acc = AlgebraElement::zero(x.shape);
  for (int i = 0; i < x.rank(); ++i) acc = acc + x.entries[i].adjoint() * y.entries[i];
  return acc;
}

Matrix block_matrix(const ModuleVector& x, int b) {
  const int n = x.shape.block_size(b);
  Matrix xb(static_cast<Index>(x.rank()) * n, n);
  for (int i = 0; i < x.rank(); ++i) xb.middleRows(static_cast<Index>(i) * n, n) = x.entries[i].block(b);
  return xb;
}

Index coordinate_offset(const AlgebraShape& shape, const K0Class& ambient, int b) {
  Index off = 0;
  for (int i = 0; i < b; ++i) off += shape.block_size(i) * ambient[i];
  return off;
}

Vector coordinates(const ModuleVector& x) {
  const K0Class amb = free_module_class(x.shape, x.rank());
  Vector v(amb.complex_dim(x.shape));
  for (int b = 0; b < x.shape.num_blocks(); ++b) {
    const Matrix xb = block_matrix(x, b);
    v.segment(coordinate_offset(x.shape, amb, b), xb.size()) = xb.reshaped();
  }
  return v;
}

ModuleVector from_coordinates(const AlgebraShape& shape, int m, const Vector& v) {
  const K0Class amb = free_module_class(shape, m);
  if (v.size() != amb.complex_dim(shape)) {
    throw StructuralError("from_coordinates: coordinate vector has the wrong length");
  }
  ModuleVector x = ModuleVector::zero(shape, m);
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const int n = shape.block_size(b);
    const Index rows = static_cast<Index>(m) * n;
    const Matrix xb = v.segment(coordinate_offset(shape, amb, b), rows * n).reshaped(rows, n);
    for (int i = 0; i < m; ++i) {
      std::vector<Matrix> blocks = x.entries[i].blocks();
      blocks[b] = xb.middleRows(static_cast<Index>(i) * n, n);
      x.entries[i] = AlgebraElement(shape, std::move(blocks));
    }
  }
  return x;
}

Submodule::Submodule(AlgebraShape shape, std::vector<Subspace> parts)
    : shape_(std::move(shape)), parts_(std::move(parts)) {
  if (static_cast<int>(parts_.size()) != shape_.num_blocks()) {
    throw StructuralError("Submodule: one subspace per block is required");
  }
}

Submodule Submodule::zero(const AlgebraShape& shape, const K0Class& ambient) {
  std::vector<Subspace> parts;
  for (int b = 0; b < shape.num_blocks(); ++b) parts.push_back(Subspace::zero(ambient[b]));
  return Submodule(shape, std::move(parts));
}

Submodule Submodule::full(const AlgebraShape& shape, const K0Class& ambient) {
  std::vector<Subspace> parts;
  for (int b = 0; b < shape.num_blocks(); ++b) parts.push_back(Subspace::full(ambient[b]));
  return Submodule(shape, std::move(parts));
}

K0Class Submodule::ambient_class() const {
  std::vector<long long> r;
  for (const auto& p : parts_) r.push_back(p.ambient_dim());
  return K0Class(std::move(r));
}

K0Class Submodule::k0_class() const {
  std::vector<long long> r;
  for (const auto& p : parts_) r.push_back(p.dim());
  return K0Class(std::move(r));
}

Index Submodule::complex_dim() const { return k0_class().complex_dim(shape_); }

Index Submodule::ambient_complex_dim() const { return ambient_class().complex_dim(shape_); }

bool Submodule::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Subspace& s) { return s.is_zero(); });
}

double Submodule::margin() const {
  double m = kInfinity;
  for (const auto& p : parts_) m = std::min(m, p.margin());
  return m;
}

Matrix coordinate_basis(const Submodule& sub) {
  const AlgebraShape& shape = sub.shape();
  const K0Class amb = sub.ambient_class();
  Matrix q = Matrix::Zero(sub.ambient_complex_dim(), sub.complex_dim());
  Index col = 0;
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const int n = shape.block_size(b);
    const Index k = amb[b];
    const Index off = coordinate_offset(shape, amb, b);
    const Matrix& v = sub.part(b).basis();
    for (int c = 0; c < n; ++c) {
      q.block(off + c * k, col, k, v.cols()) = v;
      col += v.cols();
    }
  }
  return q;
}

Subspace Submodule::coordinate_subspace() const {
  return Subspace::from_orthonormal(coordinate_basis(*this), margin());
}

Submodule Submodule::from_coordinate_subspace(const AlgebraShape& shape, const K0Class& ambient,
                                              const Subspace& coords) {
  if (coords.ambient_dim() != ambient.complex_dim(shape)) {
    throw StructuralError("from_coordinate_subspace: ambient dimension mismatch");
  }
  const Matrix& q = coords.basis();
  const double tol = std::sqrt(tolerances().residual_tol);
  // Right multiplication by E_rc in block b moves slot r to slot c.
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const int n = shape.block_size(b);
    const Index k = ambient[b];
    const Index off = coordinate_offset(shape, ambient, b);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        Matrix moved = Matrix::Zero(q.rows(), q.cols());
        moved.middleRows(off + c * k, k) = q.middleRows(off + r * k, k);
        const Matrix residual = moved - q * (q.adjoint() * moved);
        if (residual.size() > 0 && spectral_norm(residual) > tol) {
          std::ostringstream os;
          os << "subspace is not A-invariant: right multiplication by E_" << r << c << " of block " << b
             << " leaves it (residual " << spectral_norm(residual) << ")";
          throw InvarianceError(os.str());
        }
      }
    }
  }
  std::vector<Subspace> parts;
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const int n = shape.block_size(b);
    const Index k = ambient[b];
    const Index off = coordinate_offset(shape, ambient, b);
    const Index block_rank = Subspace::span(q.middleRows(off, k * n)).dim();
    Subspace gens = Subspace::span(q.middleRows(off, k));
    if (block_rank != gens.dim() * n) {
      std::ostringstream os;
      os << "block " << b << " component has complex dimension " << block_rank
         << ", not divisible into copies of C^" << n;
      throw InvarianceError(os.str());
    }
    parts.push_back(std::move(gens));
  }
  return Submodule(shape, std::move(parts));
}

Submodule submodule_span(const AlgebraShape& shape, int m, const std::vector<ModuleVector>& vectors) {
  std::vector<Subspace> parts;
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const Index k = static_cast<Index>(m) * shape.block_size(b);
    Matrix cols(k, 0);
    for (const auto& v : vectors) {
      if (!(v.shape == shape) || v.rank() != m) {
        throw StructuralError("submodule_span: vector does not belong to the ambient module");
      }
      const Matrix xb = block_matrix(v, b);
      Matrix grown(k, cols.cols() + xb.cols());
      grown << cols, xb;
      cols = std::move(grown);
    }
    parts.push_back(Subspace::span(cols));
  }
  return Submodule(shape, std::move(parts));
}

K0Class k0_class(const Submodule& n) { return n.k0_class(); }

namespace {

void require_same_ambient(const Submodule& a, const Submodule& b) {
  if (!(a.shape() == b.shape()) || !(a.ambient_class() == b.ambient_class())) {
    throw StructuralError("submodules live in different modules");
  }
}

template <typename Op>
Submodule per_block(const Submodule& a, const Submodule& b, Op op) {
  require_same_ambient(a, b);
  std::vector<Subspace> parts;
  for (int i = 0; i < a.num_blocks(); ++i) parts.push_back(op(a.part(i), b.part(i)));
  return Submodule(a.shape(), std::move(parts));
}

}  // namespace

Submodule orth_complement(const Submodule& n) {
  std::vector<Subspace> parts;
  for (const auto& p : n.parts()) parts.push_back(p.complement());
  return Submodule(n.shape(), std::move(parts));
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  return per_block(a, b, [](const Subspace& x, const Subspace& y) { return subspace_sum(x, y); });
}

Submodule submodule_intersection(const Submodule& a, const Submodule& b) {
  return per_block(a, b, [](const Subspace& x, const Subspace& y) { return subspace_intersection(x, y); });
}

std::pair<Submodule, Submodule> sum_and_intersection(const Submodule& a, const Submodule& b) {
  return {submodule_sum(a, b), submodule_intersection(a, b)};
}

double submodule_distance(const Submodule& a, const Submodule& b) {
  require_same_ambient(a, b);
  double d = 0.0;
  for (int i = 0; i < a.num_blocks(); ++i) d = std::max(d, subspace_distance(a.part(i), b.part(i)));
  return d;
}

bool same_submodule(const Submodule& a, const Submodule& b) {
  require_same_ambient(a, b);
  for (int i = 0; i < a.num_blocks(); ++i) {
    if (!same_subspace(a.part(i), b.part(i))) return false;
  }
  return true;
}

bool contains(const Submodule& outer, const Submodule& inner) {
  require_same_ambient(outer, inner);
  for (int i = 0; i < outer.num_blocks(); ++i) {
    if (!contains(outer.part(i), inner.part(i))) return false;
  }
  return true;
}

Submodule relative_complement(const Submodule& outer, const Submodule& inner) {
  return per_block(outer, inner, [](const Subspace& o, const Subspace& i) { return relative_complement(o, i); });
}

bool are_complements(const Submodule& a, const Submodule& b) {
  require_same_ambient(a, b);
  for (int i = 0; i < a.num_blocks(); ++i) {
    if (!are_complements(a.part(i), b.part(i))) return false;
  }
  return true;
}

bool isomorphic(const Submodule& a, const Submodule& b) { return a.k0_class() == b.k0_class(); }

bool decomposes(const DecompositionWitness& w, const Submodule& parent) {
  if (!submodule_intersection(w.first, w.second).is_zero()) return false;
  if (!same_submodule(submodule_sum(w.first, w.second), parent)) return false;
  if (w.orthogonal) {
    for (int b = 0; b < w.first.num_blocks(); ++b) {
      const Matrix cross = w.first.part(b).basis().adjoint() * w.second.part(b).basis();
      if (cross.size() > 0 && cross.cwiseAbs().maxCoeff() > tolerances().residual_tol) return false;
    }
  }
  return true;
}

DecompositionWitness split_nested_submodule(const Submodule& m1, const Submodule& m2,
                                            const Submodule& m1_complement) {
  require_same_ambient(m1, m2);
  require_same_ambient(m1, m1_complement);
  if (!contains(m2, m1)) {
    throw UnmetHypothesis("split_nested_submodule: first submodule is not contained in the second");
  }
  if (!are_complements(m1, m1_complement)) {
    throw UnmetHypothesis("split_nested_submodule: supplied complement is not an algebraic complement");
  }
  DecompositionWitness w{m1, submodule_intersection(m1_complement, m2), false};
  if (!decomposes(w, m2)) {
    throw TheoremViolation("split_nested_submodule: M1 and M1c ∩ M2 do not decompose M2");
  }
  w.orthogonal = true;
  for (int b = 0; b < m1.num_blocks(); ++b) {
    const Matrix& q1 = w.first.part(b).basis();
    const Matrix& q2 = w.second.part(b).basis();
    if (q1.cols() > 0 && q2.cols() > 0 && (q1.adjoint() * q2).norm() > tolerances().angle_tol) w.orthogonal = false;
  }
  return w;
}

}  // namespace cstar
