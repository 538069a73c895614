#include "cstar/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

std::mutex& config_mutex() {
  static std::mutex m;
  return m;
}

ToleranceConfig& config_storage() {
  static ToleranceConfig config;
  return config;
}

}  // namespace

const ToleranceConfig& tolerances() { return config_storage(); }

void set_tolerances(const ToleranceConfig& config) {
  std::lock_guard lock(config_mutex());
  config_storage() = config;
}

ScopedTolerances::ScopedTolerances(const ToleranceConfig& config) : saved_(tolerances()) {
  set_tolerances(config);
}

ScopedTolerances::~ScopedTolerances() { set_tolerances(saved_); }

RankDecision decide_rank(const RealVector& sv, Index ambient_dim, double scale) {
  RankDecision d;
  const double ref = std::max(sv.size() > 0 ? sv(0) : 0.0, scale);
  if (sv.size() == 0 || !(ref > 0.0)) {
    return d;
  }
  d.threshold = tolerances().rank_tol * ref * static_cast<double>(std::max<Index>(ambient_dim, 1));
  while (d.rank < sv.size() && sv(d.rank) > d.threshold) {
    ++d.rank;
  }
  // an all-noise matrix is measured against the reference scale
  const double kept = d.rank > 0 ? sv(d.rank - 1) : ref;
  const double dropped = d.rank < sv.size() ? sv(d.rank) : 0.0;
  d.margin = (kept - dropped) / ref;
  return d;
}

Subspace::Subspace(Index ambient_dim, Matrix basis, double margin)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), margin_(margin) {}

Subspace Subspace::zero(Index ambient_dim) { return Subspace(ambient_dim, Matrix(ambient_dim, 0), kInfinity); }

Subspace Subspace::full(Index ambient_dim) {
  return Subspace(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim), kInfinity);
}

Subspace Subspace::from_orthonormal(Matrix basis, double margin) {
  const Index d = basis.rows();
  return Subspace(d, std::move(basis), margin);
}

Subspace Subspace::span(const Matrix& columns, double scale) {
  const Index d = columns.rows();
  if (columns.cols() == 0 || d == 0) {
    return zero(d);
  }
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
  const RankDecision rd = decide_rank(svd.singularValues(), std::max(columns.rows(), columns.cols()), scale);
  return Subspace(d, svd.matrixU().leftCols(rd.rank), rd.margin);
}

Matrix Subspace::projector() const { return basis_ * basis_.adjoint(); }

Subspace Subspace::complement() const {
  if (dim() == 0) {
    return full(ambient_dim_);
  }
  if (dim() == ambient_dim_) {
    return zero(ambient_dim_);
  }
  Eigen::HouseholderQR<Matrix> qr(basis_);
  Matrix q = qr.householderQ();
  return Subspace(ambient_dim_, q.rightCols(ambient_dim_ - dim()), margin_);
}

KernelImage kernel_image(const Matrix& a, double scale) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  if (rows == 0 || cols == 0) {
    return {Subspace::full(cols), Subspace::zero(rows), RankDecision{}};
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RankDecision rd = decide_rank(svd.singularValues(), std::max(rows, cols), scale);
  return {Subspace::from_orthonormal(svd.matrixV().rightCols(cols - rd.rank), rd.margin),
          Subspace::from_orthonormal(svd.matrixU().leftCols(rd.rank), rd.margin), rd};
}

Subspace kernel(const Matrix& a, double scale) { return kernel_image(a, scale).kernel; }

Subspace image(const Matrix& a, double scale) {
  if (a.rows() == 0 || a.cols() == 0) {
    return Subspace::zero(a.rows());
  }
  return Subspace::span(a, scale);
}

RealVector singular_values(const Matrix& a) {
  if (a.size() == 0) {
    return RealVector(0);
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

double spectral_norm(const Matrix& a) {
  const RealVector sv = singular_values(a);
  return sv.size() == 0 ? 0.0 : sv(0);
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient_dim() != b.ambient_dim()) {
    std::ostringstream os;
    os << what << ": ambient dimensions differ (" << a.ambient_dim() << " vs " << b.ambient_dim() << ")";
    throw StructuralError(os.str());
  }
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_sum");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Matrix stacked(a.ambient_dim(), a.dim() + b.dim());
  stacked << a.basis(), b.basis();
  return Subspace::span(stacked);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_intersection");
  const Index d = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) {
    return Subspace::zero(d);
  }
  const Index ra = a.dim();
  const Index rb = b.dim();
  Matrix stacked(d, ra + rb);
  stacked << a.basis(), -b.basis();
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const RankDecision rd = decide_rank(svd.singularValues(), std::max(d, ra + rb));
  const Index null_dim = ra + rb - rd.rank;
  if (null_dim == 0) {
    return Subspace::zero(d);
  }
  const Matrix coeffs = svd.matrixV().rightCols(null_dim).topRows(ra);
  const Matrix vectors = a.basis() * coeffs;
  Eigen::HouseholderQR<Matrix> qr(vectors);
  Matrix q = qr.householderQ() * Matrix::Identity(d, null_dim);
  return Subspace::from_orthonormal(std::move(q), rd.margin);
}

RealVector principal_angles(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "principal_angles");
  const Index k = std::min(a.dim(), b.dim());
  if (k == 0) {
    return RealVector(0);
  }
  const Subspace& small = a.dim() <= b.dim() ? a : b;
  const Subspace& large = a.dim() <= b.dim() ? b : a;
  const Matrix cross = large.basis().adjoint() * small.basis();
  const RealVector cosines = singular_values(cross);  // descending -> angles ascending
  const Matrix residual = small.basis() - large.basis() * cross;
  RealVector sines = singular_values(residual);        // descending -> angles descending
  RealVector angles(k);
  for (Index i = 0; i < k; ++i) {
    const double c = std::min(1.0, cosines(i));
    const double s = std::min(1.0, sines(k - 1 - i));
    angles(i) = c * c > 0.5 ? std::asin(s) : std::acos(c);
  }
  std::sort(angles.data(), angles.data() + k);
  return angles;
}

double subspace_distance(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_distance");
  if (a.dim() != b.dim()) {
    return 1.0;
  }
  if (a.dim() == 0) {
    return 0.0;
  }
  const Matrix residual = b.basis() - a.basis() * (a.basis().adjoint() * b.basis());
  return std::min(1.0, spectral_norm(residual));
}

bool same_subspace(const Subspace& a, const Subspace& b) {
  return a.dim() == b.dim() && subspace_distance(a, b) <= std::sin(tolerances().angle_tol);
}

bool contains(const Subspace& outer, const Subspace& inner) {
  require_same_ambient(outer, inner, "contains");
  if (inner.dim() == 0) return true;
  if (inner.dim() > outer.dim()) return false;
  const Matrix residual = inner.basis() - outer.basis() * (outer.basis().adjoint() * inner.basis());
  return spectral_norm(residual) <= std::sin(tolerances().angle_tol);
}

Subspace relative_complement(const Subspace& outer, const Subspace& inner) {
  require_same_ambient(outer, inner, "relative_complement");
  if (inner.dim() == 0) return outer;
  // Project outer's basis off `inner` and keep what remains.
  const Matrix off = outer.basis() - inner.basis() * (inner.basis().adjoint() * outer.basis());
  Eigen::JacobiSVD<Matrix> svd(off, Eigen::ComputeThinU);
  const Index expected = outer.dim() - inner.dim();
  const RankDecision rd = decide_rank(svd.singularValues(), std::max(off.rows(), off.cols()));
  const Index keep = std::max<Index>(0, std::min(expected, rd.rank));
  return Subspace::from_orthonormal(svd.matrixU().leftCols(keep), rd.margin);
}

Subspace map_subspace(const Matrix& a, const Subspace& s, double scale) {
  if (a.cols() != s.ambient_dim()) {
    throw StructuralError("map_subspace: matrix columns do not match subspace ambient dimension");
  }
  if (s.is_zero()) return Subspace::zero(a.rows());
  return Subspace::span(a * s.basis(), std::max(scale, spectral_norm(a)));
}

Subspace preimage(const Matrix& a, const Subspace& target, double scale) {
  if (a.rows() != target.ambient_dim()) {
    throw StructuralError("preimage: matrix rows do not match target ambient dimension");
  }
  const Matrix off = a - target.basis() * (target.basis().adjoint() * a);
  return kernel(off, std::max(scale, spectral_norm(a)));
}

bool are_complements(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "are_complements");
  if (a.dim() + b.dim() != a.ambient_dim()) return false;
  return subspace_intersection(a, b).is_zero();
}

ObliqueProjector oblique_projector(const Subspace& range, const Subspace& ker) {
  require_same_ambient(range, ker, "oblique_projector");
  const Index d = range.ambient_dim();
  if (!are_complements(range, ker)) {
    std::ostringstream os;
    os << "oblique_projector: subspaces of dimensions " << range.dim() << " and " << ker.dim()
       << " are not complements in C^" << d << " (intersection dimension "
       << subspace_intersection(range, ker).dim() << ")";
    throw UnmetHypothesis(os.str());
  }
  Matrix w(d, d);
  w << range.basis(), ker.basis();
  // E = W diag(I, 0) W^{-1} = Q_range * (first rows of W^{-1}).
  const Matrix winv = w.partialPivLu().inverse();
  ObliqueProjector p;
  p.matrix = range.basis() * winv.topRows(range.dim());
  p.norm = spectral_norm(p.matrix);
  return p;
}

}  // namespace cstar
