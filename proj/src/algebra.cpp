#include "cstar/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "cstar/errors.hpp"
#include "cstar/subspace.hpp"

namespace cstar {

AlgebraShape::AlgebraShape(std::vector<int> block_sizes) : sizes_(std::move(block_sizes)) {
  if (sizes_.empty()) {
    throw StructuralError("AlgebraShape: at least one block is required");
  }
  for (int n : sizes_) {
    if (n < 1) {
      throw StructuralError("AlgebraShape: block sizes must be positive");
    }
  }
}

Index AlgebraShape::complex_dim() const {
  Index d = 0;
  for (int n : sizes_) d += static_cast<Index>(n) * n;
  return d;
}

AlgebraElement::AlgebraElement(AlgebraShape shape, std::vector<Matrix> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != shape_.num_blocks()) {
    throw StructuralError("AlgebraElement: number of blocks does not match shape");
  }
  for (int b = 0; b < shape_.num_blocks(); ++b) {
    const int n = shape_.block_size(b);
    if (blocks_[b].rows() != n || blocks_[b].cols() != n) {
      std::ostringstream os;
      os << "AlgebraElement: block " << b << " is " << blocks_[b].rows() << "x" << blocks_[b].cols()
         << ", expected " << n << "x" << n;
      throw StructuralError(os.str());
    }
  }
}

AlgebraElement AlgebraElement::zero(const AlgebraShape& shape) { return scalar(shape, 0.0); }

AlgebraElement AlgebraElement::identity(const AlgebraShape& shape) { return scalar(shape, 1.0); }

AlgebraElement AlgebraElement::scalar(const AlgebraShape& shape, Complex value) {
  std::vector<Matrix> blocks;
  blocks.reserve(shape.num_blocks());
  for (int n : shape.block_sizes()) {
    blocks.push_back(value * Matrix::Identity(n, n));
  }
  return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement AlgebraElement::matrix_unit(const AlgebraShape& shape, int b, int r, int c) {
  AlgebraElement e = zero(shape);
  e.blocks_.at(b)(r, c) = 1.0;
  return e;
}

AlgebraElement AlgebraElement::adjoint() const {
  std::vector<Matrix> out;
  out.reserve(blocks_.size());
  for (const auto& m : blocks_) out.push_back(m.adjoint());
  return AlgebraElement(shape_, std::move(out));
}

double AlgebraElement::norm() const {
  double n = 0.0;
  for (const auto& m : blocks_) n = std::max(n, spectral_norm(m));
  return n;
}

Matrix AlgebraElement::dense() const {
  Index total = 0;
  for (int n : shape_.block_sizes()) total += n;
  Matrix d = Matrix::Zero(total, total);
  Index off = 0;
  for (const auto& m : blocks_) {
    d.block(off, off, m.rows(), m.cols()) = m;
    off += m.rows();
  }
  return d;
}

namespace {

void require_same_shape(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.shape() == b.shape())) {
    throw StructuralError("algebra elements have different shapes");
  }
}

template <typename Op>
AlgebraElement blockwise(const AlgebraElement& a, const AlgebraElement& b, Op op) {
  require_same_shape(a, b);
  std::vector<Matrix> out;
  out.reserve(a.blocks().size());
  for (int i = 0; i < a.shape().num_blocks(); ++i) out.push_back(op(a.block(i), b.block(i)));
  return AlgebraElement(a.shape(), std::move(out));
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) -> Matrix { return x + y; });
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) -> Matrix { return x - y; });
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) -> Matrix { return x * y; });
}

AlgebraElement operator*(Complex s, const AlgebraElement& a) {
  std::vector<Matrix> out;
  for (const auto& m : a.blocks()) out.push_back(s * m);
  return AlgebraElement(a.shape(), std::move(out));
}

std::vector<AlgebraElement> algebra_generators(const AlgebraShape& shape) {
  std::vector<AlgebraElement> gens;
  for (int b = 0; b < shape.num_blocks(); ++b) {
    const int n = shape.block_size(b);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) gens.push_back(AlgebraElement::matrix_unit(shape, b, r, c));
    }
  }
  return gens;
}

double max_abs_difference(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b);
  double d = 0.0;
  for (int i = 0; i < a.shape().num_blocks(); ++i) {
    if (a.block(i).size() > 0) d = std::max(d, (a.block(i) - b.block(i)).cwiseAbs().maxCoeff());
  }
  return d;
}

}  // namespace cstar
