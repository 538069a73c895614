#pragma once

#include <vector>

#include "cstar/types.hpp"

namespace cstar {

/// A finite-dimensional C*-algebra A = M_{n_1}(C) ⊕ ... ⊕ M_{n_k}(C).
class AlgebraShape {
 public:
  AlgebraShape() = default;
  explicit AlgebraShape(std::vector<int> block_sizes);

  /// The one-block algebra M_1(C) = C.
  static AlgebraShape trivial() { return AlgebraShape({1}); }

  const std::vector<int>& block_sizes() const { return sizes_; }
  int num_blocks() const { return static_cast<int>(sizes_.size()); }
  int block_size(int b) const { return sizes_[b]; }
  /// dim_C(A) = Σ n_b².
  Index complex_dim() const;

  friend bool operator==(const AlgebraShape&, const AlgebraShape&) = default;

 private:
  std::vector<int> sizes_;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraShape shape, std::vector<Matrix> blocks);

  static AlgebraElement zero(const AlgebraShape& shape);
  static AlgebraElement identity(const AlgebraShape& shape);
  static AlgebraElement scalar(const AlgebraShape& shape, Complex value);
  /// The matrix unit E_{rc} of block b.
  static AlgebraElement matrix_unit(const AlgebraShape& shape, int b, int r, int c);

  const AlgebraShape& shape() const { return shape_; }
  const Matrix& block(int b) const { return blocks_[b]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  AlgebraElement adjoint() const;
  /// C*-norm: the largest singular value over all blocks.
  double norm() const;
  /// Block-diagonal matrix of size Σ n_b.
  Matrix dense() const;

 private:
  AlgebraShape shape_;
  std::vector<Matrix> blocks_;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(Complex s, const AlgebraElement& a);

/// Matrix units of every block; they span A and generate it as an algebra.
std::vector<AlgebraElement> algebra_generators(const AlgebraShape& shape);

/// Largest blockwise entry difference.
double max_abs_difference(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace cstar
