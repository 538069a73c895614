#pragma once

#include <doctest.h>

#include <initializer_list>

#include "cstar/linmap.hpp"

namespace cstar::test {

inline Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

// c ⊗ 1 over the one-block algebra C, or over a larger shape.
inline AdjointableMap lift(const Matrix& c, const AlgebraShape& shape = AlgebraShape::trivial()) {
  return AdjointableMap::scalar_lift(shape, c);
}

inline Matrix jordan(int n) {
  Matrix j = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
  return j;
}

inline K0Class k0(std::initializer_list<long long> r) { return K0Class(std::vector<long long>(r)); }

}  // namespace cstar::test
