#include "helpers.hpp"

#include "cstar/algebra.hpp"
#include "cstar/errors.hpp"
#include "cstar/random.hpp"

using namespace cstar;
using namespace cstar::test;

TEST_SUITE("algebra") {
  TEST_CASE("identity is multiplicative unit") {
    const AlgebraShape s({2, 3});
    const AlgebraElement one = AlgebraElement::identity(s);
    CHECK(max_abs_difference(one * one, one) == 0.0);
    CHECK(one.norm() == doctest::Approx(1.0));
  }

  TEST_CASE("double adjoint returns the element") {
    const AlgebraShape s({1, 2});
    Rng rng(3, 0);
    const AlgebraElement a(s, {random_matrix(rng, 1, 1), random_matrix(rng, 2, 2)});
    CHECK(max_abs_difference(a.adjoint().adjoint(), a) == 0.0);
  }

  TEST_CASE("norm is the max over blocks") {
    const AlgebraShape s({2, 3});
    const AlgebraElement a(s, {2.0 * Matrix::Identity(2, 2), 3.0 * Matrix::Identity(3, 3)});
    CHECK(a.norm() == doctest::Approx(3.0));
    CHECK(a.dense().rows() == 5);
  }

  TEST_CASE("C*-identity and submultiplicativity") {
    const AlgebraShape s({2, 3});
    for (int i = 0; i < 10; ++i) {
      Rng rng(11, i);
      const AlgebraElement a(s, {random_matrix(rng, 2, 2), random_matrix(rng, 3, 3)});
      const AlgebraElement b(s, {random_matrix(rng, 2, 2), random_matrix(rng, 3, 3)});
      const double na = a.norm();
      CHECK((a.adjoint() * a).norm() == doctest::Approx(na * na).epsilon(1e-12));
      CHECK((a * b).norm() <= na * b.norm() * (1 + 1e-12));
    }
  }

  TEST_CASE("matrix units generate the algebra") {
    const AlgebraShape s({1, 2});
    CHECK(algebra_generators(s).size() == 5);
    CHECK(s.complex_dim() == 5);
    const AlgebraElement e = AlgebraElement::matrix_unit(s, 1, 0, 1);
    CHECK(max_abs_difference(e * e, AlgebraElement::zero(s)) == 0.0);
  }

  TEST_CASE("mismatched shapes are structural errors") {
    const AlgebraElement a = AlgebraElement::identity(AlgebraShape({2}));
    const AlgebraElement b = AlgebraElement::identity(AlgebraShape({3}));
    CHECK_THROWS_AS(a * b, StructuralError);
    CHECK_THROWS_AS(AlgebraShape({0}), StructuralError);
  }
}
