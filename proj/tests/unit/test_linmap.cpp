#include "helpers.hpp"

#include "cstar/errors.hpp"
#include "cstar/probes.hpp"
#include "cstar/random.hpp"

using namespace cstar;
using namespace cstar::test;

TEST_SUITE("linmap") {
  TEST_CASE("adjoint satisfies the inner product identity") {
    const AlgebraShape s({1, 2});
    for (int i = 0; i < 10; ++i) {
      Rng rng(21, i);
      const AdjointableMap f = random_map(rng, s, 2, 3);
      const Vector x = Vector::Random(f.realization().cols());
      const Vector y = Vector::Random(f.realization().rows());
      const Complex lhs = y.dot(f.realization() * x);
      const Complex rhs = (adjoint(f).realization() * y).dot(x);
      CHECK(std::abs(lhs - rhs) < 1e-12 * (1 + std::abs(lhs)));
    }
  }

  TEST_CASE("nilpotent shift squares to zero") {
    const AdjointableMap j = lift(jordan(2));
    CHECK(power(j, 2).norm() == 0.0);
    CHECK(kernel(j).k0_class() == k0({1}));
    CHECK(image(j).k0_class() == k0({1}));
    CHECK(same_submodule(kernel(j), image(j)));
  }

  TEST_CASE("kernel and image of identity, zero, coordinate projection") {
    const AlgebraShape s({2, 3});
    const AdjointableMap id = AdjointableMap::identity(s, 2);
    CHECK(kernel(id).is_zero());
    CHECK(image(id).k0_class() == k0({4, 6}));
    const AdjointableMap z = AdjointableMap::zero(s, 2, 2);
    CHECK(kernel(z).k0_class() == k0({4, 6}));
    CHECK(image(z).is_zero());
    const AdjointableMap p = AdjointableMap::scalar_lift(s, mat({{1, 0}, {0, 0}}));
    CHECK(kernel(p).k0_class() == k0({2, 3}));
    CHECK(image(p).k0_class() == k0({2, 3}));
  }

  TEST_CASE("orthogonal projection is a self-adjoint idempotent") {
    const AlgebraShape s({2});
    Rng rng(4, 0);
    const AdjointableMap f = random_low_rank_map(rng, s, 3, 3, 1);
    const AdjointableMap p = orthogonal_projection(image(f));
    CHECK(distance(p * p, p) < 1e-12);
    CHECK(distance(adjoint(p), p) < 1e-12);
  }

  TEST_CASE("Moore-Penrose identities") {
    const AlgebraShape s({1, 2});
    for (int i = 0; i < 10; ++i) {
      Rng rng(8, i);
      const AdjointableMap f = random_low_rank_map(rng, s, 3, 2, 1);
      const AdjointableMap g = mp_pseudoinverse(f);
      const double nf = f.norm();
      CHECK(distance(f * g * f, f) <= 1e-10 * nf);
      CHECK(distance(g * f * g, g) <= 1e-10 * g.norm());
      CHECK(distance(adjoint(f * g), f * g) < 1e-10);
      CHECK(distance(adjoint(g * f), g * f) < 1e-10);
    }
  }

  TEST_CASE("reduced minimum modulus of the multiplier") {
    for (int n : {1, 4, 9}) {
      CHECK(reduced_minimum_modulus(multiplier_family(n)) == 1.0 / (n + 1));
    }
  }

  TEST_CASE("kernel complement is the adjoint image") {
    const AlgebraShape s({2});
    Rng rng(9, 0);
    const AdjointableMap f = random_low_rank_map(rng, s, 3, 4, 2);
    CHECK(same_submodule(orth_complement(kernel(f)), image(adjoint(f))));
  }

  TEST_CASE("A-linearity is checked on realizations") {
    const AlgebraShape s({2});
    Matrix r = Matrix::Zero(4, 4);
    r(0, 1) = 1.0;
    CHECK_THROWS_AS(AdjointableMap::from_realization(s, 1, 1, r), InvarianceError);
    CHECK_THROWS_AS(compose(AdjointableMap::identity(s, 2), AdjointableMap::identity(s, 3)), StructuralError);
  }
}
