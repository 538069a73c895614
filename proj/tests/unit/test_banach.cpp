#include "helpers.hpp"

#include "cstar/banach.hpp"
#include "cstar/errors.hpp"
#include "cstar/random.hpp"

using namespace cstar;
using namespace cstar::test;

TEST_SUITE("banach") {
  TEST_CASE("invertible operator") {
    const Matrix t = mat({{2, 1}, {0, 3}});
    const RegularOperator r = make_regular_orthogonal(t);
    CHECK((r.t_prime - t.inverse()).norm() < 1e-12);
    CHECK(generalized_weyl_banach(r));
  }

  TEST_CASE("orthogonal complements give the pseudoinverse") {
    Rng rng(2, 0);
    const Matrix t = random_rank(rng, 4, 3, 2);
    const RegularOperator r = make_regular_orthogonal(t);
    CHECK((r.t_prime - t.completeOrthogonalDecomposition().pseudoInverse()).norm() < 1e-10);
    CHECK(r.inner_residual < 1e-12);
    CHECK(r.outer_residual < 1e-12);
  }

  TEST_CASE("skew complement") {
    const Matrix t = mat({{1, 0}, {0, 0}});
    const Subspace skew = Subspace::span(mat({{1}, {1}}));
    const RegularOperator r = make_regular(t, skew, skew);
    CHECK(r.inner_residual < 1e-12);
    CHECK(r.outer_residual < 1e-12);
    CHECK(r.projection_residual < 1e-12);
    CHECK(r.codomain_split.norm > 1.0);
    CHECK_THROWS_AS(make_regular(t, Subspace::span(mat({{0}, {1}})), skew), UnmetHypothesis);
  }

  TEST_CASE("generalized Weyl and witnesses") {
    CHECK(generalized_weyl_banach(make_regular_orthogonal(jordan(2))));
    const RegularOperator onto = make_regular_orthogonal(mat({{1, 0, 0}, {0, 1, 0}}));
    CHECK_FALSE(generalized_weyl_banach(onto));
    const BanachWitness w = phi0gc_witness(onto);
    CHECK(w.z1 == 0);
    CHECK(w.z2 == 1);
    const BanachWitness v = phi0gc_witness(make_regular_orthogonal(mat({{1, 0}, {0, 1}, {0, 0}})));
    CHECK(v.z1 == 1);
    CHECK(v.z2 == 0);
  }

  TEST_CASE("finite-rank perturbation identity") {
    for (int i = 0; i < 10; ++i) {
      Rng rng(31, i);
      const RegularOperator t = make_regular_orthogonal(random_rank(rng, 4, 5, 3));
      const BanachPerturbationReport p = banach_perturbation(t, random_rank(rng, 4, 5, 1));
      CHECK(p.identity_holds);
      CHECK(p.lhs == p.rhs);
      CHECK(p.rank_f == 1);
    }
  }

  TEST_CASE("product of nilpotent shifts") {
    const RegularOperator j = make_regular_orthogonal(jordan(2));
    const BanachProductReport p = banach_product(j, j);
    CHECK(p.s_weyl);
    CHECK(p.t_weyl);
    CHECK(p.product_weyl);
    CHECK(p.index_additive);
    CHECK(p.restricted_inverse_residual < 1e-12);
  }
}
