#include "helpers.hpp"

#include "cstar/errors.hpp"
#include "cstar/fredholm.hpp"

using namespace cstar;
using namespace cstar::test;

TEST_SUITE("fredholm") {
  TEST_CASE("projection A^2 -> A^1") {
    const AlgebraShape s({2});
    const AdjointableMap f = AdjointableMap::scalar_lift(s, mat({{1, 0}}));
    const FredholmReport r = fredholm_report(f);
    CHECK(r.kernel_class == k0({2}));
    CHECK(r.coker_class == k0({0}));
    CHECK(r.index == k0({2}));
    CHECK_FALSE(r.is_generalized_weyl);
    const WitnessPair w = tilde_weyl_witness(f);
    CHECK(w.n == k0({0}));
    CHECK(w.n_tilde == k0({2}));
    const WitnessPair wa = tilde_weyl_witness(adjoint(f));
    CHECK(wa.n == k0({2}));
    CHECK(wa.n_tilde == k0({0}));
  }

  TEST_CASE("nilpotent shift exact sequence") {
    const AdjointableMap j = lift(jordan(2));
    const ExactSequenceReport e = exact_sequence(j, j);
    const std::vector<long long> expected{1, 2, 1, 1, 2, 1};
    for (int k = 0; k < 6; ++k) CHECK(e.spaces[k].complex_dim() == expected[k]);
    CHECK(e.max_residual() < 1e-12);
    CHECK(e.alternating_dim_sum == 0);
  }

  TEST_CASE("perturbation chain on a nilpotent") {
    const AdjointableMap t = lift(jordan(3));
    const AdjointableMap f = lift(mat({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}));
    const ChainReport c = weyl_perturbation_chain(t, f);
    CHECK(c.identity_holds);
    CHECK(c.image_splittings_hold);
    CHECK(c.kernel_splittings_hold);
  }

  TEST_CASE("product chain") {
    const AlgebraShape s({1, 2});
    const AdjointableMap f = AdjointableMap::scalar_lift(s, mat({{1, 0}, {0, 1}, {0, 0}}));
    const AdjointableMap d = AdjointableMap::scalar_lift(s, mat({{0, 1, 0}}));
    const ProductChainReport r = product_chain(d, f);
    CHECK(r.identity_holds);
    CHECK(r.kernel_d_cap_image_f.k0_class() == k0({1, 2}));
  }

  TEST_CASE("b-Fredholm stabilization") {
    const BFredholmReport j3 = b_fredholm_report(lift(jordan(3)));
    CHECK(j3.stabilization_exponent == 3);
    CHECK(j3.b_index == k0({0}));
    const BFredholmReport mixed = b_fredholm_report(lift(mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 2}})));
    CHECK(mixed.stabilization_exponent == 2);
    CHECK(mixed.restricted_map.norm() == doctest::Approx(2.0));
    CHECK(mixed.restricted_report.kernel.is_zero());
  }

  TEST_CASE("commuting b-Fredholm pair") {
    const AdjointableMap j = lift(jordan(3));
    const BFredholmCommutingReport r = b_fredholm_commuting_check(j, j);
    CHECK(r.f.stabilization_exponent == 3);
    CHECK(r.d.stabilization_exponent == 3);
    CHECK(r.df.stabilization_exponent == 2);
    CHECK(r.index_additive);
    CHECK_THROWS_AS(b_fredholm_commuting_check(j, adjoint(j)), UnmetHypothesis);
  }
}
