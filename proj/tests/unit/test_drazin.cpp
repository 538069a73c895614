#include "helpers.hpp"

#include "cstar/drazin.hpp"
#include "cstar/errors.hpp"

using namespace cstar;
using namespace cstar::test;

namespace {
const Matrix kMixed = mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 2}});
}

TEST_SUITE("drazin") {
  TEST_CASE("ascent") {
    CHECK(ascent(lift(mat({{2, 1}, {0, 3}}))) == 0);
    CHECK(ascent(lift(jordan(3))) == 3);
    CHECK(ascent(lift(mat({{1, 0}, {0, 0}}))) == 1);
    CHECK(descent(lift(jordan(3))) == 3);
  }

  TEST_CASE("Drazin inverse of a nilpotent is zero") {
    const DrazinReport r = drazin_inverse(lift(jordan(3)));
    CHECK(r.index == 3);
    CHECK(r.inverse.norm() < 1e-14);
    CHECK(r.nilpotent_residual < 1e-12);
  }

  TEST_CASE("Drazin inverse of the mixed operator") {
    const DrazinReport r = drazin_inverse(lift(kMixed));
    CHECK(r.index == 2);
    CHECK((r.inverse.block(0) - mat({{0, 0, 0}, {0, 0, 0}, {0, 0, 0.5}})).norm() < 1e-12);
    CHECK(r.residuals.max() < 1e-12);
    CHECK(r.core_gamma == doctest::Approx(2.0));
  }

  TEST_CASE("index and inverse pass to the adjoint") {
    const DualReport d = drazin_dual_check(lift(jordan(3)));
    CHECK(d.holds);
    CHECK(d.index == 3);
    CHECK(d.adjoint_index == 3);
    CHECK(drazin_dual_check(lift(kMixed)).inverse_distance < 1e-12);
  }

  TEST_CASE("intersection criterion") {
    const AdjointableMap id = lift(Matrix::Identity(3, 3));
    const AdjointableMap j = lift(jordan(3));
    const CriterionReport a = commuting_drazin_criterion(id, j);
    CHECK(a.verdict);
    CHECK(a.direct_verdict);
    const CriterionReport b = commuting_drazin_criterion(j, j);
    CHECK(b.verdict == b.direct_verdict);
    CHECK_THROWS_AS(commuting_drazin_criterion(j, adjoint(j)), UnmetHypothesis);
  }

  TEST_CASE("commuting Browder decomposition") {
    const AdjointableMap f = lift(kMixed);
    const AdjointableMap d = lift(mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 3}}));
    const CommutingBrowderReport r = commuting_browder_check(f, d);
    CHECK(r.kernel_identity_holds);
    CHECK(r.f_off_diagonal < 1e-12);
    CHECK(r.d_off_diagonal < 1e-12);
    const BrowderWitness w = browder_decomposition(f);
    CHECK(w.index == 2);
    CHECK(w.m.k0_class() == k0({1}));
    CHECK(w.n.k0_class() == k0({2}));
  }

  TEST_CASE("shift counterexample chains") {
    const ShiftExample two = shift_counterexample(ShiftKind::RangeStrict, 2);
    CHECK(two.strict_depth == 2);
    const ShiftExample five = shift_counterexample(ShiftKind::RangeStrict, 5);
    CHECK(five.strict_depth == 5);
    for (std::size_t k = 1; k < five.chain.size(); ++k) CHECK(five.chain[k] <= five.chain[k - 1]);
    const ShiftExample ker = shift_counterexample(ShiftKind::KernelStrict, 3);
    for (std::size_t k = 1; k < ker.chain.size(); ++k) CHECK(ker.chain[k] >= ker.chain[k - 1]);
    CHECK_THROWS_AS(shift_counterexample(ShiftKind::RangeStrict, 1), StructuralError);
  }
}
