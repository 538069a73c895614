#include "helpers.hpp"

#include "cstar/errors.hpp"
#include "cstar/probes.hpp"

using namespace cstar;
using namespace cstar::test;

TEST_SUITE("probes") {
  TEST_CASE("multiplier gamma is exact") {
    const FamilyDiagnostic d = family_diagnostic("multiplier", {1, 9});
    REQUIRE(d.rows.size() == 2);
    CHECK(d.rows[0].gamma_f == 0.5);
    CHECK(d.rows[1].gamma_f == 0.1);
    CHECK(d.gamma_exact);
  }

  TEST_CASE("left multiplier keeps the gamma of its symbol") {
    Matrix shift = jordan(4);
    CHECK(reduced_minimum_modulus(left_multiplier_family(shift)) == doctest::Approx(1.0));
    Matrix decay = Matrix::Zero(5, 5);
    for (int i = 0; i < 5; ++i) decay(i, i) = 1.0 / (i + 1);
    CHECK(reduced_minimum_modulus(left_multiplier_family(decay)) == doctest::Approx(0.2));
  }

  TEST_CASE("square of the truncated family degenerates") {
    const FamilyDiagnostic d = family_diagnostic("nonclosed-square", {2, 4, 8});
    CHECK(d.gamma_f2_strictly_decreasing);
    CHECK(d.gamma_f_floor > 0.5);
    for (const auto& row : d.rows) CHECK(row.gamma_f2 == doctest::Approx(1.0 / std::sqrt(row.n * row.n + 1.0)));
  }

  TEST_CASE("unknown families are rejected") {
    CHECK_THROWS_AS(family_diagnostic("nope", {1}), StructuralError);
    CHECK_THROWS_AS(family_diagnostic("multiplier", {}), StructuralError);
  }
}
