#include "helpers.hpp"

#include <cmath>

#include "cstar/geometry.hpp"
#include "cstar/probes.hpp"

using namespace cstar;
using namespace cstar::test;

namespace {
Subspace line(double theta) { return Subspace::span(mat({{std::cos(theta)}, {std::sin(theta)}})); }
}

TEST_SUITE("geometry") {
  TEST_CASE("orthogonal lines") {
    const GeometryReport r = closed_sum_report(line(0), line(M_PI / 2), 1, 200);
    CHECK(r.c0 == doctest::Approx(0.0));
    CHECK(r.delta == doctest::Approx(1.0));
    CHECK(r.bound_c == doctest::Approx(2.0));
    CHECK(min_modulus_restricted(line(0), line(M_PI / 2)) == doctest::Approx(1.0));
    CHECK(r.inequality_holds);
  }

  TEST_CASE("lines at angle 0.3") {
    const GeometryReport r = closed_sum_report(line(0), line(0.3), 1, 500);
    CHECK(r.c0 == doctest::Approx(std::cos(0.3)));
    CHECK(r.c0_sup == doctest::Approx(std::cos(0.3)));
    CHECK(r.delta == doctest::Approx(std::sin(0.3)));
    CHECK(r.identity_residual < 1e-12);
    CHECK(r.violations == 0);
  }

  TEST_CASE("nearly parallel lines") {
    const GeometryReport r = closed_sum_report(line(0), line(1e-3), 1, 500);
    CHECK(r.bound_c == doctest::Approx(1001.0).epsilon(1e-3));
    CHECK(r.adversarial_ratio <= r.bound_c);
    CHECK(r.inequality_holds);
  }

  TEST_CASE("shared line is reduced away") {
    const Subspace m = Subspace::span(mat({{1, 0}, {0, 1}, {0, 0}}));
    const Subspace n = Subspace::span(mat({{1, 0}, {0, 1}, {0, 1}}));
    const GeometryReport r = closed_sum_report(m, n, 1, 200);
    CHECK(r.reduced);
    CHECK(r.intersection_dim == 1);
  }

  TEST_CASE("Bouldin with the identity") {
    const AdjointableMap id = lift(Matrix::Identity(2, 2));
    const BouldinReport r = bouldin_criterion(id, id);
    CHECK(r.k.is_zero());
    CHECK(r.margin_p == doctest::Approx(1.0));
    CHECK(r.verdicts_agree);
  }

  TEST_CASE("Bouldin with a projection") {
    const AdjointableMap p = lift(mat({{1, 0}, {0, 0}}));
    const BouldinReport r = bouldin_criterion(p, p);
    CHECK(r.margin_p == doctest::Approx(1.0));
    CHECK(r.margin_q == doctest::Approx(1.0));
    CHECK(r.verdicts_agree);
    CHECK(r.bridge_agrees);
  }

  TEST_CASE("truncated family margins decrease") {
    double previous = kInfinity;
    for (int n : {2, 4, 8}) {
      const AdjointableMap f = nonclosed_square_family(n);
      const BouldinReport r = bouldin_criterion(f, f);
      CHECK(r.margin_q < previous);
      CHECK(r.closed_sum_delta == doctest::Approx(r.margin_q).epsilon(1e-8));
      previous = r.margin_q;
    }
  }
}
