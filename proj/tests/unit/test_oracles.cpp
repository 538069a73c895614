// Property checks against independent computations: dense realizations,
// brute-force closure under matrix units, and direct power ranks.

#include "helpers.hpp"

#include <cmath>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "cstar/banach.hpp"
#include "cstar/drazin.hpp"
#include "cstar/fredholm.hpp"
#include "cstar/probes.hpp"
#include "cstar/random.hpp"

using namespace cstar;
using namespace cstar::test;

namespace {

Index dense_rank(const Matrix& m) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(1e-9);
  return lu.rank();
}

double dense_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

AlgebraElement random_element(Rng& rng, const AlgebraShape& s) {
  std::vector<Matrix> blocks;
  for (int n : s.block_sizes()) blocks.push_back(random_matrix(rng, n, n));
  return AlgebraElement(s, std::move(blocks));
}

// dim_C of x·A summed over generators, by closing under every matrix unit.
Index closure_dim(const AlgebraShape& s, const std::vector<ModuleVector>& gens) {
  std::vector<Vector> cols;
  for (const auto& g : gens) {
    for (const auto& e : algebra_generators(s)) cols.push_back(coordinates(g.times(e)));
  }
  Matrix m(cols.front().size(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Index>(j)) = cols[j];
  return dense_rank(m);
}

Matrix realization_power(const AdjointableMap& f, int k) {
  Matrix r = Matrix::Identity(f.realization().rows(), f.realization().cols());
  for (int i = 0; i < k; ++i) r = f.realization() * r;
  return r;
}

// rank of F^k with singular values judged against ||F||^k
Index power_rank(const AdjointableMap& f, int k) {
  const Matrix p = realization_power(f, k);
  const double floor = 1e-9 * std::pow(std::max(1.0, dense_norm(f.realization())), k);
  const RealVector sv = Eigen::JacobiSVD<Matrix>(p).singularValues();
  return (sv.array() > floor).count();
}

int stabilization_by_powers(const AdjointableMap& f) {
  int n = 0;
  while (power_rank(f, n) != power_rank(f, n + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("submultiplicativity against dense norms") {
    const AlgebraShape s({2, 3});
    for (int i = 0; i < 20; ++i) {
      Rng rng(41, i);
      const AlgebraElement a = random_element(rng, s);
      const AlgebraElement b = random_element(rng, s);
      CHECK(a.norm() == doctest::Approx(dense_norm(a.dense())).epsilon(1e-12));
      CHECK(dense_norm((a * b).dense()) <= dense_norm(a.dense()) * dense_norm(b.dense()) * (1 + 1e-12));
    }
  }
}

TEST_SUITE("module") {
  TEST_CASE("inner product is hermitian") {
    const AlgebraShape s({2});
    Rng rng(42, 0);
    ModuleVector x = ModuleVector::zero(s, 2), y = ModuleVector::zero(s, 2);
    for (int i = 0; i < 2; ++i) {
      x.entries[i] = random_element(rng, s);
      y.entries[i] = random_element(rng, s);
    }
    CHECK(max_abs_difference(inner_product(x, y).adjoint(), inner_product(y, x)) < 1e-14);
  }

  TEST_CASE("standard generators span the free module") {
    const AlgebraShape s({1, 2});
    for (int m = 1; m <= 3; ++m) {
      std::vector<ModuleVector> gens;
      for (int i = 0; i < m; ++i) gens.push_back(ModuleVector::unit(s, m, i));
      const Submodule n = submodule_span(s, m, gens);
      CHECK(n.k0_class() == free_module_class(s, m));
      CHECK(n.complex_dim() == closure_dim(s, gens));
    }
  }

  TEST_CASE("rank-one projection in the first block") {
    const AlgebraShape s({2, 3});
    ModuleVector x = ModuleVector::zero(s, 1);
    x.entries[0] = AlgebraElement::matrix_unit(s, 0, 0, 0);
    const Submodule n = submodule_span(s, 1, {x});
    CHECK(n.k0_class() == k0({1, 0}));
    CHECK(n.complex_dim() == closure_dim(s, {x}));
  }

  TEST_CASE("span dimension matches brute-force closure") {
    const AlgebraShape s({1, 2});
    for (int i = 0; i < 20; ++i) {
      Rng rng(43, i);
      const int m = rng.integer(1, 3);
      std::vector<ModuleVector> gens;
      for (int g = rng.integer(1, 2); g > 0; --g) {
        ModuleVector v = ModuleVector::zero(s, m);
        for (auto& e : v.entries) e = random_element(rng, s);
        if (rng.coin()) v = v.times(AlgebraElement::matrix_unit(s, 1, 0, 0));
        gens.push_back(v);
      }
      const Submodule n = submodule_span(s, m, gens);
      CHECK(n.complex_dim() == closure_dim(s, gens));
      CHECK(orth_complement(n).complex_dim() == n.ambient_complex_dim() - n.complex_dim());
    }
  }
}

TEST_SUITE("linmap") {
  TEST_CASE("adjoint reverses products") {
    const AlgebraShape s({2, 3});
    for (int i = 0; i < 10; ++i) {
      Rng rng(44, i);
      const AdjointableMap f = random_map(rng, s, 2, 3);
      const AdjointableMap g = random_map(rng, s, 3, 2);
      CHECK(distance(adjoint(f * g), adjoint(g) * adjoint(f)) < 1e-12 * (1 + f.norm() * g.norm()));
    }
  }

  TEST_CASE("kernel and image dimensions against dense rank") {
    const AlgebraShape s({1, 2});
    for (int i = 0; i < 20; ++i) {
      Rng rng(45, i);
      const AdjointableMap f = random_low_rank_map(rng, s, 3, 3, rng.integer(0, 3));
      const Index r = dense_rank(f.realization());
      CHECK(image(f).complex_dim() == r);
      CHECK(kernel(f).complex_dim() == f.realization().cols() - r);
    }
  }

  TEST_CASE("projection norms are 0 or 1") {
    const AlgebraShape s({2});
    for (int i = 0; i < 10; ++i) {
      Rng rng(46, i);
      const AdjointableMap p = orthogonal_projection(image(random_low_rank_map(rng, s, 3, 3, rng.integer(0, 3))));
      const double n = dense_norm(p.realization());
      CHECK((std::abs(n) < 1e-12 || std::abs(n - 1) < 1e-12));
    }
  }
}

TEST_SUITE("fredholm") {
  TEST_CASE("perturbation by a map of image class (1,0)") {
    const AlgebraShape s({2, 3});
    for (int i = 0; i < 10; ++i) {
      Rng rng(47, i);
      const AdjointableMap t = random_map(rng, s, 2, 2);
      // rank one in the first block, zero in the second
      const AdjointableMap f(s, {random_rank(rng, 4, 4, 1), Matrix::Zero(6, 6)});
      CHECK(image(f).k0_class() == k0({1, 0}));
      CHECK(weyl_perturbation_chain(t, f).identity_holds);
    }
  }

  TEST_CASE("generalized Weyl factors give a generalized Weyl product") {
    const AlgebraShape s({2});
    for (int i = 0; i < 10; ++i) {
      Rng rng(48, i);
      const AdjointableMap d = random_map(rng, s, 2, 2);
      const AdjointableMap f = random_map(rng, s, 2, 2);
      const ProductChainReport r = product_chain(d, f);
      CHECK(r.f_witness.n.is_zero());
      CHECK(r.d_witness.n_tilde.is_zero());
      CHECK(r.product_generalized_weyl);
      const FredholmReport direct = fredholm_report(d * f);
      CHECK(direct.kernel_class == direct.coker_class);
    }
  }

  TEST_CASE("random conformable product chains") {
    const AlgebraShape s({2});
    for (int i = 0; i < 10; ++i) {
      Rng rng(49, i);
      const int m = rng.integer(1, 3), n = rng.integer(1, 3), k = rng.integer(1, 3);
      CHECK(product_chain(random_map(rng, s, k, n), random_map(rng, s, n, m)).identity_holds);
    }
  }

  TEST_CASE("exact sequence per-block alternating sums") {
    const AlgebraShape s({2, 3});
    for (int i = 0; i < 10; ++i) {
      Rng rng(50, i);
      const AdjointableMap f = random_map(rng, s, 2, 3);
      const AdjointableMap g = random_map(rng, s, 2, 2);
      const ExactSequenceReport e = exact_sequence(f, g);
      CHECK(e.alternating_k0_sum.is_zero());
      CHECK(e.max_residual() < 1e-8);
      const FredholmReport rf = fredholm_report(f), rg = fredholm_report(g), rgf = fredholm_report(g * f);
      CHECK(rgf.index == rf.index + rg.index);
    }
  }

  TEST_CASE("commuting polynomials have additive b-index") {
    for (int i = 0; i < 10; ++i) {
      Rng rng(51, i);
      const CommutingPair p = random_commuting_pair(rng, 6);
      const BFredholmCommutingReport r = b_fredholm_commuting_check(p.f, p.d);
      CHECK(r.index_additive);
      CHECK(r.intersections_consistent);
      // stabilization exponent from direct power ranks
      CHECK(r.f.stabilization_exponent == stabilization_by_powers(p.f));
    }
  }
}

TEST_SUITE("drazin") {
  TEST_CASE("ascent against direct power ranks") {
    const AlgebraShape s({1, 2});
    for (int i = 0; i < 20; ++i) {
      Rng rng(52, i);
      const RandomEndomorphism e = random_endomorphism(rng, s, 3);
      CHECK(ascent(e.f) == stabilization_by_powers(e.f));
      CHECK(drazin_inverse(e.f).index == e.expected_index);
    }
  }

  TEST_CASE("duality on random maps over two blocks") {
    const AlgebraShape s({2, 3});
    for (int i = 0; i < 10; ++i) {
      Rng rng(53, i);
      const DualReport d = drazin_dual_check(random_endomorphism(rng, s, 2).f);
      CHECK(d.index == d.adjoint_index);
      CHECK(d.inverse_distance < 1e-9);
    }
  }

  TEST_CASE("nilpotent pair stabilizes at three") {
    const AdjointableMap j = lift(jordan(3));
    const CriterionReport r = commuting_drazin_criterion(j, j);
    CHECK(r.verdict);
    CHECK(r.direct_verdict);
    REQUIRE(r.found.has_value());
  }

  TEST_CASE("criterion on random commuting polynomials") {
    for (int i = 0; i < 10; ++i) {
      Rng rng(54, i);
      const CommutingPair p = random_commuting_pair(rng, 6);
      const CriterionReport r = commuting_drazin_criterion(p.f, p.d);
      CHECK(r.verdict == r.direct_verdict);
    }
  }

  TEST_CASE("Browder witness of the mixed operator") {
    const BrowderWitness w = browder_decomposition(lift(mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 2}})));
    const Submodule line(AlgebraShape::trivial(), {Subspace::span(mat({{0}, {0}, {1}}))});
    CHECK(same_submodule(w.m, line));
    CHECK(w.f1_gamma == doctest::Approx(2.0));
  }

  TEST_CASE("Browder factors of a commuting product") {
    for (int i = 0; i < 10; ++i) {
      Rng rng(55, i);
      const CommutingPair p = random_commuting_pair(rng, 8);
      const CommutingBrowderReport r = commuting_browder_check(p.f, p.d);
      CHECK(r.kernel_identity_holds);
      CHECK(r.f_off_diagonal < 1e-8);
      CHECK(r.d_off_diagonal < 1e-8);
    }
  }
}

TEST_SUITE("banach") {
  TEST_CASE("random generalized Weyl pairs") {
    for (int i = 0; i < 10; ++i) {
      Rng rng(56, i);
      const Index n = rng.integer(2, 5);
      const RegularOperator s = make_regular_orthogonal(random_rank(rng, n, n, rng.integer(0, n)));
      const RegularOperator t = make_regular_orthogonal(random_rank(rng, n, n, rng.integer(0, n)));
      const BanachProductReport p = banach_product(s, t);
      CHECK(p.product_weyl);
      CHECK(*std::max_element(p.sequence.residuals.begin(), p.sequence.residuals.end()) < 1e-8);
      const Index r = dense_rank(s.t * t.t);
      CHECK(p.product.kernel_dim() == n - r);
    }
  }

  TEST_CASE("perturbation dimensions against dense rank") {
    for (int i = 0; i < 10; ++i) {
      Rng rng(57, i);
      const RegularOperator t = make_regular_orthogonal(random_rank(rng, 4, 5, 3));
      const Matrix f = random_rank(rng, 4, 5, 1);
      const BanachPerturbationReport p = banach_perturbation(t, f);
      CHECK(p.perturbed.kernel_dim() == 5 - dense_rank(t.t + f));
    }
  }
}

TEST_SUITE("probes") {
  TEST_CASE("multiplier gamma decreases") {
    double previous = kInfinity;
    for (int n = 1; n <= 12; ++n) {
      const double g = reduced_minimum_modulus(multiplier_family(n));
      CHECK(g < previous);
      previous = g;
    }
  }

  TEST_CASE("left multiplier by the shift") {
    const AdjointableMap f = left_multiplier_family(jordan(4));
    CHECK(reduced_minimum_modulus(f) == doctest::Approx(1.0));
    CHECK(power(f, 4).norm() == 0.0);
    CHECK(reduced_minimum_modulus(power(f, 4)) == kInfinity);
  }

  TEST_CASE("smallest truncation") {
    const FamilyDiagnostic d = family_diagnostic("nonclosed-square", {2});
    CHECK(d.rows[0].gamma_f2 > 0.0);
    CHECK(d.rows[0].delta > 0.0);
    CHECK(d.rows[0].margin_q == doctest::Approx(d.rows[0].delta).epsilon(1e-8));
  }
}
