#include "helpers.hpp"

#include "cstar/errors.hpp"
#include "cstar/module.hpp"
#include "cstar/random.hpp"

using namespace cstar;
using namespace cstar::test;

TEST_SUITE("module") {
  TEST_CASE("span of a unit vector in A^2") {
    const AlgebraShape s({2});
    const Submodule n = submodule_span(s, 2, {ModuleVector::unit(s, 2, 0)});
    CHECK(n.k0_class() == k0({2}));
    CHECK(n.ambient_class() == k0({4}));
    CHECK(orth_complement(n).k0_class() == k0({2}));
  }

  TEST_CASE("full module over two blocks") {
    const AlgebraShape s({2, 3});
    const Submodule f = Submodule::full(s, free_module_class(s, 1));
    CHECK(f.k0_class() == k0({2, 3}));
    CHECK(f.complex_dim() == 13);
  }

  TEST_CASE("rank-one projection generates a proper submodule") {
    const AlgebraShape s({2});
    ModuleVector x = ModuleVector::zero(s, 1);
    x.entries[0] = AlgebraElement::matrix_unit(s, 0, 0, 0);
    const Submodule n = submodule_span(s, 1, {x});
    CHECK(n.k0_class() == k0({1}));
    CHECK(n.complex_dim() == 2);
  }

  TEST_CASE("complement classes add up") {
    const AlgebraShape s({1, 2});
    for (int i = 0; i < 10; ++i) {
      Rng rng(5, i);
      const int m = rng.integer(1, 3);
      std::vector<ModuleVector> gens;
      for (int g = 0; g < rng.integer(1, 2); ++g) {
        ModuleVector v = ModuleVector::zero(s, m);
        for (auto& e : v.entries) e = AlgebraElement(s, {random_matrix(rng, 1, 1), random_matrix(rng, 2, 2)});
        gens.push_back(v);
      }
      const Submodule n = submodule_span(s, m, gens);
      CHECK(n.k0_class() + orth_complement(n).k0_class() == free_module_class(s, m));
    }
  }

  TEST_CASE("sum and intersection dimension identity") {
    const AlgebraShape s({2});
    for (int i = 0; i < 10; ++i) {
      Rng rng(6, i);
      auto random_sub = [&] {
        ModuleVector v = ModuleVector::zero(s, 3);
        for (auto& e : v.entries) e = AlgebraElement(s, {random_matrix(rng, 2, 2)});
        return submodule_span(s, 3, {v});
      };
      const Submodule a = random_sub();
      const Submodule b = random_sub();
      const auto [sum, cap] = sum_and_intersection(a, b);
      CHECK(sum.k0_class() + cap.k0_class() == a.k0_class() + b.k0_class());
      CHECK(contains(sum, a));
      CHECK(contains(a, cap));
    }
  }

  TEST_CASE("non-invariant coordinate subspaces are rejected") {
    const AlgebraShape s({2});
    Matrix v = Matrix::Zero(4, 1);
    v(0, 0) = 1.0;
    CHECK_THROWS_AS(Submodule::from_coordinate_subspace(s, free_module_class(s, 1), Subspace::span(v)),
                    InvarianceError);
  }

  TEST_CASE("nested splitting") {
    const AlgebraShape s({1});
    auto span_cols = [&](const Matrix& c) {
      return Submodule(s, {Subspace::span(c)});
    };
    const Submodule m1 = span_cols(mat({{1}, {0}, {0}}));
    const Submodule m2 = span_cols(mat({{1, 0}, {0, 1}, {0, 0}}));
    const Submodule m1c = span_cols(mat({{1, 0}, {1, 0}, {0, 1}}));
    const DecompositionWitness w = split_nested_submodule(m1, m2, m1c);
    CHECK(decomposes(w, m2));
    CHECK(w.second.k0_class() == k0({1}));
    CHECK_FALSE(w.orthogonal);
    CHECK(split_nested_submodule(m1, m2, orth_complement(m1)).orthogonal);
    CHECK_THROWS_AS(split_nested_submodule(m2, m1, orth_complement(m2)), UnmetHypothesis);
    CHECK_THROWS_AS(split_nested_submodule(m1, m2, m2), UnmetHypothesis);
  }

  TEST_CASE("isomorphism is K0 equality") {
    const AlgebraShape s({2});
    const Submodule a = submodule_span(s, 2, {ModuleVector::unit(s, 2, 0)});
    const Submodule b = submodule_span(s, 2, {ModuleVector::unit(s, 2, 1)});
    CHECK(isomorphic(a, b));
    CHECK_FALSE(same_submodule(a, b));
    CHECK(are_complements(a, b));
  }
}
