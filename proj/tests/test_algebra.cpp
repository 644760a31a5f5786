#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "oracles.hpp"

using namespace leibniz;

namespace {

LeibnizAlgebra two_dim_solvable() {
  return LeibnizAlgebra::from_entries({"a", "b"}, {{"a", "b", {{"b", 1}}}, {"b", "a", {{"b", -1}}}});
}

Subspace span_of(const LeibnizAlgebra& alg, std::initializer_list<const char*> labels) {
  std::vector<Vector> v;
  for (const char* l : labels) v.push_back(unit_vector(alg.dim(), alg.require_index(l)));
  return Subspace::span(v, alg.dim());
}

}  // namespace

TEST_CASE("sl2 basics") {
  LeibnizAlgebra s = sl2_algebra();
  CHECK(s.is_valid());
  CHECK(is_lie(s));
  CHECK(leibniz_kernel(s).is_zero());
  CHECK(bracket(s, unit_vector(3, 0), unit_vector(3, 1)) == unit_vector(3, 2));
}

TEST_CASE("Killing form of sl2 against the trace oracle") {
  LeibnizAlgebra s = sl2_algebra();
  Matrix k = killing_form(s);
  auto c = oracle::constants(s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k(i, j) == oracle::killing(c, i, j));
  CHECK(k(2, 2) == 8);
  CHECK(k(0, 1) == -4);
  CHECK(k(0, 0) == 0);
  CHECK(k(0, 2) == 0);
  CHECK(rank(k) == 3);
}

TEST_CASE("Killing form of the 2-dim solvable algebra is degenerate") {
  CHECK(rank(killing_form(two_dim_solvable())) < 2);
}

TEST_CASE("invalid algebras are detected and reported") {
  // [a,a] = a, [a,b] = b: on (a,a,a) the left side is a, the right side 2a.
  LeibnizAlgebra bad = LeibnizAlgebra::from_entries({"a", "b"}, {{"a", "a", {{"a", 1}}}, {"a", "b", {{"b", 1}}}});
  CHECK_FALSE(bad.is_valid());
  CHECK(bad.violations().size() == oracle::leibniz_failures(oracle::constants(bad)));
  CHECK_THROWS_AS(leibniz_kernel(bad), InvalidAlgebra);
}

TEST_CASE("from_entries rejects duplicates and unknown labels") {
  CHECK_THROWS_WITH_AS(LeibnizAlgebra::from_entries({"e", "f"}, {{"e", "f", {}}, {"e", "f", {}}}),
                       doctest::Contains("[e,f]"), InvalidAlgebra);
  CHECK_THROWS_AS(LeibnizAlgebra::from_entries({"e"}, {{"e", "z", {}}}), InvalidAlgebra);
}

TEST_CASE("catalog: identity, kernel and Lie quotient") {
  for (const auto& [name, alg, semisimple] : catalog::algebras()) {
    CAPTURE(name);
    auto c = oracle::constants(alg);
    CHECK(oracle::leibniz_failures(c) == 0);
    CHECK(check_leibniz(alg).empty());
    Subspace k = leibniz_kernel(alg);
    CHECK(k.dim() == oracle::kernel_dim(c));
    CHECK(is_ideal(alg, k));
    CHECK(product_space(alg, k, k).is_zero());
    CHECK(product_space(alg, Subspace::full(alg.dim()), k).is_zero());
    CHECK(is_lie(quotient(alg, k).algebra));
  }
}

TEST_CASE("catalog: semisimplicity") {
  for (const auto& [name, alg, semisimple] : catalog::algebras()) {
    CAPTURE(name);
    Subspace r = radical(alg);
    CHECK(r.contains(leibniz_kernel(alg)));
    CHECK(is_ideal(alg, r));
    CHECK(is_semisimple(alg) == semisimple);
    CHECK(is_semisimple(alg) == (r == leibniz_kernel(alg)));
  }
}

TEST_CASE("radical of sl2 plus a line is the line") {
  LeibnizAlgebra a = direct_sum(sl2_algebra(), LeibnizAlgebra::abelian(1));
  Subspace r = radical(a);
  CHECK(r.dim() == 1);
  CHECK(r.contains(unit_vector(4, 3)));
  CHECK(is_simple(a).verdict == Tristate::no);
}

TEST_CASE("simplicity verdicts") {
  CHECK(is_simple(sl2_algebra()).verdict == Tristate::yes);
  for (std::size_t n = 5; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(is_simple(simple_ext_algebra(n)).verdict == Tristate::yes);
  }
  CHECK(is_simple(example_5_3().algebra).verdict == Tristate::yes);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(is_simple(LeibnizAlgebra::abelian(n)).verdict == Tristate::no);
  CHECK(is_simple(two_dim_solvable()).verdict == Tristate::no);
}

TEST_CASE("five-dimensional simple algebra: kernel and ideals") {
  LeibnizAlgebra a = example_5_3().algebra;
  Subspace k = leibniz_kernel(a);
  CHECK(k == span_of(a, {"x", "y"}));
  for (std::size_t i = 0; i < 5; ++i) {
    Subspace c = ideal_closure(a, {unit_vector(5, i)});
    CHECK((c == k || c.is_full()));
  }
}

TEST_CASE("five-dimensional simple algebra is simple_ext_algebra(5) up to renaming") {
  LeibnizAlgebra a = example_5_3().algebra;
  LeibnizAlgebra b = simple_ext_algebra(5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(a.product(i, j) == b.product(i, j));
}

TEST_CASE("series") {
  SeriesReport lc = lower_central_series(sl2_algebra());
  CHECK(lc.terminal_dim == 3);
  CHECK_FALSE(is_solvable(sl2_algebra()));
  CHECK(is_nilpotent(LeibnizAlgebra::abelian(2)));
  CHECK(is_solvable(two_dim_solvable()));
  CHECK_FALSE(is_nilpotent(two_dim_solvable()));
  for (const auto& [name, alg, semisimple] : catalog::algebras()) {
    CAPTURE(name);
    if (is_nilpotent(alg)) CHECK(is_solvable(alg));
    for (std::size_t i = 1; i <= 5; ++i)
      for (std::size_t j = 1; i + j <= 6; ++j) {
        Subspace prod = product_space(alg, lower_central_term(alg, i), lower_central_term(alg, j));
        CHECK(lower_central_term(alg, i + j).contains(prod));
      }
  }
}

TEST_CASE("derivations") {
  for (const auto& [name, alg, semisimple] : catalog::algebras()) {
    CAPTURE(name);
    Subspace der = derivations(alg);
    Subspace inn = inner_derivations(alg);
    CHECK(der.contains(inn));
    CHECK(check_inn_ideal(alg));
  }
  CHECK(derivations(sl2_algebra()).dim() == 3);
  CHECK(derivations(LeibnizAlgebra::abelian(2)).dim() == 4);
}

TEST_CASE("Levi subalgebra") {
  for (const auto& [name, alg, semisimple] : catalog::algebras()) {
    if (!semisimple) continue;
    CAPTURE(name);
    Subspace s = levi_subalgebra(alg);
    Subspace k = leibniz_kernel(alg);
    CHECK(s.dim() + k.dim() == alg.dim());
    CHECK(subspace_intersect(s, k).is_zero());
    CHECK(is_subalgebra(alg, s));
    CHECK(is_lie(induced_algebra(alg, s)));
    if (alg.index_of("e")) CHECK(s == span_of(alg, {"e", "f", "h"}));
  }
  CHECK_THROWS_AS(levi_subalgebra(LeibnizAlgebra::abelian(2)), PreconditionError);
}

TEST_CASE("invariants survive a random change of basis") {
  oracle::Gen g(23);
  for (const auto& [name, alg, semisimple] : catalog::algebras()) {
    if (alg.dim() > 6) continue;
    CAPTURE(name);
    LeibnizAlgebra b = change_basis(alg, g.invertible(alg.dim()));
    CHECK(b.is_valid());
    CHECK(leibniz_kernel(b).dim() == leibniz_kernel(alg).dim());
    CHECK(radical(b).dim() == radical(alg).dim());
    CHECK(is_semisimple(b) == is_semisimple(alg));
    CHECK(derivations(b).dim() == derivations(alg).dim());
    CHECK(is_simple(b).verdict == is_simple(alg).verdict);
  }
}
