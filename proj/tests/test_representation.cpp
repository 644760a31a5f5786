#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "oracles.hpp"

using namespace leibniz;

namespace {

Representation conjugate(const Representation& r, const Matrix& p) {
  Matrix pi = inverse(p);
  std::vector<Matrix> rho, lambda;
  for (std::size_t b = 0; b < r.algebra().dim(); ++b) {
    rho.push_back(p * r.rho(b) * pi);
    lambda.push_back(p * r.lambda(b) * pi);
  }
  return Representation(r.algebra(), rho, lambda);
}

}  // namespace

TEST_CASE("catalog representations satisfy the axioms per the oracle") {
  for (const auto& [name, rep] : catalog::representations()) {
    CAPTURE(name);
    CHECK(oracle::axiom_failures(rep.algebra(), rep.action()) == 0);
    CHECK(axiom_violations(rep.algebra(), rep.action()).empty());
  }
}

TEST_CASE("broken actions are rejected naming the axiom") {
  Sl2Triple t = sl2_irrep_rho(2);
  std::vector<Matrix> rho{t.e, t.f, t.h};
  std::vector<Matrix> lambda{t.e, t.f, t.h};  // lambda = +rho is not allowed
  CHECK_THROWS_WITH_AS(Representation(sl2_algebra(), rho, lambda), doctest::Contains("axiom ("), RepresentationError);
  BimoduleAction act{3, rho, lambda};
  CHECK(axiom_violations(sl2_algebra(), act).size() > 0);
  CHECK(oracle::axiom_failures(sl2_algebra(), act) > 0);
}

TEST_CASE("shape mismatch") {
  std::vector<Matrix> rho(3, Matrix(2, 2)), lambda(2, Matrix(2, 2));
  CHECK_THROWS_AS(Representation(sl2_algebra(), rho, lambda), RepresentationError);
}

TEST_CASE("irreducibility of the sl2 family against the envelope oracle") {
  for (std::size_t m = 0; m <= 5; ++m)
    for (Variant v : {Variant::zero_lambda, Variant::anti_symmetric}) {
      CAPTURE(m);
      Representation r = sl2_leibniz_irrep(m, v);
      std::vector<oracle::Mat> ops;
      for (const auto& o : r.operators()) ops.push_back(oracle::to_mat(o));
      Irreducibility irr = irreducibility(r);
      CHECK(irr.envelope_dim == oracle::envelope_dim(ops, m + 1));
      CHECK(irr.kind == Irreducibility::Kind::abs_irreducible);
    }
}

TEST_CASE("direct sums are reducible with an invariant witness") {
  Representation r = direct_sum(sl2_leibniz_irrep(1, Variant::zero_lambda), sl2_leibniz_irrep(2, Variant::zero_lambda));
  Irreducibility irr = irreducibility(r);
  CHECK(irr.kind == Irreducibility::Kind::reducible);
  REQUIRE(irr.witness.has_value());
  CHECK(invariant_subspace_check(r, *irr.witness));
  CHECK(irr.witness->dim() > 0);
  CHECK(irr.witness->dim() < 5);
}

TEST_CASE("trivial module of dimension 2 is reducible") {
  Representation r = Representation::zero(sl2_algebra(), 2);
  CHECK(irreducibility(r).kind == Irreducibility::Kind::reducible);
}

TEST_CASE("from_lie_rep") {
  Sl2Triple t = sl2_irrep_rho(2);
  // phi = -rho gives a Lie homomorphism for the right action.
  std::vector<Matrix> phi{-t.e, -t.f, -t.h};
  CHECK(from_lie_rep(sl2_algebra(), phi, Variant::anti_symmetric) == sl2_leibniz_irrep(2, Variant::anti_symmetric));
  CHECK(from_lie_rep(sl2_algebra(), phi, Variant::zero_lambda) == sl2_leibniz_irrep(2, Variant::zero_lambda));
  std::vector<Matrix> wrong{t.e, t.f, t.h};
  CHECK_THROWS_AS(from_lie_rep(sl2_algebra(), wrong, Variant::zero_lambda), RepresentationError);
}

TEST_CASE("adjoint representation matches multiplication") {
  for (const auto& [name, alg, semisimple] : catalog::algebras()) {
    CAPTURE(name);
    Representation a = adjoint_rep(alg);
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      CHECK(a.rho(b) == right_multiplication(alg, unit_vector(alg.dim(), b)));
      CHECK(a.lambda(b) == left_multiplication(alg, unit_vector(alg.dim(), b)));
    }
  }
}

TEST_CASE("dichotomy on irreducible catalog representations") {
  for (const auto& [name, rep] : catalog::representations()) {
    if (irreducibility(rep).kind != Irreducibility::Kind::abs_irreducible) continue;
    CAPTURE(name);
    Subspace s = sym_span(rep);
    CHECK(invariant_subspace_check(rep, s));
    CHECK((s.is_zero() || s.is_full()));
    DichotomyVerdict v = dichotomy_classify(rep);
    for (std::size_t b = 0; b < rep.algebra().dim(); ++b) {
      if (v.variant == Variant::anti_symmetric) CHECK((rep.lambda(b) + rep.rho(b)).is_zero());
      else CHECK(rep.lambda(b).is_zero());
    }
  }
  CHECK_THROWS_AS(dichotomy_classify(example_5_5()), PreconditionError);
}

TEST_CASE("equivalence under random conjugation") {
  oracle::Gen g(29);
  for (std::size_t m = 1; m <= 4; ++m)
    for (Variant v : {Variant::zero_lambda, Variant::anti_symmetric}) {
      CAPTURE(m);
      Representation r = sl2_leibniz_irrep(m, v);
      Representation c = conjugate(r, g.invertible(m + 1));
      Equivalence e = equivalence(r, c);
      REQUIRE(e.kind == Equivalence::Kind::equivalent);
      REQUIRE(e.intertwiner.has_value());
      const Matrix& phi = *e.intertwiner;
      CHECK(invertible(phi));
      for (std::size_t b = 0; b < 3; ++b) {
        CHECK(phi * r.rho(b) == c.rho(b) * phi);
        CHECK(phi * r.lambda(b) == c.lambda(b) * phi);
      }
    }
}

TEST_CASE("the two variants are inequivalent") {
  for (std::size_t m = 1; m <= 4; ++m)
    CHECK(equivalence(sl2_leibniz_irrep(m, Variant::zero_lambda), sl2_leibniz_irrep(m, Variant::anti_symmetric)).kind ==
          Equivalence::Kind::not_equivalent);
  CHECK(equivalence(sl2_leibniz_irrep(1, Variant::zero_lambda), sl2_leibniz_irrep(2, Variant::zero_lambda)).kind ==
        Equivalence::Kind::not_equivalent);
}

TEST_CASE("restriction and subrepresentation") {
  LeibnizAlgebra alg = simple_ext_algebra(6);
  Representation r = classify_extension_irreps(6, 2)[1];
  Subspace s = levi_subalgebra(alg);
  Representation res = restrict(r, s);
  CHECK(res.algebra() == sl2_algebra());
  CHECK(res == sl2_leibniz_irrep(2, Variant::anti_symmetric));

  Representation sum = example_5_5();
  Subspace first = Subspace::span({unit_vector(5, 0), unit_vector(5, 1), unit_vector(5, 2)}, 5);
  CHECK(subrepresentation(sum, first) == sl2_leibniz_irrep(2, Variant::zero_lambda));
  CHECK_THROWS_AS(subrepresentation(sum, Subspace::span({unit_vector(5, 0)}, 5)), RepresentationError);
}
