// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "cli_cases.hpp"
#include "leibniz/io.hpp"
#include "oracles.hpp"

using namespace leibniz;

namespace {

class Check {
 public:
  void require(bool cond, const std::string& what) {
    ++count_;
    if (!cond && first_failure_.empty()) first_failure_ = what;
  }
  bool ok() const { return first_failure_.empty(); }
  std::size_t count() const { return count_; }
  const std::string& failure() const { return first_failure_; }
  std::string note;

 private:
  std::size_t count_ = 0;
  std::string first_failure_;
};

std::string str(std::size_t v) { return std::to_string(v); }

bool same_action_on(const Representation& r, std::size_t b, const Matrix& m) { return r.lambda(b) == m; }

// 1. sl2 irreducible family.
void sl2_family(Check& c) {
  for (std::size_t m = 0; m <= 8; ++m) {
    Representation z = sl2_leibniz_irrep(m, Variant::zero_lambda);
    Representation a = sl2_leibniz_irrep(m, Variant::anti_symmetric);
    for (const auto* r : {&z, &a}) {
      const std::string tag = "m=" + str(m) + " " + (r == &z ? "zero_lambda" : "anti_symmetric");
      c.require(oracle::axiom_failures(r->algebra(), r->action()) == 0, tag + ": axioms");
      if (m >= 1) {
        Irreducibility irr = irreducibility(*r);
        c.require(irr.envelope_dim == (m + 1) * (m + 1), tag + ": envelope dim");
        c.require(irr.kind == Irreducibility::Kind::abs_irreducible, tag + ": abs_irreducible");
        DichotomyVerdict d = dichotomy_classify(*r);
        c.require(d.variant == (r == &z ? Variant::zero_lambda : Variant::anti_symmetric), tag + ": dichotomy branch");
      }
    }
    if (m >= 1) c.require(equivalence(z, a).kind == Equivalence::Kind::not_equivalent, "m=" + str(m) + ": variants equivalent");
  }
}

// 2. Twelve identities.
void twelve_identities(Check& c) {
  std::vector<Representation> reps;
  for (std::size_t m = 0; m <= 8; ++m)
    for (Variant v : {Variant::zero_lambda, Variant::anti_symmetric}) reps.push_back(sl2_leibniz_irrep(m, v));
  for (std::size_t n = 5; n <= 9; ++n)
    for (std::size_t m = 0; m <= 4; ++m)
      for (const auto& r : classify_extension_irreps(n, m)) reps.push_back(restrict(r, levi_subalgebra(r.algebra())));
  for (std::size_t i = 0; i < reps.size(); ++i)
    c.require(check_sl2_constraints(reps[i]).all_hold(), "constructed rep " + str(i) + " fails an identity");

  for (std::size_t m = 2; m <= 8; ++m) {
    Representation r = sl2_leibniz_irrep(m, Variant::zero_lambda);
    BimoduleAction act = r.action();
    act.lambda[1] = r.rho(1);
    Sl2ConstraintReport rep = check_sl2_constraints(sl2_algebra(), act);
    c.require(!rep.holds[11], "m=" + str(m) + ": identity (12) not flagged for lambda_f = rho_f");
  }
  // lambda = a rho: the identities select a + a^2 = 0.
  for (std::size_t m = 1; m <= 4; ++m)
    for (long num = -6; num <= 6; ++num) {
      Rational a = Rational(num) / 2;
      BimoduleAction act = sl2_leibniz_irrep(m, Variant::zero_lambda).action();
      for (std::size_t b = 0; b < 3; ++b) act.lambda[b] = a * act.rho[b];
      c.require(check_sl2_constraints(sl2_algebra(), act).all_hold() == (a * a + a == 0),
                "m=" + str(m) + " a=" + to_string(a) + ": a + a^2 selection");
    }
  c.note = "injection checked for m=2..8; at m=1 rho_f^2=0 so (12) holds and (4,5,10,11) fail instead";
}

// 3. Extension forcing.
void extension_forcing(Check& c) {
  std::vector<std::string> linear_even;
  for (std::size_t n = 5; n <= 9; ++n)
    for (std::size_t m = 1; m <= 4; ++m) {
      const std::string tag = "n=" + str(n) + " m=" + str(m);
      ExtensionSolution s = extension_rep_solve(n, m);
      c.require(s.status == ExtensionSolution::Status::forced, tag + ": not forced (" + s.reason + ")");
      c.require(s.free_parameters == 0, tag + ": free parameters");
      c.require(s.forced_rho_I.size() == n - 3 && s.forced_lambda_I.size() == n - 3, tag + ": matrix count");
      for (const auto& x : s.forced_rho_I) c.require(x.is_zero(), tag + ": rho_I nonzero");
      for (const auto& x : s.forced_lambda_I) c.require(x.is_zero(), tag + ": lambda_I nonzero");
      if (n % 2 == 1) {
        c.require(!s.quadratic_stage_used && s.linear_rho_params == 0, tag + ": odd n needed the quadratic stage");
      } else {
        const bool family = (n - 4) / 2 <= m;
        c.require(s.quadratic_stage_used == family, tag + ": stage mismatch");
        c.require(s.middle_weight_diagonal.has_value() == family, tag + ": middle weight profile");
        if (!family) linear_even.push_back("(" + str(n) + "," + str(m) + ")");
      }
    }
  if (!linear_even.empty()) {
    c.note = "even n with (n-4)/2 > m is forced by the linear stage:";
    for (const auto& p : linear_even) c.note += " " + p;
  }
}

// 4. Shape of the classified representations.
void classification_shape(Check& c) {
  for (std::size_t n = 5; n <= 9; ++n)
    for (std::size_t m = 0; m <= 4; ++m)
      for (const auto& r : classify_extension_irreps(n, m)) {
        const std::string tag = "n=" + str(n) + " m=" + str(m);
        for (std::size_t k = 3; k < n; ++k)
          c.require(r.rho(k).is_zero() && r.lambda(k).is_zero(), tag + ": kernel acts");
        std::vector<Matrix> phi{-r.rho(0), -r.rho(1), -r.rho(2)};
        bool hom = true;
        try {
          from_lie_rep(sl2_algebra(), phi, Variant::zero_lambda);
        } catch (const RepresentationError&) {
          hom = false;
        }
        c.require(hom, tag + ": -rho|_S not a Lie homomorphism");
        bool zero = true, anti = true;
        for (std::size_t b = 0; b < 3; ++b) {
          zero = zero && same_action_on(r, b, Matrix(m + 1, m + 1));
          anti = anti && same_action_on(r, b, -r.rho(b));
        }
        c.require(zero || anti, tag + ": lambda|_S outside {0, -rho|_S}");
      }
}

// 5. The 5-dimensional counterexample.
void counterexample(Check& c) {
  Example53 ex = example_5_3();
  const LeibnizAlgebra& a = ex.algebra;
  c.require(check_leibniz(a).empty() && oracle::leibniz_failures(oracle::constants(a)) == 0, "Leibniz identity");
  c.require(is_simple(a).verdict == Tristate::yes, "is_simple != yes");
  Subspace k = leibniz_kernel(a);
  Subspace xy = Subspace::span({unit_vector(5, a.require_index("x")), unit_vector(5, a.require_index("y"))}, 5);
  c.require(k == xy, "kernel != span{x,y}");
  KernelActionCheck nec = complete_reducibility_necessary(ex.adjoint);
  c.require(!nec.holds, "necessary condition holds");
  c.require(nec.which == "lambda" && nec.witness && k.contains(*nec.witness) && nec.action && !nec.action->is_zero(),
            "witness is not a lambda|_I action");
  c.require(decompose(ex.adjoint).verdict == DecompositionResult::Verdict::no_irreducible_decomposition,
            "decompose verdict");
  for (std::size_t i = 0; i < 5; ++i) {
    Subspace cl = ideal_closure(a, {unit_vector(5, i)});
    c.require(cl == k || cl.is_full(), "ideal closure of " + a.basis_names()[i]);
  }
}

// 6. The 3 + 2 block example.
void positive_example(Check& c) {
  for (Variant v1 : {Variant::zero_lambda, Variant::anti_symmetric})
    for (Variant v2 : {Variant::zero_lambda, Variant::anti_symmetric}) {
      const std::string tag = to_string(v1) + "/" + to_string(v2);
      Representation r = example_5_5(v1, v2);
      DecompositionResult res = decompose(r);
      c.require(res.verdict == DecompositionResult::Verdict::decomposed, tag + ": not decomposed");
      if (res.components.size() != 2) {
        c.require(false, tag + ": component count " + str(res.components.size()));
        continue;
      }
      c.require(res.components[0].dim() == 3 && res.components[1].dim() == 2, tag + ": dims");
      c.require(equivalence(subrepresentation(r, res.components[0]), sl2_leibniz_irrep(2, v1)).kind ==
                    Equivalence::Kind::equivalent,
                tag + ": 3-dim block");
      c.require(equivalence(subrepresentation(r, res.components[1]), sl2_leibniz_irrep(1, v2)).kind ==
                    Equivalence::Kind::equivalent,
                tag + ": 2-dim block");
    }
  const Matrix h = example_5_5().rho(2);
  auto sup = support(lambda_f_solutions(h), 5);
  std::vector<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (h(j, j) - h(i, i) == 2) expected.emplace_back(i, j);
  c.require(sup == expected, "lambda_f support");
}

// 7. Structure theory over the catalog.
void structure_suite(Check& c) {
  for (const auto& [name, alg, semisimple] : catalog::algebras()) {
    const std::size_t n = alg.dim();
    c.require(oracle::leibniz_failures(oracle::constants(alg)) == 0, name + ": Leibniz identity");
    for (std::size_t i = 1; i <= 5; ++i)
      for (std::size_t j = 1; i + j <= 6; ++j)
        c.require(lower_central_term(alg, i + j).contains(
                      product_space(alg, lower_central_term(alg, i), lower_central_term(alg, j))),
                  name + ": [L^i,L^j] in L^(i+j)");
    Subspace k = leibniz_kernel(alg);
    c.require(is_ideal(alg, k) && product_space(alg, k, k).is_zero(), name + ": kernel abelian ideal");
    c.require(is_lie(quotient(alg, k).algebra), name + ": quotient not Lie");
    Subspace r = radical(alg);
    c.require(r.contains(k), name + ": radical misses kernel");
    c.require(derived_series(alg, r).terminal_dim == 0, name + ": radical not solvable");
    c.require(is_semisimple(alg) == (r == k), name + ": semisimple iff radical = kernel");
    c.require(!is_nilpotent(alg) || is_solvable(alg), name + ": nilpotent but not solvable");
    Subspace der = derivations(alg), inn = inner_derivations(alg);
    c.require(der.contains(inn), name + ": Inn not in Der");
    for (const auto& d : der.vectors())
      for (const auto& i : inn.vectors()) {
        Matrix dm = Matrix::unflatten(d, n, n), im = Matrix::unflatten(i, n, n);
        c.require(inn.contains(commutator(dm, im).flatten()), name + ": [Der,Inn] not in Inn");
      }
  }
}

// 8. Levi subalgebras.
void levi(Check& c) {
  for (const auto& [name, alg, semisimple] : catalog::algebras()) {
    if (!semisimple) continue;
    Subspace s = levi_subalgebra(alg);
    Subspace k = leibniz_kernel(alg);
    c.require(s.dim() + k.dim() == alg.dim() && subspace_intersect(s, k).is_zero(), name + ": S + I != L");
    c.require(is_subalgebra(alg, s) && is_lie(induced_algebra(alg, s)), name + ": S not a Lie subalgebra");
    if (alg.index_of("e") && alg.index_of("f") && alg.index_of("h")) {
      Subspace efh = Subspace::span({unit_vector(alg.dim(), alg.require_index("e")),
                                     unit_vector(alg.dim(), alg.require_index("f")),
                                     unit_vector(alg.dim(), alg.require_index("h"))},
                                    alg.dim());
      c.require(s == efh, name + ": S != span{e,f,h}");
    }
  }
}

// 9. Dichotomy.
void dichotomy(Check& c) {
  std::size_t seen = 0;
  for (const auto& [name, rep] : catalog::representations()) {
    if (irreducibility(rep).kind != Irreducibility::Kind::abs_irreducible) continue;
    ++seen;
    Subspace s = sym_span(rep);
    c.require(invariant_subspace_check(rep, s), name + ": sym span not invariant");
    c.require(s.is_zero() || s.is_full(), name + ": sym span proper");
    bool anti = true, zero = true;
    for (std::size_t b = 0; b < rep.algebra().dim(); ++b) {
      anti = anti && (rep.lambda(b) + rep.rho(b)).is_zero();
      zero = zero && rep.lambda(b).is_zero();
    }
    c.require(s.is_zero() ? anti : zero, name + ": conclusion does not match sym span");
  }
  c.note = str(seen) + " irreducible catalog representations";
}

// 10. IO and CLI.
void io_cli(Check& c) {
  for (const auto& [name, alg, semisimple] : catalog::algebras()) {
    std::string text = serialize_algebra(alg, name);
    c.require(parse_algebra(text) == alg && serialize_algebra(parse_algebra(text), name) == text, name + ": algebra round trip");
  }
  for (const auto& [name, rep] : catalog::representations()) {
    std::string text = serialize_representation(rep);
    c.require(parse_representation(text) == rep && serialize_representation(parse_representation(text)) == text,
              name + ": representation round trip");
  }
  for (const auto& cs : cli_cases::cases()) {
    cli_cases::Outcome o = cli_cases::run(cs.args);
    c.require(o.code == cs.code, std::string(cs.name) + ": exit code " + str(static_cast<std::size_t>(o.code)));
    auto stored = cli_cases::golden(cs.name, o);
    c.require(stored && *stored == cli_cases::golden_text(o), std::string(cs.name) + ": golden mismatch");
    c.require(cli_cases::run(cs.args).out == o.out, std::string(cs.name) + ": nondeterministic");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"sl2 irreducible family: axioms, envelope (m+1)^2, two inequivalent variants", sl2_family},
      {"twelve identities: no failures on constructed reps, (12) flagged for lambda_f = rho_f", twelve_identities},
      {"extension forcing: kernel acts by zero for n=5..9, m=1..4", extension_forcing},
      {"classified irreps: rho|_I = lambda|_I = 0, rho|_S = -phi, lambda|_S in {0, -rho|_S}", classification_shape},
      {"5-dim counterexample: simple, kernel span{x,y}, lambda|_I != 0, no irreducible split", counterexample},
      {"3+2 block example: splits 3 + 2, lambda_f support, blocks equivalent to irreps", positive_example},
      {"structure properties over the catalog", structure_suite},
      {"Levi: S + I = L, S Lie subalgebra, S = span{e,f,h}", levi},
      {"dichotomy: sym span 0 or M with matching lambda", dichotomy},
      {"IO round trip and CLI golden reports", io_cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    std::string error;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = c.ok() && error.empty();
    if (!ok) ++failed;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << c.count() << " checks)";
    if (!c.ok()) std::cout << " first failure: " << c.failure();
    if (!error.empty()) std::cout << " exception: " << error;
    if (!c.note.empty()) std::cout << " [" << c.note << "]";
    std::cout << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
