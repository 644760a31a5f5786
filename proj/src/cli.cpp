#include "leibniz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "leibniz/decomposition.hpp"
#include "leibniz/io.hpp"
#include "leibniz/sl2.hpp"

namespace leibniz {

namespace {

struct Input {
  std::string text;
  std::filesystem::path base_dir;
};

Input read_input(const std::string& path, std::istream& in) {
  std::stringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return {buf.str(), std::filesystem::current_path()};
  }
  std::ifstream f(path);
  if (!f) throw ParseError(path + ": cannot open file");
  buf << f.rdbuf();
  return {buf.str(), std::filesystem::path(path).parent_path()};
}

// Algebra commands also accept a representation file and use its algebra.
LeibnizAlgebra load_algebra(const std::string& path, std::istream& in) {
  Input input = read_input(path, in);
  Json j = parse_json(input.text);
  if (j.is_object() && j.contains("module_dim")) return rep_data_from_json(j, input.base_dir).algebra;
  return algebra_from_json(j);
}

Representation to_representation(RepData data) {
  if (data.algebra.dim() == 0) return Representation::zero(std::move(data.algebra), data.action.module_dim);
  return Representation(std::move(data.algebra), std::move(data.action.rho), std::move(data.action.lambda));
}

Representation load_rep(const std::string& path, std::istream& in) {
  Input input = read_input(path, in);
  return to_representation(parse_rep_data(input.text, input.base_dir));
}

Json basis_json(const LeibnizAlgebra& alg, const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.vectors()) out.push_back(vector_to_json(alg, v));
  return out;
}

Json module_basis_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.vectors()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    out.push_back(std::move(row));
  }
  return out;
}

Json dims(const std::vector<Subspace>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }
bool is_flat_array(const Json& j) { return j.is_array() && std::all_of(j.begin(), j.end(), is_scalar); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string flat_text(const Json& j) {
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
  return s + "]";
}

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        out << pad << key << ": " << scalar_text(value) << "\n";
      } else if (value.empty()) {
        out << pad << key << ": " << (value.is_array() ? "[]" : "{}") << "\n";
      } else if (is_flat_array(value)) {
        out << pad << key << ": " << flat_text(value) << "\n";
      } else {
        out << pad << key << ":\n";
        render(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_scalar(item)) {
        out << pad << "- " << scalar_text(item) << "\n";
      } else if (is_flat_array(item)) {
        out << pad << "- " << flat_text(item) << "\n";
      } else {
        out << pad << "-\n";
        render(item, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

struct Context {
  std::istream& in;
  std::ostream& out;
  bool json = false;

  void report(const std::string& command, const Json& payload) const {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    for (const auto& [k, v] : payload.items()) j[k] = v;
    if (json) {
      out << j.dump(2) << "\n";
    } else {
      render(j, out, 0);
    }
  }
};

Json algebra_check(const LeibnizAlgebra& alg) {
  Json p;
  p["dim"] = alg.dim();
  p["leibniz"] = alg.is_valid();
  p["lie"] = alg.is_valid() && is_lie(alg);
  if (alg.is_valid()) {
    p["kernel_dim"] = leibniz_kernel(alg).dim();
  } else {
    p["kernel_dim"] = nullptr;
  }
  Json bad = Json::array();
  for (const auto& t : alg.violations())
    bad.push_back({alg.basis_names()[t[0]], alg.basis_names()[t[1]], alg.basis_names()[t[2]]});
  p["violations"] = std::move(bad);
  return p;
}

std::string variant_of(const Representation& rep) {
  for (std::size_t b = 0; b < rep.algebra().dim(); ++b)
    if (!rep.lambda(b).is_zero()) return to_string(Variant::anti_symmetric);
  return to_string(Variant::zero_lambda);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Leibniz algebras and their representations", kToolName};
  app.require_subcommand(1);
  Context ctx{in, out};
  std::function<void()> action;

  auto algebra_command = [&](const std::string& name, const std::string& help, auto compute) {
    auto* sub = app.add_subcommand(name, help);
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "algebra or representation file ('-' for stdin)")->required();
    sub->add_flag("--json", ctx.json, "structured output");
    sub->callback([&, name, file, compute] { action = [&, name, file, compute] {
      ctx.report(name, compute(load_algebra(*file, ctx.in)));
    }; });
  };

  algebra_command("check", "verify the Leibniz identity", [](const LeibnizAlgebra& a) { return algebra_check(a); });
  algebra_command("kernel", "Leibniz kernel", [](const LeibnizAlgebra& a) {
    Subspace k = leibniz_kernel(a);
    return Json{{"kernel_dim", k.dim()}, {"kernel_basis", basis_json(a, k)}};
  });
  algebra_command("series", "lower central and derived series", [](const LeibnizAlgebra& a) {
    SeriesReport lc = lower_central_series(a);
    SeriesReport ds = derived_series(a);
    return Json{{"lower_central", dims(lc.terms)}, {"lower_central_stabilized", lc.stabilized},
                {"derived", dims(ds.terms)},       {"derived_stabilized", ds.stabilized},
                {"solvable", is_solvable(a)},      {"nilpotent", is_nilpotent(a)}};
  });
  algebra_command("radical", "maximal solvable ideal", [](const LeibnizAlgebra& a) {
    Subspace r = radical(a);
    Subspace k = leibniz_kernel(a);
    return Json{{"radical_dim", r.dim()},
                {"radical_basis", basis_json(a, r)},
                {"kernel_dim", k.dim()},
                {"radical_contains_kernel", r.contains(k)}};
  });
  algebra_command("semisimple", "radical equals kernel", [](const LeibnizAlgebra& a) {
    return Json{{"semisimple", is_semisimple(a)}, {"radical_dim", radical(a).dim()},
                {"kernel_dim", leibniz_kernel(a).dim()}};
  });
  algebra_command("simple", "simplicity verdict", [](const LeibnizAlgebra& a) {
    SimplicityVerdict v = is_simple(a);
    Json p{{"simple", to_string(v.verdict)}, {"reason", v.reason}};
    if (v.witness) p["witness_basis"] = basis_json(a, *v.witness);
    return p;
  });
  algebra_command("derivations", "derivations and inner derivations", [](const LeibnizAlgebra& a) {
    return Json{{"der_dim", derivations(a).dim()}, {"inn_dim", inner_derivations(a).dim()},
                {"inn_ideal", check_inn_ideal(a)}};
  });
  algebra_command("levi", "Levi subalgebra of a semisimple algebra", [](const LeibnizAlgebra& a) {
    Subspace s = levi_subalgebra(a);
    Subspace k = leibniz_kernel(a);
    return Json{{"levi_dim", s.dim()},
                {"levi_basis", basis_json(a, s)},
                {"lie_subalgebra", is_subalgebra(a, s) && is_lie(induced_algebra(a, s))},
                {"complements_kernel", s.dim() + k.dim() == a.dim() && subspace_intersect(s, k).is_zero()}};
  });

  // rep ...
  auto* rep = app.add_subcommand("rep", "representation commands");
  rep->require_subcommand(1);
  std::string rep_file, rep_file2, basis_labels;
  std::size_t m = 0;

  auto* rcheck = rep->add_subcommand("check", "verify the representation axioms");
  rcheck->add_option("file", rep_file)->required();
  rcheck->add_flag("--json", ctx.json);
  rcheck->callback([&] { action = [&] {
    Input input = read_input(rep_file, ctx.in);
    RepData d = parse_rep_data(input.text, input.base_dir);
    d.algebra.require_valid();
    Json bad = Json::array();
    for (const auto& v : axiom_violations(d.algebra, d.action))
      bad.push_back({{"axiom", v.axiom}, {"x", d.algebra.basis_names()[v.x]}, {"y", d.algebra.basis_names()[v.y]}});
    ctx.report("rep check", Json{{"module_dim", d.action.module_dim}, {"valid", bad.empty()}, {"violations", bad}});
  }; });

  auto* rirr = rep->add_subcommand("irreducible", "absolute irreducibility test");
  rirr->add_option("file", rep_file)->required();
  rirr->add_flag("--json", ctx.json);
  rirr->callback([&] { action = [&] {
    Representation r = load_rep(rep_file, ctx.in);
    Irreducibility res = irreducibility(r);
    Json p{{"module_dim", r.module_dim()}, {"irreducibility", to_string(res.kind)}, {"envelope_dim", res.envelope_dim}};
    if (res.witness) p["witness_basis"] = module_basis_json(*res.witness);
    ctx.report("rep irreducible", p);
  }; });

  auto* rcls = rep->add_subcommand("classify", "irreducible representations of an sl2-type algebra");
  rcls->add_option("file", rep_file, "algebra file")->required();
  rcls->add_option("--m", m, "highest weight (module dimension m+1)")->required();
  rcls->add_flag("--json", ctx.json);
  rcls->callback([&] { action = [&] {
    LeibnizAlgebra a = load_algebra(rep_file, ctx.in);
    Json reps = Json::array();
    for (const auto& r : classify_sl2_type_irreps(a, m))
      reps.push_back({{"variant", variant_of(r)}, {"module_dim", r.module_dim()}, {"representation", representation_to_json(r)}});
    ctx.report("rep classify", Json{{"m", m}, {"count", reps.size()}, {"representations", reps}});
  }; });

  auto* requiv = rep->add_subcommand("equivalent", "search for an intertwiner");
  requiv->add_option("first", rep_file)->required();
  requiv->add_option("second", rep_file2)->required();
  requiv->add_flag("--json", ctx.json);
  requiv->callback([&] { action = [&] {
    Representation r1 = load_rep(rep_file, ctx.in);
    Representation r2 = load_rep(rep_file2, ctx.in);
    Equivalence e = equivalence(r1, r2);
    Json p{{"equivalence", to_string(e.kind)}};
    if (e.intertwiner) p["intertwiner"] = matrix_to_json(*e.intertwiner);
    ctx.report("rep equivalent", p);
  }; });

  auto* rdec = rep->add_subcommand("decompose", "split into invariant summands");
  rdec->add_option("file", rep_file)->required();
  rdec->add_flag("--json", ctx.json);
  rdec->callback([&] { action = [&] {
    Representation r = load_rep(rep_file, ctx.in);
    DecompositionResult res = decompose(r);
    Json comps = Json::array(), dimlist = Json::array();
    for (std::size_t i = 0; i < res.components.size(); ++i) {
      dimlist.push_back(res.components[i].dim());
      comps.push_back({{"dim", res.components[i].dim()},
                       {"irreducibility", to_string(res.component_kinds[i])},
                       {"basis", module_basis_json(res.components[i])}});
    }
    Json p{{"verdict", to_string(res.verdict)}, {"component_dims", dimlist}, {"components", comps}};
    p["obstruction"] = res.obstruction ? Json(*res.obstruction) : Json(nullptr);
    ctx.report("rep decompose", p);
  }; });

  auto* rres = rep->add_subcommand("restrict", "restrict to the subalgebra spanned by basis labels");
  rres->add_option("file", rep_file)->required();
  rres->add_option("--basis", basis_labels, "comma-separated labels")->required();
  rres->callback([&] { action = [&] {
    Representation r = load_rep(rep_file, ctx.in);
    std::vector<Vector> gens;
    std::stringstream ss(basis_labels);
    for (std::string label; std::getline(ss, label, ',');)
      gens.push_back(unit_vector(r.algebra().dim(), r.algebra().require_index(label)));
    Subspace sub = Subspace::span(gens, r.algebra().dim());
    if (!is_subalgebra(r.algebra(), sub)) throw PreconditionError("rep restrict: labels do not span a subalgebra");
    ctx.out << serialize_representation(restrict(r, sub));
  }; });

  // gen ...
  auto* gen = app.add_subcommand("gen", "write catalog algebras and representations");
  gen->require_subcommand(1);
  std::size_t n = 0;
  std::string variant = "zero_lambda", second_variant = "zero_lambda";
  bool adjoint = false;

  auto* gsl2 = gen->add_subcommand("sl2-irrep", "sl2 irreducible representation");
  gsl2->add_option("--m", m)->required();
  gsl2->add_option("--variant", variant)->check(CLI::IsMember({"zero_lambda", "anti_symmetric"}));
  gsl2->callback([&] { action = [&] {
    ctx.out << serialize_representation(sl2_leibniz_irrep(m, parse_variant(variant)), "sl2");
  }; });

  auto* gext = gen->add_subcommand("simple-ext", "simple algebra sl2 + (n-3)-dim kernel");
  gext->add_option("--n", n)->required()->check(CLI::Range(std::size_t{5}, std::size_t{64}));
  gext->callback([&] { action = [&] {
    ctx.out << serialize_algebra(simple_ext_algebra(n), "simple_ext_" + std::to_string(n));
  }; });

  auto* g53 = gen->add_subcommand("example-5-3", "5-dim simple algebra (or its adjoint representation)");
  g53->add_flag("--adjoint", adjoint);
  g53->callback([&] { action = [&] {
    Example53 ex = example_5_3();
    ctx.out << (adjoint ? serialize_representation(ex.adjoint, "example_5_3")
                        : serialize_algebra(ex.algebra, "example_5_3"));
  }; });

  auto* g55 = gen->add_subcommand("example-5-5", "3+2 block sl2 representation");
  g55->add_option("--first", variant)->check(CLI::IsMember({"zero_lambda", "anti_symmetric"}));
  g55->add_option("--second", second_variant)->check(CLI::IsMember({"zero_lambda", "anti_symmetric"}));
  g55->callback([&] { action = [&] {
    ctx.out << serialize_representation(example_5_5(parse_variant(variant), parse_variant(second_variant)), "sl2");
  }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (action) action();
    return 0;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace leibniz
