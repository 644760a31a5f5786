#include "leibniz/sl2.hpp"

#include <algorithm>
#include <map>

namespace leibniz {

LeibnizAlgebra sl2_algebra() {
  auto q = [](long v) { return Rational(v); };
  return LeibnizAlgebra::from_entries({"e", "f", "h"}, {
                                                           {"e", "f", {{"h", q(1)}}},
                                                           {"f", "e", {{"h", q(-1)}}},
                                                           {"e", "h", {{"e", q(2)}}},
                                                           {"h", "e", {{"e", q(-2)}}},
                                                           {"h", "f", {{"f", q(2)}}},
                                                           {"f", "h", {{"f", q(-2)}}},
                                                       });
}

Sl2Triple sl2_irrep_rho(std::size_t m) {
  const std::size_t d = m + 1;
  Sl2Triple t{Matrix(d, d), Matrix(d, d), Matrix(d, d)};
  const long ml = static_cast<long>(m);
  // Formulas are 1-based; i is the 1-based row index.
  for (std::size_t row = 0; row < d; ++row) {
    const long i = static_cast<long>(row) + 1;
    if (row + 1 < d) t.e(row, row + 1) = i * (ml + 1 - i);
    if (row >= 1) t.f(row, row - 1) = -1;
    t.h(row, row) = ml + 2 - 2 * i;
  }
  return t;
}

Representation sl2_leibniz_irrep(std::size_t m, Variant variant) {
  Sl2Triple t = sl2_irrep_rho(m);
  std::vector<Matrix> rho{t.e, t.f, t.h};
  std::vector<Matrix> lambda;
  for (const auto& r : rho) lambda.push_back(variant == Variant::anti_symmetric ? -r : Matrix(m + 1, m + 1));
  return Representation(sl2_algebra(), std::move(rho), std::move(lambda));
}

Sl2ConstraintReport check_sl2_constraints(const LeibnizAlgebra& algebra, const BimoduleAction& a) {
  if (!(algebra == sl2_algebra())) throw PreconditionError("check_sl2_constraints: algebra is not sl2");
  if (a.rho.size() != 3 || a.lambda.size() != 3) throw RepresentationError("check_sl2_constraints: need 3+3 matrices");
  const Matrix &re = a.rho[0], &rf = a.rho[1], &rh = a.rho[2];
  const Matrix &le = a.lambda[0], &lf = a.lambda[1], &lh = a.lambda[2];
  const Matrix zero(a.module_dim, a.module_dim);
  const Rational two(2);

  Sl2ConstraintReport r;
  r.holds = {
      rh == rf * re - re * rf,
      two * re == rh * re - re * rh,
      two * rf == rf * rh - rh * rf,
      lh == rf * le - le * rf && lh == lf * re - re * lf,
      lh == rf * le + le * lf && lh == -(lf * le) - re * lf,
      zero == rh * lh - lh * rh && zero == rh * lh + lh * lh,
      two * le == rh * le - le * rh && two * le == lh * re - re * lh,
      two * le == rh * le + le * lh && two * le == -(lh * le) - re * lh,
      zero == re * le - le * re && zero == re * le + le * le,
      two * lf == rf * lh - lh * rf && two * lf == lf * rh - rh * lf,
      two * lf == rf * lh + lh * lf && two * lf == -(lf * lh) - rh * lf,
      zero == rf * lf - lf * rf && zero == rf * lf + lf * lf,
  };
  for (int i = 0; i < 12; ++i)
    if (!r.holds[i]) r.failing_identities.push_back(i + 1);
  return r;
}

Sl2ConstraintReport check_sl2_constraints(const Representation& rep) {
  return check_sl2_constraints(rep.algebra(), rep.action());
}

LeibnizAlgebra simple_ext_algebra(std::size_t n) {
  if (n < 5) throw std::invalid_argument("simple_ext_algebra: n must be at least 5");
  const long nl = static_cast<long>(n);
  std::vector<std::string> names{"e", "f", "h"};
  for (std::size_t k = 0; k + 4 <= n; ++k) names.push_back("x" + std::to_string(k));
  std::vector<LeibnizAlgebra::Entry> entries{
      {"e", "f", {{"h", 1}}}, {"f", "e", {{"h", -1}}}, {"e", "h", {{"e", 2}}},
      {"h", "e", {{"e", -2}}}, {"h", "f", {{"f", 2}}}, {"f", "h", {{"f", -2}}},
  };
  auto x = [](long k) { return "x" + std::to_string(k); };
  for (long k = 0; k <= nl - 4; ++k) {
    if (nl - 4 - 2 * k != 0) entries.push_back({x(k), "h", {{x(k), Rational(nl - 4 - 2 * k)}}});
    if (k <= nl - 5) entries.push_back({x(k), "f", {{x(k + 1), Rational(1)}}});
    if (k >= 1) entries.push_back({x(k), "e", {{x(k - 1), Rational(k * (k + 3 - nl))}}});
  }
  return LeibnizAlgebra::from_entries(std::move(names), entries);
}

namespace {

using Monomial = std::pair<std::size_t, std::size_t>;  // variable indices, first <= second
using QuadEquation = std::map<Monomial, Rational>;

void add_term(QuadEquation& eq, std::size_t a, std::size_t b, const Rational& c) {
  if (c == 0) return;
  if (a > b) std::swap(a, b);
  eq[{a, b}] += c;
}

// Linear system for the kernel action T_k (one d x d matrix per x_k):
//   T_{[x_k, y]} = rho_y T_k - T_k rho_y   for y in {e, f, h}.
// rho and lambda satisfy the same system (axioms (1) and (2) on (x_k, y)).
Matrix kernel_action_system(const LeibnizAlgebra& alg, const std::vector<Matrix>& rho_s, std::size_t d) {
  const std::size_t kdim = alg.dim() - 3;
  const std::size_t dd = d * d;
  Matrix sys(kdim * 3 * dd, kdim * dd);
  std::size_t row = 0;
  for (std::size_t k = 0; k < kdim; ++k) {
    for (std::size_t y = 0; y < 3; ++y) {
      const Vector& xy = alg.product(3 + k, y);
      for (std::size_t s = 0; s < 3; ++s)
        if (xy[s] != 0) throw InternalError("extension solve: [x_k, y] leaves the kernel");
      const Matrix& ry = rho_s[y];
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c, ++row) {
          for (std::size_t j = 0; j < kdim; ++j)
            if (xy[3 + j] != 0) sys(row, j * dd + r * d + c) += xy[3 + j];
          for (std::size_t t = 0; t < d; ++t) {
            if (ry(r, t) != 0) sys(row, k * dd + t * d + c) -= ry(r, t);
            if (ry(t, c) != 0) sys(row, k * dd + r * d + t) += ry(t, c);
          }
        }
      }
    }
  }
  return sys;
}

std::vector<std::vector<Matrix>> unpack_family(const Subspace& family, std::size_t kdim, std::size_t d) {
  std::vector<std::vector<Matrix>> out;
  for (const auto& v : family.vectors()) {
    std::vector<Matrix> mats;
    for (std::size_t k = 0; k < kdim; ++k)
      mats.push_back(Matrix::unflatten(Vector(v.begin() + static_cast<std::ptrdiff_t>(k * d * d),
                                              v.begin() + static_cast<std::ptrdiff_t>((k + 1) * d * d)),
                                       d, d));
    out.push_back(std::move(mats));
  }
  return out;
}

// Solves lambda on (e, f, h): linear axiom (2) first, then the quadratic
// axiom (3) along the resulting one-parameter family lambda = a * rho.
std::optional<std::vector<Rational>> solve_sl2_lambda(const LeibnizAlgebra& alg, const std::vector<Matrix>& rho,
                                                      std::size_t d, std::string& reason) {
  const std::size_t dd = d * d;
  Matrix sys(9 * dd, 3 * dd);
  std::size_t row = 0;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      const Vector& xy = alg.product(x, y);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c, ++row) {
          for (std::size_t z = 0; z < 3; ++z)
            if (xy[z] != 0) sys(row, z * dd + r * d + c) += xy[z];
          for (std::size_t t = 0; t < d; ++t) {
            if (rho[y](r, t) != 0) sys(row, x * dd + t * d + c) -= rho[y](r, t);
            if (rho[y](t, c) != 0) sys(row, x * dd + r * d + t) += rho[y](t, c);
          }
        }
    }
  Subspace family = nullspace(sys);
  if (family.is_zero()) return std::vector<Rational>{Rational(0)};
  if (family.dim() != 1) {
    reason = "linear stage for lambda on sl2 left more than one parameter";
    return std::nullopt;
  }
  Vector rho_flat;
  for (const auto& r : rho) {
    Vector f = r.flatten();
    rho_flat.insert(rho_flat.end(), f.begin(), f.end());
  }
  Vector g = family.vector(0);
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (rho_flat[i] == 0) {
      if (g[i] != 0) ratio.reset();
      if (g[i] != 0) break;
      continue;
    }
    Rational c = g[i] / rho_flat[i];
    if (ratio && *ratio != c) {
      ratio.reset();
      break;
    }
    ratio = c;
  }
  if (!ratio || Subspace::span({rho_flat}, rho_flat.size()) != family) {
    reason = "linear family for lambda on sl2 is not proportional to rho";
    return std::nullopt;
  }

  // lambda = a rho:  a (rho_[x,y] - rho_y rho_x) - a^2 rho_x rho_y = 0.
  std::vector<std::pair<Rational, Rational>> eqs;  // (alpha, beta): alpha a + beta a^2 = 0
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      Matrix rxy(d, d);
      for (std::size_t z = 0; z < 3; ++z)
        if (alg.product(x, y)[z] != 0) rxy += alg.product(x, y)[z] * rho[z];
      Matrix alpha = rxy - rho[y] * rho[x];
      Matrix beta = -(rho[x] * rho[y]);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          if (alpha(r, c) != 0 || beta(r, c) != 0) eqs.emplace_back(alpha(r, c), beta(r, c));
    }
  std::vector<Rational> candidates{Rational(0)};
  for (const auto& [alpha, beta] : eqs)
    if (beta != 0) candidates.push_back(-alpha / beta);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Rational> roots;
  for (const auto& a : candidates) {
    bool ok = std::all_of(eqs.begin(), eqs.end(),
                          [&](const auto& e) { return e.first * a + e.second * a * a == 0; });
    if (ok) roots.push_back(a);
  }
  return roots;
}

}  // namespace

ExtensionSolution extension_rep_solve(std::size_t n, std::size_t m) {
  if (m < 1) throw std::invalid_argument("extension_rep_solve: m must be at least 1");
  const LeibnizAlgebra alg = simple_ext_algebra(n);
  const std::size_t d = m + 1;
  const std::size_t kdim = n - 3;
  const Sl2Triple t = sl2_irrep_rho(m);
  const std::vector<Matrix> rho_s{t.e, t.f, t.h};

  ExtensionSolution sol;
  sol.n = n;
  sol.m = m;

  auto scalars = solve_sl2_lambda(alg, rho_s, d, sol.reason);
  if (!scalars) return sol;
  sol.lambda_scalars = *scalars;

  // Stage 1: linear constraints from the brackets [x_k, y], y in sl2.
  const Subspace family = nullspace(kernel_action_system(alg, rho_s, d));
  const auto basis = unpack_family(family, kdim, d);
  const std::size_t p = basis.size();
  sol.linear_rho_params = p;
  sol.linear_lambda_params = p;

  if (n % 2 == 0 && p > 0) {
    const std::size_t s = (n - 4) / 2;
    const Matrix& mid = basis.front()[s];
    Vector diag(d);
    bool diagonal = true;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        if (r == c) diag[r] = mid(r, c);
        else if (mid(r, c) != 0) diagonal = false;
      }
    if (!diagonal) throw InternalError("extension solve: middle-weight action is not diagonal");
    sol.middle_weight_diagonal = diag;
  }

  // Stage 2: quadratic constraints from the pairs (x_j, x_k), [x_j, x_k] = 0.
  // Variables 0..p-1 scale the rho family, p..2p-1 the lambda family.
  std::vector<QuadEquation> equations;
  std::vector<std::string> sources;
  const auto& names = alg.basis_names();
  for (std::size_t j = 0; j < kdim; ++j) {
    for (std::size_t k = 0; k < kdim; ++k) {
      if (!is_zero(alg.product(3 + j, 3 + k))) throw InternalError("extension solve: kernel is not abelian");
      std::vector<QuadEquation> ax1(d * d), ax2(d * d), ax3(d * d);
      for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = 0; b < p; ++b) {
          const Matrix& ak = basis[a][k];
          const Matrix& aj = basis[a][j];
          const Matrix& bj = basis[b][j];
          const Matrix& bk = basis[b][k];
          // (1) 0 = rho_k rho_j - rho_j rho_k
          Matrix m1 = ak * bj - aj * bk;
          // (2) 0 = rho_k lambda_j - lambda_j rho_k
          Matrix m2 = ak * bj - bj * ak;
          // (3) 0 = rho_k lambda_j + lambda_j lambda_k
          Matrix m3a = ak * bj;
          Matrix m3b = aj * bk;  // lambda_j lambda_k with lambda = basis scaled by u
          for (std::size_t e = 0; e < d * d; ++e) {
            const std::size_t r = e / d, c = e % d;
            add_term(ax1[e], a, b, m1(r, c));
            add_term(ax2[e], a, p + b, m2(r, c));
            add_term(ax3[e], a, p + b, m3a(r, c));
            add_term(ax3[e], p + a, p + b, m3b(r, c));
          }
        }
      }
      const std::string pair = "(" + names[3 + j] + "," + names[3 + k] + ")";
      for (auto* group : {&ax1, &ax2, &ax3}) {
        const std::string axiom = group == &ax1 ? "axiom (1) " : group == &ax2 ? "axiom (2) " : "axiom (3) ";
        for (auto& eq : *group) {
          std::erase_if(eq, [](const auto& kv) { return kv.second == 0; });
          if (!eq.empty()) {
            equations.push_back(std::move(eq));
            sources.push_back(axiom + pair);
          }
        }
      }
    }
  }

  std::vector<bool> zeroed(2 * p, false);
  auto var_name = [p](std::size_t v) {
    return (v < p ? "rho_I[" + std::to_string(v) : "lambda_I[" + std::to_string(v - p)) + "]";
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < equations.size(); ++i) {
      std::vector<std::pair<Monomial, Rational>> alive;
      for (const auto& [mono, c] : equations[i])
        if (!zeroed[mono.first] && !zeroed[mono.second]) alive.emplace_back(mono, c);
      if (alive.size() == 1 && alive[0].first.first == alive[0].first.second) {
        const std::size_t v = alive[0].first.first;
        zeroed[v] = true;
        sol.quadratic_equations.push_back({var_name(v), abs(alive[0].second), sources[i]});
        sol.quadratic_stage_used = true;
        progress = true;
      }
    }
  }

  const std::size_t remaining = static_cast<std::size_t>(std::count(zeroed.begin(), zeroed.end(), false));
  sol.free_parameters = remaining;
  if (remaining > 0) {
    sol.reason = "parameters survive the quadratic stage (residue not of the form t^2 q = 0)";
    return sol;
  }

  sol.forced_rho_I.assign(kdim, Matrix(d, d));
  sol.forced_lambda_I.assign(kdim, Matrix(d, d));
  sol.status = ExtensionSolution::Status::forced;
  sol.reason = p == 0 ? "linear stage forces the kernel action to zero"
                      : "quadratic stage forces the kernel action to zero";

  // Cross-check against the explicit classification.
  auto irreps = classify_extension_irreps(n, m);
  if (irreps.size() != sol.lambda_scalars.size())
    throw InternalError("extension solve: number of lambda solutions disagrees with classification");
  for (const auto& a : sol.lambda_scalars) {
    std::vector<Matrix> rho(rho_s), lambda;
    for (const auto& r : rho_s) lambda.push_back(a * r);
    for (std::size_t k = 0; k < kdim; ++k) {
      rho.push_back(sol.forced_rho_I[k]);
      lambda.push_back(sol.forced_lambda_I[k]);
    }
    Representation rep(alg, std::move(rho), std::move(lambda));
    if (std::none_of(irreps.begin(), irreps.end(), [&](const Representation& r) { return r == rep; }))
      throw InternalError("extension solve: solution missing from the classification");
  }
  return sol;
}

std::vector<Representation> classify_sl2_type_irreps(const LeibnizAlgebra& alg, std::size_t m) {
  const std::size_t n = alg.dim();
  const Subspace levi = levi_subalgebra(alg);
  std::array<std::size_t, 3> idx{};
  const char* labels[3] = {"e", "f", "h"};
  for (int i = 0; i < 3; ++i) {
    auto found = alg.index_of(labels[i]);
    if (!found) throw PreconditionError("classify: algebra has no basis element '" + std::string(labels[i]) + "'");
    idx[i] = *found;
  }
  const Subspace efh = Subspace::span({unit_vector(n, idx[0]), unit_vector(n, idx[1]), unit_vector(n, idx[2])}, n);
  if (levi != efh) throw PreconditionError("classify: Levi factor is not span{e,f,h}");
  const LeibnizAlgebra sl2 = sl2_algebra();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const Vector& prod = alg.product(idx[a], idx[b]);
      for (std::size_t c = 0; c < 3; ++c)
        if (prod[idx[c]] != sl2.product(a, b)[c]) throw PreconditionError("classify: span{e,f,h} is not sl2");
    }

  // b_j = s + i with s in span{e,f,h}, i in the kernel; rho_{b_j} = rho_s.
  const Subspace kernel = leibniz_kernel(alg);
  std::vector<Vector> cols{efh.vector(0), efh.vector(1), efh.vector(2)};
  for (const auto& v : kernel.vectors()) cols.push_back(v);
  const Matrix split = Matrix::from_columns(cols, n);

  const Sl2Triple t = sl2_irrep_rho(m);
  const std::vector<Matrix> rho_s{t.e, t.f, t.h};
  const std::size_t d = m + 1;
  std::vector<Matrix> rho;
  for (std::size_t j = 0; j < n; ++j) {
    SolveResult s = solve(split, unit_vector(n, j));
    if (!s.particular) throw InternalError("classify: L != S + I");
    Matrix r(d, d);
    // efh echelon order matches e, f, h only when their indices ascend.
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t pivot = efh.pivots()[c];
      const std::size_t which = static_cast<std::size_t>(std::find(idx.begin(), idx.end(), pivot) - idx.begin());
      if ((*s.particular)[c] != 0) r += (*s.particular)[c] * rho_s[which];
    }
    rho.push_back(std::move(r));
  }

  std::vector<Representation> out;
  std::vector<Matrix> zero_lambda(n, Matrix(d, d));
  out.emplace_back(alg, rho, zero_lambda);
  if (m >= 1) {
    std::vector<Matrix> anti;
    for (const auto& r : rho) anti.push_back(-r);
    out.emplace_back(alg, rho, std::move(anti));
  }
  return out;
}

std::vector<Representation> classify_extension_irreps(std::size_t n, std::size_t m) {
  return classify_sl2_type_irreps(simple_ext_algebra(n), m);
}

}  // namespace leibniz
