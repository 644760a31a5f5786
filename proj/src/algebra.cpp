#include "leibniz/algebra.hpp"

#include <deque>
#include <set>

#include "leibniz/matrix_algebra.hpp"

namespace leibniz {

namespace {

// Accumulates s * v into acc.
void axpy(Vector& acc, const Rational& s, const Vector& v) {
  if (s == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) acc[i] += s * v[i];
}

Vector basis_bracket_vec(const LeibnizAlgebra& alg, const Vector& x, std::size_t j) {
  // [x, b_j]
  Vector r = zero_vector(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) axpy(r, x[i], alg.product(i, j));
  return r;
}

Vector vec_bracket_basis(const LeibnizAlgebra& alg, std::size_t i, const Vector& y) {
  // [b_i, y]
  Vector r = zero_vector(alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) axpy(r, y[j], alg.product(i, j));
  return r;
}

std::vector<Triple> compute_violations(const LeibnizAlgebra& alg) {
  std::vector<Triple> out;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = basis_bracket_vec(alg, alg.product(i, j), k);
        Vector rhs = basis_bracket_vec(alg, alg.product(i, k), j) + vec_bracket_basis(alg, i, alg.product(j, k));
        if (lhs != rhs) out.push_back({i, j, k});
      }
  return out;
}

Vector embed(const std::vector<std::size_t>& section, const Vector& coords, std::size_t n) {
  Vector v = zero_vector(n);
  for (std::size_t k = 0; k < section.size(); ++k) v[section[k]] = coords[k];
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

LeibnizAlgebra::LeibnizAlgebra(std::vector<std::string> basis_names, std::vector<Vector> table)
    : names_(std::move(basis_names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (table_.size() != n * n) throw DimensionError("structure tensor must have dim*dim entries");
  for (const auto& v : table_)
    if (v.size() != n) throw DimensionError("structure tensor entry has wrong length");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != n) throw InvalidAlgebra("basis labels must be unique");
  violations_ = compute_violations(*this);
}

LeibnizAlgebra LeibnizAlgebra::from_entries(std::vector<std::string> basis_names,
                                            const std::vector<Entry>& entries) {
  const std::size_t n = basis_names.size();
  std::vector<Vector> table(n * n, zero_vector(n));
  auto index = [&](const std::string& s) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (basis_names[i] == s) return i;
    throw InvalidAlgebra("unknown basis label '" + s + "'");
  };
  std::set<std::pair<std::size_t, std::size_t>> listed;
  for (const auto& e : entries) {
    auto key = std::make_pair(index(e.left), index(e.right));
    if (!listed.insert(key).second)
      throw InvalidAlgebra("duplicate bracket entry [" + e.left + "," + e.right + "]");
    Vector& v = table[key.first * n + key.second];
    for (const auto& [label, coeff] : e.result) v[index(label)] = coeff;
  }
  return LeibnizAlgebra(std::move(basis_names), std::move(table));
}

LeibnizAlgebra LeibnizAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("a" + std::to_string(i));
  return LeibnizAlgebra(std::move(names), std::vector<Vector>(dim * dim, zero_vector(dim)));
}

std::optional<std::size_t> LeibnizAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t LeibnizAlgebra::require_index(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw InvalidAlgebra("unknown basis label '" + name + "'");
  return *i;
}

void LeibnizAlgebra::require_valid() const {
  if (!is_valid()) {
    const auto& t = violations_.front();
    throw InvalidAlgebra("Leibniz identity fails at (" + names_[t[0]] + "," + names_[t[1]] + "," + names_[t[2]] +
                         ")");
  }
}

// ---------------------------------------------------------------------------

Vector bracket(const LeibnizAlgebra& alg, const Vector& x, const Vector& y) {
  const std::size_t n = alg.dim();
  if (x.size() != n || y.size() != n) throw DimensionError("bracket: vector length mismatch");
  Vector r = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      axpy(r, x[i] * y[j], alg.product(i, j));
    }
  }
  return r;
}

std::vector<Triple> check_leibniz(const LeibnizAlgebra& alg) { return alg.violations(); }

bool is_lie(const LeibnizAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i; j < alg.dim(); ++j)
      if (!is_zero(alg.product(i, j) + alg.product(j, i))) return false;
  return true;
}

Matrix right_multiplication(const LeibnizAlgebra& alg, const Vector& x) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < alg.dim(); ++j) cols.push_back(bracket(alg, unit_vector(alg.dim(), j), x));
  return Matrix::from_columns(cols, alg.dim());
}

Matrix left_multiplication(const LeibnizAlgebra& alg, const Vector& x) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < alg.dim(); ++j) cols.push_back(bracket(alg, x, unit_vector(alg.dim(), j)));
  return Matrix::from_columns(cols, alg.dim());
}

Subspace leibniz_kernel(const LeibnizAlgebra& alg) {
  alg.require_valid();
  std::vector<Vector> sym;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i; j < alg.dim(); ++j) sym.push_back(alg.product(i, j) + alg.product(j, i));
  return Subspace::span(sym, alg.dim());
}

Subspace product_space(const LeibnizAlgebra& alg, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != alg.dim() || b.ambient_dim() != alg.dim())
    throw DimensionError("product_space: ambient mismatch");
  EchelonBuilder span(alg.dim());
  for (const auto& u : a.vectors())
    for (const auto& v : b.vectors()) span.insert(bracket(alg, u, v));
  return span.subspace();
}

Subspace ideal_closure(const LeibnizAlgebra& alg, const std::vector<Vector>& seeds) {
  const std::size_t n = alg.dim();
  EchelonBuilder span(n);
  std::deque<Vector> frontier;
  for (const auto& s : seeds)
    if (span.insert(s)) frontier.push_back(s);
  while (!frontier.empty()) {
    Vector v = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      for (Vector w : {basis_bracket_vec(alg, v, j), vec_bracket_basis(alg, j, v)})
        if (span.insert(w)) frontier.push_back(std::move(w));
    }
  }
  return span.subspace();
}

bool is_ideal(const LeibnizAlgebra& alg, const Subspace& u) {
  if (u.ambient_dim() != alg.dim()) throw DimensionError("is_ideal: ambient mismatch");
  for (const auto& v : u.vectors())
    for (std::size_t j = 0; j < alg.dim(); ++j)
      if (!u.contains(basis_bracket_vec(alg, v, j)) || !u.contains(vec_bracket_basis(alg, j, v))) return false;
  return true;
}

bool is_subalgebra(const LeibnizAlgebra& alg, const Subspace& u) {
  if (u.ambient_dim() != alg.dim()) throw DimensionError("is_subalgebra: ambient mismatch");
  for (const auto& a : u.vectors())
    for (const auto& b : u.vectors())
      if (!u.contains(bracket(alg, a, b))) return false;
  return true;
}

Quotient quotient(const LeibnizAlgebra& alg, const Subspace& ideal) {
  alg.require_valid();
  if (!is_ideal(alg, ideal)) throw PreconditionError("quotient: subspace is not an ideal");
  const std::size_t n = alg.dim();
  std::vector<std::size_t> section = ideal.complement_coordinates();
  const std::size_t q = section.size();
  Matrix proj(q, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector r = ideal.reduce(unit_vector(n, j));
    for (std::size_t k = 0; k < q; ++k) proj(k, j) = r[section[k]];
  }
  std::vector<std::string> names;
  for (auto s : section) names.push_back(alg.basis_names()[s]);
  std::vector<Vector> table;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table.push_back(proj * alg.product(section[a], section[b]));
  return Quotient{LeibnizAlgebra(std::move(names), std::move(table)), std::move(proj), std::move(section)};
}

LeibnizAlgebra induced_algebra(const LeibnizAlgebra& alg, const Subspace& sub) {
  if (!is_subalgebra(alg, sub)) throw PreconditionError("induced_algebra: subspace is not a subalgebra");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < sub.dim(); ++k) {
    Vector v = sub.vector(k);
    std::size_t p = sub.pivots()[k];
    names.push_back(v == unit_vector(alg.dim(), p) ? alg.basis_names()[p] : "u" + std::to_string(k));
  }
  std::vector<Vector> table;
  for (std::size_t a = 0; a < sub.dim(); ++a)
    for (std::size_t b = 0; b < sub.dim(); ++b)
      table.push_back(sub.coordinates(bracket(alg, sub.vector(a), sub.vector(b))));
  return LeibnizAlgebra(std::move(names), std::move(table));
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& alg, const Matrix& change) {
  const std::size_t n = alg.dim();
  if (change.rows() != n || change.cols() != n) throw DimensionError("change_basis: shape mismatch");
  Matrix inv = inverse(change);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Vector> table;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table.push_back(inv * bracket(alg, change.column(a), change.column(b)));
  return LeibnizAlgebra(std::move(names), std::move(table));
}

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> names = a.basis_names();
  for (const auto& s : b.basis_names()) {
    std::string label = s;
    while (a.index_of(label)) label += "'";
    names.push_back(label);
  }
  std::vector<Vector> table(n * n, zero_vector(n));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) table[i * n + j][k] = a.product(i, j)[k];
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        table[(a.dim() + i) * n + a.dim() + j][a.dim() + k] = b.product(i, j)[k];
  return LeibnizAlgebra(std::move(names), std::move(table));
}

// ---------------------------------------------------------------------------
// Series

SeriesReport lower_central_series(const LeibnizAlgebra& alg) {
  alg.require_valid();
  const Subspace whole = Subspace::full(alg.dim());
  SeriesReport rep{SeriesKind::lower_central, {whole}, false, 0};
  while (true) {
    Subspace next = product_space(alg, rep.terms.back(), whole);
    if (next == rep.terms.back()) break;
    rep.terms.push_back(std::move(next));
  }
  rep.stabilized = true;
  rep.terminal_dim = rep.terms.back().dim();
  return rep;
}

SeriesReport derived_series(const LeibnizAlgebra& alg, const Subspace& sub) {
  alg.require_valid();
  SeriesReport rep{SeriesKind::derived, {sub}, false, 0};
  while (true) {
    Subspace next = product_space(alg, rep.terms.back(), rep.terms.back());
    if (next == rep.terms.back()) break;
    rep.terms.push_back(std::move(next));
  }
  rep.stabilized = true;
  rep.terminal_dim = rep.terms.back().dim();
  return rep;
}

SeriesReport derived_series(const LeibnizAlgebra& alg) { return derived_series(alg, Subspace::full(alg.dim())); }

Subspace lower_central_term(const LeibnizAlgebra& alg, std::size_t k) {
  if (k == 0) throw std::invalid_argument("lower central terms start at L^1");
  const Subspace whole = Subspace::full(alg.dim());
  Subspace term = whole;
  for (std::size_t i = 1; i < k; ++i) term = product_space(alg, term, whole);
  return term;
}

bool is_solvable(const LeibnizAlgebra& alg) { return derived_series(alg).terminal_dim == 0; }
bool is_nilpotent(const LeibnizAlgebra& alg) { return lower_central_series(alg).terminal_dim == 0; }

// ---------------------------------------------------------------------------
// Radical and semisimplicity

Matrix killing_form(const LeibnizAlgebra& lie) {
  lie.require_valid();
  if (!is_lie(lie)) throw PreconditionError("killing_form: not a Lie algebra");
  const std::size_t n = lie.dim();
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < n; ++i) ad.push_back(left_multiplication(lie, unit_vector(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) k(i, j) = k(j, i) = (ad[i] * ad[j]).trace();
  return k;
}

Subspace radical(const LeibnizAlgebra& alg) {
  alg.require_valid();
  const std::size_t n = alg.dim();
  Subspace kernel = leibniz_kernel(alg);
  Quotient q = quotient(alg, kernel);
  const std::size_t qd = q.algebra.dim();
  Matrix kappa = killing_form(q.algebra);
  Subspace derived = product_space(q.algebra, Subspace::full(qd), Subspace::full(qd));
  // rad(L/I) = [L/I, L/I]^perp under the Killing form.
  Subspace lie_radical = derived.is_zero() ? Subspace::full(qd) : nullspace(derived.basis() * kappa);

  std::vector<Vector> gens = kernel.vectors();
  for (const auto& r : lie_radical.vectors()) gens.push_back(embed(q.section, r, n));
  Subspace rad = Subspace::span(gens, n);

  if (!is_ideal(alg, rad) || !rad.contains(kernel) || derived_series(alg, rad).terminal_dim != 0)
    throw InternalError("radical: lifted subspace is not a solvable ideal containing the kernel");
  return rad;
}

bool is_semisimple(const LeibnizAlgebra& alg) { return radical(alg) == leibniz_kernel(alg); }

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::yes: return "yes";
    case Tristate::no: return "no";
    case Tristate::undetermined: return "undetermined";
  }
  return "undetermined";
}

SimplicityVerdict is_simple(const LeibnizAlgebra& alg) {
  alg.require_valid();
  const std::size_t n = alg.dim();
  if (n == 0) return {Tristate::no, "zero algebra", std::nullopt};

  const Subspace whole = Subspace::full(n);
  const Subspace kernel = leibniz_kernel(alg);
  const Subspace square = product_space(alg, whole, whole);
  if (square == kernel) return {Tristate::no, "[L,L] = I", square};

  auto proper = [&](const Subspace& s) { return !s.is_zero() && s != kernel && !s.is_full(); };

  // Candidate ideals: closures of basis vectors, pairwise sums and one
  // fixed dense combination, then [L,L] and the radical.
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) seeds.push_back(unit_vector(n, i) + unit_vector(n, j));
  Vector dense = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) dense[i] = static_cast<long>(i + 1);
  seeds.push_back(dense);
  for (const auto& s : seeds) {
    Subspace closure = ideal_closure(alg, {s});
    if (proper(closure)) return {Tristate::no, "ideal generated by a vector is neither 0, I nor L", closure};
  }
  if (proper(square)) return {Tristate::no, "[L,L] is a proper ideal", square};
  Subspace rad = radical(alg);
  if (proper(rad)) return {Tristate::no, "radical is a proper ideal", rad};

  Quotient q = quotient(alg, kernel);
  Matrix kappa = killing_form(q.algebra);
  if (rank(kappa) != q.algebra.dim())
    return {Tristate::undetermined, "Killing form of L/I is degenerate", std::nullopt};
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < q.algebra.dim(); ++i) ad.push_back(left_multiplication(q.algebra, unit_vector(q.algebra.dim(), i)));
  if (commutant_basis(ad, q.algebra.dim()).size() != 1)
    return {Tristate::undetermined, "adjoint commutant of L/I has dimension > 1", std::nullopt};

  if (!kernel.is_zero()) {
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < n; ++i) {
      Vector b = unit_vector(n, i);
      action.push_back(restrict_operator(right_multiplication(alg, b), kernel));
      action.push_back(restrict_operator(left_multiplication(alg, b), kernel));
    }
    const std::size_t k = kernel.dim();
    if (enveloping_algebra(action, k).dim() != k * k)
      return {Tristate::undetermined, "action of L on I is not absolutely irreducible (Burnside test)", std::nullopt};
  }
  return {Tristate::yes, "L/I simple with nondegenerate Killing form; I absolutely irreducible", std::nullopt};
}

// ---------------------------------------------------------------------------
// Derivations

Subspace derivations(const LeibnizAlgebra& alg) {
  alg.require_valid();
  const std::size_t n = alg.dim();
  // Unknown D flattened row-major, D(r, c) -> r * n + c; D b_c = column c.
  Matrix sys(n * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& cij = alg.product(i, j);
      for (std::size_t p = 0; p < n; ++p, ++row) {
        // D[b_i,b_j]
        for (std::size_t q = 0; q < n; ++q)
          if (cij[q] != 0) sys(row, p * n + q) += cij[q];
        for (std::size_t r = 0; r < n; ++r) {
          // -[D b_i, b_j] - [b_i, D b_j]
          if (alg.product(r, j)[p] != 0) sys(row, r * n + i) -= alg.product(r, j)[p];
          if (alg.product(i, r)[p] != 0) sys(row, r * n + j) -= alg.product(i, r)[p];
        }
      }
    }
  }
  return nullspace(sys);
}

Subspace inner_derivations(const LeibnizAlgebra& alg) {
  alg.require_valid();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    gens.push_back(right_multiplication(alg, unit_vector(alg.dim(), i)).flatten());
  return Subspace::span(gens, alg.dim() * alg.dim());
}

bool check_inn_ideal(const LeibnizAlgebra& alg) {
  const std::size_t n = alg.dim();
  Subspace der = derivations(alg);
  Subspace inn = inner_derivations(alg);
  if (!der.contains(inn)) return false;
  for (const auto& d : der.vectors()) {
    Matrix dm = Matrix::unflatten(d, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      Matrix r = right_multiplication(alg, unit_vector(n, i));
      if (!inn.contains(commutator(dm, r).flatten())) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Levi complement (semisimple case: the radical is the abelian kernel)

Subspace levi_subalgebra(const LeibnizAlgebra& alg) {
  if (!is_semisimple(alg)) throw PreconditionError("levi_subalgebra: algebra is not semisimple");
  const std::size_t n = alg.dim();
  const Subspace kernel = leibniz_kernel(alg);
  if (kernel.is_zero()) return Subspace::full(n);

  Quotient q = quotient(alg, kernel);
  const std::size_t qd = q.section.size();
  const std::size_t kd = kernel.dim();
  const std::vector<Vector> ker = kernel.vectors();
  auto sigma = [&](std::size_t a) { return unit_vector(n, q.section[a]); };

  // Unknown correction w(a) = sum_t W(t, a) ker_t, column index t * qd + a.
  // For each quotient pair (a, b):
  //   [s_a, w_b] + [w_a, s_b] - w([a,b]) = s([a,b]) - [s_a, s_b]
  // where [w_a, w_b] vanishes because [I, I] = 0.
  Matrix sys(qd * qd * n, kd * qd);
  Vector rhs(qd * qd * n);
  std::size_t block = 0;
  for (std::size_t a = 0; a < qd; ++a) {
    for (std::size_t b = 0; b < qd; ++b, ++block) {
      const Vector& qab = q.algebra.product(a, b);
      Vector target = embed(q.section, qab, n) - bracket(alg, sigma(a), sigma(b));
      for (std::size_t p = 0; p < n; ++p) rhs[block * n + p] = target[p];
      for (std::size_t t = 0; t < kd; ++t) {
        for (std::size_t c = 0; c < qd; ++c) {
          Vector col = zero_vector(n);
          if (c == b) col = col + bracket(alg, sigma(a), ker[t]);
          if (c == a) col = col + bracket(alg, ker[t], sigma(b));
          if (qab[c] != 0) col = col - qab[c] * ker[t];
          for (std::size_t p = 0; p < n; ++p)
            if (col[p] != 0) sys(block * n + p, t * qd + c) += col[p];
        }
      }
    }
  }
  SolveResult sol = solve(sys, rhs);
  if (!sol.particular) throw InternalError("levi_subalgebra: correction system has no solution");

  std::vector<Vector> gens;
  for (std::size_t a = 0; a < qd; ++a) {
    Vector v = sigma(a);
    for (std::size_t t = 0; t < kd; ++t) {
      const Rational& w = (*sol.particular)[t * qd + a];
      if (w != 0) v = v + w * ker[t];
    }
    gens.push_back(std::move(v));
  }
  Subspace s = Subspace::span(gens, n);
  if (!is_subalgebra(alg, s) || !subspace_intersect(s, kernel).is_zero() || !subspace_sum(s, kernel).is_full() ||
      !is_lie(induced_algebra(alg, s)))
    throw InternalError("levi_subalgebra: verification of the complement failed");
  return s;
}

StructureReport analyze(const LeibnizAlgebra& alg) {
  alg.require_valid();
  StructureReport r;
  r.is_lie = is_lie(alg);
  r.kernel = leibniz_kernel(alg);
  r.radical = radical(alg);
  r.solvable = is_solvable(alg);
  r.nilpotent = is_nilpotent(alg);
  r.semisimple = r.radical == r.kernel;
  r.simple = is_simple(alg);
  return r;
}

}  // namespace leibniz
