#include "leibniz/decomposition.hpp"

#include "leibniz/matrix_algebra.hpp"
#include "leibniz/sl2.hpp"

namespace leibniz {

KernelActionCheck complete_reducibility_necessary(const Representation& rep) {
  const LeibnizAlgebra& alg = rep.algebra();
  KernelActionCheck out;
  for (const auto& v : leibniz_kernel(alg).vectors()) {
    Matrix r = rep.rho_of(v);
    Matrix l = rep.lambda_of(v);
    if (!r.is_zero() || !l.is_zero()) {
      out.holds = false;
      out.witness = v;
      out.which = l.is_zero() ? "rho" : "lambda";
      out.action = l.is_zero() ? r : l;
      return out;
    }
  }
  return out;
}

std::vector<Matrix> commutant(const Representation& rep) {
  return commutant_basis(rep.operators(), rep.module_dim());
}

std::string to_string(DecompositionResult::Verdict v) {
  switch (v) {
    case DecompositionResult::Verdict::decomposed: return "decomposed";
    case DecompositionResult::Verdict::indecomposable: return "indecomposable";
    case DecompositionResult::Verdict::no_irreducible_decomposition: return "no_irreducible_decomposition";
    case DecompositionResult::Verdict::undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

struct Split {
  enum class Kind { split, indecomposable, undetermined } kind;
  std::vector<Subspace> pieces;
  std::string reason;
};

// Invariant pieces cut out by the primary decomposition of X over Q.
std::vector<Subspace> primary_pieces(const Matrix& x) {
  const std::size_t d = x.rows();
  const Polynomial mp = minimal_polynomial(x);
  std::vector<Subspace> pieces;
  Matrix rest = Matrix::identity(d);
  std::size_t covered = 0;
  for (const auto& [a, k] : rational_roots(mp)) {
    Matrix shifted = power(x - a * Matrix::identity(d), k);
    pieces.push_back(nullspace(shifted));
    rest = rest * shifted;
    covered += k;
  }
  if (covered + 1 < mp.size()) {
    Subspace tail = Subspace::column_space(rest);
    if (!tail.is_zero()) pieces.push_back(tail);
  }
  return pieces;
}

bool generates_nilpotent(const std::vector<Matrix>& gens, std::size_t d) {
  // Non-unital algebra A generated by gens, then A, A^2, ... must reach 0.
  EchelonBuilder algebra(d * d);
  std::vector<Matrix> frontier;
  for (const auto& g : gens)
    if (algebra.insert(g.flatten())) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        Matrix p = w * g;
        if (algebra.insert(p.flatten())) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  const Subspace a = algebra.subspace();
  Subspace power_space = a;
  while (!power_space.is_zero()) {
    EchelonBuilder next(d * d);
    for (const auto& p : power_space.vectors()) {
      Matrix pm = Matrix::unflatten(p, d, d);
      for (const auto& g : a.vectors()) next.insert((pm * Matrix::unflatten(g, d, d)).flatten());
    }
    Subspace smaller = next.subspace();
    if (smaller.dim() == power_space.dim()) return false;
    power_space = smaller;
  }
  return true;
}

Split split_once(const Representation& rep) {
  const std::size_t d = rep.module_dim();
  const std::vector<Matrix> comm = commutant(rep);
  if (comm.size() <= 1) return {Split::Kind::indecomposable, {}, "commutant dim 1"};

  Matrix generic(d, d);
  for (std::size_t i = 0; i < comm.size(); ++i) generic += Rational(static_cast<long>(i + 1)) * comm[i];
  std::vector<Matrix> candidates{generic};
  candidates.insert(candidates.end(), comm.begin(), comm.end());
  for (const auto& c : candidates) {
    auto pieces = primary_pieces(c);
    if (pieces.size() >= 2) return {Split::Kind::split, std::move(pieces), ""};
  }

  // Every basis element now has a single primary component. If that is a
  // rational eigenvalue for each, the commutant is scalars plus a nilpotent
  // algebra and has no idempotents other than 0 and 1.
  std::vector<Matrix> shifted;
  for (const auto& p : comm) {
    auto roots = rational_roots(minimal_polynomial(p));
    if (roots.empty()) return {Split::Kind::undetermined, {}, "no rational idempotent found"};
    shifted.push_back(p - roots.front().first * Matrix::identity(d));
  }
  if (generates_nilpotent(shifted, d)) return {Split::Kind::indecomposable, {}, "commutant is local"};
  return {Split::Kind::undetermined, {}, "no rational idempotent found"};
}

struct Leaf {
  Subspace space;
  bool undetermined;
  std::string reason;
};

void split_recursive(const Representation& rep, const Matrix& embed, std::vector<Leaf>& leaves) {
  Split s = split_once(rep);
  auto as_subspace = [&](const Matrix& e) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < e.cols(); ++c) cols.push_back(e.column(c));
    return Subspace::span(cols, e.rows());
  };
  if (s.kind != Split::Kind::split) {
    leaves.push_back({as_subspace(embed), s.kind == Split::Kind::undetermined, s.reason});
    return;
  }
  for (const auto& piece : s.pieces) {
    Representation sub = subrepresentation(rep, piece);
    Matrix sub_embed = embed * Matrix::from_columns(piece.vectors(), rep.module_dim());
    split_recursive(sub, sub_embed, leaves);
  }
}

}  // namespace

DecompositionResult decompose(const Representation& rep) {
  const std::size_t d = rep.module_dim();
  DecompositionResult out{DecompositionResult::Verdict::indecomposable, {}, {}, std::nullopt};
  if (d == 0) return out;

  KernelActionCheck nec = complete_reducibility_necessary(rep);
  if (!nec.holds) {
    out.verdict = DecompositionResult::Verdict::no_irreducible_decomposition;
    out.components.push_back(Subspace::full(d));
    out.component_kinds.push_back(irreducibility(rep).kind);
    out.obstruction = nec.which + "|_I != 0";
    return out;
  }

  std::vector<Leaf> leaves;
  split_recursive(rep, Matrix::identity(d), leaves);

  EchelonBuilder total(d);
  std::size_t dims = 0;
  for (const auto& leaf : leaves) {
    if (!invariant_subspace_check(rep, leaf.space)) throw InternalError("decompose: component is not invariant");
    dims += leaf.space.dim();
    for (const auto& v : leaf.space.vectors()) total.insert(v);
  }
  if (dims != d || total.dim() != d) throw InternalError("decompose: components do not form a direct sum");

  std::string undetermined;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    out.components.push_back(leaves[i].space);
    out.component_kinds.push_back(irreducibility(subrepresentation(rep, leaves[i].space)).kind);
    if (leaves[i].undetermined) {
      if (!undetermined.empty()) undetermined += "; ";
      undetermined += "component " + std::to_string(i) + ": " + leaves[i].reason;
    }
  }
  if (leaves.size() > 1) {
    out.verdict = DecompositionResult::Verdict::decomposed;
    if (!undetermined.empty()) out.obstruction = undetermined;
  } else {
    out.verdict = leaves[0].undetermined ? DecompositionResult::Verdict::undetermined
                                         : DecompositionResult::Verdict::indecomposable;
    out.obstruction = leaves[0].reason;
  }
  return out;
}

Example53 example_5_3() {
  auto q = [](long v) { return Rational(v); };
  LeibnizAlgebra alg = LeibnizAlgebra::from_entries(
      {"e", "f", "h", "x", "y"}, {
                                     {"e", "f", {{"h", q(1)}}},
                                     {"f", "e", {{"h", q(-1)}}},
                                     {"e", "h", {{"e", q(2)}}},
                                     {"h", "e", {{"e", q(-2)}}},
                                     {"f", "h", {{"f", q(-2)}}},
                                     {"h", "f", {{"f", q(2)}}},
                                     {"x", "h", {{"x", q(1)}}},
                                     {"y", "e", {{"x", q(-1)}}},
                                     {"x", "f", {{"y", q(1)}}},
                                     {"y", "h", {{"y", q(-1)}}},
                                 });
  Representation adj = adjoint_rep(alg);
  return {std::move(alg), std::move(adj)};
}

Representation example_5_5(Variant first, Variant second) {
  return direct_sum(sl2_leibniz_irrep(2, first), sl2_leibniz_irrep(1, second));
}

Subspace lambda_f_solutions(const Matrix& rho_h) {
  const std::size_t d = rho_h.rows();
  // Column (r, c) of the system is the image of the unit matrix E_rc.
  std::vector<Vector> cols;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      Matrix unit(d, d);
      unit(r, c) = 1;
      cols.push_back((unit * rho_h - rho_h * unit - Rational(2) * unit).flatten());
    }
  return nullspace(Matrix::from_columns(cols, d * d));
}

std::vector<std::pair<std::size_t, std::size_t>> support(const Subspace& s, std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      for (const auto& v : s.vectors())
        if (v[r * d + c] != 0) {
          out.emplace_back(r, c);
          break;
        }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> cross_block_weight_pairs(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return {};
  const Matrix h = block_diagonal(sl2_irrep_rho(a - 1).h, sl2_irrep_rho(b - 1).h);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < a + b; ++i)
    for (std::size_t j = 0; j < a + b; ++j)
      if ((i < a) != (j < a) && h(j, j) - h(i, i) == 2) out.emplace_back(i, j);
  return out;
}

}  // namespace leibniz
