#include "leibniz/representation.hpp"

#include <array>

#include "leibniz/matrix_algebra.hpp"

namespace leibniz {

namespace {

Matrix combine(const std::vector<Matrix>& mats, const Vector& x, std::size_t d) {
  Matrix r(d, d);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) r += x[i] * mats[i];
  return r;
}

void check_shapes(const LeibnizAlgebra& alg, const BimoduleAction& a) {
  if (a.rho.size() != alg.dim() || a.lambda.size() != alg.dim())
    throw RepresentationError("need one rho and one lambda matrix per basis element");
  for (const auto* family : {&a.rho, &a.lambda})
    for (const auto& m : *family)
      if (m.rows() != a.module_dim || m.cols() != a.module_dim)
        throw RepresentationError("action matrices must be module_dim x module_dim");
}

}  // namespace

std::vector<AxiomViolation> axiom_violations(const LeibnizAlgebra& alg, const BimoduleAction& a) {
  check_shapes(alg, a);
  const std::size_t n = alg.dim();
  const std::size_t d = a.module_dim;
  std::vector<AxiomViolation> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vector& xy = alg.product(x, y);
      Matrix rho_xy = combine(a.rho, xy, d);
      Matrix lambda_xy = combine(a.lambda, xy, d);
      std::array<Matrix, 3> residuals{
          rho_xy - (a.rho[y] * a.rho[x] - a.rho[x] * a.rho[y]),
          lambda_xy - (a.rho[y] * a.lambda[x] - a.lambda[x] * a.rho[y]),
          lambda_xy - (a.rho[y] * a.lambda[x] + a.lambda[x] * a.lambda[y]),
      };
      for (int k = 0; k < 3; ++k)
        if (!residuals[k].is_zero()) out.push_back({k + 1, x, y, residuals[k]});
    }
  }
  return out;
}

Representation::Representation(LeibnizAlgebra algebra, std::vector<Matrix> rho, std::vector<Matrix> lambda)
    : algebra_(std::move(algebra)) {
  algebra_.require_valid();
  action_.module_dim = rho.empty() ? (lambda.empty() ? 0 : lambda.front().rows()) : rho.front().rows();
  action_.rho = std::move(rho);
  action_.lambda = std::move(lambda);
  auto bad = axiom_violations(algebra_, action_);
  if (!bad.empty()) {
    const auto& v = bad.front();
    const auto& names = algebra_.basis_names();
    throw RepresentationError("axiom (" + std::to_string(v.axiom) + ") fails for pair (" + names[v.x] + "," +
                              names[v.y] + ")");
  }
}

Representation Representation::zero(LeibnizAlgebra algebra, std::size_t module_dim) {
  std::vector<Matrix> zeros(algebra.dim(), Matrix(module_dim, module_dim));
  if (algebra.dim() == 0) {
    Representation r(std::move(algebra), {}, {});
    r.action_.module_dim = module_dim;
    return r;
  }
  return Representation(std::move(algebra), zeros, zeros);
}

Matrix Representation::rho_of(const Vector& x) const {
  if (x.size() != algebra_.dim()) throw DimensionError("rho_of: vector length mismatch");
  return combine(action_.rho, x, module_dim());
}

Matrix Representation::lambda_of(const Vector& x) const {
  if (x.size() != algebra_.dim()) throw DimensionError("lambda_of: vector length mismatch");
  return combine(action_.lambda, x, module_dim());
}

std::vector<Matrix> Representation::operators() const {
  std::vector<Matrix> ops = action_.rho;
  ops.insert(ops.end(), action_.lambda.begin(), action_.lambda.end());
  return ops;
}

Representation new_representation(const LeibnizAlgebra& alg, std::vector<Matrix> rho, std::vector<Matrix> lambda) {
  return Representation(alg, std::move(rho), std::move(lambda));
}

std::string to_string(Variant v) { return v == Variant::anti_symmetric ? "anti_symmetric" : "zero_lambda"; }

Variant parse_variant(const std::string& s) {
  if (s == "anti_symmetric") return Variant::anti_symmetric;
  if (s == "zero_lambda") return Variant::zero_lambda;
  throw std::invalid_argument("unknown variant '" + s + "' (expected zero_lambda or anti_symmetric)");
}

Representation from_lie_rep(const LeibnizAlgebra& alg, const std::vector<Matrix>& phi, Variant variant) {
  alg.require_valid();
  if (!is_lie(alg)) throw RepresentationError("from_lie_rep: algebra is not a Lie algebra");
  if (phi.size() != alg.dim()) throw RepresentationError("from_lie_rep: need one matrix per basis element");
  const std::size_t d = phi.empty() ? 0 : phi.front().rows();
  for (std::size_t x = 0; x < alg.dim(); ++x)
    for (std::size_t y = 0; y < alg.dim(); ++y)
      if (combine(phi, alg.product(x, y), d) != commutator(phi[x], phi[y]))
        throw RepresentationError("from_lie_rep: phi is not a Lie homomorphism at (" + alg.basis_names()[x] + "," +
                                  alg.basis_names()[y] + ")");
  std::vector<Matrix> rho, lambda;
  for (const auto& p : phi) {
    rho.push_back(-p);
    lambda.push_back(variant == Variant::anti_symmetric ? p : Matrix(d, d));
  }
  return Representation(alg, std::move(rho), std::move(lambda));
}

Representation adjoint_rep(const LeibnizAlgebra& alg) {
  alg.require_valid();
  std::vector<Matrix> rho, lambda;
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    rho.push_back(right_multiplication(alg, unit_vector(alg.dim(), b)));
    lambda.push_back(left_multiplication(alg, unit_vector(alg.dim(), b)));
  }
  return Representation(alg, std::move(rho), std::move(lambda));
}

Representation restrict(const Representation& rep, const Subspace& subalgebra) {
  if (!is_subalgebra(rep.algebra(), subalgebra)) throw RepresentationError("restrict: not a subalgebra");
  LeibnizAlgebra sub = induced_algebra(rep.algebra(), subalgebra);
  std::vector<Matrix> rho, lambda;
  for (const auto& v : subalgebra.vectors()) {
    rho.push_back(rep.rho_of(v));
    lambda.push_back(rep.lambda_of(v));
  }
  return Representation(std::move(sub), std::move(rho), std::move(lambda));
}

Representation subrepresentation(const Representation& rep, const Subspace& u) {
  if (u.ambient_dim() != rep.module_dim()) throw DimensionError("subrepresentation: ambient mismatch");
  if (!invariant_subspace_check(rep, u)) throw RepresentationError("subrepresentation: subspace is not invariant");
  std::vector<Matrix> rho, lambda;
  for (std::size_t b = 0; b < rep.algebra().dim(); ++b) {
    rho.push_back(restrict_operator(rep.rho(b), u));
    lambda.push_back(restrict_operator(rep.lambda(b), u));
  }
  if (rep.algebra().dim() == 0) return Representation::zero(rep.algebra(), u.dim());
  return Representation(rep.algebra(), std::move(rho), std::move(lambda));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.algebra() == b.algebra())) throw RepresentationError("direct_sum: algebra mismatch");
  if (a.algebra().dim() == 0) return Representation::zero(a.algebra(), a.module_dim() + b.module_dim());
  std::vector<Matrix> rho, lambda;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
    rho.push_back(block_diagonal(a.rho(i), b.rho(i)));
    lambda.push_back(block_diagonal(a.lambda(i), b.lambda(i)));
  }
  return Representation(a.algebra(), std::move(rho), std::move(lambda));
}

bool invariant_subspace_check(const Representation& rep, const Subspace& u) {
  if (u.ambient_dim() != rep.module_dim()) throw DimensionError("invariant_subspace_check: ambient mismatch");
  return is_invariant(rep.operators(), u);
}

std::string to_string(Irreducibility::Kind k) {
  switch (k) {
    case Irreducibility::Kind::abs_irreducible: return "abs_irreducible";
    case Irreducibility::Kind::reducible: return "reducible";
    case Irreducibility::Kind::undetermined: return "undetermined";
  }
  return "undetermined";
}

Irreducibility irreducibility(const Representation& rep) {
  const std::size_t d = rep.module_dim();
  const std::vector<Matrix> ops = rep.operators();
  Irreducibility out{Irreducibility::Kind::undetermined, std::nullopt, 0};
  if (d == 0) return out;
  out.envelope_dim = enveloping_algebra(ops, d).dim();
  if (out.envelope_dim == d * d) {
    out.kind = Irreducibility::Kind::abs_irreducible;
    return out;
  }

  auto proper = [d](const Subspace& s) { return !s.is_zero() && s.dim() < d; };
  auto found = [&](Subspace s) {
    out.kind = Irreducibility::Kind::reducible;
    out.witness = std::move(s);
    return out;
  };

  // Candidate vectors: standard basis, then eigenvectors for rational
  // eigenvalues of every operator.
  std::vector<Vector> candidates;
  for (std::size_t i = 0; i < d; ++i) candidates.push_back(unit_vector(d, i));
  for (const auto& op : ops) {
    for (const auto& [root, mult] : rational_roots(minimal_polynomial(op))) {
      (void)mult;
      for (auto& v : nullspace(op - root * Matrix::identity(d)).vectors()) candidates.push_back(std::move(v));
    }
  }
  for (const auto& v : candidates) {
    Subspace s = spin(ops, {v}, d);
    if (proper(s)) return found(std::move(s));
  }

  // Dual spinning: an invariant subspace of the transposed action has an
  // invariant annihilator.
  std::vector<Matrix> dual_ops;
  for (const auto& op : ops) dual_ops.push_back(op.transpose());
  std::vector<Vector> dual_candidates;
  for (std::size_t i = 0; i < d; ++i) dual_candidates.push_back(unit_vector(d, i));
  for (const auto& op : dual_ops)
    for (const auto& [root, mult] : rational_roots(minimal_polynomial(op))) {
      (void)mult;
      for (auto& v : nullspace(op - root * Matrix::identity(d)).vectors()) dual_candidates.push_back(std::move(v));
    }
  for (const auto& w : dual_candidates) {
    Subspace s = spin(dual_ops, {w}, d);
    if (proper(s)) {
      Subspace annihilator = nullspace(s.basis());
      if (proper(annihilator) && is_invariant(ops, annihilator)) return found(std::move(annihilator));
    }
  }
  return out;
}

Subspace sym_span(const Representation& rep) {
  std::vector<Matrix> sums;
  for (std::size_t b = 0; b < rep.algebra().dim(); ++b) sums.push_back(rep.lambda(b) + rep.rho(b));
  Subspace v = joint_image(sums, rep.module_dim());
  if (!invariant_subspace_check(rep, v)) throw InternalError("sym_span: span of [y,m]+[m,y] is not invariant");
  return v;
}

DichotomyVerdict dichotomy_classify(const Representation& rep) {
  if (irreducibility(rep).kind != Irreducibility::Kind::abs_irreducible)
    throw PreconditionError("dichotomy_classify: representation is not established as irreducible");
  Subspace v = sym_span(rep);
  const std::size_t n = rep.algebra().dim();
  if (v.is_zero()) {
    for (std::size_t b = 0; b < n; ++b)
      if (!(rep.lambda(b) + rep.rho(b)).is_zero()) throw InternalError("dichotomy: V = 0 but lambda != -rho");
    return {Variant::anti_symmetric, std::move(v)};
  }
  if (v.is_full()) {
    for (std::size_t b = 0; b < n; ++b)
      if (!rep.lambda(b).is_zero()) throw InternalError("dichotomy: V = M but lambda != 0");
    return {Variant::zero_lambda, std::move(v)};
  }
  throw InternalError("dichotomy: V is a proper nonzero invariant subspace of an irreducible module");
}

std::string to_string(Equivalence::Kind k) {
  switch (k) {
    case Equivalence::Kind::equivalent: return "equivalent";
    case Equivalence::Kind::not_equivalent: return "not_equivalent";
    case Equivalence::Kind::undetermined: return "undetermined";
  }
  return "undetermined";
}

Equivalence equivalence(const Representation& r1, const Representation& r2) {
  if (!(r1.algebra() == r2.algebra())) throw RepresentationError("equivalence: algebra mismatch");
  const std::size_t d1 = r1.module_dim();
  const std::size_t d2 = r2.module_dim();
  if (d1 != d2) return {Equivalence::Kind::not_equivalent, std::nullopt};
  const std::size_t d = d1;
  if (d == 0) return {Equivalence::Kind::equivalent, Matrix(0, 0)};

  const auto ops1 = r1.operators();
  const auto ops2 = r2.operators();
  // Unknown phi flattened row-major: phi(r, k) -> r * d + k.
  // phi A - B phi = 0 for each paired operator (A from r1, B from r2).
  Matrix sys(ops1.size() * d * d, d * d);
  std::size_t row = 0;
  for (std::size_t o = 0; o < ops1.size(); ++o) {
    const Matrix& a = ops1[o];
    const Matrix& b = ops2[o];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c, ++row)
        for (std::size_t k = 0; k < d; ++k) {
          if (a(k, c) != 0) sys(row, r * d + k) += a(k, c);
          if (b(r, k) != 0) sys(row, k * d + c) -= b(r, k);
        }
  }
  std::vector<Matrix> sols;
  for (const auto& v : nullspace(sys).vectors()) sols.push_back(Matrix::unflatten(v, d, d));
  if (sols.empty()) return {Equivalence::Kind::not_equivalent, std::nullopt};

  for (const auto& s : sols)
    if (invertible(s)) return {Equivalence::Kind::equivalent, s};

  static constexpr std::array<long, 8> kCoeffs{1, -1, 2, -2, 3, -3, 5, 7};
  for (std::size_t k = 0; k < 64; ++k) {
    Matrix trial(d, d);
    for (std::size_t i = 0; i < sols.size(); ++i) trial += Rational(kCoeffs[(k * (i + 1) + i) % kCoeffs.size()]) * sols[i];
    if (invertible(trial)) return {Equivalence::Kind::equivalent, trial};
  }
  return {Equivalence::Kind::undetermined, std::nullopt};
}

}  // namespace leibniz
