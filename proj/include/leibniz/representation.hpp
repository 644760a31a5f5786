#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Unvalidated bimodule data: one right action rho_b and one left action
/// lambda_b per basis element b.
struct BimoduleAction {
  std::size_t module_dim = 0;
  std::vector<Matrix> rho;
  std::vector<Matrix> lambda;

  friend bool operator==(const BimoduleAction&, const BimoduleAction&) = default;
};

/// One failed axiom on a basis pair.
///   (1) rho_[x,y]    = rho_y rho_x    - rho_x rho_y
///   (2) lambda_[x,y] = rho_y lambda_x - lambda_x rho_y
///   (3) lambda_[x,y] = rho_y lambda_x + lambda_x lambda_y
struct AxiomViolation {
  int axiom = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  Matrix residual;
};

class RepresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws RepresentationError on shape mismatch.
std::vector<AxiomViolation> axiom_violations(const LeibnizAlgebra& alg, const BimoduleAction& action);

/// A validated Leibniz representation (an L-bimodule M with [m,x] = rho_x(m)
/// and [x,m] = lambda_x(m)).
class Representation {
 public:
  /// Validates shapes and axioms (1)-(3) on all basis pairs.
  Representation(LeibnizAlgebra algebra, std::vector<Matrix> rho, std::vector<Matrix> lambda);

  static Representation zero(LeibnizAlgebra algebra, std::size_t module_dim);

  const LeibnizAlgebra& algebra() const { return algebra_; }
  std::size_t module_dim() const { return action_.module_dim; }
  const Matrix& rho(std::size_t b) const { return action_.rho.at(b); }
  const Matrix& lambda(std::size_t b) const { return action_.lambda.at(b); }
  const BimoduleAction& action() const { return action_; }

  /// rho_x = sum_i x_i rho_{b_i}
  Matrix rho_of(const Vector& x) const;
  Matrix lambda_of(const Vector& x) const;
  /// All rho_b followed by all lambda_b.
  std::vector<Matrix> operators() const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.algebra_ == b.algebra_ && a.action_ == b.action_;
  }

 private:
  LeibnizAlgebra algebra_;
  BimoduleAction action_;
};

Representation new_representation(const LeibnizAlgebra& alg, std::vector<Matrix> rho, std::vector<Matrix> lambda);

enum class Variant { anti_symmetric, zero_lambda };
std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// anti_symmetric: (rho, lambda) = (-phi, phi); zero_lambda: (-phi, 0).
/// Throws RepresentationError unless phi is a Lie homomorphism of the Lie
/// algebra `alg`.
Representation from_lie_rep(const LeibnizAlgebra& alg, const std::vector<Matrix>& phi, Variant variant);

Representation adjoint_rep(const LeibnizAlgebra& alg);

/// Restriction to a subalgebra, re-expressed on its echelon basis.
Representation restrict(const Representation& rep, const Subspace& subalgebra);
/// Sub-bimodule on an invariant subspace U of M, in U's echelon basis.
Representation subrepresentation(const Representation& rep, const Subspace& u);
Representation direct_sum(const Representation& a, const Representation& b);

bool invariant_subspace_check(const Representation& rep, const Subspace& u);

struct Irreducibility {
  enum class Kind { abs_irreducible, reducible, undetermined } kind;
  std::optional<Subspace> witness;
  std::size_t envelope_dim = 0;
};
std::string to_string(Irreducibility::Kind k);

Irreducibility irreducibility(const Representation& rep);

/// span{ lambda_b(m) + rho_b(m) }.
Subspace sym_span(const Representation& rep);

struct DichotomyVerdict {
  Variant variant;
  Subspace v_span;
};

/// Requires an absolutely irreducible representation (PreconditionError
/// otherwise). Throws InternalError if neither branch of the dichotomy holds.
DichotomyVerdict dichotomy_classify(const Representation& rep);

struct Equivalence {
  enum class Kind { equivalent, not_equivalent, undetermined } kind;
  std::optional<Matrix> intertwiner;
};
std::string to_string(Equivalence::Kind k);

/// Searches for an invertible phi with phi rho1(b) = rho2(b) phi and
/// phi lambda1(b) = lambda2(b) phi.
Equivalence equivalence(const Representation& r1, const Representation& r2);

}  // namespace leibniz
