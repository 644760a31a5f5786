#pragma once

// sl2, its irreducible Leibniz representations and the simple Leibniz
// algebras whose Lie quotient is sl2.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/representation.hpp"

namespace leibniz {

/// Basis (e, f, h) with [e,f] = h, [e,h] = 2e, [h,f] = 2f (and the
/// antisymmetric counterparts).
LeibnizAlgebra sl2_algebra();

struct Sl2Triple {
  Matrix e, f, h;
};

/// (m+1)-dimensional right action of sl2. With 1-based indices i, j:
///   (rho_e)_{i,i+1} = i(m+1-i), (rho_f)_{i,i-1} = -1, (rho_h)_{i,i} = m+2-2i.
Sl2Triple sl2_irrep_rho(std::size_t m);

Representation sl2_leibniz_irrep(std::size_t m, Variant variant);

/// Residual flags for the twelve identities obtained by writing the three
/// axioms out on the sl2 multiplication table. Identities 4-12 state two
/// equalities each; an identity passes only if both hold.
struct Sl2ConstraintReport {
  std::array<bool, 12> holds{};
  std::vector<int> failing_identities;  // 1-based
  bool all_hold() const { return failing_identities.empty(); }
};

/// `algebra` must be sl2_algebra() (PreconditionError otherwise). The action
/// need not satisfy the axioms; that is the point of the check.
Sl2ConstraintReport check_sl2_constraints(const LeibnizAlgebra& algebra, const BimoduleAction& action);
Sl2ConstraintReport check_sl2_constraints(const Representation& rep);

/// n-dimensional simple Leibniz algebra on (e, f, h, x_0, ..., x_{n-4}) with
///   [x_k,h] = (n-4-2k) x_k, [x_k,f] = x_{k+1}, [x_k,e] = k(k+3-n) x_{k-1}
/// on top of the sl2 table. Requires n >= 5.
LeibnizAlgebra simple_ext_algebra(std::size_t n);

/// One equation c * v^2 = 0 (c != 0) used to force a parameter to zero.
struct QuadraticForcing {
  std::string parameter;  // e.g. "rho_I[0]" or "lambda_I[0]"
  Rational q;             // |c|, positive
  std::string source;     // axiom and pair that produced it
};

/// Result of solving for the action of the kernel x_k on an (m+1)-dim module
/// whose sl2 part acts irreducibly through sl2_irrep_rho(m).
struct ExtensionSolution {
  std::size_t n = 0;
  std::size_t m = 0;
  enum class Status { forced, undetermined } status = Status::undetermined;
  std::string reason;

  std::vector<Matrix> forced_rho_I;     // per x_k
  std::vector<Matrix> forced_lambda_I;  // per x_k
  std::size_t free_parameters = 0;

  /// Dimensions of the solution families left by the linear stage.
  std::size_t linear_rho_params = 0;
  std::size_t linear_lambda_params = 0;
  bool quadratic_stage_used = false;
  std::vector<QuadraticForcing> quadratic_equations;
  /// Diagonal of rho_{x_s} in the linear family (even n, n-4 = 2s), the
  /// b_1, ..., b_{m+1} profile that the quadratic stage collapses.
  std::optional<Vector> middle_weight_diagonal;

  /// Admissible a in lambda|_sl2 = a * rho|_sl2 (expected {-1, 0}).
  std::vector<Rational> lambda_scalars;
};

ExtensionSolution extension_rep_solve(std::size_t n, std::size_t m);

/// Irreducible (m+1)-dimensional representations of an algebra whose Levi
/// factor is span{e, f, h} with the sl2 table: the sl2 irrep extended by zero
/// on the kernel, in both variants (one representation when m = 0).
std::vector<Representation> classify_sl2_type_irreps(const LeibnizAlgebra& alg, std::size_t m);
std::vector<Representation> classify_extension_irreps(std::size_t n, std::size_t m);

}  // namespace leibniz
