#pragma once

// Complete reducibility: the kernel obstruction, commutant splitting, and the
// two five-dimensional sl2-type examples.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/representation.hpp"

namespace leibniz {

struct KernelActionCheck {
  bool holds = true;
  std::optional<Vector> witness;  // kernel vector acting nontrivially
  std::optional<Matrix> action;   // its nonzero rho or lambda matrix
  std::string which;              // "rho" or "lambda"
};

/// A representation that splits into irreducibles must have rho|_I = lambda|_I = 0.
KernelActionCheck complete_reducibility_necessary(const Representation& rep);

std::vector<Matrix> commutant(const Representation& rep);

struct DecompositionResult {
  enum class Verdict { decomposed, indecomposable, no_irreducible_decomposition, undetermined } verdict;
  /// Invariant subspaces of M, independent and summing to M.
  std::vector<Subspace> components;
  /// Irreducibility of each component's restriction.
  std::vector<Irreducibility::Kind> component_kinds;
  std::optional<std::string> obstruction;
};
std::string to_string(DecompositionResult::Verdict v);

DecompositionResult decompose(const Representation& rep);

struct Example53 {
  LeibnizAlgebra algebra;
  Representation adjoint;
};
/// The 5-dimensional simple algebra on (e, f, h, x, y) and its adjoint bimodule.
Example53 example_5_3();

/// sl2 irreps of dimensions 3 and 2 stacked block-diagonally, each block with
/// its own variant.
Representation example_5_5(Variant first = Variant::zero_lambda, Variant second = Variant::zero_lambda);

/// Solutions L of 2L = L rho_h - rho_h L (flattened d x d matrices).
Subspace lambda_f_solutions(const Matrix& rho_h);

/// Entry positions (i, j) that are nonzero in some vector of `s`.
std::vector<std::pair<std::size_t, std::size_t>> support(const Subspace& s, std::size_t d);

/// Pairs (i, j) lying in different blocks of the sl2 irreps of dimensions a
/// and b (stacked block-diagonally) with h_j - h_i = 2.
std::vector<std::pair<std::size_t, std::size_t>> cross_block_weight_pairs(std::size_t a, std::size_t b);

}  // namespace leibniz
