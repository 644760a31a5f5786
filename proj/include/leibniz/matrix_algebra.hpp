#pragma once

// Helpers for sets of operators acting on Q^d: enveloping algebras,
// commutants, spinning and restriction to invariant subspaces.

#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// Unital associative algebra generated by `gens`, as a subspace of
/// flattened d x d matrices. Grown breadth-first until the span is stable.
Subspace enveloping_algebra(const std::vector<Matrix>& gens, std::size_t d);

/// Basis of {P : P G = G P for every generator G}.
std::vector<Matrix> commutant_basis(const std::vector<Matrix>& gens, std::size_t d);

/// Smallest subspace containing `seeds` and mapped into itself by every generator.
Subspace spin(const std::vector<Matrix>& gens, const std::vector<Vector>& seeds, std::size_t d);

bool is_invariant(const std::vector<Matrix>& gens, const Subspace& u);

/// Matrix of `a` on the invariant subspace `u` in u's echelon basis.
/// Throws DimensionError if `u` is not invariant.
Matrix restrict_operator(const Matrix& a, const Subspace& u);

/// Sum of the images of all generators.
Subspace joint_image(const std::vector<Matrix>& gens, std::size_t d);

}  // namespace leibniz
