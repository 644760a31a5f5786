#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// Basis triple (i, j, k) at which [[b_i,b_j],b_k] = [[b_i,b_k],b_j] + [b_i,[b_j,b_k]] fails.
using Triple = std::array<std::size_t, 3>;

class InvalidAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite-dimensional (right) Leibniz algebra over Q given by structure
/// constants: table(i, j) holds the coordinates of [b_i, b_j].
///
/// The Leibniz identity is checked once at construction. Invalid algebras can
/// still be built (so they can be reported on), but every structural
/// operation calls require_valid() first.
class LeibnizAlgebra {
 public:
  LeibnizAlgebra() = default;
  /// `table` has dim*dim entries in row-major order, each of length dim.
  LeibnizAlgebra(std::vector<std::string> basis_names, std::vector<Vector> table);

  /// Sparse construction: unlisted brackets are zero.
  struct Entry {
    std::string left;
    std::string right;
    std::map<std::string, Rational> result;
  };
  static LeibnizAlgebra from_entries(std::vector<std::string> basis_names, const std::vector<Entry>& entries);
  static LeibnizAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;

  /// Coordinates of [b_i, b_j].
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  bool is_valid() const { return violations_.empty(); }
  const std::vector<Triple>& violations() const { return violations_; }
  void require_valid() const;

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Vector> table_;
  std::vector<Triple> violations_;
};

Vector bracket(const LeibnizAlgebra& alg, const Vector& x, const Vector& y);
std::vector<Triple> check_leibniz(const LeibnizAlgebra& alg);
bool is_lie(const LeibnizAlgebra& alg);

/// Matrix of v -> [v, x] (right multiplication, an inner derivation).
Matrix right_multiplication(const LeibnizAlgebra& alg, const Vector& x);
/// Matrix of v -> [x, v].
Matrix left_multiplication(const LeibnizAlgebra& alg, const Vector& x);

Subspace leibniz_kernel(const LeibnizAlgebra& alg);
Subspace product_space(const LeibnizAlgebra& alg, const Subspace& a, const Subspace& b);
Subspace ideal_closure(const LeibnizAlgebra& alg, const std::vector<Vector>& seeds);
bool is_ideal(const LeibnizAlgebra& alg, const Subspace& u);
bool is_subalgebra(const LeibnizAlgebra& alg, const Subspace& u);

struct Quotient {
  LeibnizAlgebra algebra;
  /// (dim L/J) x (dim L): coordinates of the image of each basis vector.
  Matrix projection;
  /// Basis indices of L whose images form the quotient basis.
  std::vector<std::size_t> section;
};

Quotient quotient(const LeibnizAlgebra& alg, const Subspace& ideal);

/// Structure constants of a subalgebra in its echelon basis. Basis vectors
/// that are unit vectors keep their label; others get "u<k>".
LeibnizAlgebra induced_algebra(const LeibnizAlgebra& alg, const Subspace& sub);
/// The same algebra written in the basis given by the columns of `change`.
LeibnizAlgebra change_basis(const LeibnizAlgebra& alg, const Matrix& change);
LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

enum class SeriesKind { lower_central, derived };

struct SeriesReport {
  SeriesKind kind;
  std::vector<Subspace> terms;
  bool stabilized = false;
  std::size_t terminal_dim = 0;
};

SeriesReport lower_central_series(const LeibnizAlgebra& alg);
SeriesReport derived_series(const LeibnizAlgebra& alg);
/// Derived series of a subalgebra (e.g. the radical), computed inside L.
SeriesReport derived_series(const LeibnizAlgebra& alg, const Subspace& sub);
/// L^k with L^1 = L.
Subspace lower_central_term(const LeibnizAlgebra& alg, std::size_t k);
bool is_solvable(const LeibnizAlgebra& alg);
bool is_nilpotent(const LeibnizAlgebra& alg);

/// Requires a Lie algebra.
Matrix killing_form(const LeibnizAlgebra& lie);
Subspace radical(const LeibnizAlgebra& alg);
bool is_semisimple(const LeibnizAlgebra& alg);

enum class Tristate { yes, no, undetermined };
std::string to_string(Tristate t);

struct SimplicityVerdict {
  Tristate verdict = Tristate::undetermined;
  /// Which test decided (or blocked) the verdict.
  std::string reason;
  std::optional<Subspace> witness;
};

SimplicityVerdict is_simple(const LeibnizAlgebra& alg);

/// Subspaces of gl(L), vectors are row-major flattened n x n matrices.
Subspace derivations(const LeibnizAlgebra& alg);
Subspace inner_derivations(const LeibnizAlgebra& alg);
bool check_inn_ideal(const LeibnizAlgebra& alg);

Subspace levi_subalgebra(const LeibnizAlgebra& alg);

struct StructureReport {
  bool is_lie = false;
  Subspace kernel;
  Subspace radical;
  bool solvable = false;
  bool nilpotent = false;
  bool semisimple = false;
  SimplicityVerdict simple;
};

StructureReport analyze(const LeibnizAlgebra& alg);

}  // namespace leibniz
