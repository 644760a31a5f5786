#pragma once

// Dense exact linear algebra over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Raised when operands have incompatible shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails. Indicates a bug, never
/// bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// "p/q" with q > 0 (q is always printed, "3/1").
std::string to_string(const Rational& q);
/// Accepts "p/q" or "p"; throws std::invalid_argument on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;
  /// Row-major flattening, used to treat matrix spaces as subspaces.
  Vector flatten() const { return data_; }
  static Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, std::size_t k);
/// Block-diagonal stacking.
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix form;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
bool invertible(const Matrix& m);
/// Throws DimensionError if `m` is not square or is singular.
Matrix inverse(const Matrix& m);

/// A linear subspace of Q^n stored as the nonzero rows of its reduced
/// row-echelon basis, so two subspaces are equal iff their bases are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  static Subspace row_space(const Matrix& m);
  static Subspace column_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> vectors() const { return basis_.row_vectors(); }
  Vector vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of `v` (assumed in the subspace) relative to the basis rows.
  Vector coordinates(const Vector& v) const;
  /// Reduce `v` modulo the subspace (zero exactly when v is contained).
  Vector reduce(const Vector& v) const;
  /// Indices of coordinates that are not pivots; spans a complement.
  std::vector<std::size_t> complement_coordinates() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Subspace spanned by the images of a subspace under a linear map.
Subspace image(const Matrix& a, const Subspace& u);
Subspace nullspace(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vector& v);
bool equal(const Subspace& a, const Subspace& b);

/// Incremental echelon basis; cheaper than repeated rref when vectors are
/// streamed in one at a time (span closures, envelopes).
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  /// Returns true if `v` was independent of the vectors already held.
  bool insert(Vector v);
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  Subspace subspace() const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;           // each row has a leading 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
};

struct SolveResult {
  std::optional<Vector> particular;
  Subspace homogeneous;
};

/// Solves A x = b. `particular` is empty when the system is inconsistent.
SolveResult solve(const Matrix& a, const Vector& b);

/// Coefficients in ascending degree; the last is 1.
using Polynomial = std::vector<Rational>;

Polynomial minimal_polynomial(const Matrix& m);
Matrix evaluate(const Polynomial& p, const Matrix& m);
Rational evaluate(const Polynomial& p, const Rational& x);
/// Distinct rational roots with multiplicities, ascending.
std::vector<std::pair<Rational, std::size_t>> rational_roots(const Polynomial& p);

}  // namespace leibniz
