#include "leibniz/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace leibniz {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string owned(s);
  if (!owned.empty() && owned[0] == '+') owned.erase(0, 1);
  return Integer(owned, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_rows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionError("unflatten: size mismatch");
  Matrix m(rows, cols);
  m.data_ = v;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Matrix::trace() const {
  if (!square()) throw DimensionError("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const { return leibniz::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimension mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector product: size mismatch");
  Vector r = zero_vector(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (a(i, j) != 0 && v[j] != 0) r[i] += a(i, j) * v[j];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix power(const Matrix& m, std::size_t k) {
  if (!m.square()) throw DimensionError("power of non-square matrix");
  Matrix r = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * m;
  return r;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}, 0};
  Matrix& a = out.form;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead_row, j));
    Rational inv = 1 / a(lead_row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(lead_row, j);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = lead_row;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

bool invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw DimensionError("inverse of singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) { return row_space(Matrix::identity(ambient_dim)); }

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  return row_space(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Subspace s(m.cols());
  s.basis_ = Matrix(r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = r.form(i, j);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transpose()); }

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("subspace reduce: ambient mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_(i, j);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return leibniz::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace containment: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("subspace coordinates: ambient mismatch");
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (p < pivots_.size() && pivots_[p] == j) {
      ++p;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

Subspace image(const Matrix& a, const Subspace& u) {
  if (a.cols() != u.ambient_dim()) throw DimensionError("image: ambient mismatch");
  std::vector<Vector> imgs;
  for (std::size_t i = 0; i < u.dim(); ++i) imgs.push_back(a * u.vector(i));
  return Subspace::span(imgs, a.rows());
}

Subspace nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace sum: ambient mismatch");
  auto vs = a.vectors();
  auto ws = b.vectors();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return Subspace::span(vs, a.ambient_dim());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace intersect: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  // x = sum_i s_i a_i = sum_j t_j b_j  <=>  [A^T | -B^T] (s, t) = 0
  Matrix sys(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) sys(r, i) = a.basis()(i, r);
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) sys(r, a.dim() + j) = -b.basis()(j, r);
  Subspace coeffs = nullspace(sys);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < coeffs.dim(); ++k) {
    Vector s = coeffs.vector(k);
    Vector x = zero_vector(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (s[i] != 0)
        for (std::size_t r = 0; r < n; ++r) x[r] += s[i] * a.basis()(i, r);
    out.push_back(std::move(x));
  }
  return Subspace::span(out, n);
}

bool contains(const Subspace& a, const Vector& v) { return a.contains(v); }
bool equal(const Subspace& a, const Subspace& b) { return a == b; }

bool EchelonBuilder::insert(Vector v) {
  if (v.size() != ambient_) throw DimensionError("echelon insert: ambient mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
  }
  std::size_t p = 0;
  while (p < ambient_ && v[p] == 0) ++p;
  if (p == ambient_) return false;
  Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // Keep the held rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    Rational f = row[p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (v[j] != 0) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

Subspace EchelonBuilder::subspace() const { return Subspace::span(rows_, ambient_); }

SolveResult solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw DimensionError("solve: right-hand side length mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  RrefResult r = rref(aug);
  SolveResult out{std::nullopt, nullspace(a)};
  if (r.rank > 0 && r.pivots[r.rank - 1] == n) return out;
  Vector x = zero_vector(n);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.form(i, n);
  out.particular = std::move(x);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.square()) throw DimensionError("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vector> powers{Matrix::identity(n).flatten()};
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 1; k <= n + 1; ++k) {
    current = current * m;
    Vector target = current.flatten();
    SolveResult s = solve(Matrix::from_columns(powers, n * n), target);
    if (s.particular) {
      Polynomial p(k + 1);
      for (std::size_t i = 0; i < k; ++i) p[i] = -(*s.particular)[i];
      p[k] = 1;
      return p;
    }
    powers.push_back(std::move(target));
  }
  throw InternalError("minimal polynomial degree exceeded matrix size");
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  if (!m.square()) throw DimensionError("polynomial evaluation on non-square matrix");
  Matrix acc(m.rows(), m.cols());
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * m + p[i] * Matrix::identity(m.rows());
  return acc;
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

namespace {

// Positive divisors of |n| (n != 0). Trial division up to 10^6; a larger
// leftover cofactor is treated as prime, which can only lose candidates.
std::vector<Integer> divisors(const Integer& n) {
  Integer rest = abs(n);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= rest && p <= 1000000; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Divide p by (t - r); assumes r is a root.
Polynomial deflate(const Polynomial& p, const Rational& r) {
  Polynomial q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

std::vector<std::pair<Rational, std::size_t>> rational_roots(const Polynomial& p) {
  Polynomial poly = p;
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  std::vector<std::pair<Rational, std::size_t>> roots;
  if (poly.size() <= 1) return roots;

  std::size_t zero_mult = 0;
  while (poly.size() > 1 && poly.front() == 0) {
    poly.erase(poly.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);

  if (poly.size() > 1) {
    Integer lcm_den = 1;
    for (const auto& c : poly) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    Integer a0 = Rational(poly.front() * lcm_den).get_num();
    Integer an = Rational(poly.back() * lcm_den).get_num();
    std::vector<Rational> candidates;
    for (const auto& d : divisors(a0))
      for (const auto& e : divisors(an)) {
        Rational c(d, e);
        c.canonicalize();
        candidates.push_back(c);
        candidates.push_back(-c);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates) {
      std::size_t mult = 0;
      while (poly.size() > 1 && evaluate(poly, c) == 0) {
        poly = deflate(poly, c);
        ++mult;
      }
      if (mult > 0) roots.emplace_back(c, mult);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

}  // namespace leibniz
