#include "leibniz/matrix_algebra.hpp"

#include <deque>

namespace leibniz {

Subspace enveloping_algebra(const std::vector<Matrix>& gens, std::size_t d) {
  EchelonBuilder span(d * d);
  std::deque<Matrix> frontier;
  Matrix id = Matrix::identity(d);
  if (span.insert(id.flatten())) frontier.push_back(id);
  while (!frontier.empty() && span.dim() < d * d) {
    Matrix word = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Matrix next = word * g;
      if (span.insert(next.flatten())) frontier.push_back(std::move(next));
    }
  }
  return span.subspace();
}

std::vector<Matrix> commutant_basis(const std::vector<Matrix>& gens, std::size_t d) {
  // Unknown P flattened row-major: P(r, k) -> r * d + k.
  Matrix sys(gens.size() * d * d, d * d);
  std::size_t row = 0;
  for (const auto& g : gens) {
    if (g.rows() != d || g.cols() != d) throw DimensionError("commutant: generator shape mismatch");
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c, ++row) {
        for (std::size_t k = 0; k < d; ++k) {
          if (g(k, c) != 0) sys(row, r * d + k) += g(k, c);
          if (g(r, k) != 0) sys(row, k * d + c) -= g(r, k);
        }
      }
    }
  }
  std::vector<Matrix> out;
  for (const auto& v : nullspace(sys).vectors()) out.push_back(Matrix::unflatten(v, d, d));
  return out;
}

Subspace spin(const std::vector<Matrix>& gens, const std::vector<Vector>& seeds, std::size_t d) {
  EchelonBuilder span(d);
  std::deque<Vector> frontier;
  for (const auto& s : seeds)
    if (span.insert(s)) frontier.push_back(s);
  while (!frontier.empty() && span.dim() < d) {
    Vector v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Vector w = g * v;
      if (span.insert(w)) frontier.push_back(std::move(w));
    }
  }
  return span.subspace();
}

bool is_invariant(const std::vector<Matrix>& gens, const Subspace& u) {
  for (const auto& g : gens)
    for (std::size_t i = 0; i < u.dim(); ++i)
      if (!u.contains(g * u.vector(i))) return false;
  return true;
}

Matrix restrict_operator(const Matrix& a, const Subspace& u) {
  Matrix r(u.dim(), u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) {
    Vector img = a * u.vector(k);
    if (!u.contains(img)) throw DimensionError("restrict_operator: subspace is not invariant");
    Vector c = u.coordinates(img);
    for (std::size_t i = 0; i < u.dim(); ++i) r(i, k) = c[i];
  }
  return r;
}

Subspace joint_image(const std::vector<Matrix>& gens, std::size_t d) {
  EchelonBuilder span(d);
  for (const auto& g : gens)
    for (std::size_t c = 0; c < g.cols(); ++c) span.insert(g.column(c));
  return span.subspace();
}

}  // namespace leibniz
