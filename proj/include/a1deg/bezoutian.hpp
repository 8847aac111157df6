#pragma once

// Bezoutian of a square polynomial system and its Gram matrix in the tensor
// basis a_i(X) a_j(Y) of the quotient algebra.

#include <bit>
#include <map>
#include <string>
#include <vector>

#include "a1deg/groebner.hpp"
#include "a1deg/matrix.hpp"
#include "a1deg/quotient.hpp"

namespace a1deg {

/// k[X1..Xn, Y1..Yn] under degrevlex.
template <ExactField K>
RingPtr<K> doubled_ring(const K& field, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) names.push_back("Y" + std::to_string(i + 1));
  return make_ring(field, std::move(names));
}

template <ExactField K>
using PolyMatrix = std::vector<std::vector<Poly<K>>>;

template <ExactField K>
struct DeltaMatrix {
  RingPtr<K> ring;  // doubled ring
  PolyMatrix<K> entries;

  std::size_t size() const { return entries.size(); }
  const Poly<K>& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

namespace detail {

template <ExactField K>
void check_square(const std::vector<Poly<K>>& f) {
  if (f.empty()) fail(ErrorKind::DimensionMismatch, "empty system");
  for (const auto& g : f) f.front().check_ring(g);
  if (f.size() != f.front().ring()->arity())
    fail(ErrorKind::DimensionMismatch, "system must have as many polynomials as variables");
}

/// f in the X variables (side 0) or Y variables (side 1) of the doubled ring.
template <ExactField K>
Poly<K> to_side(const Poly<K>& f, const RingPtr<K>& doubled, std::size_t side) {
  const std::size_t n = f.ring()->arity();
  std::vector<Poly<K>> images;
  for (std::size_t l = 0; l < n; ++l) images.push_back(Poly<K>::variable(doubled, side * n + l));
  return substitute(f, images, doubled);
}

}  // namespace detail

/// Delta_ij = [f_i(Y_1..Y_{j-1}, X_j..X_n) - f_i(Y_1..Y_j, X_{j+1}..X_n)] / (X_j - Y_j).
template <ExactField K>
DeltaMatrix<K> delta_matrix(const std::vector<Poly<K>>& f) {
  detail::check_square(f);
  const std::size_t n = f.size();
  auto D = doubled_ring(f.front().field(), n);
  DeltaMatrix<K> delta{D, PolyMatrix<K>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    // mixed[k]: the first k variables replaced by Y, the rest by X.
    std::vector<Poly<K>> mixed;
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<Poly<K>> images;
      for (std::size_t l = 0; l < n; ++l) images.push_back(Poly<K>::variable(D, l < k ? n + l : l));
      mixed.push_back(substitute(f[i], images, D));
    }
    for (std::size_t j = 0; j < n; ++j) {
      auto diff = Poly<K>::variable(D, j) - Poly<K>::variable(D, n + j);
      delta.entries[i].push_back(exact_divide(mixed[j] - mixed[j + 1], diff));
    }
  }
  return delta;
}

/// Laplace expansion along the first row.
template <ExactField K>
Poly<K> cofactor_determinant(const PolyMatrix<K>& m, const RingPtr<K>& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Poly<K>::constant(ring, 1L);
  if (n == 1) return m[0][0];
  Poly<K> det(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix<K> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly<K>> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly<K> term = m[0][j] * cofactor_determinant(minor, ring);
    det = j % 2 ? det - term : det + term;
  }
  return det;
}

/// Fraction-free Bareiss elimination with row pivoting.
template <ExactField K>
Poly<K> bareiss_determinant(PolyMatrix<K> m, const RingPtr<K>& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Poly<K>::constant(ring, 1L);
  bool negate = false;
  Poly<K> prev = Poly<K>::constant(ring, 1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Poly<K>(ring);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly<K>(ring);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

template <ExactField K>
Poly<K> determinant(const PolyMatrix<K>& m, const RingPtr<K>& ring) {
  return m.size() <= 4 ? cofactor_determinant(m, ring) : bareiss_determinant(m, ring);
}

/// Union of the GBs of J(X) and J(Y); a GB of their sum because the blocks
/// share no variables.
template <ExactField K>
GroebnerBasis<K> doubled_basis(const GroebnerBasis<K>& J, const RingPtr<K>& doubled) {
  GroebnerBasis<K> out{doubled, {}};
  for (std::size_t side = 0; side < 2; ++side)
    for (const auto& g : J.generators) out.generators.push_back(detail::to_side(g, doubled, side));
  return out;
}

/// Bezoutian reduced modulo (J(X), J(Y)); J defaults to the ideal of f.
template <ExactField K>
Poly<K> bezoutian(const std::vector<Poly<K>>& f, const GroebnerBasis<K>& J) {
  auto delta = delta_matrix(f);
  return normal_form(determinant(delta.entries, delta.ring), doubled_basis(J, delta.ring));
}

template <ExactField K>
Poly<K> bezoutian(const std::vector<Poly<K>>& f) {
  return bezoutian(f, buchberger(f));
}

/// Coefficients B_ij of a reduced Bezoutian sum B_ij a_i(X) a_j(Y).
template <ExactField K>
Matrix<K> gram_matrix(const Poly<K>& bez, const QuotientBasis& basis_x, const QuotientBasis& basis_y) {
  const std::size_t n = bez.ring()->arity() / 2;
  Matrix<K> B(bez.field(), basis_x.dimension(), basis_y.dimension());
  for (const auto& [m, c] : bez.terms()) {
    Monomial a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, m[i]);
      b.set(i, m[n + i]);
    }
    auto i = basis_x.index_of(a), j = basis_y.index_of(b);
    if (!i || !j) fail(ErrorKind::UnexpectedMonomial, "Bezoutian term outside the tensor basis");
    B.at(*i, *j) = c;
  }
  return B;
}

/// Gram matrix computed directly in Q ⊗ Q: elements are m x m coefficient
/// matrices, X-multiplication acts on the left and Y-multiplication on the
/// right, and det(Delta) is expanded row by row over column subsets.
template <ExactField K>
Matrix<K> bezoutian_gram(const DeltaMatrix<K>& delta, const QuotientAlgebra<K>& Q) {
  const K& k = Q.field();
  const std::size_t n = delta.size(), m = Q.dimension();
  if (m == 0) return Matrix<K>(k, 0, 0);
  if (n > 24) fail(ErrorKind::DimensionMismatch, "system too large for subset expansion");

  struct Action {
    const SparseMatrix<K>* left;
    SparseMatrix<K> right;
  };
  std::vector<std::vector<std::vector<Action>>> actions(n, std::vector<std::vector<Action>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::map<Monomial, std::vector<std::pair<Monomial, typename K::value_type>>> by_x;
      for (const auto& [mono, c] : delta.at(i, j).terms()) {
        Monomial a(n), b(n);
        for (std::size_t l = 0; l < n; ++l) {
          a.set(l, mono[l]);
          b.set(l, mono[n + l]);
        }
        by_x[a].emplace_back(b, c);
      }
      for (const auto& [a, ys] : by_x) {
        Matrix<K> right(k, m, m);
        for (const auto& [b, c] : ys)
          for (const auto& e : Q.monomial_matrix(b).entries)
            right.at(e.row, e.col) = k.add(right.at(e.row, e.col), k.mul(c, e.value));
        actions[i][j].push_back({&Q.monomial_matrix(a), SparseMatrix<K>::from_dense(right)});
      }
    }

  auto apply = [&](const std::vector<Action>& acts, const Matrix<K>& C) {
    Matrix<K> out(k, m, m);
    for (const auto& act : acts) {
      auto part = right_multiply_transpose(left_multiply(*act.left, C), act.right);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
          if (!k.is_zero(part.at(r, c))) out.at(r, c) = k.add(out.at(r, c), part.at(r, c));
    }
    return out;
  };

  Matrix<K> unit(k, m, m);
  unit.at(0, 0) = k.one();  // the basis starts with the monomial 1
  std::map<std::uint32_t, Matrix<K>> layer{{0u, unit}};
  for (std::size_t row = 0; row < n; ++row) {
    std::map<std::uint32_t, Matrix<K>> next;
    for (const auto& [mask, C] : layer) {
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (1u << j) || actions[row][j].empty()) continue;
        Matrix<K> term = apply(actions[row][j], C);
        bool negate = std::popcount(mask >> (j + 1)) % 2 == 1;
        auto [it, inserted] = next.try_emplace(mask | (1u << j), k, m, m);
        Matrix<K>& acc = it->second;
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c)
            if (!k.is_zero(term.at(r, c)))
              acc.at(r, c) = negate ? k.sub(acc.at(r, c), term.at(r, c)) : k.add(acc.at(r, c), term.at(r, c));
      }
    }
    layer = std::move(next);
  }
  auto full = layer.find((1u << n) - 1u);
  if (full == layer.end()) return Matrix<K>(k, m, m);
  return full->second;
}

/// Gram matrix of the global Bezoutian form.
template <ExactField K>
Matrix<K> gram_matrix(const std::vector<Poly<K>>& f) {
  return bezoutian_gram(delta_matrix(f), QuotientAlgebra<K>(buchberger(f)));
}

/// Image of the Jacobian determinant in k[x]/(f).
template <ExactField K>
Poly<K> jacobian_image(const std::vector<Poly<K>>& f) {
  detail::check_square(f);
  PolyMatrix<K> jac(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) jac[i].push_back(f[i].derivative(j));
  return normal_form(determinant(jac, f.front().ring()), buchberger(f));
}

}  // namespace a1deg
