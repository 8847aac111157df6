#pragma once

#include <map>
#include <vector>

#include "a1deg/groebner.hpp"
#include "a1deg/matrix.hpp"

namespace a1deg {

/// k[x]/I for a zero-dimensional I, with coordinates in the standard-monomial
/// basis and (sparse) multiplication matrices for the variables.
template <ExactField K>
class QuotientAlgebra {
 public:
  using value_type = typename K::value_type;
  using Vector = std::vector<value_type>;

  explicit QuotientAlgebra(GroebnerBasis<K> gb) : gb_(std::move(gb)), basis_(quotient_basis(gb_)) {
    for (std::size_t i = 0; i < basis_.dimension(); ++i) index_.emplace(basis_.monomials[i], i);
    const auto& R = gb_.ring;
    for (std::size_t v = 0; v < R->arity(); ++v) {
      Matrix<K> m(R->field(), dimension(), dimension());
      for (std::size_t j = 0; j < dimension(); ++j) {
        auto col = coordinates(Poly<K>::term(R, basis_.monomials[j] * Monomial::variable(R->arity(), v), field().one()));
        for (std::size_t i = 0; i < dimension(); ++i) m.at(i, j) = col[i];
      }
      variables_.push_back(SparseMatrix<K>::from_dense(m));
    }
  }

  const GroebnerBasis<K>& groebner_basis() const { return gb_; }
  const QuotientBasis& basis() const { return basis_; }
  const RingPtr<K>& ring() const { return gb_.ring; }
  const K& field() const { return gb_.ring->field(); }
  std::size_t dimension() const { return basis_.dimension(); }

  /// Coordinates of the normal form of f.
  Vector coordinates(const Poly<K>& f) const {
    Vector out(dimension(), field().zero());
    const Poly<K> nf = normal_form(f, gb_);
    for (const auto& [m, c] : nf.terms()) {
      auto it = index_.find(m);
      if (it == index_.end()) fail(ErrorKind::UnexpectedMonomial, "normal form outside the standard basis");
      out[it->second] = c;
    }
    return out;
  }

  Poly<K> element(const Vector& coords) const {
    std::vector<typename Poly<K>::Term> terms;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!field().is_zero(coords[i])) terms.emplace_back(basis_.monomials[i], coords[i]);
    return Poly<K>(gb_.ring, std::move(terms));
  }

  std::optional<std::size_t> index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const SparseMatrix<K>& variable_matrix(std::size_t v) const { return variables_[v]; }

  /// Matrix of multiplication by the monomial x^alpha, cached.
  const SparseMatrix<K>& monomial_matrix(const Monomial& alpha) const {
    auto it = monomial_cache_.find(alpha);
    if (it != monomial_cache_.end()) return it->second;
    Matrix<K> acc = Matrix<K>::identity(field(), dimension());
    for (std::size_t v = 0; v < alpha.size(); ++v)
      for (unsigned e = 0; e < alpha[v]; ++e) acc = left_multiply(variables_[v], acc);
    return monomial_cache_.emplace(alpha, SparseMatrix<K>::from_dense(acc)).first->second;
  }

  /// Dense matrix of multiplication by f.
  Matrix<K> multiplication_matrix(const Poly<K>& f) const {
    Matrix<K> out(field(), dimension(), dimension());
    for (std::size_t j = 0; j < dimension(); ++j) {
      auto col = coordinates(f * Poly<K>::term(ring(), basis_.monomials[j], field().one()));
      for (std::size_t i = 0; i < dimension(); ++i) out.at(i, j) = col[i];
    }
    return out;
  }

 private:
  GroebnerBasis<K> gb_;
  QuotientBasis basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<SparseMatrix<K>> variables_;
  mutable std::map<Monomial, SparseMatrix<K>> monomial_cache_;
};

}  // namespace a1deg
