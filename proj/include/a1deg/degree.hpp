#pragma once

#include <random>
#include <vector>

#include "a1deg/bezoutian.hpp"
#include "a1deg/gw.hpp"

namespace a1deg {

/// A square system f = (f_1..f_n) in n variables.
template <ExactField K>
struct EndoSystem {
  std::vector<Poly<K>> polys;

  explicit EndoSystem(std::vector<Poly<K>> f) : polys(std::move(f)) { detail::check_square(polys); }

  const RingPtr<K>& ring() const { return polys.front().ring(); }
  std::size_t size() const { return polys.size(); }
};

/// Generators of a maximal ideal (a closed point). Maximality is trusted;
/// a non-maximal ideal yields the sum of local degrees over its components.
template <ExactField K>
struct MaximalIdealSpec {
  std::vector<Poly<K>> generators;
};

/// Everything computed along the way, for callers that want more than the class.
template <ExactField K>
struct DegreeReport {
  QuotientAlgebra<K> algebra;
  Matrix<K> gram;
  GWClass<K> degree;
};

template <ExactField K>
DegreeReport<K> global_degree_report(const EndoSystem<K>& f) {
  QuotientAlgebra<K> Q(buchberger(f.polys));
  Matrix<K> B = bezoutian_gram(delta_matrix(f.polys), Q);
  GWClass<K> c = gw_class(B);
  return {std::move(Q), std::move(B), std::move(c)};
}

template <ExactField K>
GWClass<K> global_degree(const EndoSystem<K>& f) {
  return global_degree_report(f).degree;
}

template <ExactField K>
DegreeReport<K> local_degree_report(const EndoSystem<K>& f, const MaximalIdealSpec<K>& m) {
  if (m.generators.empty()) fail(ErrorKind::PointNotOnZeroLocus, "empty point ideal");
  auto gm = buchberger(m.generators);
  if (gm.is_unit_ideal()) fail(ErrorKind::PointNotOnZeroLocus, "point ideal is the unit ideal");
  (void)quotient_basis(gm);
  for (const auto& fi : f.polys)
    if (!normal_form(fi, gm).is_zero()) fail(ErrorKind::PointNotOnZeroLocus, "system does not vanish at the point");
  auto I = buchberger(f.polys);
  QuotientAlgebra<K> Q(primary_component(I, m.generators));
  Matrix<K> B = bezoutian_gram(delta_matrix(f.polys), Q);
  GWClass<K> c = gw_class(B);
  return {std::move(Q), std::move(B), std::move(c)};
}

template <ExactField K>
GWClass<K> local_degree(const EndoSystem<K>& f, const MaximalIdealSpec<K>& m) {
  return local_degree_report(f, m).degree;
}

/// Sum of local degrees equals the global degree; the points must account
/// for the whole quotient dimension.
template <ExactField K>
bool check_local_global(const EndoSystem<K>& f, const std::vector<MaximalIdealSpec<K>>& points) {
  auto global = global_degree_report(f);
  std::size_t dim = 0;
  std::optional<GWClass<K>> sum;
  for (const auto& p : points) {
    auto local = local_degree_report(f, p);
    dim += local.algebra.dimension();
    sum = sum ? *sum + local.degree : local.degree;
  }
  if (dim != global.algebra.dimension())
    fail(ErrorKind::IncompleteCover, "local dimensions sum to " + std::to_string(dim) + ", global dimension is " +
                                         std::to_string(global.algebra.dimension()));
  if (!sum) return global.degree.rank() == 0;
  return equals(*sum, global.degree);
}

// --- calculation-rule utilities -----------------------------------------

/// A ∘ f for an invertible scalar matrix A.
template <ExactField K>
EndoSystem<K> transform(const EndoSystem<K>& f, const Matrix<K>& A) {
  if (A.rows() != f.size() || A.cols() != f.size()) fail(ErrorKind::DimensionMismatch, "matrix size");
  if (A.field().is_zero(A.determinant())) fail(ErrorKind::NonInvertibleMatrix, "transform matrix is singular");
  std::vector<Poly<K>> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Poly<K> acc(f.ring());
    for (std::size_t j = 0; j < f.size(); ++j) acc += f.polys[j].scaled(A.at(i, j));
    out.push_back(std::move(acc));
  }
  return EndoSystem<K>(std::move(out));
}

/// f ∘ g.
template <ExactField K>
EndoSystem<K> compose(const EndoSystem<K>& f, const EndoSystem<K>& g) {
  if (f.size() != g.size()) fail(ErrorKind::DimensionMismatch, "composition of systems of different sizes");
  std::vector<Poly<K>> out;
  for (const auto& fi : f.polys) out.push_back(substitute(fi, g.polys, g.ring()));
  return EndoSystem<K>(std::move(out));
}

/// x ↦ L(x) · g(x) for a polynomial matrix L.
template <ExactField K>
EndoSystem<K> apply_matrix(const PolyMatrix<K>& L, const EndoSystem<K>& g) {
  std::vector<Poly<K>> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Poly<K> acc(g.ring());
    for (std::size_t j = 0; j < g.size(); ++j) acc += L[i][j] * g.polys[j];
    out.push_back(std::move(acc));
  }
  return EndoSystem<K>(std::move(out));
}

/// Random upper unitriangular matrix with entries of degree <= 1.
template <ExactField K, class Rng>
PolyMatrix<K> random_unipotent(const RingPtr<K>& ring, Rng& rng, long coeff = 3) {
  const std::size_t n = ring->arity();
  std::uniform_int_distribution<long> c(-coeff, coeff);
  PolyMatrix<K> L(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        L[i].push_back(Poly<K>::constant(ring, 1L));
      } else if (j > i) {
        Poly<K> e = Poly<K>::constant(ring, c(rng));
        for (std::size_t v = 0; v < n; ++v) e += Poly<K>::variable(ring, v).scaled(ring->field().from_int(c(rng)));
        L[i].push_back(std::move(e));
      } else {
        L[i].push_back(Poly<K>(ring));
      }
    }
  return L;
}

}  // namespace a1deg
