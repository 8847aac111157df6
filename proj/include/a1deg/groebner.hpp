#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "a1deg/polynomial.hpp"

namespace a1deg {

/// Reduced Groebner basis: monic, auto-reduced, sorted by ascending leading
/// monomial. Reduced bases are canonical, so equality of ideals is equality
/// of generator lists.
template <ExactField K>
struct GroebnerBasis {
  RingPtr<K> ring;
  std::vector<Poly<K>> generators;

  bool is_unit_ideal() const { return generators.size() == 1 && generators[0].is_constant(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring, b.ring) && a.generators == b.generators;
  }
};

/// Standard monomials of a zero-dimensional ideal, ascending.
struct QuotientBasis {
  std::vector<Monomial> monomials;

  std::size_t dimension() const { return monomials.size(); }
  std::optional<std::size_t> index_of(const Monomial& m) const {
    for (std::size_t i = 0; i < monomials.size(); ++i)
      if (monomials[i] == m) return i;
    return std::nullopt;
  }
};

/// Fully reduced remainder of f modulo the polynomials in `divisors`.
template <ExactField K>
Poly<K> reduce(const Poly<K>& f, const std::vector<Poly<K>>& divisors) {
  const K& k = f.field();
  Poly<K> p = f;
  std::vector<typename Poly<K>::Term> rest;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Poly<K>* div = nullptr;
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(lm)) {
        div = &g;
        break;
      }
    }
    if (!div) {
      rest.emplace_back(lm, p.leading_coefficient());
      p.drop_leading();
      continue;
    }
    auto c = k.div(p.leading_coefficient(), div->leading_coefficient());
    p = p - div->mul_term(quotient(lm, div->leading_monomial()), c);
  }
  return Poly<K>(f.ring(), std::move(rest));
}

template <ExactField K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& gb) {
  if (!same_ring(f.ring(), gb.ring)) fail(ErrorKind::RingMismatch, "normal form in a different ring");
  return reduce(f, gb.generators);
}

namespace detail {

template <ExactField K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
  const K& k = f.field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(quotient(l, f.leading_monomial()), k.inv(f.leading_coefficient())) -
         g.mul_term(quotient(l, g.leading_monomial()), k.inv(g.leading_coefficient()));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

/// Gebauer-Moeller installation of a new basis element h (index `hi`).
inline void gm_update(std::vector<Monomial>& lms, std::vector<bool>& active, std::vector<Pair>& pairs,
                      std::size_t hi) {
  const Monomial& lh = lms[hi];
  std::vector<Pair> candidates;
  for (std::size_t g = 0; g < hi; ++g)
    if (active[g]) candidates.push_back({g, hi, lcm(lms[g], lh)});

  std::vector<Pair> kept;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    const Pair& p = candidates[a];
    bool keep = coprime(lms[p.i], lh);
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
        if (candidates[b].lcm.divides(p.lcm)) keep = false;
      for (std::size_t b = 0; b < kept.size() && keep; ++b)
        if (kept[b].lcm.divides(p.lcm)) keep = false;
    }
    if (keep) kept.push_back(p);
  }
  std::erase_if(kept, [&](const Pair& p) { return coprime(lms[p.i], lh); });

  std::erase_if(pairs, [&](const Pair& p) {
    return lh.divides(p.lcm) && !(lcm(lms[p.i], lh) == p.lcm) && !(lcm(lms[p.j], lh) == p.lcm);
  });
  pairs.insert(pairs.end(), kept.begin(), kept.end());

  for (std::size_t g = 0; g < hi; ++g)
    if (active[g] && lh.divides(lms[g])) active[g] = false;
}

}  // namespace detail

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy. Deterministic for a fixed input order.
template <ExactField K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& input) {
  if (input.empty()) fail(ErrorKind::DimensionMismatch, "empty generator list");
  RingPtr<K> ring = input.front().ring();
  for (const auto& f : input) input.front().check_ring(f);
  const MonomialOrder& ord = ring->order();

  std::vector<Poly<K>> basis;
  std::vector<Monomial> lms;
  std::vector<bool> active;
  std::vector<detail::Pair> pairs;

  auto unit = [&] { return GroebnerBasis<K>{ring, {Poly<K>::constant(ring, 1L)}}; };
  auto active_polys = [&] {
    std::vector<Poly<K>> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (active[i]) out.push_back(basis[i]);
    return out;
  };
  auto install = [&](Poly<K> h) {
    h = h.monic();
    lms.push_back(h.leading_monomial());
    basis.push_back(std::move(h));
    active.push_back(true);
    detail::gm_update(lms, active, pairs, basis.size() - 1);
  };

  for (const auto& f : input) {
    Poly<K> h = reduce(f, active_polys());
    if (h.is_zero()) continue;
    if (h.is_constant()) return unit();
    install(std::move(h));
  }

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      int c = ord.compare(it->lcm, best->lcm);
      if (c < 0 || (c == 0 && std::make_pair(it->j, it->i) < std::make_pair(best->j, best->i))) best = it;
    }
    detail::Pair p = *best;
    pairs.erase(best);
    Poly<K> h = reduce(detail::s_polynomial(basis[p.i], basis[p.j]), active_polys());
    if (h.is_zero()) continue;
    if (h.is_constant()) return unit();
    install(std::move(h));
  }

  // Auto-reduce the minimal basis.
  std::vector<Poly<K>> minimal = active_polys();
  std::vector<Poly<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly<K> lead = Poly<K>::term(ring, minimal[i].leading_monomial(), minimal[i].leading_coefficient());
    Poly<K> tail = minimal[i] - lead;
    reduced.push_back((lead + reduce(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return {ring, std::move(reduced)};
}

/// Groebner basis in a copy of the ring carrying a different monomial order.
template <ExactField K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& input, const MonomialOrder& order) {
  if (input.empty()) fail(ErrorKind::DimensionMismatch, "empty generator list");
  const auto& r = *input.front().ring();
  auto ring = make_ring(r.field(), r.names(), order);
  std::vector<Poly<K>> moved;
  for (const auto& f : input) moved.push_back(f.in_ring(ring));
  return buchberger(moved);
}

template <ExactField K>
bool is_zero_dimensional(const GroebnerBasis<K>& gb) {
  if (gb.is_unit_ideal()) return true;
  for (std::size_t v = 0; v < gb.ring->arity(); ++v) {
    bool pure = false;
    for (const auto& g : gb.generators) {
      const Monomial& m = g.leading_monomial();
      if (m[v] > 0 && m[v] == m.degree()) pure = true;
    }
    if (!pure) return false;
  }
  return true;
}

/// Standard monomials, ascending in the ring's order.
template <ExactField K>
QuotientBasis quotient_basis(const GroebnerBasis<K>& gb) {
  if (!is_zero_dimensional(gb)) fail(ErrorKind::NotZeroDimensional, "zeros are not isolated");
  QuotientBasis out;
  if (gb.is_unit_ideal()) return out;
  const std::size_t n = gb.ring->arity();
  auto standard = [&](const Monomial& m) {
    for (const auto& g : gb.generators)
      if (g.leading_monomial().divides(m)) return false;
    return true;
  };
  // The standard set is an order ideal: grow it one variable at a time.
  std::function<void(Monomial, std::size_t)> walk = [&](Monomial m, std::size_t from) {
    out.monomials.push_back(m);
    for (std::size_t v = from; v < n; ++v) {
      Monomial next = m;
      next.set(v, m[v] + 1);
      if (standard(next)) walk(next, v);
    }
  };
  walk(Monomial(n), 0);
  const MonomialOrder& ord = gb.ring->order();
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
  return out;
}

namespace detail {

/// k[x, u] with u last and an order eliminating u.
template <ExactField K>
RingPtr<K> with_elimination_variable(const RingPtr<K>& ring) {
  auto names = ring->names();
  names.push_back("_elim");
  return make_ring(ring->field(), std::move(names), MonomialOrder::elimination(1));
}

/// Generators of the GB free of the eliminated (last) variable, moved back.
template <ExactField K>
std::vector<Poly<K>> eliminate_last(const GroebnerBasis<K>& gb, const RingPtr<K>& ring) {
  std::vector<Poly<K>> out;
  const std::size_t u = gb.ring->arity() - 1;
  for (const auto& g : gb.generators) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) { return t.first[u] == 0; });
    if (free) out.push_back(embed(g, ring));
  }
  return out;
}

template <ExactField K>
std::vector<Poly<K>> intersection_generators(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b,
                                             const RingPtr<K>& ring) {
  auto big = with_elimination_variable(ring);
  Poly<K> u = Poly<K>::variable(big, ring->arity());
  Poly<K> one_minus_u = Poly<K>::constant(big, 1L) - u;
  std::vector<Poly<K>> gens;
  for (const auto& f : a) gens.push_back(u * embed(f, big));
  for (const auto& g : b) gens.push_back(one_minus_u * embed(g, big));
  return eliminate_last(buchberger(gens), ring);
}

}  // namespace detail

template <ExactField K>
GroebnerBasis<K> intersection(const GroebnerBasis<K>& a, const GroebnerBasis<K>& b) {
  if (!same_ring(a.ring, b.ring)) fail(ErrorKind::RingMismatch, "intersection of ideals in different rings");
  return buchberger(detail::intersection_generators(a.generators, b.generators, a.ring));
}

/// (I : g) = (I ∩ (g)) / g.
template <ExactField K>
GroebnerBasis<K> ideal_quotient(const GroebnerBasis<K>& I, const Poly<K>& g) {
  if (!same_ring(I.ring, g.ring())) fail(ErrorKind::RingMismatch, "ideal quotient in different rings");
  if (g.is_zero()) return {I.ring, {Poly<K>::constant(I.ring, 1L)}};
  if (!normal_form(g, I).is_zero()) {
    auto gens = detail::intersection_generators(I.generators, {g}, I.ring);
    std::vector<Poly<K>> quot;
    for (const auto& h : gens) quot.push_back(exact_divide(h, g));
    return buchberger(quot);
  }
  return {I.ring, {Poly<K>::constant(I.ring, 1L)}};
}

/// (I : J) for an ideal J given by generators.
template <ExactField K>
GroebnerBasis<K> ideal_quotient(const GroebnerBasis<K>& I, const std::vector<Poly<K>>& J) {
  std::optional<GroebnerBasis<K>> acc;
  for (const auto& g : J) {
    auto q = ideal_quotient(I, g);
    acc = acc ? intersection(*acc, q) : q;
  }
  if (!acc) return {I.ring, {Poly<K>::constant(I.ring, 1L)}};
  return *acc;
}

/// (I : g^∞), iterating quotients until the reduced basis stabilizes.
template <ExactField K>
GroebnerBasis<K> saturation(const GroebnerBasis<K>& I, const Poly<K>& g) {
  GroebnerBasis<K> cur = I;
  while (true) {
    auto next = ideal_quotient(cur, g);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

/// (I : J^∞) = ∩_g (I : g^∞) over the generators g of J.
template <ExactField K>
GroebnerBasis<K> saturation(const GroebnerBasis<K>& I, const std::vector<Poly<K>>& J) {
  std::optional<GroebnerBasis<K>> acc;
  for (const auto& g : J) {
    auto s = saturation(I, g);
    acc = acc ? intersection(*acc, s) : s;
  }
  if (!acc) return I;
  return *acc;
}

/// The m-primary component I : (I : m^∞) of a zero-dimensional ideal.
template <ExactField K>
GroebnerBasis<K> primary_component(const GroebnerBasis<K>& I, const std::vector<Poly<K>>& maximal) {
  auto away = saturation(I, maximal);
  return ideal_quotient(I, away.generators);
}

}  // namespace a1deg
