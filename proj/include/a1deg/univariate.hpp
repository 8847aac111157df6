#pragma once

// Dense univariate polynomials over a base field, stored low degree first with
// no trailing zeros. Used as numerators and denominators of k(t).

#include <optional>
#include <utility>
#include <vector>

#include "a1deg/field.hpp"

namespace a1deg::univariate {

template <class K>
using Poly = std::vector<typename K::value_type>;

template <class K>
void trim(const K& k, Poly<K>& f) {
  while (!f.empty() && k.is_zero(f.back())) f.pop_back();
}

template <class K>
long degree(const Poly<K>& f) {
  return static_cast<long>(f.size()) - 1;
}

template <class K>
Poly<K> constant(const K& k, const typename K::value_type& c) {
  if (k.is_zero(c)) return {};
  return {c};
}

template <class K>
Poly<K> add(const K& k, const Poly<K>& f, const Poly<K>& g) {
  Poly<K> r(std::max(f.size(), g.size()), k.zero());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = k.add(r[i], g[i]);
  trim(k, r);
  return r;
}

template <class K>
Poly<K> neg(const K& k, Poly<K> f) {
  for (auto& c : f) c = k.neg(c);
  return f;
}

template <class K>
Poly<K> sub(const K& k, const Poly<K>& f, const Poly<K>& g) {
  return add(k, f, neg(k, g));
}

template <class K>
Poly<K> mul(const K& k, const Poly<K>& f, const Poly<K>& g) {
  if (f.empty() || g.empty()) return {};
  Poly<K> r(f.size() + g.size() - 1, k.zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (k.is_zero(f[i])) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(f[i], g[j]));
  }
  trim(k, r);
  return r;
}

template <class K>
Poly<K> scale(const K& k, Poly<K> f, const typename K::value_type& c) {
  for (auto& x : f) x = k.mul(x, c);
  trim(k, f);
  return f;
}

/// Euclidean division f = q g + r.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const K& k, Poly<K> f, const Poly<K>& g) {
  if (g.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  Poly<K> q;
  auto lc_inv = k.inv(g.back());
  if (f.size() >= g.size()) q.assign(f.size() - g.size() + 1, k.zero());
  while (!f.empty() && f.size() >= g.size()) {
    std::size_t shift = f.size() - g.size();
    auto c = k.mul(f.back(), lc_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = k.sub(f[shift + i], k.mul(c, g[i]));
    trim(k, f);
  }
  trim(k, q);
  return {std::move(q), std::move(f)};
}

template <class K>
Poly<K> make_monic(const K& k, Poly<K> f) {
  if (f.empty()) return f;
  auto lc_inv = k.inv(f.back());
  return scale(k, std::move(f), lc_inv);
}

template <class K>
Poly<K> gcd(const K& k, Poly<K> a, Poly<K> b) {
  while (!b.empty()) {
    auto r = divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(k, std::move(a));
}

template <class K>
Poly<K> derivative(const K& k, const Poly<K>& f) {
  Poly<K> r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(k.mul(k.from_int(static_cast<long>(i)), f[i]));
  trim(k, r);
  return r;
}

template <class K>
bool is_one(const K& k, const Poly<K>& f) {
  return f.size() == 1 && k.is_one(f[0]);
}

template <class K>
bool equal(const K& k, const Poly<K>& f, const Poly<K>& g) {
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!k.equal(f[i], g[i])) return false;
  return true;
}

/// Exact square root by back-substitution from the leading coefficient.
template <class K>
std::optional<Poly<K>> sqrt(const K& k, const Poly<K>& f) {
  if (f.empty()) return Poly<K>{};
  long d = degree<K>(f);
  if (d % 2 != 0) return std::nullopt;
  auto lead = k.sqrt(f.back());
  if (!lead) return std::nullopt;
  std::size_t half = static_cast<std::size_t>(d / 2);
  Poly<K> s(half + 1, k.zero());
  s[half] = *lead;
  auto two_lead_inv = k.inv(k.add(*lead, *lead));
  for (std::size_t i = half; i-- > 0;) {
    // Coefficient of t^(half + i) in s^2 involves s[i] linearly via 2 s[half] s[i].
    auto acc = f[half + i];
    for (std::size_t j = i + 1; j < half; ++j) acc = k.sub(acc, k.mul(s[j], s[half + i - j]));
    s[i] = k.mul(acc, two_lead_inv);
  }
  if (!equal(k, mul(k, s, s), f)) return std::nullopt;
  return s;
}

/// p-th root of a polynomial in t^p over F_p (coefficients are fixed by Frobenius).
template <class K>
Poly<K> pth_root(const K& k, const Poly<K>& f, std::uint64_t p) {
  Poly<K> r;
  for (std::size_t i = 0; i < f.size(); i += p) r.push_back(f[i]);
  trim(k, r);
  return r;
}

/// Monic product of the irreducible factors occurring with odd multiplicity.
/// Works in characteristic 0 and in odd characteristic p (passed as `p`, 0 for Q).
template <class K>
Poly<K> odd_kernel(const K& k, const Poly<K>& f, std::uint64_t p) {
  Poly<K> one{k.one()};
  if (degree<K>(f) <= 0) return one;
  Poly<K> result = one;
  Poly<K> monic = make_monic(k, f);
  Poly<K> c = gcd(k, monic, derivative(k, monic));
  Poly<K> w = divmod(k, monic, c).first;
  std::size_t i = 1;
  while (!is_one(k, w) && !w.empty()) {
    Poly<K> y = gcd(k, w, c);
    Poly<K> factor = make_monic(k, divmod(k, w, y).first);
    if (i % 2 == 1) result = mul(k, result, factor);
    ++i;
    w = y;
    c = divmod(k, c, y).first;
  }
  if (degree<K>(c) > 0 && p != 0) {
    // Remaining c is a p-th power; p is odd so multiplicity parity is preserved.
    result = mul(k, result, odd_kernel(k, pth_root(k, c, p), p));
  }
  return make_monic(k, result);
}

}  // namespace a1deg::univariate
