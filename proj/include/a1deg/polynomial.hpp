#pragma once

// Sparse distributed multivariate polynomials. Terms are kept sorted in
// decreasing order for the ring's monomial order, so the leading term is
// always terms().front().

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "a1deg/error.hpp"
#include "a1deg/field.hpp"

namespace a1deg {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(nvars)) {
    if (nvars > kMaxVariables) fail(ErrorKind::DimensionMismatch, "too many variables");
  }
  Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
  }

  std::size_t size() const { return nvars_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Same exponents in a ring of a different arity; dropped entries must be zero.
  Monomial resized(std::size_t n) const {
    Monomial r(n);
    for (std::size_t i = 0; i < std::max<std::size_t>(n, nvars_); ++i) {
      unsigned e = i < nvars_ ? exp_[i] : 0;
      if (i >= n) {
        if (e) fail(ErrorKind::RingMismatch, "monomial uses a variable outside the target ring");
        continue;
      }
      r.set(i, e);
    }
    return r;
  }

  void set(std::size_t i, unsigned e) {
    degree_ = degree_ - exp_[i] + e;
    exp_[i] = static_cast<std::uint16_t>(e);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] + b.exp_[i]);
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  bool divides(const Monomial& b) const {
    if (degree_ > b.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] > b.exp_[i]) return false;
    return true;
  }

  /// b / a, assuming a divides b.
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r(b.nvars_);
    for (std::size_t i = 0; i < b.nvars_; ++i) r.exp_[i] = static_cast<std::uint16_t>(b.exp_[i] - a.exp_[i]);
    r.degree_ = b.degree_ - a.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    unsigned d = 0;
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      d += r.exp_[i];
    }
    r.degree_ = d;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars_; ++i)
      if (a.exp_[i] && b.exp_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_) return false;
    for (std::size_t i = 0; i < a.nvars_; ++i)
      if (a.exp_[i] != b.exp_[i]) return false;
    return true;
  }

  /// Plain lexicographic comparison on raw exponents, for use as a map key.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.exp_.begin(), a.exp_.begin() + a.nvars_, b.exp_.begin(),
                                        b.exp_.begin() + b.nvars_);
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint16_t nvars_ = 0;
  unsigned degree_ = 0;
};

/// Monomial order: degrevlex, lex, or an elimination order in which the
/// trailing `eliminated` variables form a degrevlex block compared first.
/// `priority` optionally lists variables from most to least significant.
struct MonomialOrder {
  enum class Kind { DegRevLex, Lex, Elimination };

  Kind kind = Kind::DegRevLex;
  std::size_t eliminated = 0;
  std::vector<std::size_t> priority;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0, {}}; }
  static MonomialOrder elimination(std::size_t trailing) { return {Kind::Elimination, trailing, {}}; }

  /// -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.size();
    auto var = [&](std::size_t i) { return priority.empty() ? i : priority[i]; };
    switch (kind) {
      case Kind::Lex:
        for (std::size_t i = 0; i < n; ++i) {
          unsigned x = a[var(i)], y = b[var(i)];
          if (x != y) return x < y ? -1 : 1;
        }
        return 0;
      case Kind::DegRevLex:
        return degrevlex_block(a, b, 0, n, var);
      case Kind::Elimination: {
        if (int c = degrevlex_block(a, b, n - eliminated, n, var)) return c;
        return degrevlex_block(a, b, 0, n - eliminated, var);
      }
    }
    return 0;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  template <class Var>
  static int degrevlex_block(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, Var var) {
    unsigned da = 0, db = 0;
    if (lo == 0 && hi == a.size()) {
      da = a.degree();
      db = b.degree();
    } else {
      for (std::size_t i = lo; i < hi; ++i) {
        da += a[var(i)];
        db += b[var(i)];
      }
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
      unsigned x = a[var(i)], y = b[var(i)];
      if (x != y) return x > y ? -1 : 1;
    }
    return 0;
  }
};

/// k[x_1..x_n] with named variables and a fixed monomial order.
template <ExactField K>
class Ring {
 public:
  Ring(K field, std::vector<std::string> names, MonomialOrder order = {})
      : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {
    if (names_.size() > kMaxVariables) fail(ErrorKind::DimensionMismatch, "too many variables");
  }

  const K& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t arity() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const Ring& o) const {
    return field_ == o.field_ && names_ == o.names_ && order_ == o.order_;
  }

 private:
  K field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

template <ExactField K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <ExactField K>
RingPtr<K> make_ring(K field, std::vector<std::string> names, MonomialOrder order = {}) {
  return std::make_shared<const Ring<K>>(std::move(field), std::move(names), std::move(order));
}

template <ExactField K>
bool same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
  return a == b || *a == *b;
}

template <ExactField K>
class Poly {
 public:
  using value_type = typename K::value_type;
  using Term = std::pair<Monomial, value_type>;

  explicit Poly(RingPtr<K> ring) : ring_(std::move(ring)) {}

  /// Takes terms in any order; combines duplicates and drops zeros.
  Poly(RingPtr<K> ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  static Poly constant(RingPtr<K> ring, const value_type& c) {
    Poly p(ring);
    if (!ring->field().is_zero(c)) p.terms_.emplace_back(Monomial(ring->arity()), c);
    return p;
  }
  static Poly constant(RingPtr<K> ring, long c) {
    auto v = ring->field().from_int(c);
    return constant(std::move(ring), v);
  }
  static Poly variable(RingPtr<K> ring, std::size_t i) {
    Poly p(ring);
    p.terms_.emplace_back(Monomial::variable(ring->arity(), i), ring->field().one());
    return p;
  }
  static Poly term(RingPtr<K> ring, Monomial m, value_type c) {
    Poly p(ring);
    if (!ring->field().is_zero(c)) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  const Monomial& leading_monomial() const { return terms_.front().first; }
  const value_type& leading_coefficient() const { return terms_.front().second; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  /// Coefficient of the monomial m (zero when absent).
  value_type coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.first == m) return t.second;
    return field().zero();
  }

  value_type constant_term() const { return coefficient(Monomial(ring_->arity())); }

  Poly operator-() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, field().neg(c));
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return a.combine(b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return a.combine(b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    const K& k = a.field();
    std::map<Monomial, value_type> acc;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        auto prod = k.mul(ca, cb);
        auto [it, inserted] = acc.try_emplace(ma * mb, prod);
        if (!inserted) it->second = k.add(it->second, prod);
      }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!k.is_zero(c)) terms.emplace_back(m, std::move(c));
    Poly r(a.ring_);
    r.terms_ = std::move(terms);
    r.sort_terms();
    return r;
  }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const value_type& c) const {
    if (field().is_zero(c)) return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, x] : terms_) r.terms_.emplace_back(m, field().mul(x, c));
    return r;
  }

  /// c * m * this; monomial multiplication preserves the term order.
  Poly mul_term(const Monomial& m, const value_type& c) const {
    if (field().is_zero(c)) return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [mm, x] : terms_) r.terms_.emplace_back(mm * m, field().mul(x, c));
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(ring_, 1L), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coefficient()));
  }

  Poly derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      unsigned e = m[var];
      if (e == 0) continue;
      Monomial d = m;
      d.set(var, e - 1);
      out.emplace_back(d, field().mul(field().from_int(static_cast<long>(e)), c));
    }
    return Poly(ring_, std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first)) return false;
      if (!a.field().equal(a.terms_[i].second, b.terms_[i].second)) return false;
    }
    return true;
  }

  std::string to_string() const;

  void check_ring(const Poly& other) const {
    if (!same_ring(ring_, other.ring_)) fail(ErrorKind::RingMismatch, "polynomials live in different rings");
  }

  void drop_leading() { terms_.erase(terms_.begin()); }

  /// Rebinds the same terms to an equal-arity ring (e.g. with another order).
  Poly in_ring(RingPtr<K> ring) const {
    if (ring->arity() != ring_->arity()) fail(ErrorKind::RingMismatch, "arity differs");
    Poly r(std::move(ring));
    r.terms_ = terms_;
    r.sort_terms();
    return r;
  }

 private:
  Poly combine(const Poly& b, bool subtract) const {
    check_ring(b);
    const K& k = field();
    const MonomialOrder& ord = ring_->order();
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      int c = i == terms_.size()     ? -1
              : j == b.terms_.size() ? 1
                                     : ord.compare(terms_[i].first, b.terms_[j].first);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& [m, x] = b.terms_[j++];
        r.terms_.emplace_back(m, subtract ? k.neg(x) : x);
      } else {
        auto s = subtract ? k.sub(terms_[i].second, b.terms_[j].second) : k.add(terms_[i].second, b.terms_[j].second);
        if (!k.is_zero(s)) r.terms_.emplace_back(terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    const MonomialOrder& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& x, const Term& y) { return ord.compare(x.first, y.first) > 0; });
  }

  void normalize() {
    const K& k = field();
    for (const auto& t : terms_)
      if (t.first.size() != ring_->arity()) fail(ErrorKind::RingMismatch, "monomial arity differs from ring");
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second = k.add(out.back().second, t.second);
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [&](const Term& t) { return k.is_zero(t.second); });
    terms_ = std::move(out);
  }

  RingPtr<K> ring_;
  std::vector<Term> terms_;
};

template <ExactField K>
std::string format_monomial(const Ring<K>& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.names()[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

template <ExactField K>
std::string Poly<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string coef = field().format(c);
    bool compound = coef.find_first_of("+/", 1) != std::string::npos ||
                    coef.find('-', 1) != std::string::npos || coef.find('*') != std::string::npos;
    if (compound) coef = "(" + coef + ")";
    std::string term;
    if (m.is_one()) {
      term = coef;
    } else if (coef == "1") {
      term = format_monomial(*ring_, m);
    } else if (coef == "-1") {
      term = "-" + format_monomial(*ring_, m);
    } else {
      term = coef + "*" + format_monomial(*ring_, m);
    }
    if (!out.empty()) out += term.front() == '-' ? " - " : " + ";
    if (!out.empty() && term.front() == '-') term.erase(0, 1);
    out += term;
  }
  return out;
}

/// Moves f into a ring whose first variables are those of f's ring (or the
/// reverse, when f only uses the shared leading variables).
template <ExactField K>
Poly<K> embed(const Poly<K>& f, const RingPtr<K>& target) {
  std::vector<typename Poly<K>::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m.resized(target->arity()), c);
  return Poly<K>(target, std::move(terms));
}

/// Image of f under the ring map sending variable i to images[i].
template <ExactField K>
Poly<K> substitute(const Poly<K>& f, const std::vector<Poly<K>>& images, const RingPtr<K>& target) {
  if (images.size() != f.ring()->arity())
    fail(ErrorKind::MissingAssignment, "substitution must assign every variable");
  for (const auto& g : images)
    if (!same_ring(g.ring(), target)) fail(ErrorKind::RingMismatch, "substitution images must share the target ring");
  std::vector<std::vector<Poly<K>>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Poly<K>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly<K>::constant(target, 1L));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  std::vector<typename Poly<K>::Term> acc;
  for (const auto& [m, c] : f.terms()) {
    Poly<K> t = Poly<K>::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = t * power(i, m[i]);
    for (const auto& term : t.terms()) acc.push_back(term);
  }
  return Poly<K>(target, std::move(acc));
}

/// Named-variable form of substitute; every variable of f must be assigned.
template <ExactField K>
Poly<K> substitute(const Poly<K>& f, const std::map<std::string, Poly<K>>& assignment, const RingPtr<K>& target) {
  std::vector<Poly<K>> images;
  for (const auto& name : f.ring()->names()) {
    auto it = assignment.find(name);
    if (it == assignment.end()) fail(ErrorKind::MissingAssignment, "no image for variable " + name);
    images.push_back(it->second);
  }
  return substitute(f, images, target);
}

/// Quotient q with q * g = f; InexactDivision when g does not divide f.
template <ExactField K>
Poly<K> exact_divide(const Poly<K>& f, const Poly<K>& g) {
  f.check_ring(g);
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "exact division by zero polynomial");
  const K& k = f.field();
  Poly<K> q(f.ring()), r = f;
  const auto lc_inv = k.inv(g.leading_coefficient());
  while (!r.is_zero()) {
    const Monomial& lm = r.leading_monomial();
    if (!g.leading_monomial().divides(lm)) fail(ErrorKind::InexactDivision, "divisor does not divide dividend");
    Monomial m = quotient(lm, g.leading_monomial());
    auto c = k.mul(r.leading_coefficient(), lc_inv);
    q = q + Poly<K>::term(f.ring(), m, c);
    r = r - g.mul_term(m, c);
  }
  return q;
}

}  // namespace a1deg
