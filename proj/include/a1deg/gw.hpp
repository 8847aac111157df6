#pragma once

// Grothendieck-Witt classes h*H + <u_1,...,u_r> with canonical square-class
// representatives, symmetric diagonalization, invariants and equality.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "a1deg/field.hpp"
#include "a1deg/function_field.hpp"
#include "a1deg/integer.hpp"
#include "a1deg/matrix.hpp"

namespace a1deg {

template <class K>
inline constexpr bool is_function_field_v = false;
template <class B>
inline constexpr bool is_function_field_v<FunctionField<B>> = true;

/// Fields with a real embedding provide sign().
template <class K>
concept HasSign = requires(const K& k, const typename K::value_type& v) { k.sign(v); };

// ---------------------------------------------------------------------------
// Diagonalization

template <ExactField K>
struct Diagonalization {
  std::vector<typename K::value_type> diagonal;
  Matrix<K> witness;  // S with S^T G S = diag
};

/// Symmetric Gaussian elimination. When the active block has no nonzero
/// diagonal entry, row/column j is added to i to create 2*G_ij on the diagonal.
template <ExactField K>
Diagonalization<K> diagonalize(const Matrix<K>& G) {
  if (!G.is_symmetric()) fail(ErrorKind::DimensionMismatch, "Gram matrix is not symmetric");
  const K& k = G.field();
  const std::size_t m = G.rows();
  Matrix<K> A = G, S = Matrix<K>::identity(k, m);
  auto swap_index = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    A.swap_rows(a, b);
    for (std::size_t r = 0; r < m; ++r) std::swap(A.at(r, a), A.at(r, b));
    for (std::size_t r = 0; r < m; ++r) std::swap(S.at(r, a), S.at(r, b));
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::optional<std::size_t> pivot;
    std::size_t best_height = 0;
    for (std::size_t j = i; j < m; ++j) {
      if (k.is_zero(A.at(j, j))) continue;
      std::size_t h = k.format(A.at(j, j)).size();
      if (!pivot || h < best_height) {
        pivot = j;
        best_height = h;
      }
    }
    if (pivot) {
      swap_index(i, *pivot);
    } else {
      std::size_t j = i + 1;
      while (j < m && k.is_zero(A.at(i, j))) ++j;
      if (j == m) fail(ErrorKind::DegenerateForm, "Gram matrix is singular");
      // Row/column i += row/column j.
      for (std::size_t c = 0; c < m; ++c) A.at(i, c) = k.add(A.at(i, c), A.at(j, c));
      for (std::size_t r = 0; r < m; ++r) A.at(r, i) = k.add(A.at(r, i), A.at(r, j));
      for (std::size_t r = 0; r < m; ++r) S.at(r, i) = k.add(S.at(r, i), S.at(r, j));
    }
    auto inv = k.inv(A.at(i, i));
    for (std::size_t r = i + 1; r < m; ++r) {
      if (k.is_zero(A.at(r, i))) continue;
      auto f = k.mul(A.at(r, i), inv);
      for (std::size_t c = i; c < m; ++c) A.at(r, c) = k.sub(A.at(r, c), k.mul(f, A.at(i, c)));
      for (std::size_t c = i; c < m; ++c) A.at(c, r) = A.at(r, c);
      for (std::size_t q = 0; q < m; ++q) S.at(q, r) = k.sub(S.at(q, r), k.mul(f, S.at(q, i)));
    }
  }
  Diagonalization<K> out{{}, S};
  for (std::size_t i = 0; i < m; ++i) out.diagonal.push_back(A.at(i, i));
  return out;
}

// ---------------------------------------------------------------------------

enum class Comparison { Equal, NotEqual, Unknown };

template <ExactField K>
class GWClass;

template <ExactField K>
GWClass<K> simplify(const K& field, const std::vector<typename K::value_type>& entries, unsigned hyperbolic = 0);

template <ExactField K>
class GWClass {
 public:
  using value_type = typename K::value_type;

  /// The zero class.
  explicit GWClass(K field) : field_(std::move(field)) {}

  /// Raw constructor; callers normally go through simplify().
  GWClass(K field, unsigned hyperbolic, std::vector<value_type> units)
      : field_(std::move(field)), h_(hyperbolic), units_(std::move(units)) {}

  static GWClass unit(const K& field, const value_type& a) { return simplify(field, {a}); }
  static GWClass hyperbolic_plane(const K& field, unsigned count = 1) { return GWClass(field, count, {}); }

  const K& field() const { return field_; }
  unsigned hyperbolic() const { return h_; }
  const std::vector<value_type>& units() const { return units_; }
  std::size_t rank() const { return 2 * h_ + units_.size(); }

  /// Square class of (-1)^h * prod(u_i).
  value_type discriminant() const {
    value_type d = h_ % 2 ? field_.from_int(-1) : field_.one();
    for (const auto& u : units_) d = field_.mul(d, u);
    return field_.square_class(d);
  }

  /// Signature under the real embedding; absent without one.
  std::optional<long> signature() const {
    if constexpr (HasSign<K>) {
      long s = 0;
      for (const auto& u : units_) s += field_.sign(u);
      return s;
    } else {
      return std::nullopt;
    }
  }

  friend GWClass operator+(const GWClass& a, const GWClass& b) {
    a.check(b);
    auto units = a.units_;
    units.insert(units.end(), b.units_.begin(), b.units_.end());
    return simplify(a.field_, units, a.h_ + b.h_);
  }

  /// H * q = rank(q) * H.
  friend GWClass operator*(const GWClass& a, const GWClass& b) {
    a.check(b);
    unsigned h = a.h_ * static_cast<unsigned>(b.rank()) + b.h_ * static_cast<unsigned>(a.units_.size());
    std::vector<value_type> units;
    for (const auto& u : a.units_)
      for (const auto& v : b.units_) units.push_back(a.field_.mul(u, v));
    return simplify(a.field_, units, h);
  }

  /// Structural equality of canonical forms.
  friend bool operator==(const GWClass& a, const GWClass& b) {
    if (!(a.field_ == b.field_) || a.h_ != b.h_ || a.units_.size() != b.units_.size()) return false;
    for (std::size_t i = 0; i < a.units_.size(); ++i)
      if (!a.field_.equal(a.units_[i], b.units_[i])) return false;
    return true;
  }

  /// `kH + <u1,...,ur>`, eliding empty parts; the zero class prints as `0`.
  std::string to_string() const {
    std::string out;
    if (h_ == 1) out = "H";
    if (h_ > 1) out = std::to_string(h_) + "H";
    if (!units_.empty()) {
      if (!out.empty()) out += " + ";
      out += "<";
      for (std::size_t i = 0; i < units_.size(); ++i) out += (i ? "," : "") + field_.format(units_[i]);
      out += ">";
    }
    return out.empty() ? "0" : out;
  }

  void check(const GWClass& other) const {
    if (!(field_ == other.field_))
      fail(ErrorKind::FieldMismatch, field_.descriptor().to_string() + " vs " + other.field_.descriptor().to_string());
  }

 private:
  K field_;
  unsigned h_ = 0;
  std::vector<value_type> units_;
};

namespace detail {

template <ExactField K>
void sort_units(const K& k, std::vector<typename K::value_type>& units) {
  std::stable_sort(units.begin(), units.end(), [&](const auto& a, const auto& b) { return k.less(a, b); });
}

/// Pairs u_i with the first later u_j such that -u_i u_j is a square.
template <ExactField K>
unsigned greedy_pairing(const K& k, std::vector<typename K::value_type>& units) {
  sort_units(k, units);
  std::vector<bool> used(units.size(), false);
  unsigned pairs = 0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < units.size(); ++j) {
      if (used[j]) continue;
      if (k.sqrt(k.neg(k.mul(units[i], units[j])))) {
        used[i] = used[j] = true;
        ++pairs;
        break;
      }
    }
  }
  std::vector<typename K::value_type> rest;
  for (std::size_t i = 0; i < units.size(); ++i)
    if (!used[i]) rest.push_back(units[i]);
  units = std::move(rest);
  return pairs;
}

// --- Q: local invariants ------------------------------------------------

/// Rank, signature, discriminant and Hasse invariants at a finite set of
/// places of a diagonal form over Q built up one entry at a time.
struct RationalInvariants {
  long rank = 0;
  long signature = 0;
  mpz_class disc = 1;  // squarefree
  std::vector<mpz_class> places;
  std::vector<int> hasse;

  explicit RationalInvariants(std::vector<mpz_class> p) : places(std::move(p)), hasse(places.size(), 1) {}

  void add(const mpz_class& u) {
    for (std::size_t i = 0; i < places.size(); ++i) hasse[i] *= integer::hilbert_symbol(disc, u, places[i]);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), disc.get_mpz_t(), u.get_mpz_t());
    disc = (disc / g) * (u / g);
    ++rank;
    signature += sgn(u);
  }
  void add_hyperbolic(unsigned h) {
    for (unsigned i = 0; i < h; ++i) {
      add(1);
      add(-1);
    }
  }

  bool operator==(const RationalInvariants& o) const {
    return rank == o.rank && signature == o.signature && disc == o.disc && hasse == o.hasse;
  }
};

/// The real place, 2 and the primes dividing the units; nullopt when some
/// unit could not be factored.
inline std::optional<std::vector<mpz_class>> rational_places(const std::vector<mpq_class>& units) {
  std::set<mpz_class> primes = {2};
  for (const auto& u : units) {
    auto divisors = integer::prime_divisors(u.get_num());
    if (!divisors) return std::nullopt;
    primes.insert(divisors->begin(), divisors->end());
  }
  std::vector<mpz_class> out = {0};
  out.insert(out.end(), primes.begin(), primes.end());
  return out;
}

inline RationalInvariants rational_invariants(unsigned h, const std::vector<mpq_class>& units,
                                              const std::vector<mpz_class>& places) {
  RationalInvariants inv(places);
  inv.add_hyperbolic(h);
  for (const auto& u : units) inv.add(u.get_num());
  return inv;
}

/// Canonical representative over Q: maximal Witt index, then a*<1> + b*<-1>
/// plus the smallest core of at most three units built from the primes in
/// play. Returns nullopt when no such representative is found or a unit
/// could not be factored.
inline std::optional<std::pair<unsigned, std::vector<mpq_class>>> canonical_rational(
    unsigned h, const std::vector<mpq_class>& units) {
  auto known = rational_places(units);
  if (!known) return std::nullopt;
  const auto& places = *known;
  auto target = rational_invariants(h, units, places);
  const long rank = target.rank, sig = target.signature;

  std::vector<mpz_class> primes(places.begin() + 1, places.end());
  std::vector<mpq_class> pool;
  const std::size_t subsets = std::size_t{1} << std::min<std::size_t>(primes.size(), 12);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    mpz_class prod = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1) prod *= primes[i];
    pool.emplace_back(prod);
    pool.emplace_back(-prod);
  }
  Rationals q;
  std::sort(pool.begin(), pool.end(), [&](const mpq_class& a, const mpq_class& b) { return q.less(a, b); });
  constexpr std::size_t kBudget = 200000;
  std::size_t tried = 0;

  for (long hh = (rank - std::labs(sig)) / 2; hh >= 0; --hh) {
    const long rest = rank - 2 * hh;
    std::vector<mpq_class> core;
    std::optional<std::vector<mpq_class>> found;
    // Cores are enumerated as non-decreasing index sequences into the pool.
    auto try_core = [&]() -> bool {
      long core_sig = 0;
      for (const auto& c : core) core_sig += sgn(c);
      long ab = rest - static_cast<long>(core.size());
      long diff = sig - core_sig;  // a - b
      if (ab < 0 || (ab + diff) % 2 != 0 || std::labs(diff) > ab) return false;
      long a = (ab + diff) / 2, b = (ab - diff) / 2;
      std::vector<mpq_class> cand(static_cast<std::size_t>(a), mpq_class(1));
      cand.insert(cand.end(), static_cast<std::size_t>(b), mpq_class(-1));
      cand.insert(cand.end(), core.begin(), core.end());
      ++tried;
      if (rational_invariants(static_cast<unsigned>(hh), cand, places) == target) {
        std::sort(cand.begin(), cand.end(), [&](const mpq_class& x, const mpq_class& y) { return q.less(x, y); });
        found = std::move(cand);
        return true;
      }
      return false;
    };
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t size, std::size_t from) -> bool {
      if (core.size() == size) return try_core();
      for (std::size_t i = from; i < pool.size() && tried < kBudget; ++i) {
        core.push_back(pool[i]);
        bool ok = search(size, i);
        core.pop_back();
        if (ok) return true;
      }
      return false;
    };
    for (std::size_t size = 0; size <= 3 && static_cast<long>(size) <= rest; ++size)
      if (search(size, 0)) return std::make_pair(static_cast<unsigned>(hh), *found);
  }
  return std::nullopt;
}

/// Canonical representative over F_p: rank and discriminant are complete.
inline std::pair<unsigned, std::vector<std::uint64_t>> canonical_prime(const PrimeField& k, unsigned h,
                                                                       const std::vector<std::uint64_t>& units) {
  GWClass<PrimeField> raw(k, h, units);
  const std::size_t rank = raw.rank();
  const auto disc = raw.discriminant();
  auto sign_class = [&](std::size_t hh) { return hh % 2 ? k.square_class(k.neg(1)) : k.one(); };
  if (rank % 2 == 1) {
    std::size_t hh = rank / 2;
    return {static_cast<unsigned>(hh), {k.square_class(k.mul(sign_class(hh), disc))}};
  }
  if (rank == 0) return {0, {}};
  if (disc == sign_class(rank / 2)) return {static_cast<unsigned>(rank / 2), {}};
  std::size_t hh = rank / 2 - 1;
  return {static_cast<unsigned>(hh), {k.one(), k.square_class(k.mul(sign_class(hh), disc))}};
}

}  // namespace detail

/// Canonical class of <d_1,...,d_m> + h*H.
template <ExactField K>
GWClass<K> simplify(const K& k, const std::vector<typename K::value_type>& entries, unsigned hyperbolic) {
  std::vector<typename K::value_type> units;
  for (const auto& e : entries) {
    if (k.is_zero(e)) fail(ErrorKind::ZeroEntry, "zero entry in a diagonal form");
    units.push_back(k.square_class(e));
  }
  if constexpr (std::is_same_v<K, Rationals>) {
    unsigned h = hyperbolic + detail::greedy_pairing(k, units);
    if (auto canon = detail::canonical_rational(h, units)) return GWClass<K>(k, canon->first, canon->second);
    return GWClass<K>(k, h, units);
  } else if constexpr (std::is_same_v<K, PrimeField>) {
    auto [h, u] = detail::canonical_prime(k, hyperbolic, units);
    return GWClass<K>(k, h, u);
  } else if constexpr (is_function_field_v<K>) {
    // Constant units form a subform defined over the base field; canonicalize
    // it there, then pair the remaining units greedily.
    using Base = typename K::base_field;
    std::vector<typename Base::value_type> constants;
    std::vector<typename K::value_type> others;
    for (const auto& u : units) {
      if (u.num.size() == 1)
        constants.push_back(u.num[0]);
      else
        others.push_back(u);
    }
    unsigned h = hyperbolic + detail::greedy_pairing(k, others);
    auto base = simplify(k.base(), constants);
    h += base.hyperbolic();
    for (const auto& c : base.units()) others.push_back(k.from_base(c));
    h += detail::greedy_pairing(k, others);
    return GWClass<K>(k, h, others);
  } else {
    unsigned h = hyperbolic + detail::greedy_pairing(k, units);
    return GWClass<K>(k, h, units);
  }
}

template <ExactField K>
GWClass<K> gw_class(const Matrix<K>& gram) {
  return simplify(gram.field(), diagonalize(gram).diagonal);
}

/// Equality in GW(k). Complete over Q (Hasse-Minkowski) when the units can be
/// factored, and over F_p; over k(t) only canonical forms and invariants are
/// compared, so Unknown can occur.
template <ExactField K>
Comparison compare(const GWClass<K>& a, const GWClass<K>& b) {
  a.check(b);
  if (a.rank() != b.rank()) return Comparison::NotEqual;
  if (a == b) return Comparison::Equal;
  const K& k = a.field();
  // Representatives of square classes need not be minimal, so compare the
  // discriminants through their product.
  if (!k.sqrt(k.mul(a.discriminant(), b.discriminant()))) return Comparison::NotEqual;
  if (a.signature() != b.signature()) return Comparison::NotEqual;
  if constexpr (std::is_same_v<K, Rationals>) {
    std::vector<mpq_class> all = a.units();
    all.insert(all.end(), b.units().begin(), b.units().end());
    auto places = detail::rational_places(all);
    if (!places) return Comparison::Unknown;
    return detail::rational_invariants(a.hyperbolic(), a.units(), *places) ==
                   detail::rational_invariants(b.hyperbolic(), b.units(), *places)
               ? Comparison::Equal
               : Comparison::NotEqual;
  } else if constexpr (std::is_same_v<K, PrimeField>) {
    return Comparison::Equal;
  } else {
    return Comparison::Unknown;
  }
}

template <ExactField K>
bool equals(const GWClass<K>& a, const GWClass<K>& b) {
  return compare(a, b) == Comparison::Equal;
}

}  // namespace a1deg
