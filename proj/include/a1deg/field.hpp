#pragma once

// Exact coefficient fields. A field is a small context object; its elements
// are plain values of `Field::value_type` manipulated through the context
// (`k.add(a, b)`, `k.inv(a)`, ...). This keeps prime-field elements to a
// single machine word and lets the polynomial code stay field-agnostic.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "a1deg/error.hpp"
#include "a1deg/integer.hpp"

namespace a1deg {

/// Runtime description of a supported field: Q, F_p, Q(t) or F_p(t).
struct FieldDescriptor {
  enum class Base { Rationals, PrimeField };

  Base base = Base::Rationals;
  std::uint64_t prime = 0;
  std::optional<std::string> parameter;

  static FieldDescriptor rationals() { return {}; }

  static FieldDescriptor prime_field(std::uint64_t p) {
    check_prime(p);
    return {Base::PrimeField, p, std::nullopt};
  }

  FieldDescriptor with_parameter(std::string name) const {
    if (parameter) fail(ErrorKind::InvalidField, "only one transcendental parameter is supported");
    if (name.empty()) fail(ErrorKind::InvalidField, "empty parameter name");
    FieldDescriptor d = *this;
    d.parameter = std::move(name);
    return d;
  }

  FieldDescriptor base_field() const { return {base, prime, std::nullopt}; }
  bool is_function_field() const { return parameter.has_value(); }
  bool has_real_embedding() const { return base == Base::Rationals; }

  std::string to_string() const {
    std::string s = base == Base::Rationals ? "Q" : "F" + std::to_string(prime);
    if (parameter) s += "(" + *parameter + ")";
    return s;
  }

  bool operator==(const FieldDescriptor&) const = default;

  static void check_prime(std::uint64_t p) {
    if (p == 2) fail(ErrorKind::InvalidField, "characteristic 2 is not supported");
    if (p >= (1ULL << 31)) fail(ErrorKind::InvalidField, "prime must be below 2^31");
    if (!integer::is_prime(p)) fail(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
  }
};

/// Operations every coefficient field provides.
template <class K>
concept ExactField = requires(const K& k, const typename K::value_type& a) {
  typename K::value_type;
  { k.zero() } -> std::same_as<typename K::value_type>;
  { k.one() } -> std::same_as<typename K::value_type>;
  { k.from_int(0L) } -> std::same_as<typename K::value_type>;
  { k.add(a, a) } -> std::same_as<typename K::value_type>;
  { k.sub(a, a) } -> std::same_as<typename K::value_type>;
  { k.mul(a, a) } -> std::same_as<typename K::value_type>;
  { k.div(a, a) } -> std::same_as<typename K::value_type>;
  { k.neg(a) } -> std::same_as<typename K::value_type>;
  { k.inv(a) } -> std::same_as<typename K::value_type>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.is_one(a) } -> std::same_as<bool>;
  { k.equal(a, a) } -> std::same_as<bool>;
  { k.sqrt(a) } -> std::same_as<std::optional<typename K::value_type>>;
  { k.square_class(a) } -> std::same_as<typename K::value_type>;
  { k.less(a, a) } -> std::same_as<bool>;
  { k.format(a) } -> std::same_as<std::string>;
  { k.descriptor() } -> std::same_as<FieldDescriptor>;
};

// ---------------------------------------------------------------------------

class Rationals {
 public:
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type from_integer(const mpz_class& v) const { return mpq_class(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "division by zero in Q");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  /// Square root when a is a square in Q.
  std::optional<value_type> sqrt(const value_type& a) const {
    if (a == 0) fail(ErrorKind::ZeroInput, "square test of zero");
    if (sgn(a) < 0) return std::nullopt;
    const mpz_class& num = a.get_num();
    const mpz_class& den = a.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    return mpq_class(::sqrt(num), ::sqrt(den));
  }

  /// Squarefree integer in the square class of a.
  value_type square_class(const value_type& a) const {
    if (a == 0) fail(ErrorKind::ZeroInput, "square class of zero");
    mpz_class prod = a.get_num() * a.get_den();
    return mpq_class(integer::squarefree_part(prod));
  }

  int sign(const value_type& a) const {
    if (a == 0) fail(ErrorKind::ZeroInput, "sign of zero");
    return sgn(a);
  }

  /// Display order for square-class representatives: by |a|, positive first.
  bool less(const value_type& a, const value_type& b) const {
    int c = cmp(abs(a), abs(b));
    if (c != 0) return c < 0;
    return sgn(a) > sgn(b);
  }

  std::string format(const value_type& a) const { return a.get_str(); }
  FieldDescriptor descriptor() const { return FieldDescriptor::rationals(); }
  bool operator==(const Rationals&) const = default;
};

// ---------------------------------------------------------------------------

class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    FieldDescriptor::check_prime(p);
    for (value_type c = 2; c < p_; ++c) {
      if (pow(c, (p_ - 1) / 2) == p_ - 1) {
        nonresidue_ = c;
        break;
      }
    }
  }

  std::uint64_t characteristic() const { return p_; }
  /// Least positive quadratic nonresidue.
  value_type nonresidue() const { return nonresidue_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  value_type from_integer(const mpz_class& v) const {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
  }

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "division by zero in F" + std::to_string(p_));
    return pow(a, p_ - 2);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool equal(value_type a, value_type b) const { return a == b; }

  bool is_square(value_type a) const {
    if (a == 0) fail(ErrorKind::ZeroInput, "square test of zero");
    return pow(a, (p_ - 1) / 2) == 1;
  }

  /// Euler criterion, then Tonelli-Shanks for the witness.
  std::optional<value_type> sqrt(value_type a) const {
    if (!is_square(a)) return std::nullopt;
    std::uint64_t q = p_ - 1, s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    value_type z = nonresidue_;
    value_type m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
      value_type i = 0, tt = t;
      while (tt != 1) {
        tt = mul(tt, tt);
        ++i;
      }
      value_type b = c;
      for (value_type j = 0; j + 1 < m - i; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    return std::min(r, neg(r));
  }

  value_type square_class(value_type a) const { return is_square(a) ? 1 : nonresidue_; }

  bool less(value_type a, value_type b) const { return a < b; }
  std::string format(value_type a) const { return std::to_string(a); }
  FieldDescriptor descriptor() const { return FieldDescriptor::prime_field(p_); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
  value_type nonresidue_ = 0;
};

}  // namespace a1deg
