#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>

#include "a1deg/field.hpp"
#include "a1deg/univariate.hpp"

namespace a1deg {

/// Reduced quotient of univariate polynomials: gcd(num, den) = 1, den monic.
template <class Base>
struct RationalFunction {
  univariate::Poly<Base> num;
  univariate::Poly<Base> den;
};

/// The rational function field Base(t) in one named parameter.
template <class Base>
class FunctionField {
 public:
  using base_field = Base;
  using poly_type = univariate::Poly<Base>;
  using value_type = RationalFunction<Base>;

  explicit FunctionField(Base base, std::string parameter = "t")
      : base_(std::move(base)), name_(std::move(parameter)) {
    if (name_.empty()) fail(ErrorKind::InvalidField, "empty parameter name");
  }

  const Base& base() const { return base_; }
  const std::string& parameter_name() const { return name_; }

  value_type zero() const { return {{}, {base_.one()}}; }
  value_type one() const { return {{base_.one()}, {base_.one()}}; }
  value_type from_int(long v) const { return from_base(base_.from_int(v)); }
  value_type from_integer(const mpz_class& v) const { return from_base(base_.from_integer(v)); }
  value_type from_base(const typename Base::value_type& c) const {
    return {univariate::constant(base_, c), {base_.one()}};
  }
  /// The transcendental parameter t.
  value_type parameter() const { return {{base_.zero(), base_.one()}, {base_.one()}}; }

  value_type make(poly_type num, poly_type den) const {
    univariate::trim(base_, num);
    univariate::trim(base_, den);
    if (den.empty()) fail(ErrorKind::DivisionByZero, "zero denominator in " + descriptor().to_string());
    if (num.empty()) return zero();
    poly_type g = univariate::gcd(base_, num, den);
    if (univariate::degree<Base>(g) > 0) {
      num = univariate::divmod(base_, num, g).first;
      den = univariate::divmod(base_, den, g).first;
    }
    auto lc_inv = base_.inv(den.back());
    return {univariate::scale(base_, std::move(num), lc_inv), univariate::scale(base_, std::move(den), lc_inv)};
  }

  value_type add(const value_type& a, const value_type& b) const {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (univariate::equal(base_, a.den, b.den)) return make(univariate::add(base_, a.num, b.num), a.den);
    return make(univariate::add(base_, univariate::mul(base_, a.num, b.den), univariate::mul(base_, b.num, a.den)),
                univariate::mul(base_, a.den, b.den));
  }
  value_type neg(const value_type& a) const { return {univariate::neg(base_, a.num), a.den}; }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  value_type mul(const value_type& a, const value_type& b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    return make(univariate::mul(base_, a.num, b.num), univariate::mul(base_, a.den, b.den));
  }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) fail(ErrorKind::DivisionByZero, "division by zero in " + descriptor().to_string());
    return make(a.den, a.num);
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

  bool is_zero(const value_type& a) const { return a.num.empty(); }
  bool is_one(const value_type& a) const {
    return univariate::is_one(base_, a.num) && univariate::is_one(base_, a.den);
  }
  bool equal(const value_type& a, const value_type& b) const {
    return univariate::equal(base_, a.num, b.num) && univariate::equal(base_, a.den, b.den);
  }

  /// a = n/d is a square iff n*d is a square polynomial; the root is sqrt(n d)/d.
  std::optional<value_type> sqrt(const value_type& a) const {
    if (is_zero(a)) fail(ErrorKind::ZeroInput, "square test of zero");
    auto root = univariate::sqrt(base_, univariate::mul(base_, a.num, a.den));
    if (!root) return std::nullopt;
    return make(std::move(*root), a.den);
  }

  /// Base square class of the leading coefficient times the monic product of
  /// odd-multiplicity factors of num*den.
  value_type square_class(const value_type& a) const {
    if (is_zero(a)) fail(ErrorKind::ZeroInput, "square class of zero");
    poly_type g = univariate::mul(base_, a.num, a.den);
    auto lead = base_.square_class(g.back());
    poly_type kernel = univariate::odd_kernel(base_, g, characteristic());
    return make(univariate::scale(base_, std::move(kernel), lead), {base_.one()});
  }

  /// Sign for all sufficiently large real t (Q(t) only).
  int sign(const value_type& a) const
    requires std::is_same_v<Base, Rationals>
  {
    if (is_zero(a)) fail(ErrorKind::ZeroInput, "sign of zero");
    return base_.sign(a.num.back());
  }

  bool less(const value_type& a, const value_type& b) const {
    auto cmp_poly = [&](const poly_type& f, const poly_type& g) -> int {
      if (f.size() != g.size()) return f.size() < g.size() ? -1 : 1;
      for (std::size_t i = f.size(); i-- > 0;) {
        if (base_.less(f[i], g[i])) return -1;
        if (base_.less(g[i], f[i])) return 1;
      }
      return 0;
    };
    if (int c = cmp_poly(a.num, b.num)) return c < 0;
    return cmp_poly(a.den, b.den) < 0;
  }

  std::string format(const value_type& a) const {
    if (is_zero(a)) return "0";
    std::string num = format_poly(a.num);
    if (univariate::is_one(base_, a.den)) return num;
    std::string den = format_poly(a.den);
    if (term_count(a.num) > 1) num = "(" + num + ")";
    if (term_count(a.den) > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
    return num + "/" + den;
  }

  FieldDescriptor descriptor() const { return base_.descriptor().with_parameter(name_); }
  bool operator==(const FunctionField& o) const { return base_ == o.base_ && name_ == o.name_; }

  std::uint64_t characteristic() const {
    if constexpr (std::is_same_v<Base, PrimeField>) {
      return base_.characteristic();
    } else {
      return 0;
    }
  }

 private:
  std::size_t term_count(const poly_type& f) const {
    return static_cast<std::size_t>(
        std::count_if(f.begin(), f.end(), [&](const auto& c) { return !base_.is_zero(c); }));
  }

  std::string format_poly(const poly_type& f) const {
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
      if (base_.is_zero(f[i])) continue;
      std::string c = base_.format(f[i]);
      std::string mono = i == 0 ? "" : (i == 1 ? name_ : name_ + "^" + std::to_string(i));
      std::string term;
      if (i == 0) {
        term = c;
      } else if (c == "1") {
        term = mono;
      } else if (c == "-1") {
        term = "-" + mono;
      } else {
        term = c + "*" + mono;
      }
      if (!out.empty() && term.front() != '-') out += "+";
      out += term;
    }
    return out;
  }

  Base base_;
  std::string name_;
};

using RationalFunctionsQ = FunctionField<Rationals>;
using RationalFunctionsFp = FunctionField<PrimeField>;

}  // namespace a1deg
