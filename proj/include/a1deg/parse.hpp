#pragma once

// Text input: field descriptors, scalars and polynomials.
//
//   field  := "Q" | "F" prime | ("Q" | "F" prime) "(" name ")"
//   expr   := term (("+" | "-") term)*
//   term   := unary (("*" | "/")? unary)*      juxtaposition multiplies
//   unary  := ("-" | "+") unary | power
//   power  := atom ("^" ["-"] digits)?
//   atom   := digits | name | "(" expr ")"
//
// Division and negative powers are accepted for constants only.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "a1deg/function_field.hpp"
#include "a1deg/polynomial.hpp"

namespace a1deg {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace detail

/// Splits on sep, trimming pieces and dropping empty ones.
inline std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = detail::trim(text.substr(start, end - start));
    if (!piece.empty()) out.emplace_back(piece);
    start = end + 1;
  }
  return out;
}

inline FieldDescriptor parse_field(std::string_view text) {
  const std::string original(text);
  text = detail::trim(text);
  auto bad = [&](const std::string& why) -> FieldDescriptor {
    fail(ErrorKind::InvalidField, "field '" + original + "': " + why);
  };
  std::optional<std::string> parameter;
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') return bad("expected ')'");
    auto name = detail::trim(text.substr(open + 1, text.size() - open - 2));
    if (name.empty() || !detail::is_name_start(name.front()) ||
        !std::all_of(name.begin(), name.end(), detail::is_name_char))
      return bad("invalid parameter name");
    parameter = std::string(name);
    text = detail::trim(text.substr(0, open));
  }
  FieldDescriptor d;
  if (text == "Q") {
    d = FieldDescriptor::rationals();
  } else if (text.size() > 1 && text.front() == 'F' &&
             std::all_of(text.begin() + 1, text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    if (text.size() > 11) return bad("prime too large");
    d = FieldDescriptor::prime_field(std::stoull(std::string(text.substr(1))));
  } else {
    return bad("expected Q, F<p>, Q(t) or F<p>(t)");
  }
  return parameter ? d.with_parameter(*parameter) : d;
}

/// Calls f with the concrete field object a descriptor names.
template <class F>
decltype(auto) visit_field(const FieldDescriptor& d, F&& f) {
  if (d.base == FieldDescriptor::Base::Rationals) {
    if (d.parameter) return f(RationalFunctionsQ(Rationals{}, *d.parameter));
    return f(Rationals{});
  }
  if (d.parameter) return f(RationalFunctionsFp(PrimeField(d.prime), *d.parameter));
  return f(PrimeField(d.prime));
}

template <ExactField K>
class PolynomialParser {
 public:
  using value_type = typename K::value_type;

  PolynomialParser(RingPtr<K> ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Poly<K> parse() {
    skip_space();
    if (pos_ == text_.size()) error("empty expression");
    Poly<K> out = expr();
    skip_space();
    if (pos_ != text_.size()) error(std::string("unexpected '") + text_[pos_] + "'");
    return out;
  }

 private:
  const K& field() const { return ring_->field(); }

  [[noreturn]] void error(const std::string& why) const {
    fail(ErrorKind::Parse, why + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ == text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || detail::is_name_start(c) || c == '(';
  }

  Poly<K> expr() {
    Poly<K> acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly<K> term() {
    Poly<K> acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Poly<K> d = unary();
        if (!d.is_constant()) error("division by a non-constant");
        if (d.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero in '" + std::string(text_) + "'");
        acc = acc.scaled(field().inv(d.constant_term()));
      } else if (starts_factor()) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  Poly<K> unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly<K> power() {
    Poly<K> base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected an exponent");
    if (pos_ - start > 6) error("exponent too large");
    unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    if (negative) {
      if (!base.is_constant()) error("negative power of a non-constant");
      if (base.is_zero()) fail(ErrorKind::DivisionByZero, "zero to a negative power");
      base = Poly<K>::term(ring_, Monomial(ring_->arity()), field().inv(base.constant_term()));
    }
    return base.pow(e);
  }

  Poly<K> atom() {
    skip_space();
    if (pos_ == text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<K> inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class v(std::string(text_.substr(start, pos_ - start)));
      return Poly<K>::term(ring_, Monomial(ring_->arity()), field().from_integer(v));
    }
    if (detail::is_name_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && detail::is_name_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (auto i = ring_->index_of(name)) return Poly<K>::variable(ring_, *i);
      if constexpr (is_function_field_v<K>) {
        if (name == field().parameter_name())
          return Poly<K>::term(ring_, Monomial(ring_->arity()), field().parameter());
      }
      pos_ = start;
      error("unknown identifier '" + name + "'");
    }
    error(std::string("unexpected '") + c + "'");
  }

  RingPtr<K> ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <ExactField K>
Poly<K> parse_polynomial(const RingPtr<K>& ring, std::string_view text) {
  return PolynomialParser<K>(ring, text).parse();
}

/// ';'-separated polynomials.
template <ExactField K>
std::vector<Poly<K>> parse_polynomials(const RingPtr<K>& ring, std::string_view text) {
  std::vector<Poly<K>> out;
  for (const auto& piece : split_list(text, ';')) out.push_back(parse_polynomial(ring, piece));
  return out;
}

/// A constant expression in the field, e.g. "-3/4" or "(t+1)/t^2".
template <ExactField K>
typename K::value_type parse_scalar(const K& field, std::string_view text) {
  auto ring = make_ring(field, {});
  Poly<K> p = parse_polynomial(ring, text);
  return p.is_zero() ? field.zero() : p.constant_term();
}

/// Comma-separated variable names.
inline std::vector<std::string> parse_variables(std::string_view text) {
  auto names = split_list(text, ',');
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& n = names[i];
    if (!detail::is_name_start(n.front()) || !std::all_of(n.begin(), n.end(), detail::is_name_char))
      fail(ErrorKind::Parse, "invalid variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names[j] == n) fail(ErrorKind::Parse, "duplicate variable '" + n + "'");
  }
  return names;
}

}  // namespace a1deg
