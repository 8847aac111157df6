#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "a1deg/field.hpp"
#include "a1deg/function_field.hpp"

namespace a1deg {

/// A field element tagged with its field. Arithmetic between scalars of
/// different fields raises FieldMismatch.
template <ExactField K>
class Scalar {
 public:
  using value_type = typename K::value_type;

  Scalar(K field, value_type value) : field_(std::move(field)), value_(std::move(value)) {}
  static Scalar from_int(const K& field, long v) { return {field, field.from_int(v)}; }

  const K& field() const { return field_; }
  const value_type& value() const { return value_; }
  FieldDescriptor descriptor() const { return field_.descriptor(); }

  bool is_zero() const { return field_.is_zero(value_); }
  Scalar inverse() const { return {field_, field_.inv(value_)}; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return {a.check(b), a.field_.add(a.value_, b.value_)}; }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return {a.check(b), a.field_.sub(a.value_, b.value_)}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return {a.check(b), a.field_.mul(a.value_, b.value_)}; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return {a.check(b), a.field_.div(a.value_, b.value_)}; }
  Scalar operator-() const { return {field_, field_.neg(value_)}; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.field_.equal(a.value_, b.value_);
  }

  std::string to_string() const { return field_.format(value_); }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  const K& check(const Scalar& other) const {
    if (!(field_ == other.field_))
      fail(ErrorKind::FieldMismatch, descriptor().to_string() + " vs " + other.descriptor().to_string());
    return field_;
  }

  K field_;
  value_type value_;
};

/// Square test; the witness s satisfies s^2 = a when present.
template <ExactField K>
std::optional<Scalar<K>> is_square(const Scalar<K>& a) {
  auto root = a.field().sqrt(a.value());
  if (!root) return std::nullopt;
  return Scalar<K>(a.field(), std::move(*root));
}

/// Sign under the real embedding (Q, or Q(t) for large t).
template <ExactField K>
int signature_sign(const Scalar<K>& a) {
  if constexpr (requires(const K& k, const typename K::value_type& v) { k.sign(v); }) {
    return a.field().sign(a.value());
  } else {
    fail(ErrorKind::UnsupportedField, "no real embedding for " + a.descriptor().to_string());
  }
}

}  // namespace a1deg
