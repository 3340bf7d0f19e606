#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace symtc {

/// Coefficient fields supported by the library: the rationals and the field with two elements.
enum class Field : std::uint8_t { Q, Z2 };

std::string to_string(Field f);

/// An exact scalar in Q or Z2.
///
/// Rationals are kept canonical (lowest terms, positive denominator); Z2 values are 0 or 1.
/// Mixing fields in one operation throws std::invalid_argument.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(Field field, long value);
  Coefficient(Field field, mpq_class value);

  static Coefficient zero(Field field) { return {field, 0L}; }
  static Coefficient one(Field field) { return {field, 1L}; }

  Field field() const { return field_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);
  Coefficient& operator/=(const Coefficient& rhs);

  friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) { return lhs += rhs; }
  friend Coefficient operator-(Coefficient lhs, const Coefficient& rhs) { return lhs -= rhs; }
  friend Coefficient operator*(Coefficient lhs, const Coefficient& rhs) { return lhs *= rhs; }
  friend Coefficient operator/(Coefficient lhs, const Coefficient& rhs) { return lhs /= rhs; }
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// Multiplies by (-1)^odd; a no-op over Z2.
  void flip_sign_if(bool odd);

  std::string str() const { return value_.get_str(); }

 private:
  void normalize();
  void check_field(const Coefficient& rhs) const;

  Field field_ = Field::Q;
  mpq_class value_ = 0;
};

}  // namespace symtc
