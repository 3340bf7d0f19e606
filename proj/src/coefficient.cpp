#include "symtc/coefficient.hpp"

#include <stdexcept>

namespace symtc {

std::string to_string(Field f) { return f == Field::Q ? "Q" : "Z2"; }

Coefficient::Coefficient(Field field, long value) : field_(field), value_(value) { normalize(); }

Coefficient::Coefficient(Field field, mpq_class value) : field_(field), value_(std::move(value)) {
  normalize();
}

void Coefficient::normalize() {
  value_.canonicalize();
  if (field_ == Field::Z2) {
    if (value_.get_den() != 1) {
      // a/b with b odd is a * b^{-1} = a mod 2; b even has no image in Z2.
      if (mpz_even_p(value_.get_den().get_mpz_t()))
        throw std::domain_error("rational with even denominator has no image in Z2");
    }
    value_ = mpz_odd_p(value_.get_num().get_mpz_t()) ? 1 : 0;
  }
}

void Coefficient::check_field(const Coefficient& rhs) const {
  if (field_ != rhs.field_) throw std::invalid_argument("coefficient field mismatch");
}

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  if (field_ == Field::Q) r.value_ = -r.value_;
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  check_field(rhs);
  if (field_ == Field::Z2) {
    value_ = (is_one() != rhs.is_one()) ? 1 : 0;
  } else {
    value_ += rhs.value_;
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
  check_field(rhs);
  if (field_ == Field::Z2) return *this += rhs;
  value_ -= rhs.value_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  check_field(rhs);
  if (field_ == Field::Z2) {
    value_ = (is_one() && rhs.is_one()) ? 1 : 0;
  } else {
    value_ *= rhs.value_;
  }
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& rhs) {
  check_field(rhs);
  if (rhs.is_zero()) throw std::domain_error("division by zero coefficient");
  if (field_ == Field::Q) value_ /= rhs.value_;
  return *this;
}

void Coefficient::flip_sign_if(bool odd) {
  if (odd && field_ == Field::Q) value_ = -value_;
}

}  // namespace symtc
