#include "symtc/element.hpp"

#include <stdexcept>

namespace symtc {

Element::Element(std::shared_ptr<const GeneratorSet> gens, Field field)
    : gens_(std::move(gens)), field_(field) {
  if (!gens_) throw std::invalid_argument("element needs a generator set");
}

Element Element::monomial(std::shared_ptr<const GeneratorSet> gens, Field field, Monomial m, Coefficient c) {
  Element e(std::move(gens), field);
  e.gens_->check(m);
  e.add_term(m, c);
  return e;
}

Element Element::unit(std::shared_ptr<const GeneratorSet> gens, Field field) {
  Monomial one = gens->unit();
  return monomial(std::move(gens), field, std::move(one), Coefficient::one(field));
}

std::optional<int> Element::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    const int d = gens_->degree(m);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

void Element::add_term(const Monomial& m, const Coefficient& c) {
  if (c.field() != field_) throw std::invalid_argument("coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::check_same_ring(const Element& other) const {
  if (gens_ != other.gens_ || field_ != other.field_)
    throw std::invalid_argument("elements belong to different rings");
}

Element& Element::operator+=(const Element& rhs) {
  check_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  check_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.str();
    if (!first) {
      if (coeff.front() == '-') {
        out += " - ";
        coeff.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    first = false;
    const std::string mono = gens_->str(m);
    if (mono == "1")
      out += coeff;
    else if (coeff == "1")
      out += mono;
    else if (coeff == "-1")
      out += "-" + mono;
    else
      out += coeff + "*" + mono;
  }
  return out;
}

Element add(const Element& x, const Element& y) { return x + y; }

Element scale(const Coefficient& k, const Element& x) {
  Element r(x.gens(), x.field());
  if (k.is_zero()) return r;
  for (const auto& [m, c] : x.terms()) r.add_term(m, c * k);
  return r;
}

Element mul_free(const Element& x, const Element& y) {
  x.check_same_ring(y);
  Element r(x.gens(), x.field());
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      auto p = mul_monomial(*x.gens(), mx, my);
      if (p.sign == 0) continue;
      Coefficient c = cx * cy;
      c.flip_sign_if(p.sign < 0);
      r.add_term(p.monomial, c);
    }
  }
  return r;
}

}  // namespace symtc
