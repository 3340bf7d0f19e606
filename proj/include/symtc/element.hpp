#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "symtc/coefficient.hpp"
#include "symtc/monomial.hpp"

namespace symtc {

/// A finite linear combination of monomials with exact coefficients. Zero coefficients are
/// never stored, so two elements are equal exactly when their term maps are equal.
class Element {
 public:
  using Terms = std::map<Monomial, Coefficient>;

  Element(std::shared_ptr<const GeneratorSet> gens, Field field);

  static Element monomial(std::shared_ptr<const GeneratorSet> gens, Field field, Monomial m,
                          Coefficient c);
  static Element unit(std::shared_ptr<const GeneratorSet> gens, Field field);

  const Terms& terms() const { return terms_; }
  const std::shared_ptr<const GeneratorSet>& gens() const { return gens_; }
  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Degree if every term has the same degree; nullopt for zero or mixed elements.
  std::optional<int> homogeneous_degree() const;

  void add_term(const Monomial& m, const Coefficient& c);

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.gens_ == b.gens_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  std::string str() const;

  void check_same_ring(const Element& other) const;

 private:
  std::shared_ptr<const GeneratorSet> gens_;
  Field field_;
  Terms terms_;
};

Element add(const Element& x, const Element& y);
Element scale(const Coefficient& k, const Element& x);
/// Bilinear extension of mul_monomial; terms whose odd generators collide are dropped.
Element mul_free(const Element& x, const Element& y);

}  // namespace symtc
