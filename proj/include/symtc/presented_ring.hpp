#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "symtc/echelon.hpp"
#include "symtc/element.hpp"

namespace symtc {

/// Reference to a quotient basis monomial: degree in the high byte, position in the low 24 bits.
using BasisId = std::uint32_t;

constexpr BasisId make_basis_id(int degree, std::size_t index) {
  return (static_cast<BasisId>(degree) << 24) | static_cast<BasisId>(index);
}
constexpr int basis_degree(BasisId id) { return static_cast<int>(id >> 24); }
constexpr std::size_t basis_index(BasisId id) { return id & 0xFFFFFFu; }

/// One graded piece of a presented ring.
struct DegreeBasis {
  int degree = 0;
  /// Every free monomial of this degree.
  std::vector<Monomial> spanning;
  std::map<Monomial, std::size_t> spanning_index;
  /// Positions in `spanning` of the monomials that form the quotient basis.
  std::vector<std::size_t> basis;
  /// For each spanning monomial, its coordinates in the quotient basis (keys index `basis`).
  std::vector<SparseVector<std::size_t>> projection;
  /// Dimension of the relation ideal in this degree.
  std::size_t ideal_rank = 0;

  std::size_t dim() const { return basis.size(); }
  const Monomial& basis_monomial(std::size_t i) const { return spanning[basis[i]]; }
};

/// A finitely presented graded-commutative ring over Q or Z2.
///
/// Graded pieces are computed on demand by exact linear algebra: the degree-d slice of the
/// relation ideal is spanned by (relation generator) x (free monomial), row reduced against the
/// free monomials of degree d. Results are memoized; the ring is otherwise immutable and can be
/// shared across threads.
class PresentedRing {
 public:
  /// Returns the relation generators of exactly the requested degree.
  using RelationSchema = std::function<std::vector<Element>(const PresentedRing&, int degree)>;

  struct Options {
    /// Degree above which the ring is known to vanish.
    std::optional<int> top_degree;
    /// Over Z2 only: the square of an odd generator, as an even-only monomial (e.g. e^2 = d).
    /// Generators without an entry square to zero.
    std::map<int, Monomial> odd_squares;
  };

  PresentedRing(std::string name, Field field, std::vector<Generator> gens, RelationSchema schema,
                Options options = {});

  PresentedRing(const PresentedRing&) = delete;
  PresentedRing& operator=(const PresentedRing&) = delete;

  const std::string& name() const { return name_; }
  Field field() const { return field_; }
  const std::shared_ptr<const GeneratorSet>& gens() const { return gens_; }
  std::optional<int> top_degree() const { return top_degree_; }

  Element zero() const { return Element(gens_, field_); }
  Element one() const { return Element::unit(gens_, field_); }
  Element generator(int id) const;
  Element monomial(const Monomial& m) const;
  /// Looks a generator up by display name; throws std::out_of_range if absent.
  Element generator(const std::string& name) const;

  /// Free product honouring the ring's odd-square rules; the result is not reduced.
  Element multiply(const Element& x, const Element& y) const;
  Element normal_form(const Element& x) const;
  Element cup(const Element& x, const Element& y) const { return normal_form(multiply(x, y)); }
  bool is_zero(const Element& x) const { return normal_form(x).is_zero(); }

  const DegreeBasis& degree_basis(int d) const;
  std::vector<std::size_t> poincare_polynomial(int up_to) const;
  const std::vector<Element>& relations(int degree) const;

  // Basis-coordinate layer.
  std::size_t dim(int d) const { return degree_basis(d).dim(); }
  Element basis_element(BasisId id) const;
  const Monomial& basis_monomial(BasisId id) const;
  /// Coordinates of a homogeneous element of degree d in the quotient basis.
  SparseVector<std::size_t> coordinates(const Element& x, int d) const;
  /// Product of two basis monomials, as coordinates in degree deg(a) + deg(b).
  const SparseVector<std::size_t>& basis_product(BasisId a, BasisId b) const;

 private:
  std::shared_ptr<const DegreeBasis> compute_degree(int d) const;
  void multiply_terms(const Monomial& x, const Monomial& y, const Coefficient& c, Element& out) const;

  std::string name_;
  Field field_;
  std::shared_ptr<const GeneratorSet> gens_;
  RelationSchema schema_;
  std::optional<int> top_degree_;
  std::map<int, Monomial> odd_squares_;

  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const DegreeBasis>> degrees_;
  mutable std::map<int, std::shared_ptr<const std::vector<Element>>> relations_;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const SparseVector<std::size_t>>> products_;
};

}  // namespace symtc
