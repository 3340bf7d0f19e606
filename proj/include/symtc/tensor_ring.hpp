#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symtc/presented_ring.hpp"

namespace symtc {

/// One quotient-basis element per slot.
using PureTensor = std::vector<BasisId>;

/// A linear combination of pure tensors of a TensorRing, with reduced slots.
class TensorElement {
 public:
  using Terms = std::map<PureTensor, Coefficient>;

  TensorElement(std::uint64_t ring_id, Field field) : ring_id_(ring_id), field_(field) {}

  std::uint64_t ring_id() const { return ring_id_; }
  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const PureTensor& t, const Coefficient& c);
  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.ring_id_ == b.ring_id_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  void check_same_ring(const TensorElement& other) const;

 private:
  std::uint64_t ring_id_;
  Field field_;
  Terms terms_;
};

TensorElement scale(const Coefficient& k, const TensorElement& x);

/// Graded tensor product of finitely many presented rings (the Kunneth ring of a product).
///
/// Pure tensors multiply slotwise with the Koszul sign
///   (x1 (x) ... (x) xk)(y1 (x) ... (x) yk) = (-1)^{sum_{j<i} |y_j||x_i|} x1y1 (x) ... (x) xkyk.
/// A leaf ring is the one-slot case. Powers remember their base so that the diagonal and the
/// projections can be expressed blockwise; products remember their factors for lifting.
class TensorRing {
 public:
  using Ptr = std::shared_ptr<const TensorRing>;

  static Ptr of(std::shared_ptr<const PresentedRing> ring);
  /// Tensor product of the factors, slots concatenated in order. Throws on mixed fields.
  static Ptr product(const std::vector<Ptr>& factors);
  /// m-fold tensor power; slots are laid out block by block.
  static Ptr power(Ptr base, int m);

  std::uint64_t id() const { return id_; }
  Field field() const { return field_; }
  const std::string& name() const { return name_; }
  std::size_t num_slots() const { return slots_.size(); }
  const PresentedRing& slot(std::size_t i) const { return *slots_.at(i); }
  int top_degree() const { return top_degree_; }

  /// Base ring and exponent for powers; null and 1 otherwise.
  const Ptr& base() const { return base_; }
  int exponent() const { return exponent_; }
  /// Factors of a product (empty for leaves and powers), with their first slot.
  const std::vector<Ptr>& factors() const { return factors_; }
  const std::vector<std::size_t>& factor_offsets() const { return factor_offsets_; }

  TensorElement zero() const { return TensorElement(id_, field_); }
  TensorElement one() const;
  TensorElement pure(const PureTensor& t, const Coefficient& c) const;
  PureTensor unit_tensor() const { return PureTensor(slots_.size(), make_basis_id(0, 0)); }
  /// x placed in slot i, units elsewhere.
  TensorElement from_slot(std::size_t i, const Element& x) const;
  /// Slot-ring elements -> pure-tensor expansion of x_1 (x) ... (x) x_k.
  TensorElement tensor_of(const std::vector<Element>& xs) const;

  struct NamedGenerator {
    std::string name;
    int degree;
    TensorElement value;
  };
  /// Algebra generators: every slot generator, placed in its slot.
  std::vector<NamedGenerator> generators() const;

  TensorElement multiply(const TensorElement& x, const TensorElement& y) const;
  int degree(const PureTensor& t) const;
  /// Degree when homogeneous; -1 for zero or mixed elements.
  int degree(const TensorElement& x) const;

  std::vector<std::size_t> poincare_polynomial() const;
  std::size_t total_dim() const;
  /// All pure basis tensors of degree d, in lexicographic order.
  std::vector<PureTensor> basis(int d) const;

  std::string str(const PureTensor& t) const;
  std::string str(const TensorElement& x) const;

 private:
  TensorRing() = default;
  void check(const TensorElement& x) const;
  std::vector<std::size_t> slot_dims(std::size_t i) const;

  std::uint64_t id_ = 0;
  Field field_ = Field::Q;
  std::string name_;
  std::vector<std::shared_ptr<const PresentedRing>> slots_;
  int top_degree_ = 0;
  Ptr base_;
  int exponent_ = 1;
  std::vector<Ptr> factors_;
  std::vector<std::size_t> factor_offsets_;
};

/// pi_i^*: places an element of the base ring in block i (1-based) of a tensor power.
TensorElement proj_pullback(const TensorRing& power, int i, const TensorElement& x);

/// Delta_m^*: multiplies the m blocks of each pure tensor together in block order.
TensorElement diagonal_pullback(const TensorRing& power, const TensorElement& x);

/// pr_f^*: places an element of factor f of a product ring into that factor's slots.
TensorElement lift_from_factor(const TensorRing& product, std::size_t f, const TensorElement& x);

}  // namespace symtc
