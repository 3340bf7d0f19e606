#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symtc/presented_ring.hpp"
#include "symtc/tensor_ring.hpp"

namespace symtc {

struct MacdonaldOptions {
  /// Include the relations with (c - a_k b_k) factors. Turning this off is only useful for the
  /// diagnostic that measures what those relations change.
  bool include_mixed = true;
};

/// Rational cohomology of SP^n(M_g): generators a1,b1,...,ag,bg (degree 1) and c (degree 2),
/// relations a_I b_J (c - a_k1 b_k1)...(c - a_kr b_kr) c^s = 0 whenever |I|+|J|+2r+s >= n+1,
/// with I, J, K pairwise disjoint. Top degree 2n.
std::shared_ptr<const PresentedRing> macdonald_ring(int n, int g, MacdonaldOptions options = {});

/// Z2 cohomology of SP^n(N_g): generators e1..eg (degree 1), d (degree 2), e_i^2 = d and
/// e_I d^s = 0 whenever |I| + s >= n+1. Top degree 2n.
std::shared_ptr<const PresentedRing> ks_ring(int n, int g);

/// H*(S^k) over the given field.
std::shared_ptr<const PresentedRing> sphere_ring(int k, Field field);

/// Per-degree ranks with and without the mixed Macdonald relations.
struct MacdonaldDiagnostic {
  std::vector<std::size_t> full;
  std::vector<std::size_t> pure_only;
  bool differs() const { return full != pure_only; }
};
MacdonaldDiagnostic macdonald_diagnostic(int n, int g);

// ---------------------------------------------------------------------------------------------
// Space descriptors

enum class SurfaceKind { Orientable, NonOrientable };

struct Surface {
  SurfaceKind kind = SurfaceKind::Orientable;
  int genus = 0;
  bool operator==(const Surface&) const = default;
};

/// Expression tree naming a space. Build with the factories below; they validate parameters.
class Space {
 public:
  enum class Kind { Sphere, SymmetricProduct, Product, Power };

  static Space sphere(int k);
  static Space symmetric_product(int n, Surface s);
  static Space surface(Surface s) { return symmetric_product(1, s); }
  static Space product(std::vector<Space> factors);
  static Space power(Space base, int k);

  Kind kind() const { return kind_; }
  /// Sphere dimension, or power exponent.
  int k() const { return k_; }
  int n() const { return n_; }
  const Surface& surf() const { return surface_; }
  const std::vector<Space>& children() const { return children_; }

  /// Coefficient field: Z2 if any leaf is non-orientable, Q otherwise.
  Field field() const { return field_; }
  int dimension() const;
  bool is_leaf() const { return kind_ == Kind::Sphere || kind_ == Kind::SymmetricProduct; }

  /// Canonical text form, parseable by parse_space.
  std::string str() const;
  bool operator==(const Space& other) const;

 private:
  Space() = default;
  void settle_field();

  Kind kind_ = Kind::Sphere;
  int k_ = 0;
  int n_ = 0;
  Surface surface_;
  std::vector<Space> children_;
  Field field_ = Field::Q;
  // True when some leaf pins the field (surfaces do, spheres do not).
  bool field_pinned_ = false;
};

/// Cohomology ring of a space as a tensor ring (leaves are one-slot rings). Leaf rings are
/// shared through a process-wide cache.
TensorRing::Ptr ring_of(const Space& space);
/// Leaf presented ring, with spheres taken over `field`.
std::shared_ptr<const PresentedRing> leaf_ring(const Space& leaf, Field field);

TensorRing::Ptr tensor_product(const std::vector<TensorRing::Ptr>& factors);
TensorRing::Ptr tensor_power(TensorRing::Ptr ring, int m);

/// Generator list, degree pieces and basis monomials as JSON text.
std::string dump_ring(const TensorRing& ring);

}  // namespace symtc
