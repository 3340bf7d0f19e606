#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symtc {

struct Generator {
  int id = 0;
  std::string name;
  int degree = 1;

  bool odd() const { return degree % 2 != 0; }
};

/// A monomial in a free graded-commutative algebra.
///
/// Odd generators live in the exterior bitmask (bit = generator id, each at most once);
/// even generators carry exponents in `powers`, indexed by generator id. Entries of
/// `powers` at odd ids are always zero.
struct Monomial {
  std::uint64_t exterior = 0;
  std::vector<std::uint32_t> powers;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

/// The generator list of a ring, plus the lookups every monomial routine needs.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Generator> gens);

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t id) const { return gens_[id]; }

  Monomial unit() const { return Monomial{0, std::vector<std::uint32_t>(gens_.size(), 0)}; }
  Monomial single(int id, std::uint32_t power = 1) const;

  int degree(const Monomial& m) const;
  /// Number of generator factors in the monomial (c^2 counts twice).
  int length(const Monomial& m) const;
  std::string str(const Monomial& m) const;

  /// All monomials of total degree `d`, in a fixed deterministic order.
  std::vector<Monomial> monomials_of_degree(int d) const;

  void check(const Monomial& m) const;

 private:
  std::vector<Generator> gens_;
  std::uint64_t odd_mask_ = 0;
};

/// Result of a free Koszul-signed product: sign is +1, -1, or 0 (an odd generator repeated).
struct MonomialProduct {
  int sign = 0;
  Monomial monomial;
};

/// Free graded-commutative product of two monomials. The sign counts the transpositions of
/// odd generators needed to sort the concatenated exterior parts. Throws std::invalid_argument
/// when either monomial does not belong to `gens`.
MonomialProduct mul_monomial(const GeneratorSet& gens, const Monomial& lhs, const Monomial& rhs);

}  // namespace symtc
