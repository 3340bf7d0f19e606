#include "symtc/monomial.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace symtc {

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.size() > 64) throw std::invalid_argument("at most 64 generators are supported");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].id != static_cast<int>(i)) throw std::invalid_argument("generator ids must be 0..k-1 in order");
    if (gens_[i].degree < 1) throw std::invalid_argument("generator degree must be positive");
    if (gens_[i].odd()) odd_mask_ |= std::uint64_t{1} << i;
  }
}

Monomial GeneratorSet::single(int id, std::uint32_t power) const {
  Monomial m = unit();
  if (gens_.at(id).odd()) {
    if (power > 1) throw std::invalid_argument("odd generator power above one is not a free monomial");
    if (power == 1) m.exterior = std::uint64_t{1} << id;
  } else {
    m.powers[id] = power;
  }
  return m;
}

void GeneratorSet::check(const Monomial& m) const {
  if (m.powers.size() != gens_.size() || (m.exterior & ~odd_mask_) != 0)
    throw std::invalid_argument("monomial does not belong to this generator set");
}

int GeneratorSet::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].odd())
      d += ((m.exterior >> i) & 1U) ? gens_[i].degree : 0;
    else
      d += static_cast<int>(m.powers[i]) * gens_[i].degree;
  }
  return d;
}

int GeneratorSet::length(const Monomial& m) const {
  int len = std::popcount(m.exterior);
  for (auto p : m.powers) len += static_cast<int>(p);
  return len;
}

std::string GeneratorSet::str(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].odd()) {
      if ((m.exterior >> i) & 1U) out += gens_[i].name;
    } else if (m.powers[i] > 0) {
      out += gens_[i].name;
      if (m.powers[i] > 1) out += "^" + std::to_string(m.powers[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> GeneratorSet::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> odd_ids, even_ids;
  for (const auto& g : gens_) (g.odd() ? odd_ids : even_ids).push_back(g.id);

  Monomial cur = unit();
  std::function<void(std::size_t, int)> fill_even = [&](std::size_t k, int remaining) {
    if (k == even_ids.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    const int id = even_ids[k];
    const int deg = gens_[id].degree;
    for (int p = 0; p * deg <= remaining; ++p) {
      cur.powers[id] = static_cast<std::uint32_t>(p);
      fill_even(k + 1, remaining - p * deg);
    }
    cur.powers[id] = 0;
  };
  std::function<void(std::size_t, int)> fill_odd = [&](std::size_t k, int remaining) {
    if (k == odd_ids.size()) {
      fill_even(0, remaining);
      return;
    }
    const int id = odd_ids[k];
    fill_odd(k + 1, remaining);
    if (gens_[id].degree <= remaining) {
      cur.exterior |= std::uint64_t{1} << id;
      fill_odd(k + 1, remaining - gens_[id].degree);
      cur.exterior &= ~(std::uint64_t{1} << id);
    }
  };
  fill_odd(0, d);
  return out;
}

MonomialProduct mul_monomial(const GeneratorSet& gens, const Monomial& lhs, const Monomial& rhs) {
  gens.check(lhs);
  gens.check(rhs);
  MonomialProduct r;
  if ((lhs.exterior & rhs.exterior) != 0) return r;
  // Moving each odd generator j of rhs left past every odd generator of lhs with larger id.
  int swaps = 0;
  for (std::uint64_t bits = rhs.exterior; bits != 0; bits &= bits - 1) {
    const int j = std::countr_zero(bits);
    const std::uint64_t above = (j == 63) ? 0 : (~std::uint64_t{0} << (j + 1));
    swaps += std::popcount(lhs.exterior & above);
  }
  r.sign = (swaps % 2 == 0) ? 1 : -1;
  r.monomial.exterior = lhs.exterior | rhs.exterior;
  r.monomial.powers.resize(lhs.powers.size());
  for (std::size_t i = 0; i < lhs.powers.size(); ++i) r.monomial.powers[i] = lhs.powers[i] + rhs.powers[i];
  return r;
}

}  // namespace symtc
