#include "symtc/numtheory.hpp"

#include <bit>
#include <stdexcept>

#include "symtc/catalog.hpp"

namespace symtc {

int binom_parity(std::uint64_t k, std::uint64_t i) {
  if (i > k) throw std::invalid_argument("binom_parity: i > k");
  return (i & ~k) == 0 ? 1 : 0;
}

std::uint64_t odd_count_row(std::uint64_t k) { return std::uint64_t{1} << std::popcount(k); }

mpz_class binom_big(unsigned long n, unsigned long k) {
  if (k > n) throw std::invalid_argument("binom_big: k > n");
  if (k > n - k) k = n - k;
  mpz_class r = 1;
  // r stays integral: after step j it equals C(n - k + j, j).
  for (unsigned long j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

DiagonalPowerReport diagonal_power_vanishing(int n, int g, int k) {
  if (k < 1 || k > std::min(n, g)) throw std::invalid_argument("diagonal_power_vanishing: need 1 <= k <= min(n, g)");
  DiagonalPowerReport rep{n, g, k};

  auto base = ring_of(Space::symmetric_product(n, {SurfaceKind::NonOrientable, g}));
  auto square = TensorRing::power(base, 2);
  const auto gens = base->generators();
  TensorElement acc = square->one();
  for (int i = 0; i < k; ++i) {
    TensorElement e = proj_pullback(*square, 1, gens[i].value) + proj_pullback(*square, 2, gens[i].value);
    acc = square->multiply(acc, square->multiply(e, e));
  }
  rep.ring_vanishes = acc.is_zero();

  for (int i = 0; i <= k; ++i)
    if (binom_parity(k, i) && k - i <= n && i <= n) ++rep.surviving_terms;
  rep.lucas_vanishes = rep.surviving_terms == 0;
  rep.identification_predicts_vanishing = odd_count_row(k) % 2 == 0;
  return rep;
}

}  // namespace symtc
