#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace symtc {

/// C(k, i) mod 2 by Lucas: odd iff every set bit of i is set in k. Throws if i > k.
int binom_parity(std::uint64_t k, std::uint64_t i);

/// Number of odd entries in row k of Pascal's triangle, 2^popcount(k).
std::uint64_t odd_count_row(std::uint64_t k);

/// Exact C(n, k). Throws if k > n.
mpz_class binom_big(unsigned long n, unsigned long k);

/// (e_1-bar)^2 ... (e_k-bar)^2 = (d (x) 1 + 1 (x) d)^k in H*(SP^n(N_g))^(x)2 over Z2, three ways.
struct DiagonalPowerReport {
  int n = 0, g = 0, k = 0;
  /// Direct computation in the tensor square.
  bool ring_vanishes = false;
  /// Lucas count of the surviving terms d^{k-i} (x) d^i (odd C(k,i), both exponents <= n).
  std::uint64_t surviving_terms = 0;
  bool lucas_vanishes = false;
  /// The argument that identifies every d^{k-i} (x) d^i with one class, so that vanishing
  /// follows from the even size of the odd part of the row.
  bool identification_predicts_vanishing = false;
  bool routes_agree() const { return ring_vanishes == lucas_vanishes; }
};

/// Requires 1 <= k <= min(n, g).
DiagonalPowerReport diagonal_power_vanishing(int n, int g, int k);

}  // namespace symtc
