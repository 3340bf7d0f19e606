#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "symtc/catalog.hpp"
#include "symtc/tensor_ring.hpp"

namespace symtc {

// ---------------------------------------------------------------------------------------------
// Cup-length

struct CupLength {
  int length = 0;
  /// Generator indices (into TensorRing::generators()) of one nonzero product of that length,
  /// leftmost factor first.
  std::vector<std::size_t> word;
  std::vector<std::string> word_names;
};

/// Nilpotency of the augmentation ideal: V_1 = span of generators, V_k = span{gen * v : v in V_{k-1}},
/// and the answer is the largest k with V_k != 0.
CupLength cup_length(const TensorRing& ring);

// ---------------------------------------------------------------------------------------------
// Special zero-divisors and certificates

/// sum_j weights[j] * pi_j^*(base_class) in the m-fold tensor power.
struct SpecialZeroDivisor {
  TensorElement base_class;
  std::vector<long> weights;
  TensorElement realized;
  std::string label;
  int degree = 0;
};

std::vector<long> canonical_weights(int m);
/// pi_j - pi_m (j is 1-based, j < m).
std::vector<long> two_slot_weights(int m, int j);

/// Throws std::invalid_argument on bad weights or a non-homogeneous / degree-0 class, and
/// std::logic_error if the diagonal does not kill the result.
SpecialZeroDivisor special_zero_divisor(const TensorRing& power, const TensorElement& x, std::vector<long> weights,
                                        std::string label = {});

/// u^e for a special zero-divisor. Even classes (and everything over Z2) commute, so the power is
/// expanded with multinomial coefficients directly; odd rational classes are multiplied out.
TensorElement divisor_power(const TensorRing& power, const SpecialZeroDivisor& u, int e);

struct CertificateBlock {
  SpecialZeroDivisor divisor;
  int exponent = 1;
};

struct Certificate {
  TensorRing::Ptr power;
  std::vector<CertificateBlock> blocks;
  TensorElement product;

  int length() const;
  bool nonzero() const { return !product.is_zero(); }
  /// Coefficient of the first pure tensor of the product (zero for an empty product).
  Coefficient leading_coefficient() const;
  /// Largest coefficient magnitude among the product's terms.
  mpq_class max_abs_coefficient() const;
};

Certificate evaluate_certificate(TensorRing::Ptr power, std::vector<CertificateBlock> blocks);
/// Re-multiplies every factor one at a time and compares with the stored product.
bool verify_certificate(const Certificate& cert);

enum class SzclStrategy { Paper, Structured, Greedy };
std::string to_string(SzclStrategy s);
SzclStrategy parse_strategy(const std::string& s);

struct SzclResult {
  int length = 0;
  std::optional<Certificate> certificate;
  SzclStrategy strategy = SzclStrategy::Structured;
};

struct SzclOptions {
  std::size_t beam_width = 64;
};

/// Lower bound for the m-th special zero-divisor cup-length.
///  - Paper: the literal products (a_i-bar)^m (b_i-bar)^m ... (c-bar)^{m(n-g)} for SP^n(M_g), and
///    (x_i-bar)^{m-1} / (x_i-bar)^m per odd / even sphere factor. Evaluated honestly: a vanishing
///    product yields length 0.
///  - Structured: starts from a cup-length witness (m-1 two-slot divisors per odd class, m copies
///    of the canonical divisor per even class), then extends greedily.
///  - Greedy: beam search over canonical and two-slot divisors of the ring generators.
SzclResult szcl_lower(const Space& space, int m, SzclStrategy strategy = SzclStrategy::Structured,
                      SzclOptions options = {});
SzclResult szcl_lower(const TensorRing::Ptr& ring, int m, SzclStrategy strategy = SzclStrategy::Structured,
                      SzclOptions options = {});

/// The literal product for SP^n(M_g) (see above), product possibly zero.
Certificate paper_certificate(int n, int g, int m);
/// |(m-1) m!|^{2n} for n <= g, and (m-1)^{n+g} (m!)^{2g} prod_{i<m} C((m-i)(n-g), n-g) for n > g.
mpz_class paper_coefficient(int n, int g, int m);

// ---------------------------------------------------------------------------------------------
// Zero-divisor cup-length, brute force

struct SizeLimitExceeded : std::length_error {
  using std::length_error::length_error;
};

struct ZclResult {
  int length = 0;
  std::vector<std::size_t> kernel_dims;
  std::size_t ideal_generators = 0;
};

/// Exact zcl_m: K = ker(Delta_m^*) by linear algebra, minimal ideal generators of K, then the
/// nilpotency of K. Throws SizeLimitExceeded when dim H*(X^m) > size_limit.
ZclResult zcl_bruteforce(const TensorRing::Ptr& ring, int m, std::size_t size_limit = 4096);

// ---------------------------------------------------------------------------------------------
// Bounds

struct BoundReport {
  std::string invariant;  // cat | TC_m | dTC_m-lower | cup | szcl | zcl
  std::string space;
  int m = 0;
  int lower = 0;
  int upper = 0;
  bool exact = false;
  std::string lower_reason;
  std::string upper_reason;
  std::optional<Certificate> certificate;
  std::vector<std::string> cup_witness;
  std::vector<std::string> citations;
};

/// lower = cup-length; upper = min(dimension, (dim + cd pi_1)/2 for SP^n(M_g) with n > g,
/// sum over factors for products, k * base for powers). cat(S^k) = 1.
BoundReport cat_bounds(const Space& space);

/// lower = max(certified szcl, (m-1) * cup-length, sum of lifted factor certificates, and the
/// brute-force zcl_m when the power is small);
/// upper = min(m * cat upper, sum of factor TC_m uppers). Known values short-circuit surfaces
/// and spheres.
BoundReport tcm_bounds(const Space& space, int m);

struct AdditivityReport {
  std::vector<std::string> factors;
  int m = 0;
  int cup_product = 0;
  int cup_sum = 0;
  bool cup_additive = false;
  BoundReport cat_product;
  std::vector<BoundReport> cat_factors;
  bool ls_logarithmic = false;
  std::string ls_note;
  BoundReport tc_product;
  std::vector<BoundReport> tc_factors;
  bool tc_logarithmic = false;
  std::string tc_note;
  int szcl_sum = 0;
  int szcl_lifted = 0;
  bool szcl_additive = false;
};

/// Checks cat / TC_m / szcl additivity on X_1 x ... x X_k.
AdditivityReport product_additivity_check(const std::vector<Space>& spaces, int m);

struct GaneaReport {
  std::string space;
  int k = 0;
  std::optional<int> m;
  bool cat_ok = false;
  std::string cat_note;
  int cat_base = 0;
  int cat_product = 0;
  bool tc_ok = false;
  std::string tc_note;
  int tc_base = 0;
  int tc_sphere = 0;
  int tc_product = 0;
};

/// cat(X x S^k) = cat(X) + 1 and, with m, TC_m(X x S^k) = TC_m(X) + TC_m(S^k).
GaneaReport ganea_check(const Space& space, int k, std::optional<int> m);

struct GenfunReport {
  std::string space;
  int horizon = 0;
  int cat = 0;
  std::vector<int> coefficients;  // TC_{m+1} for m = 1..horizon
  std::vector<long long> numerator;
  long long numerator_at_one = 0;
  bool exact = false;
  bool matches = false;
  std::string note;
};

/// TC-generating function sum_{m>=1} TC_{m+1} t^m, compared against cat (2t - t^2) / (1-t)^2.
GenfunReport genfun(const Space& space, int horizon);

/// cat(X) == dim X, for a single symmetric product of a surface. Throws if cat is not exact.
bool essential(const Space& space);

struct DtcReport {
  int lower = 0;
  bool equals_tc = false;
};
/// szcl certificate length as a lower bound for distributional TC_m (rational spaces only).
DtcReport dtc_lower(const Space& space, int m);

}  // namespace symtc
