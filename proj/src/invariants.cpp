#include "symtc/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "symtc/numtheory.hpp"

namespace symtc {

// ---------------------------------------------------------------------------------------------
// Cup-length

CupLength cup_length(const TensorRing& ring) {
  const auto gens = ring.generators();
  struct Entry {
    TensorElement value;
    std::vector<std::size_t> word;
  };
  std::vector<Entry> level;
  {
    Echelon<PureTensor> ech(ring.field());
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (!gens[i].value.is_zero() && ech.insert(gens[i].value.terms())) level.push_back({gens[i].value, {i}});
  }
  CupLength out;
  if (level.empty()) return out;
  out.length = 1;
  out.word = level.front().word;
  while (true) {
    Echelon<PureTensor> ech(ring.field());
    std::vector<Entry> next;
    for (const auto& v : level) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (ring.degree(v.value) + gens[i].degree > ring.top_degree()) continue;
        TensorElement p = ring.multiply(gens[i].value, v.value);
        if (p.is_zero() || !ech.insert(p.terms())) continue;
        std::vector<std::size_t> word{i};
        word.insert(word.end(), v.word.begin(), v.word.end());
        next.push_back({std::move(p), std::move(word)});
      }
    }
    if (next.empty()) break;
    ++out.length;
    out.word = next.front().word;
    level = std::move(next);
  }
  for (auto i : out.word) out.word_names.push_back(gens[i].name);
  return out;
}

// ---------------------------------------------------------------------------------------------
// Special zero-divisors

std::vector<long> canonical_weights(int m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  std::vector<long> w(m, 1);
  w.back() = -(m - 1);
  return w;
}

std::vector<long> two_slot_weights(int m, int j) {
  if (m < 2 || j < 1 || j >= m) throw std::invalid_argument("two_slot_weights: need 1 <= j < m");
  std::vector<long> w(m, 0);
  w[j - 1] = 1;
  w.back() = -1;
  return w;
}

SpecialZeroDivisor special_zero_divisor(const TensorRing& power, const TensorElement& x, std::vector<long> weights,
                                        std::string label) {
  if (!power.base()) throw std::invalid_argument("special zero-divisors live in a tensor power");
  const auto& base = *power.base();
  if (weights.size() != static_cast<std::size_t>(power.exponent()))
    throw std::invalid_argument("need one weight per factor");
  if (std::accumulate(weights.begin(), weights.end(), 0L) != 0) throw std::invalid_argument("weights must sum to zero");
  if (std::count_if(weights.begin(), weights.end(), [](long w) { return w != 0; }) < 2)
    throw std::invalid_argument("need at least two nonzero weights");
  const int d = base.degree(x);
  if (d <= 0) throw std::invalid_argument("base class must be homogeneous of positive degree");
  TensorElement realized = power.zero();
  for (int j = 0; j < power.exponent(); ++j)
    if (weights[j] != 0) realized += scale(Coefficient(power.field(), weights[j]), proj_pullback(power, j + 1, x));
  if (realized.is_zero()) throw std::invalid_argument("weights vanish in this characteristic");
  if (!diagonal_pullback(power, realized).is_zero()) throw std::logic_error("diagonal does not kill the divisor");
  return {x, std::move(weights), std::move(realized), std::move(label), d};
}

TensorElement divisor_power(const TensorRing& power, const SpecialZeroDivisor& u, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e == 0) return power.one();
  if (e == 1) return u.realized;
  const bool commutes = u.degree % 2 == 0 || power.field() == Field::Z2;
  if (!commutes) {
    TensorElement acc = u.realized;
    for (int i = 1; i < e && !acc.is_zero(); ++i) acc = power.multiply(acc, u.realized);
    return acc;
  }
  const auto& base = *power.base();
  const int m = power.exponent();
  const std::size_t k = base.num_slots();
  std::vector<TensorElement> xp{base.one()};
  while (static_cast<int>(xp.size()) <= e) {
    TensorElement next = base.multiply(xp.back(), u.base_class);
    if (next.is_zero()) break;
    xp.push_back(std::move(next));
  }
  const int maxk = static_cast<int>(xp.size()) - 1;
  std::vector<int> active_after(m + 1, 0);
  for (int j = m - 1; j >= 0; --j) active_after[j] = active_after[j + 1] + (u.weights[j] != 0 ? 1 : 0);

  std::vector<mpz_class> fact(e + 1, 1);
  for (int i = 1; i <= e; ++i) fact[i] = fact[i - 1] * i;

  TensorElement out = power.zero();
  std::vector<int> ks(m, 0);
  std::function<void(int, int)> rec = [&](int j, int remaining) {
    if (j == m) {
      if (remaining != 0) return;
      mpz_class coeff = fact[e];
      for (int i = 0; i < m; ++i) {
        coeff /= fact[ks[i]];
        mpz_class w = u.weights[i], p;
        mpz_pow_ui(p.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(ks[i]));
        coeff *= p;
      }
      const Coefficient c(power.field(), mpq_class(coeff));
      if (c.is_zero()) return;
      // Cartesian product of the block expansions.
      std::vector<std::pair<PureTensor, Coefficient>> acc{{PureTensor{}, c}};
      for (int i = 0; i < m; ++i) {
        std::vector<std::pair<PureTensor, Coefficient>> next;
        for (const auto& [t, a] : acc) {
          for (const auto& [bt, bc] : xp[ks[i]].terms()) {
            PureTensor u2 = t;
            u2.insert(u2.end(), bt.begin(), bt.end());
            next.emplace_back(std::move(u2), a * bc);
          }
        }
        acc = std::move(next);
      }
      for (const auto& [t, a] : acc) {
        if (t.size() != k * static_cast<std::size_t>(m)) throw std::logic_error("block size mismatch");
        out.add_term(t, a);
      }
      return;
    }
    if (u.weights[j] == 0) {
      ks[j] = 0;
      rec(j + 1, remaining);
      return;
    }
    const int hi = std::min(remaining, maxk);
    const int lo = std::max(0, remaining - maxk * active_after[j + 1]);
    for (int v = lo; v <= hi; ++v) {
      ks[j] = v;
      rec(j + 1, remaining - v);
    }
  };
  rec(0, e);
  return out;
}

int Certificate::length() const {
  int n = 0;
  for (const auto& b : blocks) n += b.exponent;
  return n;
}

Coefficient Certificate::leading_coefficient() const {
  if (product.is_zero()) return Coefficient::zero(product.field());
  return product.terms().begin()->second;
}

mpq_class Certificate::max_abs_coefficient() const {
  mpq_class best = 0;
  for (const auto& [t, c] : product.terms()) best = std::max<mpq_class>(best, abs(c.value()));
  return best;
}

Certificate evaluate_certificate(TensorRing::Ptr power, std::vector<CertificateBlock> blocks) {
  Certificate cert{power, std::move(blocks), power->one()};
  for (const auto& b : cert.blocks) {
    if (cert.product.is_zero()) break;
    cert.product = power->multiply(cert.product, divisor_power(*power, b.divisor, b.exponent));
  }
  return cert;
}

bool verify_certificate(const Certificate& cert) {
  const auto& power = *cert.power;
  TensorElement acc = power.one();
  for (const auto& b : cert.blocks) {
    // Rebuild each divisor from its base class and weights rather than trusting `realized`.
    TensorElement u = power.zero();
    for (int j = 0; j < power.exponent(); ++j)
      if (b.divisor.weights[j] != 0)
        u += scale(Coefficient(power.field(), b.divisor.weights[j]), proj_pullback(power, j + 1, b.divisor.base_class));
    if (!diagonal_pullback(power, u).is_zero()) return false;
    for (int i = 0; i < b.exponent; ++i) acc = power.multiply(acc, u);
  }
  return acc == cert.product;
}

std::string to_string(SzclStrategy s) {
  switch (s) {
    case SzclStrategy::Paper: return "paper";
    case SzclStrategy::Structured: return "structured";
    case SzclStrategy::Greedy: return "greedy";
  }
  return "?";
}

SzclStrategy parse_strategy(const std::string& s) {
  if (s == "paper") return SzclStrategy::Paper;
  if (s == "structured") return SzclStrategy::Structured;
  if (s == "greedy") return SzclStrategy::Greedy;
  throw std::invalid_argument("unknown strategy '" + s + "' (paper, structured, greedy)");
}

namespace {

std::string weights_label(const std::string& name, const std::vector<long>& w) {
  std::string out = name + "[";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + "]";
}

struct Candidate {
  SpecialZeroDivisor divisor;
};

// Canonical and two-slot divisors of every ring generator, duplicates removed.
std::vector<Candidate> candidate_pool(const TensorRing& power) {
  std::vector<Candidate> pool;
  const int m = power.exponent();
  for (const auto& g : power.base()->generators()) {
    std::vector<std::vector<long>> ws{canonical_weights(m)};
    for (int j = 1; j < m; ++j) ws.push_back(two_slot_weights(m, j));
    for (auto& w : ws) {
      std::optional<SpecialZeroDivisor> u;
      try {
        u = special_zero_divisor(power, g.value, w, weights_label(g.name, w));
      } catch (const std::invalid_argument&) {
        continue;
      }
      bool dup = std::any_of(pool.begin(), pool.end(), [&](const Candidate& c) { return c.divisor.realized == u->realized; });
      if (!dup) pool.push_back({std::move(*u)});
    }
  }
  return pool;
}

void push_block(std::vector<CertificateBlock>& blocks, const SpecialZeroDivisor& u, int e) {
  if (!blocks.empty() && blocks.back().divisor.realized == u.realized) {
    blocks.back().exponent += e;
    return;
  }
  blocks.push_back({u, e});
}

// Appends pool divisors one at a time while the product stays nonzero.
void extend_greedily(const TensorRing& power, const std::vector<Candidate>& pool, std::vector<CertificateBlock>& blocks,
                     TensorElement& product) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& c : pool) {
      if (power.degree(product) + c.divisor.degree > power.top_degree()) continue;
      TensorElement p = power.multiply(product, c.divisor.realized);
      if (p.is_zero()) continue;
      product = std::move(p);
      push_block(blocks, c.divisor, 1);
      progress = true;
    }
  }
}

SzclResult structured(const TensorRing::Ptr& power) {
  const auto& base = *power->base();
  const int m = power->exponent();
  const auto gens = base.generators();
  const auto cl = cup_length(base);

  std::map<std::size_t, int> multiplicity;
  for (auto i : cl.word) ++multiplicity[i];
  std::vector<CertificateBlock> seed;
  for (auto i : cl.word) {
    auto it = multiplicity.find(i);
    if (it == multiplicity.end()) continue;
    const int e = it->second;
    multiplicity.erase(it);
    const auto& g = gens[i];
    if (g.degree % 2 != 0 && base.field() == Field::Q) {
      for (int j = 1; j < m; ++j) {
        auto w = two_slot_weights(m, j);
        seed.push_back({special_zero_divisor(*power, g.value, w, weights_label(g.name, w)), 1});
      }
    } else {
      auto w = canonical_weights(m);
      try {
        seed.push_back({special_zero_divisor(*power, g.value, w, weights_label(g.name, w)), m * e});
      } catch (const std::invalid_argument&) {
        // Canonical weights can vanish mod 2; fall back to pi_1 - pi_m.
        auto w2 = two_slot_weights(m, 1);
        seed.push_back({special_zero_divisor(*power, g.value, w2, weights_label(g.name, w2)), m * e});
      }
    }
  }

  std::vector<CertificateBlock> blocks;
  TensorElement product = power->one();
  for (const auto& s : seed) {
    for (int e = s.exponent; e >= 1; --e) {
      if (power->degree(product) + e * s.divisor.degree > power->top_degree()) continue;
      TensorElement p = power->multiply(product, divisor_power(*power, s.divisor, e));
      if (p.is_zero()) continue;
      product = std::move(p);
      push_block(blocks, s.divisor, e);
      break;
    }
  }
  extend_greedily(*power, candidate_pool(*power), blocks, product);

  SzclResult r;
  r.strategy = SzclStrategy::Structured;
  Certificate cert{power, std::move(blocks), std::move(product)};
  r.length = cert.nonzero() ? cert.length() : 0;
  r.certificate = std::move(cert);
  return r;
}

SzclResult greedy(const TensorRing::Ptr& power, std::size_t width) {
  const auto pool = candidate_pool(*power);
  struct State {
    std::vector<std::size_t> picks;  // non-decreasing pool indices
    TensorElement product;
    int degree;
  };
  std::vector<State> beam{{{}, power->one(), 0}};
  State best = beam.front();
  while (!beam.empty()) {
    std::vector<State> next;
    for (const auto& s : beam) {
      const std::size_t from = s.picks.empty() ? 0 : s.picks.back();
      for (std::size_t c = from; c < pool.size(); ++c) {
        const int d = s.degree + pool[c].divisor.degree;
        if (d > power->top_degree()) continue;
        TensorElement p = power->multiply(s.product, pool[c].divisor.realized);
        if (p.is_zero()) continue;
        auto picks = s.picks;
        picks.push_back(c);
        next.push_back({std::move(picks), std::move(p), d});
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), [](const State& a, const State& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.product.size() != b.product.size()) return a.product.size() > b.product.size();
      return a.picks < b.picks;
    });
    if (next.size() > width) next.erase(next.begin() + static_cast<std::ptrdiff_t>(width), next.end());
    best = next.front();
    beam = std::move(next);
  }
  std::vector<CertificateBlock> blocks;
  for (auto c : best.picks) push_block(blocks, pool[c].divisor, 1);
  SzclResult r;
  r.strategy = SzclStrategy::Greedy;
  Certificate cert{power, std::move(blocks), std::move(best.product)};
  r.length = cert.nonzero() ? cert.length() : 0;
  r.certificate = std::move(cert);
  return r;
}

bool is_sphere_product(const Space& s) {
  switch (s.kind()) {
    case Space::Kind::Sphere: return true;
    case Space::Kind::SymmetricProduct: return false;
    case Space::Kind::Product:
      return std::all_of(s.children().begin(), s.children().end(), is_sphere_product);
    case Space::Kind::Power: return is_sphere_product(s.children().front());
  }
  return false;
}

SzclResult paper_sphere_certificate(const Space& space, int m) {
  auto power = TensorRing::power(ring_of(space), m);
  const auto& base = *power->base();
  std::vector<CertificateBlock> blocks;
  for (const auto& g : base.generators()) {
    auto w = canonical_weights(m);
    auto u = special_zero_divisor(*power, g.value, w, weights_label(g.name, w));
    blocks.push_back({std::move(u), g.degree % 2 != 0 ? m - 1 : m});
  }
  SzclResult r;
  r.strategy = SzclStrategy::Paper;
  auto cert = evaluate_certificate(power, std::move(blocks));
  r.length = cert.nonzero() ? cert.length() : 0;
  r.certificate = std::move(cert);
  return r;
}

}  // namespace

Certificate paper_certificate(int n, int g, int m) {
  auto base = ring_of(Space::symmetric_product(n, {SurfaceKind::Orientable, g}));
  auto power = TensorRing::power(base, m);
  const auto gens = base->generators();
  const auto w = canonical_weights(m);
  std::vector<CertificateBlock> blocks;
  for (int i = 1; i <= std::min(n, g); ++i) {
    for (int id : {2 * (i - 1), 2 * (i - 1) + 1})
      blocks.push_back({special_zero_divisor(*power, gens[id].value, w, weights_label(gens[id].name, w)), m});
  }
  if (n > g) blocks.push_back({special_zero_divisor(*power, gens[2 * g].value, w, weights_label("c", w)), m * (n - g)});
  return evaluate_certificate(power, std::move(blocks));
}

mpz_class paper_coefficient(int n, int g, int m) {
  mpz_class mfact = 1;
  for (int i = 2; i <= m; ++i) mfact *= i;
  mpz_class out = 1;
  if (n <= g) {
    mpz_class f = (m - 1) * mfact;
    mpz_pow_ui(out.get_mpz_t(), f.get_mpz_t(), 2 * n);
    return out;
  }
  mpz_class a, b;
  mpz_class m1 = m - 1;
  mpz_pow_ui(a.get_mpz_t(), m1.get_mpz_t(), n + g);
  mpz_pow_ui(b.get_mpz_t(), mfact.get_mpz_t(), 2 * g);
  out = a * b;
  for (int i = 0; i < m; ++i) out *= binom_big((m - i) * (n - g), n - g);
  return out;
}

SzclResult szcl_lower(const TensorRing::Ptr& ring, int m, SzclStrategy strategy, SzclOptions options) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  auto power = TensorRing::power(ring, m);
  switch (strategy) {
    case SzclStrategy::Structured: return structured(power);
    case SzclStrategy::Greedy: return greedy(power, options.beam_width);
    case SzclStrategy::Paper: break;
  }
  throw std::invalid_argument("the paper strategy needs a space descriptor");
}

SzclResult szcl_lower(const Space& space, int m, SzclStrategy strategy, SzclOptions options) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (strategy != SzclStrategy::Paper) return szcl_lower(ring_of(space), m, strategy, options);
  if (space.kind() == Space::Kind::SymmetricProduct && space.surf().kind == SurfaceKind::Orientable) {
    SzclResult r;
    r.strategy = SzclStrategy::Paper;
    auto cert = paper_certificate(space.n(), space.surf().genus, m);
    r.length = cert.nonzero() ? cert.length() : 0;
    r.certificate = std::move(cert);
    return r;
  }
  if (is_sphere_product(space)) return paper_sphere_certificate(space, m);
  throw std::invalid_argument("no literal certificate for " + space.str());
}

// ---------------------------------------------------------------------------------------------
// zcl brute force

ZclResult zcl_bruteforce(const TensorRing::Ptr& ring, int m, std::size_t size_limit) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  auto power = TensorRing::power(ring, m);
  const std::size_t total = power->total_dim();
  if (total > size_limit)
    throw SizeLimitExceeded("dim H*(X^" + std::to_string(m) + ") = " + std::to_string(total) + " exceeds the limit " +
                            std::to_string(size_limit));
  const Field f = power->field();
  const int top = power->top_degree();

  // Kernel of the diagonal, degree by degree.
  std::vector<std::vector<TensorElement>> kernel(top + 1);
  ZclResult out;
  for (int d = 0; d <= top; ++d) {
    const auto basis = power->basis(d);
    Echelon<PureTensor, std::size_t> ech(f);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const TensorElement img = diagonal_pullback(*power, power->pure(basis[i], Coefficient::one(f)));
      if (ech.insert(img.terms(), {{i, Coefficient::one(f)}})) continue;
      TensorElement k = power->zero();
      for (const auto& [j, c] : ech.last_dependency()) k.add_term(basis[j], c);
      kernel[d].push_back(std::move(k));
    }
    out.kernel_dims.push_back(kernel[d].size());
  }

  // Minimal ideal generators: kernel classes not in P_+ * K.
  const auto gens = power->generators();
  std::vector<TensorElement> ideal_gens;
  for (int d = 1; d <= top; ++d) {
    Echelon<PureTensor> dec(f);
    for (const auto& h : gens) {
      if (h.degree > d) continue;
      for (const auto& k : kernel[d - h.degree]) {
        TensorElement p = power->multiply(h.value, k);
        if (!p.is_zero()) dec.insert(p.terms());
      }
    }
    for (const auto& k : kernel[d])
      if (dec.insert(k.terms())) ideal_gens.push_back(k);
  }
  out.ideal_generators = ideal_gens.size();
  if (ideal_gens.empty()) return out;

  // K^k != 0 iff some product of k ideal generators is nonzero.
  std::vector<TensorElement> level = ideal_gens;
  out.length = 1;
  while (true) {
    Echelon<PureTensor> ech(f);
    std::vector<TensorElement> next;
    for (const auto& v : level) {
      const int dv = power->degree(v);
      for (const auto& g : ideal_gens) {
        if (dv + power->degree(g) > top) continue;
        TensorElement p = power->multiply(g, v);
        if (!p.is_zero() && ech.insert(p.terms())) next.push_back(std::move(p));
      }
    }
    if (next.empty()) break;
    ++out.length;
    level = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Bounds

namespace {

const CupLength& cached_cup_length(const Space& space) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const CupLength>> cache;
  const std::string key = space.str() + "|" + to_string(space.field());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto cl = std::make_shared<const CupLength>(cup_length(*ring_of(space)));
  std::lock_guard lock(mutex);
  return *cache.try_emplace(key, std::move(cl)).first->second;
}

void finish(BoundReport& r) {
  if (r.lower > r.upper) throw std::logic_error("lower bound exceeds upper bound for " + r.invariant + " of " + r.space);
  r.exact = r.lower == r.upper;
}

BoundReport compute_cat(const Space& space) {
  BoundReport r;
  r.invariant = "cat";
  r.space = space.str();
  const auto& cl = cached_cup_length(space);
  r.lower = cl.length;
  r.lower_reason = "cup-length";
  r.cup_witness = cl.word_names;
  r.upper = space.dimension();
  r.upper_reason = "dimension";
  auto consider = [&](int value, const char* reason) {
    if (value < r.upper) {
      r.upper = value;
      r.upper_reason = reason;
    }
  };
  switch (space.kind()) {
    case Space::Kind::Sphere:
      consider(1, "known-table");
      r.citations.push_back("cat(S^k) = 1");
      break;
    case Space::Kind::SymmetricProduct:
      if (space.surf().kind == SurfaceKind::Orientable && space.n() > space.surf().genus) {
        // (dim + cd pi_1)/2 with pi_1 = Z^{2g}, cd = 2g; not applicable to N_g (torsion in pi_1).
        consider(space.n() + space.surf().genus, "dim-plus-cd");
        r.citations.push_back("cat <= (dim + cd pi_1)/2, pi_1(SP^n(M_g)) = Z^2g for n >= 2");
      }
      break;
    case Space::Kind::Product: {
      int sum = 0;
      for (const auto& c : space.children()) sum += cat_bounds(c).upper;
      consider(sum, "cat-product");
      break;
    }
    case Space::Kind::Power:
      consider(space.k() * cat_bounds(space.children().front()).upper, "cat-product");
      break;
  }
  r.citations.push_back("cup-length <= cat <= dim");
  finish(r);
  return r;
}

template <class F>
BoundReport memo(const std::string& key, F compute) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const BoundReport>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto r = std::make_shared<const BoundReport>(compute());
  std::lock_guard lock(mutex);
  return *cache.try_emplace(key, std::move(r)).first->second;
}

std::optional<int> known_tc(const Space& space, int m, std::string& citation) {
  if (space.kind() == Space::Kind::Sphere) {
    citation = "TC_m(S^k) = m-1 (k odd), m (k even)";
    return space.k() % 2 ? m - 1 : m;
  }
  if (space.kind() == Space::Kind::SymmetricProduct && space.n() == 1 &&
      space.surf().kind == SurfaceKind::Orientable) {
    citation = "TC_m(M_0) = m, TC_m(M_1) = 2m-2, TC_m(M_g) = 2m for g >= 2";
    const int g = space.surf().genus;
    return g == 0 ? m : g == 1 ? 2 * m - 2 : 2 * m;
  }
  return std::nullopt;
}

// The factor spaces of a product or power together with a way to lift classes into the whole.
struct Blocks {
  std::vector<Space> spaces;
  TensorRing::Ptr ring;
};

std::optional<Blocks> blocks_of(const Space& space) {
  if (space.kind() == Space::Kind::Product) {
    Blocks b{space.children(), nullptr};
    std::vector<TensorRing::Ptr> rings;
    for (const auto& c : b.spaces) rings.push_back(ring_of(c));
    b.ring = TensorRing::product(rings);
    return b;
  }
  if (space.kind() == Space::Kind::Power && space.k() >= 2) {
    Blocks b{std::vector<Space>(space.k(), space.children().front()), nullptr};
    std::vector<TensorRing::Ptr> rings(space.k(), ring_of(space.children().front()));
    b.ring = TensorRing::product(rings);
    return b;
  }
  return std::nullopt;
}

// Lifts every factor certificate into (X_1 x ... x X_k)^m and multiplies them together.
std::optional<Certificate> lifted_certificate(const Blocks& b, const std::vector<Certificate>& factor_certs) {
  const int m = factor_certs.front().power->exponent();
  auto power = TensorRing::power(b.ring, m);
  std::vector<CertificateBlock> blocks;
  for (std::size_t f = 0; f < factor_certs.size(); ++f) {
    for (const auto& blk : factor_certs[f].blocks) {
      TensorElement x = lift_from_factor(*b.ring, f, blk.divisor.base_class);
      auto u = special_zero_divisor(*power, x, blk.divisor.weights, blk.divisor.label + "@" + std::to_string(f + 1));
      blocks.push_back({std::move(u), blk.exponent});
    }
  }
  auto cert = evaluate_certificate(power, std::move(blocks));
  if (!cert.nonzero()) return std::nullopt;
  return cert;
}

SzclResult cached_structured(const Space& space, int m) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const SzclResult>> cache;
  const std::string key = space.str() + "|" + std::to_string(m);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto r = std::make_shared<const SzclResult>(szcl_lower(space, m, SzclStrategy::Structured));
  std::lock_guard lock(mutex);
  return *cache.try_emplace(key, std::move(r)).first->second;
}

BoundReport compute_tc(const Space& space, int m) {
  BoundReport r;
  r.invariant = "TC_m";
  r.space = space.str();
  r.m = m;
  std::string citation;
  if (auto v = known_tc(space, m, citation)) {
    r.lower = r.upper = *v;
    r.lower_reason = r.upper_reason = "known-table";
    r.citations.push_back(citation);
    finish(r);
    return r;
  }
  const BoundReport cat = cat_bounds(space);
  r.upper = m * cat.upper;
  r.upper_reason = "m-times-cat";
  r.citations.push_back("(m-1) cup-length <= cat(X^{m-1}) <= TC_m <= cat(X^m) <= m cat");
  auto consider_upper = [&](int value, const char* reason) {
    if (value < r.upper) {
      r.upper = value;
      r.upper_reason = reason;
    }
  };
  if (space.kind() == Space::Kind::Product) {
    int sum = 0;
    for (const auto& c : space.children()) sum += tcm_bounds(c, m).upper;
    consider_upper(sum, "tc-product");
  } else if (space.kind() == Space::Kind::Power) {
    consider_upper(space.k() * tcm_bounds(space.children().front(), m).upper, "tc-product");
  }

  r.lower = (m - 1) * cat.lower;
  r.lower_reason = "cat-power";
  auto consider_cert = [&](const Certificate& cert, const char* reason) {
    if (cert.nonzero() && cert.length() > r.lower) {
      r.lower = cert.length();
      r.lower_reason = reason;
      r.certificate = cert;
    }
  };
  if (auto b = blocks_of(space)) {
    std::vector<Certificate> certs;
    for (const auto& s : b->spaces) {
      auto fr = cached_structured(s, m);
      if (!fr.certificate || !fr.certificate->nonzero()) break;
      certs.push_back(*fr.certificate);
    }
    if (certs.size() == b->spaces.size())
      if (auto c = lifted_certificate(*b, certs)) consider_cert(*c, "szcl-lifted");
  }
  if (r.lower < r.upper) {
    auto s = cached_structured(space, m);
    if (s.certificate) consider_cert(*s.certificate, "szcl-certificate");
  }
  if (r.lower < r.upper && space.kind() == Space::Kind::SymmetricProduct &&
      space.surf().kind == SurfaceKind::Orientable) {
    auto p = szcl_lower(space, m, SzclStrategy::Paper);
    if (p.certificate) consider_cert(*p.certificate, "szcl-paper-certificate");
  }
  if (r.lower < r.upper) {
    // The exact zero-divisor cup-length, when the tensor power is small enough.
    try {
      const auto z = zcl_bruteforce(ring_of(space), m);
      if (z.length > r.lower) {
        r.lower = z.length;
        r.lower_reason = "zcl-bruteforce";
        r.certificate.reset();
      }
    } catch (const SizeLimitExceeded&) {
    }
  }
  r.citations.push_back("szcl_m <= zcl_m <= TC_m");
  finish(r);
  return r;
}

}  // namespace

BoundReport cat_bounds(const Space& space) {
  return memo("cat|" + space.str(), [&] { return compute_cat(space); });
}

BoundReport tcm_bounds(const Space& space, int m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  return memo("tc|" + space.str() + "|" + std::to_string(m), [&] { return compute_tc(space, m); });
}

AdditivityReport product_additivity_check(const std::vector<Space>& spaces, int m) {
  if (spaces.size() < 2) throw std::invalid_argument("need at least two factors");
  AdditivityReport rep;
  rep.m = m;
  const Space whole = Space::product(spaces);  // throws on mixed fields
  std::vector<TensorRing::Ptr> rings;
  for (const auto& s : spaces) {
    rep.factors.push_back(s.str());
    rings.push_back(ring_of(s));
    rep.cup_sum += cached_cup_length(s).length;
  }
  Blocks b{spaces, TensorRing::product(rings)};
  rep.cup_product = cup_length(*b.ring).length;
  rep.cup_additive = rep.cup_product == rep.cup_sum;

  rep.cat_product = cat_bounds(whole);
  bool factors_exact = true;
  int cat_sum = 0;
  for (const auto& s : spaces) {
    rep.cat_factors.push_back(cat_bounds(s));
    factors_exact = factors_exact && rep.cat_factors.back().exact;
    cat_sum += rep.cat_factors.back().lower;
  }
  if (!factors_exact || !rep.cat_product.exact) {
    rep.ls_note = "cannot certify: inexact cat";
  } else {
    rep.ls_logarithmic = rep.cat_product.lower == cat_sum;
    rep.ls_note = rep.ls_logarithmic ? "cat is additive" : "cat is not additive";
  }

  rep.tc_product = tcm_bounds(whole, m);
  factors_exact = true;
  int tc_sum = 0;
  std::vector<Certificate> certs;
  for (const auto& s : spaces) {
    rep.tc_factors.push_back(tcm_bounds(s, m));
    factors_exact = factors_exact && rep.tc_factors.back().exact;
    tc_sum += rep.tc_factors.back().lower;
    auto sz = cached_structured(s, m);
    rep.szcl_sum += sz.length;
    if (sz.certificate && sz.certificate->nonzero()) certs.push_back(*sz.certificate);
  }
  if (!factors_exact || !rep.tc_product.exact) {
    rep.tc_note = "cannot certify: inexact TC_m";
  } else {
    rep.tc_logarithmic = rep.tc_product.lower == tc_sum;
    rep.tc_note = rep.tc_logarithmic ? "TC_m is additive" : "TC_m is not additive";
  }
  if (certs.size() == spaces.size()) {
    if (auto c = lifted_certificate(b, certs)) rep.szcl_lifted = c->length();
  }
  rep.szcl_additive = rep.szcl_lifted == rep.szcl_sum && rep.szcl_sum > 0;
  return rep;
}

GaneaReport ganea_check(const Space& space, int k, std::optional<int> m) {
  GaneaReport rep;
  rep.space = space.str();
  rep.k = k;
  rep.m = m;
  const Space sphere = Space::sphere(k);
  const Space prod = Space::product({space, sphere});
  const auto cb = cat_bounds(space);
  const auto cp = cat_bounds(prod);
  rep.cat_base = cb.lower;
  rep.cat_product = cp.lower;
  if (!cb.exact || !cp.exact) {
    rep.cat_note = "cannot certify: cat(" + (cb.exact ? prod.str() : space.str()) + ") is not exact";
  } else {
    rep.cat_ok = cp.lower == cb.lower + 1;
    rep.cat_note = rep.cat_ok ? "cat(X x S^k) = cat(X) + 1" : "cat(X x S^k) != cat(X) + 1";
  }
  if (m) {
    const auto tb = tcm_bounds(space, *m);
    const auto ts = tcm_bounds(sphere, *m);
    const auto tp = tcm_bounds(prod, *m);
    rep.tc_base = tb.lower;
    rep.tc_sphere = ts.lower;
    rep.tc_product = tp.lower;
    if (!tb.exact || !tp.exact) {
      rep.tc_note = "cannot certify: TC_" + std::to_string(*m) + "(" + (tb.exact ? prod.str() : space.str()) +
                    ") is only known to lie in [" + std::to_string(tb.exact ? tp.lower : tb.lower) + ", " +
                    std::to_string(tb.exact ? tp.upper : tb.upper) + "]";
    } else {
      rep.tc_ok = tp.lower == tb.lower + ts.lower;
      rep.tc_note = rep.tc_ok ? "TC_m is additive with S^k" : "TC_m is not additive with S^k";
    }
  }
  return rep;
}

GenfunReport genfun(const Space& space, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  GenfunReport rep;
  rep.space = space.str();
  rep.horizon = horizon;
  const auto cat = cat_bounds(space);
  rep.cat = cat.lower;
  rep.exact = cat.exact;
  if (!cat.exact) rep.note = "cat is not exact";
  std::vector<long long> f(horizon + 1, 0);
  for (int m = 1; m <= horizon; ++m) {
    const auto tc = tcm_bounds(space, m + 1);
    if (!tc.exact) {
      rep.exact = false;
      if (rep.note.empty())
        rep.note = "TC_" + std::to_string(m + 1) + " only known to lie in [" + std::to_string(tc.lower) + ", " +
                   std::to_string(tc.upper) + "]";
    }
    rep.coefficients.push_back(tc.lower);
    f[m] = tc.lower;
  }
  // (1-t)^2 f(t) truncated at t^horizon.
  rep.numerator.assign(horizon + 1, 0);
  for (int k = 0; k <= horizon; ++k) {
    rep.numerator[k] = f[k] - (k >= 1 ? 2 * f[k - 1] : 0) + (k >= 2 ? f[k - 2] : 0);
    rep.numerator_at_one += rep.numerator[k];
  }
  bool ok = rep.exact;
  for (int m = 1; m <= horizon; ++m) ok = ok && f[m] == static_cast<long long>(m + 1) * rep.cat;
  for (int k = 0; k <= horizon; ++k) {
    const long long expected = k == 1 ? 2LL * rep.cat : k == 2 ? -static_cast<long long>(rep.cat) : 0;
    ok = ok && rep.numerator[k] == expected;
  }
  if (horizon >= 2) ok = ok && rep.numerator_at_one == rep.cat;
  rep.matches = ok;
  return rep;
}

bool essential(const Space& space) {
  if (space.kind() != Space::Kind::SymmetricProduct)
    throw std::invalid_argument("essential() expects a symmetric product of a surface");
  const auto cat = cat_bounds(space);
  if (!cat.exact) throw std::runtime_error("cat(" + space.str() + ") is not exact");
  return cat.lower == space.dimension();
}

DtcReport dtc_lower(const Space& space, int m) {
  if (space.field() != Field::Q) throw std::invalid_argument("dtc_lower needs rational coefficients");
  DtcReport rep;
  rep.lower = cached_structured(space, m).length;
  if (space.kind() == Space::Kind::SymmetricProduct && space.surf().kind == SurfaceKind::Orientable)
    rep.lower = std::max(rep.lower, szcl_lower(space, m, SzclStrategy::Paper).length);
  const auto tc = tcm_bounds(space, m);
  rep.equals_tc = tc.exact && tc.lower == rep.lower;
  return rep;
}

}  // namespace symtc
