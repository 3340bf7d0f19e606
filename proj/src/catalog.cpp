#include "symtc/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

namespace symtc {

namespace {

int a_id(int i) { return 2 * (i - 1); }
int b_id(int i) { return 2 * (i - 1) + 1; }

// Every way of placing indices 1..g into at most one of I, J, K.
void for_each_disjoint_triple(int g, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> state(g, 0);  // 0 none, 1 in I, 2 in J, 3 in K
  while (true) {
    fn(state);
    int i = 0;
    while (i < g && state[i] == 3) state[i++] = 0;
    if (i == g) return;
    ++state[i];
  }
}

std::vector<Element> macdonald_relations(const PresentedRing& ring, int n, int g, bool mixed, int degree) {
  std::vector<Element> out;
  const int c = 2 * g;
  auto emit = [&](const std::vector<int>& state, int s) {
    Element rel = ring.one();
    for (int i = 1; i <= g; ++i)
      if (state[i - 1] == 1) rel = ring.multiply(rel, ring.generator(a_id(i)));
    for (int i = 1; i <= g; ++i)
      if (state[i - 1] == 2) rel = ring.multiply(rel, ring.generator(b_id(i)));
    for (int i = 1; i <= g; ++i) {
      if (state[i - 1] != 3) continue;
      Element factor = ring.generator(c) - ring.multiply(ring.generator(a_id(i)), ring.generator(b_id(i)));
      rel = ring.multiply(rel, factor);
    }
    if (s > 0) rel = ring.multiply(rel, ring.monomial(ring.gens()->single(c, s)));
    if (!rel.is_zero()) out.push_back(std::move(rel));
  };
  // Minimal generators: with t = |I|+|J|+2|K| <= n+1 take s = n+1-t. Beyond that only the
  // pure-K collections with 2|K| = n+2 are not multiples of a smaller relation.
  for_each_disjoint_triple(g, [&](const std::vector<int>& state) {
    int t = 0;
    bool has_k = false, has_ij = false;
    for (int v : state) {
      if (v == 1 || v == 2) t += 1, has_ij = true;
      if (v == 3) t += 2, has_k = true;
    }
    if (has_k && !mixed) return;
    if (t <= n + 1) {
      const int s = n + 1 - t;
      if (t + 2 * s == degree) emit(state, s);
    } else if (t == n + 2 && !has_ij && t == degree) {
      emit(state, 0);
    }
  });
  return out;
}

void check_top(int n) {
  if (2 * n > 0xFF) throw std::invalid_argument("symmetric product too large");
}

}  // namespace

std::shared_ptr<const PresentedRing> macdonald_ring(int n, int g, MacdonaldOptions options) {
  if (n < 1) throw std::invalid_argument("macdonald_ring: n must be at least 1");
  if (g < 0) throw std::invalid_argument("macdonald_ring: g must be non-negative");
  if (2 * g + 1 > 64) throw std::invalid_argument("macdonald_ring: genus too large");
  check_top(n);
  std::vector<Generator> gens;
  for (int i = 1; i <= g; ++i) {
    gens.push_back({a_id(i), "a" + std::to_string(i), 1});
    gens.push_back({b_id(i), "b" + std::to_string(i), 1});
  }
  gens.push_back({2 * g, "c", 2});
  const bool mixed = options.include_mixed;
  std::string name = n == 1 ? "M(" + std::to_string(g) + ")" : "SP(" + std::to_string(n) + ", M(" + std::to_string(g) + "))";
  if (!mixed) name += " [pure relations]";
  PresentedRing::Options opts;
  opts.top_degree = 2 * n;
  return std::make_shared<const PresentedRing>(
      name, Field::Q, std::move(gens),
      [n, g, mixed](const PresentedRing& r, int d) { return macdonald_relations(r, n, g, mixed, d); }, opts);
}

std::shared_ptr<const PresentedRing> ks_ring(int n, int g) {
  if (n < 1 || g < 1) throw std::invalid_argument("ks_ring: n and g must be at least 1");
  if (g + 1 > 64) throw std::invalid_argument("ks_ring: genus too large");
  check_top(n);
  std::vector<Generator> gens;
  for (int i = 1; i <= g; ++i) gens.push_back({i - 1, "e" + std::to_string(i), 1});
  gens.push_back({g, "d", 2});
  auto gs = GeneratorSet(gens);
  PresentedRing::Options opts;
  opts.top_degree = 2 * n;
  for (int i = 0; i < g; ++i) opts.odd_squares.emplace(i, gs.single(g));
  auto schema = [n, g](const PresentedRing& r, int degree) {
    // e_I d^(n+1-|I|) for |I| <= n+1; degree 2n+2-|I|.
    std::vector<Element> out;
    const int size = 2 * n + 2 - degree;
    if (size < 0 || size > g || size > n + 1) return out;
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      Monomial m = r.gens()->unit();
      for (int i : pick) m.exterior |= std::uint64_t{1} << i;
      m.powers[g] = static_cast<std::uint32_t>(n + 1 - size);
      out.push_back(r.monomial(m));
      int j = size - 1;
      while (j >= 0 && pick[j] == g - size + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int k = j + 1; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
    return out;
  };
  const std::string name = n == 1 ? "N(" + std::to_string(g) + ")" : "SP(" + std::to_string(n) + ", N(" + std::to_string(g) + "))";
  return std::make_shared<const PresentedRing>(name, Field::Z2, std::move(gens), schema, opts);
}

std::shared_ptr<const PresentedRing> sphere_ring(int k, Field field) {
  if (k < 1) throw std::invalid_argument("sphere_ring: k must be at least 1");
  if (k > 0xFF) throw std::invalid_argument("sphere_ring: dimension too large");
  PresentedRing::Options opts;
  opts.top_degree = k;
  auto schema = [k](const PresentedRing& r, int degree) {
    std::vector<Element> out;
    if (k % 2 == 0 && degree == 2 * k) out.push_back(r.monomial(r.gens()->single(0, 2)));
    return out;
  };
  return std::make_shared<const PresentedRing>("S(" + std::to_string(k) + ")", field,
                                               std::vector<Generator>{{0, "x", k}}, schema, opts);
}

MacdonaldDiagnostic macdonald_diagnostic(int n, int g) {
  auto full = macdonald_ring(n, g);
  auto pure = macdonald_ring(n, g, {.include_mixed = false});
  return {full->poincare_polynomial(2 * n), pure->poincare_polynomial(2 * n)};
}

// ---------------------------------------------------------------------------------------------

Space Space::sphere(int k) {
  if (k < 1) throw std::invalid_argument("sphere dimension must be at least 1");
  Space s;
  s.kind_ = Kind::Sphere;
  s.k_ = k;
  return s;
}

Space Space::symmetric_product(int n, Surface surf) {
  if (n < 1) throw std::invalid_argument("symmetric product exponent must be at least 1");
  if (surf.kind == SurfaceKind::Orientable && surf.genus < 0)
    throw std::invalid_argument("orientable genus must be non-negative");
  if (surf.kind == SurfaceKind::NonOrientable && surf.genus < 1)
    throw std::invalid_argument("non-orientable genus must be at least 1");
  Space s;
  s.kind_ = Kind::SymmetricProduct;
  s.n_ = n;
  s.surface_ = surf;
  s.field_ = surf.kind == SurfaceKind::NonOrientable ? Field::Z2 : Field::Q;
  s.field_pinned_ = true;
  return s;
}

Space Space::product(std::vector<Space> factors) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  if (factors.size() == 1) return std::move(factors.front());
  Space s;
  s.kind_ = Kind::Product;
  // Products are associative; keep them flat so the printed form re-parses to the same tree.
  for (auto& f : factors) {
    if (f.kind_ == Kind::Product)
      s.children_.insert(s.children_.end(), f.children_.begin(), f.children_.end());
    else
      s.children_.push_back(std::move(f));
  }
  s.settle_field();
  return s;
}

Space Space::power(Space base, int k) {
  if (k < 1) throw std::invalid_argument("power exponent must be at least 1");
  Space s;
  s.kind_ = Kind::Power;
  s.k_ = k;
  s.children_.push_back(std::move(base));
  s.settle_field();
  return s;
}

void Space::settle_field() {
  bool pinned = false;
  Field f = Field::Q;
  for (const auto& c : children_) {
    if (!c.field_pinned_) continue;
    if (pinned && c.field_ != f)
      throw std::invalid_argument("space mixes orientable and non-orientable surfaces (Q and Z2 coefficients)");
    pinned = true;
    f = c.field_;
  }
  field_pinned_ = pinned;
  field_ = f;
}

int Space::dimension() const {
  switch (kind_) {
    case Kind::Sphere: return k_;
    case Kind::SymmetricProduct: return 2 * n_;
    case Kind::Product: {
      int d = 0;
      for (const auto& c : children_) d += c.dimension();
      return d;
    }
    case Kind::Power: return k_ * children_.front().dimension();
  }
  return 0;
}

std::string Space::str() const {
  switch (kind_) {
    case Kind::Sphere: return "S(" + std::to_string(k_) + ")";
    case Kind::SymmetricProduct: {
      const std::string surf = std::string(surface_.kind == SurfaceKind::Orientable ? "M(" : "N(") +
                               std::to_string(surface_.genus) + ")";
      return n_ == 1 ? surf : "SP(" + std::to_string(n_) + ", " + surf + ")";
    }
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += " x ";
        out += children_[i].str();
      }
      return out;
    }
    case Kind::Power: {
      const auto& b = children_.front();
      const bool wrap = b.kind_ == Kind::Product || b.kind_ == Kind::Power;
      return (wrap ? "(" + b.str() + ")" : b.str()) + "^" + std::to_string(k_);
    }
  }
  return {};
}

bool Space::operator==(const Space& other) const {
  return kind_ == other.kind_ && k_ == other.k_ && n_ == other.n_ && surface_ == other.surface_ &&
         children_ == other.children_;
}

std::shared_ptr<const PresentedRing> leaf_ring(const Space& leaf, Field field) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const PresentedRing>> cache;
  if (!leaf.is_leaf()) throw std::invalid_argument("not a leaf space: " + leaf.str());
  const std::string key = leaf.str() + "|" + to_string(field);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::shared_ptr<const PresentedRing> ring;
  if (leaf.kind() == Space::Kind::Sphere) {
    ring = sphere_ring(leaf.k(), field);
  } else if (leaf.surf().kind == SurfaceKind::Orientable) {
    if (field != Field::Q) throw std::invalid_argument("orientable leaves are computed over Q");
    ring = macdonald_ring(leaf.n(), leaf.surf().genus);
  } else {
    ring = ks_ring(leaf.n(), leaf.surf().genus);
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(ring)).first->second;
}

namespace {

TensorRing::Ptr ring_of_in(const Space& space, Field field) {
  switch (space.kind()) {
    case Space::Kind::Sphere:
    case Space::Kind::SymmetricProduct: {
      static std::mutex mutex;
      static std::map<std::string, TensorRing::Ptr> cache;
      const std::string key = space.str() + "|" + to_string(field);
      std::lock_guard lock(mutex);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, TensorRing::of(leaf_ring(space, field))).first;
      return it->second;
    }
    case Space::Kind::Product: {
      std::vector<TensorRing::Ptr> factors;
      for (const auto& c : space.children()) factors.push_back(ring_of_in(c, field));
      return TensorRing::product(factors);
    }
    case Space::Kind::Power: return TensorRing::power(ring_of_in(space.children().front(), field), space.k());
  }
  throw std::logic_error("unknown space kind");
}

}  // namespace

TensorRing::Ptr ring_of(const Space& space) { return ring_of_in(space, space.field()); }

TensorRing::Ptr tensor_product(const std::vector<TensorRing::Ptr>& factors) { return TensorRing::product(factors); }

TensorRing::Ptr tensor_power(TensorRing::Ptr ring, int m) { return TensorRing::power(std::move(ring), m); }

std::string dump_ring(const TensorRing& ring) {
  nlohmann::json j;
  j["name"] = ring.name();
  j["field"] = to_string(ring.field());
  j["top_degree"] = ring.top_degree();
  j["generators"] = nlohmann::json::array();
  for (const auto& g : ring.generators()) j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
  j["poincare"] = ring.poincare_polynomial();
  nlohmann::json degrees = nlohmann::json::array();
  for (int d = 0; d <= ring.top_degree(); ++d) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& t : ring.basis(d)) basis.push_back(ring.str(t));
    degrees.push_back({{"degree", d}, {"basis", basis}});
  }
  j["degrees"] = degrees;
  return j.dump(2);
}

}  // namespace symtc
