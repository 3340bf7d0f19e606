#include "symtc/tensor_ring.hpp"

#include <atomic>
#include <functional>
#include <stdexcept>

namespace symtc {

namespace {

std::uint64_t next_ring_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter++;
}

}  // namespace

void TensorElement::add_term(const PureTensor& t, const Coefficient& c) {
  if (c.field() != field_) throw std::invalid_argument("coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::check_same_ring(const TensorElement& other) const {
  if (ring_id_ != other.ring_id_) throw std::invalid_argument("tensor elements belong to different rings");
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  check_same_ring(rhs);
  for (const auto& [t, c] : rhs.terms_) add_term(t, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  check_same_ring(rhs);
  for (const auto& [t, c] : rhs.terms_) add_term(t, -c);
  return *this;
}

TensorElement scale(const Coefficient& k, const TensorElement& x) {
  TensorElement r(x.ring_id(), x.field());
  if (k.is_zero()) return r;
  for (const auto& [t, c] : x.terms()) r.add_term(t, c * k);
  return r;
}

TensorRing::Ptr TensorRing::of(std::shared_ptr<const PresentedRing> ring) {
  if (!ring) throw std::invalid_argument("null ring");
  if (!ring->top_degree()) throw std::invalid_argument("tensor slots need a top degree");
  auto* t = new TensorRing();
  t->id_ = next_ring_id();
  t->field_ = ring->field();
  t->name_ = ring->name();
  t->top_degree_ = *ring->top_degree();
  t->slots_.push_back(std::move(ring));
  return Ptr(t);
}

TensorRing::Ptr TensorRing::product(const std::vector<Ptr>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty tensor product");
  if (factors.size() == 1) return factors.front();
  auto* t = new TensorRing();
  t->id_ = next_ring_id();
  t->field_ = factors.front()->field();
  for (const auto& f : factors) {
    if (f->field() != t->field_) throw std::invalid_argument("tensor product of rings over different fields");
    if (!t->name_.empty()) t->name_ += " x ";
    t->name_ += f->name();
    t->factor_offsets_.push_back(t->slots_.size());
    t->slots_.insert(t->slots_.end(), f->slots_.begin(), f->slots_.end());
    t->top_degree_ += f->top_degree_;
  }
  t->factors_ = factors;
  return Ptr(t);
}

TensorRing::Ptr TensorRing::power(Ptr base, int m) {
  if (!base) throw std::invalid_argument("null base ring");
  if (m < 1) throw std::invalid_argument("tensor power exponent must be positive");
  auto* t = new TensorRing();
  t->id_ = next_ring_id();
  t->field_ = base->field();
  t->name_ = "(" + base->name() + ")^" + std::to_string(m);
  for (int j = 0; j < m; ++j) t->slots_.insert(t->slots_.end(), base->slots_.begin(), base->slots_.end());
  t->top_degree_ = base->top_degree_ * m;
  t->base_ = std::move(base);
  t->exponent_ = m;
  return Ptr(t);
}

void TensorRing::check(const TensorElement& x) const {
  if (x.ring_id() != id_) throw std::invalid_argument("element does not belong to tensor ring " + name_);
}

TensorElement TensorRing::one() const { return pure(unit_tensor(), Coefficient::one(field_)); }

TensorElement TensorRing::pure(const PureTensor& t, const Coefficient& c) const {
  if (t.size() != slots_.size()) throw std::invalid_argument("pure tensor has the wrong number of slots");
  TensorElement e = zero();
  e.add_term(t, c);
  return e;
}

TensorElement TensorRing::tensor_of(const std::vector<Element>& xs) const {
  if (xs.size() != slots_.size()) throw std::invalid_argument("need one element per slot");
  TensorElement acc = one();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    TensorElement next = zero();
    // Coordinates per homogeneous component of the slot element.
    std::map<int, Element> by_degree;
    for (const auto& [m, c] : xs[i].terms()) {
      const int d = slots_[i]->gens()->degree(m);
      by_degree.try_emplace(d, slots_[i]->zero()).first->second.add_term(m, c);
    }
    for (const auto& [d, part] : by_degree) {
      for (const auto& [idx, c] : slots_[i]->coordinates(part, d)) {
        for (const auto& [t, k] : acc.terms()) {
          PureTensor u = t;
          u[i] = make_basis_id(d, idx);
          next.add_term(u, k * c);
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

TensorElement TensorRing::from_slot(std::size_t i, const Element& x) const {
  if (i >= slots_.size()) throw std::out_of_range("bad slot index");
  std::vector<Element> xs;
  for (std::size_t j = 0; j < slots_.size(); ++j) xs.push_back(j == i ? x : slots_[j]->one());
  return tensor_of(xs);
}

std::vector<TensorRing::NamedGenerator> TensorRing::generators() const {
  std::vector<NamedGenerator> out;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    for (const auto& g : slots_[i]->gens()->generators()) {
      std::string name = g.name;
      if (slots_.size() > 1) name += "@" + std::to_string(i + 1);
      out.push_back({name, g.degree, from_slot(i, slots_[i]->generator(g.id))});
    }
  }
  return out;
}

int TensorRing::degree(const PureTensor& t) const {
  int d = 0;
  for (auto id : t) d += basis_degree(id);
  return d;
}

int TensorRing::degree(const TensorElement& x) const {
  int d = -1;
  for (const auto& [t, c] : x.terms()) {
    const int e = degree(t);
    if (d >= 0 && d != e) return -1;
    d = e;
  }
  return d;
}

TensorElement TensorRing::multiply(const TensorElement& x, const TensorElement& y) const {
  check(x);
  check(y);
  const std::size_t k = slots_.size();
  TensorElement out = zero();
  std::vector<const SparseVector<std::size_t>*> slot_products(k);
  for (const auto& [tx, cx] : x.terms()) {
    for (const auto& [ty, cy] : y.terms()) {
      bool vanishes = false;
      int parity = 0;
      int y_prefix = 0;
      for (std::size_t i = 0; i < k && !vanishes; ++i) {
        parity ^= (basis_degree(tx[i]) & y_prefix) & 1;
        y_prefix ^= basis_degree(ty[i]) & 1;
        slot_products[i] = &slots_[i]->basis_product(tx[i], ty[i]);
        vanishes = slot_products[i]->empty();
      }
      if (vanishes) continue;
      Coefficient base = cx * cy;
      base.flip_sign_if(parity != 0);
      PureTensor t(k);
      std::function<void(std::size_t, const Coefficient&)> expand = [&](std::size_t i, const Coefficient& c) {
        if (i == k) {
          out.add_term(t, c);
          return;
        }
        const int d = basis_degree(tx[i]) + basis_degree(ty[i]);
        for (const auto& [idx, s] : *slot_products[i]) {
          t[i] = make_basis_id(d, idx);
          expand(i + 1, c * s);
        }
      };
      expand(0, base);
    }
  }
  return out;
}

std::vector<std::size_t> TensorRing::slot_dims(std::size_t i) const {
  return slots_[i]->poincare_polynomial(*slots_[i]->top_degree());
}

std::vector<std::size_t> TensorRing::poincare_polynomial() const {
  std::vector<std::size_t> acc{1};
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    const auto b = slot_dims(i);
    std::vector<std::size_t> next(acc.size() + b.size() - 1, 0);
    for (std::size_t p = 0; p < acc.size(); ++p)
      for (std::size_t q = 0; q < b.size(); ++q) next[p + q] += acc[p] * b[q];
    acc = std::move(next);
  }
  return acc;
}

std::size_t TensorRing::total_dim() const {
  std::size_t total = 0;
  for (auto b : poincare_polynomial()) total += b;
  return total;
}

std::vector<PureTensor> TensorRing::basis(int d) const {
  std::vector<PureTensor> out;
  if (d < 0 || d > top_degree_) return out;
  std::vector<std::vector<std::size_t>> dims;
  std::vector<int> suffix_top(slots_.size() + 1, 0);
  for (std::size_t i = 0; i < slots_.size(); ++i) dims.push_back(slot_dims(i));
  for (std::size_t i = slots_.size(); i-- > 0;) suffix_top[i] = suffix_top[i + 1] + *slots_[i]->top_degree();
  PureTensor t(slots_.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == slots_.size()) {
      if (remaining == 0) out.push_back(t);
      return;
    }
    for (int e = 0; e <= remaining && e < static_cast<int>(dims[i].size()); ++e) {
      if (remaining - e > suffix_top[i + 1]) continue;
      for (std::size_t idx = 0; idx < dims[i][e]; ++idx) {
        t[i] = make_basis_id(e, idx);
        rec(i + 1, remaining - e);
      }
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::string TensorRing::str(const PureTensor& t) const {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += " ⊗ ";
    out += slots_[i]->gens()->str(slots_[i]->basis_monomial(t[i]));
  }
  return out;
}

std::string TensorRing::str(const TensorElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : x.terms()) {
    if (!first) out += " + ";
    first = false;
    const std::string coeff = c.str();
    out += (coeff == "1" ? "" : (coeff.front() == '-' ? "(" + coeff + ")" : coeff) + "*") + "[" + str(t) + "]";
  }
  return out;
}

TensorElement proj_pullback(const TensorRing& power, int i, const TensorElement& x) {
  if (!power.base()) throw std::invalid_argument("proj_pullback needs a tensor power");
  const auto& base = *power.base();
  if (i < 1 || i > power.exponent()) throw std::out_of_range("bad projection index");
  if (x.ring_id() != base.id()) throw std::invalid_argument("element does not belong to the base ring");
  const std::size_t k = base.num_slots();
  TensorElement out = power.zero();
  for (const auto& [t, c] : x.terms()) {
    PureTensor u = power.unit_tensor();
    std::copy(t.begin(), t.end(), u.begin() + static_cast<std::ptrdiff_t>((i - 1) * k));
    out.add_term(u, c);
  }
  return out;
}

TensorElement diagonal_pullback(const TensorRing& power, const TensorElement& x) {
  if (!power.base()) throw std::invalid_argument("diagonal_pullback needs a tensor power");
  if (x.ring_id() != power.id()) throw std::invalid_argument("element does not belong to the tensor power");
  const auto& base = *power.base();
  const std::size_t k = base.num_slots();
  TensorElement out = base.zero();
  for (const auto& [t, c] : x.terms()) {
    TensorElement acc = base.pure(PureTensor(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k)), c);
    for (int j = 1; j < power.exponent() && !acc.is_zero(); ++j) {
      auto first = t.begin() + static_cast<std::ptrdiff_t>(j * k);
      acc = base.multiply(acc, base.pure(PureTensor(first, first + static_cast<std::ptrdiff_t>(k)),
                                         Coefficient::one(base.field())));
    }
    out += acc;
  }
  return out;
}

TensorElement lift_from_factor(const TensorRing& product, std::size_t f, const TensorElement& x) {
  if (f >= product.factors().size()) throw std::out_of_range("bad factor index");
  const auto& factor = *product.factors()[f];
  if (x.ring_id() != factor.id()) throw std::invalid_argument("element does not belong to the factor ring");
  const std::size_t offset = product.factor_offsets()[f];
  TensorElement out = product.zero();
  for (const auto& [t, c] : x.terms()) {
    PureTensor u = product.unit_tensor();
    std::copy(t.begin(), t.end(), u.begin() + static_cast<std::ptrdiff_t>(offset));
    out.add_term(u, c);
  }
  return out;
}

}  // namespace symtc
