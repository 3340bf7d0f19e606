#include "symtc/presented_ring.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace symtc {

namespace {

struct RowLess {
  bool operator()(const SparseVector<std::size_t>& a, const SparseVector<std::size_t>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      return cmp(x.second.value(), y.second.value()) < 0;
    });
  }
};

}  // namespace

PresentedRing::PresentedRing(std::string name, Field field, std::vector<Generator> gens,
                             RelationSchema schema, Options options)
    : name_(std::move(name)),
      field_(field),
      gens_(std::make_shared<const GeneratorSet>(std::move(gens))),
      schema_(std::move(schema)),
      top_degree_(options.top_degree),
      odd_squares_(std::move(options.odd_squares)) {
  if (!odd_squares_.empty() && field_ != Field::Z2)
    throw std::invalid_argument("odd generators square to zero in characteristic zero");
  for (const auto& [id, sq] : odd_squares_) {
    if (id < 0 || static_cast<std::size_t>(id) >= gens_->size() || !(*gens_)[id].odd())
      throw std::invalid_argument("square rule given for a non-odd generator");
    gens_->check(sq);
    if (sq.exterior != 0) throw std::invalid_argument("square rules must be even-only monomials");
    if (gens_->degree(sq) != 2 * (*gens_)[id].degree) throw std::invalid_argument("square rule changes degree");
  }
}

Element PresentedRing::generator(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= gens_->size()) throw std::out_of_range("no such generator");
  return monomial(gens_->single(id));
}

Element PresentedRing::generator(const std::string& name) const {
  for (const auto& g : gens_->generators())
    if (g.name == name) return generator(g.id);
  throw std::out_of_range("no generator named " + name);
}

Element PresentedRing::monomial(const Monomial& m) const {
  return Element::monomial(gens_, field_, m, Coefficient::one(field_));
}

void PresentedRing::multiply_terms(const Monomial& x, const Monomial& y, const Coefficient& c,
                                   Element& out) const {
  const std::uint64_t overlap = x.exterior & y.exterior;
  if (overlap == 0) {
    auto p = mul_monomial(*gens_, x, y);
    Coefficient k = c;
    k.flip_sign_if(p.sign < 0);
    out.add_term(p.monomial, k);
    return;
  }
  // Repeated odd generators: only possible over Z2, where signs are irrelevant.
  Monomial m;
  m.exterior = x.exterior ^ y.exterior;
  m.powers.resize(x.powers.size());
  for (std::size_t i = 0; i < m.powers.size(); ++i) m.powers[i] = x.powers[i] + y.powers[i];
  for (std::uint64_t bits = overlap; bits != 0; bits &= bits - 1) {
    auto sq = odd_squares_.find(std::countr_zero(bits));
    if (sq == odd_squares_.end()) return;
    for (std::size_t i = 0; i < m.powers.size(); ++i) m.powers[i] += sq->second.powers[i];
  }
  out.add_term(m, c);
}

Element PresentedRing::multiply(const Element& x, const Element& y) const {
  if (x.gens() != gens_ || y.gens() != gens_ || x.field() != field_ || y.field() != field_)
    throw std::invalid_argument("elements do not belong to ring " + name_);
  Element out = zero();
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) multiply_terms(mx, my, cx * cy, out);
  return out;
}

const std::vector<Element>& PresentedRing::relations(int degree) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = relations_.find(degree); it != relations_.end()) return *it->second;
  }
  auto rels = std::make_shared<const std::vector<Element>>(schema_ ? schema_(*this, degree) : std::vector<Element>{});
  for (const auto& r : *rels) {
    if (r.gens() != gens_) throw std::logic_error("relation schema produced a foreign element");
    auto d = r.homogeneous_degree();
    if (!r.is_zero() && d != degree) throw std::logic_error("relation schema produced an element of the wrong degree");
  }
  std::lock_guard lock(mutex_);
  return *relations_.try_emplace(degree, std::move(rels)).first->second;
}

std::shared_ptr<const DegreeBasis> PresentedRing::compute_degree(int d) const {
  auto db = std::make_shared<DegreeBasis>();
  db->degree = d;
  if (d < 0 || (top_degree_ && d > *top_degree_)) return db;

  db->spanning = gens_->monomials_of_degree(d);
  for (std::size_t i = 0; i < db->spanning.size(); ++i) db->spanning_index.emplace(db->spanning[i], i);

  // Degree-d slice of the ideal: every relation generator times every free monomial.
  std::set<SparseVector<std::size_t>, RowLess> rows;
  for (int e = 1; e <= d; ++e) {
    const auto& rels = relations(e);
    if (rels.empty()) continue;
    const auto cofactors = gens_->monomials_of_degree(d - e);
    for (const auto& rel : rels) {
      for (const auto& mu : cofactors) {
        Element prod = zero();
        for (const auto& [m, c] : rel.terms()) multiply_terms(m, mu, c, prod);
        if (prod.is_zero()) continue;
        SparseVector<std::size_t> row;
        for (const auto& [m, c] : prod.terms()) row.emplace(db->spanning_index.at(m), c);
        // Scale so the leading coefficient is one; duplicates up to scalars collapse.
        const Coefficient inv = Coefficient::one(field_) / row.begin()->second;
        for (auto& [k, c] : row) c *= inv;
        rows.insert(std::move(row));
      }
    }
  }
  std::vector<const SparseVector<std::size_t>*> order;
  order.reserve(rows.size());
  for (const auto& r : rows) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->size() < b->size(); });

  Echelon<std::size_t> ech(field_);
  for (const auto* r : order) {
    if (ech.rank() == db->spanning.size()) break;
    ech.insert(*r);
  }
  db->ideal_rank = ech.rank();

  std::vector<std::ptrdiff_t> position(db->spanning.size(), -1);
  for (std::size_t i = 0; i < db->spanning.size(); ++i) {
    if (!ech.is_pivot(i)) {
      position[i] = static_cast<std::ptrdiff_t>(db->basis.size());
      db->basis.push_back(i);
    }
  }
  db->projection.resize(db->spanning.size());
  for (std::size_t i = 0; i < db->spanning.size(); ++i) {
    SparseVector<std::size_t> unit;
    unit.emplace(i, Coefficient::one(field_));
    for (auto& [k, c] : ech.reduce_full(std::move(unit))) db->projection[i].emplace(position[k], c);
  }
  return db;
}

const DegreeBasis& PresentedRing::degree_basis(int d) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = degrees_.find(d); it != degrees_.end()) return *it->second;
  }
  auto db = compute_degree(d);
  std::lock_guard lock(mutex_);
  return *degrees_.try_emplace(d, std::move(db)).first->second;
}

std::vector<std::size_t> PresentedRing::poincare_polynomial(int up_to) const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= up_to; ++d) out.push_back(dim(d));
  return out;
}

Element PresentedRing::normal_form(const Element& x) const {
  if (x.gens() != gens_ || x.field() != field_) throw std::invalid_argument("element does not belong to ring " + name_);
  Element out = zero();
  for (const auto& [m, c] : x.terms()) {
    const int d = gens_->degree(m);
    if (top_degree_ && d > *top_degree_) continue;
    const auto& db = degree_basis(d);
    for (const auto& [pos, k] : db.projection[db.spanning_index.at(m)]) out.add_term(db.basis_monomial(pos), c * k);
  }
  return out;
}

const Monomial& PresentedRing::basis_monomial(BasisId id) const {
  return degree_basis(basis_degree(id)).basis_monomial(basis_index(id));
}

Element PresentedRing::basis_element(BasisId id) const { return monomial(basis_monomial(id)); }

SparseVector<std::size_t> PresentedRing::coordinates(const Element& x, int d) const {
  SparseVector<std::size_t> out;
  if (top_degree_ && d > *top_degree_) return out;
  const auto& db = degree_basis(d);
  for (const auto& [m, c] : x.terms()) {
    if (gens_->degree(m) != d) throw std::invalid_argument("element is not homogeneous of the requested degree");
    axpy(out, c, db.projection[db.spanning_index.at(m)]);
  }
  return out;
}

const SparseVector<std::size_t>& PresentedRing::basis_product(BasisId a, BasisId b) const {
  const std::uint64_t key = (std::uint64_t{a} << 32) | b;
  {
    std::lock_guard lock(mutex_);
    if (auto it = products_.find(key); it != products_.end()) return *it->second;
  }
  Element prod = zero();
  multiply_terms(basis_monomial(a), basis_monomial(b), Coefficient::one(field_), prod);
  auto coords = std::make_shared<const SparseVector<std::size_t>>(
      coordinates(prod, basis_degree(a) + basis_degree(b)));
  std::lock_guard lock(mutex_);
  return *products_.try_emplace(key, std::move(coords)).first->second;
}

}  // namespace symtc
