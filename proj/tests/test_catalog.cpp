#include <doctest.h>

#include <random>

#include "symtc/catalog.hpp"
#include "symtc/parse.hpp"

using namespace symtc;

namespace {

using Poly2 = std::vector<std::vector<long>>;  // [x power][t power]

// Coefficient of x^n in (1 + x t)^odd / ((1 - x)(1 - x t^2)), as a Poincare polynomial in t.
// With odd = 2g this is the rational Betti series of SP^n(M_g); with odd = g it counts the
// monomials e_I d^s, |I| + s <= n, of the Z2 presentation.
std::vector<std::size_t> betti_oracle(int n, int odd) {
  const int T = 2 * n + 1;
  Poly2 p(n + 1, std::vector<long>(T, 0));
  p[0][0] = 1;
  auto times = [&](auto step) {
    Poly2 q(n + 1, std::vector<long>(T, 0));
    step(p, q);
    p = q;
  };
  for (int i = 0; i < odd; ++i)
    times([&](const Poly2& a, Poly2& b) {
      for (int x = 0; x <= n; ++x)
        for (int t = 0; t < T; ++t) {
          b[x][t] += a[x][t];
          if (x + 1 <= n && t + 1 < T) b[x + 1][t + 1] += a[x][t];
        }
    });
  // 1/(1 - x) and 1/(1 - x t^2) as running sums
  for (int x = 1; x <= n; ++x)
    for (int t = 0; t < T; ++t) p[x][t] += p[x - 1][t];
  for (int x = 1; x <= n; ++x)
    for (int t = 2; t < T; ++t) p[x][t] += p[x - 1][t - 2];
  std::vector<std::size_t> out;
  for (int t = 0; t < T; ++t) out.push_back(static_cast<std::size_t>(p[n][t]));
  return out;
}

TensorElement random_tensor(const TensorRing& r, int d, std::mt19937& rng) {
  auto out = r.zero();
  std::uniform_int_distribution<int> coef(-2, 2);
  for (const auto& t : r.basis(d)) {
    const int c = coef(rng);
    if (c != 0) out.add_term(t, Coefficient(r.field(), c));
  }
  return out;
}

Space orientable(int n, int g) { return Space::symmetric_product(n, {SurfaceKind::Orientable, g}); }
Space nonorientable(int n, int g) { return Space::symmetric_product(n, {SurfaceKind::NonOrientable, g}); }

}  // namespace

TEST_CASE("oracle self check") {
  CHECK(betti_oracle(2, 2) == std::vector<std::size_t>{1, 2, 2, 2, 1});  // SP^2(T^2)
  CHECK(betti_oracle(3, 0) == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("Macdonald Betti numbers") {
  for (int n = 1; n <= 4; ++n)
    for (int g = 0; g <= 3; ++g) {
      CAPTURE(n);
      CAPTURE(g);
      auto r = macdonald_ring(n, g);
      CHECK(r->poincare_polynomial(2 * n) == betti_oracle(n, 2 * g));
      CHECK(r->dim(2 * n + 1) == 0);
      CHECK(r->field() == Field::Q);
    }
}

TEST_CASE("Macdonald generators of top class") {
  // c^n spans the top degree and is nonzero.
  for (int n = 1; n <= 3; ++n)
    for (int g = 0; g <= 2; ++g) {
      auto r = macdonald_ring(n, g);
      auto cn = r->monomial(r->gens()->single(2 * g, n));
      CHECK_FALSE(r->is_zero(cn));
    }
}

TEST_CASE("KS Betti numbers and d powers") {
  for (int n = 1; n <= 4; ++n)
    for (int g = 1; g <= 3; ++g) {
      CAPTURE(n);
      CAPTURE(g);
      auto r = ks_ring(n, g);
      CHECK(r->field() == Field::Z2);
      CHECK(r->poincare_polynomial(2 * n) == betti_oracle(n, g));
      auto d = r->generator("d");
      Element p = r->one();
      for (int i = 0; i < n; ++i) p = r->cup(p, d);
      CHECK_FALSE(p.is_zero());
      CHECK(r->cup(p, d).is_zero());
      // e_i^2 = d
      CHECK(r->cup(r->generator("e1"), r->generator("e1")) == r->normal_form(d));
    }
}

TEST_CASE("spheres") {
  for (int k = 1; k <= 4; ++k) {
    auto r = sphere_ring(k, Field::Q);
    auto p = r->poincare_polynomial(k);
    CHECK(p.front() == 1);
    CHECK(p.back() == 1);
    std::size_t total = 0;
    for (auto b : p) total += b;
    CHECK(total == 2);
  }
}

TEST_CASE("space descriptors") {
  CHECK(orientable(2, 3).dimension() == 4);
  CHECK(orientable(2, 3).str() == "SP(2, M(3))");
  CHECK(Space::surface({SurfaceKind::NonOrientable, 2}).str() == "N(2)");
  CHECK(Space::sphere(3).dimension() == 3);
  auto prod = Space::product({orientable(2, 1), Space::sphere(2)});
  CHECK(prod.dimension() == 6);
  CHECK(prod.field() == Field::Q);
  CHECK(Space::product({nonorientable(2, 1), Space::sphere(1)}).field() == Field::Z2);
  CHECK_THROWS(Space::product({orientable(1, 1), nonorientable(1, 1)}));
  CHECK(Space::power(orientable(1, 2), 3).dimension() == 6);
  CHECK_THROWS(Space::symmetric_product(0, {SurfaceKind::Orientable, 1}));
  CHECK_THROWS(Space::symmetric_product(1, {SurfaceKind::NonOrientable, 0}));
  CHECK_THROWS(Space::sphere(0));
  // nested products flatten
  auto nested = Space::product({Space::product({Space::sphere(1), Space::sphere(2)}), Space::sphere(3)});
  CHECK(nested.children().size() == 3);
}

TEST_CASE("tensor product dimensions") {
  auto x = ring_of(orientable(2, 1));
  auto s = ring_of(Space::sphere(3));
  auto p = tensor_product({x, s});
  auto px = x->poincare_polynomial();
  auto ps = s->poincare_polynomial();
  auto pp = p->poincare_polynomial();
  REQUIRE(pp.size() == px.size() + ps.size() - 1);
  for (std::size_t d = 0; d < pp.size(); ++d) {
    std::size_t conv = 0;
    for (std::size_t i = 0; i <= d; ++i)
      if (i < px.size() && d - i < ps.size()) conv += px[i] * ps[d - i];
    CHECK(pp[d] == conv);
    CHECK(p->basis(static_cast<int>(d)).size() == conv);
  }
  CHECK(p->total_dim() == x->total_dim() * s->total_dim());
}

TEST_CASE("tensor ring graded commutativity and associativity") {
  std::mt19937 rng(77);
  for (auto base : {ring_of(orientable(2, 1)), ring_of(nonorientable(2, 2))}) {
    auto r = tensor_power(base, 2);
    const Field f = r->field();
    for (int trial = 0; trial < 25; ++trial) {
      std::uniform_int_distribution<int> deg(1, 3);
      const int p = deg(rng), q = deg(rng), s = deg(rng);
      auto a = random_tensor(*r, p, rng);
      auto b = random_tensor(*r, q, rng);
      auto c = random_tensor(*r, s, rng);
      const long sign = (p % 2 && q % 2) ? -1 : 1;
      CHECK(r->multiply(a, b) == scale(Coefficient(f, sign), r->multiply(b, a)));
      CHECK(r->multiply(r->multiply(a, b), c) == r->multiply(a, r->multiply(b, c)));
      CHECK(r->multiply(r->one(), a) == a);
    }
  }
}

TEST_CASE("Koszul sign on generators") {
  auto r = tensor_power(ring_of(orientable(1, 1)), 2);
  auto gens = r->generators();
  REQUIRE(gens.size() == 6);
  // a@1 * a@2 = -(a@2 * a@1), and both are nonzero pure tensors
  auto x = r->multiply(gens[0].value, gens[3].value);
  auto y = r->multiply(gens[3].value, gens[0].value);
  CHECK_FALSE(x.is_zero());
  CHECK(x == scale(Coefficient(Field::Q, -1L), y));
}

TEST_CASE("projections and diagonal are ring maps") {
  std::mt19937 rng(5);
  for (auto base : {ring_of(orientable(2, 2)), ring_of(nonorientable(3, 1))}) {
    for (int m = 2; m <= 3; ++m) {
      auto pw = tensor_power(base, m);
      for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> deg(1, 3);
        const int p = deg(rng), q = deg(rng);
        auto x = random_tensor(*base, p, rng);
        auto y = random_tensor(*base, q, rng);
        for (int i = 1; i <= m; ++i) {
          auto px = proj_pullback(*pw, i, x);
          CHECK(proj_pullback(*pw, i, base->multiply(x, y)) == pw->multiply(px, proj_pullback(*pw, i, y)));
          CHECK(diagonal_pullback(*pw, px) == x);
        }
        auto u = random_tensor(*pw, p, rng);
        auto v = random_tensor(*pw, q, rng);
        CHECK(diagonal_pullback(*pw, pw->multiply(u, v)) ==
              base->multiply(diagonal_pullback(*pw, u), diagonal_pullback(*pw, v)));
      }
    }
  }
}

TEST_CASE("lift from factor is a ring map") {
  std::mt19937 rng(9);
  auto a = ring_of(orientable(2, 1));
  auto b = ring_of(Space::sphere(2));
  auto p = tensor_product({a, b});
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_tensor(*a, 1, rng);
    auto y = random_tensor(*a, 2, rng);
    CHECK(lift_from_factor(*p, 0, a->multiply(x, y)) ==
          p->multiply(lift_from_factor(*p, 0, x), lift_from_factor(*p, 0, y)));
  }
  auto s = b->generators().front().value;
  CHECK_FALSE(lift_from_factor(*p, 1, s).is_zero());
  CHECK(p->multiply(lift_from_factor(*p, 1, s), lift_from_factor(*p, 1, s)).is_zero());
}

TEST_CASE("mixed fields are rejected") {
  CHECK_THROWS(tensor_product({ring_of(orientable(1, 1)), ring_of(nonorientable(1, 1))}));
}

TEST_CASE("Macdonald diagnostic") {
  auto d = macdonald_diagnostic(2, 2);
  CHECK(d.full == betti_oracle(2, 4));
  CHECK(d.differs());
}

TEST_CASE("dump ring") {
  auto text = dump_ring(*ring_of(Space::sphere(2)));
  CHECK(text.find("S(2)") != std::string::npos);
}
