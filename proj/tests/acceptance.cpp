// One PASS/FAIL line per acceptance criterion. Every quantity compared here is an exact integer
// or an exact rational; there is no floating tolerance anywhere. Failing cells are listed under
// their criterion. The exit code is 0 whenever the run completes, so that honest FAIL lines are
// recorded rather than hidden; a crash or exception exits 1.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symtc/invariants.hpp"
#include "symtc/numtheory.hpp"
#include "symtc/report.hpp"

using namespace symtc;

namespace {

using Clock = std::chrono::steady_clock;

Space orientable(int n, int g) { return Space::symmetric_product(n, {SurfaceKind::Orientable, g}); }
Space nonorientable(int n, int g) { return Space::symmetric_product(n, {SurfaceKind::NonOrientable, g}); }

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Criterion {
  int id;
  std::string title;
  int cells = 0;
  std::vector<std::string> failures;
  std::vector<std::string> info;
  Clock::time_point start = Clock::now();

  void check(bool ok, const std::string& what) {
    ++cells;
    if (!ok) failures.push_back(what);
  }
  void report(const std::string& tolerance, double time_limit = 0) {
    const double t = seconds_since(start);
    if (time_limit > 0 && t > time_limit) {
      std::ostringstream s;
      s << "runtime " << t << " s exceeds " << time_limit << " s";
      failures.push_back(s.str());
    }
    std::cout << (failures.empty() ? "PASS" : "FAIL") << " [" << id << "] " << title << ": "
              << (cells - static_cast<int>(failures.size())) << "/" << cells << " cells, tolerance " << tolerance
              << ", " << t << " s\n";
    constexpr std::size_t shown = 12;
    for (std::size_t i = 0; i < failures.size() && i < shown; ++i) std::cout << "    fail: " << failures[i] << "\n";
    if (failures.size() > shown) std::cout << "    ... " << failures.size() - shown << " more\n";
    for (const auto& line : info) std::cout << "    info: " << line << "\n";
    std::cout.flush();
  }
};

std::string cell(const Space& s, int m) { return s.str() + " m=" + std::to_string(m); }

void tc_symmetric_products() {
  Criterion c{1, "TC_m(SP^n(M_g)) exact with verified certificate, n <= 3, g <= 3, m in {2,3}"};
  for (int n = 1; n <= 3; ++n)
    for (int g = 0; g <= 3; ++g)
      for (int m = 2; m <= 3; ++m) {
        const Space s = orientable(n, g);
        const int expected = n <= g ? 2 * m * n : m * (n + g);
        const auto r = tcm_bounds(s, m);
        bool certified = r.certificate && r.certificate->nonzero() && verify_certificate(*r.certificate) &&
                         r.certificate->length() == expected;
        if (!certified && r.exact && r.lower == expected) {
          // known-table values carry no certificate of their own
          auto z = szcl_lower(s, m);
          certified = z.certificate && verify_certificate(*z.certificate) && z.length == expected;
        }
        c.check(r.exact && r.lower == expected && certified,
                cell(s, m) + ": got " + interval(r) + " [" + r.lower_reason + "], expected " +
                    std::to_string(expected) + (certified ? "" : ", no certificate of that length"));
      }
  c.report("exact integer", 300);
}

void certificate_coefficients() {
  Criterion c{2, "pure-tensor coefficient of the literal certificate"};
  const int triples[][3] = {{2, 3, 2}, {2, 3, 3}, {2, 1, 2}, {3, 1, 2}};
  for (auto [n, g, m] : triples) {
    const auto cert = paper_certificate(n, g, m);
    const mpz_class want = paper_coefficient(n, g, m);
    const mpq_class got = abs(cert.leading_coefficient().value());
    c.check(cert.nonzero() && verify_certificate(cert) && got == mpq_class(want),
            "(n,g,m)=(" + std::to_string(n) + "," + std::to_string(g) + "," + std::to_string(m) +
                "): product has " + std::to_string(cert.product.size()) + " terms, leading coefficient " +
                got.get_str() + ", expected " + want.get_str());
  }
  c.report("exact integer");
}

void cat_tables() {
  Criterion c{3, "cat(SP^n(M_g)) and cat(SP^n(N_g)) for n, g <= 5"};
  double worst = 0;
  for (int n = 1; n <= 5; ++n)
    for (int g = 0; g <= 5; ++g) {
      for (bool orient : {true, false}) {
        if (!orient && g == 0) continue;
        const Space s = orient ? orientable(n, g) : nonorientable(n, g);
        const int expected = orient ? (n <= g ? 2 * n : n + g) : 2 * n;
        const auto t = Clock::now();
        const auto r = cat_bounds(s);
        const double dt = seconds_since(t);
        worst = std::max(worst, dt);
        c.check(r.exact && r.lower == expected && dt < 10,
                s.str() + ": got " + interval(r) + ", expected " + std::to_string(expected));
      }
    }
  c.info.push_back("slowest case " + std::to_string(worst) + " s (limit 10 s)");
  c.report("exact integer");
}

void z2_ring_facts() {
  Criterion c{4, "d^n != 0, d^{n+1} = 0, and the diagonal-power vanishing"};
  for (int n = 1; n <= 5; ++n)
    for (int g = 1; g <= 5; ++g) {
      auto r = ks_ring(n, g);
      const auto d = r->generator("d");
      Element p = r->one();
      for (int i = 0; i < n; ++i) p = r->cup(p, d);
      c.check(!p.is_zero() && r->cup(p, d).is_zero(),
              "SP(" + std::to_string(n) + ", N(" + std::to_string(g) + ")): d powers");
    }
  int agree = 0, total = 0;
  for (int n = 1; n <= 4; ++n)
    for (int g = 1; g <= 4; ++g)
      for (int k = 1; k <= std::min(n, g); ++k) {
        const auto rep = diagonal_power_vanishing(n, g, k);
        ++total;
        agree += rep.routes_agree();
        c.check(rep.ring_vanishes && rep.routes_agree(),
                "n=" + std::to_string(n) + " g=" + std::to_string(g) + " k=" + std::to_string(k) +
                    ": ring vanishes " + (rep.ring_vanishes ? "yes" : "no") + ", " +
                    std::to_string(rep.surviving_terms) + " surviving terms, Lucas route " +
                    (rep.lucas_vanishes ? "vanishes" : "nonzero"));
      }
  c.info.push_back("direct and Lucas routes agree on " + std::to_string(agree) + "/" + std::to_string(total));
  c.report("exact (Z2)");
}

void betti() {
  Criterion c{5, "Poincare polynomials of SP^n(M_0) = CP^n and SP^n(N_1) = RP^{2n}"};
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::size_t> cp(2 * n + 1, 0), rp(2 * n + 1, 1);
    for (int i = 0; i <= 2 * n; i += 2) cp[i] = 1;
    c.check(ring_of(orientable(n, 0))->poincare_polynomial() == cp, "SP(" + std::to_string(n) + ", M(0))");
    c.check(ring_of(nonorientable(n, 1))->poincare_polynomial() == rp, "SP(" + std::to_string(n) + ", N(1))");
  }
  c.report("exact integer");
}

void sphere_products() {
  Criterion c{6, "szcl of sphere products equals n(m-1) + #even, zcl agrees"};
  std::vector<std::vector<int>> multisets;
  for (int a = 1; a <= 3; ++a) {
    multisets.push_back({a});
    for (int b = a; b <= 3; ++b) {
      multisets.push_back({a, b});
      for (int d = b; d <= 3; ++d) multisets.push_back({a, b, d});
    }
  }
  int zcl_runs = 0;
  for (const auto& ks : multisets) {
    std::vector<Space> f;
    int even = 0;
    for (int k : ks) {
      f.push_back(Space::sphere(k));
      even += k % 2 == 0;
    }
    const Space s = f.size() == 1 ? f.front() : Space::product(f);
    const int n = static_cast<int>(ks.size());
    for (int m = 2; m <= 3; ++m) {
      const int expected = n * (m - 1) + even;
      const auto r = szcl_lower(s, m);
      const bool cert_ok = r.certificate && verify_certificate(*r.certificate);
      std::string zcl_note;
      bool zcl_ok = true;
      try {
        const int z = zcl_bruteforce(ring_of(s), m).length;
        ++zcl_runs;
        zcl_ok = z == expected;
        zcl_note = ", zcl " + std::to_string(z);
      } catch (const SizeLimitExceeded&) {
      }
      c.check(r.length == expected && cert_ok && zcl_ok,
              cell(s, m) + ": szcl " + std::to_string(r.length) + zcl_note + ", expected " + std::to_string(expected));
    }
  }
  c.info.push_back("zcl brute force ran on " + std::to_string(zcl_runs) + " of " +
                   std::to_string(2 * multisets.size()) + " cells (size limit 4096)");
  c.report("exact integer");
}

void oracle_equivalence() {
  Criterion c{7, "zcl brute force = szcl certificate length, inside the TC sandwich (m = 2)"};
  const std::vector<Space> spaces{Space::sphere(1), Space::sphere(2), orientable(1, 1),
                                  Space::product({Space::sphere(1), Space::sphere(2)})};
  const int m = 2;
  for (const auto& s : spaces) {
    const int z = zcl_bruteforce(ring_of(s), m).length;
    const auto r = szcl_lower(s, m);
    const auto tc = tcm_bounds(s, m);
    const auto cat = cat_bounds(s);
    const bool sandwich = r.length <= z && z <= tc.upper && (m - 1) * cat.lower <= tc.upper && tc.upper <= m * cat.upper;
    c.check(z == r.length && sandwich && r.certificate && verify_certificate(*r.certificate),
            cell(s, m) + ": zcl " + std::to_string(z) + ", szcl " + std::to_string(r.length) + ", TC " + interval(tc));
  }
  c.report("exact integer");
}

void generating_function() {
  Criterion c{8, "TC-generating function (2t - t^2) cat / (1 - t)^2 up to m = 20"};
  const std::vector<Space> spaces{orientable(1, 0), orientable(2, 0), orientable(3, 0),
                                  orientable(1, 2), orientable(1, 3), orientable(1, 4)};
  for (const auto& s : spaces) {
    const auto r = genfun(s, 20);
    bool coeffs = r.exact && static_cast<int>(r.coefficients.size()) == 20;
    for (int m = 1; coeffs && m <= 20; ++m) coeffs = r.coefficients[m - 1] == (m + 1) * r.cat;
    c.check(coeffs && r.matches && r.numerator_at_one == r.cat,
            s.str() + ": " + (r.note.empty() ? "series mismatch" : r.note));
  }
  for (const auto& s : {orientable(2, 1), orientable(2, 3)}) {
    const auto r = genfun(s, 3);
    std::string coeffs;
    for (int v : r.coefficients) coeffs += (coeffs.empty() ? "" : ",") + std::to_string(v);
    c.info.push_back(s.str() + " horizon 3: [" + coeffs + "] " + (r.exact ? "exact" : "not exact: " + r.note));
  }
  c.report("exact integer");
}

void logarithmicity() {
  Criterion c{9, "cat and TC_2 additivity on products and squares"};
  const std::vector<std::vector<Space>> cases{
      {orientable(2, 1), orientable(2, 3)},       {orientable(2, 1), orientable(2, 1)},
      {orientable(2, 3), orientable(2, 3)},       {nonorientable(2, 2), nonorientable(3, 1)},
      {nonorientable(2, 2), nonorientable(2, 2)}, {nonorientable(3, 1), nonorientable(3, 1)}};
  for (const auto& f : cases) {
    const auto r = product_additivity_check(f, 2);
    c.check(r.ls_logarithmic && r.tc_logarithmic,
            f[0].str() + " x " + f[1].str() + ": cat " + (r.ls_logarithmic ? "additive" : r.ls_note) + "; TC_2 " +
                (r.tc_logarithmic ? "additive" : r.tc_note));
  }
  c.info.push_back("mixed orientable x non-orientable pairs have no common coefficient field and are skipped");
  c.report("exact integer");
}

void essentialness() {
  Criterion c{10, "essential iff n <= g (orientable); always (non-orientable); n, g <= 4"};
  for (int n = 1; n <= 4; ++n)
    for (int g = 0; g <= 4; ++g) {
      c.check(essential(orientable(n, g)) == (n <= g), orientable(n, g).str());
      if (g >= 1) c.check(essential(nonorientable(n, g)), nonorientable(n, g).str());
    }
  c.report("exact boolean");
}

void lucas() {
  Criterion c{11, "Lucas parity against big binomials, odd row counts even, k <= 64"};
  for (std::uint64_t k = 0; k <= 64; ++k) {
    bool same = true;
    std::uint64_t odd = 0;
    for (std::uint64_t i = 0; i <= k; ++i) {
      const int p = binom_parity(k, i);
      same = same && p == (mpz_odd_p(binom_big(k, i).get_mpz_t()) != 0);
      odd += p;
    }
    c.check(same && odd == odd_count_row(k), "row " + std::to_string(k) + ": parity");
    if (k >= 1) c.check(odd_count_row(k) % 2 == 0, "row " + std::to_string(k) + ": odd count is odd");
  }
  c.report("exact integer");
}

void ganea() {
  Criterion c{12, "cat(X x S^k) = cat(X) + 1 and TC_m(X x S^k) = TC_m(X) + TC_m(S^k)"};
  for (auto [n, g] : {std::pair{2, 1}, std::pair{2, 3}})
    for (int k = 1; k <= 3; ++k)
      for (int m = 2; m <= 3; ++m) {
        const auto r = ganea_check(orientable(n, g), k, m);
        c.check(r.cat_ok && r.tc_ok, r.space + " x S(" + std::to_string(k) + ") m=" + std::to_string(m) + ": " +
                                         r.cat_note + "; " + r.tc_note);
      }
  c.report("exact integer");
}

void honest_intervals() {
  Criterion c{13, "TC_m(SP^n(N_g)), n >= 2, reported as the inexact interval [2n(m-1), 2nm]"};
  for (int n = 2; n <= 3; ++n)
    for (int g = 1; g <= 3; ++g)
      for (int m = 2; m <= 3; ++m) {
        const Space s = nonorientable(n, g);
        const auto r = tcm_bounds(s, m);
        c.check(!r.exact && r.lower == 2 * n * (m - 1) && r.upper == 2 * n * m,
                cell(s, m) + ": got " + interval(r) + " [" + r.lower_reason + "], expected [" +
                    std::to_string(2 * n * (m - 1)) + ", " + std::to_string(2 * n * m) + "] inexact");
      }
  c.report("exact integer");
}

}  // namespace

int main() {
  const auto start = Clock::now();
  try {
    tc_symmetric_products();
    certificate_coefficients();
    cat_tables();
    z2_ring_facts();
    betti();
    sphere_products();
    oracle_equivalence();
    generating_function();
    logarithmicity();
    essentialness();
    lucas();
    ganea();
    honest_intervals();
  } catch (const std::exception& e) {
    std::cout << "ERROR " << e.what() << "\n";
    return 1;
  }
  std::cout << "total " << seconds_since(start) << " s\n";
  return 0;
}
