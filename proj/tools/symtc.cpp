// symtc: cohomology rings of symmetric products of surfaces, cup-lengths, cat and TC_m bounds.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "symtc/invariants.hpp"
#include "symtc/numtheory.hpp"
#include "symtc/parse.hpp"
#include "symtc/report.hpp"

using namespace symtc;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kAssertion = 1;
constexpr int kUsage = 2;

struct Check {
  std::string id;
  std::string what;
  std::string expected;
  std::string observed;
  bool pass = false;
};

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SYMTC_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) n = static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return n;
}

// Runs every task, possibly concurrently; results keep the task order.
std::vector<Check> run_all(const std::vector<std::function<Check()>>& tasks) {
  std::vector<Check> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (const std::exception& e) {
        out[i] = {"error-" + std::to_string(i), "task threw", "no exception", e.what(), false};
      }
    }
  };
  const unsigned n = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

Space orientable(int n, int g) { return Space::symmetric_product(n, {SurfaceKind::Orientable, g}); }
Space nonorientable(int n, int g) { return Space::symmetric_product(n, {SurfaceKind::NonOrientable, g}); }

std::vector<std::function<Check()>> paper_suite(int nmax, int gmax, int mmax) {
  std::vector<std::function<Check()>> t;
  // cat of SP^n(M_g) and SP^n(N_g).
  for (int n = 1; n <= nmax; ++n) {
    for (int g = 0; g <= gmax; ++g) {
      t.push_back([n, g] {
        const auto r = cat_bounds(orientable(n, g));
        const int want = n <= g ? 2 * n : n + g;
        return Check{"cat/" + r.space, "cat(SP^n(M_g))", std::to_string(want), interval(r), r.exact && r.lower == want};
      });
      if (g >= 1)
        t.push_back([n, g] {
          const auto r = cat_bounds(nonorientable(n, g));
          return Check{"cat/" + r.space, "cat(SP^n(N_g)) = 2n", std::to_string(2 * n), interval(r),
                       r.exact && r.lower == 2 * n};
        });
    }
  }
  // TC_m of SP^n(M_g).
  for (int n = 1; n <= nmax; ++n) {
    for (int g = 0; g <= gmax; ++g) {
      for (int m = 2; m <= mmax; ++m) {
        t.push_back([n, g, m] {
          const auto r = tcm_bounds(orientable(n, g), m);
          int want;
          if (n == 1)
            want = g == 0 ? m : g == 1 ? 2 * m - 2 : 2 * m;
          else
            want = n <= g ? 2 * m * n : m * (n + g);
          return Check{"tc/" + r.space + "/m=" + std::to_string(m), "TC_m(SP^n(M_g)) exact", std::to_string(want),
                       interval(r) + " (" + r.lower_reason + ")", r.exact && r.lower == want};
        });
      }
    }
  }
  // SP^n(N_g), n >= 2: never a point value.
  for (int n = 2; n <= nmax; ++n)
    for (int g = 1; g <= gmax; ++g)
      for (int m = 2; m <= mmax; ++m)
        t.push_back([n, g, m] {
          const auto r = tcm_bounds(nonorientable(n, g), m);
          const bool ok = r.upper == 2 * n * m && r.lower >= 2 * n * (m - 1);
          return Check{"tc/" + r.space + "/m=" + std::to_string(m), "TC_m(SP^n(N_g)) inside [2n(m-1), 2nm]",
                       "within [" + std::to_string(2 * n * (m - 1)) + ", " + std::to_string(2 * n * m) + "]",
                       interval(r) + " (" + r.lower_reason + ")", ok};
        });
  // Essential manifolds.
  for (int n = 1; n <= nmax; ++n)
    for (int g = 0; g <= gmax; ++g) {
      t.push_back([n, g] {
        const bool want = g >= n;
        const bool got = essential(orientable(n, g));
        return Check{"essential/" + orientable(n, g).str(), "essential iff g >= n", want ? "true" : "false",
                     got ? "true" : "false", want == got};
      });
      if (g >= 1)
        t.push_back([n, g] {
          const bool got = essential(nonorientable(n, g));
          return Check{"essential/" + nonorientable(n, g).str(), "always essential", "true", got ? "true" : "false", got};
        });
    }
  // Lucas.
  t.push_back([] {
    int bad = 0;
    for (unsigned k = 0; k <= 64; ++k) {
      std::uint64_t odd = 0;
      for (unsigned i = 0; i <= k; ++i) {
        const int big = mpz_odd_p(binom_big(k, i).get_mpz_t()) ? 1 : 0;
        bad += big != binom_parity(k, i);
        odd += big;
      }
      bad += odd != odd_count_row(k);
      if (k >= 1) bad += odd % 2 != 0;
    }
    return Check{"lucas/k<=64", "Lucas parity, even odd-count rows", "0 mismatches", std::to_string(bad) + " mismatches",
                 bad == 0};
  });
  // Diagonal powers over Z2.
  for (int n = 1; n <= nmax; ++n)
    for (int g = 1; g <= gmax; ++g)
      for (int k = 1; k <= std::min(n, g); ++k)
        t.push_back([n, g, k] {
          const auto r = diagonal_power_vanishing(n, g, k);
          return Check{"vanishing/n=" + std::to_string(n) + "/g=" + std::to_string(g) + "/k=" + std::to_string(k),
                       "(d x 1 + 1 x d)^k = 0 claimed", "vanishes",
                       std::string(r.ring_vanishes ? "vanishes" : "nonzero") + ", " +
                           std::to_string(r.surviving_terms) + " surviving terms",
                       r.ring_vanishes && r.routes_agree()};
        });
  // Sphere products.
  for (int m = 2; m <= mmax; ++m)
    for (const std::vector<int> ks : std::vector<std::vector<int>>{{1}, {2}, {1, 2}, {2, 2}, {1, 3}, {1, 2, 3}}) {
      t.push_back([ks, m] {
        std::vector<Space> f;
        int want = 0;
        for (int k : ks) {
          f.push_back(Space::sphere(k));
          want += (m - 1) + (k % 2 == 0 ? 1 : 0);
        }
        const Space s = Space::product(f);
        const auto r = szcl_lower(s, m);
        return Check{"szcl/" + s.str() + "/m=" + std::to_string(m), "szcl of sphere products", std::to_string(want),
                     std::to_string(r.length), r.length == want};
      });
    }
  // Products.
  t.push_back([] {
    const auto r = product_additivity_check({orientable(2, 1), orientable(2, 1)}, 2);
    return Check{"log/SP(2, M(1))^2", "cat and TC_2 additive", "cat 6, TC_2 12",
                 "cat " + interval(r.cat_product) + ", TC_2 " + interval(r.tc_product),
                 r.ls_logarithmic && r.tc_logarithmic};
  });
  t.push_back([] {
    const auto r = product_additivity_check({nonorientable(2, 2), nonorientable(1, 1)}, 2);
    return Check{"log/SP(2, N(2)) x N(1)", "cat additive", "6", interval(r.cat_product), r.ls_logarithmic};
  });
  for (auto [n, g] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}})
    for (int k = 1; k <= 3; ++k) {
      t.push_back([n, g, k] {
        const auto r = ganea_check(orientable(n, g), k, 2);
        return Check{"ganea/" + r.space + "/S(" + std::to_string(k) + ")", "cat +1 and TC_2 additive with S^k", "both",
                     r.cat_note + "; " + r.tc_note, r.cat_ok && r.tc_ok};
      });
    }
  t.push_back([] {
    const auto r = genfun(orientable(2, 1), 3);
    return Check{"genfun/SP(2, M(1))", "TC-generating function", "[6, 9, 12], P(1) = 3",
                 json(r.coefficients).dump() + (r.note.empty() ? "" : " (" + r.note + ")"), r.matches};
  });
  t.push_back([] {
    const auto r = genfun(orientable(3, 0), 5);
    return Check{"genfun/SP(3, M(0))", "TC-generating function", "(m+1) 3, P(1) = 3", json(r.coefficients).dump(),
                 r.matches};
  });
  return t;
}

struct Output {
  std::string json_path;
  bool require_exact = false;
  json report;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int finish(int code) {
    if (!json_path.empty()) {
      report["schema_version"] = kSchemaVersion;
      report["exit_code"] = code;
      report["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::ofstream f(json_path);
      if (!f) {
        std::cerr << "cannot write " << json_path << "\n";
        return kUsage;
      }
      f << report.dump(2) << "\n";
    }
    return code;
  }
};

void print_bound(const BoundReport& r) {
  std::cout << r.invariant << (r.m ? " (m=" + std::to_string(r.m) + ")" : "") << " of " << r.space << ": "
            << (r.exact ? "exact " : "interval ") << interval(r) << "\n"
            << "  lower " << r.lower << " [" << r.lower_reason << "], upper " << r.upper << " [" << r.upper_reason
            << "]\n";
  if (!r.cup_witness.empty()) {
    std::cout << "  cup witness:";
    for (const auto& w : r.cup_witness) std::cout << " " << w;
    std::cout << "\n";
  }
  if (r.certificate) {
    std::cout << "  certificate: " << r.certificate->length() << " factors, product has "
              << r.certificate->product.size() << " terms\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology rings of symmetric products of surfaces; cat and TC_m bounds with certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--json", out.json_path, "Write a JSON report to this path");
  app.add_flag("--require-exact", out.require_exact, "Fail (exit 1) when a value is only an interval");

  std::string expr;
  int m = 2;
  int horizon = 5;
  std::string strategy = "structured";
  std::size_t limit = 4096;
  bool dump = false;
  int kmax = 64;
  std::string suite;
  std::vector<int> grid{3, 3, 3};

  auto* ring = app.add_subcommand("ring", "Print generators and Poincare polynomial");
  ring->add_option("space", expr, "Space expression, e.g. \"SP(2, M(1))\"")->required();
  ring->add_flag("--dump", dump, "Print every basis monomial");

  auto* cat = app.add_subcommand("cat", "Bounds for LS-category");
  cat->add_option("space", expr)->required();

  auto* tc = app.add_subcommand("tc", "Bounds for sequential topological complexity TC_m");
  tc->add_option("-m", m, "Sequential index m >= 2")->check(CLI::Range(2, 1000));
  tc->add_option("space", expr)->required();

  auto* szcl = app.add_subcommand("szcl", "Certified special zero-divisor cup-length lower bound");
  szcl->add_option("-m", m)->check(CLI::Range(2, 1000));
  szcl->add_option("--strategy", strategy, "paper | structured | greedy");
  szcl->add_option("space", expr)->required();

  auto* zcl = app.add_subcommand("zcl", "Exact zero-divisor cup-length (brute force)");
  zcl->add_option("-m", m)->check(CLI::Range(2, 1000));
  zcl->add_option("--limit", limit, "Maximum dim H*(X^m)");
  zcl->add_option("space", expr)->required();

  auto* gf = app.add_subcommand("genfun", "TC-generating function coefficients");
  gf->add_option("--horizon", horizon)->check(CLI::Range(1, 1000));
  gf->add_option("space", expr)->required();

  auto* ess = app.add_subcommand("essential", "Is cat equal to the dimension?");
  ess->add_option("space", expr)->required();

  auto* lucas = app.add_subcommand("lucas", "Lucas parity checks and the Z2 diagonal-power table");
  lucas->add_option("--kmax", kmax)->check(CLI::Range(0, 4096));

  auto* verify = app.add_subcommand("verify", "Run the built-in table of reference checks");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"paper"}));
  verify->add_option("--grid", grid, "nmax gmax mmax")->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  out.report["command"] = app.get_subcommands().front()->get_name();
  out.report["inputs"] = {{"space", expr}, {"m", m}};

  try {
    std::optional<Space> space;
    if (!expr.empty()) {
      space = parse_space(expr);
      out.report["inputs"]["canonical"] = space->str();
      out.report["inputs"]["field"] = to_string(space->field());
    }

    if (ring->parsed()) {
      auto r = ring_of(*space);
      std::cout << r->name() << " over " << to_string(r->field()) << ", top degree " << r->top_degree() << "\n";
      std::cout << "generators:";
      for (const auto& g : r->generators()) std::cout << " " << g.name << "(" << g.degree << ")";
      std::cout << "\npoincare:";
      for (auto b : r->poincare_polynomial()) std::cout << " " << b;
      std::cout << "\n";
      if (dump) std::cout << dump_ring(*r) << "\n";
      out.report["result"] = json::parse(dump_ring(*r));
      return out.finish(kPass);
    }
    if (cat->parsed() || tc->parsed()) {
      const auto r = cat->parsed() ? cat_bounds(*space) : tcm_bounds(*space, m);
      print_bound(r);
      out.report["result"] = to_json(r);
      return out.finish(out.require_exact && !r.exact ? kAssertion : kPass);
    }
    if (szcl->parsed()) {
      const auto r = szcl_lower(*space, m, parse_strategy(strategy));
      std::cout << "szcl_" << m << "(" << space->str() << ") >= " << r.length << " [" << to_string(r.strategy) << "]\n";
      if (r.certificate) {
        for (const auto& b : r.certificate->blocks)
          std::cout << "  " << b.divisor.label << (b.exponent > 1 ? "^" + std::to_string(b.exponent) : "") << "\n";
        std::cout << "  product: " << r.certificate->product.size() << " terms"
                  << (r.certificate->nonzero() ? "" : " (zero)") << "\n";
      }
      out.report["result"] = {{"length", r.length}, {"strategy", to_string(r.strategy)},
                              {"certificate", r.certificate ? to_json(*r.certificate) : json(nullptr)}};
      return out.finish(kPass);
    }
    if (zcl->parsed()) {
      const auto r = zcl_bruteforce(ring_of(*space), m, limit);
      std::cout << "zcl_" << m << "(" << space->str() << ") = " << r.length << "\n";
      out.report["result"] = to_json(r);
      return out.finish(kPass);
    }
    if (gf->parsed()) {
      const auto r = genfun(*space, horizon);
      std::cout << "TC_{m+1}, m = 1.." << horizon << ": " << json(r.coefficients).dump() << "\n";
      std::cout << "numerator (1-t)^2 f: " << json(r.numerator).dump() << ", P(1) = " << r.numerator_at_one
                << ", cat = " << r.cat << "\n";
      std::cout << (r.matches ? "matches cat (2t - t^2)/(1-t)^2" : "does not match: " + r.note) << "\n";
      out.report["result"] = to_json(r);
      return out.finish(r.matches ? kPass : kAssertion);
    }
    if (ess->parsed()) {
      const bool e = essential(*space);
      std::cout << space->str() << (e ? " is essential" : " is not essential") << "\n";
      out.report["result"] = {{"essential", e}};
      return out.finish(kPass);
    }
    if (lucas->parsed()) {
      int bad = 0;
      for (int k = 0; k <= kmax; ++k) {
        std::uint64_t odd = 0;
        for (int i = 0; i <= k; ++i) {
          const int big = mpz_odd_p(binom_big(k, i).get_mpz_t()) ? 1 : 0;
          bad += big != binom_parity(k, i);
          odd += big;
        }
        bad += odd != odd_count_row(k);
      }
      std::cout << "Lucas parity vs exact binomials for k <= " << kmax << ": " << bad << " mismatches\n";
      json table = json::array();
      std::cout << "n g k  ring      lucas     even-count argument\n";
      for (int n = 1; n <= 4; ++n)
        for (int g = 1; g <= 4; ++g)
          for (int k = 1; k <= std::min(n, g); ++k) {
            const auto r = diagonal_power_vanishing(n, g, k);
            std::cout << n << " " << g << " " << k << "  " << (r.ring_vanishes ? "zero    " : "nonzero ") << "  "
                      << (r.lucas_vanishes ? "zero    " : "nonzero ") << "  "
                      << (r.identification_predicts_vanishing ? "zero" : "nonzero") << "\n";
            table.push_back(to_json(r));
          }
      out.report["result"] = {{"mismatches", bad}, {"diagonal_powers", table}};
      return out.finish(bad == 0 ? kPass : kAssertion);
    }
    if (verify->parsed()) {
      const auto checks = run_all(paper_suite(grid[0], grid[1], grid[2]));
      json arr = json::array();
      int failed = 0;
      for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.observed
                  << (c.pass ? "" : "  (expected " + c.expected + ")") << "\n";
        failed += !c.pass;
        arr.push_back({{"id", c.id}, {"what", c.what}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
      }
      std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
      out.report["inputs"] = {{"suite", suite}, {"grid", grid}};
      out.report["result"] = {{"checks", arr}, {"failed", failed}};
      return out.finish(failed == 0 ? kPass : kAssertion);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return out.finish(kUsage);
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << " (use szcl certificates instead)\n";
    return out.finish(kUsage);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return out.finish(kUsage);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return out.finish(kAssertion);
  }
  return kUsage;
}
