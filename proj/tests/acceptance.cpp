// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "lhv/localh.hpp"
#include "lhv/realroot.hpp"
#include "lhv/tables.hpp"
#include "lhv/verify.hpp"

#ifndef LHV_GOLDEN_DIR
#error "LHV_GOLDEN_DIR must point at tests/golden"
#endif

using namespace lhv;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs suites, collecting failures and structural-check totals.
struct SuiteRunner {
  std::size_t structural = 0;
  std::size_t structural_failures = 0;

  Outcome run(const std::string& name, SuiteParams p) {
    p.jobs = workers();
    const VerifySuiteReport r = run_suite(name, p);
    structural += r.structural_checks;
    for (const auto& f : r.failures)
      if (f.detail.rfind("structural:", 0) == 0) ++structural_failures;
    Outcome o;
    o.ok = r.ok() && r.cases > 0;
    o.note = name + " " + std::to_string(r.cases) + " cases";
    if (!r.ok()) {
      std::cerr << render_report_text(r);
      o.note += ", " + std::to_string(r.failures.size()) + " failures";
    }
    return o;
  }
};

Outcome both(Outcome a, const Outcome& b) {
  a.ok = a.ok && b.ok;
  a.note += "; " + b.note;
  return a;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Face simplex(std::size_t n) {
  std::vector<Vertex> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(static_cast<Vertex>(i));
  return Face(std::move(v));
}

std::vector<std::uint64_t> seeds20() {
  std::vector<std::uint64_t> s;
  for (std::uint64_t i = 1; i <= 20; ++i) s.push_back(i);
  return s;
}

}  // namespace

int main() {
  SuiteRunner suites;
  int failed = 0;

  auto criterion = [&](int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
      o.ok = false;
      o.note += ", over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << "  (" << timing << "; " << o.note
              << ")" << std::endl;
    failed += !o.ok;
  };

  criterion(1, "tables 1-3 for n <= 4 match the golden files", 1.0, [] {
    Outcome o;
    for (int which = 1; which <= 3; ++which) {
      const std::string got = render_csv(build_table(which, 4));
      const std::string want = slurp(std::string(LHV_GOLDEN_DIR) + "/table" + std::to_string(which) + "_n4.csv");
      if (got != want || want.empty()) {
        o.ok = false;
        o.note += "table " + std::to_string(which) + " differs; ";
      }
    }
    if (o.ok) o.note = "byte-identical";
    return o;
  });

  criterion(2, "edgewise counterexample is 7x+42x^2+63x^3+42x^4+7x^5 and not real-rooted", 30.0, [] {
    const Triangulation gamma = stellar(trivial(simplex(6)), simplex(6));
    const IntPolynomial ell = local_h(edgewise(gamma, 2));
    Outcome o;
    o.ok = ell == IntPolynomial{0, 7, 42, 63, 42, 7} && !is_real_rooted(ell);
    o.note = "l = " + to_compact_string(ell);
    return o;
  });

  criterion(3, "uniform subdivision identity, n in {2,3,4}, 20 seeds, sd/esd_2/esd_3", 120.0, [&] {
    SuiteParams p;
    p.ns = {2, 3, 4};
    p.seeds = seeds20();
    p.kinds = {UniformKind::barycentric(), UniformKind::edgewise(2), UniformKind::edgewise(3)};
    return suites.run("thm-uniform", p);
  });

  criterion(4, "l(sd(Gamma)) real-rooted and interlaced by A_n", 0, [&] {
    SuiteParams p;
    p.ns = {2, 3, 4};
    p.seeds = seeds20();
    return suites.run("thm-sd", p);
  });

  criterion(5, "l(esd_r(Gamma)) real-rooted and interlaced by E_{n,r} for r >= n", 0, [&] {
    SuiteParams p;
    p.ns = {2, 3, 4};
    p.seeds = seeds20();
    return both(suites.run("thm-esd", p), suites.run("esd-counterexample", {}));
  });

  criterion(6, "second barycentric subdivision formula, n = 1..4", 0, [&] {
    SuiteParams p;
    p.ns = {1, 2, 3, 4};
    return suites.run("cor-2sd", p);
  });

  criterion(7, "d_{n,k,j} identities and recurrences for n <= 7", 60.0, [&] {
    SuiteParams p;
    p.ns = {0, 1, 2, 3, 4, 5, 6, 7};
    Outcome a = suites.run("prop-dnkj", p);
    p.ns = {1, 2, 3, 4, 5, 6, 7};
    return both(a, suites.run("prop-dnkj-rec", p));
  });

  criterion(8, "(d_{n,k,j})_j interlacing and A_n <= d_{n,k,j}, n <= 6", 0, [&] {
    SuiteParams p;
    p.ns = {0, 1, 2, 3, 4, 5, 6};
    return suites.run("thm-dnkj", p);
  });

  criterion(9, "Veronese formulas for the edgewise f-triangle, n <= 5, r <= 6", 0, [&] {
    SuiteParams p;
    p.ns = {0, 1, 2, 3, 4, 5};
    p.rs = {1, 2, 3, 4, 5, 6};
    return suites.run("prop-esd", p);
  });

  criterion(10, "Foata transformation properties on S_n, n <= 8", 30.0, [&] {
    SuiteParams p;
    p.ns = {1, 2, 3, 4, 5, 6, 7, 8};
    return suites.run("foata", p);
  });

  criterion(11, "structural invariants on every constructed triangulation", 0, [&] {
    SuiteParams p;
    p.seeds = seeds20();
    Outcome o = suites.run("structural", p);
    o.ok = o.ok && suites.structural_failures == 0 && suites.structural > 0;
    o.note += "; " + std::to_string(suites.structural) + " triangulations checked across all suites, " +
              std::to_string(suites.structural_failures) + " violations";
    return o;
  });

  std::cout << (failed ? "FAIL" : "PASS") << "  acceptance: " << (11 - failed) << "/11 criteria" << std::endl;
  return failed ? 1 : 0;
}
