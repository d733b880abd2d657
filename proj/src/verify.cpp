#include "lhv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lhv/localh.hpp"
#include "lhv/perm.hpp"
#include "lhv/realroot.hpp"

namespace lhv {

namespace {

Face simplex_face(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Face(std::move(v));
}

std::string simplex_description(std::size_t n) { return "simplex [" + std::to_string(n) + "]"; }

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

class CaseContext {
 public:
  CaseContext(std::string key, std::string input, std::string reproduce)
      : key_(std::move(key)), input_(std::move(input)), reproduce_(std::move(reproduce)) {}

  void expect_equal(const std::string& what, const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (!(lhs == rhs)) fail(what, to_string(lhs), to_string(rhs));
  }
  void expect(bool ok, const std::string& what, const std::string& lhs = "", const std::string& rhs = "") {
    if (!ok) fail(what, lhs, rhs);
  }
  void fail(const std::string& what, const std::string& lhs = "", const std::string& rhs = "") {
    failures_.push_back({key_, input_, lhs, rhs, what, reproduce_});
  }
  void structural(const Triangulation& t, const std::string& label) {
    ++structural_;
    for (auto& f : structural_check(t, key_, input_ + (label.empty() ? "" : ", " + label))) {
      f.reproduce = reproduce_;
      failures_.push_back(std::move(f));
    }
  }

  std::vector<CaseFailure>& failures() { return failures_; }
  std::size_t structural_count() const { return structural_; }

 private:
  std::string key_, input_, reproduce_;
  std::vector<CaseFailure> failures_;
  std::size_t structural_ = 0;
};

struct Case {
  std::string key;
  std::string input;
  std::string reproduce;
  std::function<void(CaseContext&)> body;
};

VerifySuiteReport run_cases(const std::string& suite, std::vector<Case> cases, std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  struct Outcome {
    std::vector<CaseFailure> failures;
    std::size_t structural = 0;
  };
  std::vector<Outcome> outcomes(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      CaseContext ctx(cases[i].key, cases[i].input, cases[i].reproduce);
      try {
        cases[i].body(ctx);
      } catch (const std::exception& e) {
        ctx.fail(std::string("exception: ") + e.what());
      }
      outcomes[i].failures = std::move(ctx.failures());
      outcomes[i].structural = ctx.structural_count();
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(cases.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerifySuiteReport report;
  report.suite = suite;
  report.cases = cases.size();
  for (auto& o : outcomes) {
    report.structural_checks += o.structural;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::uint64_t> seeds_of(const SuiteParams& p) {
  if (!p.seeds.empty()) return p.seeds;
  std::vector<std::uint64_t> s(20);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

std::vector<std::size_t> ns_of(const SuiteParams& p, std::vector<std::size_t> fallback) {
  return p.ns.empty() ? fallback : p.ns;
}

std::string reproduce(const std::string& suite, std::size_t n, std::uint64_t seed, const SuiteParams& p) {
  return "lhv verify " + suite + " --n " + std::to_string(n) + " --seeds " + std::to_string(seed) + " --steps " +
         std::to_string(p.max_steps);
}

std::string reproduce_n(const std::string& suite, std::size_t n) {
  return "lhv verify " + suite + " --n " + std::to_string(n);
}

IntPolynomial sum_range(const std::vector<IntPolynomial>& row, std::size_t from, std::size_t to_exclusive) {
  IntPolynomial s;
  for (std::size_t i = from; i < to_exclusive && i < row.size(); ++i) s += row[i];
  return s;
}

const IntPolynomial kX = IntPolynomial::x();
const IntPolynomial kXMinus1{-1, 1};

// ---------------------------------------------------------------------------

std::vector<Case> thm_uniform(const SuiteParams& p) {
  std::vector<UniformKind> kinds = p.kinds;
  if (kinds.empty()) kinds = {UniformKind::barycentric(), UniformKind::edgewise(2), UniformKind::edgewise(3)};
  std::vector<Case> cases;
  for (std::size_t n : ns_of(p, {2, 3, 4})) {
    for (std::uint64_t seed : seeds_of(p)) {
      for (std::size_t ki = 0; ki < kinds.size(); ++ki) {
        const UniformKind kind = kinds[ki];
        const bool first = ki == 0;
        cases.push_back({"n=" + std::to_string(n) + " seed=" + std::to_string(seed) + " kind=" + kind.name(),
                         gamma_description(n, seed, p.max_steps) + ", subdivision " + kind.name(),
                         reproduce("thm-uniform", n, seed, p) + " --kinds " + kind.name(),
                         [n, seed, kind, first, max_steps = p.max_steps](CaseContext& ctx) {
                           const Triangulation gamma = gamma_family(n, seed, max_steps);
                           if (first) ctx.structural(gamma, "Gamma");
                           const Triangulation delta = compose(subdivide(identity(gamma.total()), kind), gamma);
                           ctx.structural(delta, kind.name() + "(Gamma)");
                           const FTriangle f = f_triangle(kind, n);
                           ctx.expect_equal("local h of the subdivision vs sum of c_{k,j} l_{F,n,k,j}",
                                            local_h(delta), local_h_via_uniform(f, c_coefficients(gamma)));
                           const IntPolynomial hg = h_polynomial(gamma.total());
                           IntPolynomial expansion;
                           for (std::size_t k = 0; k <= n; ++k) expansion += hg.coeff(k) * p_poly(f, n, k);
                           ctx.expect_equal("h of the subdivision vs sum of h_k(Gamma) p_{F,n,k}",
                                            h_polynomial(delta.total()), expansion);
                         }});
      }
    }
  }
  return cases;
}

std::vector<Case> thm_sd(const SuiteParams& p) {
  std::vector<Case> cases;
  for (std::size_t n : ns_of(p, {2, 3, 4})) {
    for (std::uint64_t seed : seeds_of(p)) {
      cases.push_back({"n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                       gamma_description(n, seed, p.max_steps) + ", subdivision sd",
                       reproduce("thm-sd", n, seed, p), [n, seed, max_steps = p.max_steps](CaseContext& ctx) {
                         const Triangulation gamma = gamma_family(n, seed, max_steps);
                         const Triangulation delta = barycentric(gamma);
                         ctx.structural(delta, "sd(Gamma)");
                         const IntPolynomial ell = local_h(delta);
                         ctx.expect(is_real_rooted(ell), "local h of sd(Gamma) is not real-rooted", to_string(ell));
                         const IntPolynomial a = eulerian(n);
                         const auto w = explain_interlacing(a, ell);
                         ctx.expect(w.verdict == Interlacing::kInterlaces, "A_n does not interlace: " + w.reason,
                                    to_string(a), to_string(ell));
                       }});
    }
  }
  return cases;
}

std::vector<Case> thm_esd(const SuiteParams& p) {
  std::vector<Case> cases;
  for (std::size_t n : ns_of(p, {2, 3, 4})) {
    std::vector<unsigned> rs = p.rs;
    if (rs.empty()) rs = {static_cast<unsigned>(n), static_cast<unsigned>(n + 1), static_cast<unsigned>(n + 2)};
    for (unsigned r : rs) {
      for (std::uint64_t seed : seeds_of(p)) {
        cases.push_back({"n=" + std::to_string(n) + " r=" + std::to_string(r) + " seed=" + std::to_string(seed),
                         gamma_description(n, seed, p.max_steps) + ", subdivision esd:" + std::to_string(r),
                         reproduce("thm-esd", n, seed, p) + " --r " + std::to_string(r),
                         [n, r, seed, max_steps = p.max_steps](CaseContext& ctx) {
                           const Triangulation gamma = gamma_family(n, seed, max_steps);
                           const Triangulation delta = edgewise(gamma, r);
                           ctx.structural(delta, "esd(Gamma)");
                           const IntPolynomial ell = local_h(delta);
                           const bool real = is_real_rooted(ell);
                           if (r >= n) {
                             ctx.expect(real, "local h of esd_r(Gamma) is not real-rooted", to_string(ell));
                             const IntPolynomial e = E_nr(n, r);
                             const auto w = explain_interlacing(e, ell);
                             ctx.expect(w.verdict == Interlacing::kInterlaces,
                                        "E_{n,r} does not interlace: " + w.reason, to_string(e), to_string(ell));
                           }
                         }});
      }
    }
  }
  return cases;
}

std::vector<Case> esd_counterexample(const SuiteParams&) {
  const IntPolynomial expected{0, 7, 42, 63, 42, 7};
  const std::string input = "edgewise(stellar(simplex [6], full face), r = 2)";
  std::vector<Case> cases;
  cases.push_back({"direct", input, "lhv verify esd-counterexample", [=](CaseContext& ctx) {
                     const Face v = simplex_face(6);
                     const Triangulation gamma = stellar(trivial(v), v);
                     ctx.structural(gamma, "Gamma");
                     const Triangulation delta = edgewise(gamma, 2);
                     ctx.structural(delta, "esd_2(Gamma)");
                     const IntPolynomial ell = local_h(delta);
                     ctx.expect_equal("local h of esd_2(Gamma)", ell, expected);
                     ctx.expect(!is_real_rooted(ell), "expected a nonreal root", to_string(ell));
                   }});
  cases.push_back({"via-uniform", input, "lhv verify esd-counterexample", [=](CaseContext& ctx) {
                     const Face v = simplex_face(6);
                     const Triangulation gamma = stellar(trivial(v), v);
                     const IntPolynomial ell =
                         local_h_via_uniform(f_triangle(UniformKind::edgewise(2), 6), c_coefficients(gamma));
                     ctx.expect_equal("sum of c_{k,j} l_{F,6,k,j} for esd_2", ell, expected);
                   }});
  cases.push_back({"veronese-formula", input, "lhv verify esd-counterexample", [=](CaseContext& ctx) {
                     const unsigned r = 2, n = 6;
                     IntPolynomial inner = shift(geometric_sum(n - 1), 1) * pow(geometric_sum(r), n) +
                                           pow(shift(geometric_sum(r - 1), 1), n);
                     ctx.expect_equal("S^r_0((x+..+x^{n-1}) G^n + H^n)", veronese(inner, r, 0), expected);
                   }});
  return cases;
}

std::vector<Case> cor_2sd(const SuiteParams& p) {
  std::vector<std::size_t> ns = ns_of(p, {1, 2, 3, 4});
  if (p.include_large && std::find(ns.begin(), ns.end(), 5) == ns.end()) ns.push_back(5);
  std::vector<Case> cases;
  for (std::size_t n : ns) {
    cases.push_back({"n=" + std::to_string(n), "iterated_sd(" + simplex_description(n) + ", 2)",
                     reproduce_n("cor-2sd", n), [n](CaseContext& ctx) {
                       const Triangulation t = iterated_sd(simplex_face(n), 2);
                       ctx.structural(t, "");
                       ctx.expect_equal("derangement formula vs local h of sd^2", second_sd_local_h(n), local_h(t));
                     }});
  }
  return cases;
}

std::vector<Case> prop_dnkj(const SuiteParams& p) {
  std::vector<Case> cases;
  for (std::size_t n : ns_of(p, range(0, 7))) {
    const std::string in = "n = " + std::to_string(n);
    const std::string rep = reproduce_n("prop-dnkj", n);
    auto add = [&](const std::string& part, std::function<void(CaseContext&)> body) {
      cases.push_back({part + " n=" + std::to_string(n), in, rep, std::move(body)});
    };
    add("pnk", [n](CaseContext& ctx) {
      const FTriangle f = f_triangle(UniformKind::barycentric(), n);
      for (std::size_t k = 0; k <= n; ++k) {
        const std::string at = " at k=" + std::to_string(k);
        const IntPolynomial exc = p_nk(n, k);
        ctx.expect_equal("p_{n,k} by descents vs excedances" + at, p_nk_by_descents(n, k), exc);
        ctx.expect_equal("p_{n,k} by ascents vs excedances" + at, p_nk_by_ascents(n, k), exc);
        ctx.expect_equal("p_poly(sd) vs p_{n,k}" + at, p_poly(f, n, k), exc);
      }
      ctx.expect_equal("p_{n,0} = A_n", p_nk(n, 0), eulerian(n));
      if (n >= 1) ctx.expect_equal("p_{n,n} = x A_n", p_nk(n, n), kX * eulerian(n));
    });
    add("a", [n](CaseContext& ctx) {
      const FTriangle f = f_triangle(UniformKind::barycentric(), n);
      for (std::size_t k = 0; k <= n; ++k)
        ctx.expect_equal("l_{F,n,k} = d_{n,k} at k=" + std::to_string(k), ell_mk(f, n, k), d_nk(n, k));
    });
    add("b", [n](CaseContext& ctx) {
      const FTriangle f = f_triangle(UniformKind::barycentric(), n);
      for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t j = 0; j + k <= n; ++j)
          ctx.expect_equal("l_{F,n,k,j} = d_{n,k,j} at k=" + std::to_string(k) + " j=" + std::to_string(j),
                           ell_mkj(f, n, k, j), d_nkj(n, k, j));
    });
    add("c", [n](CaseContext& ctx) {
      for (std::size_t k = 0; k <= n; ++k) {
        ctx.expect_equal("d_{n,k} via bad points at k=" + std::to_string(k), d_nk_via_bad_points(n, k), d_nk(n, k));
        for (std::size_t j = 0; j <= n; ++j)
          ctx.expect_equal("d_{n,k,j} via bad points at k=" + std::to_string(k) + " j=" + std::to_string(j),
                           d_nkj_via_bad_points(n, k, j), d_nkj(n, k, j));
      }
    });
    if (n >= 1) {
      add("d", [n](CaseContext& ctx) {
        for (std::size_t k = 0; k + 1 <= n; ++k) {
          const std::string at = " at k=" + std::to_string(k);
          ctx.expect_equal("d_{n,k,0} = d_{n,k}" + at, d_nkj(n, k, 0), d_nk(n, k));
          ctx.expect_equal("d_{n,k} = sum_j d_{n-1,k,j}" + at, d_nk(n, k), sum_range(d_table(n - 1)[k], 0, n));
        }
      });
      add("e", [n](CaseContext& ctx) {
        for (std::size_t k = 1; k <= n; ++k) {
          for (std::size_t j = 0; j <= n; ++j) {
            IntPolynomial rhs;
            if (j + k <= n) rhs = d_nkj(n, k - 1, j) - d_nkj(n - 1, k - 1, j);
            else if (j == n - k + 1) rhs = d_nkj(n, k - 1, j);
            else rhs = d_nkj(n, k - 1, j) - d_nkj(n - 1, k - 1, j - 1);
            ctx.expect_equal("three-case recurrence at k=" + std::to_string(k) + " j=" + std::to_string(j),
                             d_nkj(n, k, j), rhs);
          }
        }
      });
      add("f", [n](CaseContext& ctx) {
        for (std::size_t k = 1; k <= n; ++k) {
          const auto& prev = d_table(n - 1)[k - 1];
          for (std::size_t j = n - k + 1; j <= n; ++j)
            ctx.expect_equal("sum formula at k=" + std::to_string(k) + " j=" + std::to_string(j), d_nkj(n, k, j),
                             kX * sum_range(prev, 0, j) + sum_range(prev, j, n));
        }
      });
      add("g", [n](CaseContext& ctx) {
        for (std::size_t k = 1; k <= n; ++k)
          ctx.expect_equal("d_{n,k,n} = x d_{n,k-1} at k=" + std::to_string(k), d_nkj(n, k, n),
                           kX * d_nk(n, k - 1));
      });
    }
  }
  return cases;
}

std::vector<Case> prop_dnkj_rec(const SuiteParams& p) {
  std::vector<Case> cases;
  for (std::size_t n : ns_of(p, range(1, 7))) {
    if (n == 0) continue;
    const std::string in = "n = " + std::to_string(n);
    const std::string rep = reproduce_n("prop-dnkj-rec", n);
    cases.push_back({"a n=" + std::to_string(n), in, rep, [n](CaseContext& ctx) {
                       for (std::size_t k = 0; k + 1 <= n; ++k) {
                         const auto& prev = d_table(n - 1)[k];
                         for (std::size_t j = 0; j <= n; ++j) {
                           IntPolynomial rhs;
                           if (j + k <= n)
                             rhs = kX * sum_range(prev, 0, j) + sum_range(prev, j, n);
                           else
                             rhs = kX * sum_range(prev, 0, j - 1) + IntPolynomial{1, 1} * prev[j - 1] +
                                   sum_range(prev, j, n);
                           ctx.expect_equal("recurrence at k=" + std::to_string(k) + " j=" + std::to_string(j),
                                            d_nkj(n, k, j), rhs);
                         }
                       }
                     }});
    cases.push_back({"b n=" + std::to_string(n), in, rep, [n](CaseContext& ctx) {
                       const auto& prev = d_table(n - 1)[n - 1];
                       ctx.expect_equal("d_{n,n,0} = sum_{i>=1} d_{n-1,n-1,i}", d_nkj(n, n, 0),
                                        sum_range(prev, 1, n));
                       for (std::size_t j = 1; j <= n; ++j)
                         ctx.expect_equal("recurrence at j=" + std::to_string(j), d_nkj(n, n, j),
                                          kX * sum_range(prev, 0, j) + sum_range(prev, j, n));
                     }});
  }
  return cases;
}

std::vector<Case> thm_dnkj(const SuiteParams& p) {
  std::vector<Case> cases;
  for (std::size_t n : ns_of(p, range(0, 6))) {
    for (std::size_t k = 0; k <= n; ++k) {
      cases.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k), "d_{n,k,j}, 0 <= j <= n",
                       reproduce_n("thm-dnkj", n), [n, k](CaseContext& ctx) {
                         const auto& row = d_table(n)[k];
                         for (std::size_t j = 0; j <= n; ++j)
                           ctx.expect(is_real_rooted(row[j]), "d_{n,k,j} not real-rooted at j=" + std::to_string(j),
                                      to_string(row[j]));
                         for (std::size_t a = 0; a <= n; ++a)
                           for (std::size_t b = a + 1; b <= n; ++b)
                             ctx.expect(interlaces(row[a], row[b]),
                                        "d_{n,k," + std::to_string(a) + "} does not interlace d_{n,k," +
                                            std::to_string(b) + "}",
                                        to_string(row[a]), to_string(row[b]));
                         ctx.expect(is_interlacing_sequence(row), "sequence check disagrees with pairwise check");
                         const IntPolynomial a = eulerian(n);
                         for (std::size_t j = 0; j + k <= n; ++j)
                           ctx.expect(interlaces(a, row[j]), "A_n does not interlace d_{n,k,j} at j=" + std::to_string(j),
                                      to_string(a), to_string(row[j]));
                       }});
    }
  }
  return cases;
}

std::vector<Case> prop_esd(const SuiteParams& p) {
  std::vector<unsigned> rs = p.rs;
  if (rs.empty()) rs = {1, 2, 3, 4, 5, 6};
  std::vector<Case> cases;
  for (std::size_t n : ns_of(p, range(0, 5))) {
    for (unsigned r : rs) {
      cases.push_back({"n=" + std::to_string(n) + " r=" + std::to_string(r),
                       "f-triangle of esd:" + std::to_string(r) + " on " + simplex_description(n),
                       reproduce_n("prop-esd", n) + " --r " + std::to_string(r), [n, r](CaseContext& ctx) {
                         const FTriangle f = f_triangle(UniformKind::edgewise(r), n);
                         const IntPolynomial g = geometric_sum(r);
                         const IntPolynomial h = shift(geometric_sum(r - 1), 1);
                         const auto un = static_cast<unsigned>(n);
                         for (std::size_t k = 0; k <= n; ++k) {
                           const auto uk = static_cast<unsigned>(k);
                           const std::string at = " at k=" + std::to_string(k);
                           ctx.expect_equal("p_{F,n,k} = S_0(x^k G^n)" + at, p_poly(f, n, k),
                                            veronese(shift(pow(g, un), k), r, 0));
                           const IntPolynomial base = pow(g, un - uk) * pow(h, uk);
                           ctx.expect_equal("l_{F,n,k} = S_0(G^{n-k} H^k)" + at, ell_mk(f, n, k), veronese(base, r, 0));
                           for (std::size_t j = 0; j + k <= n; ++j)
                             ctx.expect_equal("l_{F,n,k,j} = S_0(x^j G^{n-k} H^k)" + at + " j=" + std::to_string(j),
                                              ell_mkj(f, n, k, j), veronese(shift(base, j), r, 0));
                         }
                         if (n >= 1) ctx.expect_equal("E_{n,r} = h_F(sigma_n)", h_uniform(f, n), E_nr(n, r));
                       }});
    }
  }
  return cases;
}

std::vector<Case> prop_lnkj(const SuiteParams& p) {
  std::vector<UniformKind> kinds = p.kinds;
  if (kinds.empty())
    kinds = {UniformKind::barycentric(), UniformKind::edgewise(2), UniformKind::edgewise(3), UniformKind::edgewise(4)};
  std::vector<Case> cases;
  for (const auto& kind : kinds) {
    for (std::size_t m : ns_of(p, range(0, 6))) {
      cases.push_back({"kind=" + kind.name() + " m=" + std::to_string(m),
                       "f-triangle of " + kind.name() + " on " + simplex_description(m),
                       reproduce_n("prop-lnkj", m) + " --kinds " + kind.name(), [kind, m](CaseContext& ctx) {
                         const FTriangle f = f_triangle(kind, m);
                         auto ell = [&](std::size_t mm, std::size_t k, std::size_t j) { return ell_mkj(f, mm, k, j); };
                         std::vector<IntPolynomial> local;
                         for (std::size_t j = 0; j <= m; ++j)
                           local.push_back(local_h(subdivide(trivial(simplex_face(j)), kind)));
                         for (std::size_t k = 0; k <= m; ++k) {
                           const std::string at = " at k=" + std::to_string(k);
                           ctx.expect_equal("l_{F,m,k} alternating vs nonnegative form" + at, ell_mk(f, m, k),
                                            ell_mk_from_local(local, m, k));
                           ctx.expect_equal("p reciprocity" + at, reverse(p_poly(f, m, k), m), p_poly(f, m, m - k));
                           if (k >= 1)
                             ctx.expect_equal("p recurrence" + at, p_poly(f, m, k),
                                              p_poly(f, m, k - 1) + kXMinus1 * p_poly(f, m - 1, k - 1));
                           ctx.expect_equal("(c)" + at, ell(m, k, 0), ell_mk(f, m, k));
                           for (std::size_t j = 0; j + k <= m; ++j) {
                             const std::string atj = at + " j=" + std::to_string(j);
                             const IntPolynomial v = ell(m, k, j);
                             ctx.expect(has_nonnegative_coefficients(v), "(a) negative coefficient" + atj, to_string(v));
                             ctx.expect_equal("(b)" + atj, reverse(v, m), ell(m, k, m - k - j));
                             if (k == 0) ctx.expect_equal("(d)" + atj, v, p_poly(f, m, j));
                             if (j >= 1) ctx.expect_equal("(e)" + atj, v, ell(m, k, j - 1) + kXMinus1 * ell(m - 1, k, j - 1));
                             if (k >= 1) ctx.expect_equal("(f)" + atj, v, ell(m, k - 1, j) - ell(m - 1, k - 1, j));
                           }
                         }
                       }});
    }
  }
  return cases;
}

std::vector<Case> foata_suite(const SuiteParams& p) {
  std::vector<Case> cases;
  for (std::size_t n : ns_of(p, range(1, 8))) {
    cases.push_back({"n=" + std::to_string(n), "all of S_" + std::to_string(n), reproduce_n("foata", n),
                     [n](CaseContext& ctx) {
                       std::set<std::vector<int>> images;
                       std::size_t reported = 0;
                       for_each_permutation(n, [&](const Permutation& w) {
                         const Permutation v = foata(w);
                         images.insert(v.word());
                         const bool a = excedances(w) == ascents(v);
                         const bool b = fixed_points(w) == bad_points(v);
                         const bool c = n == 0 || w.inverse()(1) == v(n);
                         if ((!a || !b || !c) && reported++ < 5)
                           ctx.fail(std::string("property ") + (!a ? "(a)" : !b ? "(b)" : "(c)") + " fails",
                                    to_string(w), to_string(v));
                       });
                       std::size_t total = 1;
                       for (std::size_t i = 2; i <= n; ++i) total *= i;
                       ctx.expect(images.size() == total, "not a bijection", std::to_string(images.size()),
                                  std::to_string(total));
                     }});
  }
  return cases;
}

std::vector<Case> structural_suite(const SuiteParams& p) {
  std::vector<Case> cases;
  for (std::size_t n : ns_of(p, {1, 2, 3, 4})) {
    for (std::uint64_t seed : seeds_of(p)) {
      cases.push_back({"n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                       gamma_description(n, seed, p.max_steps), reproduce("structural", n, seed, p),
                       [n, seed, max_steps = p.max_steps](CaseContext& ctx) {
                         const Triangulation gamma = gamma_family(n, seed, max_steps);
                         ctx.structural(gamma, "Gamma");
                         const Triangulation sd = barycentric(gamma);
                         ctx.structural(sd, "sd(Gamma)");
                         ctx.expect(is_flag(sd.total()), "sd(Gamma) is not flag");

                         for (const Triangulation* t : {&gamma, &sd}) {
                           for (const auto& g : t->total().faces())
                             for (Vertex v : g)
                               ctx.expect(carrier(*t, face_without(g, v)).is_subset_of(carrier(*t, g)),
                                          "carrier not monotone at " + to_string(g));
                         }
                         for (const auto& f : gamma.base().faces()) {
                           const Triangulation rf = restriction(gamma, f);
                           for (const auto& f2 : rf.base().faces()) {
                             const Triangulation a = restriction(rf, f2);
                             const Triangulation b = restriction(gamma, f2);
                             ctx.expect(a == b, "restriction does not compose at " + to_string(f) + " > " + to_string(f2));
                           }
                         }

                         std::size_t sd_expected = 0;
                         for (const auto& h : gamma.total().facets()) {
                           std::size_t fact = 1;
                           for (std::size_t i = 2; i <= h.size(); ++i) fact *= i;
                           sd_expected += fact;
                         }
                         ctx.expect(sd.total().facets().size() == sd_expected, "sd facet count",
                                    std::to_string(sd.total().facets().size()), std::to_string(sd_expected));
                         for (unsigned r = 1; r <= 4; ++r) {
                           const Triangulation e = edgewise(gamma, r);
                           std::size_t expected = 0;
                           for (const auto& h : gamma.total().facets()) {
                             std::size_t pw = 1;
                             for (std::size_t i = 1; i < h.size(); ++i) pw *= r;
                             expected += pw;
                           }
                           ctx.expect(e.total().facets().size() == expected,
                                      "esd_" + std::to_string(r) + " facet count",
                                      std::to_string(e.total().facets().size()), std::to_string(expected));
                           if (r == 2) ctx.structural(e, "esd_2(Gamma)");
                         }

                         std::mt19937_64 rng(seed);
                         for (int trial = 0; trial < 2; ++trial) {
                           std::vector<Vertex> order = gamma.total().vertices();
                           std::shuffle(order.begin(), order.end(), rng);
                           const Triangulation e = edgewise(gamma, 3, order);
                           ctx.expect(e.total().f_vector() == edgewise(gamma, 3).total().f_vector(),
                                      "esd_3 f-vector depends on the vertex order");
                           validate(e);
                         }
                       }});
    }
    for (const UniformKind kind : {UniformKind::barycentric(), UniformKind::edgewise(2), UniformKind::edgewise(3)}) {
      cases.push_back({"uniform n=" + std::to_string(n) + " kind=" + kind.name(),
                       kind.name() + " of " + simplex_description(n), reproduce_n("structural", n),
                       [n, kind](CaseContext& ctx) {
                         const Triangulation t = subdivide(trivial(simplex_face(n)), kind);
                         ctx.structural(t, kind.name());
                         for (const auto& f : t.base().faces()) {
                           const FTriangle got = f_triangle_of(restriction(t, f));
                           const FTriangle want = f_triangle(kind, f.size());
                           ctx.expect(got == want, "restriction to " + to_string(f) + " has a different f-triangle");
                         }
                       }});
    }
  }
  return cases;
}

using SuiteFn = std::vector<Case> (*)(const SuiteParams&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"thm-uniform", thm_uniform}, {"thm-sd", thm_sd},
      {"thm-esd", thm_esd},         {"esd-counterexample", esd_counterexample},
      {"cor-2sd", cor_2sd},         {"prop-dnkj", prop_dnkj},
      {"prop-dnkj-rec", prop_dnkj_rec}, {"thm-dnkj", thm_dnkj},
      {"prop-esd", prop_esd},       {"prop-lnkj", prop_lnkj},
      {"foata", foata_suite},       {"structural", structural_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifySuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  for (const auto& [suite, fn] : registry())
    if (suite == name) return run_cases(name, fn(params), params.jobs);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

Triangulation gamma_family(std::size_t n, std::uint64_t seed, std::size_t max_steps) {
  return random_triangulation(simplex_face(n), static_cast<std::size_t>(seed % (max_steps + 1)), seed);
}

std::string gamma_description(std::size_t n, std::uint64_t seed, std::size_t max_steps) {
  return "random_triangulation([" + std::to_string(n) + "], steps=" + std::to_string(seed % (max_steps + 1)) +
         ", seed=" + std::to_string(seed) + ")";
}

std::vector<CaseFailure> structural_check(const Triangulation& t, const std::string& key, const std::string& input) {
  std::vector<CaseFailure> out;
  auto fail = [&](const std::string& what, const std::string& lhs = "", const std::string& rhs = "") {
    out.push_back({key, input, lhs, rhs, "structural: " + what, ""});
  };
  try {
    validate(t);
  } catch (const InvalidTriangulation& e) {
    fail(e.what());
    return out;
  }
  if (t.base().facets().size() != 1) return out;
  const std::size_t n = t.base().vertices().size();
  const IntPolynomial ell = local_h(t);
  if (!is_symmetric(ell, n)) fail("local h-polynomial is not symmetric about n/2", to_string(ell));
  if (!has_nonnegative_coefficients(ell)) fail("local h-polynomial has a negative coefficient", to_string(ell));
  const IntPolynomial direct = local_h_direct(t);
  if (!(direct == ell)) fail("local h via restrictions differs", to_string(direct), to_string(ell));
  const IntPolynomial h = h_polynomial(t.total());
  const IntPolynomial back = h_from_local(t);
  if (!(h == back)) fail("h differs from the sum of local h-polynomials", to_string(h), to_string(back));
  return out;
}

std::string render_report_text(const VerifySuiteReport& r, bool timing) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures, "
      << r.structural_checks << " structural checks";
  if (timing) out << ", " << r.wall_seconds << " s";
  out << "\n";
  for (const auto& f : r.failures) {
    out << "FAIL [" << f.key << "] " << f.detail << "\n";
    out << "  input: " << f.input << "\n";
    if (!f.lhs.empty()) out << "  lhs: " << f.lhs << "\n";
    if (!f.rhs.empty()) out << "  rhs: " << f.rhs << "\n";
    if (!f.reproduce.empty()) out << "  reproduce: " << f.reproduce << "\n";
  }
  out << (r.ok() ? "PASS" : "FAIL") << " " << r.suite << "\n";
  return out.str();
}

Json render_report_json(const VerifySuiteReport& r, bool timing) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"key", f.key},
                            {"input", f.input},
                            {"lhs", f.lhs},
                            {"rhs", f.rhs},
                            {"detail", f.detail},
                            {"reproduce", f.reproduce}});
  Json out{{"suite", r.suite},
           {"cases", r.cases},
           {"structural_checks", r.structural_checks},
           {"failures", std::move(failures)},
           {"ok", r.ok()}};
  if (timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

}  // namespace lhv
