#pragma once

// Verification suites: each checks one family of exact identities or
// real-rootedness claims on a deterministic set of cases.
//
// Random cases use the family
//   Gamma(n, seed) = random_triangulation([n], seed % (max_steps + 1), seed)
// so a failing seed reproduces with `lhv verify <suite> --seeds <seed>`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lhv/io.hpp"
#include "lhv/triangulate.hpp"

namespace lhv {

struct CaseFailure {
  std::string key;     // case identifier, e.g. "n=3 seed=7 kind=sd"
  std::string input;   // how to rebuild the input
  std::string lhs;
  std::string rhs;
  std::string detail;
  std::string reproduce;  // CLI invocation that reruns just this case
};

struct VerifySuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<CaseFailure> failures;
  /// Triangulations passed through structural_check by this suite.
  std::size_t structural_checks = 0;
  double wall_seconds = 0;

  bool ok() const { return failures.empty(); }
};

struct SuiteParams {
  std::vector<std::size_t> ns;        // empty: suite default
  std::vector<std::uint64_t> seeds;   // empty: 1..20
  std::size_t max_steps = 6;
  std::vector<UniformKind> kinds;     // thm-uniform, default sd, esd:2, esd:3
  std::vector<unsigned> rs;           // thm-esd default {n, n+1, n+2}; prop-esd default 1..6
  std::size_t jobs = 1;
  bool include_large = false;         // cor-2sd: also n = 5
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
VerifySuiteReport run_suite(const std::string& name, const SuiteParams& params);

Triangulation gamma_family(std::size_t n, std::uint64_t seed, std::size_t max_steps);
std::string gamma_description(std::size_t n, std::uint64_t seed, std::size_t max_steps);

/// Carrier and restriction invariants; for a simplex base also symmetry and
/// nonnegativity of the local h-polynomial and the inclusion-exclusion
/// round trip h(T) = sum_F l_F(T_F). Returns the violations found.
std::vector<CaseFailure> structural_check(const Triangulation& t, const std::string& key, const std::string& input);

/// Deterministic text report; wall time only when `timing` is set.
std::string render_report_text(const VerifySuiteReport& r, bool timing = false);
Json render_report_json(const VerifySuiteReport& r, bool timing = false);

}  // namespace lhv
