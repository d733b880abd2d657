// lhv: local h-polynomials of simplex triangulations from the command line.
//
// Exit codes: 0 success, 1 a verification suite reported failures,
// 2 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lhv/complex.hpp"
#include "lhv/io.hpp"
#include "lhv/localh.hpp"
#include "lhv/perm.hpp"
#include "lhv/realroot.hpp"
#include "lhv/tables.hpp"
#include "lhv/triangulate.hpp"
#include "lhv/verify.hpp"

namespace {

using namespace lhv;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::string config_path;
  Config config;

  const std::string& fmt() const { return format.empty() ? config.format : format; }
};

// "3", "1..20", "2,3,5..7"
template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  auto number = [&](const std::string& s) -> T {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || s[0] == '-') throw UsageError("not a nonnegative integer: '" + s + "'");
    return static_cast<T>(v);
  };
  while (std::getline(in, item, ',')) {
    if (auto dots = item.find(".."); dots != std::string::npos) {
      const T lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
      if (lo > hi) throw UsageError("empty range '" + item + "'");
      for (T v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(number(item));
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

Face simplex_face(std::size_t n) {
  std::vector<Vertex> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(static_cast<Vertex>(i));
  return Face(std::move(v));
}

Face parse_face(const std::string& text) {
  std::vector<Vertex> v;
  for (auto x : parse_list<std::size_t>(text)) v.push_back(static_cast<Vertex>(x));
  try {
    return Face(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

IntPolynomial parse_poly_arg(const std::string& text) {
  try {
    return parse_polynomial(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("cannot parse polynomial '" + text + "': " + e.what());
  }
}

UniformKind parse_kind(const std::string& text) {
  try {
    return UniformKind::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Triangulation load_input(const std::string& path, std::optional<std::size_t> simplex) {
  if (!path.empty() && simplex) throw UsageError("--input and --simplex are exclusive");
  if (simplex) return trivial(simplex_face(*simplex));
  if (path.empty()) throw UsageError("an input triangulation is required (--input or --simplex)");
  if (path == "-") return triangulation_from_json(Json::parse(std::cin));
  return triangulation_from_json(read_json_file(path));
}

void print_poly(const Globals& g, const IntPolynomial& p) {
  if (g.fmt() == "json") std::cout << to_json(p).dump() << "\n";
  else std::cout << to_string(p) << "\n";
}

void check_bound(const Globals& g, std::size_t n) {
  if (n > g.config.enumeration_bound)
    throw UsageError("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                     std::to_string(g.config.enumeration_bound));
}

// ---------------------------------------------------------------------------

struct TablesArgs {
  int which = 1;
  std::size_t n = 4;
};

int run_tables(const Globals& g, const TablesArgs& a) {
  if (a.n > 8) throw UsageError("tables are limited to n <= 8");
  const PolyTable t = build_table(a.which, a.n);
  if (g.fmt() == "csv") std::cout << render_csv(t);
  else if (g.fmt() == "json") std::cout << render_json(t).dump(2) << "\n";
  else std::cout << render_text(t);
  return 0;
}

struct LocalhArgs {
  std::string input;
  std::optional<std::size_t> simplex;
  std::string via_uniform;
  bool emit_c = false;
};

int run_localh(const Globals& g, const LocalhArgs& a) {
  const Triangulation t = load_input(a.input, a.simplex);
  if (a.emit_c) {
    std::cout << to_json(c_coefficients(t)).dump() << "\n";
    return 0;
  }
  if (!a.via_uniform.empty()) {
    if (t.base().facets().size() != 1) throw UsageError("--via-uniform needs a triangulation of a simplex");
    const UniformKind kind = parse_kind(a.via_uniform);
    print_poly(g, local_h_via_uniform(f_triangle(kind, t.base().vertices().size()), c_coefficients(t)));
    return 0;
  }
  print_poly(g, local_h(t));
  return 0;
}

struct SubdivideArgs {
  std::string kind = "sd";
  unsigned r = 2;
  std::string input;
  std::optional<std::size_t> simplex;
  unsigned iterate = 1;
  std::string face;
  std::size_t steps = 6;
  std::string output;
};

int run_subdivide(const Globals& g, const SubdivideArgs& a) {
  Triangulation t = load_input(a.input, a.simplex);
  for (unsigned i = 0; i < a.iterate; ++i) {
    if (a.kind == "sd") {
      t = barycentric(t);
    } else if (a.kind == "esd") {
      if (a.r == 0) throw UsageError("--r must be positive");
      t = edgewise(t, a.r);
    } else if (a.kind == "stellar") {
      const Face f = a.face.empty() ? Face(t.total().facets().front()) : parse_face(a.face);
      if (!t.total().contains(f) || f.empty()) throw UsageError(to_string(f) + " is not a face of the input");
      t = stellar(t, f);
    } else if (a.kind == "random") {
      t = compose(random_triangulation(Face(t.total().vertices()), a.steps, g.seed + i), t);
    } else {
      throw UsageError("unknown kind '" + a.kind + "'");
    }
  }
  const std::string text = to_json(t).dump(g.fmt() == "json" ? -1 : 2) + "\n";
  if (a.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.output);
    if (!out) throw UsageError("cannot write " + a.output);
    out << text;
  }
  return 0;
}

std::string interval_text(const IsolatingInterval& i) {
  if (i.exact()) return i.lo.get_str();
  return "(" + i.lo.get_str() + ", " + i.hi.get_str() + ")";
}

struct InterlaceArgs {
  std::string f, g;
  bool explain = false;
};

int run_interlace(const Globals& gl, const InterlaceArgs& a) {
  const IntPolynomial f = parse_poly_arg(a.f), g = parse_poly_arg(a.g);
  const InterlacingWitness w = explain_interlacing(f, g);
  const bool ok = w.verdict == Interlacing::kInterlaces;
  if (gl.fmt() == "json") {
    Json out{{"interlaces", ok}};
    if (a.explain) {
      Json roots = Json::array();
      for (std::size_t i = 0; i < w.roots.size(); ++i)
        roots.push_back(Json{{"lo", w.roots[i].lo.get_str()},
                             {"hi", w.roots[i].hi.get_str()},
                             {"mult_f", w.mult_f[i]},
                             {"mult_g", w.mult_g[i]}});
      out["roots"] = std::move(roots);
      out["reason"] = w.reason;
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << (ok ? "true" : "false") << "\n";
  if (a.explain) {
    if (!w.reason.empty()) std::cout << w.reason << "\n";
    for (std::size_t i = 0; i < w.roots.size(); ++i)
      std::cout << "root " << interval_text(w.roots[i]) << "  f:" << w.mult_f[i] << "  g:" << w.mult_g[i] << "\n";
  }
  return 0;
}

struct FtriangleArgs {
  std::string kind = "sd";
  std::size_t n = 3;
  std::string input;
};

int run_ftriangle(const Globals& g, const FtriangleArgs& a) {
  const FTriangle f = a.input.empty() ? f_triangle(parse_kind(a.kind), a.n) : f_triangle_of(load_input(a.input, {}));
  if (g.fmt() == "json") {
    std::cout << to_json(f).dump() << "\n";
    return 0;
  }
  for (std::size_t j = 0; j <= f.n(); ++j) {
    std::cout << "j=" << j << ":";
    for (std::size_t i = 0; i <= j; ++i) std::cout << " " << f(i, j);
    std::cout << "\n";
  }
  return 0;
}

struct StatArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> k, j;
  unsigned r = 1;
};

int run_stat_poly(const Globals& g, const StatArgs& a) {
  check_bound(g, a.n);
  IntPolynomial p;
  auto need_k = [&] {
    if (!a.k) throw UsageError("--k is required for this family");
    if (*a.k > a.n) throw UsageError("--k must not exceed --n");
    return *a.k;
  };
  if (a.family == "A") {
    p = eulerian(a.n);
  } else if (a.family == "D") {
    p = d_nk(a.n, a.n);
  } else if (a.family == "p") {
    p = p_nk(a.n, need_k());
  } else if (a.family == "d") {
    const std::size_t k = need_k();
    if (a.j && *a.j > a.n) throw UsageError("--j must not exceed --n");
    p = a.j ? d_nkj(a.n, k, *a.j) : d_nk(a.n, k);
  } else if (a.family == "E") {
    if (a.r == 0) throw UsageError("--r must be positive");
    p = E_nr(a.n, a.r);
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  print_poly(g, p);
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::string ns, seeds, kinds, rs;
  std::size_t steps = 6;
  bool large = false;
  bool timing = false;
  bool list = false;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  if (a.list || a.suite.empty()) {
    for (const auto& name : suite_names()) std::cout << name << "\n";
    return a.list ? 0 : kExitUsage;
  }
  SuiteParams p;
  if (!a.ns.empty()) p.ns = parse_list<std::size_t>(a.ns);
  if (!a.seeds.empty()) p.seeds = parse_list<std::uint64_t>(a.seeds);
  if (!a.rs.empty()) p.rs = parse_list<unsigned>(a.rs);
  if (!a.kinds.empty()) {
    std::stringstream in(a.kinds);
    std::string item;
    while (std::getline(in, item, ',')) p.kinds.push_back(parse_kind(item));
  }
  for (auto n : p.ns) check_bound(g, n);
  p.max_steps = a.steps;
  p.jobs = g.jobs;
  p.include_large = a.large;
  VerifySuiteReport report;
  try {
    report = run_suite(a.suite, p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (g.fmt() == "json") std::cout << render_report_json(report, a.timing).dump(2) << "\n";
  else std::cout << render_report_text(report, a.timing);
  return report.ok() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local h-polynomials of triangulations of simplices"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for random subdivisions");
  app.add_option("--jobs", g.jobs, "Worker threads for verify")->check(CLI::Range(1, 256));
  app.add_option("--config", g.config_path, "JSON config file");

  TablesArgs tables;
  auto* tables_cmd = app.add_subcommand("tables", "Regenerate the d-polynomial tables");
  tables_cmd->add_option("--which", tables.which, "Table 1, 2 or 3")->check(CLI::IsMember({1, 2, 3}));
  tables_cmd->add_option("--n", tables.n, "Largest n");

  LocalhArgs localh;
  auto* localh_cmd = app.add_subcommand("localh", "Local h-polynomial of a triangulation");
  localh_cmd->add_option("--input", localh.input, "Triangulation JSON ('-' for stdin)");
  localh_cmd->add_option("--simplex", localh.simplex, "Use the trivial triangulation of the simplex on [n]");
  localh_cmd->add_option("--via-uniform", localh.via_uniform,
                         "Local h of KIND applied to the input, from its c-coefficients (sd, esd:R)");
  localh_cmd->add_flag("--emit-c", localh.emit_c, "Print the c-coefficient matrix as JSON");

  SubdivideArgs sub;
  auto* sub_cmd = app.add_subcommand("subdivide", "Subdivide a triangulation and print it as JSON");
  sub_cmd->add_option("--kind", sub.kind, "sd, esd, stellar or random")
      ->check(CLI::IsMember({"sd", "esd", "stellar", "random"}));
  sub_cmd->add_option("--r", sub.r, "Edgewise parameter");
  sub_cmd->add_option("--input", sub.input, "Triangulation JSON ('-' for stdin)");
  sub_cmd->add_option("--simplex", sub.simplex, "Start from the simplex on [n]");
  sub_cmd->add_option("--iterate", sub.iterate, "Apply the subdivision k times");
  sub_cmd->add_option("--face", sub.face, "Stellar face, e.g. 1,2,3 (default: first facet)");
  sub_cmd->add_option("--steps", sub.steps, "Stellar moves for --kind random");
  sub_cmd->add_option("--output", sub.output, "Write to a file instead of stdout");

  InterlaceArgs inter;
  auto* inter_cmd = app.add_subcommand("interlace", "Decide whether f interlaces g");
  inter_cmd->add_option("f", inter.f)->required();
  inter_cmd->add_option("g", inter.g)->required();
  inter_cmd->add_flag("--explain", inter.explain, "Print the isolating intervals");

  FtriangleArgs ft;
  auto* ft_cmd = app.add_subcommand("ftriangle", "f-triangle of a uniform triangulation");
  ft_cmd->add_option("--kind", ft.kind, "trivial, sd or esd:R");
  ft_cmd->add_option("--n", ft.n, "Size");
  ft_cmd->add_option("--input", ft.input, "Read the f-triangle off a triangulation JSON");

  StatArgs stat;
  auto* stat_cmd = app.add_subcommand("stat-poly", "Permutation and word enumerators");
  stat_cmd->add_option("--family", stat.family, "d, p, E, A (Eulerian) or D (derangement)")
      ->required()
      ->check(CLI::IsMember({"d", "p", "E", "A", "D"}));
  stat_cmd->add_option("--n", stat.n)->required();
  stat_cmd->add_option("--k", stat.k);
  stat_cmd->add_option("--j", stat.j);
  stat_cmd->add_option("--r", stat.r);

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  ver_cmd->add_option("suite", ver.suite, "Suite name");
  ver_cmd->add_flag("--list", ver.list, "List suites");
  ver_cmd->add_option("--n", ver.ns, "n values, e.g. 4 or 2..4 or 2,4");
  ver_cmd->add_option("--seeds", ver.seeds, "Seeds, default 1..20");
  ver_cmd->add_option("--steps", ver.steps, "Largest number of stellar moves in random inputs");
  ver_cmd->add_option("--kinds", ver.kinds, "Uniform kinds, e.g. sd,esd:2");
  ver_cmd->add_option("--r", ver.rs, "Edgewise parameters");
  ver_cmd->add_flag("--large", ver.large, "Include the larger optional cases");
  ver_cmd->add_flag("--timing", ver.timing, "Report wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!g.config_path.empty()) g.config = load_config(g.config_path);
    if (*tables_cmd) return run_tables(g, tables);
    if (*localh_cmd) return run_localh(g, localh);
    if (*sub_cmd) return run_subdivide(g, sub);
    if (*inter_cmd) return run_interlace(g, inter);
    if (*ft_cmd) return run_ftriangle(g, ft);
    if (*stat_cmd) return run_stat_poly(g, stat);
    if (*ver_cmd) return run_verify(g, ver);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
