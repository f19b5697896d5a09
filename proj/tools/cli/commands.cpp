// Copyright 2026 The ghzlhv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ghzlhv/errors.hpp"
#include "ghzlhv/grid_io.hpp"
#include "ghzlhv/lhv_model.hpp"
#include "ghzlhv/lp.hpp"
#include "ghzlhv/nonlocality_demos.hpp"
#include "ghzlhv/optimizer.hpp"
#include "ghzlhv/quantum_model.hpp"
#include "ghzlhv/serialization.hpp"
#include "ghzlhv/settings.hpp"
#include "json.hpp"

namespace ghz::cli {
namespace {

enum class Format { kTable, kJson, kCsv };

struct RunConfig {
  std::string grid_file;
  std::vector<std::string> party_angles;
  std::vector<std::size_t> counts;
  std::size_t parties = 0;
  std::uint64_t seed = 1;
  std::size_t restarts = 30;
  std::size_t samples = 1000;
  std::size_t max_iterations = 2000;
  std::size_t lp_iterations = SimplexOptions{}.max_iterations;
  double tolerance = 1e-6;
  Format format = Format::kTable;
  std::string out_path;
  std::string grid_out;
  std::string dump_lp;
  bool certificate = false;
  DedupMode dedup = DedupMode::kEvenFlips;
  unsigned threads = 0;
  bool preset2 = false;
  bool preset3 = false;
  bool preset444 = false;
  bool preset5 = false;
  std::string demo;
  bool classical = false;
};

std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

std::string join_counts(const std::vector<std::size_t>& counts) {
  std::string s;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    s += (i ? " " : "") + std::to_string(counts[i]);
  }
  return s;
}

std::string join_angles(const std::vector<double>& angles) {
  std::string s;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    s += (i ? " " : "") + format_angle(angles[i]);
  }
  return s;
}

std::string row(const std::string& key, const std::string& value) {
  std::ostringstream s;
  s << std::left << std::setw(14) << key << value << '\n';
  return s.str();
}

std::size_t enumeration_cap() {
  const char* raw = std::getenv(kEnumCapVariable);
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  char* end = nullptr;
  errno = 0;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (errno != 0 || *end != '\0' || raw[0] == '-' || v == 0 || v > 62) {
    throw InputError(std::string(kEnumCapVariable) + " must be an integer in [1, 62], got '" +
                     raw + "'");
  }
  return v;
}

SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions opts;
  opts.basis = BasisOptions{cfg.dedup, enumeration_cap()};
  opts.solver.max_iterations = cfg.lp_iterations;
  opts.threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  return opts;
}

SettingsGrid resolve_grid(const RunConfig& cfg) {
  const int sources = !cfg.grid_file.empty() + !cfg.party_angles.empty() + cfg.preset2 + cfg.preset5;
  if (sources != 1) {
    throw InputError("give exactly one grid source: --grid, --party, --paper-2 or --paper-5");
  }
  if (cfg.preset2) return mermin_grid();
  if (cfg.preset5) return five_setting_grid();
  if (!cfg.grid_file.empty()) return read_grid_file(cfg.grid_file);
  std::string text;
  for (const auto& p : cfg.party_angles) text += p + '\n';
  std::istringstream in(text);
  return parse_grid(in, "--party");
}

std::vector<std::size_t> resolve_counts(const RunConfig& cfg, bool preset,
                                        std::vector<std::size_t> preset_counts) {
  if (preset) {
    if (!cfg.counts.empty() || cfg.parties) {
      throw InputError("a preset fixes the setting counts; drop --counts/--parties");
    }
    return preset_counts;
  }
  if (cfg.counts.empty()) throw InputError("--counts is required");
  std::vector<std::size_t> counts = cfg.counts;
  if (cfg.parties) {
    if (counts.size() == 1) {
      counts.assign(cfg.parties, counts[0]);
    } else if (counts.size() != cfg.parties) {
      throw InputError("--counts lists " + std::to_string(counts.size()) +
                       " parties but --parties is " + std::to_string(cfg.parties));
    }
  }
  validate_counts(counts);
  return counts;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw InputError("cannot write '" + path + "'");
}

// Structured output goes to --out when given (with the table on stdout),
// otherwise to stdout.
void emit(const RunConfig& cfg, const std::string& structured, const std::string& table,
          std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << structured;
    return;
  }
  write_file(cfg.out_path, structured);
  out << table;
}

std::string strategy_text(const StrategyBasis& basis, std::size_t column) {
  const auto s = StrategyEnumeration(basis.dims, 63).at(basis.representative[column]);
  std::string text;
  for (std::size_t p = 0; p < s.assignments.size(); ++p) {
    if (p) text += ' ';
    for (auto v : s.assignments[p]) text += v > 0 ? '+' : '-';
  }
  return text;
}

// --- visibility --------------------------------------------------------------

std::string visibility_table(const SettingsGrid& grid, const LpProblem& problem,
                             const LpSolution& sol, bool certificate) {
  std::string t;
  t += row("parties", std::to_string(grid.party_count()));
  t += row("settings", join_counts(grid.counts()));
  for (std::size_t p = 0; p < grid.party_count(); ++p) {
    t += row("  party " + std::to_string(p), join_angles(grid.angles(p)));
  }
  t += row("dedup", std::string(to_string(problem.basis->mode)) + " (" +
                        std::to_string(problem.basis->size()) + " columns, " +
                        std::to_string(problem.constraint_count()) + " constraints)");
  t += row("status", to_string(sol.status));
  t += row("iterations", std::to_string(sol.iterations));
  t += row("v_max", fixed9(sol.v_max));
  if (certificate) {
    std::size_t used = 0;
    for (double w : sol.weights) used += w > kCertificateWeightFloor;
    t += row("certificate", std::to_string(used) + " strategies");
    t += "  weight        mult  strategy\n";
    for (std::size_t k = 0; k < sol.weights.size(); ++k) {
      if (sol.weights[k] <= kCertificateWeightFloor) continue;
      std::ostringstream line;
      line << "  " << std::left << std::setw(14) << fixed9(sol.weights[k]) << std::setw(6)
           << problem.basis->multiplicity[k] << strategy_text(*problem.basis, k) << '\n';
      t += line.str();
    }
  }
  return t;
}

int cmd_visibility(const RunConfig& cfg, std::ostream& out) {
  const SettingsGrid grid = resolve_grid(cfg);
  const SearchOptions opts = search_options(cfg);
  const LpProblem problem = build_problem(grid, opts.basis);
  if (!cfg.dump_lp.empty()) {
    std::ostringstream mps;
    write_mps(problem, mps);
    write_file(cfg.dump_lp, mps.str());
  }
  const LpSolution sol = solve_lp(problem, opts.solver);
  const std::string table = visibility_table(grid, problem, sol, cfg.certificate);
  std::string structured;
  switch (cfg.format) {
    case Format::kJson:
      structured = to_json(grid, problem, sol, cfg.certificate);
      break;
    case Format::kCsv: {
      std::ostringstream s;
      write_csv(s, grid, problem, sol, cfg.certificate);
      structured = s.str();
      break;
    }
    case Format::kTable:
      structured = table;
      break;
  }
  emit(cfg, structured, table, out);
  return sol.optimal() ? kOk : kIterationLimit;
}

// --- optimize ----------------------------------------------------------------

std::string optimize_table(const OptimizationReport& r) {
  std::string t;
  t += row("settings", join_counts(r.counts));
  t += row("restarts", std::to_string(r.restarts.size()) + " (seed " +
                           std::to_string(r.config.seed) + ")");
  t += row("lp solves", std::to_string(r.lp_solves));
  t += row("best v_max", fixed9(r.best_v));
  t += row("best restart", std::to_string(r.best_restart));
  for (std::size_t p = 0; p < r.best_grid.party_count(); ++p) {
    t += row("  party " + std::to_string(p), join_angles(r.best_grid.angles(p)));
  }
  t += "  restart  v_max         iterations  converged\n";
  for (std::size_t i = 0; i < r.restarts.size(); ++i) {
    std::ostringstream line;
    line << "  " << std::left << std::setw(9) << i << std::setw(14)
         << fixed9(r.restarts[i].end_value) << std::setw(12) << r.restarts[i].iterations
         << (r.restarts[i].converged ? "yes" : "no") << '\n';
    t += line.str();
  }
  return t;
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out) {
  if (cfg.preset2 && cfg.preset3) throw InputError("--paper-2 and --paper-3 are exclusive");
  const auto counts = resolve_counts(cfg, cfg.preset2 || cfg.preset3,
                                     cfg.preset2 ? std::vector<std::size_t>{2, 2, 2}
                                                : std::vector<std::size_t>{3, 3, 3});
  SimplexConfig sc;
  sc.restarts = cfg.restarts;
  sc.seed = cfg.seed;
  sc.max_iterations = cfg.max_iterations;
  sc.tolerance = cfg.tolerance;
  if (cfg.preset2 || cfg.preset3) sc.restarts = 30;
  sc.validate();
  const auto report = minimize_vmax(counts, sc, search_options(cfg));
  if (!cfg.grid_out.empty()) {
    std::ostringstream g;
    write_grid(g, report.best_grid, "best grid, v_max " + fixed9(report.best_v));
    write_file(cfg.grid_out, g.str());
  }
  const std::string table = optimize_table(report);
  std::string structured;
  switch (cfg.format) {
    case Format::kJson:
      structured = to_json(report);
      break;
    case Format::kCsv: {
      std::ostringstream s;
      write_csv(s, report);
      structured = s.str();
      break;
    }
    case Format::kTable:
      structured = table;
      break;
  }
  emit(cfg, structured, table, out);
  return kOk;
}

// --- scan --------------------------------------------------------------------

std::string scan_table(const ScanReport& r) {
  std::string t;
  t += row("settings", join_counts(r.counts));
  t += row("samples", std::to_string(r.samples) + " (seed " + std::to_string(r.seed) + ")");
  if (r.values.empty()) {
    t += row("v_max", "no samples");
    return t;
  }
  t += row("min", fixed9(r.summary.min));
  t += row("q1", fixed9(r.summary.q1));
  t += row("median", fixed9(r.summary.median));
  t += row("q3", fixed9(r.summary.q3));
  t += row("max", fixed9(r.summary.max));
  t += row("best sample", std::to_string(r.best_sample));
  const auto grid = SettingsGrid::from_flat_angles(r.best_angles, r.counts);
  for (std::size_t p = 0; p < grid.party_count(); ++p) {
    t += row("  party " + std::to_string(p), join_angles(grid.angles(p)));
  }
  return t;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const auto counts = resolve_counts(cfg, cfg.preset444, {4, 4, 4});
  const std::size_t samples = cfg.preset444 ? 9000 : cfg.samples;
  const auto report = random_scan(counts, samples, cfg.seed, search_options(cfg));
  const std::string table = scan_table(report);
  std::string structured;
  switch (cfg.format) {
    case Format::kJson:
      structured = to_json(report);
      break;
    case Format::kCsv: {
      std::ostringstream s;
      write_csv(s, report);
      structured = s.str();
      break;
    }
    case Format::kTable:
      structured = table;
      break;
  }
  emit(cfg, structured, table, out);
  return kOk;
}

// --- demo --------------------------------------------------------------------

const char* setting_name(ParadoxSetting s) { return s == ParadoxSetting::kHalfPi ? "pi/2" : "0"; }

std::string signed_one(int x) { return x > 0 ? "+1" : "-1"; }

std::string constraint_text(const ParadoxConstraint& c) {
  return std::string("A(") + setting_name(c.settings[0]) + ") B(" + setting_name(c.settings[1]) +
         ") C(" + setting_name(c.settings[2]) + ") = " + signed_one(c.product);
}

int demo_ghz(const RunConfig& cfg, std::ostream& out) {
  const ParadoxRecord r = ghz_paradox();
  if (cfg.format == Format::kJson) {
    using Json = nlohmann::ordered_json;
    auto constraint = [](const ParadoxConstraint& c) {
      Json settings = Json::array();
      for (auto s : c.settings) settings.push_back(setting_name(s));
      return Json{{"settings", settings}, {"product", c.product}};
    };
    Json j;
    j["kind"] = "demo-ghz";
    j["premises"] = Json::array();
    for (const auto& p : r.premises) j["premises"].push_back(constraint(p));
    j["derived_product"] = r.derived_product;
    j["quantum"] = constraint(r.quantum);
    j["premise_solutions"] = r.premise_solutions;
    j["premise_solutions_matching"] = r.premise_solutions_matching;
    j["satisfying_assignments"] = r.satisfying_assignments;
    j["total_assignments"] = r.total_assignments;
    j["contradiction"] = r.contradiction();
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "perfect correlations, E = sin(phiA + phiB + phiC):\n";
  for (const auto& p : r.premises) out << "  " << constraint_text(p) << '\n';
  out << "product of the three, each X(0) squared to 1:\n";
  out << "  A(pi/2) B(pi/2) C(pi/2) = " << signed_one(r.derived_product) << '\n';
  out << "  holds in " << r.premise_solutions_matching << " of " << r.premise_solutions
      << " assignments meeting the three\n";
  out << "quantum prediction:\n";
  out << "  " << constraint_text(r.quantum) << '\n';
  out << "assignments meeting all four: " << r.satisfying_assignments << " of "
      << r.total_assignments << '\n';
  out << "derived " << signed_one(r.derived_product) << ", quantum "
      << signed_one(r.quantum.product) << ", "
      << (r.contradiction() ? "contradiction" : "consistent") << '\n';
  return kOk;
}

int demo_chsh(const RunConfig& cfg, std::ostream& out) {
  using Json = nlohmann::ordered_json;
  if (cfg.classical) {
    const auto all = all_chsh_assignments();
    if (cfg.format == Format::kJson) {
      Json j;
      j["kind"] = "demo-chsh-classical";
      j["assignments"] = Json::array();
      for (const auto& x : all) {
        j["assignments"].push_back(
            Json{{"a1", x.a1}, {"a2", x.a2}, {"b1", x.b1}, {"b2", x.b2},
                 {"s", chsh_combination(x)}});
      }
      out << j.dump(2) << '\n';
      return kOk;
    }
    out << "a1 a2 b1 b2   a1b1 + a1b2 + a2b1 - a2b2\n";
    int largest = 0;
    for (const auto& x : all) {
      const int s = chsh_combination(x);
      largest = std::max(largest, std::abs(s));
      char line[64];
      std::snprintf(line, sizeof line, "%+d %+d %+d %+d   %+d\n", x.a1, x.a2, x.b1, x.b2, s);
      out << line;
    }
    out << "max |S| over " << all.size() << " assignments: " << largest << '\n';
    return kOk;
  }
  const auto grid = chsh_grid();
  const auto t = correlation_tensor(grid, Visibility::pure());
  const auto& e = t.values();
  const ChshCheck check = chsh_bound_check(e[0], e[1], e[2], e[3]);
  const auto lp = critical_visibility(grid);
  if (cfg.format == Format::kJson) {
    Json j;
    j["kind"] = "demo-chsh";
    j["a"] = grid.angles(0);
    j["b"] = grid.angles(1);
    j["correlations"] = e;
    j["s"] = check.s;
    j["bound"] = 2;
    j["violated"] = !check.satisfied;
    j["critical_visibility"] = lp.v_max;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "E(a, b) = cos(a + b), a in {0, pi/2}, b in {-pi/4, pi/4}\n";
  out << "  E11 " << fixed9(e[0]) << "  E12 " << fixed9(e[1]) << '\n';
  out << "  E21 " << fixed9(e[2]) << "  E22 " << fixed9(e[3]) << '\n';
  out << "S = E11 + E12 + E21 - E22 = " << fixed9(check.s) << '\n';
  out << "local bound |S| <= 2: " << (check.satisfied ? "satisfied" : "violated") << '\n';
  out << "critical visibility " << fixed9(lp.v_max) << ", times S " << fixed9(lp.v_max * check.s)
      << '\n';
  return kOk;
}

int cmd_demo(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::kCsv) throw InputError("demo supports --format table or json");
  if (cfg.demo == "ghz") {
    if (cfg.classical) throw InputError("--classical applies to demo chsh");
    return demo_ghz(cfg, out);
  }
  return demo_chsh(cfg, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Critical visibility of GHZ correlations against local hidden variables",
               "ghzlhv"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"table", Format::kTable}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  const std::map<std::string, DedupMode> modes{{"even-flips", DedupMode::kEvenFlips},
                                               {"fix-last-party", DedupMode::kFixLastParty},
                                               {"none", DedupMode::kNone}};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "Write the formatted result to PATH");
  };
  auto add_basis = [&](CLI::App* sub) {
    sub->add_option("--dedup", cfg.dedup, "Strategy column set")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    sub->add_option("--lp-iterations", cfg.lp_iterations, "Simplex pivot limit per LP")
        ->check(CLI::PositiveNumber);
  };
  auto add_counts = [&](CLI::App* sub) {
    sub->add_option("--counts", cfg.counts, "Settings per party");
    sub->add_option("--parties", cfg.parties, "Party count; repeats a single --counts value");
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  };

  auto* vis = app.add_subcommand("visibility", "Critical visibility of a fixed grid");
  vis->add_option("--grid", cfg.grid_file, "Grid file, one line of angles per party");
  vis->add_option("--party", cfg.party_angles, "Angles of one party (repeat per party)");
  vis->add_flag("--paper-2", cfg.preset2, "Two settings per party: {0, pi/2}");
  vis->add_flag("--paper-5", cfg.preset5, "The five-setting grid");
  vis->add_flag("--certificate", cfg.certificate, "Print the optimal local mixture");
  vis->add_option("--dump-lp", cfg.dump_lp, "Write the LP in MPS format");
  add_basis(vis);
  add_output(vis);

  auto* opt = app.add_subcommand("optimize", "Minimize the critical visibility over angles");
  add_counts(opt);
  opt->add_option("--restarts", cfg.restarts, "Nelder-Mead restarts");
  opt->add_option("--max-iterations", cfg.max_iterations, "Iterations per restart");
  opt->add_option("--tolerance", cfg.tolerance, "Simplex spread tolerance");
  opt->add_option("--grid-out", cfg.grid_out, "Write the best grid to FILE");
  opt->add_flag("--paper-2", cfg.preset2, "Counts 2 2 2, 30 restarts");
  opt->add_flag("--paper-3", cfg.preset3, "Counts 3 3 3, 30 restarts");
  add_basis(opt);
  add_output(opt);

  auto* scan = app.add_subcommand("scan", "Critical visibility at random grids");
  add_counts(scan);
  scan->add_option("--samples", cfg.samples, "Number of random grids");
  scan->add_flag("--paper-4x4x4", cfg.preset444, "Counts 4 4 4, 9000 samples");
  add_basis(scan);
  add_output(scan);

  auto* demo = app.add_subcommand("demo", "GHZ paradox and CHSH demonstrations");
  demo->add_option("which", cfg.demo, "ghz or chsh")
      ->required()
      ->check(CLI::IsMember({"ghz", "chsh"}));
  demo->add_flag("--classical", cfg.classical, "List all deterministic CHSH values");
  demo->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (vis->parsed()) return cmd_visibility(cfg, out);
    if (opt->parsed()) return cmd_optimize(cfg, out);
    if (scan->parsed()) return cmd_scan(cfg, out);
    return cmd_demo(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << " (raise it with " << kEnumCapVariable << ")\n";
    return kCapExceeded;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kIterationLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace ghz::cli
