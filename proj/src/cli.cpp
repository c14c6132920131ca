#include "uqrs/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace uqrs {

namespace {

using json = nlohmann::ordered_json;

json instance_json(const InstanceResult& r) {
  return json{{"name", r.name}, {"passed", r.passed}, {"informational", r.informational}, {"detail", r.detail}};
}

json report_json(const RelationReport& r) {
  json instances = json::array();
  for (const auto& inst : r.instances) instances.push_back(instance_json(inst));
  return json{{"id", r.suite},
              {"window", r.window},
              {"passed", r.passed()},
              {"checked", r.checked()},
              {"failures", r.failures()},
              {"instances", instances},
              {"notes", r.notes}};
}

std::string f0_resolution(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports) {
    if (r.suite != "drinfeld_images") continue;
    for (const auto& note : r.notes)
      if (note.rfind("printed readings", 0) == 0) return note;
  }
  return "not exercised in this run (implemented constants: a = (rs)^{(n-2)/2}/(r^{1/2}+s^{1/2}), F0 constant s (rs)^{-(n-2)/2})";
}

}  // namespace

std::pair<int, int> parse_mode_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("mode window must look like lo..hi");
  std::size_t used = 0;
  const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
  const int lo = std::stoi(a, &used);
  if (used != a.size()) throw std::invalid_argument("malformed mode window bound: " + a);
  const int hi = std::stoi(b, &used);
  if (used != b.size()) throw std::invalid_argument("malformed mode window bound: " + b);
  if (lo > hi) throw std::invalid_argument("mode window must satisfy lo <= hi");
  return {lo, hi};
}

ParseOutcome parse_command_line(int argc, const char* const* argv) {
  ParseOutcome out;
  CLI::App app{"Exact verification of the level-one vertex representation of two-parameter U_{r,s}(C_n^(1))"};
  int rank = 2;
  bool symbolic = false;
  std::vector<std::string> numeric;
  std::vector<std::string> suites;
  std::string max_degree, mode_window, report;
  int max_shifts = -1;
  std::uint64_t seed = SuiteConfig{}.seed;
  bool serial = false, list = false, quiet = false;
  app.add_option("--rank", rank, "rank n >= 2")->check(CLI::Range(2, 8));
  auto* sym = app.add_flag("--symbolic", symbolic, "exact symbolic scalars (default)");
  app.add_option("--numeric", numeric, "evaluate at p = p0, q = q0 (r = p^8, s = q^8); rationals as num/den")
      ->expected(2)
      ->excludes(sym);
  app.add_option("--suite", suites, "suite id (repeatable; default all)");
  app.add_option("--max-degree", max_degree, "largest weighted degree of test states (rational)");
  app.add_option("--mode-window", mode_window, "mode range lo..hi");
  app.add_option("--max-shifts", max_shifts, "lattice shifts from the vacuum")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "seed of the randomized checks");
  app.add_option("--report", report, "write the JSON report to this path");
  app.add_flag("--serial", serial, "use the serial reference runner");
  app.add_flag("--list-suites", list, "print the suite ids and exit");
  app.add_flag("--quiet", quiet, "suppress the per-suite summary");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, msg, msg);
    out.exit_code = code == 0 ? kExitPass : kExitConfigError;
    out.message = msg.str();
    return out;
  }
  if (list) {
    for (const auto& id : suite_ids()) out.message += id + "\n";
    out.exit_code = kExitPass;
    return out;
  }
  RunConfig cfg;
  cfg.suite.rank = rank;
  cfg.suite.seed = seed;
  cfg.suite.parallel = !serial;
  cfg.report_path = report;
  cfg.quiet = quiet;
  try {
    if (!numeric.empty()) {
      cfg.suite.numeric = true;
      cfg.suite.p0 = parse_rational(numeric[0]);
      cfg.suite.q0 = parse_rational(numeric[1]);
      if (!NumericField::valid_point(cfg.suite.p0, cfg.suite.q0))
        throw std::invalid_argument("numeric point must satisfy p0 q0 != 0 and p0^8 != +-q0^8");
    }
    if (!max_degree.empty()) {
      cfg.suite.max_degree = parse_rational(max_degree);
      if (sgn(*cfg.suite.max_degree) < 0) throw std::invalid_argument("max degree must be nonnegative");
    }
    if (!mode_window.empty()) cfg.suite.mode_window = parse_mode_window(mode_window);
    if (max_shifts >= 0) cfg.suite.max_shifts = max_shifts;
    for (const auto& id : suites)
      if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end())
        throw std::invalid_argument("unknown suite id: " + id);
  } catch (const std::exception& e) {
    out.exit_code = kExitConfigError;
    out.message = std::string("configuration error: ") + e.what() + "\n";
    return out;
  }
  cfg.suites = suites.empty() ? suite_ids() : suites;
  out.ok = true;
  out.config = cfg;
  return out;
}

RunResult run_batch(const RunConfig& cfg, std::ostream* log) {
  RunResult result;
  const SuiteConfig& sc = cfg.suite;
  json config{{"rank", sc.rank},
              {"scalars", sc.numeric ? "numeric" : "symbolic"},
              {"p0", sc.numeric ? json(to_string(sc.p0)) : json(nullptr)},
              {"q0", sc.numeric ? json(to_string(sc.q0)) : json(nullptr)},
              {"suites", cfg.suites},
              {"max_degree", sc.max_degree ? json(to_string(*sc.max_degree)) : json("suite default")},
              {"mode_window", sc.mode_window ? json(std::to_string(sc.mode_window->first) + ".." +
                                                    std::to_string(sc.mode_window->second))
                                             : json("suite default")},
              {"max_shifts", sc.max_shifts ? json(*sc.max_shifts) : json("suite default")},
              {"seed", std::to_string(sc.seed)},
              {"runner", sc.parallel ? "parallel" : "serial"}};
  json suites = json::array();
  json timings = json::object();
  bool relation_failure = false, crashed = false;
  for (const auto& id : cfg.suites) {
    const auto start = std::chrono::steady_clock::now();
    RelationReport r;
    try {
      r = run_suite(id, sc);
    } catch (const std::exception& e) {
      crashed = true;
      r.suite = id;
      r.add("suite execution", false, std::string("internal error: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    timings[id] = std::to_string(ms) + " ms";
    if (!r.passed()) relation_failure = true;
    if (log && !cfg.quiet)
      *log << (r.passed() ? "PASS " : "FAIL ") << id << "  " << r.checked() - r.failures() << "/" << r.checked()
           << " instances  [" << r.window << "]  " << ms << " ms\n";
    suites.push_back(report_json(r));
    result.reports.push_back(std::move(r));
  }
  json conventions{
      {"mode_offset", "x(k) is the coefficient of z^{-k-1+" + std::to_string(sc.conventions.mode_shift) + "}"},
      {"vertex", describe_conventions(sc)},
      {"f0_variant", f0_resolution(result.reports)}};
  json doc{{"schema", "uqrs-verification-report/1"},
           {"config", config},
           {"conventions", conventions},
           {"passed", !relation_failure && !crashed},
           {"suites", suites},
           {"timings", timings}};
  result.report = doc.dump(2) + "\n";
  result.exit_code = crashed ? kExitInternalError : relation_failure ? kExitRelationFailure : kExitPass;
  if (!cfg.report_path.empty()) {
    std::ofstream f(cfg.report_path);
    if (!f) {
      if (log) *log << "cannot write report to " << cfg.report_path << "\n";
      result.exit_code = kExitInternalError;
    } else {
      f << result.report;
    }
  }
  return result;
}

}  // namespace uqrs
