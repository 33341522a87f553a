#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "expdioph/aux.hpp"
#include "expdioph/equation.hpp"
#include "expdioph/filters.hpp"
#include "expdioph/linform.hpp"
#include "expdioph/report.hpp"
#include "expdioph/search.hpp"

namespace expdioph::cli {

namespace {

struct Config {
  // check
  std::uint64_t a = 0, m = 0, x = 0, y = 0, z = 0;
  // search / verify-aux
  std::string kind;
  std::string aux_id;
  std::optional<std::uint64_t> y_opt;
  std::optional<std::uint64_t> a_max;
  std::optional<std::uint64_t> m_max;
  std::optional<std::uint64_t> exp_max;
  std::optional<std::uint64_t> b_max;
  std::optional<std::uint64_t> base_max;
  unsigned threads = 1;
  std::string checkpoint;
  std::string out_path;
  std::string format = "json";
  int verbosity = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const SearchReport& rep, const Config& cfg, std::ostream& out) {
  const std::string body =
      cfg.format == "csv" ? report_to_csv(rep) : report_to_json(rep).dump(2) + "\n";
  if (cfg.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + cfg.out_path);
  f << body;
}

void summarize(const SearchReport& rep, std::ostream& out) {
  out << "equation: " << rep.equation << "\n"
      << "units: " << rep.units_done << "/" << rep.units_total << "\n"
      << "solutions: " << rep.solutions.size() << "\n";
  for (const auto& t : rep.solutions) {
    out << "  (";
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? ", " : "") << t[i];
    out << ")\n";
  }
  out << "wall_ms: " << rep.wall_ms << "\n";
}

int cmd_check(const Config& c, std::ostream& out) {
  if (c.a < 2) throw UsageError("check requires a >= 2");
  if (c.m < 1 || c.x < 1 || c.y < 1 || c.z < 1) throw UsageError("check requires positive m, x, y, z");
  const Instance inst(c.a, c.m);
  const ExponentTriple e(c.x, c.y, c.z);
  const bool ok = check_family(inst, e);
  out << "(a, m, x, y, z) = (" << c.a << ", " << c.m << ", " << c.x << ", " << c.y << ", " << c.z
      << "): " << (ok ? "solution" : "not a solution") << "\n";
  const auto verdicts = run_pipeline(c.a, c.m, c.x, c.y, c.z);
  for (const auto& v : verdicts) {
    if (c.verbosity > 0 || !v.passed()) {
      out << "  " << (v.passed() ? "pass" : "excluded by") << " " << v.filter << ": " << v.reason << "\n";
    }
  }
  return ok ? kOk : kNotSolution;
}

int cmd_bounds(const Config& c, std::ostream& out, std::ostream& err) {
  nlohmann::json j;
  try {
    j = bounds_to_json(build_bound_set());
  } catch (const std::runtime_error& e) {
    err << "bounds: " << e.what() << "\n";
    return kInternal;
  }
  if (c.out_path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream(c.out_path) << j.dump(2) << "\n";
  }
  return kOk;
}

std::optional<std::string> default_checkpoint(std::uint64_t y) {
  if (const char* dir = std::getenv("EXPDIOPH_CKPT_DIR"); dir != nullptr && *dir != '\0') {
    std::filesystem::create_directories(dir);
    return std::string(dir) + "/theorem_y" + std::to_string(y) + ".jsonl";
  }
  return std::nullopt;
}

int cmd_search(const Config& c, std::ostream& out, std::ostream& err) {
  SearchReport rep;
  if (c.kind == "oracle") {
    if (!c.a_max || !c.m_max || !c.exp_max) throw UsageError("search oracle requires --a-max, --m-max and --exp-max");
    if (*c.a_max < 2 || *c.m_max < 1 || *c.exp_max < 1) throw UsageError("search oracle: empty box");
    const SearchBox box{{2, *c.a_max}, {1, *c.m_max}, {1, *c.exp_max}, {1, *c.exp_max}, {1, *c.exp_max}};
    rep = oracle_report(box);
  } else if (c.kind == "theorem") {
    if (!c.y_opt) throw UsageError("search theorem requires --y");
    const BoundSet& bounds = build_bound_set();
    if (*c.y_opt < 2 || *c.y_opt > bounds.y_cap_final) {
      throw UsageError("--y must lie in [2, " + std::to_string(bounds.y_cap_final) + "]");
    }
    SearchOptions opts;
    opts.threads = c.threads;
    opts.checkpoint = c.checkpoint.empty() ? default_checkpoint(*c.y_opt) : std::optional(c.checkpoint);
    if (c.verbosity > 0) {
      opts.progress = [&err](std::size_t done, std::size_t total) {
        if (done % 64 == 0 || done == total) err << "progress: " << done << "/" << total << "\n";
      };
    }
    rep = theorem_search(bounds, *c.y_opt, opts);
  } else if (c.kind == "corollary") {
    if (!c.b_max) throw UsageError("search corollary requires --b-max");
    if (*c.b_max < 3 || *c.b_max % 2 == 0) throw UsageError("--b-max must be odd and >= 3");
    rep = corollary_report(*c.b_max, c.exp_max.value_or(60));
  } else {
    throw UsageError("unknown search kind: " + c.kind);
  }
  emit(rep, c, out);
  if (!c.out_path.empty()) summarize(rep, out);
  return kOk;
}

int cmd_verify_aux(const Config& c, std::ostream& out) {
  AuxId id;
  try {
    id = parse_aux_id(c.aux_id);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  AuxBox box = default_aux_box(id);
  if (c.exp_max) box.exp_max = *c.exp_max;
  if (c.base_max) box.base_max = *c.base_max;
  const AuxResult r = verify_aux(id, box);
  const SearchReport rep = aux_report(r, box);
  if (!c.out_path.empty()) emit(rep, c, out);
  out << c.aux_id << ": " << r.solutions.size() << " solution(s)\n";
  for (std::size_t i = 0; i < r.solutions.size(); ++i) {
    out << "  (";
    for (std::size_t k = 0; k < r.solutions[i].size(); ++k) out << (k ? ", " : "") << r.solutions[i][k];
    out << ")";
    if (id == AuxId::TrivialEq1) out << "  " << (r.classes[i].empty() ? "UNCLASSIFIED" : r.classes[i]);
    out << "\n";
  }
  out << (r.pass ? "PASS" : "FAIL") << "\n";
  return r.pass ? kOk : kVerifyFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact checks, bound derivation and exhaustive searches for (2am+1)^x + (2m)^y = (2am-1)^z"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* check = app.add_subcommand("check", "Check one tuple exactly and explain filter verdicts");
  check->add_option("a", c.a)->required();
  check->add_option("m", c.m)->required();
  check->add_option("x", c.x)->required();
  check->add_option("y", c.y)->required();
  check->add_option("z", c.z)->required();
  check->add_flag("-v,--verbose", c.verbosity, "Show passing filters too");

  auto* bounds = app.add_subcommand("bounds", "Print the derived search-region constants as JSON");
  bounds->add_option("--out", c.out_path, "Write to file instead of stdout");

  auto* search = app.add_subcommand("search", "Run a search and write a report");
  search->add_option("kind", c.kind, "oracle | theorem | corollary")
      ->required()
      ->check(CLI::IsMember({"oracle", "theorem", "corollary"}));
  search->add_option("--y", c.y_opt, "y for the region search, in [2, 10]");
  search->add_option("--a-max", c.a_max);
  search->add_option("--m-max", c.m_max);
  search->add_option("--exp-max", c.exp_max);
  search->add_option("--b-max", c.b_max);
  search->add_option("--threads", c.threads)->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", c.checkpoint, "JSON Lines checkpoint (default: $EXPDIOPH_CKPT_DIR/theorem_y<y>.jsonl)");
  search->add_option("--out", c.out_path);
  search->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  search->add_flag("-v,--verbose", c.verbosity);

  auto* aux = app.add_subcommand("verify-aux", "Brute-force check of an auxiliary equation");
  aux->add_option("id", c.aux_id, "na53 | pillai35 | le | terai4 | fhyz | trivial-eq1")->required();
  aux->add_option("--exp-max", c.exp_max);
  aux->add_option("--base-max", c.base_max);
  aux->add_option("--out", c.out_path);
  aux->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*check) return cmd_check(c, out);
    if (*bounds) return cmd_bounds(c, out, err);
    if (*search) return cmd_search(c, out, err);
    if (*aux) return cmd_verify_aux(c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace expdioph::cli
