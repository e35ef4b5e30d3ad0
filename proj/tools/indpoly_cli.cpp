// Command-line front end: builds the tree families, runs the engines, and
// emits log-concavity reports, identity checks, growth probes, sweeps, and
// the golden reproduction cases. All payloads are deterministic: fixed key
// order, decimal strings, no timestamps.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "indpoly/analysis.hpp"
#include "indpoly/engines.hpp"
#include "indpoly/io.hpp"
#include "indpoly/poly.hpp"
#include "indpoly/tree.hpp"

namespace {

using namespace indpoly;
using ordered_json = nlohmann::ordered_json;

// One parsed run; each subcommand owns an instance with its own defaults.
struct RunConfig {
  std::string family;
  std::string tree_path;
  std::string engine = "dp";
  std::string format = "text";
  std::string out_path;
  int m = 1;
  int t = 0;
  int k = 0;
  int t_min = 10;
  int t_max = 40;
};

constexpr int kBruteforceBound = 30;

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << payload;
}

// A tree file holds exactly one tree line; blank lines are ignored.
RootedTree load_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tree file: " + path);
  std::string line;
  std::string tree_line;
  size_t tree_lineno = 0;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (tree_lineno != 0)
      throw std::runtime_error(path + ": expected a single tree, found more on line " +
                               std::to_string(lineno));
    tree_line = line;
    tree_lineno = lineno;
  }
  if (tree_lineno == 0) throw std::runtime_error(path + ": no tree found");
  try {
    return parse_tree(tree_line);
  } catch (const TreeParseError& e) {
    std::ostringstream msg;
    msg << path << ":" << tree_lineno << ": " << e.what();
    throw std::runtime_error(msg.str());
  }
}

struct Instance {
  std::optional<FamilySpec> spec;
  RootedTree tree;
};

Instance load_instance(const RunConfig& cfg) {
  if (cfg.family.empty() == cfg.tree_path.empty())
    throw std::runtime_error("exactly one of --family and --tree is required");
  if (!cfg.family.empty()) {
    const FamilySpec spec = parse_family(cfg.family);
    return {spec, build_family(spec)};
  }
  return {std::nullopt, load_tree_file(cfg.tree_path)};
}

DensePolynomial closed_form_for(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Star2:
      return closed_form_S(spec.t);
    case FamilyKind::TFamily:
      return closed_form_T(spec.m, spec.t);
    case FamilyKind::TGFamily:
      return closed_form_TG(spec.m, spec.t);
    case FamilyKind::Path:
      break;
  }
  throw std::runtime_error("closed form is available for the S2, T and TG families only");
}

DensePolynomial run_engine(const Instance& inst, const std::string& engine) {
  if (engine == "closed-form") {
    if (!inst.spec)
      throw std::runtime_error("--engine closed-form requires --family");
    return closed_form_for(*inst.spec);
  }
  if (engine == "bruteforce" && inst.tree.size() > kBruteforceBound) {
    std::ostringstream msg;
    msg << "--engine bruteforce requires at most " << kBruteforceBound
        << " vertices, got " << inst.tree.size();
    throw std::runtime_error(msg.str());
  }
  if (engine == "dp") return indpoly_dp(inst.tree);
  if (engine == "recursive") return indpoly_recursive(inst.tree);
  if (engine == "bruteforce") return indpoly_bruteforce(inst.tree);
  throw std::runtime_error("unknown engine: " + engine);
}

std::string violations_text(const std::vector<int>& violations) {
  std::string text = "{";
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i > 0) text += ",";
    text += std::to_string(violations[i]);
  }
  return text + "}";
}

int cmd_build(const RunConfig& cfg) {
  const FamilySpec spec = parse_family(cfg.family);
  emit(serialize_tree(build_family(spec)) + "\n", cfg.out_path);
  return 0;
}

int cmd_compute(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg);
  const DensePolynomial p = run_engine(inst, cfg.engine);
  std::string payload;
  if (cfg.format == "json") {
    payload = polynomial_to_json(p) + "\n";
  } else {  // text: space-separated decimal coefficients
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
      if (i > 0) payload += ' ';
      payload += p.coeffs()[i].get_str();
    }
    payload += '\n';
  }
  emit(payload, cfg.out_path);
  return 0;
}

int cmd_analyze(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg);
  const DensePolynomial p = run_engine(inst, cfg.engine);
  const LogConcavityReport report = log_concavity_report(p);
  std::string payload;
  if (cfg.format == "json") {
    payload = report_to_json(inst.spec, inst.tree.size(), p, report) + "\n";
  } else {
    std::ostringstream out;
    out << "family: " << (inst.spec ? to_string(*inst.spec)
                                    : "tree(n=" + std::to_string(inst.tree.size()) + ")")
        << "\n";
    out << "degree: " << report.degree << "\n";
    out << "violations: " << violations_text(report.violations) << "\n";
    out << "diffs_sign: " << report.diffs_sign() << "\n";
    out << "unimodal: " << (report.unimodal ? "true" : "false") << "\n";
    out << "mode_index: " << report.mode_index << "\n";
    payload = out.str();
  }
  emit(payload, cfg.out_path);
  return 0;
}

int cmd_identities(const RunConfig& cfg) {
  const IdentityCheck check = check_reflected_identities(cfg.m, cfg.t);
  std::string payload;
  if (cfg.format == "json") {
    ordered_json j;
    j["m"] = cfg.m;
    j["t"] = cfg.t;
    j["star_identity"] = check.star_identity;
    j["t_identity"] = check.t_identity;
    j["tg_identity"] = check.tg_identity;
    j["all_hold"] = check.all_hold();
    if (!check.all_hold()) {
      j["failed_identity"] = check.failed_identity;
      j["first_difference_index"] = check.first_difference_index;
    }
    payload = j.dump() + "\n";
  } else {
    std::ostringstream out;
    out << "reflected-star identity: " << (check.star_identity ? "ok" : "FAILED") << "\n";
    out << "reflected-T identity: " << (check.t_identity ? "ok" : "FAILED") << "\n";
    out << "reflected-TG identity: " << (check.tg_identity ? "ok" : "FAILED") << "\n";
    if (!check.all_hold())
      out << "first differing coefficient of " << check.failed_identity
          << " at index " << check.first_difference_index << "\n";
    payload = out.str();
  }
  emit(payload, cfg.out_path);
  return check.all_hold() ? 0 : 1;
}

int cmd_probe(const RunConfig& cfg) {
  const AsymptoticProbe probe = asymptotic_probe(cfg.m, cfg.k, {cfg.t_min, cfg.t_max});
  std::string payload;
  if (cfg.format == "text") {
    std::ostringstream out;
    out << "m=" << probe.m << " k=" << probe.k
        << " predicted_exponent=" << probe.predicted_exponent << "\n";
    for (size_t i = 0; i < probe.t_values.size(); ++i)
      out << "t=" << probe.t_values[i] << " bits=" << probe.bit_lengths[i]
          << " residual=" << format_residual(probe.residuals[i]) << "\n";
    out << "measured_slope=" << format_residual(probe.measured_slope) << "\n";
    out << "passes=" << (probe.passes() ? "true" : "false") << "\n";
    payload = out.str();
  } else {  // csv
    payload = probe_to_csv(probe);
  }
  emit(payload, cfg.out_path);
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  const SweepResult sweep = theorem_sweep(cfg.m, cfg.t_max);
  std::string payload;
  if (cfg.format == "json") {
    ordered_json j;
    j["m"] = sweep.m;
    auto rows = ordered_json::array();
    for (const SweepRow& row : sweep.rows) {
      ordered_json r;
      r["t"] = row.t;
      r["degree"] = row.degree;
      r["violations"] = row.violations;
      r["matches_pattern"] = row.matches_pattern;
      rows.push_back(std::move(r));
    }
    j["rows"] = rows;
    if (sweep.minimal_t)
      j["minimal_t"] = *sweep.minimal_t;
    else
      j["minimal_t"] = nullptr;
    payload = j.dump() + "\n";
  } else if (cfg.format == "csv") {
    std::string csv = "t,degree,violations,matches_pattern\n";
    for (const SweepRow& row : sweep.rows) {
      csv += std::to_string(row.t) + "," + std::to_string(row.degree) + ",";
      for (size_t i = 0; i < row.violations.size(); ++i) {
        if (i > 0) csv += ';';
        csv += std::to_string(row.violations[i]);
      }
      csv += row.matches_pattern ? ",yes\n" : ",no\n";
    }
    payload = csv;
  } else {
    std::ostringstream out;
    for (const SweepRow& row : sweep.rows)
      out << "t=" << row.t << " degree=" << row.degree
          << " violations=" << violations_text(row.violations)
          << " pattern=" << (row.matches_pattern ? "yes" : "no") << "\n";
    if (sweep.minimal_t)
      out << "minimal_t=" << *sweep.minimal_t << "\n";
    else
      out << "minimal_t=not found\n";
    payload = out.str();
  }
  emit(payload, cfg.out_path);
  return 0;
}

struct GoldenCase {
  int m;
  int t;
  int degree;
  std::vector<int> violations;
};

// Reported family instances: degree and exact violation indices.
const GoldenCase kGoldenCases[] = {
    {2, 5, 37, {34, 36}},
    {4, 6, 85, {78, 80, 82, 84}},
    {5, 6, 106, {97, 99, 101, 103, 105}},
};

int cmd_reproduce(const RunConfig& cfg) {
  bool all_match = true;
  std::ostringstream text;
  auto cases = ordered_json::array();
  for (const GoldenCase& golden : kGoldenCases) {
    const DensePolynomial p = closed_form_TG(golden.m, golden.t);
    const LogConcavityReport report = log_concavity_report(p);
    const bool match =
        report.degree == golden.degree && report.violations == golden.violations;
    all_match = all_match && match;
    text << "TG(" << golden.m << "," << golden.t << "): degree " << report.degree
         << ", violations " << violations_text(report.violations) << " — expected degree "
         << golden.degree << ", violations " << violations_text(golden.violations)
         << (match ? " ✓" : " MISMATCH") << "\n";
    ordered_json c;
    c["family"] = "TG," + std::to_string(golden.m) + "," + std::to_string(golden.t);
    c["degree"] = report.degree;
    c["expected_degree"] = golden.degree;
    c["violations"] = report.violations;
    c["expected_violations"] = golden.violations;
    c["match"] = match;
    cases.push_back(std::move(c));
  }

  std::string payload;
  if (cfg.format == "json") {
    ordered_json j;
    j["cases"] = cases;
    j["all_match"] = all_match;
    payload = j.dump() + "\n";
  } else {
    text << (all_match ? "all golden cases match" : "GOLDEN CASE MISMATCH") << "\n";
    payload = text.str();
  }
  emit(payload, cfg.out_path);
  return all_match ? 0 : 1;
}

void add_instance_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--family", cfg.family, "family instance: P,m | S2,t | T,m,t | TG,m,t");
  cmd->add_option("--tree", cfg.tree_path, "path to a tree file (one tree line)");
}

void add_engine_flag(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--engine", cfg.engine, "dp | recursive | bruteforce | closed-form")
      ->check(CLI::IsMember({"dp", "recursive", "bruteforce", "closed-form"}));
}

void add_format_flag(CLI::App* cmd, RunConfig& cfg, const std::vector<std::string>& choices) {
  cmd->add_option("--format", cfg.format,
                  "output format (default: " + cfg.format + ")")
      ->check(CLI::IsMember(choices));
}

void add_out_flag(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--out", cfg.out_path, "write the payload to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact independence polynomials of trees and their log-concavity"};
  app.require_subcommand(1);
  int exit_code = 0;
  auto dispatch = [&exit_code](int (*handler)(const RunConfig&), const RunConfig& cfg) {
    exit_code = handler(cfg);
  };

  {
    auto cfg = std::make_shared<RunConfig>();
    CLI::App* cmd = app.add_subcommand("build", "emit the serialized tree of a family instance");
    cmd->add_option("--family", cfg->family, "family instance: P,m | S2,t | T,m,t | TG,m,t")
        ->required();
    add_out_flag(cmd, *cfg);
    cmd->callback([cfg, &dispatch] { dispatch(cmd_build, *cfg); });
  }
  {
    auto cfg = std::make_shared<RunConfig>();
    cfg->format = "json";
    CLI::App* cmd = app.add_subcommand("compute", "compute an independence polynomial");
    add_instance_flags(cmd, *cfg);
    add_engine_flag(cmd, *cfg);
    add_format_flag(cmd, *cfg, {"json", "text"});
    add_out_flag(cmd, *cfg);
    cmd->callback([cfg, &dispatch] { dispatch(cmd_compute, *cfg); });
  }
  {
    auto cfg = std::make_shared<RunConfig>();
    cfg->format = "json";
    CLI::App* cmd = app.add_subcommand("analyze", "log-concavity report of an instance");
    add_instance_flags(cmd, *cfg);
    add_engine_flag(cmd, *cfg);
    add_format_flag(cmd, *cfg, {"json", "text"});
    add_out_flag(cmd, *cfg);
    cmd->callback([cfg, &dispatch] { dispatch(cmd_analyze, *cfg); });
  }
  {
    auto cfg = std::make_shared<RunConfig>();
    CLI::App* cmd =
        app.add_subcommand("identities", "exact reflected-polynomial identity checks");
    cmd->add_option("--m", cfg->m, "number of T copies (m >= 1)")->required();
    cmd->add_option("--t", cfg->t, "pendant-path parameter (t >= 0)")->required();
    add_format_flag(cmd, *cfg, {"text", "json"});
    add_out_flag(cmd, *cfg);
    cmd->callback([cfg, &dispatch] { dispatch(cmd_identities, *cfg); });
  }
  {
    auto cfg = std::make_shared<RunConfig>();
    cfg->format = "csv";
    CLI::App* cmd = app.add_subcommand("probe", "growth probe of a reflected TG coefficient");
    cmd->add_option("--m", cfg->m, "number of T copies (m >= 1)")->required();
    cmd->add_option("--k", cfg->k, "reflected coefficient index (k <= 2m)")->required();
    cmd->add_option("--t-min", cfg->t_min, "first probed t (default: 10)");
    cmd->add_option("--t-max", cfg->t_max, "last probed t (<= 60, default: 40)");
    add_format_flag(cmd, *cfg, {"csv", "text"});
    add_out_flag(cmd, *cfg);
    cmd->callback([cfg, &dispatch] { dispatch(cmd_probe, *cfg); });
  }
  {
    auto cfg = std::make_shared<RunConfig>();
    cfg->t_max = 12;
    CLI::App* cmd =
        app.add_subcommand("sweep", "violation sets of TG(m,t) for t = 0..t_max");
    cmd->add_option("--m", cfg->m, "number of T copies (m >= 1)")->required();
    cmd->add_option("--t-max", cfg->t_max, "last swept t (default: 12)");
    add_format_flag(cmd, *cfg, {"text", "json", "csv"});
    add_out_flag(cmd, *cfg);
    cmd->callback([cfg, &dispatch] { dispatch(cmd_sweep, *cfg); });
  }
  {
    auto cfg = std::make_shared<RunConfig>();
    CLI::App* cmd =
        app.add_subcommand("reproduce", "check the reported golden violation sets");
    add_format_flag(cmd, *cfg, {"text", "json"});
    add_out_flag(cmd, *cfg);
    cmd->callback([cfg, &dispatch] { dispatch(cmd_reproduce, *cfg); });
  }

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
