// lnarg: command-line front end for labelled-norm argumentation.
//
//   lnarg prove     --sequent "p.3 => p.5" --labels 0..5
//   lnarg arguments --theory corpus/uk_us.lnt
//   lnarg solve     --theory corpus/uk_us.lnt --strategy max-consistency
//   lnarg report    --origin corpus/uk.lnt --target corpus/us.lnt
//   lnarg export    --theory corpus/uk_us.lnt --strategy max-consistency --out g.dot
//
// Exit status: 0 success, 1 unresolved conflicts under --strict, 2 input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lnarg/lnarg.hpp"

namespace {

using namespace lnarg;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Theory load(const std::string& path, const SearchBudget& budget) {
  try {
    return parse_theory(read_file(path), ParseOptions{true, budget});
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const TheoryError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// "0,1,2" or "0..5"
std::set<unsigned> parse_labels(const std::string& text) {
  std::set<unsigned> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const unsigned lo = std::stoul(text.substr(0, dots));
    const unsigned hi = std::stoul(text.substr(dots + 2));
    for (unsigned v = lo; v <= hi; ++v) out.insert(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.insert(std::stoul(item));
  return out;
}

struct Common {
  std::size_t budget = SearchBudget{}.max_chart_entries;
  std::size_t max_depth = ArgumentLimits{}.max_depth;
  std::size_t kmax = 1;
  bool json = false;

  PipelineOptions pipeline() const {
    PipelineOptions p;
    p.budget.max_chart_entries = budget;
    p.limits.max_depth = max_depth;
    p.kmax = kmax;
    return p;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "Maximum prover chart size")->check(CLI::PositiveNumber);
  cmd->add_option("--max-depth", c.max_depth, "Maximum argument depth")->check(CLI::PositiveNumber);
  cmd->add_option("--kmax", c.kmax, "Maximum antecedent length of strict rules")
      ->check(CLI::PositiveNumber);
}

/// A named strategy, or "none" for the policy that keeps every attack.
std::optional<Strategy> strategy_arg(const std::string& name) {
  if (name == "none") return std::nullopt;
  try {
    return Strategy::parse(name);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::vector<Attack> defeats_for(const ArgumentSet& set, const std::vector<Attack>& at,
                                const std::optional<Strategy>& s) {
  return s ? defeats(set, at, policy_for(*s)) : at;
}

int cmd_prove(const std::string& theory_path, const std::string& labels,
              const std::string& sequent, const Common& c) {
  std::set<unsigned> universe{0};
  if (!theory_path.empty()) universe = load(theory_path, SearchBudget{}).label_universe;
  if (!labels.empty()) {
    try {
      universe = parse_labels(labels);
    } catch (const std::exception&) {
      throw InputError("bad --labels '" + labels + "' (expected 0,1,2 or 0..5)");
    }
  }
  Sequent goal;
  try {
    goal = parse_sequent(sequent);
  } catch (const ParseError& e) {
    throw InputError(std::string("--sequent: ") + e.what());
  }
  SearchBudget budget;
  budget.max_chart_entries = c.budget;
  const auto result = prove(goal, order_sequents(universe), budget);
  std::cout << status_name(result.status) << "\n";
  if (result.proof) std::cout << result.proof->str();
  if (result.status == ProofStatus::BudgetExhausted) std::cout << "reason: " << result.reason << "\n";
  return 0;
}

int cmd_arguments(const std::string& path, const Common& c) {
  const auto options = c.pipeline();
  const auto set = build_argument_set(load(path, options.budget), options);
  const auto at = attacks(set);
  const auto names = display_names(set, at);
  for (const auto& a : set.args) {
    const auto an = analyze(set, a.id);
    if (names[a.id] != a.handle()) std::cout << names[a.id] << " = ";
    std::cout << set.describe(a.id) << "\n";
    std::cout << "  conc:  " << an.conc.str() << "\n  tconc: " << an.tconc.str() << "\n  prem:  ";
    for (std::size_t i = 0; i < an.prem.size(); ++i) std::cout << (i ? ", " : "") << an.prem[i].str();
    std::cout << "\n  sub:   ";
    for (std::size_t i = 0; i < an.sub.size(); ++i) std::cout << (i ? ", " : "") << names[an.sub[i]];
    std::cout << "\n";
    for (const auto& r : an.norms) std::cout << "  norm:  " << r.str() << "\n";
    for (const auto& r : an.strict_rules) std::cout << "  rule:  " << r.str() << "\n";
  }
  std::cout << set.size() << " arguments, " << at.size() << " attacks, "
            << set.strict->rules.size() << " strict rules\n";
  for (const auto& d : set.strict->diagnostics) std::cout << "note: " << d << "\n";
  return 0;
}

int cmd_solve(const std::string& path, const std::string& strategy_name,
              const std::string& semantics, bool strict, const Common& c) {
  const auto options = c.pipeline();
  const auto set = build_argument_set(load(path, options.budget), options);
  const auto strategy = strategy_arg(strategy_name);
  const auto at = attacks(set);
  const auto af = ArgumentationFramework::from_defeats(set, defeats_for(set, at, strategy));
  const auto names = display_names(set, at);

  std::vector<Extension> extensions;
  std::string diagnostic;
  if (semantics == "grounded") extensions = {grounded_extension(af)};
  else if (semantics == "complete") extensions = complete_extensions(af, options.semantics, &diagnostic);
  else extensions = preferred_extensions(af, options.semantics, &diagnostic);

  if (c.json) {
    nlohmann::ordered_json j;
    j["strategy"] = strategy_name;
    j["semantics"] = semantics;
    j["extensions"] = nlohmann::ordered_json::array();
    for (const auto& e : extensions) {
      std::set<std::string> conclusions;
      std::vector<std::string> members;
      for (std::size_t a : e) {
        members.push_back(names[a]);
        if (set[a].kind != ArgumentKind::Strict) conclusions.insert(set[a].tconc.str(Notation::Ascii));
      }
      j["extensions"].push_back({{"members", members}, {"conclusions", conclusions}});
    }
    if (!diagnostic.empty()) j["diagnostic"] = diagnostic;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "strategy: " << strategy_name << "\nsemantics: " << semantics << "\n";
    std::cout << extensions.size() << " extension" << (extensions.size() == 1 ? "" : "s") << "\n";
    for (std::size_t i = 0; i < extensions.size(); ++i) {
      std::set<Formula> conclusions;
      std::cout << "\nextension " << i + 1 << " (" << extensions[i].size() << " arguments):";
      for (std::size_t a : extensions[i]) {
        if (set[a].kind == ArgumentKind::Strict) continue;
        std::cout << " " << names[a];
        conclusions.insert(set[a].tconc);
      }
      std::cout << "\n  conclusions:";
      const char* sep = " ";
      for (const auto& f : conclusions) {
        std::cout << sep << f.str();
        sep = "; ";
      }
      std::cout << "\n";
    }
    if (!diagnostic.empty()) std::cout << "note: " << diagnostic << "\n";
  }
  if (strict && strategy) {
    Strategy s = *strategy;
    s.selection = semantics == "preferred" ? Selection::Preferred : Selection::Grounded;
    if (!apply_strategy(set, s, options.semantics).unresolved.empty()) return 1;
  }
  return 0;
}

int cmd_report(const std::string& origin_path, const std::string& target_path,
               const std::string& strategy_name, const std::string& semantics, bool strict,
               const Common& c) {
  const auto options = c.pipeline();
  auto strategy = strategy_arg(strategy_name);
  if (!strategy) throw InputError("report needs a strategy other than 'none'");
  strategy->selection = semantics == "preferred" ? Selection::Preferred : Selection::Grounded;

  const Theory origin = load(origin_path, options.budget);
  const Theory target = load(target_path, options.budget);
  const Theory merged =
      merge_jurisdictions(origin, target, strategy->origin_label, strategy->target_label);
  validate_theory(merged, options.budget);
  const Theory origin_only = relabel(origin, strategy->origin_label);

  const auto adapted = apply_strategy(merged, *strategy, options);
  const auto baseline = apply_strategy(origin_only, *strategy, options);
  const auto diff = diff_jurisdictions(baseline, adapted);

  if (c.json) {
    nlohmann::ordered_json j;
    j["report"] = adapted.json();
    j["changes"] = nlohmann::ordered_json::array();
    for (const auto& ch : diff.changes) j["changes"].push_back(ch.str());
    j["warnings"] = diff.warnings;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "origin: " << origin_path << "\ntarget: " << target_path << "\n";
    std::cout << adapted.text() << "\n" << diff.text();
  }
  return strict && !adapted.unresolved.empty() ? 1 : 0;
}

int cmd_export(const std::string& path, const std::string& strategy_name, const std::string& out,
               bool all, const Common& c) {
  const auto options = c.pipeline();
  const auto set = build_argument_set(load(path, options.budget), options);
  const auto strategy = strategy_arg(strategy_name);
  const auto at = attacks(set);
  const auto dot = export_dot(set, at, defeats_for(set, at, strategy), display_names(set, at),
                              DotOptions{true, !all});
  if (out.empty() || out == "-") {
    std::cout << dot;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << dot;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labelled-norm argumentation: prover, argument engine and strategy reports"};
  app.require_subcommand(1);
  Common common;

  std::string theory, labels, sequent, strategy = "max-consistency", semantics = "grounded";
  std::string origin, target, out;
  bool strict = false, all = false;

  auto* prove_cmd = app.add_subcommand("prove", "Decide a sequent from the order sequents");
  prove_cmd->add_option("--theory", theory, "Take the label universe from a theory file");
  prove_cmd->add_option("--labels", labels, "Label universe, e.g. 0..5 or 0,1,2");
  prove_cmd->add_option("--sequent", sequent, "Sequent, e.g. \"p.3 => p.5\"")->required();
  add_common(prove_cmd, common);

  auto* args_cmd = app.add_subcommand("arguments", "List every argument with its analysis");
  args_cmd->add_option("--theory", theory, "Theory file")->required();
  add_common(args_cmd, common);

  const std::vector<std::string> strategies{"max-consistency", "minimal-adjustment",
                                            "caution-first", "none"};
  auto* solve_cmd = app.add_subcommand("solve", "Print extensions under a strategy");
  solve_cmd->add_option("--theory", theory, "Theory file")->required();
  solve_cmd->add_option("--strategy", strategy, "Defeat policy")
      ->check(CLI::IsMember(strategies))
      ->capture_default_str();
  solve_cmd->add_option("--semantics", semantics, "grounded, complete or preferred")
      ->check(CLI::IsMember({"grounded", "complete", "preferred"}))
      ->capture_default_str();
  solve_cmd->add_flag("--strict", strict, "Exit 1 when conflicts stay unresolved");
  solve_cmd->add_flag("--json", common.json, "Machine-readable output");
  add_common(solve_cmd, common);

  auto* report_cmd = app.add_subcommand("report", "Compliance report for moving between jurisdictions");
  report_cmd->add_option("--origin", origin, "Origin theory (country label 1)")->required();
  report_cmd->add_option("--target", target, "Target theory (country label 2)")->required();
  report_cmd->add_option("--strategy", strategy, "Decision strategy")
      ->check(CLI::IsMember({"max-consistency", "minimal-adjustment", "caution-first"}))
      ->capture_default_str();
  report_cmd->add_option("--semantics", semantics, "grounded or preferred")
      ->check(CLI::IsMember({"grounded", "preferred"}))
      ->capture_default_str();
  report_cmd->add_flag("--strict", strict, "Exit 1 when conflicts stay unresolved");
  report_cmd->add_flag("--json", common.json, "Machine-readable output");
  add_common(report_cmd, common);

  auto* export_cmd = app.add_subcommand("export", "Write the conflict graph as Graphviz DOT");
  export_cmd->add_option("--theory", theory, "Theory file")->required();
  export_cmd->add_option("--strategy", strategy, "Defeat policy")
      ->check(CLI::IsMember(strategies))
      ->capture_default_str();
  export_cmd->add_option("--out", out, "Output file (default: standard output)");
  export_cmd->add_flag("--all", all, "Include indirect and strict-argument conflicts");
  add_common(export_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*prove_cmd) return cmd_prove(theory, labels, sequent, common);
    if (*args_cmd) return cmd_arguments(theory, common);
    if (*solve_cmd) return cmd_solve(theory, strategy, semantics, strict, common);
    if (*report_cmd) return cmd_report(origin, target, strategy, semantics, strict, common);
    if (*export_cmd) return cmd_export(theory, strategy, out, all, common);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& f : e.frontier()) std::cerr << "  frontier: " << f << "\n";
    return 2;
  } catch (const TheoryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
