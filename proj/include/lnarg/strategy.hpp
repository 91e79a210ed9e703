// Cross-border decision strategies: each one is a defeat policy plus an
// extension choice, summarised as a compliance report for vehicle designers.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lnarg/arguments.hpp"
#include "lnarg/semantics.hpp"
#include "lnarg/strict_rules.hpp"

namespace lnarg {

enum class StrategyKind { MinimalAdjustment, MaximumConsistency, CautionFirst };
enum class Selection { Grounded, Preferred };

struct Strategy {
  StrategyKind kind = StrategyKind::MaximumConsistency;
  unsigned origin_label = 1;
  unsigned target_label = 2;
  std::size_t strength_position = 2;
  std::size_t country_position = 1;
  Selection selection = Selection::Grounded;

  bool operator==(const Strategy&) const = default;

  void validate() const {
    if (origin_label == target_label)
      throw std::invalid_argument("strategy: origin and target labels must differ");
    if (strength_position == 0 || country_position == 0)
      throw std::invalid_argument("strategy: label positions start at 1");
  }

  std::string name() const {
    switch (kind) {
      case StrategyKind::MinimalAdjustment: return "minimal-adjustment";
      case StrategyKind::MaximumConsistency: return "max-consistency";
      case StrategyKind::CautionFirst: return "caution-first";
    }
    return "?";
  }

  /// Accepts the names printed by name().
  static Strategy parse(const std::string& text) {
    Strategy s;
    if (text == "minimal-adjustment") s.kind = StrategyKind::MinimalAdjustment;
    else if (text == "max-consistency") s.kind = StrategyKind::MaximumConsistency;
    else if (text == "caution-first") s.kind = StrategyKind::CautionFirst;
    else
      throw std::invalid_argument("unknown strategy '" + text +
                                  "' (expected minimal-adjustment, max-consistency or caution-first)");
    return s;
  }

  /// The country label that wins ties, if any.
  std::optional<unsigned> favoured_country() const {
    switch (kind) {
      case StrategyKind::MinimalAdjustment: return origin_label;
      case StrategyKind::MaximumConsistency: return target_label;
      case StrategyKind::CautionFirst: return std::nullopt;
    }
    return std::nullopt;
  }
};

inline PreferencePolicy policy_for(const Strategy& s) {
  s.validate();
  using Mode = PreferenceCriterion::Mode;
  PreferencePolicy p;
  p.criteria.push_back({s.strength_position, Mode::HigherWins, 0});
  if (auto c = s.favoured_country()) p.criteria.push_back({s.country_position, Mode::PreferValue, *c});
  return p;
}

// ---------------------------------------------------------------------------
// Reports

struct AdoptedConclusion {
  Formula conclusion;
  std::optional<unsigned> jurisdiction;
  std::optional<unsigned> strength;
  std::string argument;
  std::vector<std::string> norms;  // norms used by the justifying argument
};

struct DroppedConclusion {
  Formula conclusion;
  std::string argument;
  std::string defeater;
  std::string reason;
};

struct UnresolvedConflict {
  Formula conclusion;
  std::vector<std::string> arguments;
  std::vector<std::string> opponents;
  std::string reason;
};

struct ComplianceReport {
  Strategy strategy;
  std::string policy;
  std::vector<AdoptedConclusion> adopted;
  std::vector<DroppedConclusion> dropped;
  std::vector<UnresolvedConflict> unresolved;
  std::vector<std::string> extension;       // display names, in argument order
  std::vector<std::string> extension_core;  // the premise and norm members
  std::set<std::string> vocabulary;
  std::vector<std::string> diagnostics;

  std::string text() const {
    auto opt = [](const std::optional<unsigned>& v) {
      return v ? std::to_string(*v) : std::string("-");
    };
    std::ostringstream os;
    os << "strategy: " << strategy.name() << "\n";
    os << "policy: " << policy << "\n";
    os << "semantics: " << (strategy.selection == Selection::Grounded ? "grounded" : "preferred")
       << "\n";
    os << "extension: " << extension.size() << " arguments, " << extension_core.size()
       << " without strict tops:";
    for (const auto& e : extension_core) os << " " << e;
    os << "\n\nadopted (" << adopted.size() << "):\n";
    for (const auto& a : adopted) {
      os << "  " << a.conclusion.str() << "  [jurisdiction " << opt(a.jurisdiction)
         << ", strength " << opt(a.strength) << ", by " << a.argument << "]\n";
    }
    os << "\ndropped (" << dropped.size() << "):\n";
    for (const auto& d : dropped)
      os << "  " << d.conclusion.str() << "  [" << d.argument << " defeated by " << d.defeater
         << ": " << d.reason << "]\n";
    os << "\nunresolved (" << unresolved.size() << "):\n";
    for (const auto& u : unresolved) {
      os << "  " << u.conclusion.str() << "  [";
      for (std::size_t i = 0; i < u.arguments.size(); ++i) os << (i ? ", " : "") << u.arguments[i];
      os << " vs ";
      for (std::size_t i = 0; i < u.opponents.size(); ++i) os << (i ? ", " : "") << u.opponents[i];
      os << ": " << u.reason << "]\n";
    }
    for (const auto& d : diagnostics) os << "\nnote: " << d << "\n";
    return os.str();
  }

  nlohmann::ordered_json json() const {
    auto opt = [](const std::optional<unsigned>& v) {
      return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    nlohmann::ordered_json j;
    j["strategy"] = {{"name", strategy.name()},
                     {"origin_label", strategy.origin_label},
                     {"target_label", strategy.target_label},
                     {"strength_position", strategy.strength_position},
                     {"country_position", strategy.country_position},
                     {"policy", policy}};
    j["extension"] = extension;
    j["adopted"] = nlohmann::ordered_json::array();
    for (const auto& a : adopted)
      j["adopted"].push_back({{"conclusion", a.conclusion.str(Notation::Ascii)},
                              {"jurisdiction", opt(a.jurisdiction)},
                              {"strength", opt(a.strength)},
                              {"argument", a.argument},
                              {"norms", a.norms}});
    j["dropped"] = nlohmann::ordered_json::array();
    for (const auto& d : dropped)
      j["dropped"].push_back({{"conclusion", d.conclusion.str(Notation::Ascii)},
                              {"argument", d.argument},
                              {"defeater", d.defeater},
                              {"reason", d.reason}});
    j["unresolved"] = nlohmann::ordered_json::array();
    for (const auto& u : unresolved)
      j["unresolved"].push_back({{"conclusion", u.conclusion.str(Notation::Ascii)},
                                 {"arguments", u.arguments},
                                 {"opponents", u.opponents},
                                 {"reason", u.reason}});
    if (!diagnostics.empty()) j["diagnostics"] = diagnostics;
    return j;
  }

  std::vector<Formula> adopted_conclusions() const {
    std::vector<Formula> out;
    for (const auto& a : adopted) out.push_back(a.conclusion);
    return out;
  }
  std::vector<Formula> unresolved_conclusions() const {
    std::vector<Formula> out;
    for (const auto& u : unresolved) out.push_back(u.conclusion);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Pipeline

struct PipelineOptions {
  std::size_t kmax = 1;
  SearchBudget budget;
  ArgumentLimits limits;
  SemanticsLimits semantics;
};

/// Strict base plus every argument of the theory.
inline ArgumentSet build_argument_set(const Theory& theory, const PipelineOptions& options = {}) {
  const auto strict = generate_strict_rules(theory, options.kmax, options.budget);
  return build_arguments(theory, strict, options.limits);
}

/// Everything the strategy derives from an argument set.
struct Evaluation {
  std::vector<Attack> attacks;
  std::vector<Attack> defeats;
  ArgumentationFramework framework;
  Extension extension;
  std::vector<std::string> names;
  std::string diagnostic;
};

inline Evaluation evaluate(const ArgumentSet& set, const Strategy& strategy,
                           const SemanticsLimits& limits = {}) {
  Evaluation ev;
  ev.attacks = attacks(set);
  ev.defeats = defeats(set, ev.attacks, policy_for(strategy));
  ev.framework = ArgumentationFramework::from_defeats(set, ev.defeats);
  if (strategy.selection == Selection::Grounded) {
    ev.extension = grounded_extension(ev.framework);
  } else {
    // The first preferred extension in sorted order keeps the choice stable.
    ev.extension = preferred_extensions(ev.framework, limits, &ev.diagnostic).front();
  }
  ev.names = display_names(set, ev.attacks, strategy.origin_label, strategy.target_label);
  return ev;
}

inline ComplianceReport apply_strategy(const ArgumentSet& set, const Strategy& strategy,
                                       const SemanticsLimits& limits = {}) {
  strategy.validate();
  const Evaluation ev = evaluate(set, strategy, limits);
  const auto& af = ev.framework;
  const auto& names = ev.names;

  ComplianceReport report;
  report.strategy = strategy;
  report.policy = policy_for(strategy).str();
  report.vocabulary = set.theory.vocabulary();
  if (!ev.diagnostic.empty()) report.diagnostics.push_back(ev.diagnostic);
  std::vector<bool> in(set.size(), false);
  for (std::size_t a : ev.extension) {
    in[a] = true;
    report.extension.push_back(names[a]);
    if (set[a].kind != ArgumentKind::Strict) report.extension_core.push_back(names[a]);
  }

  // Premise and norm arguments grouped by label-erased conclusion.
  std::map<Formula, std::vector<std::size_t>> groups;
  for (const auto& a : set.args)
    if (a.kind != ArgumentKind::Strict) groups[a.tconc].push_back(a.id);

  const auto favoured = strategy.favoured_country();
  auto rank = [&](std::size_t id) {
    const auto& c = set[id].conclusion;
    const auto s = c.label(strategy.strength_position);
    const auto k = c.label(strategy.country_position);
    return std::make_tuple(s ? static_cast<long>(*s) : -1L, favoured && k == favoured ? 1 : 0);
  };

  for (const auto& [tconc, ids] : groups) {
    std::vector<std::size_t> accepted;
    for (std::size_t id : ids)
      if (in[id]) accepted.push_back(id);
    if (!accepted.empty()) {
      std::size_t best = accepted.front();
      for (std::size_t id : accepted)
        if (rank(id) > rank(best)) best = id;
      AdoptedConclusion a;
      a.conclusion = tconc;
      a.jurisdiction = set[best].conclusion.label(strategy.country_position);
      a.strength = set[best].conclusion.label(strategy.strength_position);
      a.argument = names[best];
      for (std::size_t n : set[best].norms) a.norms.push_back(set.theory.norms[n].str(Notation::Ascii));
      report.adopted.push_back(std::move(a));
      continue;
    }
    // Every candidate rejected: dropped when each has a defeater inside the
    // extension, unresolved otherwise.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    bool all_out = true;
    for (std::size_t id : ids) {
      std::optional<std::size_t> defeater;
      for (std::size_t b : af.attackers(id))
        if (in[b] && (!defeater || b < *defeater)) defeater = b;
      if (!defeater) all_out = false;
      else if (!witness) witness = {{id, *defeater}};
    }
    if (all_out && witness) {
      const auto [id, by] = *witness;
      DroppedConclusion d;
      d.conclusion = tconc;
      d.argument = names[id];
      d.defeater = names[by];
      const auto sa = set[id].conclusion.label(strategy.strength_position);
      const auto sb = set[by].conclusion.label(strategy.strength_position);
      if (sa && sb && *sa < *sb)
        d.reason = "strength " + std::to_string(*sb) + " over " + std::to_string(*sa);
      else if (sa && sb && *sa == *sb && favoured)
        d.reason = "equal strength, jurisdiction " + std::to_string(*favoured) + " preferred";
      else
        d.reason = "defeated by " + set[by].conclusion.str();
      report.dropped.push_back(std::move(d));
      continue;
    }
    UnresolvedConflict u;
    u.conclusion = tconc;
    std::set<std::size_t> opponents;
    for (std::size_t id : ids) {
      u.arguments.push_back(names[id]);
      for (std::size_t b : af.attackers(id))
        if (set[b].kind != ArgumentKind::Strict) opponents.insert(b);
    }
    for (std::size_t b : opponents) u.opponents.push_back(names[b]);
    u.reason = opponents.empty() ? "undecided" : "symmetric defeat; needs a designer decision";
    report.unresolved.push_back(std::move(u));
  }
  return report;
}

inline ComplianceReport apply_strategy(const Theory& theory, const Strategy& strategy,
                                       const PipelineOptions& options = {}) {
  return apply_strategy(build_argument_set(theory, options), strategy, options.semantics);
}

// ---------------------------------------------------------------------------
// Report comparison

struct ConclusionChange {
  enum class Kind { Added, Removed, StrengthUpgraded, StrengthDowngraded };
  Kind kind;
  Formula conclusion;
  std::optional<unsigned> from_strength;
  std::optional<unsigned> to_strength;
  std::vector<std::string> norms;

  std::string str() const {
    auto opt = [](const std::optional<unsigned>& v) {
      return v ? std::to_string(*v) : std::string("-");
    };
    std::string out;
    switch (kind) {
      case Kind::Added: out = "+ " + conclusion.str() + " (strength " + opt(to_strength) + ")"; break;
      case Kind::Removed:
        out = "- " + conclusion.str() + " (strength " + opt(from_strength) + ")";
        break;
      case Kind::StrengthUpgraded:
      case Kind::StrengthDowngraded:
        out = (kind == Kind::StrengthUpgraded ? "^ " : "v ") + conclusion.str() + " (strength " +
              opt(from_strength) + " -> " + opt(to_strength) + ")";
        break;
    }
    for (const auto& n : norms) out += "\n    via " + n;
    return out;
  }
};

struct JurisdictionDiff {
  std::vector<ConclusionChange> changes;
  std::vector<std::string> warnings;

  bool empty() const { return changes.empty(); }

  std::string text() const {
    std::string out = "changes (" + std::to_string(changes.size()) + "):\n";
    for (const auto& c : changes) out += "  " + c.str() + "\n";
    if (!warnings.empty()) {
      out += "warnings:\n";
      for (const auto& w : warnings) out += "  " + w + "\n";
    }
    return out;
  }
};

/// Adopted conclusions that appear, disappear or change strength between the
/// origin-only report and the adapted one.
inline JurisdictionDiff diff_jurisdictions(const ComplianceReport& origin,
                                           const ComplianceReport& adapted) {
  JurisdictionDiff diff;
  std::map<Formula, const AdoptedConclusion*> before, after;
  for (const auto& a : origin.adopted) before[a.conclusion] = &a;
  for (const auto& a : adapted.adopted) after[a.conclusion] = &a;
  using Kind = ConclusionChange::Kind;
  for (const auto& [c, a] : before)
    if (!after.count(c)) diff.changes.push_back({Kind::Removed, c, a->strength, std::nullopt, a->norms});
  for (const auto& [c, a] : after) {
    auto it = before.find(c);
    if (it == before.end()) {
      diff.changes.push_back({Kind::Added, c, std::nullopt, a->strength, a->norms});
    } else if (it->second->strength != a->strength) {
      const bool up = a->strength > it->second->strength;
      diff.changes.push_back({up ? Kind::StrengthUpgraded : Kind::StrengthDowngraded, c,
                              it->second->strength, a->strength, a->norms});
    }
  }
  std::sort(diff.changes.begin(), diff.changes.end(),
            [](const auto& x, const auto& y) { return x.conclusion < y.conclusion; });
  for (const auto& p : origin.vocabulary)
    if (!adapted.vocabulary.count(p)) diff.warnings.push_back("predicate '" + p + "' only in the origin theory");
  for (const auto& p : adapted.vocabulary)
    if (!origin.vocabulary.count(p)) diff.warnings.push_back("predicate '" + p + "' only in the adapted theory");
  return diff;
}

}  // namespace lnarg
