// Structured arguments over a theory: construction, attacks, label-based
// preferences and policy-filtered defeats.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lnarg/strict_rules.hpp"
#include "lnarg/theory.hpp"

namespace lnarg {

enum class ArgumentKind { Premise, Strict, Defeasible };

struct Argument {
  std::size_t id = 0;
  ArgumentKind kind = ArgumentKind::Premise;
  /// Index into the knowledge, the strict rule base or the norms, by kind.
  std::size_t rule = 0;
  std::vector<std::size_t> children;
  LabelledLiteral conclusion;

  std::set<std::size_t> premises;      // knowledge indices
  std::set<std::size_t> sub;           // argument ids, self included
  std::set<std::size_t> norms;         // norm indices
  std::set<std::size_t> strict_rules;  // strict rule indices
  Formula tconc;                       // label-erased conclusion
  std::size_t depth = 1;

  /// Conclusions of the last premises or norm applications below any strict
  /// top part. Preferences read their labels, so strict continuations never
  /// change how an argument compares.
  std::vector<LabelledLiteral> last_link;

  std::string handle() const { return "arg" + std::to_string(id); }
};

struct ArgumentLimits {
  std::size_t max_depth = 10;
  std::size_t max_count = 10'000;
};

class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(const std::string& what, std::vector<std::string> frontier)
      : std::runtime_error(what), frontier_(std::move(frontier)) {}
  const std::vector<std::string>& frontier() const { return frontier_; }

 private:
  std::vector<std::string> frontier_;
};

struct ArgumentSet {
  Theory theory;
  std::shared_ptr<const StrictRuleBase> strict;
  std::vector<Argument> args;

  const Argument& operator[](std::size_t i) const { return args.at(i); }
  std::size_t size() const { return args.size(); }

  /// One-line description of how an argument is built.
  std::string describe(std::size_t id, Notation notation = Notation::Unicode) const {
    const Argument& a = args.at(id);
    std::string out = a.handle() + ": ";
    if (a.kind == ArgumentKind::Premise) return out + a.conclusion.str(notation) + "  [premise]";
    out += "[";
    for (std::size_t i = 0; i < a.children.size(); ++i) {
      if (i) out += ", ";
      out += args[a.children[i]].handle();
    }
    out += a.kind == ArgumentKind::Strict ? "] =>s " : "] =>n ";
    out += a.conclusion.str(notation);
    return out;
  }
};

namespace detail {

inline Argument make_premise(std::size_t id, std::size_t fact, const LabelledLiteral& lit) {
  Argument a;
  a.id = id;
  a.kind = ArgumentKind::Premise;
  a.rule = fact;
  a.conclusion = lit;
  a.premises = {fact};
  a.sub = {id};
  a.tconc = en(lit.to_formula());
  a.last_link = {lit};
  return a;
}

inline Argument make_application(std::size_t id, ArgumentKind kind, std::size_t rule,
                                 const LabelledLiteral& conclusion,
                                 const std::vector<std::size_t>& children,
                                 const std::vector<Argument>& args) {
  Argument a;
  a.id = id;
  a.kind = kind;
  a.rule = rule;
  a.children = children;
  a.conclusion = conclusion;
  a.tconc = en(conclusion.to_formula());
  a.sub = {id};
  std::size_t depth = 0;
  for (std::size_t c : children) {
    const Argument& ch = args[c];
    a.premises.insert(ch.premises.begin(), ch.premises.end());
    a.sub.insert(ch.sub.begin(), ch.sub.end());
    a.norms.insert(ch.norms.begin(), ch.norms.end());
    a.strict_rules.insert(ch.strict_rules.begin(), ch.strict_rules.end());
    depth = std::max(depth, ch.depth);
    if (kind == ArgumentKind::Strict)
      a.last_link.insert(a.last_link.end(), ch.last_link.begin(), ch.last_link.end());
  }
  a.depth = depth + 1;
  if (kind == ArgumentKind::Defeasible) {
    a.norms.insert(rule);
    a.last_link = {conclusion};
  } else {
    a.strict_rules.insert(rule);
    std::sort(a.last_link.begin(), a.last_link.end());
    a.last_link.erase(std::unique(a.last_link.begin(), a.last_link.end()), a.last_link.end());
  }
  return a;
}

}  // namespace detail

/// Enumerates every argument constructible from the theory: premises, norm
/// applications and strict-rule applications whose antecedent sequences match
/// the children's conclusions exactly and in order. A norm occurs at most once
/// on any path, strict rules are never stacked directly on a strict
/// application (the base is closed under composition), and identity rules are
/// not applied. Enumeration order is deterministic.
inline ArgumentSet build_arguments(const Theory& theory, const StrictRuleBase& strict,
                                   const ArgumentLimits& limits = {}) {
  if (limits.max_depth == 0 || limits.max_count == 0)
    throw std::invalid_argument("build_arguments: limits must be positive");
  ArgumentSet set;
  set.theory = theory;
  set.strict = std::make_shared<const StrictRuleBase>(strict);
  auto& args = set.args;

  std::map<LabelledLiteral, std::vector<std::size_t>> by_conclusion;
  std::map<std::tuple<int, std::size_t, std::vector<std::size_t>>, std::size_t> seen;
  std::vector<std::string> frontier;

  auto admit = [&](Argument a) {
    by_conclusion[a.conclusion].push_back(a.id);
    args.push_back(std::move(a));
  };

  for (std::size_t i = 0; i < theory.knowledge.size(); ++i) {
    if (args.size() >= limits.max_count) {
      frontier.push_back("premise " + theory.knowledge[i].str(Notation::Ascii));
      continue;
    }
    admit(detail::make_premise(args.size(), i, theory.knowledge[i]));
  }

  // Candidate children for an antecedent sequence; fires `emit` per tuple
  // with at least one child from the newest round.
  auto combinations = [&](const std::vector<LabelledLiteral>& antecedent, std::size_t fresh_from,
                          auto&& accept, auto&& emit) {
    std::vector<std::vector<std::size_t>> options;
    for (const auto& lit : antecedent) {
      auto it = by_conclusion.find(lit);
      if (it == by_conclusion.end()) return;
      std::vector<std::size_t> ok;
      for (std::size_t id : it->second)
        if (accept(args[id])) ok.push_back(id);
      if (ok.empty()) return;
      options.push_back(std::move(ok));
    }
    std::vector<std::size_t> pick(options.size(), 0);
    for (;;) {
      std::vector<std::size_t> children;
      bool has_fresh = false;
      for (std::size_t k = 0; k < options.size(); ++k) {
        children.push_back(options[k][pick[k]]);
        has_fresh = has_fresh || children.back() >= fresh_from;
      }
      std::set<std::size_t> distinct(children.begin(), children.end());
      if (has_fresh && distinct.size() == children.size()) emit(children);
      std::size_t k = 0;
      while (k < options.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
      if (k == options.size()) break;
    }
  };

  std::size_t fresh_from = 0;
  while (fresh_from < args.size() && frontier.empty()) {
    const std::size_t round_end = args.size();
    std::vector<Argument> created;
    auto propose = [&](ArgumentKind kind, std::size_t rule, const LabelledLiteral& conclusion,
                       const std::vector<std::size_t>& children) {
      auto key = std::make_tuple(static_cast<int>(kind), rule, children);
      if (seen.count(key)) return;
      Argument a = detail::make_application(round_end + created.size(), kind, rule, conclusion,
                                            children, args);
      if (a.depth > limits.max_depth || round_end + created.size() >= limits.max_count) {
        if (frontier.size() < 20) {
          std::string d = std::string(kind == ArgumentKind::Strict ? "strict" : "norm") + " [";
          for (std::size_t i = 0; i < children.size(); ++i)
            d += (i ? ", " : "") + args[children[i]].handle();
          frontier.push_back(d + "] => " + conclusion.str(Notation::Ascii));
        } else {
          frontier.push_back("...");
        }
        return;
      }
      seen.emplace(std::move(key), a.id);
      created.push_back(std::move(a));
    };

    for (std::size_t n = 0; n < theory.norms.size(); ++n) {
      const Norm& norm = theory.norms[n];
      combinations(
          norm.antecedent, fresh_from, [&](const Argument& c) { return !c.norms.count(n); },
          [&](const std::vector<std::size_t>& ch) {
            propose(ArgumentKind::Defeasible, n, norm.consequent, ch);
          });
    }
    for (std::size_t r = 0; r < strict.rules.size(); ++r) {
      const StrictRule& rule = strict.rules[r];
      if (rule.is_identity()) continue;
      combinations(
          rule.antecedent, fresh_from,
          [](const Argument& c) { return c.kind != ArgumentKind::Strict; },
          [&](const std::vector<std::size_t>& ch) {
            propose(ArgumentKind::Strict, r, rule.consequent, ch);
          });
    }
    fresh_from = round_end;
    for (auto& a : created) admit(std::move(a));
  }

  if (!frontier.empty())
    throw LimitExceeded("argument construction exceeded its limits (max depth " +
                            std::to_string(limits.max_depth) + ", max count " +
                            std::to_string(limits.max_count) + ")",
                        std::move(frontier));
  return set;
}

// ---------------------------------------------------------------------------
// Argument functions

struct ArgumentAnalysis {
  std::vector<LabelledLiteral> prem;
  LabelledLiteral conc;
  std::vector<std::size_t> sub;
  std::vector<Sequent> norms;
  std::vector<Sequent> strict_rules;
  std::vector<Sequent> rules;  // norms together with strict rules
  Formula tconc;
};

inline ArgumentAnalysis analyze(const ArgumentSet& set, std::size_t id) {
  const Argument& a = set[id];
  ArgumentAnalysis out;
  for (std::size_t p : a.premises) out.prem.push_back(set.theory.knowledge[p]);
  out.conc = a.conclusion;
  out.sub.assign(a.sub.begin(), a.sub.end());
  for (std::size_t n : a.norms) out.norms.push_back(set.theory.norms[n].as_sequent());
  for (std::size_t r : a.strict_rules) out.strict_rules.push_back(set.strict->rules[r].as_sequent());
  out.rules = out.norms;
  out.rules.insert(out.rules.end(), out.strict_rules.begin(), out.strict_rules.end());
  out.tconc = a.tconc;
  return out;
}

// ---------------------------------------------------------------------------
// Attacks

struct Attack {
  std::size_t attacker;
  std::size_t target;
  std::size_t target_sub;

  bool operator==(const Attack&) const = default;
  auto operator<=>(const Attack&) const = default;
};

/// Every (attacker, target, sub-argument) triple where the attacker's
/// label-erased conclusion negates that of a premise or norm-application
/// sub-argument of the target.
inline std::vector<Attack> attacks(const ArgumentSet& set) {
  std::map<std::pair<Formula, bool>, std::vector<std::size_t>> by_core;
  std::vector<std::vector<std::size_t>> supers(set.size());
  for (const auto& a : set.args) {
    by_core[{a.conclusion.atom, a.conclusion.negative}].push_back(a.id);
    for (std::size_t s : a.sub) supers[s].push_back(a.id);
  }
  std::vector<Attack> out;
  for (const auto& s : set.args) {
    if (s.kind == ArgumentKind::Strict) continue;
    auto it = by_core.find({s.conclusion.atom, !s.conclusion.negative});
    if (it == by_core.end()) continue;
    for (std::size_t attacker : it->second)
      for (std::size_t target : supers[s.id]) out.push_back(Attack{attacker, target, s.id});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Preferences

/// Label values at position x over the argument's last-link conclusions.
inline std::set<unsigned> preference_labels(const Argument& a, std::size_t x) {
  std::set<unsigned> out;
  for (const auto& l : a.last_link)
    if (auto v = l.label(x)) out.insert(*v);
  return out;
}

/// ag1 is strictly weaker than ag2 at position x: both label sets are
/// singletons {a}, {b} with a < b. Anything else is incomparable.
inline bool prefers(const Argument& ag1, const Argument& ag2, std::size_t x) {
  const auto a = preference_labels(ag1, x);
  const auto b = preference_labels(ag2, x);
  return a.size() == 1 && b.size() == 1 && *a.begin() < *b.begin();
}

struct PreferenceCriterion {
  enum class Mode { HigherWins, PreferValue };
  std::size_t position = 1;
  Mode mode = Mode::HigherWins;
  unsigned value = 0;  // for PreferValue

  bool operator==(const PreferenceCriterion&) const = default;
};

/// Lexicographic composition of per-position comparisons. The empty policy
/// prefers nothing.
struct PreferencePolicy {
  std::vector<PreferenceCriterion> criteria;

  bool operator==(const PreferencePolicy&) const = default;

  /// True when `a` is strictly dispreferred to `b`.
  bool weaker(const Argument& a, const Argument& b) const {
    for (const auto& c : criteria) {
      const auto sa = preference_labels(a, c.position);
      const auto sb = preference_labels(b, c.position);
      if (sa.size() != 1 || sb.size() != 1) return false;
      const unsigned va = *sa.begin();
      const unsigned vb = *sb.begin();
      if (c.mode == PreferenceCriterion::Mode::HigherWins) {
        if (va != vb) return va < vb;
      } else {
        const bool ha = va == c.value;
        const bool hb = vb == c.value;
        if (ha != hb) return hb;
      }
    }
    return false;
  }

  std::string str() const {
    if (criteria.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      if (i) out += ", then ";
      const auto& c = criteria[i];
      out += "position " + std::to_string(c.position);
      out += c.mode == PreferenceCriterion::Mode::HigherWins
                 ? " higher wins"
                 : " prefers " + std::to_string(c.value);
    }
    return out;
  }
};

/// Attacks that survive the policy: the attacker is not strictly weaker than
/// the attacked sub-argument.
inline std::vector<Attack> defeats(const ArgumentSet& set, const std::vector<Attack>& attacks,
                                   const PreferencePolicy& policy) {
  std::vector<Attack> out;
  for (const auto& at : attacks)
    if (!policy.weaker(set[at.attacker], set[at.target_sub])) out.push_back(at);
  return out;
}

// ---------------------------------------------------------------------------
// Strict continuations

inline bool is_strict_continuation(const ArgumentSet& set, std::size_t ag,
                                   const std::vector<std::size_t>& base) {
  std::set<std::size_t> norms, rules, prem;
  for (std::size_t b : base) {
    norms.insert(set[b].norms.begin(), set[b].norms.end());
    rules.insert(set[b].strict_rules.begin(), set[b].strict_rules.end());
    prem.insert(set[b].premises.begin(), set[b].premises.end());
  }
  const Argument& a = set[ag];
  return a.norms == norms &&
         std::includes(a.strict_rules.begin(), a.strict_rules.end(), rules.begin(), rules.end()) &&
         std::includes(a.premises.begin(), a.premises.end(), prem.begin(), prem.end());
}

/// Arguments in the set that strictly continue `base`.
inline std::vector<std::size_t> strict_continuations(const ArgumentSet& set,
                                                     const std::vector<std::size_t>& base) {
  std::vector<std::size_t> out;
  for (const auto& a : set.args)
    if (is_strict_continuation(set, a.id, base)) out.push_back(a.id);
  return out;
}

// ---------------------------------------------------------------------------
// Display names

/// Names arguments the way a two-jurisdiction analysis reads them: direct
/// mutual conflicts between premise or norm arguments are numbered in order
/// of their earliest member, and each member is named B<k> (origin label at
/// position 1) or A<k> (target label). Everything else keeps its handle.
inline std::vector<std::string> display_names(const ArgumentSet& set,
                                              const std::vector<Attack>& attacks,
                                              unsigned origin_label = 1,
                                              unsigned target_label = 2) {
  std::vector<std::string> names;
  for (const auto& a : set.args) names.push_back(a.handle());
  std::set<std::pair<std::size_t, std::size_t>> direct;
  for (const auto& at : attacks)
    if (at.target == at.target_sub && set[at.attacker].kind != ArgumentKind::Strict &&
        set[at.target].kind != ArgumentKind::Strict)
      direct.insert({at.attacker, at.target});
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [a, b] : direct)
    if (a < b && direct.count({b, a})) pairs.push_back({a, b});
  std::sort(pairs.begin(), pairs.end());
  std::vector<bool> named(set.size(), false);
  std::size_t k = 0;
  for (auto [a, b] : pairs) {
    if (named[a] || named[b]) continue;
    const auto ca = set[a].conclusion.label(1);
    const auto cb = set[b].conclusion.label(1);
    if (!ca || !cb || *ca == *cb) continue;
    if ((*ca != origin_label && *ca != target_label) ||
        (*cb != origin_label && *cb != target_label))
      continue;
    ++k;
    for (std::size_t m : {a, b}) {
      names[m] = (set[m].conclusion.label(1) == origin_label ? "B" : "A") + std::to_string(k);
      named[m] = true;
    }
  }
  return names;
}

}  // namespace lnarg
