// Generation of the finite strict-rule base: literal sequents derivable in LN
// from the order sequents of a theory's label universe.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "lnarg/prover.hpp"
#include "lnarg/theory.hpp"

namespace lnarg {

struct StrictRule {
  std::vector<LabelledLiteral> antecedent;
  LabelledLiteral consequent;

  bool operator==(const StrictRule&) const = default;
  std::strong_ordering operator<=>(const StrictRule& o) const {
    if (auto c = std::lexicographical_compare_three_way(antecedent.begin(), antecedent.end(),
                                                        o.antecedent.begin(), o.antecedent.end());
        c != 0)
      return c;
    return consequent <=> o.consequent;
  }

  bool is_identity() const { return antecedent.size() == 1 && antecedent[0] == consequent; }

  Sequent as_sequent() const {
    Sequent s;
    for (const auto& l : antecedent) s.antecedent.push_back(l.to_formula());
    s.succedent = consequent.to_formula();
    return s;
  }

  std::string str(Notation notation = Notation::Unicode) const {
    std::string out;
    for (std::size_t i = 0; i < antecedent.size(); ++i) {
      if (i) out += ", ";
      out += antecedent[i].str(notation);
    }
    return out + " =>s " + consequent.str(notation);
  }
};

struct StrictRuleBase {
  std::vector<StrictRule> rules;         // sorted
  std::vector<std::string> diagnostics;  // candidates the prover could not settle
  SearchBudget budget;

  bool contains(const StrictRule& r) const {
    return std::binary_search(rules.begin(), rules.end(), r);
  }
  bool contains(const Sequent& s) const {
    for (const auto& r : rules)
      if (r.as_sequent() == canonicalize(s)) return true;
    return false;
  }
};

/// Literals the strict base ranges over: every literal in the knowledge or the
/// norms, its complement, and all relabellings of the same arity.
inline std::vector<LabelledLiteral> literal_base(const Theory& theory) {
  std::set<LabelledLiteral> seeds;
  for (const auto& f : theory.knowledge) seeds.insert(f);
  for (const auto& n : theory.norms) {
    seeds.insert(n.consequent);
    seeds.insert(n.antecedent.begin(), n.antecedent.end());
  }
  std::set<std::tuple<bool, Formula, std::size_t>> shapes;
  for (const auto& s : seeds) {
    shapes.insert({s.negative, s.atom, s.labels.size()});
    shapes.insert({!s.negative, s.atom, s.labels.size()});
  }
  const std::vector<unsigned> values(theory.label_universe.begin(), theory.label_universe.end());
  std::vector<LabelledLiteral> out;
  for (const auto& [negative, atom, arity] : shapes) {
    std::vector<std::size_t> idx(arity, 0);
    for (;;) {
      LabelledLiteral l{negative, atom, {}};
      for (auto i : idx) l.labels.push_back(values[i]);
      out.push_back(std::move(l));
      std::size_t k = 0;
      while (k < arity && ++idx[k] == values.size()) idx[k++] = 0;
      if (k == arity) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// Signed occurrence count of a non-numeral atom across a candidate rule.
/// Every LN rule preserves the balance of each such atom and the order
/// sequents mention numerals only, so unbalanced candidates are underivable.
inline bool atoms_balanced(const std::vector<const LabelledLiteral*>& ante,
                           const LabelledLiteral& succ) {
  std::map<Formula, int> balance;
  for (const auto* l : ante) balance[l->atom] += l->negative ? 1 : -1;
  balance[succ.atom] += succ.negative ? -1 : 1;
  std::size_t numerals_left = 0;
  for (const auto* l : ante) numerals_left += l->labels.size();
  if (numerals_left != succ.labels.size()) return false;
  for (const auto& [atom, b] : balance)
    if (b != 0) return false;
  return true;
}

}  // namespace detail

/// Enumerates candidate sequents with at most `kmax` antecedent literals and
/// keeps those the prover derives from the order sequents. Derivability is
/// invariant under renaming the non-numeral atom, so each label pattern is
/// proved once on a placeholder atom.
inline StrictRuleBase generate_strict_rules(const Theory& theory, std::size_t kmax = 1,
                                            const SearchBudget& budget = {}) {
  if (kmax == 0) throw std::invalid_argument("generate_strict_rules: kmax must be positive");
  StrictRuleBase base;
  base.budget = budget;
  const auto lits = literal_base(theory);
  const auto assumptions = theory.order_assumptions();

  // Placeholder atoms for the pattern cache: one per distinct atom position.
  std::map<std::string, ProofStatus> cache;
  auto settle = [&](const std::vector<const LabelledLiteral*>& ante,
                    const LabelledLiteral& succ) -> ProofStatus {
    std::map<Formula, std::string> rename;
    auto name_of = [&](const Formula& atom) {
      auto it = rename.find(atom);
      if (it != rename.end()) return it->second;
      std::string n = "x" + std::to_string(rename.size());
      rename.emplace(atom, n);
      return n;
    };
    Sequent s;
    std::string key;
    for (const auto* l : ante) {
      LabelledLiteral p{l->negative, Formula::atom(name_of(l->atom)), l->labels};
      s.antecedent.push_back(p.to_formula());
      key += p.str(Notation::Ascii) + ",";
    }
    LabelledLiteral q{succ.negative, Formula::atom(name_of(succ.atom)), succ.labels};
    s.succedent = q.to_formula();
    key += "=>" + q.str(Notation::Ascii);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const auto status = prove(s, assumptions, budget).status;
    cache.emplace(key, status);
    return status;
  };

  std::vector<const LabelledLiteral*> ante;
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    // Each literal contributes one signed atom occurrence, so balance needs an
    // even number of literals in total.
    if (!ante.empty() && (ante.size() + 1) % 2 == 0) {
      for (const auto& succ : lits) {
        if (!detail::atoms_balanced(ante, succ)) continue;
        StrictRule rule;
        for (const auto* l : ante) rule.antecedent.push_back(*l);
        rule.consequent = succ;
        switch (settle(ante, succ)) {
          case ProofStatus::Provable:
            base.rules.push_back(std::move(rule));
            break;
          case ProofStatus::BudgetExhausted:
            base.diagnostics.push_back("undecided within budget: " + rule.str(Notation::Ascii));
            break;
          case ProofStatus::NotProvable:
            break;
        }
      }
    }
    if (k == kmax) return;
    for (const auto& l : lits) {
      ante.push_back(&l);
      extend(k + 1);
      ante.pop_back();
    }
  };
  extend(0);

  std::sort(base.rules.begin(), base.rules.end());
  base.rules.erase(std::unique(base.rules.begin(), base.rules.end()), base.rules.end());
  for (const auto& n : theory.norms) {
    StrictRule as_rule{n.antecedent, n.consequent};
    if (base.contains(as_rule))
      throw TheoryError("norm coincides with a strict rule: '" + n.str(Notation::Ascii) + "'");
  }
  return base;
}

}  // namespace lnarg
