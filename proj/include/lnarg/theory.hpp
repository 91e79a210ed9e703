// Legal argumentation theories: accepted knowledge plus defeasible norms over
// labelled literals, with a finite universe of label values.

#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnarg/formula.hpp"
#include "lnarg/prover.hpp"

namespace lnarg {

/// l1, ..., ln =>n l. The antecedent is an ordered sequence.
struct Norm {
  std::vector<LabelledLiteral> antecedent;
  LabelledLiteral consequent;

  bool operator==(const Norm&) const = default;
  std::strong_ordering operator<=>(const Norm& o) const {
    if (auto c = consequent <=> o.consequent; c != 0) return c;
    return std::lexicographical_compare_three_way(antecedent.begin(), antecedent.end(),
                                                  o.antecedent.begin(), o.antecedent.end());
  }

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
    return out + " =>n " + consequent.str(notation);
  }
};

class TheoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Theory {
  std::set<unsigned> label_universe{0};
  std::vector<LabelledLiteral> knowledge;  // sorted, unique
  std::vector<Norm> norms;                 // sorted, unique
  std::string jurisdiction;                // free-form metadata

  bool operator==(const Theory&) const = default;

  void add_fact(LabelledLiteral l) {
    auto it = std::lower_bound(knowledge.begin(), knowledge.end(), l);
    if (it == knowledge.end() || *it != l) knowledge.insert(it, std::move(l));
  }
  void add_norm(Norm n) {
    auto it = std::lower_bound(norms.begin(), norms.end(), n);
    if (it == norms.end() || *it != n) norms.insert(it, std::move(n));
  }

  std::vector<Sequent> order_assumptions() const { return order_sequents(label_universe); }

  /// Predicate symbols used anywhere in the theory.
  std::set<std::string> vocabulary() const {
    std::set<std::string> out;
    for (const auto& f : knowledge) out.insert(f.atom.predicate());
    for (const auto& n : norms) {
      out.insert(n.consequent.atom.predicate());
      for (const auto& l : n.antecedent) out.insert(l.atom.predicate());
    }
    return out;
  }
};

/// Checks the load-time invariants: 0 is a label value, every label lies in
/// the universe, and no norm is already derivable from the order sequents.
inline void validate_theory(const Theory& theory, const SearchBudget& budget = {}) {
  if (!theory.label_universe.count(0)) throw TheoryError("label universe must contain 0");
  auto check_labels = [&](const LabelledLiteral& l, const std::string& where) {
    for (unsigned v : l.labels)
      if (!theory.label_universe.count(v))
        throw TheoryError("label " + std::to_string(v) + " outside the label universe in '" +
                          where + "'");
  };
  for (const auto& f : theory.knowledge) check_labels(f, f.str(Notation::Ascii));
  const auto assumptions = theory.order_assumptions();
  for (const auto& n : theory.norms) {
    const std::string text = n.str(Notation::Ascii);
    if (n.antecedent.empty()) throw TheoryError("norm without antecedent: '" + text + "'");
    for (const auto& l : n.antecedent) check_labels(l, text);
    check_labels(n.consequent, text);
    const auto r = prove(n.as_sequent(), assumptions, budget);
    if (r.status == ProofStatus::Provable)
      throw TheoryError("norm is derivable from the order sequents: '" + text + "'");
    if (r.status == ProofStatus::BudgetExhausted)
      throw TheoryError("could not establish that norm is not a strict rule: '" + text + "' (" +
                        r.reason + ")");
  }
}

}  // namespace lnarg
