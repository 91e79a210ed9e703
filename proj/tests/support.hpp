// Random instance generators and small helpers shared by the test suites and
// the acceptance runner. All generators are driven by an explicit engine so
// every run is reproducible from its seed.

#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lnarg/lnarg.hpp"

namespace lnarg::gen {

using Rng = std::mt19937_64;

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// ---------------------------------------------------------------------------
// Sequents over at most four atoms and the labels 0..3

struct SequentShape {
  std::size_t atoms = 4;
  unsigned max_label = 3;
  std::size_t max_depth = 3;
};

inline Formula random_leaf(Rng& rng, const SequentShape& s) {
  static const char* names[] = {"p", "q", "r", "s"};
  if (coin(rng, 0.65)) return Formula::atom(names[pick(rng, s.atoms)]);
  return Formula::numeral(static_cast<unsigned>(pick(rng, s.max_label + 1)));
}

inline Formula random_formula(Rng& rng, const SequentShape& s, std::size_t depth) {
  if (depth == 0 || coin(rng, 0.35)) return random_leaf(rng, s);
  if (coin(rng, 0.3)) return Formula::neg(random_formula(rng, s, depth - 1));
  return Formula::fusion(random_formula(rng, s, depth - 1), random_formula(rng, s, depth - 1));
}

/// Raises or lowers the numerals of a formula at random.
inline Formula perturb_labels(Rng& rng, const Formula& f, const SequentShape& s) {
  switch (f.kind()) {
    case FormulaKind::Numeral:
      return coin(rng) ? f : Formula::numeral(static_cast<unsigned>(pick(rng, s.max_label + 1)));
    case FormulaKind::Neg:
      return Formula::neg(perturb_labels(rng, f.operand(), s));
    case FormulaKind::Fusion:
      return Formula::fusion(perturb_labels(rng, f.left(), s), perturb_labels(rng, f.right(), s));
    default:
      return f;
  }
}

/// A mix of unstructured sequents and shapes that are often derivable
/// (identities with shifted labels, split or rotated fusions, negation moves),
/// so that both answers are well represented.
inline Sequent random_sequent_unbounded(Rng& rng, const SequentShape& s) {
  Sequent q;
  switch (pick(rng, 6)) {
    case 0:
    case 1: {
      const std::size_t n = pick(rng, 3) + (coin(rng, 0.8) ? 1 : 0);
      for (std::size_t i = 0; i < n; ++i) q.antecedent.push_back(random_formula(rng, s, s.max_depth));
      if (coin(rng, 0.85)) q.succedent = random_formula(rng, s, s.max_depth);
      break;
    }
    case 2: {  // A => A'
      Formula a = random_formula(rng, s, s.max_depth);
      q.antecedent = {a};
      q.succedent = perturb_labels(rng, a, s);
      break;
    }
    case 3: {  // the pieces of a fusion, possibly rotated
      Formula a = random_formula(rng, s, s.max_depth);
      auto chain = fusion_chain(canonicalize(a));
      std::rotate(chain.begin(), chain.begin() + pick(rng, chain.size()), chain.end());
      if (coin(rng, 0.3)) std::swap(chain.front(), chain.back());
      q.antecedent = chain;
      q.succedent = perturb_labels(rng, a, s);
      break;
    }
    case 4: {  // A, ~A' =>   or   => ~(A.~A')
      Formula a = random_formula(rng, s, s.max_depth - 1);
      Formula b = Formula::neg(perturb_labels(rng, a, s));
      if (coin(rng)) {
        q.antecedent = {a, b};
      } else {
        q.succedent = Formula::neg(Formula::fusion(a, b));
      }
      break;
    }
    default: {  // double negation in either direction
      Formula a = random_formula(rng, s, s.max_depth - 1);
      Formula nna = Formula::neg(Formula::neg(perturb_labels(rng, a, s)));
      if (coin(rng)) {
        q.antecedent = {a};
        q.succedent = nna;
      } else {
        q.antecedent = {nna};
        q.succedent = a;
      }
      break;
    }
  }
  return q;
}

/// As above, resampled until the sequent has at most `max_leaves` leaves so the
/// oracle's exhaustive saturation stays small.
inline Sequent random_sequent(Rng& rng, const SequentShape& s = {}, std::size_t max_leaves = 8) {
  for (;;) {
    Sequent q = random_sequent_unbounded(rng, s);
    if (sequent_leaves(q) <= max_leaves) return q;
  }
}

/// Bound under which the oracle is compared with the prover on `goal`:
/// formulas up to two nodes beyond the subformulas, antecedents no longer than
/// the goal has leaves, and two leaves of slack for detours.
inline SearchBudget oracle_bound(const Sequent& goal) {
  return SearchBudget{2, std::max<std::size_t>(sequent_leaves(goal), 1), 400'000};
}
inline std::size_t oracle_leaf_slack(const Sequent& goal) { return sequent_leaves(goal) + 2; }

// ---------------------------------------------------------------------------
// Abstract frameworks

inline ArgumentationFramework random_framework(Rng& rng, std::size_t max_size = 12) {
  const std::size_t n = pick(rng, max_size) + 1;
  const double density = std::uniform_real_distribution<double>(0.05, 0.35)(rng);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (coin(rng, a == b ? density / 4 : density)) edges.push_back({a, b});
  return ArgumentationFramework(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Theories

struct TheoryShape {
  std::size_t max_facts = 8;
  std::size_t max_norms = 8;
  std::size_t atoms = 5;
  unsigned max_label = 4;
};

inline LabelledLiteral random_literal(Rng& rng, const TheoryShape& s, std::size_t atom) {
  LabelledLiteral l;
  l.atom = Formula::atom("P" + std::to_string(atom), {Term{"a", {}}});
  l.negative = coin(rng, 0.35);
  if (coin(rng, 0.75)) {
    l.labels = {static_cast<unsigned>(pick(rng, s.max_label) + 1),
                static_cast<unsigned>(pick(rng, s.max_label) + 1)};
  }
  return l;
}

/// A well-formed theory: norm consequents never share an atom with their
/// antecedent, so no norm is a strict rule. Antecedents reuse literals that
/// occur as facts or consequents, which makes chains and conflicts common.
inline Theory random_theory(Rng& rng, const TheoryShape& s = {}) {
  Theory t;
  t.label_universe.clear();
  for (unsigned v = 0; v <= s.max_label; ++v) t.label_universe.insert(v);
  std::vector<LabelledLiteral> seen;
  const std::size_t facts = pick(rng, s.max_facts) + 1;
  for (std::size_t i = 0; i < facts; ++i) {
    auto l = random_literal(rng, s, pick(rng, s.atoms));
    t.add_fact(l);
    seen.push_back(l);
  }
  const std::size_t norms = pick(rng, s.max_norms + 1);
  for (std::size_t i = 0; i < norms; ++i) {
    Norm n;
    const std::size_t k = coin(rng, 0.8) ? 1 : 2;
    std::set<Formula> used;
    for (std::size_t j = 0; j < k; ++j) {
      auto l = coin(rng, 0.8) ? seen[pick(rng, seen.size())] : random_literal(rng, s, pick(rng, s.atoms));
      n.antecedent.push_back(l);
      used.insert(l.atom);
    }
    std::size_t atom = pick(rng, s.atoms);
    for (std::size_t tries = 0; tries < 10; ++tries) {
      auto candidate = Formula::atom("P" + std::to_string(atom), {Term{"a", {}}});
      if (!used.count(candidate)) break;
      atom = pick(rng, s.atoms);
    }
    n.consequent = random_literal(rng, s, atom);
    if (used.count(n.consequent.atom)) continue;
    seen.push_back(n.consequent);
    t.add_norm(std::move(n));
  }
  return t;
}

/// Pipeline options whose depth limit can never be reached: a norm occurs
/// once per path and strict steps never stack, so a root-to-leaf path is at
/// most premise, (strict, norm) per norm, strict: 2·|norms| + 2 nodes.
inline PipelineOptions unbounded_depth(const Theory& t) {
  PipelineOptions o;
  o.limits.max_depth = 2 * t.norms.size() + 2;
  return o;
}

/// Origin and target theories over one vocabulary, labelled country.strength.
inline std::pair<Theory, Theory> random_jurisdictions(Rng& rng) {
  TheoryShape s;
  s.max_facts = 5;
  s.max_norms = 4;
  s.atoms = 4;
  auto make = [&](unsigned country) {
    Theory t = random_theory(rng, s);
    Theory out = relabel(t, country);
    return out;
  };
  return {make(1), make(2)};
}

}  // namespace lnarg::gen
