// Reference saturation of LN used to cross-check the prover.
//
// Deliberately naive and independent of prover.hpp: formulas are compared
// structurally (no interning), antecedents are plain sequences, and (Cyc) is
// an explicit rule, so all rotations are stored. Each inference rule is
// applied exactly in its textbook shape with the active formula at the end
// (or front) of the antecedent.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lnarg/formula.hpp"
#include "lnarg/prover.hpp"

namespace lnarg {

namespace detail {

inline void subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (f.is(FormulaKind::Neg)) subformulas(f.operand(), out);
  if (f.is(FormulaKind::Fusion)) {
    subformulas(f.left(), out);
    subformulas(f.right(), out);
  }
}

inline void leaves_of(const Formula& f, std::set<Formula>& out) {
  if (f.is(FormulaKind::Neg)) return leaves_of(f.operand(), out);
  if (f.is(FormulaKind::Fusion)) {
    leaves_of(f.left(), out);
    leaves_of(f.right(), out);
    return;
  }
  out.insert(f);
}

inline std::size_t leaf_count(const Formula& f) {
  if (f.is(FormulaKind::Neg)) return leaf_count(f.operand());
  if (f.is(FormulaKind::Fusion)) return leaf_count(f.left()) + leaf_count(f.right());
  return 1;
}

}  // namespace detail

/// The oracle's formula universe: the subformula closure of the base together
/// with every formula over the base's leaves (using ~ and right-nested fusion)
/// of at most `max_formula_size` nodes.
inline std::set<Formula> oracle_universe(const std::vector<Formula>& base,
                                         const std::vector<Sequent>& assumptions,
                                         std::size_t max_formula_size) {
  std::set<Formula> closure;
  std::vector<Formula> all = base;
  for (const auto& a : assumptions) {
    all.insert(all.end(), a.antecedent.begin(), a.antecedent.end());
    if (a.succedent) all.push_back(*a.succedent);
  }
  for (const auto& f : all) detail::subformulas(canonicalize(f), closure);

  std::set<Formula> leaves;
  for (const auto& f : all) detail::leaves_of(f, leaves);

  // by_size[k]: generated formulas with exactly k nodes.
  std::vector<std::vector<Formula>> by_size(max_formula_size + 1);
  if (max_formula_size >= 1) by_size[1].assign(leaves.begin(), leaves.end());
  for (std::size_t k = 2; k <= max_formula_size; ++k) {
    for (const auto& f : by_size[k - 1]) by_size[k].push_back(Formula::neg(f));
    for (std::size_t a = 1; a + 1 < k; ++a) {
      const std::size_t b = k - 1 - a;
      for (const auto& l : by_size[a]) {
        if (l.is(FormulaKind::Fusion)) continue;  // keep canonical right nesting
        for (const auto& r : by_size[b]) by_size[k].push_back(Formula::fusion(l, r));
      }
    }
  }
  for (const auto& level : by_size) closure.insert(level.begin(), level.end());
  return closure;
}

/// Every sequent derivable from `assumptions` whose formulas lie in the
/// oracle universe, whose antecedent is at most `bound.max_antecedent_length`
/// long and which has at most `max_leaves` leaf occurrences. Stops adding once
/// `bound.max_chart_entries` sequents are stored.
inline std::set<Sequent> saturate_oracle(const std::vector<Formula>& literal_base,
                                         const std::vector<Sequent>& assumptions,
                                         const SearchBudget& bound,
                                         std::size_t max_leaves = SIZE_MAX) {
  const std::set<Formula> universe =
      oracle_universe(literal_base, assumptions, bound.max_formula_size);
  const Formula u = Formula::unit();
  const bool have_unit = universe.count(u) > 0;
  std::vector<Formula> fusions;
  for (const auto& f : universe)
    if (f.is(FormulaKind::Fusion)) fusions.push_back(f);

  std::set<Sequent> derived;
  std::vector<Sequent> fresh;
  std::map<Formula, std::vector<Sequent>> by_succedent;   // Δ => B, keyed by B
  std::map<Formula, std::vector<Sequent>> by_last;        // Γ, B => A, keyed by B

  auto in_universe = [&](const Sequent& s) {
    for (const auto& f : s.antecedent)
      if (!universe.count(f)) return false;
    return !s.succedent || universe.count(*s.succedent) > 0;
  };
  auto emit = [&](Sequent s) {
    if (s.antecedent.size() > bound.max_antecedent_length) return;
    if (max_leaves != SIZE_MAX) {
      std::size_t n = s.succedent ? detail::leaf_count(*s.succedent) : 0;
      for (const auto& f : s.antecedent) n += detail::leaf_count(f);
      if (n > max_leaves) return;
    }
    if (derived.size() >= bound.max_chart_entries) return;
    if (!in_universe(s)) return;
    if (derived.insert(s).second) fresh.push_back(std::move(s));
  };

  for (const auto& f : universe) emit(Sequent{{f}, f});  // Id
  if (have_unit) emit(Sequent{{}, u});                     // uR
  for (const auto& a : assumptions) emit(canonicalize(a));

  while (!fresh.empty()) {
    std::vector<Sequent> round;
    round.swap(fresh);
    for (const auto& s : round) {
      if (s.succedent) by_succedent[*s.succedent].push_back(s);
      if (!s.antecedent.empty()) by_last[s.antecedent.back()].push_back(s);
    }
    for (const auto& s : round) {
      const auto& g = s.antecedent;
      // Cyc: Γ, A => B / A, Γ => B
      if (!g.empty()) {
        Sequent c = s;
        c.antecedent.pop_back();
        c.antecedent.insert(c.antecedent.begin(), g.back());
        emit(std::move(c));
      }
      // uL: Γ => A / Γ, u => A
      if (have_unit) {
        Sequent c = s;
        c.antecedent.push_back(u);
        emit(std::move(c));
      }
      // ·L: Γ, A, B => C / Γ, A·B => C
      if (g.size() >= 2) {
        Sequent c = s;
        Formula b = c.antecedent.back();
        c.antecedent.pop_back();
        Formula a = c.antecedent.back();
        c.antecedent.back() = Formula::fusion(a, b);
        emit(std::move(c));
      }
      // ¬L: A, Γ => / Γ => ¬A
      if (!s.succedent && !g.empty()) {
        Sequent c;
        c.antecedent.assign(g.begin() + 1, g.end());
        c.succedent = Formula::neg(g.front());
        emit(std::move(c));
      }
      // ¬R: Γ => A / Γ, ¬A =>
      if (s.succedent) {
        Sequent c;
        c.antecedent = g;
        c.antecedent.push_back(Formula::neg(*s.succedent));
        emit(std::move(c));
      }
      // ¬¬L: Γ, A => B / Γ, ¬¬A => B
      if (!g.empty()) {
        Sequent c = s;
        c.antecedent.back() = Formula::neg(Formula::neg(g.back()));
        emit(std::move(c));
      }
      // ¬¬R: Γ => A / Γ => ¬¬A
      if (s.succedent) {
        Sequent c = s;
        c.succedent = Formula::neg(Formula::neg(*s.succedent));
        emit(std::move(c));
      }
    }
    // Binary rules: pair each new sequent with every stored one (both roles).
    for (const auto& s : round) {
      // Cut: Δ => B, Γ, B => A / Γ, Δ => A
      if (s.succedent) {
        auto it = by_last.find(*s.succedent);
        if (it != by_last.end())
          for (const auto& r : it->second) {
            Sequent c;
            c.antecedent.assign(r.antecedent.begin(), r.antecedent.end() - 1);
            c.antecedent.insert(c.antecedent.end(), s.antecedent.begin(), s.antecedent.end());
            c.succedent = r.succedent;
            emit(std::move(c));
          }
      }
      if (!s.antecedent.empty()) {
        auto it = by_succedent.find(s.antecedent.back());
        if (it != by_succedent.end())
          for (const auto& l : it->second) {
            Sequent c;
            c.antecedent.assign(s.antecedent.begin(), s.antecedent.end() - 1);
            c.antecedent.insert(c.antecedent.end(), l.antecedent.begin(), l.antecedent.end());
            c.succedent = s.succedent;
            emit(std::move(c));
          }
      }
      // ·R: Γ => A, Δ => B / Γ, Δ => A·B
      if (s.succedent) {
        for (const auto& ab : fusions) {
          if (ab.left() == *s.succedent) {
            auto it = by_succedent.find(ab.right());
            if (it != by_succedent.end())
              for (const auto& r : it->second) {
                Sequent c;
                c.antecedent = s.antecedent;
                c.antecedent.insert(c.antecedent.end(), r.antecedent.begin(), r.antecedent.end());
                c.succedent = ab;
                emit(std::move(c));
              }
          }
          if (ab.right() == *s.succedent) {
            auto it = by_succedent.find(ab.left());
            if (it != by_succedent.end())
              for (const auto& l : it->second) {
                Sequent c;
                c.antecedent = l.antecedent;
                c.antecedent.insert(c.antecedent.end(), s.antecedent.begin(), s.antecedent.end());
                c.succedent = ab;
                emit(std::move(c));
              }
          }
        }
      }
    }
  }
  return derived;
}

/// Membership query against the oracle, canonicalizing the goal first.
/// The goal's own formulas are always part of the universe.
inline bool oracle_derives(const Sequent& goal, const std::vector<Sequent>& assumptions,
                           const SearchBudget& bound, std::size_t max_leaves = SIZE_MAX) {
  Sequent g = canonicalize(goal);
  std::vector<Formula> base = g.antecedent;
  if (g.succedent) base.push_back(*g.succedent);
  const auto all = saturate_oracle(base, assumptions, bound, max_leaves);
  return all.count(g) > 0;
}

}  // namespace lnarg
