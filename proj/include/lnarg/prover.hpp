// Bounded decision procedure for propositional LN with assumption sequents.
//
// The search is a forward chart saturation (CYK style). Antecedents are kept
// as cyclic sequences: every chart entry stores its lexicographically least
// rotation, which absorbs the (Cyc) rule, and flat sequences absorb (Ass).
// The formula universe is the subformula closure of the goal and the
// assumptions. Every sequent in an analytic derivation has at most as many
// leaves as the goal when each assumption is leaf-balanced (as the order
// sequents i => j are), so the chart is pruned by that leaf bound and a
// saturation that closes under it is a definitive NotProvable.

#pragma once

#include <algorithm>
#include <deque>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lnarg/formula.hpp"

namespace lnarg {

enum class Rule {
  Id,
  UnitL,
  UnitR,
  Cut,
  FusionL,
  FusionR,
  NegL,
  NegR,
  DoubleNegL,
  DoubleNegR,
  Ass,
  Cyc,
  Assumption
};

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Id: return "Id";
    case Rule::UnitL: return "uL";
    case Rule::UnitR: return "uR";
    case Rule::Cut: return "Cut";
    case Rule::FusionL: return "·L";
    case Rule::FusionR: return "·R";
    case Rule::NegL: return "¬L";
    case Rule::NegR: return "¬R";
    case Rule::DoubleNegL: return "¬¬L";
    case Rule::DoubleNegR: return "¬¬R";
    case Rule::Ass: return "Ass";
    case Rule::Cyc: return "Cyc";
    case Rule::Assumption: return "Assumption";
  }
  return "?";
}

struct ProofTree {
  Sequent conclusion;
  Rule rule = Rule::Id;
  std::vector<ProofTree> premises;

  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& p : premises) n += p.size();
    return n;
  }

  /// Indented rendering, conclusion first.
  std::string str(Notation notation = Notation::Unicode) const {
    std::string out;
    render(out, 0, notation);
    return out;
  }

 private:
  void render(std::string& out, std::size_t depth, Notation notation) const {
    out += std::string(depth * 2, ' ') + conclusion.str(notation) + "   [" + rule_name(rule) +
           "]\n";
    for (const auto& p : premises) p.render(out, depth + 1, notation);
  }
};

/// Search limits. The prover's formula universe is the subformula closure of
/// its input, so `max_formula_size` only bounds the saturation oracle, which
/// also builds formulas beyond that closure.
struct SearchBudget {
  std::size_t max_formula_size = 12;
  std::size_t max_antecedent_length = 16;
  std::size_t max_chart_entries = 1'000'000;
};

enum class ProofStatus { Provable, NotProvable, BudgetExhausted };

inline const char* status_name(ProofStatus s) {
  switch (s) {
    case ProofStatus::Provable: return "Provable";
    case ProofStatus::NotProvable: return "NotProvable";
    case ProofStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

struct ProofResult {
  ProofStatus status = ProofStatus::NotProvable;
  std::optional<ProofTree> proof;
  std::size_t chart_entries = 0;
  std::string reason;  // why the budget ran out, when it did
};

// ---------------------------------------------------------------------------
// Cyclic sequence helpers (shared with the proof checker)

template <class T>
std::vector<T> rotate_left(const std::vector<T>& v, std::size_t k) {
  std::vector<T> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[(i + k) % v.size()]);
  return out;
}

template <class T>
bool same_cycle(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (rotate_left(a, k) == b) return true;
  return false;
}

/// A sequent's leaf count: the measure that analytic rules never increase
/// going from conclusion to premise.
inline std::size_t sequent_leaves(const Sequent& s) {
  std::size_t n = s.succedent ? s.succedent->leaves() : 0;
  for (const auto& f : s.antecedent) n += f.leaves();
  return n;
}

/// How far one cut against `assumption` can raise the leaf count of the open
/// premise above that of the conclusion. Order sequents have excess zero.
inline long assumption_excess(const Sequent& a) {
  long ante = 0;
  for (const auto& f : a.antecedent) ante += static_cast<long>(f.leaves());
  const long succ = a.succedent ? static_cast<long>(a.succedent->leaves()) : 0;
  long excess = succ - ante;
  for (const auto& f : a.antecedent)
    excess = std::max(excess, static_cast<long>(f.leaves()) - ante - succ);
  return excess;
}

namespace detail {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class Chart {
 public:
  Chart(const Sequent& goal, std::span<const Sequent> assumptions, const SearchBudget& budget)
      : budget_(budget) {
    goal_ = canonicalize(goal);
    for (const auto& f : goal_.antecedent) intern_closure(f);
    if (goal_.succedent) intern_closure(*goal_.succedent);
    for (const auto& a : assumptions) {
      Sequent c = canonicalize(a);
      for (const auto& f : c.antecedent) intern_closure(f);
      if (c.succedent) intern_closure(*c.succedent);
      assumptions_.push_back(std::move(c));
    }
    index_connectives();

    long excess = 0;
    for (const auto& a : assumptions_) excess = std::max(excess, assumption_excess(a));
    leaf_bound_ = sequent_leaves(goal_) + static_cast<std::size_t>(std::max(0L, excess));
    bound_is_complete_ = excess <= 0;
  }

  ProofResult run() {
    ProofResult result;
    goal_key_ = key_of(encode(goal_.antecedent), goal_.succedent ? id_of(*goal_.succedent) : -1);

    // Axioms.
    for (int f = 0; f < static_cast<int>(pool_.size()); ++f) add({f}, f, Rule::Id, {});
    if (unit_ >= 0) add({}, unit_, Rule::UnitR, {});
    for (const auto& a : assumptions_)
      add(encode(a.antecedent), a.succedent ? id_of(*a.succedent) : -1, Rule::Assumption, {});

    while (!agenda_.empty() && !found_ && !overflow_) {
      int e = agenda_.front();
      agenda_.pop_front();
      process(e);
    }

    result.chart_entries = entries_.size();
    if (found_) {
      result.status = ProofStatus::Provable;
      result.proof = build(*found_);
      return result;
    }
    if (overflow_) {
      result.status = ProofStatus::BudgetExhausted;
      result.reason = "chart entry limit reached";
      return result;
    }
    if (truncated_ || !bound_is_complete_) {
      result.status = ProofStatus::BudgetExhausted;
      result.reason = truncated_ ? "antecedent length limit cut off part of the search"
                                 : "assumptions are not leaf-balanced";
      return result;
    }
    result.status = ProofStatus::NotProvable;
    return result;
  }

 private:
  struct Entry {
    std::vector<int> ante;
    int succ;
    Rule rule;
    std::vector<int> premises;
  };

  // -- formula pool ---------------------------------------------------------

  int intern_closure(const Formula& f) {
    if (auto it = ids_.find(f); it != ids_.end()) return it->second;
    std::vector<int> kids;
    if (f.is(FormulaKind::Neg)) kids.push_back(intern_closure(f.operand()));
    if (f.is(FormulaKind::Fusion)) {
      kids.push_back(intern_closure(f.left()));
      kids.push_back(intern_closure(f.right()));
    }
    const int id = static_cast<int>(pool_.size());
    pool_.push_back(f);
    kids_.push_back(std::move(kids));
    leaves_.push_back(f.leaves());
    ids_.emplace(f, id);
    return id;
  }

  int id_of(const Formula& f) const { return ids_.at(f); }

  std::vector<int> encode(const std::vector<Formula>& fs) const {
    std::vector<int> out;
    for (const auto& f : fs) out.push_back(id_of(f));
    return out;
  }

  void index_connectives() {
    const int n = static_cast<int>(pool_.size());
    neg_of_.assign(n, -1);
    fusion_by_left_.assign(n, {});
    fusion_by_right_.assign(n, {});
    for (int id = 0; id < n; ++id) {
      const Formula& f = pool_[id];
      if (f.is(FormulaKind::Neg)) neg_of_[kids_[id][0]] = id;
      if (f.is(FormulaKind::Fusion)) {
        fusion_by_left_[kids_[id][0]].push_back({kids_[id][1], id});
        fusion_by_right_[kids_[id][1]].push_back({kids_[id][0], id});
        fusion_of_[{kids_[id][0], kids_[id][1]}] = id;
      }
      if (f.is(FormulaKind::Unit)) unit_ = id;
    }
    by_succ_.assign(n, {});
    by_ante_.assign(n, {});
  }

  // -- chart ----------------------------------------------------------------

  static std::vector<int> least_rotation(const std::vector<int>& v) {
    std::vector<int> best = v;
    for (std::size_t k = 1; k < v.size(); ++k) {
      auto r = rotate_left(v, k);
      if (r < best) best = std::move(r);
    }
    return best;
  }

  static std::vector<int> key_of(const std::vector<int>& ante, int succ) {
    std::vector<int> k = least_rotation(ante);
    k.push_back(succ);
    return k;
  }

  std::size_t leaves_of(const std::vector<int>& ante, int succ) const {
    std::size_t n = succ >= 0 ? leaves_[succ] : 0;
    for (int f : ante) n += leaves_[f];
    return n;
  }

  void add(std::vector<int> ante, int succ, Rule rule, std::vector<int> premises) {
    if (found_ || overflow_) return;
    if (leaves_of(ante, succ) > leaf_bound_) return;
    if (ante.size() > budget_.max_antecedent_length) {
      truncated_ = true;
      return;
    }
    auto key = key_of(ante, succ);
    if (seen_.count(key)) return;
    if (entries_.size() >= budget_.max_chart_entries) {
      overflow_ = true;
      return;
    }
    const int id = static_cast<int>(entries_.size());
    seen_.emplace(key, id);
    entries_.push_back(Entry{std::move(ante), succ, rule, std::move(premises)});
    agenda_.push_back(id);
    if (key == goal_key_) found_ = id;
  }

  void process(int e) {
    // Copy: `entries_` may reallocate while we add conclusions.
    const std::vector<int> ante = entries_[e].ante;
    const int succ = entries_[e].succ;
    const std::size_t n = ante.size();

    // Index first so the entry can pair with itself.
    if (succ >= 0) by_succ_[succ].push_back(e);
    {
      std::vector<int> distinct = ante;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int f : distinct) by_ante_[f].push_back(e);
    }

    // uL: insert u at any gap.
    // A cyclic sequence of length n has max(n, 1) distinct gaps.
    if (unit_ >= 0)
      for (std::size_t i = 0; i < std::max<std::size_t>(n, 1); ++i) {
        auto a = ante;
        a.insert(a.begin() + static_cast<long>(i), unit_);
        add(std::move(a), succ, Rule::UnitL, {e});
      }

    // ·L on any cyclically adjacent pair.
    if (n >= 2)
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        auto it = fusion_of_.find({ante[i], ante[j]});
        if (it == fusion_of_.end()) continue;
        std::vector<int> a;
        for (std::size_t k = 2; k < n; ++k) a.push_back(ante[(j + k - 1) % n]);
        a.push_back(it->second);
        add(std::move(a), succ, Rule::FusionL, {e});
      }

    // ¬L: A, Γ => ⊢ Γ => ¬A.
    if (succ < 0)
      for (std::size_t i = 0; i < n; ++i) {
        const int neg = neg_of_[ante[i]];
        if (neg < 0) continue;
        std::vector<int> a;
        for (std::size_t k = 1; k < n; ++k) a.push_back(ante[(i + k) % n]);
        add(std::move(a), neg, Rule::NegL, {e});
      }

    // ¬R: Γ => A ⊢ Γ, ¬A =>.
    if (succ >= 0 && neg_of_[succ] >= 0)
      for (std::size_t i = 0; i < std::max<std::size_t>(n, 1); ++i) {
        auto a = ante;
        a.insert(a.begin() + static_cast<long>(i), neg_of_[succ]);
        add(std::move(a), -1, Rule::NegR, {e});
      }

    // ¬¬L on any position.
    for (std::size_t i = 0; i < n; ++i) {
      const int neg = neg_of_[ante[i]];
      if (neg < 0 || neg_of_[neg] < 0) continue;
      auto a = ante;
      a[i] = neg_of_[neg];
      add(std::move(a), succ, Rule::DoubleNegL, {e});
    }

    // ¬¬R.
    if (succ >= 0 && neg_of_[succ] >= 0 && neg_of_[neg_of_[succ]] >= 0)
      add(ante, neg_of_[neg_of_[succ]], Rule::DoubleNegR, {e});

    // Cut, this entry as the left premise Δ => B.
    if (succ >= 0)
      for (int r : std::vector<int>(by_ante_[succ])) cut(e, r);
    // Cut, this entry as the right premise Γ, B => A.
    {
      std::vector<int> distinct = ante;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int f : distinct)
        for (int l : std::vector<int>(by_succ_[f]))
          if (l != e) cut(l, e);
    }

    // ·R with this entry on either side.
    if (succ >= 0) {
      for (auto [right, ab] : std::vector<std::pair<int, int>>(fusion_by_left_[succ]))
        for (int r : std::vector<int>(by_succ_[right])) fusion_r(e, r, ab);
      for (auto [left, ab] : std::vector<std::pair<int, int>>(fusion_by_right_[succ]))
        for (int l : std::vector<int>(by_succ_[left]))
          if (l != e) fusion_r(l, e, ab);
    }
  }

  void cut(int left, int right) {
    const std::vector<int> delta = entries_[left].ante;
    const int b = entries_[left].succ;
    const std::vector<int> gamma = entries_[right].ante;
    const int succ = entries_[right].succ;
    if (gamma.size() - 1 + delta.size() > budget_.max_antecedent_length) {
      if (leaves_of(gamma, succ) - leaves_[b] + leaves_of(delta, -1) <= leaf_bound_)
        truncated_ = true;
      return;
    }
    const std::size_t rotations = std::max<std::size_t>(delta.size(), 1);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      if (gamma[i] != b) continue;
      for (std::size_t k = 0; k < rotations; ++k) {
        std::vector<int> a(gamma.begin(), gamma.begin() + static_cast<long>(i));
        for (std::size_t d = 0; d < delta.size(); ++d) a.push_back(delta[(d + k) % delta.size()]);
        a.insert(a.end(), gamma.begin() + static_cast<long>(i) + 1, gamma.end());
        add(std::move(a), succ, Rule::Cut, {left, right});
      }
    }
  }

  void fusion_r(int left, int right, int ab) {
    const std::vector<int> g = entries_[left].ante;
    const std::vector<int> d = entries_[right].ante;
    if (g.size() + d.size() > budget_.max_antecedent_length) {
      if (leaves_of(g, -1) + leaves_of(d, -1) + leaves_[ab] <= leaf_bound_) truncated_ = true;
      return;
    }
    const std::size_t rg = std::max<std::size_t>(g.size(), 1);
    const std::size_t rd = std::max<std::size_t>(d.size(), 1);
    for (std::size_t i = 0; i < rg; ++i)
      for (std::size_t j = 0; j < rd; ++j) {
        std::vector<int> a = g.empty() ? g : rotate_left(g, i);
        auto dr = d.empty() ? d : rotate_left(d, j);
        a.insert(a.end(), dr.begin(), dr.end());
        add(std::move(a), ab, Rule::FusionR, {left, right});
      }
  }

  Sequent decode(const Entry& e) const {
    Sequent s;
    for (int f : e.ante) s.antecedent.push_back(pool_[f]);
    if (e.succ >= 0) s.succedent = pool_[e.succ];
    return s;
  }

  ProofTree build(int id) const {
    const Entry& e = entries_[id];
    ProofTree t{decode(e), e.rule, {}};
    for (int p : e.premises) t.premises.push_back(build(p));
    return t;
  }

  struct PairHash {
    std::size_t operator()(const std::pair<int, int>& p) const {
      return std::hash<long long>{}((static_cast<long long>(p.first) << 32) ^ p.second);
    }
  };

  SearchBudget budget_;
  Sequent goal_;
  std::vector<Sequent> assumptions_;
  std::vector<Formula> pool_;
  std::vector<std::vector<int>> kids_;
  std::vector<std::size_t> leaves_;
  std::unordered_map<Formula, int, FormulaHash> ids_;
  std::vector<int> neg_of_;
  std::vector<std::vector<std::pair<int, int>>> fusion_by_left_, fusion_by_right_;
  std::unordered_map<std::pair<int, int>, int, PairHash> fusion_of_;
  int unit_ = -1;

  std::vector<Entry> entries_;
  std::unordered_map<std::vector<int>, int, VecHash> seen_;
  std::deque<int> agenda_;
  std::vector<std::vector<int>> by_succ_, by_ante_;
  std::vector<int> goal_key_;
  std::optional<int> found_;
  std::size_t leaf_bound_ = 0;
  bool bound_is_complete_ = true;
  bool truncated_ = false;
  bool overflow_ = false;
};

}  // namespace detail

/// Decides whether `goal` is derivable in LN extended with `assumptions` as
/// extra axioms. BudgetExhausted is never a claim of non-derivability.
inline ProofResult prove(const Sequent& goal, std::span<const Sequent> assumptions,
                         const SearchBudget& budget = {}) {
  detail::Chart chart(goal, assumptions, budget);
  return chart.run();
}

inline ProofResult prove(const Sequent& goal, const std::vector<Sequent>& assumptions,
                         const SearchBudget& budget = {}) {
  return prove(goal, std::span<const Sequent>(assumptions), budget);
}

/// Γ1, A, Γ2 => B becomes Γ1, ~B, Γ2 => ~A. `position` is 1-based.
inline Sequent contrapose(const Sequent& s, std::size_t position) {
  if (!s.succedent) throw std::invalid_argument("contrapose: sequent has an empty succedent");
  if (position == 0 || position > s.antecedent.size())
    throw std::invalid_argument("contrapose: antecedent position out of range");
  Sequent out = s;
  out.antecedent[position - 1] = Formula::neg(*s.succedent);
  out.succedent = Formula::neg(s.antecedent[position - 1]);
  return out;
}

// ---------------------------------------------------------------------------
// Proof checking

namespace detail {

inline bool ante_cycle_eq(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  return same_cycle(a, b);
}

inline std::vector<Formula> erase_at(std::vector<Formula> v, std::size_t i) {
  v.erase(v.begin() + static_cast<long>(i));
  return v;
}

inline bool check_node(const ProofTree& t, std::span<const Sequent> assumptions,
                       std::string& why) {
  const Sequent& c = t.conclusion;
  const auto& p = t.premises;
  auto expect = [&](std::size_t n) {
    if (p.size() != n) {
      why = std::string(rule_name(t.rule)) + " expects " + std::to_string(n) + " premises";
      return false;
    }
    return true;
  };
  auto bad = [&] {
    why = std::string("not an instance of ") + rule_name(t.rule) + ": " + c.str();
    return false;
  };
  switch (t.rule) {
    case Rule::Id:
      if (!expect(0)) return false;
      if (c.antecedent.size() == 1 && c.succedent && c.antecedent[0] == *c.succedent) return true;
      return bad();
    case Rule::Assumption:
      if (!expect(0)) return false;
      for (const auto& a : assumptions) {
        Sequent ca = canonicalize(a);
        if (ca.succedent == c.succedent && ante_cycle_eq(ca.antecedent, c.antecedent)) return true;
      }
      return bad();
    case Rule::UnitR:
      if (!expect(0)) return false;
      if (c.antecedent.empty() && c.succedent && c.succedent->is(FormulaKind::Unit)) return true;
      return bad();
    case Rule::UnitL:
      if (!expect(1)) return false;
      if (c.succedent != p[0].conclusion.succedent) return bad();
      for (std::size_t i = 0; i < c.antecedent.size(); ++i)
        if (c.antecedent[i].is(FormulaKind::Unit) &&
            ante_cycle_eq(erase_at(c.antecedent, i), p[0].conclusion.antecedent))
          return true;
      return bad();
    case Rule::FusionL: {
      if (!expect(1)) return false;
      if (c.succedent != p[0].conclusion.succedent) return bad();
      for (std::size_t i = 0; i < c.antecedent.size(); ++i) {
        if (!c.antecedent[i].is(FormulaKind::Fusion)) continue;
        auto opened = c.antecedent;
        opened[i] = c.antecedent[i].left();
        opened.insert(opened.begin() + static_cast<long>(i) + 1, c.antecedent[i].right());
        if (ante_cycle_eq(opened, p[0].conclusion.antecedent)) return true;
      }
      return bad();
    }
    case Rule::FusionR: {
      if (!expect(2)) return false;
      const auto& l = p[0].conclusion;
      const auto& r = p[1].conclusion;
      if (!c.succedent || !c.succedent->is(FormulaKind::Fusion) || !l.succedent || !r.succedent ||
          c.succedent->left() != *l.succedent || c.succedent->right() != *r.succedent)
        return bad();
      const std::size_t rl = std::max<std::size_t>(l.antecedent.size(), 1);
      const std::size_t rr = std::max<std::size_t>(r.antecedent.size(), 1);
      for (std::size_t i = 0; i < rl; ++i)
        for (std::size_t j = 0; j < rr; ++j) {
          auto a = l.antecedent.empty() ? l.antecedent : rotate_left(l.antecedent, i);
          auto b = r.antecedent.empty() ? r.antecedent : rotate_left(r.antecedent, j);
          a.insert(a.end(), b.begin(), b.end());
          if (ante_cycle_eq(a, c.antecedent)) return true;
        }
      return bad();
    }
    case Rule::NegL: {
      if (!expect(1)) return false;
      const auto& q = p[0].conclusion;
      if (q.succedent || !c.succedent || !c.succedent->is(FormulaKind::Neg)) return bad();
      for (std::size_t i = 0; i < q.antecedent.size(); ++i)
        if (q.antecedent[i] == c.succedent->operand()) {
          // A, Γ => with A at i: Γ is the rest read cyclically from i + 1.
          auto rest = rotate_left(q.antecedent, i);
          rest.erase(rest.begin());
          if (ante_cycle_eq(rest, c.antecedent)) return true;
        }
      return bad();
    }
    case Rule::NegR: {
      if (!expect(1)) return false;
      const auto& q = p[0].conclusion;
      if (c.succedent || !q.succedent) return bad();
      for (std::size_t i = 0; i < c.antecedent.size(); ++i)
        if (c.antecedent[i] == Formula::neg(*q.succedent) &&
            ante_cycle_eq(erase_at(c.antecedent, i), q.antecedent))
          return true;
      return bad();
    }
    case Rule::DoubleNegL: {
      if (!expect(1)) return false;
      const auto& q = p[0].conclusion;
      if (c.succedent != q.succedent) return bad();
      for (std::size_t i = 0; i < c.antecedent.size(); ++i) {
        const auto& f = c.antecedent[i];
        if (!f.is(FormulaKind::Neg) || !f.operand().is(FormulaKind::Neg)) continue;
        auto a = c.antecedent;
        a[i] = f.operand().operand();
        if (ante_cycle_eq(a, q.antecedent)) return true;
      }
      return bad();
    }
    case Rule::DoubleNegR: {
      if (!expect(1)) return false;
      const auto& q = p[0].conclusion;
      if (!q.succedent || !c.succedent || *c.succedent != Formula::neg(Formula::neg(*q.succedent)))
        return bad();
      if (ante_cycle_eq(c.antecedent, q.antecedent)) return true;
      return bad();
    }
    case Rule::Cut: {
      if (!expect(2)) return false;
      const auto& l = p[0].conclusion;  // Δ => B
      const auto& r = p[1].conclusion;  // Γ, B => A
      if (!l.succedent || c.succedent != r.succedent) return bad();
      const std::size_t rd = std::max<std::size_t>(l.antecedent.size(), 1);
      for (std::size_t i = 0; i < r.antecedent.size(); ++i) {
        if (r.antecedent[i] != *l.succedent) continue;
        for (std::size_t k = 0; k < rd; ++k) {
          std::vector<Formula> a(r.antecedent.begin(), r.antecedent.begin() + static_cast<long>(i));
          auto d = l.antecedent.empty() ? l.antecedent : rotate_left(l.antecedent, k);
          a.insert(a.end(), d.begin(), d.end());
          a.insert(a.end(), r.antecedent.begin() + static_cast<long>(i) + 1, r.antecedent.end());
          if (ante_cycle_eq(a, c.antecedent)) return true;
        }
      }
      return bad();
    }
    case Rule::Cyc: {
      if (!expect(1)) return false;
      const auto& q = p[0].conclusion;
      if (c.succedent == q.succedent && !q.antecedent.empty() &&
          c.antecedent == rotate_left(q.antecedent, q.antecedent.size() - 1))
        return true;
      return bad();
    }
    case Rule::Ass:
      if (!expect(1)) return false;
      if (c == p[0].conclusion) return true;
      return bad();
  }
  return bad();
}

}  // namespace detail

/// Replays a proof tree, validating every node against its rule schema.
/// Antecedents are compared up to rotation, the effect of (Cyc).
inline bool check_proof(const ProofTree& tree, std::span<const Sequent> assumptions,
                        std::string* why = nullptr) {
  std::string reason;
  if (!detail::check_node(tree, assumptions, reason)) {
    if (why) *why = reason;
    return false;
  }
  for (const auto& p : tree.premises)
    if (!check_proof(p, assumptions, why)) return false;
  return true;
}

}  // namespace lnarg
