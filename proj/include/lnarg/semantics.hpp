// Dung-style evaluation of defeat graphs and the rationality checks for
// complete extensions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lnarg/arguments.hpp"

namespace lnarg {

/// Sorted member indices.
using Extension = std::vector<std::size_t>;

class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;

  ArgumentationFramework(std::size_t size, std::vector<std::pair<std::size_t, std::size_t>> edges)
      : size_(size), edges_(std::move(edges)), attackers_(size), targets_(size) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [a, t] : edges_) {
      if (a >= size_ || t >= size_)
        throw std::out_of_range("defeat edge (" + std::to_string(a) + ", " + std::to_string(t) +
                                ") outside a framework of " + std::to_string(size_));
      attackers_[t].push_back(a);
      targets_[a].push_back(t);
    }
  }

  /// Framework over an argument set; parallel attacks on different
  /// sub-arguments collapse into one edge.
  static ArgumentationFramework from_defeats(const ArgumentSet& set,
                                             const std::vector<Attack>& defeats) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& d : defeats) edges.push_back({d.attacker, d.target});
    return ArgumentationFramework(set.size(), std::move(edges));
  }

  std::size_t size() const { return size_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& attackers(std::size_t a) const { return attackers_.at(a); }
  const std::vector<std::size_t>& targets(std::size_t a) const { return targets_.at(a); }
  bool defeats(std::size_t a, std::size_t t) const {
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, t));
  }

  /// Sub-framework induced by `keep`, renumbered in the given order.
  ArgumentationFramework restrict_to(const std::vector<std::size_t>& keep) const {
    std::vector<std::size_t> index(size_, SIZE_MAX);
    for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = i;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [a, t] : edges_)
      if (index[a] != SIZE_MAX && index[t] != SIZE_MAX) edges.push_back({index[a], index[t]});
    return ArgumentationFramework(keep.size(), std::move(edges));
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> attackers_;
  std::vector<std::vector<std::size_t>> targets_;
};

namespace detail {

inline std::vector<bool> membership(const ArgumentationFramework& af, const Extension& e) {
  std::vector<bool> in(af.size(), false);
  for (std::size_t a : e) {
    if (a >= af.size()) throw std::out_of_range("extension member outside the framework");
    in[a] = true;
  }
  return in;
}

}  // namespace detail

inline bool conflict_free(const ArgumentationFramework& af, const Extension& e) {
  const auto in = detail::membership(af, e);
  for (auto [a, t] : af.edges())
    if (in[a] && in[t]) return false;
  return true;
}

inline bool defends(const ArgumentationFramework& af, const Extension& e, std::size_t a) {
  const auto in = detail::membership(af, e);
  for (std::size_t b : af.attackers(a)) {
    bool countered = false;
    for (std::size_t c : af.attackers(b)) countered = countered || in[c];
    if (!countered) return false;
  }
  return true;
}

/// Least fixed point of the defence function, computed by label propagation.
inline Extension grounded_extension(const ArgumentationFramework& af) {
  enum : std::uint8_t { Undec, In, Out };
  std::vector<std::uint8_t> label(af.size(), Undec);
  std::vector<std::size_t> open_attackers(af.size());
  std::vector<std::size_t> queue;
  for (std::size_t a = 0; a < af.size(); ++a) {
    open_attackers[a] = af.attackers(a).size();
    if (open_attackers[a] == 0) {
      label[a] = In;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    const std::size_t a = queue.back();
    queue.pop_back();
    for (std::size_t t : af.targets(a)) {
      if (label[t] != Undec) continue;
      label[t] = Out;
      for (std::size_t u : af.targets(t))
        if (label[u] == Undec && --open_attackers[u] == 0) {
          label[u] = In;
          queue.push_back(u);
        }
    }
  }
  Extension out;
  for (std::size_t a = 0; a < af.size(); ++a)
    if (label[a] == In) out.push_back(a);
  return out;
}

struct SemanticsLimits {
  std::size_t max_arguments = 5000;
  std::size_t max_extensions = 100'000;
};

namespace detail {

enum class Lab : std::uint8_t { None, In, Out, Undec };

class LabellingSearch {
 public:
  LabellingSearch(const ArgumentationFramework& af, std::size_t cap)
      : af_(af), cap_(cap), twins_(af.size()) {
    // Arguments with the same attackers carry the same label in every
    // complete labelling, so they are decided together.
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> classes;
    for (std::size_t a = 0; a < af_.size(); ++a) {
      auto key = af_.attackers(a);
      std::sort(key.begin(), key.end());
      classes[key].push_back(a);
    }
    for (const auto& [key, members] : classes)
      for (std::size_t a : members) twins_[a] = members;
  }

  bool run(std::vector<Extension>& out) {
    std::vector<Lab> lab(af_.size(), Lab::None);
    // Start from the grounded labelling, which every complete labelling extends.
    std::vector<std::size_t> work;
    const auto grounded = grounded_extension(af_);
    bool ok = true;
    for (std::size_t a : grounded) ok = ok && assign(lab, a, Lab::In, work);
    for (std::size_t a = 0; a < af_.size(); ++a) work.push_back(a);
    if (ok && propagate(lab, work)) search(lab, out);
    return !overflow_;
  }

 private:
  bool assign(std::vector<Lab>& lab, std::size_t a, Lab l, std::vector<std::size_t>& work) const {
    for (std::size_t t : twins_[a]) {
      if (lab[t] == l) continue;
      if (lab[t] != Lab::None) return false;
      lab[t] = l;
      work.push_back(t);
      for (std::size_t u : af_.targets(t)) work.push_back(u);
      for (std::size_t u : af_.attackers(t)) work.push_back(u);
    }
    return true;
  }

  // Applies forced labels until a fixed point; false on contradiction.
  bool propagate(std::vector<Lab>& lab, std::vector<std::size_t>& work) const {
    while (!work.empty()) {
      const std::size_t a = work.back();
      work.pop_back();
      const auto& att = af_.attackers(a);
      std::size_t in = 0, out = 0, undec = 0;
      std::size_t open = SIZE_MAX;  // some unlabelled attacker
      for (std::size_t b : att) {
        switch (lab[b]) {
          case Lab::In: ++in; break;
          case Lab::Out: ++out; break;
          case Lab::Undec: ++undec; break;
          case Lab::None: open = b; break;
        }
      }
      const std::size_t none = att.size() - in - out - undec;
      bool ok = true;
      switch (lab[a]) {
        case Lab::None:
          if (in > 0) ok = assign(lab, a, Lab::Out, work);
          else if (out == att.size()) ok = assign(lab, a, Lab::In, work);
          else if (none == 0) ok = assign(lab, a, Lab::Undec, work);
          break;
        case Lab::In:
          if (in > 0 || undec > 0) return false;
          for (std::size_t b : att)
            if (lab[b] == Lab::None) ok = ok && assign(lab, b, Lab::Out, work);
          break;
        case Lab::Out:
          if (in == 0 && none == 0) return false;
          if (in == 0 && none == 1) ok = assign(lab, open, Lab::In, work);
          break;
        case Lab::Undec:
          if (in > 0 || out == att.size()) return false;
          break;
      }
      if (!ok) return false;
    }
    return true;
  }

  void search(const std::vector<Lab>& lab, std::vector<Extension>& out) {
    if (overflow_) return;
    std::size_t pick = SIZE_MAX;
    for (std::size_t a = 0; a < af_.size() && pick == SIZE_MAX; ++a)
      if (lab[a] == Lab::None) pick = a;
    if (pick == SIZE_MAX) {
      if (out.size() >= cap_) {
        overflow_ = true;
        return;
      }
      Extension e;
      for (std::size_t a = 0; a < af_.size(); ++a)
        if (lab[a] == Lab::In) e.push_back(a);
      out.push_back(std::move(e));
      return;
    }
    for (Lab choice : {Lab::In, Lab::Out, Lab::Undec}) {
      std::vector<Lab> next = lab;
      std::vector<std::size_t> work;
      if (assign(next, pick, choice, work) && propagate(next, work)) search(next, out);
    }
  }

  const ArgumentationFramework& af_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> twins_;
  bool overflow_ = false;
};

}  // namespace detail

/// Every complete extension, sorted. Frameworks beyond the limits fall back to
/// the grounded extension alone; `diagnostic` then explains why.
inline std::vector<Extension> complete_extensions(const ArgumentationFramework& af,
                                                  const SemanticsLimits& limits = {},
                                                  std::string* diagnostic = nullptr) {
  auto fallback = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why + "; reporting the grounded extension only";
    return std::vector<Extension>{grounded_extension(af)};
  };
  if (af.size() > limits.max_arguments)
    return fallback("framework has " + std::to_string(af.size()) + " arguments (limit " +
                    std::to_string(limits.max_arguments) + ")");
  std::vector<Extension> out;
  if (!detail::LabellingSearch(af, limits.max_extensions).run(out))
    return fallback("more than " + std::to_string(limits.max_extensions) +
                    " complete extensions");
  if (diagnostic) diagnostic->clear();
  std::sort(out.begin(), out.end());
  return out;
}

/// The subset-maximal complete extensions.
inline std::vector<Extension> preferred_extensions(const ArgumentationFramework& af,
                                                   const SemanticsLimits& limits = {},
                                                   std::string* diagnostic = nullptr) {
  const auto complete = complete_extensions(af, limits, diagnostic);
  std::vector<Extension> out;
  for (const auto& e : complete) {
    bool maximal = true;
    for (const auto& f : complete)
      if (f.size() > e.size() && std::includes(f.begin(), f.end(), e.begin(), e.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(e);
  }
  return out;
}

/// Reference enumeration: checks every subset against the definition.
inline std::vector<Extension> brute_force_extensions(const ArgumentationFramework& af) {
  const std::size_t n = af.size();
  if (n > 20) throw std::invalid_argument("brute_force_extensions: more than 20 arguments");
  std::vector<std::uint32_t> attackers(n, 0);
  for (auto [a, t] : af.edges()) attackers[t] |= 1u << a;
  std::vector<Extension> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      if ((s >> a & 1u) && (attackers[a] & s)) ok = false;
    for (std::size_t a = 0; a < n && ok; ++a) {
      // a is defended iff each of its attackers is attacked from s.
      bool defended = true;
      for (std::size_t b = 0; b < n; ++b)
        if ((attackers[a] >> b & 1u) && !(attackers[b] & s)) defended = false;
      if (defended != bool(s >> a & 1u)) ok = false;
    }
    if (!ok) continue;
    Extension e;
    for (std::size_t a = 0; a < n; ++a)
      if (s >> a & 1u) e.push_back(a);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Rationality postulates

struct RationalityReport {
  bool subargument_closed = true;
  bool strict_closed = true;
  bool consistent = true;        // label-erased
  bool consistent_exact = true;  // same labels on both sides
  std::size_t closure_rules = 0;  // size of the strict base the closure ranged over
  std::vector<std::string> witnesses;

  bool ok() const { return subargument_closed && strict_closed && consistent; }
};

/// Checks an extension of the argument set's framework for sub-argument
/// closure, closure of its conclusions under the strict base, and
/// consistency of those conclusions.
inline RationalityReport check_rationality(const ArgumentSet& set, const Extension& extension) {
  RationalityReport r;
  r.closure_rules = set.strict ? set.strict->rules.size() : 0;
  std::set<std::size_t> members(extension.begin(), extension.end());
  std::set<LabelledLiteral> conclusions;
  for (std::size_t a : extension) {
    conclusions.insert(set[a].conclusion);
    for (std::size_t s : set[a].sub)
      if (!members.count(s)) {
        r.subargument_closed = false;
        r.witnesses.push_back("sub-argument " + set[s].handle() + " of " + set[a].handle() +
                              " is missing");
      }
  }
  if (set.strict) {
    for (const auto& rule : set.strict->rules) {
      if (rule.is_identity()) continue;
      const bool applicable = std::all_of(rule.antecedent.begin(), rule.antecedent.end(),
                                          [&](const auto& l) { return conclusions.count(l) > 0; });
      if (applicable && !conclusions.count(rule.consequent)) {
        r.strict_closed = false;
        r.witnesses.push_back("strict rule " + rule.str(Notation::Ascii) +
                              " leads outside the conclusions");
      }
    }
  }
  for (const auto& c : conclusions) {
    if (c.negative) continue;
    for (auto it = conclusions.lower_bound(LabelledLiteral{true, c.atom, {}});
         it != conclusions.end() && it->atom == c.atom && it->negative; ++it) {
      r.consistent = false;
      r.witnesses.push_back("conflicting conclusions " + c.str(Notation::Ascii) + " and " +
                            it->str(Notation::Ascii));
      if (it->labels == c.labels) r.consistent_exact = false;
    }
  }
  return r;
}

}  // namespace lnarg
