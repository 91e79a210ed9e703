// Object language of LN: ground terms, formulas, sequents and labelled literals.
//
// Formulas are immutable trees with shared structure, so copies are cheap and
// values may be shared freely between threads.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lnarg {

/// Ground term: a constant or a function symbol applied to terms.
struct Term {
  std::string symbol;
  std::vector<Term> args;

  bool operator==(const Term&) const = default;
  std::strong_ordering operator<=>(const Term& other) const {
    if (auto c = symbol <=> other.symbol; c != 0) return c;
    return std::lexicographical_compare_three_way(args.begin(), args.end(), other.args.begin(),
                                                  other.args.end());
  }
};

inline std::string to_string(const Term& t) {
  if (t.args.empty()) return t.symbol;
  std::string out = t.symbol + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ",";
    out += to_string(t.args[i]);
  }
  return out + ")";
}

enum class FormulaKind : std::uint8_t { Atom, Numeral, Neg, Fusion, Unit, Bottom };

enum class Notation { Ascii, Unicode };

class Formula {
 public:
  Formula() : Formula(unit()) {}

  static Formula atom(std::string predicate, std::vector<Term> terms = {}) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Atom;
    n->predicate = std::move(predicate);
    n->terms = std::move(terms);
    return finish(std::move(n));
  }
  static Formula numeral(unsigned value) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Numeral;
    n->value = value;
    return finish(std::move(n));
  }
  static Formula neg(Formula operand) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Neg;
    n->children.push_back(std::move(operand));
    return finish(std::move(n));
  }
  static Formula fusion(Formula left, Formula right) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Fusion;
    n->children.push_back(std::move(left));
    n->children.push_back(std::move(right));
    return finish(std::move(n));
  }
  static Formula unit() {
    static const Formula u = leaf(FormulaKind::Unit);
    return u;
  }
  static Formula bottom() {
    static const Formula b = leaf(FormulaKind::Bottom);
    return b;
  }

  FormulaKind kind() const { return node_->kind; }
  bool is(FormulaKind k) const { return node_->kind == k; }
  const std::string& predicate() const { return node_->predicate; }
  const std::vector<Term>& terms() const { return node_->terms; }
  unsigned value() const { return node_->value; }
  const Formula& operand() const { return node_->children.at(0); }
  const Formula& left() const { return node_->children.at(0); }
  const Formula& right() const { return node_->children.at(1); }

  /// Number of syntax nodes.
  std::size_t size() const { return node_->size; }
  /// Number of leaves (atoms, numerals, unit, bottom).
  std::size_t leaves() const { return node_->leaves; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || (a.node_->hash == b.node_->hash && compare(a, b) == 0);
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    return compare(a, b);
  }

  std::string str(Notation notation = Notation::Unicode) const {
    std::string out;
    render(out, notation);
    return out;
  }

 private:
  struct Node {
    FormulaKind kind = FormulaKind::Unit;
    std::string predicate;
    std::vector<Term> terms;
    unsigned value = 0;
    std::vector<Formula> children;
    std::size_t size = 1;
    std::size_t leaves = 1;
    std::size_t hash = 0;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula leaf(FormulaKind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    return finish(std::move(n));
  }

  static Formula finish(std::shared_ptr<Node> n) {
    std::size_t h = std::hash<int>{}(static_cast<int>(n->kind)) * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    if (n->kind == FormulaKind::Atom) {
      mix(std::hash<std::string>{}(n->predicate));
      mix(std::hash<std::string>{}(terms_string(n->terms)));
    }
    if (n->kind == FormulaKind::Numeral) mix(n->value);
    if (!n->children.empty()) {
      n->size = 1;
      n->leaves = 0;
      for (const auto& c : n->children) {
        n->size += c.size();
        n->leaves += c.leaves();
        mix(c.hash());
      }
    }
    n->hash = h;
    return Formula(std::shared_ptr<const Node>(std::move(n)));
  }

  static std::string terms_string(const std::vector<Term>& ts) {
    std::string s;
    for (const auto& t : ts) s += to_string(t) + ",";
    return s;
  }

  static std::strong_ordering compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    switch (a.kind()) {
      case FormulaKind::Atom:
        if (auto c = a.predicate() <=> b.predicate(); c != 0) return c;
        return std::lexicographical_compare_three_way(a.terms().begin(), a.terms().end(),
                                                      b.terms().begin(), b.terms().end());
      case FormulaKind::Numeral:
        return a.value() <=> b.value();
      case FormulaKind::Neg:
        return compare(a.operand(), b.operand());
      case FormulaKind::Fusion:
        if (auto c = compare(a.left(), b.left()); c != 0) return c;
        return compare(a.right(), b.right());
      default:
        return std::strong_ordering::equal;
    }
  }

  void render(std::string& out, Notation notation) const {
    switch (kind()) {
      case FormulaKind::Atom:
        out += predicate();
        if (!terms().empty()) {
          out += "(";
          for (std::size_t i = 0; i < terms().size(); ++i) {
            if (i) out += ",";
            out += to_string(terms()[i]);
          }
          out += ")";
        }
        return;
      case FormulaKind::Numeral:
        out += std::to_string(value());
        return;
      case FormulaKind::Unit:
        out += "u";
        return;
      case FormulaKind::Bottom:
        out += notation == Notation::Unicode ? "⊥" : "_|_";
        return;
      case FormulaKind::Neg:
        out += notation == Notation::Unicode ? "¬" : "~";
        if (operand().is(FormulaKind::Fusion)) {
          out += "(";
          operand().render(out, notation);
          out += ")";
        } else {
          operand().render(out, notation);
        }
        return;
      case FormulaKind::Fusion: {
        const bool nested_left = left().is(FormulaKind::Fusion);
        if (nested_left) out += "(";
        left().render(out, notation);
        if (nested_left) out += ")";
        out += notation == Notation::Unicode ? "·" : ".";
        right().render(out, notation);
        return;
      }
    }
  }

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << f.str(); }

// ---------------------------------------------------------------------------
// Canonical form and fusion chains

/// Leaves of the maximal fusion tree rooted at `f`, left to right.
inline void fusion_chain(const Formula& f, std::vector<Formula>& out) {
  if (f.is(FormulaKind::Fusion)) {
    fusion_chain(f.left(), out);
    fusion_chain(f.right(), out);
  } else {
    out.push_back(f);
  }
}

inline std::vector<Formula> fusion_chain(const Formula& f) {
  std::vector<Formula> out;
  fusion_chain(f, out);
  return out;
}

/// Right-nested fusion of a nonempty chain.
inline Formula fuse(const std::vector<Formula>& chain) {
  if (chain.empty()) throw std::invalid_argument("fuse: empty chain");
  Formula acc = chain.back();
  for (std::size_t i = chain.size() - 1; i-- > 0;) acc = Formula::fusion(chain[i], acc);
  return acc;
}

inline Formula canonicalize(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Neg:
      return Formula::neg(canonicalize(f.operand()));
    case FormulaKind::Fusion: {
      auto chain = fusion_chain(f);
      for (auto& c : chain) c = canonicalize(c);
      return fuse(chain);
    }
    default:
      return f;
  }
}

inline bool is_canonical(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Neg:
      return is_canonical(f.operand());
    case FormulaKind::Fusion:
      return !f.left().is(FormulaKind::Fusion) && is_canonical(f.left()) &&
             is_canonical(f.right());
    default:
      return true;
  }
}

// ---------------------------------------------------------------------------
// Label functions

namespace detail {
inline std::optional<Formula> erase_numerals(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Numeral:
      return std::nullopt;
    case FormulaKind::Neg: {
      auto inner = erase_numerals(f.operand());
      return Formula::neg(inner ? *inner : Formula::unit());
    }
    case FormulaKind::Fusion: {
      std::vector<Formula> kept;
      for (const auto& c : fusion_chain(f))
        if (auto e = erase_numerals(c)) kept.push_back(*e);
      if (kept.empty()) return std::nullopt;
      return fuse(kept);
    }
    default:
      return f;
  }
}

inline void collect_numerals(const Formula& f, std::vector<Formula>& out) {
  switch (f.kind()) {
    case FormulaKind::Numeral:
      out.push_back(f);
      return;
    case FormulaKind::Neg:
      collect_numerals(f.operand(), out);
      return;
    case FormulaKind::Fusion:
      collect_numerals(f.left(), out);
      collect_numerals(f.right(), out);
      return;
    default:
      return;
  }
}

inline void collect_position(const Formula& f, std::size_t x, std::set<unsigned>& out) {
  if (f.is(FormulaKind::Neg)) {
    collect_position(f.operand(), x, out);
    return;
  }
  if (!f.is(FormulaKind::Fusion)) return;
  // Numerals attach to the nearest nonnumeric element in front of them.
  std::size_t since_owner = 0;
  bool have_owner = false;
  for (const auto& c : fusion_chain(f)) {
    if (c.is(FormulaKind::Numeral)) {
      if (have_owner && ++since_owner == x) out.insert(c.value());
    } else {
      have_owner = true;
      since_owner = 0;
      collect_position(c, x, out);
    }
  }
}
}  // namespace detail

/// Erases every numeral. An all-numeral formula erases to the unit.
inline Formula en(const Formula& f) {
  auto e = detail::erase_numerals(canonicalize(f));
  return e ? *e : Formula::unit();
}

/// Fusion of the numerals of `f` in order, or the numeral 0 when there are none.
inline Formula nn(const Formula& f) {
  std::vector<Formula> nums;
  detail::collect_numerals(f, nums);
  if (nums.empty()) return Formula::numeral(0);
  return fuse(nums);
}

/// Label values at position x (1-based) behind each nonnumeric component.
inline std::set<unsigned> nx(const Formula& f, std::size_t x) {
  std::set<unsigned> out;
  if (x == 0) return out;
  detail::collect_position(canonicalize(f), x, out);
  return out;
}

// ---------------------------------------------------------------------------
// Sequents

struct Sequent {
  std::vector<Formula> antecedent;
  std::optional<Formula> succedent;

  bool operator==(const Sequent&) const = default;
  std::strong_ordering operator<=>(const Sequent& o) const {
    if (auto c = std::lexicographical_compare_three_way(antecedent.begin(), antecedent.end(),
                                                        o.antecedent.begin(), o.antecedent.end());
        c != 0)
      return c;
    if (succedent.has_value() != o.succedent.has_value())
      return succedent.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!succedent) return std::strong_ordering::equal;
    return *succedent <=> *o.succedent;
  }

  std::string str(Notation notation = Notation::Unicode) const {
    std::string out;
    for (std::size_t i = 0; i < antecedent.size(); ++i) {
      if (i) out += ", ";
      out += antecedent[i].str(notation);
    }
    out += antecedent.empty() ? "=>" : " =>";
    if (succedent) out += " " + succedent->str(notation);
    return out;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Sequent& s) { return os << s.str(); }

inline Sequent canonicalize(const Sequent& s) {
  Sequent out;
  for (const auto& f : s.antecedent) out.antecedent.push_back(canonicalize(f));
  if (s.succedent) out.succedent = canonicalize(*s.succedent);
  return out;
}

/// The order sequents i => j for i <= j over a finite label universe.
inline std::vector<Sequent> order_sequents(const std::set<unsigned>& universe) {
  std::vector<Sequent> out;
  for (unsigned i : universe)
    for (unsigned j : universe)
      if (i <= j) out.push_back(Sequent{{Formula::numeral(i)}, Formula::numeral(j)});
  return out;
}

// ---------------------------------------------------------------------------
// Labelled literals

/// A literal core (an atom or its negation) carrying numeric labels, i.e. the
/// formula (~)atom.i1.....in.
struct LabelledLiteral {
  bool negative = false;
  Formula atom;
  std::vector<unsigned> labels;

  bool operator==(const LabelledLiteral&) const = default;
  std::strong_ordering operator<=>(const LabelledLiteral& o) const {
    if (auto c = atom <=> o.atom; c != 0) return c;
    if (auto c = negative <=> o.negative; c != 0) return c;
    return labels <=> o.labels;
  }

  Formula core() const { return negative ? Formula::neg(atom) : atom; }

  Formula to_formula() const {
    std::vector<Formula> chain{core()};
    for (unsigned l : labels) chain.push_back(Formula::numeral(l));
    return fuse(chain);
  }

  static std::optional<LabelledLiteral> from_formula(const Formula& f) {
    auto chain = fusion_chain(canonicalize(f));
    LabelledLiteral lit;
    const Formula& head = chain.front();
    if (head.is(FormulaKind::Atom)) {
      lit.atom = head;
    } else if (head.is(FormulaKind::Neg) && head.operand().is(FormulaKind::Atom)) {
      lit.negative = true;
      lit.atom = head.operand();
    } else {
      return std::nullopt;
    }
    for (std::size_t i = 1; i < chain.size(); ++i) {
      if (!chain[i].is(FormulaKind::Numeral)) return std::nullopt;
      lit.labels.push_back(chain[i].value());
    }
    return lit;
  }

  /// Label at 1-based position x, if present.
  std::optional<unsigned> label(std::size_t x) const {
    if (x == 0 || x > labels.size()) return std::nullopt;
    return labels[x - 1];
  }

  LabelledLiteral erased() const { return LabelledLiteral{negative, atom, {}}; }
  LabelledLiteral negated() const { return LabelledLiteral{!negative, atom, labels}; }

  /// True when the label-erased cores are complementary.
  bool conflicts_with(const LabelledLiteral& o) const {
    return negative != o.negative && atom == o.atom;
  }

  std::string str(Notation notation = Notation::Unicode) const {
    return to_formula().str(notation);
  }
};

inline std::ostream& operator<<(std::ostream& os, const LabelledLiteral& l) {
  return os << l.str();
}

}  // namespace lnarg
