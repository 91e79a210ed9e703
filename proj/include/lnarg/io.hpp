// Theory files, jurisdiction merging and Graphviz export.
//
// A theory file is line oriented; '#' starts a comment:
//
//   labels 0,1,2,3,4
//   jurisdiction UK
//   constants AV, V
//   fact DriveLeft(AV).1.4
//   norm Emergency(?v) => GiveWay(AV,?v).1.4
//
// Terms written ?x are schematic and are instantiated over the constants when
// the file is loaded. Without a labels line the universe is 0 plus every label
// the file uses.

#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lnarg/arguments.hpp"
#include "lnarg/syntax.hpp"
#include "lnarg/theory.hpp"

namespace lnarg {

struct ParseOptions {
  bool validate = true;
  SearchBudget budget;
};

namespace detail {

inline std::vector<std::map<std::string, Term>> assignments(const std::set<std::string>& vars,
                                                            const std::vector<std::string>& constants) {
  std::vector<std::map<std::string, Term>> out{{}};
  for (const auto& v : vars) {
    std::vector<std::map<std::string, Term>> next;
    for (const auto& partial : out)
      for (const auto& c : constants) {
        auto m = partial;
        m[v] = Term{c, {}};
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

inline Theory parse_theory(std::string_view text, const ParseOptions& options = {}) {
  Theory theory;
  bool explicit_labels = false;
  std::vector<std::string> constants;

  struct Pending {
    bool is_norm;
    std::string body;
    std::size_t line;
    std::size_t column;
  };
  std::vector<Pending> pending;

  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    SyntaxReader r(line, lineno);
    if (r.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t kw_at = r.position();
    const std::string keyword = r.identifier();
    if (keyword == "labels") {
      if (explicit_labels) r.fail_at(kw_at, "duplicate labels line");
      explicit_labels = true;
      theory.label_universe.clear();
      do theory.label_universe.insert(r.natural());
      while ((r.skip_ws(), r.consume(",")));
      r.expect_end();
    } else if (keyword == "jurisdiction") {
      r.skip_ws();
      const auto rest = line.substr(r.position());
      std::string name(rest);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      if (name.empty()) r.fail("expected a jurisdiction name");
      theory.jurisdiction = name;
    } else if (keyword == "constants") {
      do constants.push_back(r.identifier());
      while ((r.skip_ws(), r.consume(",")));
      r.expect_end();
    } else if (keyword == "fact" || keyword == "norm") {
      r.skip_ws();
      pending.push_back({keyword == "norm", std::string(line.substr(r.position())), lineno,
                         r.position()});
    } else {
      r.fail_at(kw_at, "unknown keyword '" + keyword + "' (expected labels, jurisdiction, "
                       "constants, fact or norm)");
    }
    if (end == text.size()) break;
  }

  // Second pass once every constant is known.
  for (const auto& p : pending) {
    SyntaxReader probe(p.body, p.line, p.column);
    probe.allow_variables = true;
    auto read_norm = [](SyntaxReader& r) {
      Norm n;
      r.skip_ws();
      if (r.peek("=>")) r.fail("norm needs at least one antecedent literal");
      n.antecedent.push_back(r.literal());
      r.skip_ws();
      while (r.consume(",")) {
        n.antecedent.push_back(r.literal());
        r.skip_ws();
      }
      if (!r.consume("=>")) r.fail("expected ',' or '=>'");
      n.consequent = r.literal();
      r.expect_end();
      return n;
    };
    auto read_fact = [](SyntaxReader& r) {
      LabelledLiteral l = r.literal();
      r.expect_end();
      return l;
    };
    if (p.is_norm) read_norm(probe);
    else read_fact(probe);

    if (!probe.variables_seen.empty() && constants.empty())
      throw ParseError(p.line, p.column + 1, "schematic variables need a constants line");
    for (auto binding : detail::assignments(probe.variables_seen, constants)) {
      SyntaxReader r(p.body, p.line, p.column);
      r.bindings = &binding;
      if (p.is_norm) theory.add_norm(read_norm(r));
      else theory.add_fact(read_fact(r));
    }
  }

  if (!explicit_labels) {
    auto add = [&](const LabelledLiteral& l) {
      theory.label_universe.insert(l.labels.begin(), l.labels.end());
    };
    for (const auto& f : theory.knowledge) add(f);
    for (const auto& n : theory.norms) {
      add(n.consequent);
      for (const auto& l : n.antecedent) add(l);
    }
  }
  if (options.validate) validate_theory(theory, options.budget);
  return theory;
}

/// Canonical text: header, then sorted facts and norms in ASCII notation.
inline std::string serialize_theory(const Theory& theory) {
  std::string out = "labels ";
  bool first = true;
  for (unsigned v : theory.label_universe) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  out += "\n";
  if (!theory.jurisdiction.empty()) out += "jurisdiction " + theory.jurisdiction + "\n";
  for (const auto& f : theory.knowledge) out += "fact " + f.str(Notation::Ascii) + "\n";
  for (const auto& n : theory.norms) {
    out += "norm ";
    for (std::size_t i = 0; i < n.antecedent.size(); ++i)
      out += (i ? ", " : "") + n.antecedent[i].str(Notation::Ascii);
    out += " => " + n.consequent.str(Notation::Ascii) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Jurisdictions

/// Sets label position 1 to `country` on every literal carrying at least a
/// country and a strength label. Unlabelled literals are shared vocabulary and
/// stay as they are.
inline Theory relabel(const Theory& theory, unsigned country) {
  auto fix = [&](LabelledLiteral l) {
    if (l.labels.size() >= 2) l.labels[0] = country;
    return l;
  };
  Theory out;
  out.label_universe = theory.label_universe;
  out.label_universe.insert(country);
  out.jurisdiction = theory.jurisdiction;
  for (const auto& f : theory.knowledge) out.add_fact(fix(f));
  for (auto n : theory.norms) {
    for (auto& l : n.antecedent) l = fix(l);
    n.consequent = fix(n.consequent);
    out.add_norm(std::move(n));
  }
  return out;
}

inline Theory merge_jurisdictions(const Theory& origin, const Theory& target,
                                  unsigned origin_label = 1, unsigned target_label = 2) {
  Theory out = relabel(origin, origin_label);
  const Theory t = relabel(target, target_label);
  out.label_universe.insert(t.label_universe.begin(), t.label_universe.end());
  for (const auto& f : t.knowledge) out.add_fact(f);
  for (const auto& n : t.norms) out.add_norm(n);
  const std::string a = origin.jurisdiction.empty() ? "origin" : origin.jurisdiction;
  const std::string b = target.jurisdiction.empty() ? "target" : target.jurisdiction;
  out.jurisdiction = a + "+" + b;
  return out;
}

// ---------------------------------------------------------------------------
// Graphviz

struct DotOptions {
  /// Draw attacks removed by the policy as dashed edges; otherwise omit them.
  bool show_pruned = true;
  /// Restrict to direct conflicts between premise and norm arguments, the
  /// view that matches a hand-drawn conflict graph.
  bool direct_only = true;
};

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Digraph of the conflicts: defeats solid, attacks the policy removed dashed.
inline std::string export_dot(const ArgumentSet& set, const std::vector<Attack>& attacks,
                              const std::vector<Attack>& defeats,
                              const std::vector<std::string>& names, const DotOptions& options = {}) {
  auto shown = [&](const Attack& a) {
    if (!options.direct_only) return true;
    return a.target == a.target_sub && set[a.attacker].kind != ArgumentKind::Strict &&
           set[a.target].kind != ArgumentKind::Strict;
  };
  std::set<std::pair<std::size_t, std::size_t>> attack_edges, defeat_edges;
  for (const auto& a : attacks)
    if (shown(a)) attack_edges.insert({a.attacker, a.target});
  for (const auto& d : defeats)
    if (shown(d)) defeat_edges.insert({d.attacker, d.target});

  std::set<std::size_t> nodes;
  for (auto [a, t] : defeat_edges) nodes.insert({a, t});
  if (options.show_pruned)
    for (auto [a, t] : attack_edges) nodes.insert({a, t});

  std::ostringstream os;
  os << "digraph arguments {\n";
  if (!nodes.empty()) os << "  node [shape=box];\n";
  for (std::size_t n : nodes)
    os << "  n" << n << " [label=\"" << detail::dot_escape(names.at(n)) << "\\n"
       << detail::dot_escape(set[n].conclusion.str()) << "\"];\n";
  for (auto [a, t] : attack_edges) {
    if (defeat_edges.count({a, t}))
      os << "  n" << a << " -> n" << t << " [style=solid];\n";
    else if (options.show_pruned)
      os << "  n" << a << " -> n" << t << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lnarg
