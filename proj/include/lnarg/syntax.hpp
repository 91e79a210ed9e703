// Text syntax for formulas and sequents.
//
//   formula  ::= unary (("." | "·") unary)*        right-nested fusion
//   unary    ::= "~" unary | primary
//   primary  ::= "(" formula ")" | nat | "u" | "_|_" | Ident [ "(" term ("," term)* ")" ]
//   term     ::= Ident [ "(" term ("," term)* ")" ] | "?" Ident     (variables: schematic only)
//   sequent  ::= [formula ("," formula)*] "=>" [formula]

#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lnarg/formula.hpp"

namespace lnarg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(format(line, column, message)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& message) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }
  std::size_t line_;
  std::size_t column_;
};

/// Recursive-descent reader over a single line of text.
class SyntaxReader {
 public:
  explicit SyntaxReader(std::string_view text, std::size_t line = 1,
                        std::size_t column_offset = 0)
      : text_(text), line_(line), offset_(column_offset) {}

  /// Variable bindings consulted for "?x" terms. Unbound variables are an error
  /// unless `allow_variables` is set, in which case they are recorded.
  std::map<std::string, Term>* bindings = nullptr;
  bool allow_variables = false;
  std::set<std::string> variables_seen;

  Formula formula() {
    std::vector<Formula> chain{unary()};
    for (;;) {
      skip_ws();
      if (consume(".") || consume("·")) {
        chain.push_back(unary());
      } else {
        break;
      }
    }
    return fuse(chain);
  }

  Sequent sequent() {
    Sequent s;
    skip_ws();
    if (!peek("=>") && !peek("⇒")) {
      s.antecedent.push_back(formula());
      skip_ws();
      while (consume(",")) {
        s.antecedent.push_back(formula());
        skip_ws();
      }
    }
    skip_ws();
    if (!consume("=>") && !consume("⇒")) fail("expected '=>'");
    skip_ws();
    if (!at_end()) s.succedent = formula();
    return s;
  }

  LabelledLiteral literal() {
    skip_ws();
    const std::size_t start = pos_;
    Formula f = formula();
    auto lit = LabelledLiteral::from_formula(f);
    if (!lit) fail_at(start, "expected a literal of the form [~]Pred(args)(.n)*");
    return *lit;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(std::string_view tok) const { return text_.substr(pos_, tok.size()) == tok; }
  bool consume(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input '" + std::string(text_.substr(pos_)) + "'");
  }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, offset_ + pos + 1, message);
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected natural number");
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) fail_at(start, "natural number too large");
    return static_cast<unsigned>(std::stoul(std::string(digits)));
  }

 private:
  Formula unary() {
    skip_ws();
    if (consume("~") || consume("¬")) return Formula::neg(unary());
    return primary();
  }

  Formula primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (consume("(")) {
      Formula f = formula();
      skip_ws();
      if (!consume(")")) fail("expected ')'");
      return f;
    }
    if (consume("_|_") || consume("⊥")) return Formula::bottom();
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return Formula::numeral(natural());
    std::string name = identifier();
    skip_ws();
    if (consume("(")) {
      std::vector<Term> args = term_list();
      return Formula::atom(std::move(name), std::move(args));
    }
    if (name == "u") return Formula::unit();
    return Formula::atom(std::move(name));
  }

  std::vector<Term> term_list() {
    std::vector<Term> args;
    skip_ws();
    if (consume(")")) fail("empty argument list");
    for (;;) {
      args.push_back(term());
      skip_ws();
      if (consume(")")) break;
      if (!consume(",")) fail("expected ',' or ')'");
    }
    return args;
  }

  Term term() {
    skip_ws();
    const std::size_t start = pos_;
    if (consume("?")) {
      std::string var = identifier();
      if (bindings) {
        auto it = bindings->find(var);
        if (it != bindings->end()) return it->second;
      }
      if (!allow_variables) fail_at(start, "unbound variable '?" + var + "'");
      variables_seen.insert(var);
      return Term{"?" + var, {}};
    }
    Term t{identifier(), {}};
    skip_ws();
    if (consume("(")) t.args = term_list();
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t offset_;
};

inline Formula parse_formula(std::string_view text) {
  SyntaxReader r(text);
  Formula f = r.formula();
  r.expect_end();
  return f;
}

inline Sequent parse_sequent(std::string_view text) {
  SyntaxReader r(text);
  Sequent s = r.sequent();
  r.expect_end();
  return s;
}

inline LabelledLiteral parse_literal(std::string_view text) {
  SyntaxReader r(text);
  LabelledLiteral l = r.literal();
  r.expect_end();
  return l;
}

}  // namespace lnarg
