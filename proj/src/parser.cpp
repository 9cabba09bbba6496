#include <cctype>

#include "kpi/formula.hpp"

namespace kpi {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& what)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what +
                         (expected.empty() ? "" : " (expected " + join(expected) + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

ReservedNameError::ReservedNameError(std::size_t offset)
    : std::runtime_error("reserved name `_c` at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

// formula := or ( "->" formula )?
// or      := and ( "|" and )*
// and     := unary ( "&" unary )*
// unary   := ("!" | "[]" | "<>") unary | atom
// atom    := IDENT | "true" | "false" | "(" formula ")"
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    skip_ws();
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail({"\"->\"", "\"|\"", "\"&\"", "end of input"}, "unexpected input");
    return f;
  }

 private:
  Formula formula() {
    Formula lhs = disjunction();
    skip_ws();
    if (accept("->")) {
      Formula rhs = formula();
      return Formula::disj(Formula::neg(lhs), rhs);
    }
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    for (;;) {
      skip_ws();
      if (!accept("|")) break;
      parts.push_back(conjunction());
    }
    return Formula::disj_of(parts);
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    for (;;) {
      skip_ws();
      if (!accept("&")) break;
      parts.push_back(unary());
    }
    return Formula::conj_of(parts);
  }

  Formula unary() {
    skip_ws();
    if (accept("!")) return Formula::neg(unary());
    if (accept("[]")) return Formula::box(unary());
    if (accept("<>")) return Formula::dia(unary());
    return atom();
  }

  Formula atom() {
    skip_ws();
    if (accept("(")) {
      Formula f = formula();
      skip_ws();
      if (!accept(")")) fail({"\")\""}, "unbalanced parenthesis");
      return f;
    }
    if (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view id = text_.substr(start, pos_ - start);
      if (id == "true") return top();
      if (id == "false") return bottom();
      if (id == kConstVar) throw ReservedNameError(start);
      return Formula::var(std::string(id));
    }
    fail({"identifier", "\"true\"", "\"false\"", "\"(\"", "\"!\"", "\"[]\"", "\"<>\""},
         pos_ == text_.size() ? "unexpected end of input" : "unexpected character");
  }

  bool accept(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) {
    throw ParseError(pos_, std::move(expected), what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) {
  if (text.empty()) throw ParseError(0, {"formula"}, "empty input");
  return Parser(text).run();
}

}  // namespace kpi
