// Formula AST for the modal logic K, plus the text syntax, NNF and metrics.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kpi {

enum class Op : std::uint8_t { kVar, kNeg, kAnd, kOr, kBox, kDia };

/// Immutable formula handle. Copies share structure; equality and ordering
/// are structural.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula box(Formula f);
  static Formula dia(Formula f);

  /// Right-folded n-ary forms. The span must be nonempty.
  static Formula conj_of(std::span<const Formula> fs);
  static Formula disj_of(std::span<const Formula> fs);

  Op op() const;
  const std::string& name() const;
  /// Operand of a unary node.
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;

  std::size_t hash() const;
  /// Node count: variable occurrences plus connectives.
  std::size_t length() const;

  bool is_var() const { return op() == Op::kVar; }
  /// Variable or negated variable.
  bool is_prop_literal() const;
  bool is_modal() const { return op() == Op::kBox || op() == Op::kDia; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

struct Metrics {
  std::size_t length = 0;
  std::size_t depth = 0;
  std::set<std::string> vars;
};

Metrics metrics(const Formula& f);
std::size_t modal_depth(const Formula& f);
std::set<std::string> variables(const Formula& f);

/// Negation normal form: negation only directly above variables.
Formula nnf(const Formula& f);
bool is_nnf(const Formula& f);

/// nnf(¬f). Maps D4 clauses to D4 terms and back.
Formula dual_negate(const Formula& f);

/// Reserved variable used to desugar `true`/`false`.
inline constexpr std::string_view kConstVar = "_c";
Formula top();
Formula bottom();

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& what);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class ReservedNameError : public std::runtime_error {
 public:
  explicit ReservedNameError(std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Formula parse(std::string_view text);

/// Canonical fully parenthesized form; parse(print(f)) == f for formulas
/// over user variables.
std::string print(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Formula& f);

// ---------------------------------------------------------------------------

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> kids;
  std::size_t hash;
  std::size_t length;
};

inline Op Formula::op() const { return node_->op; }
inline const std::string& Formula::name() const { return node_->name; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline std::size_t Formula::length() const { return node_->length; }
inline const Formula& Formula::child() const { return node_->kids[0]; }
inline const Formula& Formula::left() const { return node_->kids[0]; }
inline const Formula& Formula::right() const { return node_->kids[1]; }

}  // namespace kpi
