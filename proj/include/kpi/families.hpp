// Witness families, random formulas, and the QBF / exact-cover encodings.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kpi/formula.hpp"

namespace kpi {

struct BoxDisjunctionSpec {
  int n;
};
struct ExponentialClauseSpec {
  int n;
};
struct DiamondDisjunctionSpec {
  int n;
};
struct NonFinitenessSpec {
  int k;
};
struct RandomSpec {
  int vars;
  int depth;
  int length;
  std::uint64_t seed;
};

using FamilySpec = std::variant<BoxDisjunctionSpec, ExponentialClauseSpec, DiamondDisjunctionSpec, NonFinitenessSpec, RandomSpec>;

struct FamilyInstance {
  Formula formula;
  std::vector<Formula> distinguished;
};

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameterized witness formulas with their distinguished clauses.
///   BoxDisjunction{n}: /\_i ([]a_i_1 | []a_i_2); one clause, the disjunction over
///     j in {1,2}^n of [](a_1_j1 & ... & a_n_jn). n <= cap.
///   DiamondDisjunction{n}: /\_i ((<>a_i_1 & []b_i_1) | (<>a_i_2 & []b_i_2)); the n^(2^n)
///     diamond clauses picking <>(a_i_f(i) & b_1_f(1) & ... & b_n_f(n)) for
///     each f : [n] -> {1,2}. n <= cap and n^(2^n) <= 10^6.
///   ExponentialClause{n}: the b_i/c chain formula and its single box clause. n <= 2.
///   NonFiniteness{k}: [](a & b) and []<>^k a | <>(a & b & []^k !a). k <= 6.
///   Random: uniform over formulas of length <= `length` and modal depth
///     <= `depth` over the first `vars` letters; no distinguished clauses.
FamilyInstance generate(const FamilySpec& spec, int cap = 4);

/// Uniform over all formulas with length <= max_length and depth <= max_depth
/// over variables a, b, ... (num_vars of them).
Formula random_formula(int num_vars, int max_depth, int max_length, std::mt19937_64& rng);

/// Every formula with length <= max_length and depth <= max_depth over the
/// first num_vars letters, by increasing length.
void for_each_formula(int num_vars, int max_depth, int max_length,
                      const std::function<void(const Formula&)>& visit);

enum class Quant { kForall, kExists };

struct QbfLiteral {
  std::string var;
  bool positive = true;
};

struct QbfInstance {
  std::vector<std::pair<Quant, std::string>> prefix;
  std::vector<std::vector<QbfLiteral>> matrix;  // CNF
};

class QbfFormatError : public std::runtime_error {
 public:
  QbfFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("qbf line " + std::to_string(line) + ": " + what) {}
};

/// Prefix lines `a p1` / `e p2`, then clause lines of signed identifiers
/// ending in `0`, e.g. `p1 -p2 0`. `#` starts a comment line.
QbfInstance parse_qbf(std::string_view text);

/// Level-marker encoding over q0..qm: satisfiable iff the QBF is valid.
/// Throws std::invalid_argument if a prefix variable is named like a level
/// marker, the prefix repeats a variable, the matrix is empty, or the matrix
/// mentions an unquantified variable.
Formula qbf_encode(const QbfInstance& q);

/// Direct evaluation; at most 20 prefix variables.
bool qbf_valid_bruteforce(const QbfInstance& q);

struct XcInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> subsets;
};

/// phi'_{1,1} & ... & phi'_{1,m} & []^{2n} !a, where phi'_{i,j} is
/// <>phi'_{i+1,j} when u_i (i <= n) or u_{i-n} (i > n) is in S_j and
/// []phi'_{i+1,j} otherwise, and phi'_{2n+1,j} = a. Unsatisfiable iff an
/// exact cover exists.
Formula xc_encode(const XcInstance& x);

/// Tries every subfamily; at most 20 subsets.
bool xc_has_exact_cover(const XcInstance& x);

}  // namespace kpi
