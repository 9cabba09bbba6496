// Kripke semantics and a model-enumeration satisfiability oracle.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kpi/formula.hpp"

namespace kpi {

/// Finite Kripke model. Valuation entries that are absent read as false.
class KripkeModel {
 public:
  KripkeModel() = default;

  void add_world(const std::string& w);
  /// Both endpoints must already be worlds.
  void add_arc(const std::string& from, const std::string& to);
  /// Marks `var` true at `w`.
  void set_true(const std::string& w, const std::string& var);

  bool has_world(const std::string& w) const { return worlds_.contains(w); }
  const std::set<std::string>& worlds() const { return worlds_; }
  const std::set<std::string>& successors(const std::string& w) const;
  bool holds(const std::string& w, const std::string& var) const;

  /// Line format: `worlds: w1 w2`, `arcs: w1>w2 ...`, `val: w2 a b`.
  /// Blank lines and lines starting with `#` are ignored.
  static KripkeModel parse(std::string_view text);
  std::string to_text() const;

 private:
  std::set<std::string> worlds_;
  std::map<std::string, std::set<std::string>> succ_;
  std::map<std::string, std::set<std::string>> val_;
};

class UnknownWorldError : public std::invalid_argument {
 public:
  explicit UnknownWorldError(const std::string& w)
      : std::invalid_argument("unknown world `" + w + "`") {}
};

class ModelFormatError : public std::runtime_error {
 public:
  ModelFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("model line " + std::to_string(line) + ": " + what) {}
};

/// M, w |= f.
bool eval(const KripkeModel& m, const std::string& w, const Formula& f);

class FuelExceeded : public std::runtime_error {
 public:
  explicit FuelExceeded(std::uint64_t fuel)
      : std::runtime_error("enumeration exceeds fuel " + std::to_string(fuel)) {}
};

inline constexpr std::uint64_t kDefaultFuel = 2'000'000;

struct BruteforceResult {
  bool satisfiable = false;
  /// Tree model satisfying the formula at world "w0", when satisfiable.
  std::optional<KripkeModel> model;
};

/// Searches tree models of depth <= depth(f) bottom-up. Successor sets are
/// enumerated up to the truth profile they induce on the subformulas of f,
/// so the search is exhaustive over all tree models. Throws FuelExceeded
/// when the number of enumeration steps would pass `fuel`.
BruteforceResult sat_bruteforce_model(const Formula& f, std::uint64_t fuel = kDefaultFuel);

inline bool sat_bruteforce(const Formula& f, std::uint64_t fuel = kDefaultFuel) {
  return sat_bruteforce_model(f, fuel).satisfiable;
}

}  // namespace kpi
