#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logobf/fol/formula.hpp"

namespace logobf::obf {

/// A finite structure: domain {0..domain_size-1}, one truth table per
/// predicate, one element per constant. Tuple (a0..an-1) of an n-ary
/// predicate lives at index a0 + a1*d + a2*d^2 + ...
struct Interpretation {
  std::size_t domain_size = 1;
  std::map<std::string, std::vector<bool>> predicates;
  std::map<std::string, std::size_t> constants;

  bool holds(const std::string& predicate, const std::vector<std::size_t>& tuple) const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

/// Direct recursive evaluation. Free variables are looked up in `constants`.
bool evaluate(const fol::Formula& f, const Interpretation& m);

struct EquivVerdict {
  enum class Kind : std::uint8_t { PropositionallyEquivalent, EquivalentUpTo, CounterModel };

  Kind kind = Kind::EquivalentUpTo;
  std::size_t max_domain = 0;                  // EquivalentUpTo
  std::optional<Interpretation> counter_model;  // CounterModel
  bool f_value = false;                         // CounterModel: value of f
  bool g_value = false;                         // CounterModel: value of g

  bool equivalent() const { return kind != Kind::CounterModel; }
};

struct EquivOptions {
  std::size_t max_domain = 3;
  /// Cap on the total number of interpretations visited.
  std::uint64_t budget = std::uint64_t{1} << 24;
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t largest_completed_domain, std::uint64_t needed);
  /// 0 when not even the one-element domain fit.
  std::size_t largest_completed_domain() const { return largest_; }

 private:
  std::size_t largest_;
};

/// Quantifier-free, constant-free inputs get an exhaustive truth table.
/// Anything else is checked on every interpretation over domains of size
/// 1..max_domain; free variables are treated like constants. Predicates that
/// appear in only one formula are enumerated too. The first disagreement in
/// a fixed enumeration order is returned, so the verdict is symmetric in f
/// and g.
EquivVerdict check_equivalence(const fol::Formula& f, const fol::Formula& g,
                               const EquivOptions& opts = {});

std::string_view verdict_name(EquivVerdict::Kind k);

}  // namespace logobf::obf
