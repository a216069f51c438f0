#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "logobf/kinship/chain.hpp"
#include "logobf/kinship/family_graph.hpp"
#include "logobf/kinship/puzzle.hpp"

namespace logobf::kin {

/// Extra premise under which a substituted chain is read.
struct Assumption {
  enum class Type { Reading, Excludes };

  Type type = Type::Reading;
  /// Reading: index (application order) of the step within the scoped span.
  std::size_t step = 0;
  /// Reading: name of the only reading allowed for that step.
  std::string reading;
  /// Excludes: the span's end is not this relation of the span's start.
  RelationKind excluded = RelationKind::Self;
  std::string note;

  friend bool operator==(const Assumption&, const Assumption&) = default;
};

/// Assumptions attached to steps [first_step, first_step + step_count) of
/// one statement's chain.
struct ScopedAssumptions {
  std::size_t statement = 0;
  std::size_t first_step = 0;
  std::size_t step_count = 0;
  std::vector<Assumption> assumptions;
};

class Ambiguous : public Error {
 public:
  Ambiguous(std::string message, std::vector<CanonicalRelation> candidates);
  const std::vector<CanonicalRelation>& candidates() const { return candidates_; }

 private:
  std::vector<CanonicalRelation> candidates_;
};

class Inconsistent : public Error {
 public:
  using Error::Error;
};

class VocabularyGap : public Error {
 public:
  using Error::Error;
};

struct ResolveOptions {
  /// Abort when the number of open branches exceeds this.
  std::size_t max_worlds = 200000;
};

/// Result of resolving a chain or puzzle: the relation joined over every
/// minimal-cost family graph that satisfies the constraints.
struct Resolution {
  CanonicalRelation relation;
  std::size_t cost = 0;    // persons added beyond the forced skeleton
  std::size_t models = 0;  // minimal graphs that agree on `relation`
};

/// Resolves `chain` from its anchor inside `context` and names the end
/// person relative to the anchor. Parent and spouse hops reuse or create
/// the (unique) parent/spouse at no cost; child and sibling hops either
/// reuse a compatible known person or add a fresh one at cost 1. Among all
/// outcomes satisfying the "only" constraints and ending at someone other
/// than the anchor, the cheapest are kept; they must agree on the relation
/// kind (gender and side become unknown where they disagree).
///
/// `speaker` names the anchor of chains that start with "my".
Resolution resolve_chain(const RelationChain& chain, const FamilyGraph& context,
                         const std::vector<ScopedAssumptions>& assumptions = {},
                         const std::string& speaker = {}, const ResolveOptions& opts = {});

/// Builds the family graph implied by all statements and answers the query.
Resolution resolve_puzzle(const Puzzle& puzzle,
                          const std::vector<ScopedAssumptions>& assumptions = {},
                          const ResolveOptions& opts = {});

}  // namespace logobf::kin
