#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wmodal/calculus.hpp"
#include "wmodal/logic.hpp"
#include "wmodal/sequent.hpp"

namespace wmodal {

/// A derivation tree over literal multiset sequents.
struct Derivation {
  Sequent conclusion;
  RuleId rule = RuleId::IInit;
  Principal principal;
  std::vector<Derivation> children;
  /// Longest branch; leaves have height 0.
  std::size_t height = 0;

  std::size_t node_count() const;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t loop_hits = 0;
  std::uint64_t memo_hits = 0;
};

struct ProverOptions {
  std::uint64_t max_nodes = 1'000'000;
  std::chrono::milliseconds timeout{30'000};
};

/// Raised when the node or time budget runs out before the search finishes.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const SearchStats& stats, bool timed_out);
  const SearchStats& stats() const { return stats_; }
  bool timed_out() const { return timed_out_; }

 private:
  SearchStats stats_;
  bool timed_out_;
};

struct ProveOutcome {
  /// Present iff the goal is derivable.
  std::optional<Derivation> derivation;
  SearchStats stats;

  bool proved() const { return derivation.has_value(); }
};

/// Decides derivability of `goal` in the calculus for `logic`. Throws
/// std::invalid_argument when the modes differ and BudgetExceeded when the
/// budget runs out.
ProveOutcome prove(LogicId logic, const Sequent& goal,
                   const ProverOptions& options = {});

enum class Verdict { Theorem, NonTheorem };

/// Theorem iff ⇒ f is derivable.
Verdict decide(LogicId logic, Formula f, const ProverOptions& options = {});

/// Derivability of assumptions ⇒ f.
ProveOutcome prove_from(LogicId logic, const std::vector<Formula>& assumptions,
                        Formula f, const ProverOptions& options = {});

/// True iff every node of `d` is a correct rule instance of `logic` and the
/// recorded heights are consistent.
bool check(LogicId logic, const Derivation& d);

// ---------------------------------------------------------------------------
// Reference search, independent of the fast engine: plain backtracking over
// backward_applications with set-normalized sequents.

/// Exhaustive search with ancestor loop checking and no other pruning.
/// Returns nothing when `max_nodes` runs out.
std::optional<bool> reference_derivable(LogicId logic, const Sequent& goal,
                                        std::uint64_t max_nodes = 200'000);

/// Whether `goal` has a derivation of height at most `max_height`.
/// Returns nothing when `max_nodes` runs out.
std::optional<bool> derivable_within(LogicId logic, const Sequent& goal,
                                     std::size_t max_height,
                                     std::uint64_t max_nodes = 200'000);

// ---------------------------------------------------------------------------
// Serialization

/// Indented tree, one node per line.
std::string proof_to_text(const Derivation& d);

/// Line-delimited JSON: a header record, then one record per node in
/// preorder with child ids.
std::string proof_to_json_lines(LogicId logic, const Derivation& d);

struct ParsedProof {
  LogicId logic;
  Derivation derivation;
};

/// Inverse of proof_to_json_lines. Throws std::runtime_error on malformed
/// input. Heights are recomputed.
ParsedProof proof_from_json_lines(const std::string& text);

}  // namespace wmodal
