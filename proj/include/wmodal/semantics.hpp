#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wmodal/formula.hpp"
#include "wmodal/logic.hpp"

namespace wmodal {

/// Set of worlds as a bitmask; world i is bit i.
using WorldSet = std::uint64_t;

inline constexpr std::size_t kMaxWorlds = 64;

/// Finite neighbourhood model. Classical models (kind == Classical) are
/// neighbourhood models in the usual sense and their order is the identity;
/// constructive ones carry a preorder and a hereditary valuation.
struct Model {
  Mode kind = Mode::Classical;
  std::size_t worlds = 1;
  /// up[w] = {v : w ≤ v}.
  std::vector<WorldSet> up;
  /// neighbourhoods[w] = N(w), in a fixed order.
  std::vector<std::vector<WorldSet>> neighbourhoods;
  /// V(p) by atom index; absent atoms are true nowhere.
  std::map<std::uint32_t, WorldSet> valuation;

  WorldSet all() const {
    return worlds == 64 ? ~WorldSet{0} : (WorldSet{1} << worlds) - 1;
  }

  /// Model with `n` worlds, identity order and empty N and V.
  static Model empty(Mode kind, std::size_t n);

  friend bool operator==(const Model&, const Model&) = default;
};

/// Worlds forcing `f`.
WorldSet truth_set(const Model& m, Formula f);

bool forces(const Model& m, std::size_t world, Formula f);

/// f is forced at every world.
bool valid_in_model(const Model& m, Formula f);

struct ConditionWitness {
  std::size_t world = 0;
  WorldSet alpha = 0;
  WorldSet beta = 0;
};

struct ConditionStatus {
  Condition condition;
  bool required = false;
  bool holds = true;
  /// Present iff the condition fails.
  std::optional<ConditionWitness> witness;
};

struct ConditionReport {
  /// One entry per condition, in kAllConditions order.
  std::vector<ConditionStatus> conditions;
  /// Preorder, hereditary valuation and world bounds.
  bool structure_ok = true;
  std::string structure_error;

  const ConditionStatus& get(Condition c) const;
  /// Structure is sound and every required condition holds.
  bool is_model() const;
};

ConditionReport check_conditions(const Model& m, LogicId logic);

/// Whether the witness of a failed condition really refutes it.
bool witness_valid(const Model& m, Condition c, const ConditionWitness& w);

/// Resampling did not produce a model within its budget.
class ResampleExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RandomModelOptions {
  /// Atoms p1..p<atoms> receive random hereditary valuations.
  std::uint32_t atoms = 3;
  /// Probability of each extra order pair before closure.
  double order_density = 0.3;
  std::size_t max_neighbourhoods = 3;
  std::size_t max_attempts = 10'000;
  /// Skip the repair step for (N); only for mutation testing.
  bool skip_n_repair = false;
};

/// Random model for `logic` with 1..max_worlds worlds.
Model random_model(LogicId logic, std::size_t max_worlds, std::uint64_t seed,
                   const RandomModelOptions& options = {});

struct Countermodel {
  Model model;
  std::size_t world = 0;
};

/// Smallest model for `logic` (at most `max_worlds` worlds, at most 5) with a
/// world refuting `f`, or nothing. Exhaustive over neighbourhood functions up
/// to forcing equivalence; see the README for the reduction used.
std::optional<Countermodel> enumerate_countermodel(LogicId logic, Formula f,
                                                   std::size_t max_worlds = 4);

/// Line-delimited JSON document.
std::string model_to_json_lines(const Model& m);

/// Inverse of model_to_json_lines; records carrying "refutes" are skipped.
/// Throws std::runtime_error on bad input.
Model model_from_json_lines(const std::string& text);

/// Human-readable listing.
std::string model_to_text(const Model& m);

}  // namespace wmodal
