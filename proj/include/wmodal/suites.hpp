#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wmodal/logic.hpp"
#include "wmodal/prover.hpp"
#include "wmodal/semantics.hpp"

namespace wmodal {

// ---------------------------------------------------------------------------
// Fixed matrices

/// Whether the schema (instantiated at A = p1, B = p2) is derivable in `logic`.
/// For rule schemata: whether the instance at the probe arguments used by
/// axiom_matrix is admissible.
bool expected_derivable(LogicId logic, AxiomId ax);

struct MatrixCell {
  LogicId logic;
  AxiomId schema;
  bool in_catalogue = false;
  bool expected = false;
  bool got = false;
  bool ok() const { return expected == got; }
};

/// All 28 logics against every axiom and rule schema. Rule schemata are
/// probed at one instance each: nec at p→p, mon at (p∧q, p), Rdual∧ at
/// (p, ¬p), Rdual∨ at (⊤, ⊥); `got` is true when premise and conclusion are
/// both theorems.
std::vector<MatrixCell> axiom_matrix(const ProverOptions& options = {});

struct NegativeCase {
  LogicId logic;
  std::string label;
  Formula formula;
  Verdict expected;
  Verdict got;
  bool ok() const { return expected == got; }
};

/// Excluded middle, disjunctive duality, ◇-distribution and □-aggregation in
/// the W-logics where they fail, paired with the classical logics where they
/// hold.
std::vector<NegativeCase> negative_suite(const ProverOptions& options = {});

struct Transcription {
  std::string label;
  AxiomId axiom;
  LogicId logic;
  Derivation derivation;
};

/// Hand-written derivations of the modal axioms at A = p1, B = p2, each in
/// the weakest W-logic whose rules it uses.
std::vector<Transcription> axiom_derivations();

// ---------------------------------------------------------------------------
// Property suites

struct Violation {
  std::string logic;
  std::uint64_t seed = 0;
  std::size_t index = 0;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Samples per logic (per suite-specific unit).
  std::size_t count = 100;
  std::vector<LogicId> logics;  ///< empty = all applicable logics
  std::size_t max_size = 6;
  std::uint32_t atoms = 3;
  std::size_t max_worlds = 4;
  ProverOptions prover;
  RandomModelOptions models;
};

/// Random models against sampled theorems (and the catalogue axioms).
/// `count` (model, theorem) pairs per logic.
SuiteResult soundness_suite(const SuiteOptions& options);

/// Forcing is upward closed: `count` (model, formula, w ≤ v) checks in total.
SuiteResult hereditariness_suite(const SuiteOptions& options);

/// Weakening (also at the original height), contraction and cut over `count`
/// derivable sequents per logic.
SuiteResult structural_suite(const SuiteOptions& options);

/// `count` theorems A∨B per W-logic; one disjunct must be a theorem.
SuiteResult disjunction_suite(const SuiteOptions& options);

/// `count` theorems A→B per W-logic through craig, with the full contract.
SuiteResult interpolation_suite(const SuiteOptions& options);

/// `count` theorems per lattice arrow in both families, and per W-logic
/// against its classical counterpart.
SuiteResult inclusion_suite(const SuiteOptions& options);

/// decide on every formula of size at most `max_size` over `atoms` atoms
/// (the options' seed and count are unused).
SuiteResult termination_sweep(const SuiteOptions& options);

/// Countermodel search on the negative suite: every witness must verify and
/// must not refute a formula the prover calls a theorem. `checks` counts
/// witnesses found.
SuiteResult countermodel_crosscheck(const SuiteOptions& options);

}  // namespace wmodal
