#pragma once

#include <stdexcept>
#include <vector>

#include "wmodal/prover.hpp"

namespace wmodal {

/// Split of a derivation's antecedent; the succedent goes with `right`.
struct Partition {
  std::vector<Formula> left;
  std::vector<Formula> right;
};

struct InterpolationResult {
  Formula interpolant;
  /// Γ₁ ⇒ C
  Derivation left_certificate;
  /// C, Γ₂ ⇒ Δ
  Derivation right_certificate;
};

/// A certificate sequent was not derivable.
class CertificateFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// craig was called on a non-theorem.
class NotATheorem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct InterpolationOptions {
  /// Rewrite away ⊤/⊥ units when the result still certifies.
  bool simplify = false;
  ProverOptions prover;
};

/// Interpolant for `part` read off `d` by induction on its height. Requires
/// a constructive logic, check(logic, d), and left ⊎ right equal to the
/// antecedent of d's conclusion.
InterpolationResult interpolate_derivation(
    LogicId logic, const Derivation& d, const Partition& part,
    const InterpolationOptions& options = {});

/// Interpolant of a theorem a → b, from a proof of a ⇒ b with a on the left.
InterpolationResult craig(LogicId logic, Formula a, Formula b,
                          const InterpolationOptions& options = {});

/// Removes ⊤ and ⊥ units bottom-up.
Formula simplify_units(Formula f);

}  // namespace wmodal
