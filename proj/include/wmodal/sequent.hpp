#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wmodal/formula.hpp"

namespace wmodal {

enum class Mode { Classical, Constructive };

/// Multiset sequent Γ ⇒ Δ. Both sides are kept in canonical order, so two
/// sequents are equal exactly when they are equal as multisets.
class Sequent {
 public:
  Sequent() = default;
  /// Throws std::invalid_argument if a constructive sequent has more than one
  /// succedent formula.
  Sequent(std::vector<Formula> antecedent, std::vector<Formula> succedent,
          Mode mode);

  const std::vector<Formula>& antecedent() const { return antecedent_; }
  const std::vector<Formula>& succedent() const { return succedent_; }
  Mode mode() const { return mode_; }

  friend bool operator==(const Sequent&, const Sequent&) = default;

 private:
  std::vector<Formula> antecedent_;
  std::vector<Formula> succedent_;
  Mode mode_ = Mode::Constructive;
};

/// Duplicate-free projection of a sequent, used for loop detection.
struct SequentKey {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;
  friend bool operator==(const SequentKey&, const SequentKey&) = default;
};

/// ∧Γ → ∨Δ, or ∨Δ when Γ is empty; ∨∅ is ⊥. Folds are left-associative over
/// the canonical order.
Formula interpret(const Sequent& s);

SequentKey key_of(const Sequent& s);

/// Sorts a formula list into canonical order.
void canonical_sort(std::vector<Formula>& fs);

/// Parses `A1, A2 |- B`. Text without a turnstile is read as `|- text`.
Sequent parse_sequent(std::string_view text, Mode mode, SymbolTable& symbols);
Sequent parse_sequent(std::string_view text, Mode mode);

std::string render(const Sequent& s, const RenderOptions& options = {});

}  // namespace wmodal
