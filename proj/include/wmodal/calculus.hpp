#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wmodal/logic.hpp"
#include "wmodal/sequent.hpp"

namespace wmodal {

/// Sequent rules of the classical calculi followed by those of the
/// single-succedent calculi.
enum class RuleId : std::uint8_t {
  // Classical.
  Init, LBot, LImp, RImp, RAnd, LAnd, ROr, LOr,
  MBox, MDia, DualAndM, DualOrM, CBox, CDia, DualAndC, DualOrC,
  KBox, KDia, NBox, NDia, PBox, PDia, TBox, TDia, D, DBox, DDia, CD,
  // Constructive.
  IInit, ILBot, ILImp, IRImp, IRAnd, ILAnd, IROr, ILOr,
  IMBox, IMDia, IDualAndM, INBox, INDia, ICBox, ICDia, IDualAndC,
  IKBox, IKDia, IDualAndK, ITBox, ITDia, IPBox, IPDia, ID, IDBox, ICD,
  ICDBox,
};

inline constexpr int kRuleCount = static_cast<int>(RuleId::ICDBox) + 1;

Mode rule_mode(RuleId r);
/// Number of premises (0, 1 or 2).
int rule_arity(RuleId r);
/// ASCII name, unique within a mode ("Kbox", "iKbox", "Ror_i", ...).
std::string_view rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name, Mode mode);
bool is_modal_rule(RuleId r);

/// Rule set of the calculus for `logic`, in table order.
const std::vector<RuleId>& rules_for(LogicId logic);
bool has_rule(LogicId logic, RuleId r);

/// Principal occurrences of a rule application, as indices into the
/// conclusion's antecedent and succedent. The order is rule-specific:
///
///   C□/iC□      ante = [□A, □Γ...]       succ = [□B, ◇Δ...]
///   C◇/iC◇      ante = [◇A, □Γ...]       succ = [◇B, ◇Δ...]
///   K□/iK□      ante = [□Γ...]           succ = [□A, ◇Δ...]
///   K◇          ante = [◇A, □Γ...]       succ = [◇Δ...]
///   iK◇         ante = [◇A, □Γ...]       succ = [◇B]
///   idual∧K     ante = [◇A, □Γ...]
///   dual∧C      ante = [□A, ◇B, □Γ...]
///   dual∨C      succ = [□A, ◇B, ◇Δ...]
///   CD          ante = [□Γ...]           succ = [◇Δ...]
///   iCD         ante = [□Γ...]           succ = [◇A]
///   iCD□        ante = [□Γ...]
///
/// Pair rules list their two principals in schema order (e.g. dual∧M has
/// ante = [□A, ◇B]). `choice` selects the disjunct of R∨ᵢ (1 or 2).
struct Principal {
  std::vector<std::size_t> ante;
  std::vector<std::size_t> succ;
  int choice = 0;
  friend bool operator==(const Principal&, const Principal&) = default;
};

struct RuleInstance {
  RuleId rule;
  Sequent conclusion;
  std::vector<Sequent> premises;
  Principal principal;
};

/// Literal premises of `rule` applied to `conclusion` at `principal`, or
/// nothing when the principal occurrences do not match the schema.
std::optional<std::vector<Sequent>> schema_premises(RuleId rule,
                                                    const Sequent& conclusion,
                                                    const Principal& principal);

/// True iff `inst` is a correct instance of a rule of `logic`.
bool check_step(LogicId logic, const RuleInstance& inst);

/// Every rule instance concluding `goal`, up to two normalizations: one
/// principal occurrence per distinct formula, and rules with a boxed context
/// (C, K and CD families) unbox all boxed antecedent formulas (classical ones
/// also all succedent diamonds) instead of a chosen subset.
std::vector<RuleInstance> backward_applications(LogicId logic,
                                                const Sequent& goal);

}  // namespace wmodal
