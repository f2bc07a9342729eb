#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wmodal/formula.hpp"
#include "wmodal/sequent.hpp"

namespace wmodal {

enum class Family : std::uint8_t { Classical, Constructive };

/// The fourteen points of the lattice, shared by both families.
enum class Base : std::uint8_t {
  M, MN, MC, K, MP, MNP, MD, MND, MCD, KD, MT, MNT, MCT, KT
};

/// Frame conditions on neighbourhood functions.
enum class Condition : std::uint8_t { C, N, D, P, T };

inline constexpr std::array<Condition, 5> kAllConditions = {
    Condition::C, Condition::N, Condition::D, Condition::P, Condition::T};

std::string_view name(Condition c);

struct LogicId {
  Family family = Family::Constructive;
  Base base = Base::M;

  friend bool operator==(LogicId, LogicId) = default;

  Mode mode() const {
    return family == Family::Classical ? Mode::Classical : Mode::Constructive;
  }
  bool constructive() const { return family == Family::Constructive; }
  /// Catalogue name, e.g. "KD" or "WMND".
  std::string name() const;

  bool has_c() const;
  bool has_n() const;
  bool has_d() const;
  bool has_p() const;
  bool has_t() const;

  static std::optional<LogicId> from_name(std::string_view name);
  /// All 28 logics: the 14 classical ones, then the 14 constructive ones.
  static const std::array<LogicId, 28>& all();
  static LogicId classical(Base b) { return {Family::Classical, b}; }
  static LogicId constructive(Base b) { return {Family::Constructive, b}; }
};

/// The same lattice point in the other family.
LogicId counterpart(LogicId logic);

/// Inclusion arrows of the lattice diagram (identical for both families);
/// pairs (weaker, stronger).
const std::vector<std::pair<Base, Base>>& lattice_arrows();

/// Conditions a neighbourhood model must satisfy to be a model for `logic`.
std::vector<Condition> conditions_for(LogicId logic);

enum class AxiomId : std::uint8_t {
  KBox, KDia, CBox, CDia, NBox, NDia, TBox, TDia, D, PBox, PDia,
  Dual, DualAnd, DualOr,
  // Rule schemata.
  Nec, MonBox, MonDia, RDualAnd, RDualOr,
};

inline constexpr std::array<AxiomId, 14> kAxiomSchemata = {
    AxiomId::KBox, AxiomId::KDia, AxiomId::CBox, AxiomId::CDia,
    AxiomId::NBox, AxiomId::NDia, AxiomId::TBox, AxiomId::TDia,
    AxiomId::D,    AxiomId::PBox, AxiomId::PDia, AxiomId::Dual,
    AxiomId::DualAnd, AxiomId::DualOr};

inline constexpr std::array<AxiomId, 5> kRuleSchemata = {
    AxiomId::Nec, AxiomId::MonBox, AxiomId::MonDia, AxiomId::RDualAnd,
    AxiomId::RDualOr};

bool is_rule_schema(AxiomId ax);
std::string_view name(AxiomId ax);
std::optional<AxiomId> axiom_from_name(std::string_view name);

/// Instantiates an axiom schema with A, B. Throws std::invalid_argument for
/// rule schemata; use instantiate_rule for those.
Formula instantiate_axiom(AxiomId ax, Formula a, Formula b = Formula::bottom());

struct RuleSchemaInstance {
  Formula premise;
  Formula conclusion;
};

RuleSchemaInstance instantiate_rule(AxiomId ax, Formula a,
                                    Formula b = Formula::bottom());

/// The modal axioms and rules of the Hilbert catalogue that defines `logic`.
std::vector<AxiomId> hilbert_catalogue(LogicId logic);

}  // namespace wmodal
