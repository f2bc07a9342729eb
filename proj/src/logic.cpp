#include "wmodal/logic.hpp"

#include <stdexcept>

namespace wmodal {

namespace {

constexpr std::array<std::string_view, 14> kBaseNames = {
    "M", "MN", "MC", "K", "MP", "MNP", "MD", "MND", "MCD", "KD",
    "MT", "MNT", "MCT", "KT"};

bool base_in(Base b, std::initializer_list<Base> bs) {
  for (Base x : bs)
    if (x == b) return true;
  return false;
}

}  // namespace

std::string_view name(Condition c) {
  switch (c) {
    case Condition::C: return "C";
    case Condition::N: return "N";
    case Condition::D: return "D";
    case Condition::P: return "P";
    case Condition::T: return "T";
  }
  return "?";
}

std::string LogicId::name() const {
  std::string out = family == Family::Constructive ? "W" : "";
  out += kBaseNames[static_cast<std::size_t>(base)];
  return out;
}

bool LogicId::has_c() const {
  return base_in(base, {Base::MC, Base::K, Base::MCD, Base::KD, Base::MCT,
                        Base::KT});
}

bool LogicId::has_n() const {
  return base_in(base, {Base::MN, Base::K, Base::MNP, Base::MND, Base::KD,
                        Base::MNT, Base::KT});
}

bool LogicId::has_d() const {
  return base_in(base, {Base::MD, Base::MND, Base::MCD, Base::KD});
}

bool LogicId::has_p() const { return base_in(base, {Base::MP, Base::MNP}); }

bool LogicId::has_t() const {
  return base_in(base, {Base::MT, Base::MNT, Base::MCT, Base::KT});
}

std::optional<LogicId> LogicId::from_name(std::string_view text) {
  Family family = Family::Classical;
  if (!text.empty() && text.front() == 'W') {
    family = Family::Constructive;
    text.remove_prefix(1);
  }
  for (std::size_t i = 0; i < kBaseNames.size(); ++i)
    if (kBaseNames[i] == text) return LogicId{family, static_cast<Base>(i)};
  return std::nullopt;
}

const std::array<LogicId, 28>& LogicId::all() {
  static const std::array<LogicId, 28> logics = [] {
    std::array<LogicId, 28> out{};
    for (std::size_t i = 0; i < 14; ++i) {
      out[i] = {Family::Classical, static_cast<Base>(i)};
      out[14 + i] = {Family::Constructive, static_cast<Base>(i)};
    }
    return out;
  }();
  return logics;
}

LogicId counterpart(LogicId logic) {
  return {logic.family == Family::Classical ? Family::Constructive
                                            : Family::Classical,
          logic.base};
}

const std::vector<std::pair<Base, Base>>& lattice_arrows() {
  using B = Base;
  static const std::vector<std::pair<Base, Base>> arrows = {
      {B::M, B::MN},    {B::M, B::MC},    {B::MN, B::K},    {B::MC, B::K},
      {B::MP, B::MNP},  {B::MD, B::MND},  {B::MD, B::MCD},  {B::MND, B::KD},
      {B::MCD, B::KD},  {B::MT, B::MNT},  {B::MT, B::MCT},  {B::MNT, B::KT},
      {B::MCT, B::KT},  {B::MN, B::MNP},  {B::MNP, B::MND}, {B::MND, B::MNT},
      {B::MC, B::MCD},  {B::MCD, B::MCT}, {B::MP, B::MD},   {B::M, B::MP},
      {B::MD, B::MT},   {B::KD, B::KT},   {B::K, B::KD},
  };
  return arrows;
}

std::vector<Condition> conditions_for(LogicId logic) {
  std::vector<Condition> out;
  if (logic.has_c()) out.push_back(Condition::C);
  if (logic.has_n()) out.push_back(Condition::N);
  if (logic.has_d()) out.push_back(Condition::D);
  // P comes from P□ (classical) or P◇ (constructive) in the catalogue; the
  // constructive MD and MCD catalogues list P◇ alongside D.
  bool p = logic.has_p() ||
           (logic.constructive() && (logic.base == Base::MD ||
                                     logic.base == Base::MCD));
  if (p) out.push_back(Condition::P);
  if (logic.has_t()) out.push_back(Condition::T);
  return out;
}

// ---------------------------------------------------------------------------
// Axioms

bool is_rule_schema(AxiomId ax) {
  switch (ax) {
    case AxiomId::Nec:
    case AxiomId::MonBox:
    case AxiomId::MonDia:
    case AxiomId::RDualAnd:
    case AxiomId::RDualOr:
      return true;
    default:
      return false;
  }
}

std::string_view name(AxiomId ax) {
  switch (ax) {
    case AxiomId::KBox: return "Kbox";
    case AxiomId::KDia: return "Kdia";
    case AxiomId::CBox: return "Cbox";
    case AxiomId::CDia: return "Cdia";
    case AxiomId::NBox: return "Nbox";
    case AxiomId::NDia: return "Ndia";
    case AxiomId::TBox: return "Tbox";
    case AxiomId::TDia: return "Tdia";
    case AxiomId::D: return "D";
    case AxiomId::PBox: return "Pbox";
    case AxiomId::PDia: return "Pdia";
    case AxiomId::Dual: return "dual";
    case AxiomId::DualAnd: return "dual_and";
    case AxiomId::DualOr: return "dual_or";
    case AxiomId::Nec: return "nec";
    case AxiomId::MonBox: return "mon_box";
    case AxiomId::MonDia: return "mon_dia";
    case AxiomId::RDualAnd: return "Rdual_and";
    case AxiomId::RDualOr: return "Rdual_or";
  }
  return "?";
}

std::optional<AxiomId> axiom_from_name(std::string_view text) {
  for (int i = 0; i <= static_cast<int>(AxiomId::RDualOr); ++i) {
    auto ax = static_cast<AxiomId>(i);
    if (name(ax) == text) return ax;
  }
  return std::nullopt;
}

Formula instantiate_axiom(AxiomId ax, Formula a, Formula b) {
  using F = Formula;
  switch (ax) {
    case AxiomId::KBox:
      return F::implies(F::box(F::implies(a, b)),
                        F::implies(F::box(a), F::box(b)));
    case AxiomId::KDia:
      return F::implies(F::box(F::implies(a, b)),
                        F::implies(F::dia(a), F::dia(b)));
    case AxiomId::CBox:
      return F::implies(F::conj(F::box(a), F::box(b)), F::box(F::conj(a, b)));
    case AxiomId::CDia:
      return F::implies(F::dia(F::disj(a, b)), F::disj(F::dia(a), F::dia(b)));
    case AxiomId::NBox:
      return F::box(F::top());
    case AxiomId::NDia:
      return F::negation(F::dia(F::bottom()));
    case AxiomId::TBox:
      return F::implies(F::box(a), a);
    case AxiomId::TDia:
      return F::implies(a, F::dia(a));
    case AxiomId::D:
      return F::implies(F::box(a), F::dia(a));
    case AxiomId::PBox:
      return F::negation(F::box(F::bottom()));
    case AxiomId::PDia:
      return F::dia(F::top());
    case AxiomId::Dual:
      return F::iff(F::box(a), F::negation(F::dia(F::negation(a))));
    case AxiomId::DualAnd:
      return F::negation(F::conj(F::box(a), F::dia(F::negation(a))));
    case AxiomId::DualOr:
      return F::disj(F::box(a), F::dia(F::negation(a)));
    default:
      throw std::invalid_argument(std::string(name(ax)) +
                                  " is a rule schema, not an axiom");
  }
}

RuleSchemaInstance instantiate_rule(AxiomId ax, Formula a, Formula b) {
  using F = Formula;
  switch (ax) {
    case AxiomId::Nec:
      return {a, F::box(a)};
    case AxiomId::MonBox:
      return {F::implies(a, b), F::implies(F::box(a), F::box(b))};
    case AxiomId::MonDia:
      return {F::implies(a, b), F::implies(F::dia(a), F::dia(b))};
    case AxiomId::RDualAnd:
      return {F::negation(F::conj(a, b)),
              F::negation(F::conj(F::box(a), F::dia(b)))};
    case AxiomId::RDualOr:
      return {F::disj(a, b), F::disj(F::box(a), F::dia(b))};
    default:
      throw std::invalid_argument(std::string(name(ax)) +
                                  " is an axiom, not a rule schema");
  }
}

std::vector<AxiomId> hilbert_catalogue(LogicId logic) {
  using A = AxiomId;
  std::vector<AxiomId> out;
  if (logic.family == Family::Classical) {
    out = {A::Dual, A::MonBox};
    if (logic.has_n()) out.push_back(A::NBox);
    if (logic.has_c()) out.push_back(A::CBox);
    if (logic.has_p()) out.push_back(A::PBox);
    if (logic.has_d()) out.push_back(A::D);
    if (logic.has_t()) out.push_back(A::TBox);
    return out;
  }
  out = {A::DualAnd, A::MonBox, A::MonDia};
  if (logic.has_n()) out.push_back(A::NBox);
  if (logic.has_c()) {
    out.push_back(A::CBox);
    out.push_back(A::KDia);
  }
  if (logic.has_d()) out.push_back(A::D);
  if (logic.has_p() || logic.base == Base::MD || logic.base == Base::MCD)
    out.push_back(A::PDia);
  if (logic.has_t()) {
    out.push_back(A::TBox);
    out.push_back(A::TDia);
  }
  return out;
}

}  // namespace wmodal
