#include "wmodal/calculus.hpp"

#include <algorithm>
#include <array>

namespace wmodal {

namespace {

struct RuleInfo {
  std::string_view name;
  Mode mode;
  int arity;
  bool modal;
};

constexpr Mode kC = Mode::Classical;
constexpr Mode kI = Mode::Constructive;

constexpr std::array<RuleInfo, kRuleCount> kRules = {{
    {"init", kC, 0, false},       {"Lbot", kC, 0, false},
    {"Limp", kC, 2, false},       {"Rimp", kC, 1, false},
    {"Rand", kC, 2, false},       {"Land", kC, 1, false},
    {"Ror", kC, 1, false},        {"Lor", kC, 2, false},
    {"Mbox", kC, 1, true},        {"Mdia", kC, 1, true},
    {"dual_and_M", kC, 1, true},  {"dual_or_M", kC, 1, true},
    {"Cbox", kC, 1, true},        {"Cdia", kC, 1, true},
    {"dual_and_C", kC, 1, true},  {"dual_or_C", kC, 1, true},
    {"Kbox", kC, 1, true},        {"Kdia", kC, 1, true},
    {"Nbox", kC, 1, true},        {"Ndia", kC, 1, true},
    {"Pbox", kC, 1, true},        {"Pdia", kC, 1, true},
    {"Tbox", kC, 1, true},        {"Tdia", kC, 1, true},
    {"D", kC, 1, true},           {"Dbox", kC, 1, true},
    {"Ddia", kC, 1, true},        {"CD", kC, 1, true},
    {"init", kI, 0, false},       {"Lbot", kI, 0, false},
    {"Limp", kI, 2, false},       {"Rimp", kI, 1, false},
    {"Rand", kI, 2, false},       {"Land", kI, 1, false},
    {"Ror_i", kI, 1, false},      {"Lor", kI, 2, false},
    {"iMbox", kI, 1, true},       {"iMdia", kI, 1, true},
    {"idual_and_M", kI, 1, true}, {"iNbox", kI, 1, true},
    {"iNdia", kI, 1, true},       {"iCbox", kI, 1, true},
    {"iCdia", kI, 1, true},       {"idual_and_C", kI, 1, true},
    {"iKbox", kI, 1, true},       {"iKdia", kI, 1, true},
    {"idual_and_K", kI, 1, true}, {"iTbox", kI, 1, true},
    {"iTdia", kI, 1, true},       {"iPbox", kI, 1, true},
    {"iPdia", kI, 1, true},       {"iD", kI, 1, true},
    {"iDbox", kI, 1, true},       {"iCD", kI, 1, true},
    {"iCDbox", kI, 1, true},
}};

const RuleInfo& info(RuleId r) { return kRules[static_cast<std::size_t>(r)]; }

std::vector<RuleId> build_rule_table(LogicId logic) {
  using R = RuleId;
  std::vector<RuleId> out;
  auto add = [&](std::initializer_list<RuleId> rs) {
    out.insert(out.end(), rs.begin(), rs.end());
  };
  if (logic.family == Family::Classical) {
    add({R::Init, R::LBot, R::LImp, R::RImp, R::RAnd, R::LAnd, R::ROr,
         R::LOr});
    if (logic.has_c() && logic.has_n()) {
      add({R::KBox, R::KDia});
    } else if (logic.has_c()) {
      add({R::CBox, R::CDia, R::DualAndC, R::DualOrC});
    } else {
      add({R::MBox, R::MDia, R::DualAndM, R::DualOrM});
      if (logic.has_n()) add({R::NBox, R::NDia});
    }
    if (logic.has_p()) add({R::PBox, R::PDia});
    if (logic.has_d()) {
      if (logic.has_c())
        add({R::CD});
      else
        add({R::D, R::DBox, R::DDia, R::PBox, R::PDia});
    }
    if (logic.has_t()) add({R::TBox, R::TDia});
    return out;
  }
  add({R::IInit, R::ILBot, R::ILImp, R::IRImp, R::IRAnd, R::ILAnd, R::IROr,
       R::ILOr});
  if (logic.has_c() && logic.has_n()) {
    add({R::IKBox, R::IKDia, R::IDualAndK});
  } else if (logic.has_c()) {
    add({R::ICBox, R::ICDia, R::IDualAndC});
  } else {
    add({R::IMBox, R::IMDia, R::IDualAndM});
    if (logic.has_n()) add({R::INBox, R::INDia});
  }
  if (logic.has_p()) add({R::IPBox, R::IPDia});
  if (logic.has_d()) {
    if (logic.has_c())
      add({R::ICD, R::ICDBox});
    else
      add({R::ID, R::IDBox, R::IPBox, R::IPDia});
  }
  if (logic.has_t()) add({R::ITBox, R::ITDia});
  return out;
}

// Formulas of `fs` whose indices are not listed in `used`.
std::vector<Formula> remove_indices(const std::vector<Formula>& fs,
                                    const std::vector<std::size_t>& used) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (std::find(used.begin(), used.end(), i) == used.end())
      out.push_back(fs[i]);
  return out;
}

bool distinct_in_range(const std::vector<std::size_t>& idx, std::size_t n) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= n) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (idx[i] == idx[j]) return false;
  }
  return true;
}

template <typename... Lists>
std::vector<Formula> join(Lists&&... lists) {
  std::vector<Formula> out;
  (out.insert(out.end(), lists.begin(), lists.end()), ...);
  return out;
}

}  // namespace

Mode rule_mode(RuleId r) { return info(r).mode; }
int rule_arity(RuleId r) { return info(r).arity; }
std::string_view rule_name(RuleId r) { return info(r).name; }
bool is_modal_rule(RuleId r) { return info(r).modal; }

std::optional<RuleId> rule_from_name(std::string_view name, Mode mode) {
  for (int i = 0; i < kRuleCount; ++i) {
    auto r = static_cast<RuleId>(i);
    if (info(r).name == name && info(r).mode == mode) return r;
  }
  return std::nullopt;
}

const std::vector<RuleId>& rules_for(LogicId logic) {
  static const std::array<std::vector<RuleId>, 28> tables = [] {
    std::array<std::vector<RuleId>, 28> out;
    for (std::size_t i = 0; i < 28; ++i)
      out[i] = build_rule_table(LogicId::all()[i]);
    return out;
  }();
  std::size_t offset = logic.family == Family::Classical ? 0 : 14;
  return tables[offset + static_cast<std::size_t>(logic.base)];
}

bool has_rule(LogicId logic, RuleId r) {
  const auto& rs = rules_for(logic);
  return std::find(rs.begin(), rs.end(), r) != rs.end();
}

std::optional<std::vector<Sequent>> schema_premises(
    RuleId rule, const Sequent& conclusion, const Principal& p) {
  using R = RuleId;
  const auto& ante = conclusion.antecedent();
  const auto& succ = conclusion.succedent();
  const Mode mode = conclusion.mode();
  if (rule_mode(rule) != mode) return std::nullopt;
  if (!distinct_in_range(p.ante, ante.size()) ||
      !distinct_in_range(p.succ, succ.size()))
    return std::nullopt;

  auto a = [&](std::size_t i) { return ante[p.ante[i]]; };
  auto s = [&](std::size_t i) { return succ[p.succ[i]]; };
  auto shape = [&](std::size_t n_ante, std::size_t n_succ) {
    return p.ante.size() == n_ante && p.succ.size() == n_succ &&
           (rule == R::IROr || p.choice == 0);
  };
  // All listed antecedent principals from `from` on are boxes; all listed
  // succedent principals from `from_s` on are diamonds.
  auto boxes_from = [&](std::size_t from) {
    for (std::size_t i = from; i < p.ante.size(); ++i)
      if (!a(i).is(Connective::Box)) return false;
    return true;
  };
  auto dias_from = [&](std::size_t from) {
    for (std::size_t i = from; i < p.succ.size(); ++i)
      if (!s(i).is(Connective::Dia)) return false;
    return true;
  };
  auto unwrap_ante = [&](std::size_t from) {
    std::vector<Formula> out;
    for (std::size_t i = from; i < p.ante.size(); ++i)
      out.push_back(a(i).operand());
    return out;
  };
  auto unwrap_succ = [&](std::size_t from) {
    std::vector<Formula> out;
    for (std::size_t i = from; i < p.succ.size(); ++i)
      out.push_back(s(i).operand());
    return out;
  };
  auto seq = [&](std::vector<Formula> g, std::vector<Formula> d) {
    return Sequent(std::move(g), std::move(d), mode);
  };
  using Out = std::vector<Sequent>;
  const auto gamma = remove_indices(ante, p.ante);
  const auto delta = remove_indices(succ, p.succ);
  const bool cons = mode == Mode::Constructive;

  switch (rule) {
    case R::Init:
    case R::IInit:
      if (!shape(1, 1) || !a(0).is(Connective::Atom) || a(0) != s(0))
        return std::nullopt;
      return Out{};
    case R::LBot:
    case R::ILBot:
      if (!shape(1, 0) || !a(0).is(Connective::Bottom)) return std::nullopt;
      return Out{};
    case R::LImp:
      if (!shape(1, 0) || !a(0).is(Connective::Imp)) return std::nullopt;
      return Out{seq(gamma, join(std::vector{a(0).left()}, delta)),
                 seq(join(gamma, std::vector{a(0).right()}), delta)};
    case R::ILImp:
      if (!shape(1, 0) || !a(0).is(Connective::Imp)) return std::nullopt;
      return Out{seq(join(gamma, std::vector{a(0)}), {a(0).left()}),
                 seq(join(gamma, std::vector{a(0).right()}), delta)};
    case R::RImp:
    case R::IRImp:
      if (!shape(0, 1) || !s(0).is(Connective::Imp)) return std::nullopt;
      return Out{seq(join(gamma, std::vector{s(0).left()}),
                     join(std::vector{s(0).right()}, delta))};
    case R::RAnd:
    case R::IRAnd:
      if (!shape(0, 1) || !s(0).is(Connective::And)) return std::nullopt;
      return Out{seq(gamma, join(std::vector{s(0).left()}, delta)),
                 seq(gamma, join(std::vector{s(0).right()}, delta))};
    case R::LAnd:
    case R::ILAnd:
      if (!shape(1, 0) || !a(0).is(Connective::And)) return std::nullopt;
      return Out{
          seq(join(gamma, std::vector{a(0).left(), a(0).right()}), delta)};
    case R::ROr:
      if (!shape(0, 1) || !s(0).is(Connective::Or)) return std::nullopt;
      return Out{
          seq(gamma, join(std::vector{s(0).left(), s(0).right()}, delta))};
    case R::IROr:
      if (p.ante.size() != 0 || p.succ.size() != 1 ||
          !s(0).is(Connective::Or) || (p.choice != 1 && p.choice != 2))
        return std::nullopt;
      return Out{seq(gamma, {p.choice == 1 ? s(0).left() : s(0).right()})};
    case R::LOr:
    case R::ILOr:
      if (!shape(1, 0) || !a(0).is(Connective::Or)) return std::nullopt;
      return Out{seq(join(gamma, std::vector{a(0).left()}), delta),
                 seq(join(gamma, std::vector{a(0).right()}), delta)};

    case R::MBox:
    case R::IMBox:
      if (!shape(1, 1) || !a(0).is(Connective::Box) || !s(0).is(Connective::Box))
        return std::nullopt;
      return Out{seq({a(0).operand()}, {s(0).operand()})};
    case R::MDia:
    case R::IMDia:
      if (!shape(1, 1) || !a(0).is(Connective::Dia) || !s(0).is(Connective::Dia))
        return std::nullopt;
      return Out{seq({a(0).operand()}, {s(0).operand()})};
    case R::D:
    case R::ID:
      if (!shape(1, 1) || !a(0).is(Connective::Box) || !s(0).is(Connective::Dia))
        return std::nullopt;
      return Out{seq({a(0).operand()}, {s(0).operand()})};
    case R::DualAndM:
    case R::IDualAndM:
      if (!shape(2, 0) || !a(0).is(Connective::Box) || !a(1).is(Connective::Dia))
        return std::nullopt;
      return Out{seq({a(0).operand(), a(1).operand()}, {})};
    case R::DualOrM:
      if (!shape(0, 2) || !s(0).is(Connective::Box) || !s(1).is(Connective::Dia))
        return std::nullopt;
      return Out{seq({}, {s(0).operand(), s(1).operand()})};
    case R::DBox:
    case R::IDBox:
      if (!shape(2, 0) || !boxes_from(0)) return std::nullopt;
      return Out{seq({a(0).operand(), a(1).operand()}, {})};
    case R::DDia:
      if (!shape(0, 2) || !dias_from(0)) return std::nullopt;
      return Out{seq({}, {s(0).operand(), s(1).operand()})};
    case R::NBox:
    case R::INBox:
    case R::PDia:
    case R::IPDia: {
      Connective c = (rule == R::NBox || rule == R::INBox) ? Connective::Box
                                                           : Connective::Dia;
      if (!shape(0, 1) || !s(0).is(c)) return std::nullopt;
      return Out{seq({}, {s(0).operand()})};
    }
    case R::NDia:
    case R::INDia:
    case R::PBox:
    case R::IPBox: {
      Connective c = (rule == R::NDia || rule == R::INDia) ? Connective::Dia
                                                           : Connective::Box;
      if (!shape(1, 0) || !a(0).is(c)) return std::nullopt;
      return Out{seq({a(0).operand()}, {})};
    }
    case R::TBox:
    case R::ITBox:
      if (!shape(1, 0) || !a(0).is(Connective::Box)) return std::nullopt;
      return Out{seq(join(ante, std::vector{a(0).operand()}), succ)};
    case R::TDia:
      if (!shape(0, 1) || !s(0).is(Connective::Dia)) return std::nullopt;
      return Out{seq(ante, join(std::vector{s(0).operand()}, succ))};
    case R::ITDia:
      if (!shape(0, 1) || !s(0).is(Connective::Dia)) return std::nullopt;
      return Out{seq(ante, {s(0).operand()})};

    case R::CBox:
    case R::ICBox:
      if (p.ante.empty() || p.succ.empty() || p.choice != 0 ||
          !boxes_from(0) || !s(0).is(Connective::Box) || !dias_from(1) ||
          (cons && p.succ.size() != 1))
        return std::nullopt;
      return Out{seq(unwrap_ante(0), join(std::vector{s(0).operand()},
                                          unwrap_succ(1)))};
    case R::CDia:
    case R::ICDia:
    case R::IKDia:
      if (p.ante.empty() || p.succ.empty() || p.choice != 0 ||
          !a(0).is(Connective::Dia) || !boxes_from(1) || !dias_from(0) ||
          (cons && p.succ.size() != 1))
        return std::nullopt;
      return Out{seq(join(unwrap_ante(1), std::vector{a(0).operand()}),
                     unwrap_succ(0))};
    case R::KBox:
    case R::IKBox:
      if (p.succ.empty() || p.choice != 0 || !boxes_from(0) ||
          !s(0).is(Connective::Box) || !dias_from(1) ||
          (cons && p.succ.size() != 1))
        return std::nullopt;
      return Out{seq(unwrap_ante(0), join(std::vector{s(0).operand()},
                                          unwrap_succ(1)))};
    case R::KDia:
      if (p.ante.empty() || p.choice != 0 || !a(0).is(Connective::Dia) ||
          !boxes_from(1) || !dias_from(0))
        return std::nullopt;
      return Out{seq(join(unwrap_ante(1), std::vector{a(0).operand()}),
                     unwrap_succ(0))};
    case R::IDualAndK:
      if (p.ante.empty() || !p.succ.empty() || p.choice != 0 ||
          !a(0).is(Connective::Dia) || !boxes_from(1))
        return std::nullopt;
      return Out{seq(join(unwrap_ante(1), std::vector{a(0).operand()}), {})};
    case R::DualAndC:
    case R::IDualAndC:
      if (p.ante.size() < 2 || !p.succ.empty() || p.choice != 0 ||
          !a(0).is(Connective::Box) || !a(1).is(Connective::Dia) ||
          !boxes_from(2))
        return std::nullopt;
      return Out{seq(join(unwrap_ante(2),
                          std::vector{a(0).operand(), a(1).operand()}),
                     {})};
    case R::DualOrC:
      if (p.succ.size() < 2 || !p.ante.empty() || p.choice != 0 ||
          !s(0).is(Connective::Box) || !dias_from(1))
        return std::nullopt;
      return Out{seq({}, unwrap_succ(0))};
    case R::CD:
      if (p.choice != 0 || !boxes_from(0) || !dias_from(0))
        return std::nullopt;
      return Out{seq(unwrap_ante(0), unwrap_succ(0))};
    case R::ICD:
      if (p.succ.size() != 1 || p.choice != 0 || !boxes_from(0) ||
          !s(0).is(Connective::Dia))
        return std::nullopt;
      return Out{seq(unwrap_ante(0), {s(0).operand()})};
    case R::ICDBox:
      if (!p.succ.empty() || p.choice != 0 || !boxes_from(0))
        return std::nullopt;
      return Out{seq(unwrap_ante(0), {})};
  }
  return std::nullopt;
}

bool check_step(LogicId logic, const RuleInstance& inst) {
  if (inst.conclusion.mode() != logic.mode()) return false;
  if (!has_rule(logic, inst.rule)) return false;
  auto expected = schema_premises(inst.rule, inst.conclusion, inst.principal);
  return expected && *expected == inst.premises;
}

// ---------------------------------------------------------------------------
// Backward enumeration

namespace {

// Index of the first occurrence of each distinct formula satisfying `pred`.
template <typename Pred>
std::vector<std::size_t> first_occurrences(const std::vector<Formula>& fs,
                                           Pred pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!pred(fs[i])) continue;
    if (i > 0 && fs[i - 1] == fs[i]) continue;  // canonical order groups
    out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<RuleInstance> backward_applications(LogicId logic,
                                                const Sequent& goal) {
  using R = RuleId;
  std::vector<RuleInstance> out;
  if (goal.mode() != logic.mode()) return out;
  const auto& ante = goal.antecedent();
  const auto& succ = goal.succedent();
  const bool cons = logic.constructive();

  auto all = [](Formula) { return true; };
  auto kind_is = [](Connective c) {
    return [c](Formula f) { return f.is(c); };
  };
  const auto ante_all = first_occurrences(ante, all);
  const auto succ_all = first_occurrences(succ, all);
  const auto boxes = first_occurrences(ante, kind_is(Connective::Box));
  const auto ante_dias = first_occurrences(ante, kind_is(Connective::Dia));
  const auto succ_boxes = first_occurrences(succ, kind_is(Connective::Box));
  const auto succ_dias = first_occurrences(succ, kind_is(Connective::Dia));

  auto emit = [&](R rule, Principal p) {
    auto prem = schema_premises(rule, goal, p);
    if (!prem) return;
    out.push_back({rule, goal, std::move(*prem), std::move(p)});
  };
  auto prepend = [](std::vector<std::size_t> head,
                    const std::vector<std::size_t>& tail,
                    std::size_t skip = static_cast<std::size_t>(-1)) {
    for (std::size_t t : tail)
      if (t != skip) head.push_back(t);
    return head;
  };

  for (R rule : rules_for(logic)) {
    switch (rule) {
      case R::Init:
      case R::IInit:
        for (std::size_t i : ante_all)
          for (std::size_t j : succ_all) emit(rule, {{i}, {j}});
        break;
      case R::LBot: case R::ILBot:
      case R::LImp: case R::ILImp:
      case R::LAnd: case R::ILAnd:
      case R::LOr:  case R::ILOr:
      case R::NDia: case R::INDia:
      case R::PBox: case R::IPBox:
      case R::TBox: case R::ITBox:
        for (std::size_t i : ante_all) emit(rule, {{i}, {}});
        break;
      case R::RImp: case R::IRImp:
      case R::RAnd: case R::IRAnd:
      case R::ROr:
      case R::NBox: case R::INBox:
      case R::PDia: case R::IPDia:
      case R::TDia: case R::ITDia:
        for (std::size_t j : succ_all) emit(rule, {{}, {j}});
        break;
      case R::IROr:
        for (std::size_t j : succ_all) {
          emit(rule, {{}, {j}, 1});
          emit(rule, {{}, {j}, 2});
        }
        break;
      case R::MBox: case R::IMBox:
      case R::MDia: case R::IMDia:
      case R::D:    case R::ID:
        for (std::size_t i : ante_all)
          for (std::size_t j : succ_all) emit(rule, {{i}, {j}});
        break;
      case R::DualAndM:
      case R::IDualAndM:
        for (std::size_t i : boxes)
          for (std::size_t j : ante_dias) emit(rule, {{i, j}, {}});
        break;
      case R::DualOrM:
        for (std::size_t i : succ_boxes)
          for (std::size_t j : succ_dias) emit(rule, {{}, {i, j}});
        break;
      case R::DBox:
      case R::IDBox:
        for (std::size_t x = 0; x < boxes.size(); ++x)
          for (std::size_t y = x + 1; y < boxes.size(); ++y)
            emit(rule, {{boxes[x], boxes[y]}, {}});
        break;
      case R::DDia:
        for (std::size_t x = 0; x < succ_dias.size(); ++x)
          for (std::size_t y = x + 1; y < succ_dias.size(); ++y)
            emit(rule, {{}, {succ_dias[x], succ_dias[y]}});
        break;
      case R::CBox:
      case R::ICBox:
        if (boxes.empty()) break;
        for (std::size_t j : succ_boxes)
          emit(rule, {boxes, cons ? std::vector{j} : prepend({j}, succ_dias)});
        break;
      case R::KBox:
      case R::IKBox:
        for (std::size_t j : succ_boxes)
          emit(rule, {boxes, cons ? std::vector{j} : prepend({j}, succ_dias)});
        break;
      case R::CDia:
        if (succ_dias.empty()) break;
        for (std::size_t i : ante_dias)
          emit(rule, {prepend({i}, boxes), succ_dias});
        break;
      case R::ICDia:
      case R::IKDia:
        for (std::size_t i : ante_dias)
          for (std::size_t j : succ_dias)
            emit(rule, {prepend({i}, boxes), {j}});
        break;
      case R::KDia:
        for (std::size_t i : ante_dias)
          emit(rule, {prepend({i}, boxes), succ_dias});
        break;
      case R::IDualAndK:
        for (std::size_t i : ante_dias) emit(rule, {prepend({i}, boxes), {}});
        break;
      case R::DualAndC:
      case R::IDualAndC:
        // The distinguished □A is immaterial once every box is unboxed;
        // take the first.
        if (boxes.empty()) break;
        for (std::size_t j : ante_dias)
          emit(rule, {prepend({boxes[0], j}, boxes, boxes[0]), {}});
        break;
      case R::DualOrC:
        if (succ_dias.empty()) break;
        for (std::size_t i : succ_boxes) emit(rule, {{}, prepend({i}, succ_dias)});
        break;
      case R::CD:
        if (boxes.empty() && succ_dias.empty()) break;
        emit(rule, {boxes, succ_dias});
        break;
      case R::ICD:
        for (std::size_t j : succ_dias) emit(rule, {boxes, {j}});
        break;
      case R::ICDBox:
        if (boxes.empty()) break;
        emit(rule, {boxes, {}});
        break;
    }
  }
  return out;
}

}  // namespace wmodal
