#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "wmodal/calculus.hpp"
#include "wmodal/generate.hpp"

using namespace wmodal;
using F = Formula;
using R = RuleId;

namespace {

F p(std::uint32_t i) { return F::atom(i); }

LogicId L(const char* name) { return *LogicId::from_name(name); }

std::set<R> rule_set(LogicId l) {
  const auto& rs = rules_for(l);
  return {rs.begin(), rs.end()};
}

const std::set<R> kIProp = {R::IInit, R::ILBot, R::ILImp, R::IRImp,
                            R::IRAnd, R::ILAnd, R::IROr,  R::ILOr};
const std::set<R> kCProp = {R::Init, R::LBot, R::LImp, R::RImp,
                            R::RAnd, R::LAnd, R::ROr,  R::LOr};

std::set<R> with(std::set<R> base, std::initializer_list<R> extra) {
  base.insert(extra.begin(), extra.end());
  return base;
}

std::vector<RuleInstance> of_rule(const std::vector<RuleInstance>& xs, R r) {
  std::vector<RuleInstance> out;
  for (const auto& x : xs)
    if (x.rule == r) out.push_back(x);
  return out;
}

// Every injective index tuple of length k over [0, n).
void tuples(std::size_t n, std::size_t k,
            std::vector<std::vector<std::size_t>>& out,
            std::vector<std::size_t>& cur) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(cur.begin(), cur.end(), i) != cur.end()) continue;
    cur.push_back(i);
    tuples(n, k, out, cur);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> all_tuples(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  for (std::size_t k = 0; k <= n; ++k) tuples(n, k, out, cur);
  return out;
}

bool subset(const std::vector<F>& a, const std::vector<F>& b) {
  return std::all_of(a.begin(), a.end(), [&](F f) {
    return std::find(b.begin(), b.end(), f) != b.end();
  });
}

// `strong` is at least as weak a premise as `weak` up to weakening.
bool weakens_to(const Sequent& weak, const Sequent& strong) {
  return subset(weak.antecedent(), strong.antecedent()) &&
         subset(weak.succedent(), strong.succedent());
}

}  // namespace

TEST_CASE("rules_for: rule tables") {
  CHECK(rule_set(L("WK")) == with(kIProp, {R::IKBox, R::IKDia, R::IDualAndK}));
  CHECK(rule_set(L("WMND")) ==
        with(kIProp, {R::IMBox, R::IMDia, R::IDualAndM, R::INBox, R::INDia,
                      R::ID, R::IDBox, R::IPBox, R::IPDia}));
  CHECK(rule_set(L("WMD")) ==
        with(kIProp, {R::IMBox, R::IMDia, R::IDualAndM, R::ID, R::IDBox,
                      R::IPBox, R::IPDia}));
  CHECK(rule_set(L("WKT")) ==
        with(kIProp, {R::IKBox, R::IKDia, R::IDualAndK, R::ITBox, R::ITDia}));
  CHECK(rule_set(L("WMCD")) ==
        with(kIProp, {R::ICBox, R::ICDia, R::IDualAndC, R::ICD, R::ICDBox}));
  CHECK(rule_set(L("WMNP")) ==
        with(kIProp, {R::IMBox, R::IMDia, R::IDualAndM, R::INBox, R::INDia,
                      R::IPBox, R::IPDia}));
  CHECK(rule_set(L("K")) == with(kCProp, {R::KBox, R::KDia}));
  CHECK(rule_set(L("KD")) == with(kCProp, {R::KBox, R::KDia, R::CD}));
  CHECK(rule_set(L("M")) ==
        with(kCProp, {R::MBox, R::MDia, R::DualAndM, R::DualOrM}));
  CHECK(rule_set(L("MC")) ==
        with(kCProp, {R::CBox, R::CDia, R::DualAndC, R::DualOrC}));
  CHECK(rule_set(L("MND")) ==
        with(kCProp, {R::MBox, R::MDia, R::DualAndM, R::DualOrM, R::NBox,
                      R::NDia, R::D, R::DBox, R::DDia, R::PBox, R::PDia}));
  CHECK(rule_set(L("MCT")) ==
        with(kCProp, {R::CBox, R::CDia, R::DualAndC, R::DualOrC, R::TBox,
                      R::TDia}));
  for (LogicId l : LogicId::all())
    for (R r : rules_for(l)) CHECK(rule_mode(r) == l.mode());
}

TEST_CASE("rule metadata") {
  CHECK(rule_arity(R::IInit) == 0);
  CHECK(rule_arity(R::ILImp) == 2);
  CHECK(rule_arity(R::IKDia) == 1);
  for (int i = 0; i < kRuleCount; ++i) {
    auto r = static_cast<R>(i);
    CHECK(rule_from_name(rule_name(r), rule_mode(r)) == r);
  }
  CHECK(rule_from_name("iKbox", Mode::Classical) == std::nullopt);
}

TEST_CASE("logic names") {
  CHECK(LogicId::all().size() == 28);
  for (LogicId l : LogicId::all()) CHECK(LogicId::from_name(l.name()) == l);
  CHECK(!LogicId::from_name("S4"));
  CHECK(!LogicId::from_name("WKP"));
  CHECK(lattice_arrows().size() == 23);
}

TEST_CASE("instantiate_axiom") {
  CHECK(instantiate_axiom(AxiomId::CBox, p(1), p(2)) ==
        F::implies(F::conj(F::box(p(1)), F::box(p(2))),
                   F::box(F::conj(p(1), p(2)))));
  CHECK(instantiate_axiom(AxiomId::NDia, p(1), p(2)) ==
        F::negation(F::dia(F::bottom())));
  CHECK(instantiate_axiom(AxiomId::TDia, p(1)) ==
        F::implies(p(1), F::dia(p(1))));
  CHECK(instantiate_axiom(AxiomId::KBox, p(1), p(2)) ==
        parse("[](p1 -> p2) -> ([]p1 -> []p2)"));
  CHECK_THROWS_AS(instantiate_axiom(AxiomId::Nec, p(1)), std::invalid_argument);
  auto r = instantiate_rule(AxiomId::RDualOr, p(1), p(2));
  CHECK(r.premise == F::disj(p(1), p(2)));
  CHECK(r.conclusion == F::disj(F::box(p(1)), F::dia(p(2))));
}

TEST_CASE("backward_applications: iK◇ and idual∧K") {
  Sequent goal({F::box(p(1)), F::dia(p(2))}, {F::dia(p(3))},
               Mode::Constructive);
  auto apps = backward_applications(L("WK"), goal);
  auto kdia = of_rule(apps, R::IKDia);
  REQUIRE(kdia.size() == 1);
  CHECK(kdia[0].premises ==
        std::vector{Sequent({p(1), p(2)}, {p(3)}, Mode::Constructive)});
  auto dual = of_rule(apps, R::IDualAndK);
  REQUIRE(dual.size() == 1);
  CHECK(dual[0].premises ==
        std::vector{Sequent({p(1), p(2)}, {}, Mode::Constructive)});
  CHECK(of_rule(apps, R::IKBox).empty());
}

TEST_CASE("backward_applications: R∧") {
  Sequent goal({p(3), F::box(p(1))}, {F::conj(p(1), p(2))},
               Mode::Constructive);
  auto rand = of_rule(backward_applications(L("WM"), goal), R::IRAnd);
  REQUIRE(rand.size() == 1);
  CHECK(rand[0].premises ==
        std::vector{Sequent({p(3), F::box(p(1))}, {p(1)}, Mode::Constructive),
                    Sequent({p(3), F::box(p(1))}, {p(2)}, Mode::Constructive)});
}

TEST_CASE("backward_applications: iN□ without iM□") {
  Sequent goal({}, {F::box(F::top())}, Mode::Constructive);
  auto apps = backward_applications(L("WMN"), goal);
  auto nbox = of_rule(apps, R::INBox);
  REQUIRE(nbox.size() == 1);
  CHECK(nbox[0].premises ==
        std::vector{Sequent({}, {F::top()}, Mode::Constructive)});
  CHECK(of_rule(apps, R::IMBox).empty());
}

TEST_CASE("backward_applications: iCD□ needs a box") {
  Sequent none({p(1)}, {}, Mode::Constructive);
  CHECK(of_rule(backward_applications(L("WKD"), none), R::ICDBox).empty());
  Sequent one({p(1), F::box(p(2))}, {p(1)}, Mode::Constructive);
  auto apps = of_rule(backward_applications(L("WKD"), one), R::ICDBox);
  REQUIRE(apps.size() == 1);
  CHECK(apps[0].premises == std::vector{Sequent({p(2)}, {}, Mode::Constructive)});
}

TEST_CASE("backward_applications: R∨ᵢ offers both disjuncts") {
  Sequent goal({}, {F::disj(p(1), p(2))}, Mode::Constructive);
  auto ror = of_rule(backward_applications(L("WM"), goal), R::IROr);
  REQUIRE(ror.size() == 2);
  CHECK(ror[0].premises[0].succedent() == std::vector{p(1)});
  CHECK(ror[1].premises[0].succedent() == std::vector{p(2)});
}

TEST_CASE("check_step examples") {
  RuleInstance kbox{R::IKBox,
                    Sequent({F::box(p(1))}, {F::box(p(1))}, Mode::Constructive),
                    {Sequent({p(1)}, {p(1)}, Mode::Constructive)},
                    {{0}, {0}}};
  CHECK(check_step(L("WK"), kbox));
  CHECK(!check_step(L("WM"), kbox));

  RuleInstance cbox{R::ICBox,
                    Sequent({p(1)}, {F::box(p(1))}, Mode::Constructive),
                    {Sequent({}, {p(1)}, Mode::Constructive)},
                    {{}, {0}}};
  CHECK(!check_step(L("WMC"), cbox));

  RuleInstance mbox{
      R::MBox,
      Sequent({F::box(p(1)), p(2)}, {F::box(p(3))}, Mode::Classical),
      {Sequent({p(1), p(2)}, {p(3)}, Mode::Classical)},
      {{0}, {0}}};
  CHECK(!check_step(L("M"), mbox));
  mbox.premises = {Sequent({p(1)}, {p(3)}, Mode::Classical)};
  mbox.principal = {{1}, {0}};
  CHECK(check_step(L("M"), mbox));

  RuleInstance ror{R::IROr,
                   Sequent({}, {F::disj(p(1), p(2))}, Mode::Constructive),
                   {Sequent({}, {p(2)}, Mode::Constructive)},
                   {{}, {0}, 2}};
  CHECK(check_step(L("WM"), ror));
  ror.principal.choice = 1;
  CHECK(!check_step(L("WM"), ror));
}

TEST_CASE("classical T◇ copies the diamond; iT◇ does not") {
  Sequent c({}, {F::dia(p(1))}, Mode::Classical);
  auto t = of_rule(backward_applications(L("MT"), c), R::TDia);
  REQUIRE(t.size() == 1);
  CHECK(t[0].premises[0] == Sequent({}, {p(1), F::dia(p(1))}, Mode::Classical));
  Sequent i({}, {F::dia(p(1))}, Mode::Constructive);
  auto ti = of_rule(backward_applications(L("WMT"), i), R::ITDia);
  REQUIRE(ti.size() == 1);
  CHECK(ti[0].premises[0] == Sequent({}, {p(1)}, Mode::Constructive));
}

TEST_CASE("backward instances: check_step, subformula property, oracle") {
  std::mt19937_64 rng(42);
  for (LogicId l : LogicId::all()) {
    for (int n = 0; n < 60; ++n) {
      Sequent goal = random_sequent(rng, l.mode(), 4, 2, 3);
      FormulaSet closure;
      for (const auto* side : {&goal.antecedent(), &goal.succedent()})
        for (F f : *side) {
          auto c = subformula_closure(f);
          closure.insert(c.begin(), c.end());
        }
      auto apps = backward_applications(l, goal);
      for (const auto& inst : apps) {
        CHECK(check_step(l, inst));
        for (const auto& prem : inst.premises)
          for (const auto* side : {&prem.antecedent(), &prem.succedent()})
            for (F f : *side) CHECK(closure.count(f) == 1);
      }
      // Brute-force oracle: every schema match over every principal tuple
      // is subsumed, up to weakening of its premises, by an emitted instance
      // of the same rule.
      auto ante_tuples = all_tuples(goal.antecedent().size());
      auto succ_tuples = all_tuples(goal.succedent().size());
      for (R r : rules_for(l)) {
        for (const auto& a : ante_tuples)
          for (const auto& s : succ_tuples)
            for (int choice : {0, 1, 2}) {
              Principal pr{a, s, choice};
              auto prem = schema_premises(r, goal, pr);
              if (!prem) continue;
              // Empty-sequent premises are underivable and may be pruned.
              bool has_empty = std::any_of(
                  prem->begin(), prem->end(), [](const Sequent& q) {
                    return q.antecedent().empty() && q.succedent().empty();
                  });
              if (has_empty) continue;
              // A D-pair on two copies of one formula is the P instance.
              R want = r;
              if ((r == R::DBox || r == R::IDBox || r == R::DDia) &&
                  ((pr.ante.size() == 2 &&
                    goal.antecedent()[pr.ante[0]] ==
                        goal.antecedent()[pr.ante[1]]) ||
                   (pr.succ.size() == 2 &&
                    goal.succedent()[pr.succ[0]] ==
                        goal.succedent()[pr.succ[1]])))
                want = r == R::DBox ? R::PBox
                                    : r == R::IDBox ? R::IPBox : R::PDia;
              bool covered = false;
              for (const auto& inst : apps) {
                if (inst.rule != want || inst.premises.size() != prem->size())
                  continue;
                bool all = true;
                for (std::size_t k = 0; k < prem->size(); ++k)
                  all = all && weakens_to((*prem)[k], inst.premises[k]);
                covered = covered || all;
              }
              CHECK_MESSAGE(covered, l.name() << " " << rule_name(r) << " "
                                              << render(goal));
            }
      }
    }
  }
}
