#include <random>

#include "doctest.h"
#include "wmodal/generate.hpp"
#include "wmodal/interpolation.hpp"

using namespace wmodal;
using F = Formula;

namespace {

LogicId L(const char* name) { return *LogicId::from_name(name); }

bool var_subset(F c, const FormulaSet& allowed) {
  for (F v : vars(c))
    if (!allowed.count(v)) return false;
  return true;
}

FormulaSet intersect(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  for (F f : a)
    if (b.count(f)) out.insert(f);
  return out;
}

// Checks the three clauses of the interpolation contract.
void check_contract(LogicId l, const Partition& part, const Sequent& goal,
                    const InterpolationResult& r) {
  std::vector<F> rhs = part.right;
  rhs.insert(rhs.end(), goal.succedent().begin(), goal.succedent().end());
  CHECK(var_subset(r.interpolant, intersect(vars(part.left), vars(rhs))));
  CHECK(check(l, r.left_certificate));
  CHECK(check(l, r.right_certificate));
  CHECK(r.left_certificate.conclusion ==
        Sequent(part.left, {r.interpolant}, Mode::Constructive));
  std::vector<F> ra = part.right;
  ra.push_back(r.interpolant);
  CHECK(r.right_certificate.conclusion ==
        Sequent(ra, goal.succedent(), Mode::Constructive));
}

}  // namespace

TEST_CASE("interpolate: p, q ⇒ p∧q with p on the left") {
  Sequent s = parse_sequent("p, q |- p & q", Mode::Constructive);
  auto d = prove(L("WM"), s);
  REQUIRE(d.proved());
  Partition part{{parse("p1")}, {parse("p2")}};
  auto r = interpolate_derivation(L("WM"), *d.derivation, part);
  CHECK(simplify_units(r.interpolant) == parse("p1"));
  check_contract(L("WM"), part, s, r);
}

TEST_CASE("interpolate: empty left part gives top") {
  Sequent s = parse_sequent("[]p, [](p -> q) |- []q", Mode::Constructive);
  auto d = prove(L("WK"), s);
  REQUIRE(d.proved());
  Partition part{{}, s.antecedent()};
  auto r = interpolate_derivation(L("WK"), *d.derivation, part);
  CHECK(r.interpolant == F::top());
  CHECK(r.left_certificate.conclusion ==
        Sequent({}, {F::top()}, Mode::Constructive));
  check_contract(L("WK"), part, s, r);
}

TEST_CASE("interpolate: bottom on the left") {
  Sequent s = parse_sequent("bot |- q", Mode::Constructive);
  auto d = prove(L("WM"), s);
  REQUIRE(d.proved());
  auto r = interpolate_derivation(L("WM"), *d.derivation,
                                  {{F::bottom()}, {}});
  CHECK(r.interpolant == F::bottom());
}

TEST_CASE("interpolate: iK◇ with everything on the left gives a diamond") {
  Sequent s = parse_sequent("[]p, <>q |- <>(p & q)", Mode::Constructive);
  auto d = prove(L("WK"), s);
  REQUIRE(d.proved());
  REQUIRE(d.derivation->rule == RuleId::IKDia);
  Partition part{s.antecedent(), {}};
  auto r = interpolate_derivation(L("WK"), *d.derivation, part);
  CHECK(r.interpolant.is(Connective::Dia));
  check_contract(L("WK"), part, s, r);
}

TEST_CASE("craig examples") {
  auto a = craig(L("WK"), parse("p1 & p2"), parse("p1 | p3"));
  CHECK(var_subset(a.interpolant, {F::bottom(), parse("p1")}));
  auto b = craig(L("WM"), parse("p1"), parse("p1"));
  CHECK(b.interpolant == parse("p1"));
  auto c = craig(L("WMT"), parse("[]p1"), parse("<>p1"));
  CHECK(var_subset(c.interpolant, {F::bottom(), parse("p1")}));
  CHECK(craig(L("WM"), F::bottom(), parse("p2")).interpolant == F::bottom());
  CHECK_THROWS_AS(craig(L("WM"), parse("p1"), parse("p2")), NotATheorem);
  CHECK_THROWS_AS(craig(L("K"), parse("p1"), parse("p1")), std::invalid_argument);
}

TEST_CASE("simplify_units") {
  CHECK(simplify_units(parse("top & p1")) == parse("p1"));
  CHECK(simplify_units(parse("(bot | p1) -> top")) == F::top());
  CHECK(simplify_units(parse("[](top -> p1)")) == parse("[]p1"));
  auto r = craig(L("WK"), parse("[](p1 & p2)"), parse("[]p1"), {.simplify = true});
  CHECK(check(L("WK"), r.left_certificate));
}

TEST_CASE("all partitions of random derivable sequents") {
  std::mt19937_64 rng(17);
  for (LogicId l : LogicId::all()) {
    if (!l.constructive()) continue;
    int done = 0;
    for (int tries = 0; tries < 3000 && done < 25; ++tries) {
      Sequent s = random_sequent(rng, l.mode(), 5, 3, 4);
      auto d = prove(l, s);
      if (!d.proved()) continue;
      ++done;
      const auto& ante = s.antecedent();
      for (unsigned mask = 0; mask < (1u << ante.size()); ++mask) {
        Partition part;
        for (std::size_t i = 0; i < ante.size(); ++i)
          (mask >> i & 1 ? part.left : part.right).push_back(ante[i]);
        auto r = interpolate_derivation(l, *d.derivation, part);
        check_contract(l, part, s, r);
      }
    }
    CHECK(done == 25);
  }
}
