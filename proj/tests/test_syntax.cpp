#include <random>

#include "doctest.h"
#include "wmodal/formula.hpp"
#include "wmodal/generate.hpp"

using namespace wmodal;
using F = Formula;

namespace {
F p(std::uint32_t i) { return F::atom(i); }
}  // namespace

TEST_CASE("parse: grammar cases") {
  CHECK(parse("p1 -> <>p2") == F::implies(p(1), F::dia(p(2))));
  CHECK(parse("~p1") == F::implies(p(1), F::bottom()));
  CHECK(parse("top") == F::implies(F::bottom(), F::bottom()));
  CHECK(parse("bot") == F::bottom());
  CHECK(parse("p1 <-> p2") ==
        F::conj(F::implies(p(1), p(2)), F::implies(p(2), p(1))));
}

TEST_CASE("parse: precedence and associativity") {
  CHECK(parse("p1 -> p2 -> p3") == F::implies(p(1), F::implies(p(2), p(3))));
  CHECK(parse("p1 & p2 | p3") == F::disj(F::conj(p(1), p(2)), p(3)));
  CHECK(parse("p1 | p2 & p3") == F::disj(p(1), F::conj(p(2), p(3))));
  CHECK(parse("[]p1 & p2") == F::conj(F::box(p(1)), p(2)));
  CHECK(parse("~[]~p1") ==
        F::negation(F::box(F::negation(p(1)))));
  CHECK(parse("p1 & p2 & p3") == F::conj(F::conj(p(1), p(2)), p(3)));
  CHECK(parse("p1 | p2 -> p3") == F::implies(F::disj(p(1), p(2)), p(3)));
}

TEST_CASE("parse: unicode aliases") {
  CHECK(parse("□p1 ∧ ◇p2 → ⊥") ==
        F::implies(F::conj(F::box(p(1)), F::dia(p(2))), F::bottom()));
  CHECK(parse("¬p1 ∨ ⊤") == F::disj(F::negation(p(1)), F::top()));
  CHECK(parse("p1 ↔ p1") == parse("p1 <-> p1"));
}

TEST_CASE("parse: identifiers get fresh indices skipping explicit ones") {
  SymbolTable t;
  F f = parse("q -> p1 & r", t);
  CHECK(f == F::implies(p(2), F::conj(p(1), p(3))));
  CHECK(t.name_of(2) == std::optional<std::string>("q"));
  CHECK(parse("p & q") == F::conj(p(1), p(2)));
  CHECK(parse("a -> a") == F::implies(p(1), p(1)));
  // Not of the form p<k> with k >= 1, so an ordinary identifier.
  CHECK(parse("p0 & p1") == F::conj(p(2), p(1)));
}

TEST_CASE("parse: errors carry positions") {
  auto pos_of = [](std::string_view text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(pos_of("p1 &") == 4);
  CHECK(pos_of("(p1") == 3);
  CHECK(pos_of("p1 p2") == 3);
  CHECK(pos_of("p1 <-> p2 <-> p3") == 10);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p1 $ p2"), ParseError);
}

TEST_CASE("render: examples") {
  CHECK(render(F::implies(p(1), F::dia(p(2)))) == "p1 -> <>p2");
  CHECK(render(F::bottom()) == "bot");
  CHECK(render(F::box(F::conj(p(1), p(2)))) == "[](p1 & p2)");
  CHECK(render(F::implies(F::implies(p(1), p(2)), p(3))) ==
        "(p1 -> p2) -> p3");
  CHECK(render(F::negation(p(1)), {.pretty = true}) == "~p1");
  CHECK(render(F::top(), {.pretty = true}) == "top");
}

TEST_CASE("render/parse round trip on random formulas") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    F f = random_formula_up_to(rng, 14, 3);
    CHECK(parse(render(f)) == f);
    CHECK(parse(render(f, {.pretty = true})) == f);
  }
}

TEST_CASE("vars") {
  CHECK(vars(F::conj(F::box(p(1)), F::dia(p(2)))) ==
        FormulaSet{F::bottom(), p(1), p(2)});
  CHECK(vars(F::top()) == FormulaSet{F::bottom()});
  CHECK(vars(p(1)) == FormulaSet{F::bottom(), p(1)});
  CHECK(vars(std::vector<F>{}) == FormulaSet{F::bottom()});
}

TEST_CASE("complexity") {
  CHECK(p(1).complexity() == 0);
  CHECK(F::bottom().complexity() == 0);
  CHECK(F::box(F::implies(p(1), p(2))).complexity() == 2);
}

TEST_CASE("subformula closure") {
  CHECK(subformula_closure(F::box(p(1))) == FormulaSet{F::box(p(1)), p(1)});
  CHECK(subformula_closure(F::implies(p(1), p(2))) ==
        FormulaSet{F::implies(p(1), p(2)), p(1), p(2)});
  CHECK(subformula_closure(F::bottom()) == FormulaSet{F::bottom()});
}

TEST_CASE("measures on random formulas") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    F f = random_formula_up_to(rng, 12, 3);
    CHECK(vars(f).count(F::bottom()) == 1);
    for (F g : subformula_closure(f)) {
      for (F v : vars(g)) CHECK(vars(f).count(v) == 1);
      if (g.is_binary()) {
        CHECK(g.left().complexity() < g.complexity());
        CHECK(g.right().complexity() < g.complexity());
      } else if (g.is_modal()) {
        CHECK(g.operand().complexity() < g.complexity());
      }
    }
  }
}

TEST_CASE("canonical order is total and consistent with equality") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    F a = random_formula_up_to(rng, 6, 2);
    F b = random_formula_up_to(rng, 6, 2);
    auto ab = canonical_compare(a, b);
    auto ba = canonical_compare(b, a);
    CHECK((ab == 0) == (a == b));
    CHECK((ab < 0) == (ba > 0));
  }
}

TEST_CASE("formula space counts") {
  std::vector<std::size_t> expected = {3, 6, 39, 186, 1182, 7116};
  for (std::size_t s = 1; s <= expected.size(); ++s)
    CHECK(formulas_of_size(s, 2).size() == expected[s - 1]);
}
