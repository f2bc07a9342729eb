#include "doctest.h"
#include "wmodal/sequent.hpp"

using namespace wmodal;
using F = Formula;

namespace {
F p(std::uint32_t i) { return F::atom(i); }
}  // namespace

TEST_CASE("constructive sequents have at most one succedent formula") {
  CHECK_THROWS_AS(Sequent({}, {p(1), p(2)}, Mode::Constructive),
                  std::invalid_argument);
  CHECK_NOTHROW(Sequent({}, {p(1), p(2)}, Mode::Classical));
  CHECK_NOTHROW(Sequent({p(1)}, {}, Mode::Constructive));
}

TEST_CASE("multiset equality") {
  Sequent a({p(1), p(2)}, {p(3)}, Mode::Constructive);
  Sequent b({p(2), p(1)}, {p(3)}, Mode::Constructive);
  Sequent c({p(2), p(1), p(1)}, {p(3)}, Mode::Constructive);
  CHECK(a == b);
  CHECK(!(a == c));
}

TEST_CASE("interpret") {
  // p1, p2 ⇒ q1 with q1 as atom 3.
  CHECK(interpret(Sequent({p(1), p(2)}, {p(3)}, Mode::Constructive)) ==
        F::implies(F::conj(p(1), p(2)), p(3)));
  CHECK(interpret(Sequent({}, {}, Mode::Constructive)) == F::bottom());
  CHECK(interpret(Sequent({p(1)}, {}, Mode::Constructive)) ==
        F::implies(p(1), F::bottom()));
  CHECK(interpret(Sequent({}, {p(1)}, Mode::Constructive)) == p(1));
  CHECK(interpret(Sequent({}, {p(1), p(2)}, Mode::Classical)) ==
        F::disj(p(1), p(2)));
}

TEST_CASE("key_of") {
  SequentKey k = key_of(Sequent({p(1), p(1)}, {p(3)}, Mode::Constructive));
  CHECK(k.antecedent == std::vector<F>{p(1)});
  CHECK(k.succedent == std::vector<F>{p(3)});
  CHECK(key_of(Sequent({p(1), p(2)}, {p(3)}, Mode::Constructive)) ==
        key_of(Sequent({p(2), p(1)}, {p(3)}, Mode::Constructive)));
  SequentKey e = key_of(Sequent({}, {}, Mode::Constructive));
  CHECK(e.antecedent.empty());
  CHECK(e.succedent.empty());
}

TEST_CASE("parse_sequent") {
  Sequent s = parse_sequent("p1, []p2 |- <>p3", Mode::Constructive);
  CHECK(s == Sequent({p(1), F::box(p(2))}, {F::dia(p(3))}, Mode::Constructive));
  CHECK(parse_sequent("p1 |-", Mode::Constructive) ==
        Sequent({p(1)}, {}, Mode::Constructive));
  CHECK(parse_sequent("|- p1", Mode::Constructive) ==
        Sequent({}, {p(1)}, Mode::Constructive));
  CHECK(parse_sequent("p1 -> p2", Mode::Constructive) ==
        Sequent({}, {F::implies(p(1), p(2))}, Mode::Constructive));
  CHECK(parse_sequent("(p1 & p2), p3 ⊢ p1, p2", Mode::Classical) ==
        Sequent({F::conj(p(1), p(2)), p(3)}, {p(1), p(2)}, Mode::Classical));
  CHECK_THROWS(parse_sequent("|- p1, p2", Mode::Constructive));
  CHECK_THROWS_AS(parse_sequent("p1, |- p2", Mode::Constructive), ParseError);
}

TEST_CASE("render sequent round trip") {
  for (const char* text : {"p1, []p2 |- <>p3", "p1 |-", "|- p1", "|-"}) {
    Sequent s = parse_sequent(text, Mode::Constructive);
    CHECK(parse_sequent(render(s), Mode::Constructive) == s);
  }
}
