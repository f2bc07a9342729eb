#include <random>

#include "doctest.h"
#include "wmodal/generate.hpp"
#include "wmodal/prover.hpp"

using namespace wmodal;
using F = Formula;

namespace {

LogicId L(const char* name) { return *LogicId::from_name(name); }

bool theorem(const char* logic, const char* text) {
  return decide(L(logic), parse(text)) == Verdict::Theorem;
}

}  // namespace

TEST_CASE("prove: worked examples") {
  auto k = prove(L("WK"), parse_sequent("|- [](p->q) -> ([]p -> []q)",
                                         Mode::Constructive));
  REQUIRE(k.proved());
  CHECK(check(L("WK"), *k.derivation));
  CHECK(!prove(L("WMC"), parse_sequent("|- <>(p|q) -> <>p | <>q",
                                        Mode::Constructive))
             .proved());
  CHECK(theorem("WM", "~([]p & <>~p)"));
  CHECK(!theorem("WK", "p | ~p"));
  CHECK(theorem("K", "[]p | <>~p"));
}

TEST_CASE("decide: worked examples") {
  CHECK(theorem("WMN", "[]top"));
  CHECK(theorem("WMN", "~<>bot"));
  CHECK(!theorem("WM", "[]p & []q -> [](p & q)"));
  CHECK(!theorem("WM", "[]top"));
}

TEST_CASE("prove_from") {
  auto a = prove_from(L("WM"), {parse("p1")}, parse("p1"));
  CHECK(a.proved());
  auto b = prove_from(L("WK"), {parse("[]p1"), parse("[](p1 -> p2)")},
                      parse("[]p2"));
  REQUIRE(b.proved());
  CHECK(check(L("WK"), *b.derivation));
  auto c = prove_from(L("WM"), {parse("p1 | ~p1")}, parse("p1 | ~p1"));
  CHECK(c.proved());
}

TEST_CASE("prove rejects mode mismatch") {
  CHECK_THROWS_AS(prove(L("K"), Sequent({}, {F::top()}, Mode::Constructive)),
                  std::invalid_argument);
}

TEST_CASE("budget is reported as an error") {
  ProverOptions tiny;
  tiny.max_nodes = 3;
  CHECK_THROWS_AS(decide(L("WK"), parse("[](p1->p2) -> ([]p1 -> []p2)"), tiny),
                  BudgetExceeded);
}

TEST_CASE("proofs of duplicated multisets replay and check") {
  Sequent s({parse("p1 & p2"), parse("p1 & p2"), parse("[]p1"), parse("[]p1")},
            {parse("p1")}, Mode::Constructive);
  auto r = prove(L("WK"), s);
  REQUIRE(r.proved());
  CHECK(r.derivation->conclusion == s);
  CHECK(check(L("WK"), *r.derivation));
  // Only propositional rules are needed, so WM accepts the proof too.
  CHECK(check(L("WM"), *r.derivation));
}

TEST_CASE("check rejects wrong logic and bad heights") {
  auto r = prove(L("WMT"), parse_sequent("|- []p -> p", Mode::Constructive));
  REQUIRE(r.proved());
  CHECK(check(L("WMT"), *r.derivation));
  CHECK(!check(L("WM"), *r.derivation));
  Derivation bad = *r.derivation;
  bad.height += 1;
  CHECK(!check(L("WMT"), bad));
}

TEST_CASE("fast engine agrees with the reference search") {
  std::mt19937_64 rng(5);
  for (LogicId l : LogicId::all()) {
    int compared = 0;
    for (int i = 0; i < 150; ++i) {
      Sequent s = random_sequent(rng, l.mode(), 5, 2, 2);
      auto ref = reference_derivable(l, s, 20'000);
      if (!ref) continue;
      ++compared;
      auto fast = prove(l, s);
      CHECK_MESSAGE(fast.proved() == *ref, l.name() << " " << render(s));
      if (fast.proved()) CHECK(check(l, *fast.derivation));
    }
    CHECK(compared > 100);
  }
}

TEST_CASE("bounded search finds the engine's proofs at their height") {
  std::mt19937_64 rng(9);
  for (LogicId l : LogicId::all()) {
    for (int i = 0; i < 40; ++i) {
      Sequent s = random_sequent(rng, l.mode(), 5, 2, 2);
      auto fast = prove(l, s);
      if (!fast.proved()) continue;
      auto b = derivable_within(l, s, fast.derivation->height);
      if (b) CHECK(*b);
    }
  }
}

TEST_CASE("proof serialization round trip") {
  auto r = prove(L("WKD"),
                 parse_sequent("[](p -> q), []p |- <>q", Mode::Constructive));
  REQUIRE(r.proved());
  std::string text = proof_to_json_lines(L("WKD"), *r.derivation);
  ParsedProof back = proof_from_json_lines(text);
  CHECK(back.logic == L("WKD"));
  CHECK(check(L("WKD"), back.derivation));
  CHECK(proof_to_json_lines(back.logic, back.derivation) == text);
  CHECK(!proof_to_text(*r.derivation).empty());
  CHECK_THROWS_AS(proof_from_json_lines("{\"format\":\"x\"}"),
                  std::runtime_error);
  CHECK_THROWS_AS(proof_from_json_lines(""), std::runtime_error);
}
