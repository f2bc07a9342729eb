#include <chrono>
#include <random>

#include "doctest.h"
#include "wmodal/generate.hpp"
#include "wmodal/prover.hpp"
#include "wmodal/semantics.hpp"

using namespace wmodal;
using F = Formula;

namespace {

LogicId L(const char* name) { return *LogicId::from_name(name); }

Model one_world(Mode kind, std::vector<WorldSet> n) {
  Model m = Model::empty(kind, 1);
  m.neighbourhoods[0] = std::move(n);
  return m;
}

}  // namespace

TEST_CASE("forcing on one world") {
  for (Mode kind : {Mode::Classical, Mode::Constructive}) {
    Model m = one_world(kind, {});
    CHECK(forces(m, 0, parse("<>bot")));
    CHECK_FALSE(forces(m, 0, parse("[]top")));
    CHECK_FALSE(valid_in_model(m, parse("~<>bot")));
    CHECK(valid_in_model(m, parse("top")));

    Model b = one_world(kind, {1});
    b.valuation[1] = 1;
    CHECK(forces(b, 0, parse("[]p1")));
    CHECK(forces(b, 0, parse("<>p1")));
    b.valuation[1] = 0;
    CHECK_FALSE(forces(b, 0, parse("[]p1")));
  }
  CHECK_THROWS_AS(forces(Model::empty(Mode::Classical, 2), 2, parse("p")),
                  std::out_of_range);
}

TEST_CASE("constructive implication looks at successors") {
  Model m = Model::empty(Mode::Constructive, 2);
  m.up[0] = 0b11;
  m.valuation[1] = 0b10;
  CHECK_FALSE(forces(m, 0, parse("p1 | ~p1")));
  CHECK(forces(m, 1, parse("p1 | ~p1")));
  CHECK_FALSE(forces(m, 0, parse("~p1")));
  CHECK(forces(m, 0, parse("~~p1")));
}

TEST_CASE("constructive box quantifies over successors") {
  Model m = Model::empty(Mode::Constructive, 2);
  m.up[0] = 0b11;
  m.neighbourhoods[0] = {0b11};
  m.valuation[1] = 0b11;
  // world 1 has no neighbourhood, so □p fails there and hence at 0
  CHECK_FALSE(forces(m, 0, parse("[]p1")));
  m.neighbourhoods[1] = {0b10};
  CHECK(forces(m, 0, parse("[]p1")));
  CHECK(forces(m, 1, parse("[]p1")));
}

TEST_CASE("condition checks and witnesses") {
  Model m = Model::empty(Mode::Classical, 2);
  m.neighbourhoods[0] = {0b01, 0b10};
  auto r = check_conditions(m, L("K"));
  CHECK(r.structure_ok);
  CHECK_FALSE(r.get(Condition::C).holds);
  CHECK(r.get(Condition::C).required);
  CHECK(witness_valid(m, Condition::C, *r.get(Condition::C).witness));
  CHECK_FALSE(r.get(Condition::N).holds);
  CHECK(r.get(Condition::N).witness->world == 1);
  CHECK(witness_valid(m, Condition::N, *r.get(Condition::N).witness));
  CHECK_FALSE(r.get(Condition::D).holds);
  CHECK(witness_valid(m, Condition::D, *r.get(Condition::D).witness));
  CHECK_FALSE(r.get(Condition::T).holds);
  CHECK(witness_valid(m, Condition::T, *r.get(Condition::T).witness));
  CHECK(r.get(Condition::P).holds);
  CHECK_FALSE(r.is_model());
  CHECK(check_conditions(m, L("M")).is_model());

  Model t = Model::empty(Mode::Classical, 2);
  t.neighbourhoods[0] = {0b01, 0b11};
  t.neighbourhoods[1] = {0b10};
  CHECK(check_conditions(t, L("KT")).is_model());

  // (D) includes α = β, so it rules out the empty neighbourhood
  Model d = one_world(Mode::Classical, {0});
  auto rd = check_conditions(d, L("MD"));
  CHECK_FALSE(rd.get(Condition::D).holds);
  CHECK_FALSE(rd.get(Condition::P).holds);
}

TEST_CASE("structure checks") {
  Model m = Model::empty(Mode::Constructive, 3);
  CHECK(check_conditions(m, L("WM")).structure_ok);
  m.up[0] = 0b011;
  m.up[1] = 0b110;
  CHECK_FALSE(check_conditions(m, L("WM")).structure_ok);
  m.up[0] = 0b111;
  CHECK(check_conditions(m, L("WM")).structure_ok);
  m.valuation[1] = 0b001;
  CHECK_FALSE(check_conditions(m, L("WM")).structure_ok);
  CHECK_FALSE(check_conditions(m, L("M")).structure_ok);
  Model c = Model::empty(Mode::Classical, 2);
  c.up[0] = 0b11;
  CHECK_FALSE(check_conditions(c, L("M")).structure_ok);
}

TEST_CASE("random models satisfy their conditions") {
  for (LogicId l : LogicId::all()) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Model m = random_model(l, 4, seed);
      REQUIRE(m.kind == l.mode());
      auto r = check_conditions(m, l);
      INFO(l.name(), " seed ", seed, "\n", model_to_text(m));
      REQUIRE(r.structure_ok);
      REQUIRE(r.is_model());
    }
  }
  CHECK(random_model(L("WM"), 1, 7).worlds == 1);
  CHECK(random_model(L("WM"), 3, 99) == random_model(L("WM"), 3, 99));
}

TEST_CASE("disabling the N repair is caught") {
  RandomModelOptions o;
  o.skip_n_repair = true;
  bool caught = false;
  for (std::uint64_t seed = 0; seed < 200 && !caught; ++seed)
    caught = !check_conditions(random_model(L("WMN"), 3, seed, o), L("WMN"))
                  .is_model();
  CHECK(caught);
}

TEST_CASE("hereditariness") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Model m = random_model(L("WM"), 4, seed);
    F f = random_formula_up_to(rng, 7, 3);
    WorldSet s = truth_set(m, f);
    for (std::size_t w = 0; w < m.worlds; ++w)
      if (s >> w & 1) CHECK((m.up[w] & ~s) == 0);
  }
}

TEST_CASE("model serialization round trip") {
  for (LogicId l : LogicId::all()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Model m = random_model(l, 5, seed);
      std::string text = model_to_json_lines(m);
      CHECK(model_from_json_lines(text) == m);
      CHECK(model_to_json_lines(model_from_json_lines(text)) == text);
    }
  }
  CHECK_THROWS_AS(model_from_json_lines("{}"), std::runtime_error);
  CHECK_THROWS_AS(model_from_json_lines("not json"), std::runtime_error);
  CHECK_THROWS_AS(
      model_from_json_lines(
          "{\"format\":\"wmodal-model\",\"version\":1,\"kind\":\"classical\","
          "\"worlds\":1}\n{\"world\":0,\"neighbourhoods\":[[3]]}\n"),
      std::runtime_error);
}

TEST_CASE("countermodel examples") {
  auto one = enumerate_countermodel(L("WM"), parse("~<>bot"), 1);
  REQUIRE(one);
  CHECK(one->model.worlds == 1);
  CHECK(one->model.neighbourhoods[0].empty());

  auto dist = enumerate_countermodel(L("WK"), parse("<>(p|q) -> <>p | <>q"), 3);
  REQUIRE(dist);
  CHECK(check_conditions(dist->model, L("WK")).is_model());
  CHECK_FALSE(forces(dist->model, dist->world, parse("<>(p1|p2) -> <>p1 | <>p2")));

  CHECK_FALSE(enumerate_countermodel(L("WK"), parse("[](p->q)->([]p->[]q)"), 4));
  CHECK_FALSE(enumerate_countermodel(L("WM"), parse("p -> p"), 3));

  auto agg = enumerate_countermodel(L("WM"), parse("[]p & []q -> [](p & q)"), 3);
  REQUIRE(agg);
  CHECK(check_conditions(agg->model, L("WM")).is_model());

  CHECK(enumerate_countermodel(L("K"), parse("p | ~p"), 4) == std::nullopt);
  CHECK(enumerate_countermodel(L("WK"), parse("p | ~p"), 2));
  CHECK_THROWS_AS(enumerate_countermodel(L("WM"), parse("p"), 6),
                  std::invalid_argument);
}

TEST_CASE("countermodels agree with the prover") {
  std::mt19937_64 rng(5);
  for (LogicId l : LogicId::all()) {
    for (int i = 0; i < 30; ++i) {
      F f = random_formula_up_to(rng, 6, 2);
      auto cm = enumerate_countermodel(l, f, 2);
      if (cm) {
        INFO(l.name(), " ", render(f));
        CHECK(decide(l, f) == Verdict::NonTheorem);
      }
    }
  }
}

TEST_CASE("theorems hold in random models") {
  std::mt19937_64 rng(17);
  for (LogicId l : LogicId::all()) {
    int found = 0;
    for (int i = 0; i < 400 && found < 20; ++i) {
      F f = random_formula_up_to(rng, 6, 2);
      if (decide(l, f) != Verdict::Theorem) continue;
      ++found;
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Model m = random_model(l, 4, seed * 31 + i);
        INFO(l.name(), " ", render(f), "\n", model_to_text(m));
        CHECK(valid_in_model(m, f));
      }
    }
  }
}

// Completeness is not machine-checked in general; on this deterministic
// sample every non-theorem has a small countermodel.
TEST_CASE("sampled non-theorems have small countermodels") {
  std::mt19937_64 rng(3);
  for (LogicId l : LogicId::all()) {
    for (int i = 0; i < 150; ++i) {
      F f = random_formula_up_to(rng, 8, 3);
      if (decide(l, f) == Verdict::Theorem) continue;
      INFO(l.name(), " ", render(f));
      auto cm = enumerate_countermodel(l, f, 4);
      REQUIRE(cm);
      CHECK(check_conditions(cm->model, l).is_model());
      CHECK_FALSE(forces(cm->model, cm->world, f));
    }
  }
}
