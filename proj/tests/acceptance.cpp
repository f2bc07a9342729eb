// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "wmodal/suites.hpp"

using namespace wmodal;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome from_suite(const SuiteResult& r) {
  std::string d = std::to_string(r.checks) + " checks, " +
                  std::to_string(r.violations.size()) + " violations";
  for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) {
    const auto& v = r.violations[i];
    d += "\n    " + v.logic + " seed " + std::to_string(v.seed) + " case " +
         std::to_string(v.index) + ": " + v.detail;
  }
  return {r.ok() && r.checks > 0, d};
}

SuiteOptions options(std::size_t count) {
  SuiteOptions o;
  o.seed = 20240601;
  o.count = count;
  return o;
}

Outcome axiom_matrix_criterion() {
  std::size_t cells = 0, bad = 0;
  std::string d;
  for (const auto& c : axiom_matrix()) {
    if (!c.logic.constructive()) continue;
    ++cells;
    if (!c.ok() || (c.in_catalogue && !c.got)) {
      ++bad;
      d += "\n    " + c.logic.name() + " " + std::string(name(c.schema)) +
           (c.got ? " derivable" : " not derivable");
    }
  }
  std::size_t derivations = 0;
  for (const auto& t : axiom_derivations()) {
    ++derivations;
    if (!check(t.logic, t.derivation)) {
      ++bad;
      d += "\n    transcribed " + t.label + " fails in " + t.logic.name();
    }
  }
  return {bad == 0, std::to_string(cells) + " cells, " +
                        std::to_string(derivations) +
                        " transcribed derivations, " + std::to_string(bad) +
                        " mismatches" + d};
}

Outcome negative_criterion() {
  std::size_t bad = 0;
  std::string d;
  auto cases = negative_suite();
  for (const auto& c : cases)
    if (!c.ok()) {
      ++bad;
      d += "\n    " + c.logic.name() + " " + c.label;
    }
  return {bad == 0, std::to_string(cases.size()) + " cases, " +
                        std::to_string(bad) + " mismatches" + d};
}

Outcome termination_criterion() {
  SuiteOptions o = options(0);
  o.max_size = 7;
  o.atoms = 2;
  return from_suite(termination_sweep(o));
}

Outcome countermodel_criterion() {
  SuiteOptions o = options(0);
  o.max_worlds = 4;
  return from_suite(countermodel_crosscheck(o));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "axiom matrix", axiom_matrix_criterion},
      {2, "negative matrix", negative_criterion},
      {3, "structural admissibility",
       [] { return from_suite(structural_suite(options(500))); }},
      {4, "disjunction property",
       [] { return from_suite(disjunction_suite(options(200))); }},
      {5, "interpolation contract",
       [] { return from_suite(interpolation_suite(options(100))); }},
      {6, "soundness fuzz",
       [] { return from_suite(soundness_suite(options(1000))); }},
      {7, "hereditariness fuzz",
       [] { return from_suite(hereditariness_suite(options(1000))); }},
      {8, "termination", termination_criterion},
      {9, "inclusion checks",
       [] { return from_suite(inclusion_suite(options(100))); }},
      {10, "countermodel cross-check", countermodel_criterion},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("%s criterion %d (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL",
                c.id, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
