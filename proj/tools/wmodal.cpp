#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wmodal/interpolation.hpp"
#include "wmodal/prover.hpp"
#include "wmodal/semantics.hpp"
#include "wmodal/suites.hpp"

using namespace wmodal;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kBudget = 2, kUsage = 64 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string logic;
  std::string format = "text";
  std::uint64_t max_nodes = 1'000'000;
  double timeout_secs = 30;
  std::size_t max_worlds = 4;
  std::optional<std::uint64_t> seed;

  bool structured() const { return format == "structured"; }

  LogicId require_logic() const {
    if (logic.empty()) throw UsageError("--logic is required");
    auto l = LogicId::from_name(logic);
    if (!l) throw UsageError("unknown logic '" + logic + "'");
    return *l;
  }

  ProverOptions prover() const {
    ProverOptions o;
    o.max_nodes = max_nodes;
    o.timeout = std::chrono::milliseconds(
        static_cast<std::int64_t>(timeout_secs * 1000));
    return o;
  }
};

json result_record(const std::string& command, LogicId l,
                   const std::string& result) {
  json j;
  j["format"] = "wmodal-result";
  j["version"] = 1;
  j["command"] = command;
  j["logic"] = l.name();
  j["result"] = result;
  return j;
}

json stats_json(const SearchStats& s) {
  json j;
  j["nodes"] = s.nodes;
  j["loop_hits"] = s.loop_hits;
  j["memo_hits"] = s.memo_hits;
  return j;
}

std::string stats_text(const SearchStats& s) {
  return std::to_string(s.nodes) + " nodes, " + std::to_string(s.loop_hits) +
         " loop hits, " + std::to_string(s.memo_hits) + " memo hits";
}

// Identifier legend for atoms the user named.
std::string legend(const SymbolTable& symbols, const FormulaSet& atoms) {
  std::string out;
  for (Formula v : atoms) {
    if (!v.is(Connective::Atom)) continue;
    auto n = symbols.name_of(v.atom_index());
    if (!n || *n == "p" + std::to_string(v.atom_index())) continue;
    out += (out.empty() ? "atoms: " : ", ") + *n + " = p" +
           std::to_string(v.atom_index());
  }
  return out.empty() ? out : out + "\n";
}

FormulaSet sequent_vars(const Sequent& s) {
  std::vector<Formula> all = s.antecedent();
  all.insert(all.end(), s.succedent().begin(), s.succedent().end());
  return vars(all);
}

int budget_exit(const Globals& g, const std::string& command, LogicId l,
                const BudgetExceeded& e) {
  if (g.structured()) {
    json j = result_record(command, l, "budget-exceeded");
    j["timed_out"] = e.timed_out();
    j["stats"] = stats_json(e.stats());
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "budget exceeded in " << l.name() << " ("
              << (e.timed_out() ? "time" : "nodes") << "; "
              << stats_text(e.stats()) << ")\n";
  }
  return kBudget;
}

int cmd_prove(const Globals& g, const std::string& input) {
  LogicId l = g.require_logic();
  SymbolTable symbols;
  Sequent goal = parse_sequent(input, l.mode(), symbols);
  try {
    auto r = prove(l, goal, g.prover());
    if (r.proved()) {
      if (g.structured()) {
        std::cout << proof_to_json_lines(l, *r.derivation);
      } else {
        std::cout << "proved in " << l.name() << " (" << stats_text(r.stats)
                  << ")\n"
                  << legend(symbols, sequent_vars(goal))
                  << proof_to_text(*r.derivation);
      }
      return kOk;
    }
    if (g.structured()) {
      json j = result_record("prove", l, "not-derivable");
      j["sequent"] = render(goal);
      j["stats"] = stats_json(r.stats);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << render(goal) << " is not derivable in " << l.name() << " ("
                << stats_text(r.stats) << ")\n";
    }
    return kNegative;
  } catch (const BudgetExceeded& e) {
    return budget_exit(g, "prove", l, e);
  }
}

int cmd_decide(const Globals& g, const std::string& input) {
  LogicId l = g.require_logic();
  Formula f = parse(input);
  try {
    bool yes = decide(l, f, g.prover()) == Verdict::Theorem;
    if (g.structured()) {
      json j = result_record("decide", l, yes ? "theorem" : "non-theorem");
      j["formula"] = render(f);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (yes ? "theorem" : "non-theorem") << "\n";
    }
    return yes ? kOk : kNegative;
  } catch (const BudgetExceeded& e) {
    return budget_exit(g, "decide", l, e);
  }
}

int cmd_interpolate(const Globals& g, const std::string& a_text,
                    const std::string& b_text, bool simplify) {
  LogicId l = g.require_logic();
  if (!l.constructive()) throw UsageError("interpolation needs a W-logic");
  SymbolTable symbols;
  symbols.reserve_explicit(a_text + " " + b_text);
  Formula a = parse(a_text, symbols);
  Formula b = parse(b_text, symbols);
  InterpolationOptions o;
  o.simplify = simplify;
  o.prover = g.prover();
  try {
    auto r = craig(l, a, b, o);
    if (g.structured()) {
      json j = result_record("interpolate", l, "interpolant");
      j["left"] = render(a);
      j["right"] = render(b);
      j["interpolant"] = render(r.interpolant);
      std::cout << j.dump() << "\n"
                << proof_to_json_lines(l, r.left_certificate)
                << proof_to_json_lines(l, r.right_certificate);
    } else {
      RenderOptions ro{.pretty = true, .symbols = &symbols};
      std::cout << "interpolant: " << render(r.interpolant, ro) << "\n"
                << legend(symbols, vars(std::vector{a, b}))
                << "left certificate:\n"
                << proof_to_text(r.left_certificate) << "right certificate:\n"
                << proof_to_text(r.right_certificate);
    }
    return kOk;
  } catch (const NotATheorem&) {
    if (g.structured()) {
      std::cout << result_record("interpolate", l, "not-a-theorem").dump()
                << "\n";
    } else {
      RenderOptions ro{.pretty = true, .symbols = &symbols};
      std::cout << render(Formula::implies(a, b), ro)
                << " is not a theorem of " << l.name() << "\n";
    }
    return kNegative;
  } catch (const BudgetExceeded& e) {
    return budget_exit(g, "interpolate", l, e);
  }
}

int cmd_countermodel(const Globals& g, const std::string& input) {
  LogicId l = g.require_logic();
  if (g.max_worlds < 1 || g.max_worlds > 5)
    throw UsageError("--max-worlds must be between 1 and 5 for countermodel");
  SymbolTable symbols;
  Formula f = parse(input, symbols);
  auto cm = enumerate_countermodel(l, f, g.max_worlds);
  if (!cm) {
    if (g.structured()) {
      json j = result_record("countermodel", l, "none");
      j["max_worlds"] = g.max_worlds;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "none up to size " << g.max_worlds << "\n";
    }
    return kNegative;
  }
  if (g.structured()) {
    json j;
    j["refutes"] = render(f);
    j["world"] = cm->world;
    std::cout << model_to_json_lines(cm->model) << j.dump() << "\n";
  } else {
    std::cout << legend(symbols, vars(f)) << model_to_text(cm->model)
              << "world " << cm->world << " refutes "
              << render(f, {.pretty = true, .symbols = &symbols}) << "\n";
  }
  return kOk;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

int cmd_check_model(const Globals& g, const std::string& path,
                    const std::vector<std::string>& formulas) {
  LogicId l = g.require_logic();
  Model m;
  try {
    m = model_from_json_lines(read_input(path));
  } catch (const std::runtime_error& e) {
    throw UsageError(std::string("bad model: ") + e.what());
  }
  auto report = check_conditions(m, l);
  bool ok = report.is_model();
  json out = result_record("check-model", l, "");
  json conds = json::array();
  std::ostringstream text;
  if (!report.structure_ok)
    text << "structure: " << report.structure_error << "\n";
  for (const auto& s : report.conditions) {
    json c;
    c["condition"] = std::string(name(s.condition));
    c["required"] = s.required;
    c["holds"] = s.holds;
    text << "(" << name(s.condition) << ") " << (s.holds ? "holds" : "fails")
         << (s.required ? "" : " [not required]");
    if (s.witness) {
      c["witness"] = {{"world", s.witness->world},
                      {"alpha", s.witness->alpha},
                      {"beta", s.witness->beta}};
      text << " at world " << s.witness->world;
    }
    text << "\n";
    conds.push_back(c);
  }
  json valid = json::array();
  if (report.structure_ok) {
    SymbolTable symbols;
    for (const auto& ftext : formulas) {
      Formula f = parse(ftext, symbols);
      bool v = valid_in_model(m, f);
      ok = ok && v;
      valid.push_back({{"formula", render(f)}, {"valid", v}});
      text << render(f, {.pretty = true, .symbols = &symbols}) << ": "
           << (v ? "valid" : "not valid") << "\n";
    }
  }
  if (g.structured()) {
    out["result"] = ok ? "ok" : "fails";
    out["structure_ok"] = report.structure_ok;
    if (!report.structure_ok) out["structure_error"] = report.structure_error;
    out["conditions"] = conds;
    out["formulas"] = valid;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << text.str() << (ok ? "ok" : "fails") << "\n";
  }
  return ok ? kOk : kNegative;
}

const char* verdict_name(bool theorem) {
  return theorem ? "theorem" : "non-theorem";
}

int cmd_selftest(const Globals& g) {
  bool ok = true;
  std::vector<json> records;
  auto emit = [&](const std::string& logic, const std::string& item,
                  const std::string& expected, const std::string& got) {
    bool match = expected == got;
    ok = ok && match;
    if (g.structured()) {
      json j;
      j["logic"] = logic;
      j["item"] = item;
      j["expected"] = expected;
      j["got"] = got;
      records.push_back(j);
    } else {
      std::printf("%-4s %-6s %-22s expected %-12s got %s\n",
                  match ? "ok" : "FAIL", logic.c_str(), item.c_str(),
                  expected.c_str(), got.c_str());
    }
  };
  for (const auto& c : axiom_matrix(g.prover()))
    emit(c.logic.name(), std::string(name(c.schema)), verdict_name(c.expected),
         verdict_name(c.got));
  for (const auto& c : negative_suite(g.prover()))
    emit(c.logic.name(), c.label,
         verdict_name(c.expected == Verdict::Theorem),
         verdict_name(c.got == Verdict::Theorem));
  for (const auto& t : axiom_derivations()) {
    emit(t.logic.name(), "derivation " + t.label, "checks",
         check(t.logic, t.derivation) ? "checks" : "rejected");
    if (t.logic.name() != "WM")
      emit("WM", "derivation " + t.label, "rejected",
           check(*LogicId::from_name("WM"), t.derivation) ? "checks"
                                                          : "rejected");
  }
  if (g.structured()) {
    json h;
    h["format"] = "wmodal-selftest";
    h["version"] = 1;
    h["result"] = ok ? "pass" : "fail";
    h["items"] = records.size();
    std::cout << h.dump() << "\n";
    for (const auto& r : records) std::cout << r.dump() << "\n";
  } else {
    std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  }
  return ok ? kOk : kNegative;
}

int cmd_fuzz(const Globals& g, std::size_t count,
             const std::vector<std::string>& suites, const std::string& fault) {
  SuiteOptions o;
  o.seed = g.seed ? *g.seed : std::random_device{}();
  o.count = count;
  o.max_worlds = g.max_worlds;
  o.prover = g.prover();
  if (!g.logic.empty()) o.logics = {g.require_logic()};
  if (fault == "skip-n-repair") {
    o.models.skip_n_repair = true;
  } else if (!fault.empty()) {
    throw UsageError("unknown fault '" + fault + "'");
  }
  using Suite = SuiteResult (*)(const SuiteOptions&);
  const std::vector<std::pair<std::string, Suite>> all = {
      {"soundness", soundness_suite},
      {"hereditariness", hereditariness_suite},
      {"structural", structural_suite},
      {"disjunction", disjunction_suite},
      {"interpolation", interpolation_suite},
      {"inclusion", inclusion_suite},
  };
  for (const auto& s : suites) {
    bool known = std::any_of(all.begin(), all.end(),
                             [&](const auto& p) { return p.first == s; });
    if (!known) throw UsageError("unknown suite '" + s + "'");
  }
  if (!g.structured()) std::cout << "seed " << o.seed << "\n";
  bool ok = true;
  for (const auto& [suite_name, run] : all) {
    if (!suites.empty() &&
        std::find(suites.begin(), suites.end(), suite_name) == suites.end())
      continue;
    SuiteResult r = run(o);
    ok = ok && r.ok();
    if (g.structured()) {
      json j;
      j["format"] = "wmodal-fuzz";
      j["version"] = 1;
      j["suite"] = suite_name;
      j["seed"] = o.seed;
      j["checks"] = r.checks;
      j["violations"] = r.violations.size();
      std::cout << j.dump() << "\n";
      for (const auto& v : r.violations)
        std::cout << json{{"suite", suite_name}, {"logic", v.logic},
                          {"seed", v.seed}, {"case", v.index},
                          {"detail", v.detail}}
                         .dump()
                  << "\n";
    } else {
      std::cout << suite_name << ": " << r.checks << " checks, "
                << r.violations.size() << " violations\n";
      for (const auto& v : r.violations)
        std::cout << "  " << v.logic << " seed " << v.seed << " case "
                  << v.index << ": " << v.detail << "\n";
    }
  }
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for constructive and classical "
               "non-normal modal logics"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--logic", g.logic, "Logic name, e.g. WK or KD");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--max-nodes", g.max_nodes, "Search node budget");
  app.add_option("--timeout-secs", g.timeout_secs, "Search time budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-worlds", g.max_worlds, "Model size bound");
  app.add_option("--seed", g.seed, "Random seed");

  std::string input, second, path;
  std::vector<std::string> formulas, suites;
  bool simplify = false;
  std::size_t count = 100;
  std::string fault;

  auto* prove_cmd = app.add_subcommand("prove", "Search for a derivation");
  prove_cmd->add_option("sequent", input, "Sequent 'A, B |- C' or formula")
      ->required();
  auto* decide_cmd = app.add_subcommand("decide", "Theorem or non-theorem");
  decide_cmd->add_option("formula", input)->required();
  auto* interp_cmd =
      app.add_subcommand("interpolate", "Craig interpolant of A -> B");
  interp_cmd->add_option("A", input)->required();
  interp_cmd->add_option("B", second)->required();
  interp_cmd->add_flag("--simplify", simplify, "Remove top/bottom units");
  auto* cm_cmd = app.add_subcommand("countermodel", "Search a finite countermodel");
  cm_cmd->add_option("formula", input)->required();
  auto* check_cmd =
      app.add_subcommand("check-model", "Check a model file ('-' for stdin)");
  check_cmd->add_option("file", path)->required();
  check_cmd->add_option("formulas", formulas, "Formulas to test for validity");
  auto* self_cmd = app.add_subcommand("selftest", "Axiom and negative matrices");
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized property suites");
  fuzz_cmd->add_option("--count", count, "Samples per logic");
  fuzz_cmd->add_option("--suite", suites, "Restrict to these suites");
  fuzz_cmd->add_option("--inject-fault", fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*prove_cmd) return cmd_prove(g, input);
    if (*decide_cmd) return cmd_decide(g, input);
    if (*interp_cmd) return cmd_interpolate(g, input, second, simplify);
    if (*cm_cmd) return cmd_countermodel(g, input);
    if (*check_cmd) return cmd_check_model(g, path, formulas);
    if (*self_cmd) return cmd_selftest(g);
    if (*fuzz_cmd) return cmd_fuzz(g, count, suites, fault);
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.message()
              << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
