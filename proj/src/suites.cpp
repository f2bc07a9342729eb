#include "wmodal/suites.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "wmodal/generate.hpp"
#include "wmodal/interpolation.hpp"

namespace wmodal {

namespace {

using F = Formula;
using A = AxiomId;

const F p1 = F::atom(1);
const F p2 = F::atom(2);

LogicId logic(const char* name) { return *LogicId::from_name(name); }

std::size_t logic_index(LogicId l) {
  const auto& all = LogicId::all();
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), l) -
                                  all.begin());
}

// One generator per (seed, logic, case), so a failing case replays alone.
std::mt19937_64 case_rng(std::uint64_t seed, LogicId l, std::size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(logic_index(l)),
                    static_cast<std::uint32_t>(i)};
  return std::mt19937_64(seq);
}

std::vector<LogicId> selected(const SuiteOptions& o, bool constructive_only) {
  std::vector<LogicId> out;
  for (LogicId l : o.logics.empty()
                       ? std::vector<LogicId>(LogicId::all().begin(),
                                              LogicId::all().end())
                       : o.logics)
    if (!constructive_only || l.constructive()) out.push_back(l);
  return out;
}

bool proves(LogicId l, const Sequent& s, const ProverOptions& o) {
  return prove(l, s, o).proved();
}

bool theorem(LogicId l, F f, const ProverOptions& o) {
  return decide(l, f, o) == Verdict::Theorem;
}

std::optional<F> sample_theorem(LogicId l, std::mt19937_64& rng,
                                const SuiteOptions& o,
                                std::size_t attempts = 2000) {
  for (std::size_t k = 0; k < attempts; ++k) {
    F f = random_formula_up_to(rng, o.max_size, o.atoms);
    if (theorem(l, f, o.prover)) return f;
  }
  return std::nullopt;
}

void violate(SuiteResult& r, LogicId l, const SuiteOptions& o, std::size_t i,
             std::string detail) {
  r.violations.push_back({l.name(), o.seed, i, std::move(detail)});
}

std::vector<F> join(std::vector<F> a, const std::vector<F>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string show(const Sequent& s) { return render(s); }

// Probe arguments for the rule schemata.
RuleSchemaInstance rule_probe(AxiomId ax) {
  switch (ax) {
    case A::Nec: return instantiate_rule(ax, F::implies(p1, p1));
    case A::MonBox:
    case A::MonDia: return instantiate_rule(ax, F::conj(p1, p2), p1);
    case A::RDualAnd: return instantiate_rule(ax, p1, F::negation(p1));
    default: return instantiate_rule(ax, F::top(), F::bottom());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrices

bool expected_derivable(LogicId l, AxiomId ax) {
  const bool cl = !l.constructive();
  const bool d = l.has_d() || l.has_t();
  switch (ax) {
    case A::Dual:
    case A::DualOr: return cl;
    case A::DualAnd: return true;
    case A::CDia: return cl && l.has_c();
    case A::KBox:
    case A::KDia:
    case A::CBox: return l.has_c();
    case A::NBox:
    case A::NDia: return l.has_n();
    case A::TBox:
    case A::TDia: return l.has_t();
    case A::D: return d;
    case A::PBox:
    case A::PDia: return l.has_p() || d;
    case A::Nec: return l.has_n();
    case A::MonBox:
    case A::MonDia:
    case A::RDualAnd: return true;
    case A::RDualOr: return cl || l.has_n();
  }
  return false;
}

std::vector<MatrixCell> axiom_matrix(const ProverOptions& options) {
  std::vector<MatrixCell> out;
  for (LogicId l : LogicId::all()) {
    auto cat = hilbert_catalogue(l);
    auto cell = [&](AxiomId ax, bool got) {
      out.push_back({l, ax, std::find(cat.begin(), cat.end(), ax) != cat.end(),
                     expected_derivable(l, ax), got});
    };
    for (AxiomId ax : kAxiomSchemata)
      cell(ax, theorem(l, instantiate_axiom(ax, p1, p2), options));
    for (AxiomId ax : kRuleSchemata) {
      auto inst = rule_probe(ax);
      cell(ax, theorem(l, inst.premise, options) &&
                   theorem(l, inst.conclusion, options));
    }
  }
  return out;
}

std::vector<NegativeCase> negative_suite(const ProverOptions& options) {
  const F lem = F::disj(p1, F::negation(p1));
  const F dual = F::disj(F::box(p1), F::dia(F::negation(p1)));
  const F dist = instantiate_axiom(A::CDia, p1, p2);
  const F agg = instantiate_axiom(A::CBox, p1, p2);
  std::vector<NegativeCase> out;
  auto add = [&](LogicId l, const char* label, F f, Verdict expected) {
    out.push_back({l, label, f, expected, decide(l, f, options)});
  };
  for (LogicId l : LogicId::all()) {
    Verdict v = l.constructive() ? Verdict::NonTheorem : Verdict::Theorem;
    add(l, "excluded middle", lem, v);
    add(l, "disjunctive duality", dual, v);
  }
  add(logic("WMC"), "diamond distribution", dist, Verdict::NonTheorem);
  add(logic("WK"), "diamond distribution", dist, Verdict::NonTheorem);
  add(logic("MC"), "diamond distribution", dist, Verdict::Theorem);
  add(logic("K"), "diamond distribution", dist, Verdict::Theorem);
  add(logic("WM"), "box aggregation", agg, Verdict::NonTheorem);
  add(logic("M"), "box aggregation", agg, Verdict::NonTheorem);
  return out;
}

namespace {

// Builds a node; principals are given as formulas and resolved to their first
// occurrence in the conclusion.
Derivation node(const char* conclusion, RuleId rule,
                std::vector<const char*> ante, std::vector<const char*> succ,
                std::vector<Derivation> children = {}) {
  Derivation d;
  d.conclusion = parse_sequent(conclusion, Mode::Constructive);
  d.rule = rule;
  auto index = [](const std::vector<F>& side, const char* text) {
    F f = parse(text);
    auto it = std::find(side.begin(), side.end(), f);
    if (it == side.end())
      throw std::logic_error(std::string("principal not in sequent: ") + text);
    return static_cast<std::size_t>(it - side.begin());
  };
  for (const char* a : ante)
    d.principal.ante.push_back(index(d.conclusion.antecedent(), a));
  for (const char* s : succ)
    d.principal.succ.push_back(index(d.conclusion.succedent(), s));
  d.children = std::move(children);
  for (const auto& c : d.children) d.height = std::max(d.height, c.height + 1);
  return d;
}

}  // namespace

std::vector<Transcription> axiom_derivations() {
  using R = RuleId;
  std::vector<Transcription> out;
  auto add = [&](const char* label, AxiomId ax, const char* l, Derivation d) {
    out.push_back({label, ax, logic(l), std::move(d)});
  };

  // A, A → ⊥ ⇒ closes by L→ against init and L⊥.
  auto refute = [] {
    return node("p1, p1 -> bot |-", R::ILImp, {"p1 -> bot"}, {},
                {node("p1, p1 -> bot |- p1", R::IInit, {"p1"}, {"p1"}),
                 node("p1, bot |-", R::ILBot, {"bot"}, {})});
  };
  add("dual-and", A::DualAnd, "WM",
      node("|- []p1 & <>~p1 -> bot", R::IRImp, {}, {"[]p1 & <>~p1 -> bot"},
           {node("[]p1 & <>~p1 |- bot", R::ILAnd, {"[]p1 & <>~p1"}, {},
                 {node("[]p1, <>~p1 |- bot", R::IDualAndM, {"[]p1", "<>~p1"},
                       {}, {refute()})})}));

  add("C-box", A::CBox, "WMC",
      node("|- []p1 & []p2 -> [](p1 & p2)", R::IRImp, {},
           {"[]p1 & []p2 -> [](p1 & p2)"},
           {node("[]p1 & []p2 |- [](p1 & p2)", R::ILAnd, {"[]p1 & []p2"}, {},
                 {node("[]p1, []p2 |- [](p1 & p2)", R::ICBox,
                       {"[]p1", "[]p2"}, {"[](p1 & p2)"},
                       {node("p1, p2 |- p1 & p2", R::IRAnd, {}, {"p1 & p2"},
                             {node("p1, p2 |- p1", R::IInit, {"p1"}, {"p1"}),
                              node("p1, p2 |- p2", R::IInit, {"p2"},
                                   {"p2"})})})})}));

  auto modus_ponens = [] {
    return node("p1 -> p2, p1 |- p2", R::ILImp, {"p1 -> p2"}, {},
                {node("p1 -> p2, p1 |- p1", R::IInit, {"p1"}, {"p1"}),
                 node("p2, p1 |- p2", R::IInit, {"p2"}, {"p2"})});
  };
  add("K-box", A::KBox, "WMC",
      node("|- [](p1 -> p2) -> ([]p1 -> []p2)", R::IRImp, {},
           {"[](p1 -> p2) -> ([]p1 -> []p2)"},
           {node("[](p1 -> p2) |- []p1 -> []p2", R::IRImp, {}, {"[]p1 -> []p2"},
                 {node("[](p1 -> p2), []p1 |- []p2", R::ICBox,
                       {"[](p1 -> p2)", "[]p1"}, {"[]p2"},
                       {modus_ponens()})})}));
  add("K-dia", A::KDia, "WMC",
      node("|- [](p1 -> p2) -> (<>p1 -> <>p2)", R::IRImp, {},
           {"[](p1 -> p2) -> (<>p1 -> <>p2)"},
           {node("[](p1 -> p2) |- <>p1 -> <>p2", R::IRImp, {}, {"<>p1 -> <>p2"},
                 {node("[](p1 -> p2), <>p1 |- <>p2", R::ICDia,
                       {"<>p1", "[](p1 -> p2)"}, {"<>p2"},
                       {modus_ponens()})})}));

  add("N-box", A::NBox, "WMN",
      node("|- [](bot -> bot)", R::INBox, {}, {"[](bot -> bot)"},
           {node("|- bot -> bot", R::IRImp, {}, {"bot -> bot"},
                 {node("bot |- bot", R::ILBot, {"bot"}, {})})}));
  add("N-dia", A::NDia, "WMN",
      node("|- <>bot -> bot", R::IRImp, {}, {"<>bot -> bot"},
           {node("<>bot |- bot", R::INDia, {"<>bot"}, {},
                 {node("bot |-", R::ILBot, {"bot"}, {})})}));
  add("T-box", A::TBox, "WMT",
      node("|- []p1 -> p1", R::IRImp, {}, {"[]p1 -> p1"},
           {node("[]p1 |- p1", R::ITBox, {"[]p1"}, {},
                 {node("[]p1, p1 |- p1", R::IInit, {"p1"}, {"p1"})})}));
  add("T-dia", A::TDia, "WMT",
      node("|- p1 -> <>p1", R::IRImp, {}, {"p1 -> <>p1"},
           {node("p1 |- <>p1", R::ITDia, {}, {"<>p1"},
                 {node("p1 |- p1", R::IInit, {"p1"}, {"p1"})})}));
  add("D", A::D, "WMD",
      node("|- []p1 -> <>p1", R::IRImp, {}, {"[]p1 -> <>p1"},
           {node("[]p1 |- <>p1", R::ID, {"[]p1"}, {"<>p1"},
                 {node("p1 |- p1", R::IInit, {"p1"}, {"p1"})})}));
  add("P-box", A::PBox, "WMP",
      node("|- []bot -> bot", R::IRImp, {}, {"[]bot -> bot"},
           {node("[]bot |- bot", R::IPBox, {"[]bot"}, {},
                 {node("bot |-", R::ILBot, {"bot"}, {})})}));
  add("P-dia", A::PDia, "WMP",
      node("|- <>(bot -> bot)", R::IPDia, {}, {"<>(bot -> bot)"},
           {node("|- bot -> bot", R::IRImp, {}, {"bot -> bot"},
                 {node("bot |- bot", R::ILBot, {"bot"}, {})})}));
  return out;
}

// ---------------------------------------------------------------------------
// Property suites

SuiteResult soundness_suite(const SuiteOptions& o) {
  SuiteResult r{"soundness", 0, {}};
  for (LogicId l : selected(o, false)) {
    // Pool: catalogue axioms at random arguments plus sampled theorems.
    std::vector<F> pool;
    auto rng = case_rng(o.seed, l, SIZE_MAX);
    for (AxiomId ax : kAxiomSchemata) {
      if (!expected_derivable(l, ax)) continue;
      pool.push_back(instantiate_axiom(ax, p1, p2));
      pool.push_back(instantiate_axiom(ax, random_formula_up_to(rng, 3, o.atoms),
                                       random_formula_up_to(rng, 3, o.atoms)));
    }
    for (int k = 0; k < 40; ++k)
      if (auto f = sample_theorem(l, rng, o)) pool.push_back(*f);
    for (std::size_t i = 0; i < o.count; ++i) {
      auto crng = case_rng(o.seed, l, i);
      Model m;
      try {
        m = random_model(l, o.max_worlds, crng(), o.models);
      } catch (const ResampleExhausted& e) {
        violate(r, l, o, i, e.what());
        continue;
      }
      F f = pool[i % pool.size()];
      ++r.checks;
      if (!valid_in_model(m, f)) {
        WorldSet t = truth_set(m, f);
        std::size_t w = static_cast<std::size_t>(std::countr_zero(~t));
        violate(r, l, o, i,
                "theorem " + render(f, {.pretty = true}) +
                    " fails at world " + std::to_string(w) + " of\n" +
                    model_to_text(m));
      }
    }
  }
  return r;
}

SuiteResult hereditariness_suite(const SuiteOptions& o) {
  SuiteResult r{"hereditariness", 0, {}};
  auto logics = selected(o, true);
  if (logics.empty()) return r;
  for (std::size_t i = 0; i < o.count; ++i) {
    LogicId l = logics[i % logics.size()];
    auto rng = case_rng(o.seed, l, i);
    Model m;
    try {
      m = random_model(l, o.max_worlds, rng(), o.models);
    } catch (const ResampleExhausted& e) {
      violate(r, l, o, i, e.what());
      continue;
    }
    F f = random_formula_up_to(rng, o.max_size + 2, o.atoms);
    std::size_t w = std::uniform_int_distribution<std::size_t>(
        0, m.worlds - 1)(rng);
    std::vector<std::size_t> succ;
    for (std::size_t v = 0; v < m.worlds; ++v)
      if (m.up[w] >> v & 1) succ.push_back(v);
    std::size_t v = succ[std::uniform_int_distribution<std::size_t>(
        0, succ.size() - 1)(rng)];
    ++r.checks;
    if (forces(m, w, f) && !forces(m, v, f))
      violate(r, l, o, i,
              render(f) + " holds at " + std::to_string(w) + " but not at " +
                  std::to_string(v) + " in\n" + model_to_text(m));
  }
  return r;
}

namespace {

// Partner for a cut on `a`: some derivable Γ', a ⇒ Δ'.
Sequent cut_partner_right(LogicId l, F a, std::mt19937_64& rng,
                          const SuiteOptions& o) {
  for (int k = 0; k < 20; ++k) {
    Sequent t = random_sequent(rng, l.mode(), o.max_size, o.atoms, 2);
    Sequent c(join(t.antecedent(), {a}), t.succedent(), l.mode());
    if (proves(l, c, o.prover)) return c;
  }
  F x = random_formula_up_to(rng, 3, o.atoms);
  return Sequent({a}, {F::disj(a, x)}, l.mode());
}

// Partner for a cut on `a`: some derivable Γ ⇒ a.
Sequent cut_partner_left(LogicId l, F a, std::mt19937_64& rng,
                         const SuiteOptions& o) {
  for (int k = 0; k < 20; ++k) {
    Sequent t = random_sequent(rng, l.mode(), o.max_size, o.atoms, 3);
    Sequent c(t.antecedent(), {a}, l.mode());
    if (proves(l, c, o.prover)) return c;
  }
  F x = random_formula_up_to(rng, 3, o.atoms);
  return Sequent({F::conj(a, x)}, {a}, l.mode());
}

template <class T>
const T& pick(const std::vector<T>& xs, std::mt19937_64& rng) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

std::optional<std::vector<F>> without_one(std::vector<F> xs, F f) {
  auto it = std::find(xs.begin(), xs.end(), f);
  if (it == xs.end()) return std::nullopt;
  xs.erase(it);
  return xs;
}

}  // namespace

SuiteResult structural_suite(const SuiteOptions& o) {
  SuiteResult r{"structural", 0, {}};
  for (LogicId l : selected(o, false)) {
    const Mode mode = l.mode();
    std::size_t found = 0;
    for (std::size_t i = 0; found < o.count && i < o.count * 50; ++i) {
      auto rng = case_rng(o.seed, l, i);
      Sequent s = random_sequent(rng, mode, o.max_size, o.atoms);
      // Half the samples carry a duplicated formula for the contraction probe.
      bool dup = !s.antecedent().empty() && std::bernoulli_distribution(0.5)(rng);
      if (dup) {
        F a = pick(s.antecedent(), rng);
        s = Sequent(join(s.antecedent(), {a}), s.succedent(), mode);
      }
      auto proof = prove(l, s, o.prover);
      if (!proof.proved()) continue;
      ++found;
      const std::size_t h = proof.derivation->height;
      auto fail = [&](const std::string& what, const Sequent& t) {
        violate(r, l, o, i, what + ": " + show(t) + " (from " + show(s) + ")");
      };
      auto expect = [&](const std::string& what, const Sequent& t,
                        bool height_preserving) {
        ++r.checks;
        if (!proves(l, t, o.prover)) return fail(what, t);
        if (!height_preserving) return;
        auto within = derivable_within(l, t, h);
        if (!within)
          fail(what + ": bounded search inconclusive at height " +
                   std::to_string(h),
               t);
        else if (!*within)
          fail(what + " at height " + std::to_string(h), t);
      };

      F w = random_formula_up_to(rng, o.max_size, o.atoms);
      expect("left weakening", Sequent(join(s.antecedent(), {w}), s.succedent(), mode),
             true);
      if (mode == Mode::Classical || s.succedent().empty())
        expect("right weakening",
               Sequent(s.antecedent(), join(s.succedent(), {w}), mode), true);

      if (dup) {
        for (F a : s.antecedent()) {
          if (std::count(s.antecedent().begin(), s.antecedent().end(), a) < 2)
            continue;
          expect("contraction",
                 Sequent(*without_one(s.antecedent(), a), s.succedent(), mode),
                 true);
          break;
        }
      }

      // Cut on a succedent formula, or on an antecedent formula.
      if (!s.succedent().empty()) {
        F a = pick(s.succedent(), rng);
        Sequent partner = cut_partner_right(l, a, rng, o);
        auto rest = *without_one(s.succedent(), a);
        auto gamma2 = *without_one(partner.antecedent(), a);
        expect("cut", Sequent(join(s.antecedent(), gamma2),
                              join(rest, partner.succedent()), mode),
               false);
      } else if (!s.antecedent().empty()) {
        F a = pick(s.antecedent(), rng);
        Sequent partner = cut_partner_left(l, a, rng, o);
        expect("cut",
               Sequent(join(partner.antecedent(), *without_one(s.antecedent(), a)),
                       s.succedent(), mode),
               false);
      }
    }
    if (found < o.count)
      violate(r, l, o, 0,
              "only " + std::to_string(found) + " derivable sequents sampled");
  }
  return r;
}

SuiteResult disjunction_suite(const SuiteOptions& o) {
  SuiteResult r{"disjunction property", 0, {}};
  for (LogicId l : selected(o, true)) {
    std::size_t found = 0;
    for (std::size_t i = 0; found < o.count && i < o.count * 200; ++i) {
      auto rng = case_rng(o.seed, l, i);
      F a = random_formula_up_to(rng, o.max_size, o.atoms);
      F b = random_formula_up_to(rng, o.max_size, o.atoms);
      if (!theorem(l, F::disj(a, b), o.prover)) continue;
      ++found;
      ++r.checks;
      if (!theorem(l, a, o.prover) && !theorem(l, b, o.prover))
        violate(r, l, o, i, "neither disjunct of " + render(F::disj(a, b)) +
                                " is a theorem");
    }
    if (found < o.count)
      violate(r, l, o, 0, "only " + std::to_string(found) + " theorems sampled");
  }
  return r;
}

SuiteResult interpolation_suite(const SuiteOptions& o) {
  SuiteResult r{"interpolation", 0, {}};
  for (LogicId l : selected(o, true)) {
    std::size_t found = 0;
    for (std::size_t i = 0; found < o.count && i < o.count * 200; ++i) {
      auto rng = case_rng(o.seed, l, i);
      F a = random_formula_up_to(rng, o.max_size, o.atoms);
      F b = random_formula_up_to(rng, o.max_size, o.atoms);
      if (!theorem(l, F::implies(a, b), o.prover)) continue;
      ++found;
      ++r.checks;
      const std::string what = render(a) + " -> " + render(b);
      InterpolationOptions io;
      io.prover = o.prover;
      try {
        auto res = craig(l, a, b, io);
        FormulaSet va = vars(a), vb = vars(b);
        for (F v : vars(res.interpolant))
          if (!va.count(v) || !vb.count(v))
            violate(r, l, o, i, "interpolant " + render(res.interpolant) +
                                    " of " + what + " uses " + render(v));
        if (!check(l, res.left_certificate) ||
            res.left_certificate.conclusion !=
                Sequent({a}, {res.interpolant}, Mode::Constructive))
          violate(r, l, o, i, "bad left certificate for " + what);
        if (!check(l, res.right_certificate) ||
            res.right_certificate.conclusion !=
                Sequent({res.interpolant}, {b}, Mode::Constructive))
          violate(r, l, o, i, "bad right certificate for " + what);
      } catch (const std::exception& e) {
        violate(r, l, o, i, what + ": " + e.what());
      }
    }
    if (found < o.count)
      violate(r, l, o, 0, "only " + std::to_string(found) + " theorems sampled");
  }
  return r;
}

SuiteResult inclusion_suite(const SuiteOptions& o) {
  SuiteResult r{"inclusion", 0, {}};
  auto logics = selected(o, false);
  auto wanted = [&](LogicId l) {
    return std::find(logics.begin(), logics.end(), l) != logics.end();
  };
  auto run = [&](LogicId from, LogicId to) {
    std::size_t found = 0;
    for (std::size_t i = 0; found < o.count && i < o.count * 200; ++i) {
      auto rng = case_rng(o.seed ^ (logic_index(to) << 20), from, i);
      F f = random_formula_up_to(rng, o.max_size, o.atoms);
      if (!theorem(from, f, o.prover)) continue;
      ++found;
      ++r.checks;
      if (!theorem(to, f, o.prover))
        violate(r, from, o, i,
                render(f) + " is a theorem of " + from.name() + " but not of " +
                    to.name());
    }
    if (found < o.count)
      violate(r, from, o, 0,
              "only " + std::to_string(found) + " theorems sampled");
  };
  for (auto [weak, strong] : lattice_arrows())
    for (Family fam : {Family::Classical, Family::Constructive}) {
      LogicId a{fam, weak}, b{fam, strong};
      if (wanted(a)) run(a, b);
    }
  for (LogicId l : logics)
    if (l.constructive()) run(l, counterpart(l));
  return r;
}

SuiteResult termination_sweep(const SuiteOptions& o) {
  SuiteResult r{"termination", 0, {}};
  const auto space = formulas_up_to(o.max_size, o.atoms);
  for (LogicId l : selected(o, false)) {
    for (std::size_t i = 0; i < space.size(); ++i) {
      ++r.checks;
      try {
        decide(l, space[i], o.prover);
      } catch (const BudgetExceeded& e) {
        violate(r, l, o, i,
                "budget exceeded on " + render(space[i]) + " after " +
                    std::to_string(e.stats().nodes) + " nodes");
      }
    }
  }
  return r;
}

SuiteResult countermodel_crosscheck(const SuiteOptions& o) {
  SuiteResult r{"countermodel cross-check", 0, {}};
  auto cases = negative_suite(o.prover);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    if (!o.logics.empty() &&
        std::find(o.logics.begin(), o.logics.end(), c.logic) == o.logics.end())
      continue;
    if (c.got != Verdict::NonTheorem) continue;
    auto cm = enumerate_countermodel(c.logic, c.formula, o.max_worlds);
    if (!cm) continue;
    ++r.checks;
    if (!check_conditions(cm->model, c.logic).is_model() ||
        forces(cm->model, cm->world, c.formula))
      violate(r, c.logic, o, i, "witness for " + c.label + " does not verify");
  }
  // Also no theorem of the suite may have a countermodel.
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    if (c.got != Verdict::Theorem) continue;
    if (!o.logics.empty() &&
        std::find(o.logics.begin(), o.logics.end(), c.logic) == o.logics.end())
      continue;
    if (enumerate_countermodel(c.logic, c.formula, std::min<std::size_t>(o.max_worlds, 3)))
      violate(r, c.logic, o, i, "countermodel for theorem " + c.label);
  }
  return r;
}

}  // namespace wmodal
