#include "wmodal/prover.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <memory>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace wmodal {

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

BudgetExceeded::BudgetExceeded(const SearchStats& stats, bool timed_out)
    : std::runtime_error(timed_out ? "time budget exceeded"
                                   : "node budget exceeded"),
      stats_(stats),
      timed_out_(timed_out) {}

namespace {

using Id = std::uint32_t;
using Set = std::vector<Id>;  // sorted, duplicate-free closure indices

// Set-normalized sequent over closure indices.
struct Seq {
  Set a;
  Set s;
};

// [|a|, a..., s...]
using Key = std::vector<Id>;

Key key_of(const Seq& q) {
  Key k;
  k.reserve(1 + q.a.size() + q.s.size());
  k.push_back(static_cast<Id>(q.a.size()));
  k.insert(k.end(), q.a.begin(), q.a.end());
  k.insert(k.end(), q.s.begin(), q.s.end());
  return k;
}

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Id x : k) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

Set with(Set s, Id x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) s.insert(it, x);
  return s;
}

Set without(Set s, Id x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it != s.end() && *it == x) s.erase(it);
  return s;
}

void normalize(Set& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool contains(const Set& s, Id x) {
  return std::binary_search(s.begin(), s.end(), x);
}

struct Closure {
  std::vector<Formula> formula;
  std::vector<Connective> kind;
  std::vector<Id> left, right;
  std::unordered_map<Formula, Id> index;

  explicit Closure(const std::vector<Formula>& roots) {
    std::unordered_set<Formula> seen;
    std::vector<Formula> stack(roots.begin(), roots.end());
    while (!stack.empty()) {
      Formula f = stack.back();
      stack.pop_back();
      if (!seen.insert(f).second) continue;
      if (f.is_binary()) {
        stack.push_back(f.left());
        stack.push_back(f.right());
      } else if (f.is_modal()) {
        stack.push_back(f.operand());
      }
    }
    formula.assign(seen.begin(), seen.end());
    std::sort(formula.begin(), formula.end(), CanonicalLess{});
    for (Id i = 0; i < formula.size(); ++i) index.emplace(formula[i], i);
    kind.resize(formula.size());
    left.assign(formula.size(), 0);
    right.assign(formula.size(), 0);
    for (Id i = 0; i < formula.size(); ++i) {
      Formula f = formula[i];
      kind[i] = f.kind();
      if (f.is_binary()) {
        left[i] = index.at(f.left());
        right[i] = index.at(f.right());
      } else if (f.is_modal()) {
        left[i] = index.at(f.operand());
      }
    }
  }

  Set ids(const std::vector<Formula>& fs) const {
    Set s;
    for (Formula f : fs) s.push_back(index.at(f));
    normalize(s);
    return s;
  }
};

struct Step;
using StepPtr = std::shared_ptr<const Step>;

// A rule application on set-normalized sequents. Principal formulas are
// listed in the order fixed by the Principal conventions.
struct Step {
  RuleId rule;
  std::vector<Id> pa, ps;
  int choice = 0;
  std::vector<StepPtr> kids;
  std::size_t height = 0;
};

struct Alt {
  RuleId rule;
  std::vector<Id> pa, ps;
  int choice = 0;
  std::vector<Seq> prems;
};

class Engine {
 public:
  Engine(LogicId logic, const Closure& cl, const ProverOptions& opt)
      : logic_(logic),
        cons_(logic.constructive()),
        cl_(cl),
        opt_(opt),
        start_(std::chrono::steady_clock::now()) {}

  StepPtr run(const Seq& goal) { return search(goal, key_of(goal), 0).proof; }
  const SearchStats& stats() const { return stats_; }

 private:
  static constexpr int kNoBlock = INT_MAX;

  struct Res {
    StepPtr proof;
    int low = kNoBlock;
  };

  Connective k(Id i) const { return cl_.kind[i]; }
  Id op(Id i) const { return cl_.left[i]; }
  Id lhs(Id i) const { return cl_.left[i]; }
  Id rhs(Id i) const { return cl_.right[i]; }

  std::vector<Id> of_kind(const Set& s, Connective c) const {
    std::vector<Id> out;
    for (Id i : s)
      if (k(i) == c) out.push_back(i);
    return out;
  }

  Set unwrap(const std::vector<Id>& xs) const {
    Set out;
    for (Id x : xs) out.push_back(op(x));
    normalize(out);
    return out;
  }

  Set unwrap_with(const std::vector<Id>& xs, Id extra) const {
    Set out = unwrap(xs);
    return with(std::move(out), extra);
  }

  void tick() {
    ++stats_.nodes;
    if (stats_.nodes > opt_.max_nodes) throw BudgetExceeded(stats_, false);
    if ((stats_.nodes & 255) == 0 &&
        std::chrono::steady_clock::now() - start_ > opt_.timeout)
      throw BudgetExceeded(stats_, true);
  }

  StepPtr closure_step(const Seq& q) const {
    for (Id i : q.a) {
      if (k(i) == Connective::Bottom)
        return std::make_shared<Step>(
            Step{cons_ ? RuleId::ILBot : RuleId::LBot, {i}, {}, 0, {}, 0});
    }
    for (Id i : q.a) {
      if (k(i) == Connective::Atom && contains(q.s, i))
        return std::make_shared<Step>(
            Step{cons_ ? RuleId::IInit : RuleId::Init, {i}, {i}, 0, {}, 0});
    }
    return nullptr;
  }

  std::optional<Alt> eager(const Seq& q) const {
    using C = Connective;
    for (Id i : q.a) {
      Set rest = without(q.a, i);
      switch (k(i)) {
        case C::And:
          return Alt{cons_ ? RuleId::ILAnd : RuleId::LAnd, {i}, {}, 0,
                     {{with(with(rest, lhs(i)), rhs(i)), q.s}}};
        case C::Or:
          return Alt{cons_ ? RuleId::ILOr : RuleId::LOr, {i}, {}, 0,
                     {{with(rest, lhs(i)), q.s}, {with(rest, rhs(i)), q.s}}};
        case C::Imp:
          if (cons_) break;
          return Alt{RuleId::LImp, {i}, {}, 0,
                     {{rest, with(q.s, lhs(i))}, {with(rest, rhs(i)), q.s}}};
        default:
          break;
      }
    }
    for (Id j : q.s) {
      Set rest = without(q.s, j);
      switch (k(j)) {
        case C::Imp:
          return Alt{cons_ ? RuleId::IRImp : RuleId::RImp, {}, {j}, 0,
                     {{with(q.a, lhs(j)), with(rest, rhs(j))}}};
        case C::And:
          return Alt{cons_ ? RuleId::IRAnd : RuleId::RAnd, {}, {j}, 0,
                     {{q.a, with(rest, lhs(j))}, {q.a, with(rest, rhs(j))}}};
        case C::Or:
          if (cons_) break;
          return Alt{RuleId::ROr, {}, {j}, 0,
                     {{q.a, with(with(rest, lhs(j)), rhs(j))}}};
        default:
          break;
      }
    }
    return std::nullopt;
  }

  // Non-invertible alternatives in rule-table order, leftmost principal
  // first.
  std::vector<Alt> alternatives(const Seq& q) const {
    using C = Connective;
    using R = RuleId;
    std::vector<Alt> out;
    const auto boxes = of_kind(q.a, C::Box);
    const auto adias = of_kind(q.a, C::Dia);
    const auto sboxes = of_kind(q.s, C::Box);
    const auto sdias = of_kind(q.s, C::Dia);
    const auto imps = of_kind(q.a, C::Imp);
    const Set ub = unwrap(boxes);
    const Set ud = unwrap(sdias);
    auto cat = [](std::vector<Id> head, const std::vector<Id>& tail) {
      head.insert(head.end(), tail.begin(), tail.end());
      return head;
    };
    auto cat_skip = [](std::vector<Id> head, const std::vector<Id>& tail,
                       Id skip) {
      for (Id t : tail)
        if (t != skip) head.push_back(t);
      return head;
    };

    for (R rule : rules_for(logic_)) {
      switch (rule) {
        case R::ILImp:
          for (Id i : imps)
            out.push_back({rule, {i}, {}, 0,
                           {{q.a, {lhs(i)}}, {with(without(q.a, i), rhs(i)), q.s}}});
          break;
        case R::IROr:
          for (Id j : q.s) {
            if (k(j) != C::Or) continue;
            out.push_back({rule, {}, {j}, 1, {{q.a, {lhs(j)}}}});
            out.push_back({rule, {}, {j}, 2, {{q.a, {rhs(j)}}}});
          }
          break;
        case R::MBox: case R::IMBox:
          for (Id i : boxes)
            for (Id j : sboxes) out.push_back({rule, {i}, {j}, 0, {{{op(i)}, {op(j)}}}});
          break;
        case R::MDia: case R::IMDia:
          for (Id i : adias)
            for (Id j : sdias) out.push_back({rule, {i}, {j}, 0, {{{op(i)}, {op(j)}}}});
          break;
        case R::D: case R::ID:
          for (Id i : boxes)
            for (Id j : sdias)
              out.push_back({rule, {i}, {j}, 0, {{{op(i)}, {op(j)}}}});
          break;
        case R::DualAndM: case R::IDualAndM:
          for (Id i : boxes)
            for (Id j : adias)
              out.push_back({rule, {i, j}, {}, 0, {{with({op(i)}, op(j)), {}}}});
          break;
        case R::DualOrM:
          for (Id i : sboxes)
            for (Id j : sdias)
              out.push_back({rule, {}, {i, j}, 0, {{{}, with({op(i)}, op(j))}}});
          break;
        case R::DBox: case R::IDBox:
          for (std::size_t x = 0; x < boxes.size(); ++x)
            for (std::size_t y = x + 1; y < boxes.size(); ++y)
              out.push_back({rule, {boxes[x], boxes[y]}, {}, 0,
                             {{with({op(boxes[x])}, op(boxes[y])), {}}}});
          break;
        case R::DDia:
          for (std::size_t x = 0; x < sdias.size(); ++x)
            for (std::size_t y = x + 1; y < sdias.size(); ++y)
              out.push_back({rule, {}, {sdias[x], sdias[y]}, 0,
                             {{{}, with({op(sdias[x])}, op(sdias[y]))}}});
          break;
        case R::NBox: case R::INBox:
          for (Id j : sboxes) out.push_back({rule, {}, {j}, 0, {{{}, {op(j)}}}});
          break;
        case R::PDia: case R::IPDia:
          for (Id j : sdias) out.push_back({rule, {}, {j}, 0, {{{}, {op(j)}}}});
          break;
        case R::NDia: case R::INDia:
          for (Id i : adias) out.push_back({rule, {i}, {}, 0, {{{op(i)}, {}}}});
          break;
        case R::PBox: case R::IPBox:
          for (Id i : boxes) out.push_back({rule, {i}, {}, 0, {{{op(i)}, {}}}});
          break;
        case R::TBox: case R::ITBox:
          for (Id i : boxes)
            if (!contains(q.a, op(i)))
              out.push_back({rule, {i}, {}, 0, {{with(q.a, op(i)), q.s}}});
          break;
        case R::TDia:
          for (Id j : sdias)
            if (!contains(q.s, op(j)))
              out.push_back({rule, {}, {j}, 0, {{q.a, with(q.s, op(j))}}});
          break;
        case R::ITDia:
          for (Id j : sdias) out.push_back({rule, {}, {j}, 0, {{q.a, {op(j)}}}});
          break;
        case R::CBox: case R::ICBox:
          if (boxes.empty()) break;
          for (Id j : sboxes) {
            if (cons_)
              out.push_back({rule, boxes, {j}, 0, {{ub, {op(j)}}}});
            else
              out.push_back({rule, boxes, cat_skip({j}, sdias, j), 0,
                             {{ub, with(ud, op(j))}}});
          }
          break;
        case R::KBox: case R::IKBox:
          for (Id j : sboxes) {
            if (cons_)
              out.push_back({rule, boxes, {j}, 0, {{ub, {op(j)}}}});
            else
              out.push_back({rule, boxes, cat_skip({j}, sdias, j), 0,
                             {{ub, with(ud, op(j))}}});
          }
          break;
        case R::CDia:
          if (sdias.empty()) break;
          for (Id i : adias)
            out.push_back({rule, cat({i}, boxes), sdias, 0,
                           {{with(ub, op(i)), ud}}});
          break;
        case R::KDia:
          for (Id i : adias)
            out.push_back({rule, cat({i}, boxes), sdias, 0,
                           {{with(ub, op(i)), ud}}});
          break;
        case R::ICDia: case R::IKDia:
          for (Id i : adias)
            for (Id j : sdias)
              out.push_back({rule, cat({i}, boxes), {j}, 0,
                             {{with(ub, op(i)), {op(j)}}}});
          break;
        case R::IDualAndK:
          for (Id i : adias)
            out.push_back({rule, cat({i}, boxes), {}, 0, {{with(ub, op(i)), {}}}});
          break;
        case R::DualAndC: case R::IDualAndC:
          if (boxes.empty()) break;
          for (Id j : adias)
            out.push_back({rule, cat_skip({boxes[0], j}, boxes, boxes[0]), {}, 0,
                           {{with(ub, op(j)), {}}}});
          break;
        case R::DualOrC:
          if (sdias.empty()) break;
          for (Id i : sboxes)
            out.push_back({rule, {}, cat({i}, sdias), 0, {{{}, with(ud, op(i))}}});
          break;
        case R::CD:
          if (boxes.empty() && sdias.empty()) break;
          out.push_back({rule, boxes, sdias, 0, {{ub, ud}}});
          break;
        case R::ICD:
          for (Id j : sdias) out.push_back({rule, boxes, {j}, 0, {{ub, {op(j)}}}});
          break;
        case R::ICDBox:
          if (boxes.empty()) break;
          out.push_back({rule, boxes, {}, 0, {{ub, {}}}});
          break;
        default:
          break;  // propositional rules handled by closure/eager
      }
    }
    return out;
  }

  // Tries one alternative. On success returns the step; otherwise lowers
  // `low` by the blocks its failure depended on.
  StepPtr attempt(const Alt& alt, int depth, int& low) {
    std::vector<Key> keys;
    keys.reserve(alt.prems.size());
    for (const auto& p : alt.prems) {
      Key pk = key_of(p);
      if (auto it = history_.find(pk); it != history_.end()) {
        ++stats_.loop_hits;
        low = std::min(low, it->second);
        return nullptr;
      }
      keys.push_back(std::move(pk));
    }
    std::vector<StepPtr> kids;
    std::size_t h = 0;
    for (std::size_t i = 0; i < alt.prems.size(); ++i) {
      Res r = search(alt.prems[i], keys[i], depth + 1);
      if (!r.proof) {
        low = std::min(low, r.low);
        return nullptr;
      }
      h = std::max(h, r.proof->height + 1);
      kids.push_back(std::move(r.proof));
    }
    return std::make_shared<Step>(
        Step{alt.rule, alt.pa, alt.ps, alt.choice, std::move(kids), h});
  }

  Res search(const Seq& q, const Key& key, int depth) {
    tick();
    if (auto it = success_.find(key); it != success_.end()) {
      ++stats_.memo_hits;
      return {it->second, kNoBlock};
    }
    if (failed_.count(key)) {
      ++stats_.memo_hits;
      return {nullptr, kNoBlock};
    }
    if (StepPtr c = closure_step(q)) {
      success_.emplace(key, c);
      return {c, kNoBlock};
    }
    history_.emplace(key, depth);
    int low = kNoBlock;
    StepPtr found;
    if (auto e = eager(q)) {
      found = attempt(*e, depth, low);
    } else {
      for (const Alt& alt : alternatives(q)) {
        found = attempt(alt, depth, low);
        if (found) break;
      }
    }
    history_.erase(key);
    if (found) {
      success_.emplace(key, found);
      return {found, kNoBlock};
    }
    if (low >= depth) failed_.insert(key);
    return {nullptr, low};
  }

  LogicId logic_;
  bool cons_;
  const Closure& cl_;
  ProverOptions opt_;
  std::chrono::steady_clock::time_point start_;
  SearchStats stats_;
  std::unordered_map<Key, StepPtr, KeyHash> success_;
  std::unordered_set<Key, KeyHash> failed_;
  std::unordered_map<Key, int, KeyHash> history_;
};

// Index of an unused occurrence of `f` in `fs`.
std::size_t occurrence(const std::vector<Formula>& fs, Formula f,
                       const std::vector<std::size_t>& used) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i] == f && std::find(used.begin(), used.end(), i) == used.end())
      return i;
  throw std::logic_error("proof replay: principal formula missing");
}

Derivation replay(const Step& step, const Closure& cl, const Sequent& lit) {
  Derivation d;
  d.conclusion = lit;
  d.rule = step.rule;
  d.height = step.height;
  d.principal.choice = step.choice;
  for (Id i : step.pa)
    d.principal.ante.push_back(
        occurrence(lit.antecedent(), cl.formula[i], d.principal.ante));
  for (Id j : step.ps)
    d.principal.succ.push_back(
        occurrence(lit.succedent(), cl.formula[j], d.principal.succ));
  auto prems = schema_premises(step.rule, lit, d.principal);
  if (!prems || prems->size() != step.kids.size())
    throw std::logic_error("proof replay: schema mismatch");
  for (std::size_t k = 0; k < prems->size(); ++k)
    d.children.push_back(replay(*step.kids[k], cl, (*prems)[k]));
  return d;
}

std::vector<Formula> roots_of(const Sequent& s) {
  std::vector<Formula> out(s.antecedent());
  out.insert(out.end(), s.succedent().begin(), s.succedent().end());
  return out;
}

}  // namespace

ProveOutcome prove(LogicId logic, const Sequent& goal,
                   const ProverOptions& options) {
  if (goal.mode() != logic.mode())
    throw std::invalid_argument("sequent mode does not match logic " +
                                logic.name());
  Closure cl(roots_of(goal));
  Engine engine(logic, cl, options);
  Seq q{cl.ids(goal.antecedent()), cl.ids(goal.succedent())};
  StepPtr proof = engine.run(q);
  ProveOutcome out;
  out.stats = engine.stats();
  if (proof) out.derivation = replay(*proof, cl, goal);
  return out;
}

Verdict decide(LogicId logic, Formula f, const ProverOptions& options) {
  Sequent goal({}, {f}, logic.mode());
  return prove(logic, goal, options).proved() ? Verdict::Theorem
                                              : Verdict::NonTheorem;
}

ProveOutcome prove_from(LogicId logic, const std::vector<Formula>& assumptions,
                        Formula f, const ProverOptions& options) {
  return prove(logic, Sequent(assumptions, {f}, logic.mode()), options);
}

bool check(LogicId logic, const Derivation& d) {
  if (d.conclusion.mode() != logic.mode()) return false;
  std::size_t h = 0;
  RuleInstance inst{d.rule, d.conclusion, {}, d.principal};
  for (const auto& c : d.children) {
    if (!check(logic, c)) return false;
    inst.premises.push_back(c.conclusion);
    h = std::max(h, c.height + 1);
  }
  return d.height == h && check_step(logic, inst);
}

// ---------------------------------------------------------------------------
// Reference search

namespace {

struct KeyLess {
  static int cmp(const std::vector<Formula>& a, const std::vector<Formula>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto c = canonical_compare(a[i], b[i]);
      if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
  }
  bool operator()(const SequentKey& x, const SequentKey& y) const {
    int c = cmp(x.antecedent, y.antecedent);
    if (c != 0) return c < 0;
    return cmp(x.succedent, y.succedent) < 0;
  }
};

struct NodeBudget {
  std::uint64_t left;
  bool spend() {
    if (left == 0) return false;
    --left;
    return true;
  }
};

struct OutOfBudget {};

Sequent from_key(const SequentKey& k, Mode mode) {
  return Sequent(k.antecedent, k.succedent, mode);
}

bool reference_search(LogicId logic, const SequentKey& key,
                      std::vector<SequentKey>& branch, NodeBudget& budget) {
  if (!budget.spend()) throw OutOfBudget{};
  for (const auto& inst :
       backward_applications(logic, from_key(key, logic.mode()))) {
    std::vector<SequentKey> prems;
    bool blocked = false;
    for (const auto& p : inst.premises) {
      SequentKey pk = wmodal::key_of(p);
      if (pk == key || std::find(branch.begin(), branch.end(), pk) != branch.end())
        blocked = true;
      prems.push_back(std::move(pk));
    }
    if (blocked) continue;
    branch.push_back(key);
    bool ok = true;
    for (const auto& pk : prems) {
      if (!reference_search(logic, pk, branch, budget)) {
        ok = false;
        break;
      }
    }
    branch.pop_back();
    if (ok) return true;
  }
  return false;
}

class BoundedSearch {
 public:
  BoundedSearch(LogicId logic, std::uint64_t max_nodes)
      : logic_(logic), budget_{max_nodes} {}

  bool within(const SequentKey& key, std::size_t h) {
    if (auto it = proven_.find(key); it != proven_.end() && it->second <= h)
      return true;
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= h)
      return false;
    if (!budget_.spend()) throw OutOfBudget{};
    bool ok = false;
    for (const auto& inst :
         backward_applications(logic_, from_key(key, logic_.mode()))) {
      if (inst.premises.empty()) {
        ok = true;
        break;
      }
      if (h == 0) continue;
      bool all = true;
      for (const auto& p : inst.premises)
        if (!within(wmodal::key_of(p), h - 1)) {
          all = false;
          break;
        }
      if (all) {
        ok = true;
        break;
      }
    }
    if (ok) {
      auto [it, fresh] = proven_.emplace(key, h);
      if (!fresh) it->second = std::min(it->second, h);
    } else {
      auto [it, fresh] = failed_.emplace(key, h);
      if (!fresh) it->second = std::max(it->second, h);
    }
    return ok;
  }

 private:
  LogicId logic_;
  NodeBudget budget_;
  std::map<SequentKey, std::size_t, KeyLess> proven_;
  std::map<SequentKey, std::size_t, KeyLess> failed_;
};

}  // namespace

std::optional<bool> reference_derivable(LogicId logic, const Sequent& goal,
                                        std::uint64_t max_nodes) {
  if (goal.mode() != logic.mode())
    throw std::invalid_argument("sequent mode does not match logic");
  NodeBudget budget{max_nodes};
  std::vector<SequentKey> branch;
  try {
    return reference_search(logic, wmodal::key_of(goal), branch, budget);
  } catch (const OutOfBudget&) {
    return std::nullopt;
  }
}

std::optional<bool> derivable_within(LogicId logic, const Sequent& goal,
                                     std::size_t max_height,
                                     std::uint64_t max_nodes) {
  if (goal.mode() != logic.mode())
    throw std::invalid_argument("sequent mode does not match logic");
  BoundedSearch search(logic, max_nodes);
  try {
    return search.within(wmodal::key_of(goal), max_height);
  } catch (const OutOfBudget&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

void text_lines(const Derivation& d, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += rule_name(d.rule);
  out += "  ";
  out += render(d.conclusion);
  out += '\n';
  for (const auto& c : d.children) text_lines(c, depth + 1, out);
}

std::size_t json_lines(const Derivation& d, std::size_t& next,
                       std::vector<nlohmann::ordered_json>& records) {
  std::size_t id = next++;
  records.emplace_back();
  std::size_t slot = records.size() - 1;
  std::vector<std::size_t> kids;
  for (const auto& c : d.children) kids.push_back(json_lines(c, next, records));
  nlohmann::ordered_json rec;
  rec["id"] = id;
  rec["sequent"] = render(d.conclusion);
  rec["rule"] = rule_name(d.rule);
  rec["principal"] = {{"ante", d.principal.ante},
                      {"succ", d.principal.succ},
                      {"choice", d.principal.choice}};
  rec["children"] = kids;
  records[slot] = std::move(rec);
  return id;
}

}  // namespace

std::string proof_to_text(const Derivation& d) {
  std::string out;
  text_lines(d, 0, out);
  return out;
}

std::string proof_to_json_lines(LogicId logic, const Derivation& d) {
  std::vector<nlohmann::ordered_json> records;
  std::size_t next = 0;
  json_lines(d, next, records);
  nlohmann::ordered_json header;
  header["format"] = "wmodal-proof";
  header["version"] = 1;
  header["logic"] = logic.name();
  header["nodes"] = records.size();
  std::string out = header.dump() + "\n";
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

ParsedProof proof_from_json_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<nlohmann::json> recs;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      recs.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(std::string("malformed proof record: ") +
                               e.what());
    }
  }
  if (recs.empty() || recs[0].value("format", "") != "wmodal-proof")
    throw std::runtime_error("missing proof header");
  if (recs[0].value("version", 0) != 1)
    throw std::runtime_error("unsupported proof format version");
  auto logic = LogicId::from_name(recs[0].value("logic", ""));
  if (!logic) throw std::runtime_error("unknown logic in proof header");
  const std::size_t n = recs.size() - 1;
  if (n == 0) throw std::runtime_error("proof has no nodes");

  std::vector<bool> visited(n, false);
  std::function<Derivation(std::size_t)> build = [&](std::size_t id) {
    if (id >= n || visited[id])
      throw std::runtime_error("proof node ids do not form a tree");
    visited[id] = true;
    const auto& r = recs[id + 1];
    try {
      if (r.at("id").get<std::size_t>() != id)
        throw std::runtime_error("proof records out of order");
      Derivation d;
      d.conclusion =
          parse_sequent(r.at("sequent").get<std::string>(), logic->mode());
      auto rule = rule_from_name(r.at("rule").get<std::string>(),
                                 logic->mode());
      if (!rule) throw std::runtime_error("unknown rule name");
      d.rule = *rule;
      const auto& p = r.at("principal");
      d.principal.ante = p.at("ante").get<std::vector<std::size_t>>();
      d.principal.succ = p.at("succ").get<std::vector<std::size_t>>();
      d.principal.choice = p.at("choice").get<int>();
      for (std::size_t c : r.at("children").get<std::vector<std::size_t>>()) {
        d.children.push_back(build(c));
        d.height = std::max(d.height, d.children.back().height + 1);
      }
      return d;
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(std::string("malformed proof record: ") +
                               e.what());
    } catch (const ParseError& e) {
      throw std::runtime_error(std::string("bad sequent in proof: ") +
                               e.what());
    }
  };
  Derivation root = build(0);
  if (std::find(visited.begin(), visited.end(), false) != visited.end())
    throw std::runtime_error("proof has unreachable nodes");
  return {*logic, std::move(root)};
}

}  // namespace wmodal
