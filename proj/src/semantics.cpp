#include "wmodal/semantics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace wmodal {

namespace {

WorldSet bit(std::size_t w) { return WorldSet{1} << w; }

bool subset(WorldSet a, WorldSet b) { return (a & ~b) == 0; }

// {w : up[w] ⊆ s}
WorldSet interior(const std::vector<WorldSet>& up, WorldSet s) {
  WorldSet out = 0;
  for (std::size_t w = 0; w < up.size(); ++w)
    if (subset(up[w], s)) out |= bit(w);
  return out;
}

bool box_local(const std::vector<WorldSet>& family, WorldSet e) {
  return std::any_of(family.begin(), family.end(),
                     [&](WorldSet a) { return subset(a, e); });
}

bool dia_local(const std::vector<WorldSet>& family, WorldSet e) {
  return std::all_of(family.begin(), family.end(),
                     [&](WorldSet a) { return (a & e) != 0; });
}

class Evaluator {
 public:
  explicit Evaluator(const Model& m) : m_(m) {}

  WorldSet eval(Formula f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    WorldSet r = 0;
    switch (f.kind()) {
      case Connective::Atom: {
        auto it = m_.valuation.find(f.atom_index());
        r = it == m_.valuation.end() ? 0 : it->second;
        break;
      }
      case Connective::Bottom:
        r = 0;
        break;
      case Connective::And:
        r = eval(f.left()) & eval(f.right());
        break;
      case Connective::Or:
        r = eval(f.left()) | eval(f.right());
        break;
      case Connective::Imp:
        r = interior(m_.up, (~eval(f.left()) | eval(f.right())) & m_.all());
        break;
      case Connective::Box:
      case Connective::Dia: {
        WorldSet e = eval(f.operand());
        WorldSet local = 0;
        for (std::size_t v = 0; v < m_.worlds; ++v) {
          bool ok = f.is(Connective::Box) ? box_local(m_.neighbourhoods[v], e)
                                          : dia_local(m_.neighbourhoods[v], e);
          if (ok) local |= bit(v);
        }
        r = interior(m_.up, local);
        break;
      }
    }
    memo_.emplace(f, r);
    return r;
  }

 private:
  const Model& m_;
  std::unordered_map<Formula, WorldSet> memo_;
};

bool condition_required(LogicId logic, Condition c) {
  auto cs = conditions_for(logic);
  return std::find(cs.begin(), cs.end(), c) != cs.end();
}

std::optional<ConditionWitness> find_violation(const Model& m, Condition c) {
  for (std::size_t w = 0; w < m.worlds; ++w) {
    const auto& n = m.neighbourhoods[w];
    switch (c) {
      case Condition::N:
        if (n.empty()) return ConditionWitness{w, 0, 0};
        break;
      case Condition::P:
        for (WorldSet a : n)
          if (a == 0) return ConditionWitness{w, 0, 0};
        break;
      case Condition::T:
        for (WorldSet a : n)
          if (!(a & bit(w))) return ConditionWitness{w, a, 0};
        break;
      case Condition::C:
      case Condition::D:
        for (WorldSet a : n)
          for (WorldSet b : n) {
            WorldSet ab = a & b;
            bool bad = c == Condition::D
                           ? ab == 0
                           : std::find(n.begin(), n.end(), ab) == n.end();
            if (bad) return ConditionWitness{w, a, b};
          }
        break;
    }
  }
  return std::nullopt;
}

std::string structure_problem(const Model& m) {
  if (m.worlds == 0 || m.worlds > kMaxWorlds) return "world count out of range";
  if (m.up.size() != m.worlds) return "order has wrong size";
  if (m.neighbourhoods.size() != m.worlds)
    return "neighbourhood function has wrong size";
  const WorldSet all = m.all();
  for (std::size_t w = 0; w < m.worlds; ++w) {
    if (!subset(m.up[w], all)) return "order mentions unknown worlds";
    if (!(m.up[w] & bit(w))) return "order is not reflexive";
    if (m.kind == Mode::Classical && m.up[w] != bit(w))
      return "classical model with a non-identity order";
    for (std::size_t v = 0; v < m.worlds; ++v)
      if ((m.up[w] & bit(v)) && !subset(m.up[v], m.up[w]))
        return "order is not transitive";
    for (WorldSet a : m.neighbourhoods[w])
      if (!subset(a, all)) return "neighbourhood mentions unknown worlds";
  }
  for (const auto& [atom, v] : m.valuation) {
    if (atom == 0) return "atom index 0";
    if (!subset(v, all)) return "valuation mentions unknown worlds";
    for (std::size_t w = 0; w < m.worlds; ++w)
      if ((v & bit(w)) && !subset(m.up[w], v))
        return "valuation is not hereditary";
  }
  return "";
}

}  // namespace

Model Model::empty(Mode kind, std::size_t n) {
  if (n == 0 || n > kMaxWorlds)
    throw std::invalid_argument("world count out of range");
  Model m;
  m.kind = kind;
  m.worlds = n;
  m.up.resize(n);
  for (std::size_t w = 0; w < n; ++w) m.up[w] = bit(w);
  m.neighbourhoods.resize(n);
  return m;
}

WorldSet truth_set(const Model& m, Formula f) { return Evaluator(m).eval(f); }

bool forces(const Model& m, std::size_t world, Formula f) {
  if (world >= m.worlds) throw std::out_of_range("no such world");
  return truth_set(m, f) & bit(world);
}

bool valid_in_model(const Model& m, Formula f) {
  return truth_set(m, f) == m.all();
}

const ConditionStatus& ConditionReport::get(Condition c) const {
  for (const auto& s : conditions)
    if (s.condition == c) return s;
  throw std::out_of_range("condition missing from report");
}

bool ConditionReport::is_model() const {
  if (!structure_ok) return false;
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionStatus& s) {
                       return !s.required || s.holds;
                     });
}

ConditionReport check_conditions(const Model& m, LogicId logic) {
  ConditionReport r;
  r.structure_error = structure_problem(m);
  r.structure_ok = r.structure_error.empty();
  for (Condition c : kAllConditions) {
    ConditionStatus s{c, condition_required(logic, c), true, std::nullopt};
    if (r.structure_ok) {
      s.witness = find_violation(m, c);
      s.holds = !s.witness;
    }
    r.conditions.push_back(s);
  }
  if (m.kind != logic.mode()) {
    r.structure_ok = false;
    r.structure_error = "model kind does not match " + logic.name();
  }
  return r;
}

bool witness_valid(const Model& m, Condition c, const ConditionWitness& w) {
  if (w.world >= m.worlds) return false;
  const auto& n = m.neighbourhoods[w.world];
  auto member = [&](WorldSet a) {
    return std::find(n.begin(), n.end(), a) != n.end();
  };
  switch (c) {
    case Condition::N: return n.empty();
    case Condition::P: return member(0);
    case Condition::T: return member(w.alpha) && !(w.alpha & bit(w.world));
    case Condition::D:
      return member(w.alpha) && member(w.beta) && (w.alpha & w.beta) == 0;
    case Condition::C:
      return member(w.alpha) && member(w.beta) && !member(w.alpha & w.beta);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Random models

Model random_model(LogicId logic, std::size_t max_worlds, std::uint64_t seed,
                   const RandomModelOptions& options) {
  if (max_worlds == 0 || max_worlds > kMaxWorlds)
    throw std::invalid_argument("max_worlds out of range");
  std::mt19937_64 rng(seed);
  const bool need_n = condition_required(logic, Condition::N);
  const bool need_t = condition_required(logic, Condition::T);
  const bool need_c = condition_required(logic, Condition::C);
  const bool need_d = condition_required(logic, Condition::D);
  const bool need_p = condition_required(logic, Condition::P);

  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::size_t n =
        std::uniform_int_distribution<std::size_t>(1, max_worlds)(rng);
    Model m = Model::empty(logic.mode(), n);
    const WorldSet all = m.all();
    auto random_set = [&] {
      return std::uniform_int_distribution<WorldSet>(0, all)(rng);
    };
    if (logic.constructive()) {
      std::bernoulli_distribution edge(options.order_density);
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
          if (v != w && edge(rng)) m.up[w] |= bit(v);
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t v = 0; v < n; ++v)
            if ((m.up[w] & bit(v)) && !subset(m.up[v], m.up[w])) {
              m.up[w] |= m.up[v];
              changed = true;
            }
      }
    }
    for (std::size_t w = 0; w < n; ++w) {
      auto& fam = m.neighbourhoods[w];
      std::size_t k = std::uniform_int_distribution<std::size_t>(
          0, options.max_neighbourhoods)(rng);
      for (std::size_t i = 0; i < k; ++i) fam.push_back(random_set());
      if (need_n && fam.empty() && !options.skip_n_repair)
        fam.push_back(random_set());
      if (need_t)
        for (WorldSet& a : fam) a |= bit(w);
      std::sort(fam.begin(), fam.end());
      fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
      if (need_c) {
        for (bool changed = true; changed;) {
          changed = false;
          std::size_t sz = fam.size();
          for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = i + 1; j < sz; ++j) {
              WorldSet ab = fam[i] & fam[j];
              if (std::find(fam.begin(), fam.end(), ab) == fam.end()) {
                fam.push_back(ab);
                changed = true;
              }
            }
        }
        std::sort(fam.begin(), fam.end());
      }
    }
    if ((need_d && find_violation(m, Condition::D)) ||
        (need_p && find_violation(m, Condition::P)))
      continue;
    for (std::uint32_t p = 1; p <= options.atoms; ++p) {
      WorldSet v = random_set();
      WorldSet closed = 0;
      for (std::size_t w = 0; w < n; ++w)
        if (v & bit(w)) closed |= m.up[w];
      m.valuation[p] = closed;
    }
    return m;
  }
  throw ResampleExhausted("no model for " + logic.name() + " after " +
                          std::to_string(options.max_attempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Countermodel search
//
// Forcing of □B and ◇B at a world only depends on the ⊆-minimal members of
// N(w), and every condition survives passing to the minimal members, so it
// suffices to range over antichains. Under (C) an antichain has at most one
// member. Within a fixed order and valuation the search proceeds by modal
// depth: at depth k the candidate antichains of each world are grouped by
// their effect on the depth-k modal subformulas, and one group per world is
// chosen.

namespace {

using Family = std::vector<WorldSet>;

void antichains_from(WorldSet next, WorldSet limit, Family& cur,
                     std::vector<Family>& out) {
  for (WorldSet s = next; s <= limit; ++s) {
    bool comparable = std::any_of(cur.begin(), cur.end(), [&](WorldSet a) {
      return subset(a, s) || subset(s, a);
    });
    if (comparable) continue;
    cur.push_back(s);
    out.push_back(cur);
    antichains_from(s + 1, limit, cur, out);
    cur.pop_back();
  }
}

std::vector<Family> antichains(std::size_t n) {
  std::vector<Family> out{Family{}};
  Family cur;
  antichains_from(0, (WorldSet{1} << n) - 1, cur, out);
  return out;
}

std::vector<WorldSet> permute(const std::vector<WorldSet>& up,
                              const std::vector<std::size_t>& perm) {
  std::vector<WorldSet> out(up.size(), 0);
  for (std::size_t w = 0; w < up.size(); ++w)
    for (std::size_t v = 0; v < up.size(); ++v)
      if (up[w] & bit(v)) out[perm[w]] |= bit(perm[v]);
  return out;
}

// Preorders on n worlds, one per class under permutations fixing world 0.
std::vector<std::vector<WorldSet>> preorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t v = 0; v < n; ++v)
      if (w != v) pairs.emplace_back(w, v);
  std::vector<std::vector<WorldSet>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    std::vector<WorldSet> up(n);
    for (std::size_t w = 0; w < n; ++w) up[w] = bit(w);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) up[pairs[i].first] |= bit(pairs[i].second);
    bool transitive = true;
    for (std::size_t w = 0; w < n && transitive; ++w)
      for (std::size_t v = 0; v < n; ++v)
        if ((up[w] & bit(v)) && !subset(up[v], up[w])) {
          transitive = false;
          break;
        }
    if (!transitive) continue;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool canonical = true;
    while (std::next_permutation(perm.begin() + 1, perm.end())) {
      if (permute(up, perm) < up) {
        canonical = false;
        break;
      }
    }
    if (canonical) out.push_back(up);
  }
  return out;
}

std::vector<WorldSet> upsets(const std::vector<WorldSet>& up) {
  std::vector<WorldSet> out;
  const WorldSet limit = (WorldSet{1} << up.size()) - 1;
  for (WorldSet s = 0; s <= limit; ++s) {
    bool closed = true;
    for (std::size_t w = 0; w < up.size(); ++w)
      if ((s & bit(w)) && !subset(up[w], s)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

bool family_allowed(const Family& fam, std::size_t w,
                    const std::vector<Condition>& conds) {
  for (Condition c : conds) {
    switch (c) {
      case Condition::C:
        if (fam.size() > 1) return false;
        break;
      case Condition::N:
        if (fam.empty()) return false;
        break;
      case Condition::P:
        if (std::find(fam.begin(), fam.end(), 0) != fam.end()) return false;
        break;
      case Condition::D:
        for (WorldSet a : fam)
          for (WorldSet b : fam)
            if ((a & b) == 0) return false;
        break;
      case Condition::T:
        for (WorldSet a : fam)
          if (!(a & bit(w))) return false;
        break;
    }
  }
  return true;
}

class CountermodelSearch {
 public:
  CountermodelSearch(LogicId logic, Formula f, std::size_t n,
                     const std::vector<Family>& families)
      : logic_(logic), f_(f), n_(n), families_(families) {
    for (Formula g : subformula_closure(f)) {
      if (g.is(Connective::Atom)) atoms_.push_back(g.atom_index());
      if (!g.is_modal()) continue;
      std::size_t d = g.modal_depth();
      if (levels_.size() < d) levels_.resize(d);
      levels_[d - 1].push_back(g);
    }
    std::sort(atoms_.begin(), atoms_.end());
  }

  std::optional<Countermodel> run() {
    auto orders = logic_.constructive()
                      ? preorders(n_)
                      : std::vector<std::vector<WorldSet>>{identity()};
    const auto conds = conditions_for(logic_);
    for (const auto& up : orders) {
      up_ = up;
      std::vector<std::vector<int>> cand(n_);
      for (std::size_t w = 0; w < n_; ++w)
        for (std::size_t i = 0; i < families_.size(); ++i)
          if (family_allowed(families_[i], w, conds))
            cand[w].push_back(static_cast<int>(i));
      auto ups = upsets(up_);
      std::vector<std::size_t> pick(atoms_.size(), 0);
      while (true) {
        val_.clear();
        for (std::size_t i = 0; i < atoms_.size(); ++i)
          val_[atoms_[i]] = ups[pick[i]];
        std::unordered_map<Formula, WorldSet> known;
        if (auto chosen = level(0, cand, known)) return build(*chosen);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == ups.size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<WorldSet> identity() const {
    std::vector<WorldSet> up(n_);
    for (std::size_t w = 0; w < n_; ++w) up[w] = bit(w);
    return up;
  }

  WorldSet eval(Formula g, std::unordered_map<Formula, WorldSet>& known) {
    if (auto it = known.find(g); it != known.end()) return it->second;
    WorldSet r = 0;
    switch (g.kind()) {
      case Connective::Atom: r = val_.at(g.atom_index()); break;
      case Connective::Bottom: r = 0; break;
      case Connective::And: r = eval(g.left(), known) & eval(g.right(), known); break;
      case Connective::Or: r = eval(g.left(), known) | eval(g.right(), known); break;
      case Connective::Imp:
        r = interior(up_, (~eval(g.left(), known) | eval(g.right(), known)) &
                              ((WorldSet{1} << n_) - 1));
        break;
      default:
        throw std::logic_error("modal formula evaluated before its level");
    }
    known.emplace(g, r);
    return r;
  }

  std::optional<std::vector<int>> level(
      std::size_t k, const std::vector<std::vector<int>>& cand,
      const std::unordered_map<Formula, WorldSet>& known_in) {
    auto known = known_in;
    if (k == levels_.size()) {
      if (eval(f_, known) & 1) return std::nullopt;
      std::vector<int> chosen;
      for (const auto& c : cand) chosen.push_back(c.front());
      return chosen;
    }
    const auto& ops = levels_[k];
    std::vector<WorldSet> ext;
    for (Formula g : ops) ext.push_back(eval(g.operand(), known));

    // classes[w] = groups of candidate families with equal signature.
    std::vector<std::vector<std::vector<int>>> classes(n_);
    std::vector<std::vector<std::uint64_t>> sigs(n_);
    for (std::size_t w = 0; w < n_; ++w) {
      std::unordered_map<std::uint64_t, std::size_t> where;
      for (int fi : cand[w]) {
        const Family& fam = families_[fi];
        std::uint64_t sig = 0;
        for (std::size_t j = 0; j < ops.size(); ++j) {
          bool b = ops[j].is(Connective::Box) ? box_local(fam, ext[j])
                                              : dia_local(fam, ext[j]);
          if (b) sig |= std::uint64_t{1} << j;
        }
        auto [it, fresh] = where.emplace(sig, classes[w].size());
        if (fresh) {
          classes[w].emplace_back();
          sigs[w].push_back(sig);
        }
        classes[w][it->second].push_back(fi);
      }
    }
    std::vector<std::size_t> pick(n_, 0);
    while (true) {
      auto next = known;
      for (std::size_t j = 0; j < ops.size(); ++j) {
        WorldSet local = 0;
        for (std::size_t w = 0; w < n_; ++w)
          if (sigs[w][pick[w]] >> j & 1) local |= bit(w);
        next[ops[j]] = interior(up_, local);
      }
      std::vector<std::vector<int>> sub(n_);
      for (std::size_t w = 0; w < n_; ++w) sub[w] = classes[w][pick[w]];
      if (auto r = level(k + 1, sub, next)) return r;
      std::size_t w = 0;
      while (w < n_ && ++pick[w] == classes[w].size()) pick[w++] = 0;
      if (w == n_) return std::nullopt;
    }
  }

  std::optional<Countermodel> build(const std::vector<int>& chosen) const {
    Model m = Model::empty(logic_.mode(), n_);
    m.up = up_;
    for (std::size_t w = 0; w < n_; ++w) m.neighbourhoods[w] = families_[chosen[w]];
    for (const auto& [a, v] : val_) m.valuation[a] = v;
    return Countermodel{std::move(m), 0};
  }

  LogicId logic_;
  Formula f_;
  std::size_t n_;
  const std::vector<Family>& families_;
  std::vector<std::uint32_t> atoms_;
  std::vector<std::vector<Formula>> levels_;
  std::vector<WorldSet> up_;
  std::map<std::uint32_t, WorldSet> val_;
};

}  // namespace

std::optional<Countermodel> enumerate_countermodel(LogicId logic, Formula f,
                                                   std::size_t max_worlds) {
  if (max_worlds > 5)
    throw std::invalid_argument("countermodel search supports at most 5 worlds");
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    auto families = antichains(n);
    auto found = CountermodelSearch(logic, f, n, families).run();
    if (!found) continue;
    if (!check_conditions(found->model, logic).is_model() ||
        forces(found->model, found->world, f))
      throw std::logic_error("countermodel search produced a bad witness");
    return found;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::vector<std::size_t> members(WorldSet s) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < kMaxWorlds; ++w)
    if (s & bit(w)) out.push_back(w);
  return out;
}

WorldSet from_members(const nlohmann::json& j, std::size_t worlds) {
  WorldSet s = 0;
  for (const auto& x : j) {
    auto w = x.get<std::size_t>();
    if (w >= worlds) throw std::runtime_error("world index out of range");
    s |= bit(w);
  }
  return s;
}

std::string set_text(WorldSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t w : members(s)) {
    if (!first) out += ",";
    out += std::to_string(w);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string model_to_json_lines(const Model& m) {
  nlohmann::ordered_json header;
  header["format"] = "wmodal-model";
  header["version"] = 1;
  header["kind"] = m.kind == Mode::Classical ? "classical" : "constructive";
  header["worlds"] = m.worlds;
  std::string out = header.dump() + "\n";
  for (std::size_t w = 0; w < m.worlds; ++w) {
    nlohmann::ordered_json rec;
    rec["world"] = w;
    if (m.kind == Mode::Constructive) rec["up"] = members(m.up[w]);
    auto ns = nlohmann::json::array();
    for (WorldSet a : m.neighbourhoods[w]) ns.push_back(members(a));
    rec["neighbourhoods"] = ns;
    out += rec.dump() + "\n";
  }
  for (const auto& [atom, v] : m.valuation) {
    nlohmann::ordered_json rec;
    rec["atom"] = atom;
    rec["worlds"] = members(v);
    out += rec.dump() + "\n";
  }
  return out;
}

Model model_from_json_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<nlohmann::json> recs;
  try {
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        recs.push_back(nlohmann::json::parse(line));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed model record: ") + e.what());
  }
  if (recs.empty() || recs[0].value("format", "") != "wmodal-model")
    throw std::runtime_error("missing model header");
  if (recs[0].value("version", 0) != 1)
    throw std::runtime_error("unsupported model format version");
  try {
    std::string kind = recs[0].at("kind").get<std::string>();
    if (kind != "classical" && kind != "constructive")
      throw std::runtime_error("unknown model kind");
    std::size_t n = recs[0].at("worlds").get<std::size_t>();
    Model m = Model::empty(kind == "classical" ? Mode::Classical
                                               : Mode::Constructive,
                           n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 1; i < recs.size(); ++i) {
      const auto& r = recs[i];
      if (r.contains("refutes")) continue;
      if (r.contains("world")) {
        auto w = r.at("world").get<std::size_t>();
        if (w >= n || seen[w]) throw std::runtime_error("bad world record");
        seen[w] = true;
        if (r.contains("up")) {
          if (m.kind == Mode::Classical)
            throw std::runtime_error("classical model with an order");
          m.up[w] = from_members(r.at("up"), n);
        }
        for (const auto& a : r.at("neighbourhoods"))
          m.neighbourhoods[w].push_back(from_members(a, n));
      } else if (r.contains("atom")) {
        auto a = r.at("atom").get<std::uint32_t>();
        if (a == 0 || m.valuation.count(a))
          throw std::runtime_error("bad atom record");
        m.valuation[a] = from_members(r.at("worlds"), n);
      } else {
        throw std::runtime_error("unknown model record");
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw std::runtime_error("missing world record");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed model record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

std::string model_to_text(const Model& m) {
  std::ostringstream out;
  out << (m.kind == Mode::Classical ? "classical" : "constructive")
      << " model, " << m.worlds << (m.worlds == 1 ? " world\n" : " worlds\n");
  for (std::size_t w = 0; w < m.worlds; ++w) {
    out << "  world " << w << ":";
    if (m.kind == Mode::Constructive) out << " up " << set_text(m.up[w]) << ",";
    out << " N = {";
    for (std::size_t i = 0; i < m.neighbourhoods[w].size(); ++i)
      out << (i ? ", " : "") << set_text(m.neighbourhoods[w][i]);
    out << "}\n";
  }
  for (const auto& [a, v] : m.valuation)
    out << "  V(p" << a << ") = " << set_text(v) << "\n";
  return out.str();
}

}  // namespace wmodal
