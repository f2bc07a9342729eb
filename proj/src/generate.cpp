#include "wmodal/generate.hpp"

#include <map>
#include <mutex>

namespace wmodal {

namespace {

// Memoized table of formulas by exact size.
class SizeTable {
 public:
  const std::vector<Formula>& get(std::size_t size, std::uint32_t atoms) {
    std::lock_guard lock(mutex_);
    return get_locked(size, atoms);
  }

 private:
  const std::vector<Formula>& get_locked(std::size_t size,
                                         std::uint32_t atoms) {
    auto key = std::make_pair(size, atoms);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    std::vector<Formula> out;
    if (size == 1) {
      for (std::uint32_t i = 1; i <= atoms; ++i) out.push_back(Formula::atom(i));
      out.push_back(Formula::bottom());
    } else if (size >= 2) {
      for (Formula f : get_locked(size - 1, atoms)) out.push_back(Formula::box(f));
      for (Formula f : get_locked(size - 1, atoms)) out.push_back(Formula::dia(f));
      for (std::size_t l = 1; l + 1 < size; ++l) {
        const auto& lefts = get_locked(l, atoms);
        const auto& rights = get_locked(size - 1 - l, atoms);
        for (Formula a : lefts)
          for (Formula b : rights) {
            out.push_back(Formula::conj(a, b));
            out.push_back(Formula::disj(a, b));
            out.push_back(Formula::implies(a, b));
          }
      }
    }
    return table_.emplace(key, std::move(out)).first->second;
  }

  std::mutex mutex_;
  std::map<std::pair<std::size_t, std::uint32_t>, std::vector<Formula>> table_;
};

SizeTable& size_table() {
  static SizeTable t;
  return t;
}

}  // namespace

std::vector<Formula> formulas_of_size(std::size_t size, std::uint32_t atoms) {
  return size_table().get(size, atoms);
}

std::vector<Formula> formulas_up_to(std::size_t max_size, std::uint32_t atoms) {
  std::vector<Formula> out;
  for (std::size_t s = 1; s <= max_size; ++s) {
    const auto& fs = size_table().get(s, atoms);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

Formula random_formula(std::mt19937_64& rng, std::size_t size,
                       std::uint32_t atoms) {
  if (size <= 1) {
    std::uniform_int_distribution<std::uint32_t> leaf(0, atoms);
    std::uint32_t i = leaf(rng);
    return i == 0 ? Formula::bottom() : Formula::atom(i);
  }
  // Binary nodes need size >= 3.
  std::uniform_int_distribution<int> op(0, size >= 3 ? 4 : 1);
  switch (op(rng)) {
    case 0: return Formula::box(random_formula(rng, size - 1, atoms));
    case 1: return Formula::dia(random_formula(rng, size - 1, atoms));
    default: break;
  }
  std::uniform_int_distribution<std::size_t> split(1, size - 2);
  std::size_t l = split(rng);
  Formula a = random_formula(rng, l, atoms);
  Formula b = random_formula(rng, size - 1 - l, atoms);
  std::uniform_int_distribution<int> bin(0, 2);
  switch (bin(rng)) {
    case 0: return Formula::conj(a, b);
    case 1: return Formula::disj(a, b);
    default: return Formula::implies(a, b);
  }
}

Formula random_formula_up_to(std::mt19937_64& rng, std::size_t max_size,
                             std::uint32_t atoms) {
  std::uniform_int_distribution<std::size_t> sz(1, max_size);
  return random_formula(rng, sz(rng), atoms);
}

Sequent random_sequent(std::mt19937_64& rng, Mode mode, std::size_t max_size,
                       std::uint32_t atoms, std::size_t max_ante) {
  std::uniform_int_distribution<std::size_t> n_ante(0, max_ante);
  std::uniform_int_distribution<std::size_t> n_succ(
      0, mode == Mode::Constructive ? 1 : 2);
  std::vector<Formula> ante, succ;
  for (std::size_t i = n_ante(rng); i > 0; --i)
    ante.push_back(random_formula_up_to(rng, max_size, atoms));
  for (std::size_t i = n_succ(rng); i > 0; --i)
    succ.push_back(random_formula_up_to(rng, max_size, atoms));
  return Sequent(std::move(ante), std::move(succ), mode);
}

}  // namespace wmodal
