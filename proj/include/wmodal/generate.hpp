#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wmodal/formula.hpp"
#include "wmodal/sequent.hpp"

namespace wmodal {

/// All formulas with exactly `size` nodes over atoms p1..p<atoms> and ⊥,
/// in a fixed order.
std::vector<Formula> formulas_of_size(std::size_t size, std::uint32_t atoms);

/// All formulas with at most `max_size` nodes, smallest first.
std::vector<Formula> formulas_up_to(std::size_t max_size, std::uint32_t atoms);

/// Uniform-ish random formula with exactly `size` nodes (size >= 1).
Formula random_formula(std::mt19937_64& rng, std::size_t size,
                       std::uint32_t atoms);

/// Random formula with a size drawn from [1, max_size].
Formula random_formula_up_to(std::mt19937_64& rng, std::size_t max_size,
                             std::uint32_t atoms);

/// Random sequent with up to `max_ante` antecedent formulas; the succedent
/// has at most one formula in constructive mode and up to two otherwise.
Sequent random_sequent(std::mt19937_64& rng, Mode mode, std::size_t max_size,
                       std::uint32_t atoms, std::size_t max_ante = 3);

}  // namespace wmodal
