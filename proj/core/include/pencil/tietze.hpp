#pragma once

// Tietze transformations and a greedy simplifier built from them.

#include <cstddef>

#include "pencil/presentation.hpp"

namespace pencil {

/// Cyclic reduction plus removal of relators that are conjugate to an
/// earlier relator or its inverse.
Presentation dedupe_relators(const Presentation& P);

/// Solves relator `relator_index` for generator `gen` (which must occur in
/// it exactly once), substitutes into the other relators and removes both.
/// Generators above `gen` shift down by one.
Presentation eliminate_generator(const Presentation& P, int gen, std::size_t relator_index);

/// Appends the consequence relators[i] * relators[j].
Presentation append_product(const Presentation& P, std::size_t i, std::size_t j);

/// Greedy elimination: at each step the (generator, relator) pair giving
/// the smallest total relator length, ties to the lowest generator index.
/// `length_budget` 0 means 50 times the initial length.
Presentation tietze_simplify(const Presentation& P, std::size_t length_budget = 0);

}  // namespace pencil
