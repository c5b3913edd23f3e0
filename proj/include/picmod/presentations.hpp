#pragma once

// Finite group presentations as plain data: a generator count and a list of
// relator words. No group-element arithmetic beyond words.

#include "picmod/fg_abelian_group.hpp"
#include "picmod/int_matrix.hpp"
#include "picmod/words.hpp"

#include <cstddef>
#include <vector>

namespace picmod {

struct FinitePresentation {
    std::size_t num_generators = 0;
    std::vector<Word> relators;

    FinitePresentation() = default;
    FinitePresentation(std::size_t gens, std::vector<Word> rels);

    bool operator==(const FinitePresentation&) const = default;
};

// One row per relator, one column per generator; entry = exponent sum.
IntMatrix relation_matrix(const FinitePresentation& p);

// Cokernel of the relation matrix, in normal form.
FgAbelianGroup abelianization(const FinitePresentation& p);

// Appends ws as relators; presents the quotient by their normal closure.
FinitePresentation quotient_by_words(const FinitePresentation& p, const std::vector<Word>& ws);

} // namespace picmod
