#include "picmod/presentations.hpp"

#include "picmod/snf.hpp"

#include <cstdlib>

namespace picmod {

namespace {

void check_word(const Word& w, std::size_t num_generators) {
    for (int l : w.letters) {
        std::size_t idx = static_cast<std::size_t>(std::abs(l));
        if (idx < 1 || idx > num_generators)
            throw DomainError("relator uses generator index " + std::to_string(l) +
                              ", presentation has " + std::to_string(num_generators) +
                              " generators");
    }
}

} // namespace

FinitePresentation::FinitePresentation(std::size_t gens, std::vector<Word> rels)
    : num_generators(gens), relators(std::move(rels)) {
    for (const Word& w : relators) check_word(w, num_generators);
}

IntMatrix relation_matrix(const FinitePresentation& p) {
    IntMatrix m(p.relators.size(), p.num_generators);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        std::vector<Integer> row = exponent_sum_vector(p.relators[i], p.num_generators);
        for (std::size_t j = 0; j < p.num_generators; ++j) m.at(i, j) = std::move(row[j]);
    }
    return m;
}

FgAbelianGroup abelianization(const FinitePresentation& p) {
    return cokernel(relation_matrix(p));
}

FinitePresentation quotient_by_words(const FinitePresentation& p, const std::vector<Word>& ws) {
    for (const Word& w : ws) check_word(w, p.num_generators);
    FinitePresentation q = p;
    q.relators.insert(q.relators.end(), ws.begin(), ws.end());
    return q;
}

} // namespace picmod
