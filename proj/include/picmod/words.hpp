#pragma once

// Words over signed generator indices: letter +i means generator g_i,
// letter -i its inverse (1-based). The empty word is the identity.

#include "picmod/integer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace picmod {

struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls);

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }

    Word inverse() const;
    Word cyclic_shift(std::size_t k) const;
    Word repeat(unsigned times) const;
    // Cancels adjacent x x^{-1} pairs. Never required for abelianization;
    // provided as a convenience.
    Word free_reduced() const;

    bool operator==(const Word&) const = default;
};

Word concat(const Word& a, const Word& b);

// Net signed count of each generator in w. Throws DomainError when a letter
// falls outside [1, num_generators].
std::vector<Integer> exponent_sum_vector(const Word& w, std::size_t num_generators);

// Text format: whitespace-separated letters "t1 t2 t1^-1"; any alphabetic
// generator prefix is accepted, exponents expand into repeated letters.
Word parse_word(const std::string& text);
std::string format_word(const Word& w, const std::string& prefix = "t");

} // namespace picmod
