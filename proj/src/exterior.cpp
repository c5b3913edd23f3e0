#include "picmod/exterior.hpp"

#include <algorithm>
#include <array>

namespace picmod {

std::size_t lex_triple_index(unsigned p, unsigned q, unsigned r, unsigned n) {
    if (!(p < q && q < r && r < n)) throw DomainError("lex_triple_index: need p < q < r < n");
    Integer idx = 0;
    for (unsigned i = 0; i < p; ++i) idx += binomial(n - 1 - i, 2);
    for (unsigned j = p + 1; j < q; ++j) idx += n - 1 - j;
    idx += r - q - 1;
    return static_cast<std::size_t>(idx.get_ui());
}

IntMatrix theta_wedge_matrix(unsigned g) {
    if (g < 2) throw DomainError("theta_wedge_matrix: genus must be >= 2");
    const unsigned n = 2 * g;
    const auto num_triples = static_cast<std::size_t>(binomial(n, 3).get_ui());
    IntMatrix m(n, num_triples);

    // theta ^ e_j = sum_i e_i ^ e_{g+i} ^ e_j, skipping the i whose pair
    // contains j; sort each triple and track the permutation sign.
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < g; ++i) {
            if (i == j || g + i == j) continue;
            std::array<unsigned, 3> tri{i, g + i, j};
            int sign = 1;
            if (tri[1] > tri[2]) {
                std::swap(tri[1], tri[2]);
                sign = -sign;
            }
            if (tri[0] > tri[1]) {
                std::swap(tri[0], tri[1]);
                sign = -sign;
            }
            if (tri[1] > tri[2]) {
                std::swap(tri[1], tri[2]);
                sign = -sign;
            }
            m.at(j, lex_triple_index(tri[0], tri[1], tri[2], n)) = sign;
        }
    }
    return m;
}

} // namespace picmod
