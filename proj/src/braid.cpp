#include "picmod/braid.hpp"

namespace picmod {

namespace {

// s_i s_{i+1} s_i (s_{i+1} s_i s_{i+1})^{-1}
Word braid_relator(int i) {
    return Word({i, i + 1, i, -(i + 1), -i, -(i + 1)});
}

// s_i s_j (s_j s_i)^{-1} for |i-j| > 1
Word commuting_relator(int i, int j) {
    return Word({i, j, -i, -j});
}

Word ascending_run(unsigned n) {
    std::vector<int> ls;
    ls.reserve(n - 1);
    for (unsigned i = 1; i < n; ++i) ls.push_back(static_cast<int>(i));
    return Word(std::move(ls));
}

} // namespace

FinitePresentation artin_braid_presentation(unsigned n) {
    if (n < 2) throw DomainError("artin_braid_presentation: need n >= 2");
    std::vector<Word> rels;
    for (unsigned i = 1; i + 2 <= n; ++i) rels.push_back(braid_relator(static_cast<int>(i)));
    for (unsigned i = 1; i < n; ++i)
        for (unsigned j = i + 2; j < n; ++j)
            rels.push_back(commuting_relator(static_cast<int>(i), static_cast<int>(j)));
    return FinitePresentation(n - 1, std::move(rels));
}

Word braid_center_word(unsigned n) {
    if (n < 2) throw DomainError("braid_center_word: need n >= 2");
    return ascending_run(n).repeat(n);
}

FinitePresentation birman_hilden_presentation(unsigned n, unsigned d) {
    if (n < 3) throw DomainError("birman_hilden_presentation: need n >= 3");
    if (d < 2) throw DomainError("birman_hilden_presentation: need d >= 2");
    std::vector<Word> rels;
    for (unsigned i = 1; i < n; ++i)
        for (unsigned j = i + 2; j < n; ++j)
            rels.push_back(commuting_relator(static_cast<int>(i), static_cast<int>(j)));
    // largest index range where t_{i+1} exists
    for (unsigned i = 1; i + 2 <= n; ++i) rels.push_back(braid_relator(static_cast<int>(i)));

    Word run = ascending_run(n);
    // (t_1 ... t_{n-1} t_{n-1} ... t_1)^d
    Word palindrome = run;
    for (auto it = run.letters.rbegin(); it != run.letters.rend(); ++it)
        palindrome.letters.push_back(*it);
    rels.push_back(palindrome.repeat(d));
    // (t_1 ... t_{n-1})^n
    rels.push_back(run.repeat(n));
    // [t_1 ... t_{n-1}, t_1]
    Word t1({1});
    rels.push_back(concat(concat(run, t1), concat(run.inverse(), t1.inverse())));
    return FinitePresentation(n - 1, std::move(rels));
}

} // namespace picmod
