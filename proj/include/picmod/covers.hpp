#pragma once

// Cyclic branched covers of the sphere given by the algebraic data of
// y^d = (x-a_1)^{n_1} ... (x-a_k)^{n_k}: genus and branch bookkeeping,
// the Ghaswala-Winarski numerical admissibility test, and the
// presentation-based abelianization of the symmetric mapping class group.

#include "picmod/fg_abelian_group.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace picmod {

class CyclicCoverSpec {
public:
    // d >= 2, each 1 <= n_j < d, and gcd(d, n_1, ..., n_k) = 1 (otherwise the
    // curve is reducible and the spec is rejected).
    CyclicCoverSpec(unsigned degree, std::vector<unsigned> exponents);

    unsigned degree() const { return degree_; }
    const std::vector<unsigned>& exponents() const { return exponents_; }
    std::size_t k() const { return exponents_.size(); }

    // "d=3; e=1,1,2"
    static CyclicCoverSpec parse(const std::string& text);
    std::string to_text() const;

    bool operator==(const CyclicCoverSpec&) const = default;

private:
    unsigned degree_;
    std::vector<unsigned> exponents_;
};

struct CoverAnalysis {
    unsigned genus = 0;
    // branch points on the sphere, counting infinity when it ramifies
    unsigned branch_count = 0;
    // which Ghaswala-Winarski condition matched (1, 2 or 3), if any
    std::optional<int> admissible_condition;
    // (d, n) when the cover is a balanced superelliptic cover
    std::optional<std::pair<unsigned, unsigned>> balanced_superelliptic;

    bool admissible() const { return admissible_condition.has_value(); }
    // mapping-class-group statements require total-space genus >= 2
    bool in_mcg_regime() const { return genus >= 2; }
};

CoverAnalysis analyze(const CyclicCoverSpec& spec);

// Ghaswala-Winarski criterion on the finite exponent data, first matching
// condition reported:
//   1: n_1 = ... = n_k and k = 0 or -1 mod d
//   2: d >= 3 and k = 1
//   3: d >= 3, k = 2 and n_1 = -n_2 mod d
std::optional<int> is_numerically_admissible(const CyclicCoverSpec& spec);

// n = g/(d-1) when (d-1) | g, for superelliptic degree d >= 3 and g >= 2.
std::optional<unsigned> is_balanced_superelliptic(unsigned g, unsigned d);

// Abelianization of the symmetric mapping class group, computed from the
// Birman-Hilden presentation on branch_count strands. Requires a numerically
// admissible spec with total-space genus >= 2.
FgAbelianGroup smcg_abelianization(const CyclicCoverSpec& spec);

} // namespace picmod
