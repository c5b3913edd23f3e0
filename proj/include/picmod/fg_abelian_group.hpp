#pragma once

// Finitely generated abelian groups in invariant-factor normal form:
// Z^r x Z/d1 x ... x Z/dt with 2 <= d1 | d2 | ... | dt. Two groups are
// isomorphic iff these fields agree, so operator== decides isomorphism.

#include "picmod/integer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace picmod {

class FgAbelianGroup {
public:
    FgAbelianGroup() = default; // trivial group

    // Requires torsion already in normal form (each factor >= 2, chain d_i | d_{i+1}).
    FgAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion);

    // Normalizes an arbitrary list of cyclic orders. Order 0 counts as a Z
    // factor, order 1 is dropped, the rest are smoothed into a divisor chain
    // via gcd/lcm exchanges.
    static FgAbelianGroup from_cyclic_factors(std::size_t free_rank, std::vector<Integer> orders);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    Integer order() const; // throws DomainError when infinite

    bool operator==(const FgAbelianGroup&) const = default;

    // Canonical string: "Z^r x Z/d1 x ... x Z/dt". Rank factor omitted when
    // r = 0 and written "Z" when r = 1; trivial group renders as "0".
    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

// G tensor Z/m: each Z becomes Z/m, each Z/d becomes Z/gcd(d,m). m >= 2.
FgAbelianGroup reduce_mod(const FgAbelianGroup& g, const Integer& m);

} // namespace picmod
