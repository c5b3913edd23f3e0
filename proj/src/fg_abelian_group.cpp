#include "picmod/fg_abelian_group.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace picmod {

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) throw DomainError("FgAbelianGroup: invariant factor < 2");
        if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
            throw DomainError("FgAbelianGroup: divisibility chain violated");
    }
}

FgAbelianGroup FgAbelianGroup::from_cyclic_factors(std::size_t free_rank,
                                                   std::vector<Integer> orders) {
    std::vector<Integer> factors;
    for (Integer& d : orders) {
        if (d < 0) d = -d;
        if (d == 0) {
            ++free_rank;
        } else if (d > 1) {
            factors.push_back(std::move(d));
        }
    }
    // Smooth into a divisor chain: replace a violating sorted-adjacent pair
    // (a,b) by (gcd, lcm). Each exchange strictly grows the larger element,
    // so this terminates.
    for (;;) {
        std::sort(factors.begin(), factors.end());
        bool clean = true;
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            if (mpz_divisible_p(factors[i + 1].get_mpz_t(), factors[i].get_mpz_t())) continue;
            Integer g = gcd(factors[i], factors[i + 1]);
            Integer l = factors[i] / g * factors[i + 1];
            if (g == 1) {
                factors[i] = std::move(l);
                factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            } else {
                factors[i] = std::move(g);
                factors[i + 1] = std::move(l);
            }
            clean = false;
            break;
        }
        if (clean) break;
    }
    return FgAbelianGroup(free_rank, std::move(factors));
}

Integer FgAbelianGroup::order() const {
    if (free_rank_ != 0) throw DomainError("order(): group is infinite");
    Integer n = 1;
    for (const Integer& d : torsion_) n *= d;
    return n;
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " x ";
        first = false;
    };
    if (free_rank_ == 1) {
        sep();
        os << "Z";
    } else if (free_rank_ > 1) {
        sep();
        os << "Z^" << free_rank_;
    }
    for (const Integer& d : torsion_) {
        sep();
        os << "Z/" << d.get_str();
    }
    return os.str();
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Integer> orders = a.torsion();
    orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
    return FgAbelianGroup::from_cyclic_factors(a.free_rank() + b.free_rank(), std::move(orders));
}

FgAbelianGroup reduce_mod(const FgAbelianGroup& g, const Integer& m) {
    if (m < 2) throw DomainError("reduce_mod: modulus must be >= 2");
    std::vector<Integer> orders(g.free_rank(), m);
    for (const Integer& d : g.torsion()) orders.push_back(gcd(d, m));
    return FgAbelianGroup::from_cyclic_factors(0, std::move(orders));
}

} // namespace picmod
