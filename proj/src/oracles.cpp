#include "picmod/oracles.hpp"

#include "picmod/exterior.hpp"
#include "picmod/snf.hpp"

#include <numeric>
#include <vector>

namespace picmod::oracles {

FgAbelianGroup hyperelliptic_pic(unsigned g) {
    if (g < 2) throw DomainError("hyperelliptic_pic: need g >= 2");
    Integer order = g % 2 == 0 ? Integer(4) * g + 2 : Integer(8) * g + 4;
    return FgAbelianGroup(0, {order});
}

Integer admissible_h1_order(unsigned n, unsigned d) {
    if (n < 3) throw DomainError("admissible_h1_order: need n >= 3");
    if (d < 2) throw DomainError("admissible_h1_order: need d >= 2");
    return Integer(n - 1) * std::gcd(n, 2 * d);
}

FgAbelianGroup balanced_superelliptic_h1(unsigned n) {
    if (n < 2) throw DomainError("balanced_superelliptic_h1: need n >= 2");
    Integer core = Integer(n) * (Integer(n) - 1) * (Integer(n) - 1);
    std::vector<Integer> orders;
    if (n % 2 == 1) {
        orders = {2, 2, core};
    } else {
        orders = {2, 2 * core};
    }
    return FgAbelianGroup::from_cyclic_factors(0, std::move(orders));
}

FgAbelianGroup sp_level_h1(unsigned g, unsigned m) {
    if (g < 2) throw DomainError("sp_level_h1: need g >= 2");
    if (m < 3) throw DomainError("sp_level_h1: need m >= 3");
    std::vector<Integer> orders;
    if (m % 2 == 1) {
        orders.assign(g * (2 * g + 1), Integer(m));
    } else {
        orders.assign(g * (2 * g - 1), Integer(m));
        orders.insert(orders.end(), 2 * g, Integer(2) * m);
    }
    return FgAbelianGroup::from_cyclic_factors(0, std::move(orders));
}

FgAbelianGroup lambda3_0(unsigned g, unsigned m) {
    if (g < 3) throw DomainError("lambda3_0: need g >= 3");
    if (m < 2) throw DomainError("lambda3_0: need m >= 2");
    return reduce_mod(cokernel(theta_wedge_matrix(g)), Integer(m));
}

FgAbelianGroup pic_mgc_torsion(unsigned g, unsigned m) {
    if (g < 3) throw DomainError("pic_mgc_torsion: need g >= 3");
    if (m < 3) throw DomainError("pic_mgc_torsion: need m >= 3");
    return direct_sum(lambda3_0(g, m), sp_level_h1(g, m));
}

Integer sp2_order(unsigned g) {
    if (g < 1) throw DomainError("sp2_order: need g >= 1");
    Integer order = pow2(static_cast<unsigned long>(g) * g);
    for (unsigned k = 1; k <= g; ++k) order *= pow2(2 * k) - 1;
    return order;
}

Integer hyperelliptic_level_components(unsigned g, unsigned m) {
    if (g < 2) throw DomainError("hyperelliptic_level_components: need g >= 2");
    if (m < 1) throw DomainError("hyperelliptic_level_components: need m >= 1");
    if (m % 2 == 1) return 1;
    Integer group_order = sp2_order(g);
    Integer orbit = factorial(2 * g + 2);
    if (!mpz_divisible_p(group_order.get_mpz_t(), orbit.get_mpz_t()))
        throw DomainError("hyperelliptic_level_components: (2g+2)! does not divide |Sp_2g(F_2)|");
    return group_order / orbit;
}

FgAbelianGroup gg_abelianization(unsigned g) {
    if (g < 2) throw DomainError("gg_abelianization: need g >= 2");
    return FgAbelianGroup(0, {Integer(g % 2 == 0 ? 2 : 4)});
}

FgAbelianGroup pic_hyp_compact_type(unsigned g) {
    if (g < 2) throw DomainError("pic_hyp_compact_type: need g >= 2");
    return FgAbelianGroup(g / 2, {Integer(g % 2 == 0 ? 2 : 4)});
}

FgAbelianGroup delta_g_level2_h1(unsigned g) {
    if (g < 2) throw DomainError("delta_g_level2_h1: need g >= 2");
    return FgAbelianGroup(static_cast<std::size_t>(g) * (2 * g + 1) - 1, {Integer(2)});
}

FgAbelianGroup pmod_sphere_h1(unsigned n) {
    if (n < 4) throw DomainError("pmod_sphere_h1: need n >= 4");
    return FgAbelianGroup(static_cast<std::size_t>(n) * (n - 3) / 2, {});
}

unsigned arnold_braid_cohomology(unsigned n, unsigned j) {
    if (n < 2) throw DomainError("arnold_braid_cohomology: need n >= 2");
    return j <= 1 ? 1 : 0;
}

} // namespace picmod::oracles
