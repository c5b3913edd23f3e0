#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "picmod/covers.hpp"
#include "picmod/exterior.hpp"
#include "picmod/oracles.hpp"
#include "picmod/snf.hpp"

#include <numeric>

using namespace picmod;
using namespace picmod::oracles;

namespace {

FgAbelianGroup elementary(unsigned long m, std::size_t copies) {
    return FgAbelianGroup(0, std::vector<Integer>(copies, Integer(m)));
}

} // namespace

TEST_CASE("hyperelliptic_pic") {
    CHECK(hyperelliptic_pic(2) == FgAbelianGroup(0, {10}));
    CHECK(hyperelliptic_pic(3) == FgAbelianGroup(0, {28}));
    CHECK(hyperelliptic_pic(4) == FgAbelianGroup(0, {18}));
    CHECK_THROWS_AS(hyperelliptic_pic(1), DomainError);
}

TEST_CASE("hyperelliptic_pic agrees with the presentation route for g = 2..10") {
    for (unsigned g = 2; g <= 10; ++g) {
        CyclicCoverSpec spec(2, std::vector<unsigned>(2 * g + 2, 1u));
        CHECK(smcg_abelianization(spec) == hyperelliptic_pic(g));
    }
}

TEST_CASE("admissible_h1_order") {
    CHECK(admissible_h1_order(6, 2) == 10);
    CHECK(admissible_h1_order(5, 3) == 4);
    CHECK(admissible_h1_order(4, 2) == 12);
    CHECK_THROWS_AS(admissible_h1_order(2, 2), DomainError);
    CHECK_THROWS_AS(admissible_h1_order(6, 1), DomainError);
}

TEST_CASE("admissible_h1_order equals gcd(2d(n-1), n(n-1))") {
    for (unsigned n = 3; n <= 30; ++n)
        for (unsigned d = 2; d <= 10; ++d)
            CHECK(admissible_h1_order(n, d) ==
                  gcd(Integer(2) * d * (n - 1), Integer(n) * (n - 1)));
}

TEST_CASE("balanced_superelliptic_h1") {
    CHECK(balanced_superelliptic_h1(3) == FgAbelianGroup(0, {2, 2, 12}));
    CHECK(balanced_superelliptic_h1(2) == FgAbelianGroup(0, {2, 4}));
    CHECK(balanced_superelliptic_h1(4) == FgAbelianGroup(0, {2, 72}));
    CHECK_THROWS_AS(balanced_superelliptic_h1(1), DomainError);
}

TEST_CASE("sp_level_h1") {
    CHECK(sp_level_h1(2, 3) == elementary(3, 10));
    std::vector<Integer> even{4, 4, 4, 4, 4, 4, 8, 8, 8, 8};
    CHECK(sp_level_h1(2, 4) == FgAbelianGroup(0, even));
    CHECK(sp_level_h1(3, 5) == elementary(5, 21));
    CHECK_THROWS_AS(sp_level_h1(2, 2), DomainError);
    CHECK_THROWS_AS(sp_level_h1(1, 3), DomainError);
}

TEST_CASE("lambda3_0") {
    CHECK(lambda3_0(3, 2) == elementary(2, 14));
    CHECK(lambda3_0(3, 3) == elementary(3, 14));
    CHECK(lambda3_0(4, 2) == elementary(2, 48));
    CHECK_THROWS_AS(lambda3_0(2, 2), DomainError);
    CHECK_THROWS_AS(lambda3_0(3, 1), DomainError);
}

TEST_CASE("lambda3_0 matches the closed count m^(C(2g,3) - 2g)") {
    for (unsigned g = 3; g <= 4; ++g) {
        std::size_t copies = static_cast<std::size_t>(Integer(binomial(2 * g, 3) - 2 * g).get_ui());
        for (unsigned m = 2; m <= 6; ++m) {
            FgAbelianGroup got = lambda3_0(g, m);
            CHECK(got.free_rank() == 0);
            CHECK(got == elementary(m, copies));
        }
    }
}

TEST_CASE("pic_mgc_torsion") {
    CHECK(pic_mgc_torsion(3, 3) == elementary(3, 35));
    std::vector<Integer> expect(29, Integer(4));
    expect.insert(expect.end(), 6, Integer(8));
    CHECK(pic_mgc_torsion(3, 4) == FgAbelianGroup(0, expect));
    CHECK(pic_mgc_torsion(4, 5) == elementary(5, 84));
    CHECK_THROWS_AS(pic_mgc_torsion(2, 3), DomainError);
    CHECK_THROWS_AS(pic_mgc_torsion(3, 2), DomainError);
}

TEST_CASE("sp2_order") {
    CHECK(sp2_order(1) == 6);
    CHECK(sp2_order(2) == 720);
    CHECK(sp2_order(3) == 1451520);
    CHECK_THROWS_AS(sp2_order(0), DomainError);
}

TEST_CASE("hyperelliptic_level_components") {
    CHECK(hyperelliptic_level_components(2, 1) == 1);
    CHECK(hyperelliptic_level_components(5, 3) == 1);
    CHECK(hyperelliptic_level_components(2, 2) == 1); // Delta_2 is all of Mod(S_2)
    CHECK(hyperelliptic_level_components(3, 2) == 36);
    CHECK_THROWS_AS(hyperelliptic_level_components(1, 2), DomainError);
    CHECK_THROWS_AS(hyperelliptic_level_components(2, 0), DomainError);
}

TEST_CASE("(2g+2)! divides |Sp_2g(F_2)| for g = 2..8") {
    for (unsigned g = 2; g <= 8; ++g) {
        Integer f = factorial(2 * g + 2);
        CHECK(sp2_order(g) % f == 0);
        CHECK(hyperelliptic_level_components(g, 2) * f == sp2_order(g));
    }
}

TEST_CASE("gg_abelianization") {
    CHECK(gg_abelianization(2) == FgAbelianGroup(0, {2}));
    CHECK(gg_abelianization(3) == FgAbelianGroup(0, {4}));
    CHECK(gg_abelianization(4) == FgAbelianGroup(0, {2}));
    CHECK_THROWS_AS(gg_abelianization(1), DomainError);
    // surjection H_1(Delta_g) -> H_1(G_g): orders divide
    for (unsigned g = 2; g <= 20; ++g)
        CHECK(hyperelliptic_pic(g).order() % gg_abelianization(g).order() == 0);
}

TEST_CASE("pic_hyp_compact_type") {
    CHECK(pic_hyp_compact_type(2) == FgAbelianGroup(1, {2}));
    CHECK(pic_hyp_compact_type(3) == FgAbelianGroup(1, {4}));
    CHECK(pic_hyp_compact_type(5) == FgAbelianGroup(2, {4}));
    CHECK_THROWS_AS(pic_hyp_compact_type(0), DomainError);
}

TEST_CASE("delta_g_level2_h1 and pmod_sphere_h1") {
    CHECK(delta_g_level2_h1(2) == FgAbelianGroup(9, {2}));
    CHECK(delta_g_level2_h1(3) == FgAbelianGroup(20, {2}));
    CHECK(delta_g_level2_h1(4) == FgAbelianGroup(35, {2}));
    CHECK_THROWS_AS(delta_g_level2_h1(1), DomainError);

    CHECK(pmod_sphere_h1(6) == FgAbelianGroup(9, {}));
    CHECK(pmod_sphere_h1(8) == FgAbelianGroup(20, {}));
    CHECK(pmod_sphere_h1(5) == FgAbelianGroup(5, {}));
    CHECK_THROWS_AS(pmod_sphere_h1(3), DomainError);

    // the sphere rank at n = 2g+2 anchors the free rank of the level-2 group
    for (unsigned g = 2; g <= 12; ++g)
        CHECK(pmod_sphere_h1(2 * g + 2).free_rank() == delta_g_level2_h1(g).free_rank());
}

TEST_CASE("arnold_braid_cohomology") {
    CHECK(arnold_braid_cohomology(5, 0) == 1);
    CHECK(arnold_braid_cohomology(5, 1) == 1);
    CHECK(arnold_braid_cohomology(5, 3) == 0);
    for (unsigned n = 2; n <= 9; ++n)
        for (unsigned j = 0; j <= 5; ++j)
            CHECK(arnold_braid_cohomology(n, j) == (j <= 1 ? 1 : 0));
    CHECK_THROWS_AS(arnold_braid_cohomology(1, 0), DomainError);
}
