#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "picmod/covers.hpp"
#include "picmod/oracles.hpp"

#include <numeric>
#include <string>
#include <vector>

using namespace picmod;

namespace {

std::vector<unsigned> ones(std::size_t k) { return std::vector<unsigned>(k, 1u); }

} // namespace

TEST_CASE("cover spec validation") {
    CHECK_THROWS_AS(CyclicCoverSpec(1, {0}), DomainError);
    CHECK_THROWS_AS(CyclicCoverSpec(3, {0, 1}), DomainError);  // exponent below 1
    CHECK_THROWS_AS(CyclicCoverSpec(3, {1, 3}), DomainError);  // exponent not < d
    CHECK_THROWS_AS(CyclicCoverSpec(4, {2, 2}), DomainError);  // reducible: gcd = 2
    CHECK_THROWS_AS(CyclicCoverSpec(4, {}), DomainError);      // gcd(d) = d != 1
    CHECK_NOTHROW(CyclicCoverSpec(4, {2, 3}));
}

TEST_CASE("cover spec text parsing") {
    CyclicCoverSpec s = CyclicCoverSpec::parse("d=3; e=1,1,2");
    CHECK(s.degree() == 3);
    CHECK(s.exponents() == std::vector<unsigned>{1, 1, 2});
    CHECK(s.to_text() == "d=3; e=1,1,2");
    CHECK(CyclicCoverSpec::parse(" e = 1 , 1 ; d = 2 ") == CyclicCoverSpec(2, {1, 1}));

    CHECK_THROWS_AS(CyclicCoverSpec::parse("d=3"), ParseError);
    CHECK_THROWS_AS(CyclicCoverSpec::parse("d=3; e=x"), ParseError);
    CHECK_THROWS_AS(CyclicCoverSpec::parse("q=3; e=1,1"), ParseError);
    // invalid cover data surfaces as a parse failure of the spec string
    CHECK_THROWS_AS(CyclicCoverSpec::parse("d=4; e=2,2"), ParseError);
}

TEST_CASE("analyze: genus and branch count") {
    CoverAnalysis hyper2 = analyze(CyclicCoverSpec(2, ones(6)));
    CHECK(hyper2.genus == 2);
    CHECK(hyper2.branch_count == 6);
    CHECK(hyper2.in_mcg_regime());

    // five finite branch points, infinity ramifies
    CoverAnalysis odd = analyze(CyclicCoverSpec(2, ones(5)));
    CHECK(odd.genus == 2);
    CHECK(odd.branch_count == 6);

    CoverAnalysis low = analyze(CyclicCoverSpec(3, ones(2)));
    CHECK(low.genus == 1);
    CHECK(low.branch_count == 3); // n_inf = 1
    CHECK_FALSE(low.in_mcg_regime());
}

TEST_CASE("analyze: appending the infinity exponent changes nothing") {
    std::vector<CyclicCoverSpec> specs = {
        CyclicCoverSpec(2, ones(5)),      CyclicCoverSpec(3, {1, 1}),
        CyclicCoverSpec(4, {1, 2, 3, 3}), CyclicCoverSpec(5, {2, 4}),
        CyclicCoverSpec(6, {1, 2, 3, 4}),
    };
    for (const CyclicCoverSpec& spec : specs) {
        unsigned long sum = 0;
        for (unsigned e : spec.exponents()) sum += e;
        unsigned n_inf = static_cast<unsigned>((spec.degree() - sum % spec.degree()) %
                                               spec.degree());
        REQUIRE(n_inf != 0);
        std::vector<unsigned> extended = spec.exponents();
        extended.push_back(n_inf);
        CoverAnalysis a = analyze(spec);
        CoverAnalysis b = analyze(CyclicCoverSpec(spec.degree(), extended));
        CHECK(a.genus == b.genus);
        CHECK(a.branch_count == b.branch_count);
    }
}

TEST_CASE("numerical admissibility conditions in order") {
    CHECK(is_numerically_admissible(CyclicCoverSpec(2, ones(6))) == 1);
    CHECK(is_numerically_admissible(CyclicCoverSpec(3, {1, 2})) == 3);
    CHECK(is_numerically_admissible(CyclicCoverSpec(4, {1, 2, 3})) == std::nullopt);
    CHECK(is_numerically_admissible(CyclicCoverSpec(3, {1})) == 2);
    // k = -1 mod d branch of condition 1
    CHECK(is_numerically_admissible(CyclicCoverSpec(3, ones(5))) == 1);
    CHECK(is_numerically_admissible(CyclicCoverSpec(4, {3})) == 2);
    // condition 1 is checked first: k=2 = -1 mod 3 with equal exponents
    CHECK(is_numerically_admissible(CyclicCoverSpec(3, {2, 2})) == 1);
}

TEST_CASE("balanced superelliptic detection") {
    CHECK(is_balanced_superelliptic(4, 3) == 2u);
    CHECK(is_balanced_superelliptic(5, 3) == std::nullopt);
    CHECK(is_balanced_superelliptic(6, 4) == 2u);
    CHECK_THROWS_AS(is_balanced_superelliptic(4, 2), DomainError);
    CHECK_THROWS_AS(is_balanced_superelliptic(1, 3), DomainError);

    // d=3 cover of genus 4 branched over 2*2+2 = 6 points
    CoverAnalysis a = analyze(CyclicCoverSpec(3, ones(6)));
    CHECK(a.genus == 4);
    CHECK(a.branch_count == 6);
    REQUIRE(a.balanced_superelliptic.has_value());
    CHECK(a.balanced_superelliptic->first == 3);
    CHECK(a.balanced_superelliptic->second == 2);
}

TEST_CASE("smcg_abelianization: paper values and error paths") {
    CHECK(smcg_abelianization(CyclicCoverSpec(2, ones(6))) == FgAbelianGroup(0, {10}));
    CHECK(smcg_abelianization(CyclicCoverSpec(2, ones(8))) == FgAbelianGroup(0, {28}));
    CHECK(smcg_abelianization(CyclicCoverSpec(3, ones(6))) == FgAbelianGroup(0, {30}));

    CHECK_THROWS_WITH_AS(smcg_abelianization(CyclicCoverSpec(4, {1, 2, 3})),
                         doctest::Contains("not numerically admissible"), DomainError);
    CHECK_THROWS_WITH_AS(smcg_abelianization(CyclicCoverSpec(2, ones(3))),
                         doctest::Contains("outside the g >= 2 regime"), DomainError);
}

TEST_CASE("admissible grid: presentation route equals the closed form") {
    for (unsigned d = 2; d <= 6; ++d) {
        for (std::size_t k = 3; k <= 12; ++k) {
            CyclicCoverSpec spec(d, ones(k));
            CoverAnalysis a = analyze(spec);
            if (!a.admissible() || !a.in_mcg_regime()) continue;
            Integer expected = oracles::admissible_h1_order(a.branch_count, d);
            CHECK(smcg_abelianization(spec) == FgAbelianGroup(0, {expected}));
        }
    }
}

TEST_CASE("hyperelliptic chain g = 2..10") {
    for (unsigned g = 2; g <= 10; ++g) {
        CyclicCoverSpec spec(2, ones(2 * g + 2));
        CoverAnalysis a = analyze(spec);
        CHECK(a.admissible_condition == 1);
        CHECK(a.genus == g);
        Integer order = smcg_abelianization(spec).order();
        if (g % 2 == 0)
            CHECK(order == 4 * g + 2);
        else
            CHECK(order == 8 * g + 4);
    }
}
