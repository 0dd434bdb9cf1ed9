#include <doctest.h>

#include "branchroots/branch.hpp"
#include "branchroots/contact.hpp"
#include "branchroots/corpus.hpp"
#include "branchroots/errors.hpp"
#include "branchroots/parse.hpp"
#include "branchroots/semigroup.hpp"

#include "oracles.hpp"

using namespace branchroots;

TEST_SUITE("semigroup") {

TEST_CASE("membership with representation") {
    const Semigroup s({4, 6, 13});
    const auto r10 = s.contains(10);
    REQUIRE(r10.has_value());
    CHECK(*r10 == std::vector<std::int64_t>{1, 1, 0});
    CHECK(!s.contains(5).has_value());
    CHECK(*s.contains(0) == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("membership agrees with exhaustive search") {
    for (const auto& gens :
         std::vector<std::vector<std::int64_t>>{{4, 6, 13}, {2, 3}, {3, 2}, {8, 12, 26, 53}}) {
        const Semigroup s(gens);
        const std::int64_t cap = s.conductor() + 2 * gens[0];
        for (std::int64_t m = 0; m <= cap; ++m) {
            const bool expect = oracles::brute_member(gens, m);
            const auto rep = s.contains(m);
            CHECK(rep.has_value() == expect);
            if (rep) {
                std::int64_t total = 0;
                for (std::size_t i = 0; i < gens.size(); ++i) total += (*rep)[i] * gens[i];
                CHECK(total == m);
            }
        }
    }
}

TEST_CASE("conductor") {
    CHECK(Semigroup({2, 3}).conductor() == 2);
    CHECK(Semigroup({4, 6, 13}).conductor() == 16);
    CHECK(Semigroup({1}).conductor() == 0);
    CHECK(Semigroup({4, 6, 13}).conductor() == oracles::brute_conductor({4, 6, 13}));
    CHECK(Semigroup({8, 12, 26, 53}).conductor() == oracles::brute_conductor({8, 12, 26, 53}));
    CHECK_THROWS_AS(conductor_of(std::vector<std::int64_t>{4, 6}), GcdNotOne);
}

TEST_CASE("canonical generators") {
    CHECK(canonical_generators({4, 6, 13, 10, 17}, 4) == std::vector<std::int64_t>{4, 6, 13});
    CHECK(canonical_generators({2, 3}, 2) == std::vector<std::int64_t>{2, 3});
    CHECK(canonical_generators({3, 2}, 3) == std::vector<std::int64_t>{3, 2});
    CHECK(canonical_generators({4, 6, 13, 10, 17}, 4) ==
          oracles::brute_canonical({4, 6, 13, 10, 17}, 4));
    CHECK_THROWS_AS(canonical_generators({4, 6}, 4), GcdNotOne);
}

TEST_CASE("degree-form inequality") {
    CHECK(am_inequality(Semigroup({3, 2}), 3));        // 3*2 < 9
    CHECK(!am_inequality(Semigroup({2, 3}), 2));       // 2*3 >= 4
    CHECK(am_inequality(Semigroup({4, 6, 13}), 7));    // 2*13 < 49
    CHECK_THROWS_AS(am_inequality(Semigroup({1}), 5), HZero);
}

TEST_CASE("structure validation rejects bad generator sequences") {
    CHECK_THROWS_AS(Semigroup({4, 6}), GcdNotOne);
    CHECK_THROWS_AS(Semigroup({4, 6, 8, 13}), InvalidSequence);  // 8 does not drop the gcd
    CHECK_THROWS_AS(Semigroup({6, 4, 9}), InvalidSequence);  // 6*4 >= 2*9 breaks the growth law
    CHECK_THROWS_AS(Semigroup({4, 6, 26}), InvalidSequence);  // 26 keeps the gcd at 2
}

TEST_CASE("intersection data reproduces the generator sequence") {
    // Structured test curves of bounded y-degree: powers of the truncation
    // polynomials scaled by x powers, plus their pairwise sums. Their
    // intersection numbers generate the whole value semigroup.
    CorpusSpec spec;
    spec.seed = 301;
    spec.count = 25;
    const auto corpus = gen_corpus(spec);
    Rng rng(302);
    for (const auto& p : corpus) {
        const CharSeq cf = characteristic(p);
        std::vector<BiPoly> fks;
        for (int k = 0; k <= cf.h(); ++k) fks.push_back(fk_polynomial(p, k));
        std::vector<std::int64_t> values;
        auto record = [&](const BiPoly& psi) {
            if (psi.is_zero() || psi.ydeg() >= p.n) return;
            const Ord v = intersection_param(p, psi);
            if (v.is_finite()) values.push_back(v.value());
        };
        for (int k = 0; k < cf.h(); ++k) record(fks[static_cast<std::size_t>(k)]);
        for (int trial = 0; trial < 200; ++trial) {
            BiPoly psi = BiPoly::monomial(rng.small_rat(), rng.uniform(0, 3), 0);
            for (std::size_t k = 0; k < fks.size(); ++k)
                if (rng.chance(1, 2) && psi.ydeg() + fks[k].ydeg() < p.n) psi *= fks[k];
            if (rng.chance(1, 3)) {
                BiPoly extra = BiPoly::monomial(rng.small_rat(), rng.uniform(0, 5), 0);
                const std::size_t k = static_cast<std::size_t>(
                    rng.uniform(0, static_cast<std::int64_t>(fks.size()) - 1));
                if (extra.ydeg() + fks[k].ydeg() < p.n) extra *= fks[k];
                psi += extra;
            }
            record(psi);
        }
        CHECK(canonical_generators(values, p.n) == cf.beta);
    }
}

TEST_CASE("minimality of the generators on generated branches") {
    CorpusSpec spec;
    spec.seed = 303;
    spec.count = 40;
    for (const auto& p : gen_corpus(spec)) {
        const CharSeq cf = characteristic(p);
        // Construction of Semigroup re-validates minimality internally.
        const Semigroup s(cf.beta);
        for (std::size_t k = 1; k < cf.beta.size(); ++k) {
            std::span<const std::int64_t> prefix(cf.beta.data(), k);
            CHECK(!monoid_contains(prefix, cf.beta[k]));
        }
        CHECK(s.conductor() >= 0);
    }
}

}  // TEST_SUITE
