#include <doctest.h>

#include "branchroots/approx.hpp"
#include "branchroots/branch.hpp"
#include "branchroots/corpus.hpp"
#include "branchroots/errors.hpp"
#include "branchroots/parse.hpp"

#include "oracles.hpp"

using namespace branchroots;

namespace {

BiPoly bp(const char* s) { return parse_bipoly(s); }

std::vector<BiPoly> corpus_polys(std::uint64_t seed, int count) {
    CorpusSpec spec;
    spec.seed = seed;
    spec.count = count;
    std::vector<BiPoly> out;
    for (const auto& p : gen_corpus(spec)) out.push_back(minimal_polynomial(p));
    return out;
}

BiPoly random_monic(Rng& rng, std::int64_t ydeg, std::int64_t maxx) {
    BiPoly g = BiPoly::y_pow(ydeg);
    for (std::int64_t k = 0; k < ydeg; ++k) {
        UniPoly c(Var::x);
        const std::int64_t d = rng.uniform(0, maxx);
        for (std::int64_t e = 0; e <= d; ++e) c.set_coeff(e, rng.small_rat(true));
        g.set_ycoeff(k, c);
    }
    return g;
}

}  // namespace

TEST_SUITE("approx") {

TEST_CASE("base-h expansion") {
    const auto e1 = hadic(bp("y^2 + 2*y + 5"), bp("y"));
    CHECK(e1.degree == 2);
    CHECK(e1.coeffs[0] == bp("2"));
    CHECK(e1.coeffs[1] == bp("5"));

    const auto e2 = hadic(bp("y^2 - x^3"), bp("y - x"));
    CHECK(e2.coeffs[0] == bp("2*x"));
    CHECK(e2.coeffs[1] == bp("x^2 - x^3"));
    CHECK(e2.reconstruct() == bp("y^2 - x^3"));

    const auto e3 = hadic(bp("y - x"), bp("y - x"));
    CHECK(e3.degree == 1);
    CHECK(e3.coeffs[0].is_zero());

    CHECK_THROWS_AS(hadic(bp("y^3"), bp("y^2")), DegreeMismatch);
    CHECK_THROWS_AS(hadic(bp("1"), bp("y^2")), DegreeMismatch);
    CHECK_THROWS_AS(hadic(bp("2*y^2"), bp("y")), NonMonic);
}

TEST_CASE("expansion digits reconstruct the input") {
    Rng rng(21);
    for (int i = 0; i < 40; ++i) {
        const std::int64_t hd = rng.uniform(1, 3);
        const std::int64_t d = rng.uniform(1, 3);
        const BiPoly h = random_monic(rng, hd, 3);
        const BiPoly g = random_monic(rng, hd * d, 4);
        const auto ex = hadic(g, h);
        CHECK(ex.reconstruct() == g);
        for (const auto& a : ex.coeffs) CHECK((a.is_zero() || a.ydeg() < h.ydeg()));
    }
}

TEST_CASE("the averaging step") {
    CHECK(tschirnhausen(bp("y^2 + 2*y + 5"), bp("y")) == bp("y + 1"));
    CHECK(tschirnhausen(bp("y^2 - x^3"), bp("y")) == bp("y"));
}

TEST_CASE("approximate roots, small cases") {
    CHECK(approx_root(bp("y^2 + 2*y + 5"), 2) == bp("y + 1"));
    CHECK(approx_root(bp("y^2 - x^3"), 2) == bp("y"));
    const BiPoly g = bp("y^4 - 2*x*y^2 + x^3*y - 7");
    CHECK(approx_root(g, 1) == g);
    CHECK_THROWS_AS(approx_root(bp("y^3"), 2), DegreeMismatch);
    CHECK_THROWS_AS(approx_root(bp("x*y^2"), 2), NonMonic);
}

TEST_CASE("the root is a fixed point of the averaging step") {
    for (const auto& f : corpus_polys(401, 25)) {
        for (std::int64_t d = 2; d <= f.ydeg(); ++d) {
            if (f.ydeg() % d != 0) continue;
            const BiPoly r = approx_root(f, d);
            CHECK(tschirnhausen(f, r) == r);
        }
    }
}

TEST_CASE("iteration agrees with undetermined coefficients") {
    for (const auto& f : corpus_polys(402, 25)) {
        for (std::int64_t d = 2; d <= f.ydeg(); ++d) {
            if (f.ydeg() % d != 0) continue;
            CHECK(approx_root(f, d) == oracles::undetermined_root(f, d));
        }
    }
    Rng rng(22);
    for (int i = 0; i < 25; ++i) {
        const BiPoly g = random_monic(rng, 6, 3);
        for (std::int64_t d : {2, 3, 6}) CHECK(approx_root(g, d) == oracles::undetermined_root(g, d));
    }
}

TEST_CASE("defining degree bound, and its failure under perturbation") {
    Rng rng(23);
    for (const auto& f : corpus_polys(403, 15)) {
        for (std::int64_t d = 2; d <= f.ydeg(); ++d) {
            if (f.ydeg() % d != 0) continue;
            const BiPoly r = approx_root(f, d);
            const std::int64_t m = f.ydeg() / d;
            const BiPoly diff = f - r.pow(d);
            CHECK((diff.is_zero() || diff.ydeg() < f.ydeg() - m));
            // Any added monomial of lower y-degree breaks the bound.
            for (int trial = 0; trial < 3; ++trial) {
                const BiPoly bad =
                    r + BiPoly::monomial(rng.small_rat(), rng.uniform(0, 2), rng.uniform(0, m - 1));
                const BiPoly bdiff = f - bad.pow(d);
                CHECK(!(bdiff.is_zero() || bdiff.ydeg() < f.ydeg() - m));
            }
        }
    }
}

TEST_CASE("nested roots collapse") {
    const BiPoly f = minimal_polynomial(BranchParam(4, parse_unipoly("t^6 + t^7", Var::t)));
    CHECK(check_nested(f, 2, 2));
    CHECK(check_nested(f, 1, 1));
    Rng rng(24);
    for (int i = 0; i < 20; ++i) {
        const BiPoly g = random_monic(rng, 4, 3);
        CHECK(check_nested(g, 2, 2));
    }
    for (int i = 0; i < 10; ++i) {
        const BiPoly g = random_monic(rng, 8, 2);
        CHECK(check_nested(g, 2, 4));
        CHECK(check_nested(g, 4, 2));
        CHECK(check_nested(g, 2, 2));
    }
    CHECK_THROWS_AS(check_nested(bp("y^4"), 3, 2), DegreeMismatch);
}

}  // TEST_SUITE
