#include <doctest.h>

#include "branchroots/approx.hpp"
#include "branchroots/contact.hpp"
#include "branchroots/corpus.hpp"
#include "branchroots/errors.hpp"
#include "branchroots/parse.hpp"
#include "branchroots/resultant.hpp"

using namespace branchroots;

namespace {

UniPoly yt(const char* s) { return parse_unipoly(s, Var::t); }
BiPoly bp(const char* s) { return parse_bipoly(s); }

std::vector<BranchParam> corpus(std::uint64_t seed, int count) {
    CorpusSpec spec;
    spec.seed = seed;
    spec.count = count;
    return gen_corpus(spec);
}

}  // namespace

TEST_SUITE("contact") {

TEST_CASE("intersections along the parametrization") {
    const BranchParam cusp(2, yt("t^3"));
    CHECK(intersection_param(cusp, bp("y^2 - x^2")) == Ord(4));
    CHECK(!intersection_param(cusp, bp("y^2 - x^3")).is_finite());
    CHECK(intersection_param(BranchParam(4, yt("t^6 + t^7")), bp("x")) == Ord(4));
}

TEST_CASE("intersections via the resultant") {
    CHECK(intersection_resultant(bp("y^2 - x^3"), bp("y^2 - x^2")) == Ord(4));
    CHECK(intersection_resultant(bp("y^2 - x^3"), bp("y - x")) == Ord(2));
    CHECK(!intersection_resultant(bp("y^2 - x^3"), bp("y^2 - x^3")).is_finite());
}

TEST_CASE("the two intersection routes agree") {
    const auto branches = corpus(501, 40);
    int checked = 0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const auto& p = branches[i];
        const BiPoly f = minimal_polynomial(p);
        const auto& q = branches[(i + 1) % branches.size()];
        const BiPoly g = minimal_polynomial(q);
        if (f == g) continue;
        CHECK(intersection_param(p, g) == intersection_resultant(f, g));
        const BiPoly r = approx_root(f, f.ydeg());
        CHECK(intersection_param(p, r) == intersection_resultant(f, r));
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("intersection is additive on products") {
    const auto branches = corpus(502, 30);
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const auto& p = branches[i];
        const BiPoly g1 = minimal_polynomial(branches[(i + 1) % branches.size()]);
        const BiPoly g2 = minimal_polynomial(branches[(i + 2) % branches.size()]);
        const Ord v1 = intersection_param(p, g1);
        const Ord v2 = intersection_param(p, g2);
        CHECK(intersection_param(p, g1 * g2) == v1 + v2);
    }
}

TEST_CASE("forward Noether evaluation") {
    const CharSeq cf = characteristic(BranchParam(2, yt("t^3")));
    CHECK(noether_forward(cf, Rat(2), 2) == Rat(7));
    CHECK(noether_forward(cf, Rat(3, 2), 1) == Rat(3));
    CHECK(noether_forward(cf, Rat(1, 2), 5) == Rat(5));  // below the first threshold: gx*b0*o
    CHECK_THROWS_AS(noether_forward(cf, Rat(0), 1), NonPositiveContact);
    CHECK_THROWS_AS(noether_forward(cf, Rat(-1, 2), 1), NonPositiveContact);
}

TEST_CASE("contact order of model pairs") {
    const BranchParam cusp(2, yt("t^3"));
    CHECK(contact_order(cusp, BranchParam(2, yt("t^3 + t^4"))).value == Rat(2));
    CHECK(contact_order(cusp, BranchParam(1, yt("0"))).value == Rat(3, 2));
    CHECK_THROWS_AS(contact_order(cusp, BranchParam(2, yt("t^3"))), SameBranch);
    // Same branch under a different primitive parametrization.
    CHECK_THROWS_AS(contact_order(cusp, BranchParam(2, yt("-1*t^3"))), SameBranch);
}

TEST_CASE("the worked pair: intersection 7, contact 2") {
    const BranchParam pf(2, yt("t^3"));
    const BranchParam pg(2, yt("t^3 + t^4"));
    CHECK(intersection_param(pf, minimal_polynomial(pg)) == Ord(7));
    CHECK(contact_order(pf, pg).value == Rat(2));
    CHECK(noether_forward(characteristic(pf), Rat(2), 2) == Rat(7));
}

TEST_CASE("contact symmetry") {
    const BranchParam cusp(2, yt("t^3"));
    CHECK(check_symmetry(cusp, BranchParam(2, yt("t^3 + t^4"))));
    CHECK(check_symmetry(cusp, BranchParam(1, yt("0"))));
    CHECK(check_symmetry(BranchParam(4, yt("t^6 + t^7")), cusp));
    const auto branches = corpus(503, 30);
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const auto& pf = branches[i];
        const auto& pg = branches[(i + 1) % branches.size()];
        if (minimal_polynomial(pf) == minimal_polynomial(pg)) continue;
        CHECK(check_symmetry(pf, pg));
    }
}

TEST_CASE("round-trip through the Noether formula") {
    const auto branches = corpus(504, 30);
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const auto& pf = branches[i];
        const auto& pg = branches[(i + 1) % branches.size()];
        if (minimal_polynomial(pf) == minimal_polynomial(pg)) continue;
        const Ord meas = intersection_param(pf, minimal_polynomial(pg));
        const ContactOrder o = contact_order(pf, pg);
        CHECK(noether_forward(characteristic(pf), o.value, pg.n) == Rat(meas.value()));
    }
}

TEST_CASE("threshold correspondence between contact and intersection ratio") {
    const auto branches = corpus(505, 30);
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const auto& pf = branches[i];
        const auto& pg = branches[(i + 1) % branches.size()];
        if (minimal_polynomial(pf) == minimal_polynomial(pg)) continue;
        const CharSeq cf = characteristic(pf);
        const Ord meas = intersection_param(pf, minimal_polynomial(pg));
        const Rat o = contact_order(pf, pg).value;
        const Rat rho(meas.value(), pg.n);
        for (int l = 1; l <= cf.h(); ++l) {
            const Rat bl(cf.b[static_cast<std::size_t>(l)], cf.b[0]);
            const Rat thr(cf.B[static_cast<std::size_t>(l) - 1] *
                              cf.beta[static_cast<std::size_t>(l)],
                          cf.beta[0]);
            CHECK((o <= bl) == (rho <= thr));
            CHECK((o == bl) == (rho == thr));
        }
    }
}

TEST_CASE("contact of the tower roots") {
    const BranchParam two(4, yt("t^6 + t^7"));
    CHECK(check_root_contact(two, 1));
    CHECK(check_root_contact(two, 2));
    const BranchParam cusp(2, yt("t^3"));
    CHECK(check_root_contact(cusp, 1));
    CHECK_THROWS_AS(check_root_contact(BranchParam(1, yt("t^2")), 1), IndexOutOfRange);
    for (const auto& p : corpus(506, 20)) {
        const CharSeq cf = characteristic(p);
        for (int k = 1; k <= cf.h(); ++k) CHECK(check_root_contact(p, k));
    }
}

}  // TEST_SUITE
