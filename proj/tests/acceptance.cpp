// Acceptance suite: every release gate in one binary, one pass/fail line
// per criterion, exit 0 iff all pass. All numeric checks are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "branchroots/approx.hpp"
#include "branchroots/contact.hpp"
#include "branchroots/corpus.hpp"
#include "branchroots/criterion.hpp"
#include "branchroots/parse.hpp"
#include "branchroots/resultant.hpp"
#include "branchroots/semigroup.hpp"
#include "branchroots/verify_suites.hpp"

using namespace branchroots;

namespace {

// The repo-pinned corpus: seed and shape shared by every corpus-based gate.
constexpr std::uint64_t kSeed = 7;
constexpr int kCount = 200;

CorpusSpec pinned_corpus() {
    CorpusSpec spec;
    spec.seed = kSeed;
    spec.count = kCount;
    spec.max_n = 8;
    spec.max_exponent = 24;
    spec.max_h = 3;
    return spec;
}

UniPoly yt(const char* s) { return parse_unipoly(s, Var::t); }
BiPoly bp(const char* s) { return parse_bipoly(s); }

struct Gate {
    std::string name;
    double limit_ms;  // <= 0 means no runtime bound
    std::function<bool(std::string&)> check;
};

bool criterion_cusp(std::string& detail) {
    const BranchParam p(2, yt("t^3"));
    const CharSeq cf = characteristic(p);
    const BiPoly f = minimal_polynomial(p);
    const BiPoly root = approx_root(f, 2);
    bool ok = f == bp("y^2 - x^3");
    ok = ok && cf.beta == std::vector<std::int64_t>{2, 3};
    ok = ok && root == bp("y");
    ok = ok && intersection_param(p, root) == Ord(3);
    ok = ok && intersection_resultant(f, root) == Ord(3);
    detail = "minpoly=" + f.str() + " root=" + root.str();
    return ok;
}

bool criterion_two_pair(std::string& detail) {
    const BranchParam p(4, yt("t^6 + t^7"));
    const CharSeq cf = characteristic(p);
    const BiPoly f = minimal_polynomial(p);
    bool ok = cf.beta == std::vector<std::int64_t>{4, 6, 13};
    const BiPoly r4 = approx_root(f, 4);
    const BiPoly r2 = approx_root(f, 2);
    ok = ok && intersection_param(p, r4) == Ord(6);
    ok = ok && intersection_resultant(f, r4) == Ord(6);
    ok = ok && intersection_param(p, r2) == Ord(13);
    ok = ok && intersection_resultant(f, r2) == Ord(13);
    ok = ok && cf.B[0] * cf.beta[1] < cf.B[1] * cf.beta[2];  // 24 < 26
    detail = "beta=(4,6,13) roots meet in 6 and 13 by both routes";
    return ok;
}

bool criterion_am_roots_suite(std::string& detail) {
    std::ostringstream sink;
    const bool ok = run_suite("thm14", pinned_corpus(), sink);
    detail = std::to_string(kCount) + " branches";
    return ok;
}

bool criterion_dual_oracle(std::string& detail) {
    const auto corpus = gen_corpus(pinned_corpus());
    int pairs = 0, additive = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& p = corpus[i];
        const BiPoly f = minimal_polynomial(p);
        const BiPoly g = minimal_polynomial(corpus[(i + 1) % corpus.size()]);
        if (f == g) continue;
        if (intersection_param(p, g) != intersection_resultant(f, g)) return false;
        ++pairs;
        // every branch also against a non-minimal test polynomial
        const BiPoly psi = bp("y - x^2") * BiPoly::monomial(Rat(1), 1, 0) + bp("x^5");
        if (intersection_param(p, psi) != intersection_resultant(f, psi)) return false;
        ++pairs;
        if (additive < 110) {
            const BiPoly h = minimal_polynomial(corpus[(i + 2) % corpus.size()]);
            const Ord sum = intersection_param(p, g) + intersection_param(p, h);
            if (intersection_param(p, g * h) != sum) return false;
            if (additive < 15 && h != f && intersection_resultant(f, g * h) != sum) return false;
            ++additive;
        }
    }
    detail = std::to_string(pairs) + " pairs, " + std::to_string(additive) + " additivity checks";
    return pairs >= 200 && additive >= 100;
}

bool criterion_nested(std::string& detail) {
    const auto corpus = gen_corpus(pinned_corpus());
    int checks = 0;
    for (const auto& p : corpus) {
        const BiPoly f = minimal_polynomial(p);
        for (std::int64_t d = 1; d <= p.n; ++d)
            for (std::int64_t e = 1; d * e <= p.n; ++e) {
                if (p.n % (d * e) != 0) continue;
                if (!check_nested(f, d, e)) return false;
                ++checks;
            }
    }
    detail = std::to_string(checks) + " factorizations";
    return checks > 0;
}

bool criterion_noether(std::string& detail) {
    const auto corpus = gen_corpus(pinned_corpus());
    int pairs = 0;
    for (std::size_t i = 0; i < corpus.size() && pairs < 120; ++i) {
        const auto& pf = corpus[i];
        const auto& pg = corpus[(i + 1) % corpus.size()];
        if (minimal_polynomial(pf) == minimal_polynomial(pg)) continue;
        const Ord meas = intersection_param(pf, minimal_polynomial(pg));
        const ContactOrder o = contact_order(pf, pg);
        const CharSeq cf = characteristic(pf);
        if (noether_forward(cf, o.value, pg.n) != Rat(meas.value())) return false;
        const Rat rho(meas.value(), pg.n);
        for (int l = 1; l <= cf.h(); ++l) {
            const Rat bl(cf.b[static_cast<std::size_t>(l)], cf.b[0]);
            const Rat thr(cf.B[static_cast<std::size_t>(l) - 1] *
                              cf.beta[static_cast<std::size_t>(l)],
                          cf.beta[0]);
            if ((o.value <= bl) != (rho <= thr)) return false;
            if ((o.value == bl) != (rho == thr)) return false;
        }
        if (!check_symmetry(pf, pg)) return false;
        ++pairs;
    }
    // the worked pair
    const BranchParam pf(2, yt("t^3"));
    const BranchParam pg(2, yt("t^3 + t^4"));
    if (intersection_param(pf, minimal_polynomial(pg)) != Ord(7)) return false;
    if (contact_order(pf, pg).value != Rat(2)) return false;
    detail = std::to_string(pairs) + " pairs plus the worked pair (7, contact 2)";
    return pairs >= 100;
}

bool criterion_membership(std::string& detail) {
    const auto corpus = gen_corpus(pinned_corpus());
    Rng rng(kSeed ^ 0xabcdefULL);
    int checks = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& p = corpus[i];
        const CharSeq cf = characteristic(p);
        for (int k = 0; k <= cf.h(); ++k) {
            const std::int64_t cap = p.n / cf.B[static_cast<std::size_t>(k)] - 1;
            BiPoly psi;
            const std::int64_t ydeg = cap < 0 ? 0 : rng.uniform(0, cap);
            for (std::int64_t ye = 0; ye <= ydeg; ++ye)
                psi += BiPoly::monomial(rng.small_rat(), rng.uniform(0, 10), ye);
            if (psi.is_zero() || (cap >= 0 && psi.ydeg() > cap)) continue;
            const VerifyOutcome o = verify_membership(p, psi, k);
            if (o.status == VerifyStatus::failed) return false;
            ++checks;
        }
    }
    detail = std::to_string(checks) + " membership checks";
    return checks >= 100;
}

bool criterion_ground_truth(std::string& detail) {
    CorpusSpec spec = pinned_corpus();
    spec.count = 100;
    int irr = 0, red = 0;
    for (const auto& p : gen_corpus(spec)) {
        const IrreducibilityVerdict v = irreducibility_test(minimal_polynomial(p));
        if (v.status != IrredStatus::irreducible) return false;
        if (!v.semigroup || v.semigroup->gens() != characteristic(p).beta) return false;
        ++irr;
    }
    CorpusSpec pspec = pinned_corpus();
    pspec.seed = kSeed + 1;
    pspec.count = 100;
    for (const auto& phi : gen_products(pspec)) {
        if (irreducibility_test(phi).status != IrredStatus::reducible) return false;
        ++red;
    }
    detail = std::to_string(irr) + " irreducible + " + std::to_string(red) +
             " reducible, zero misclassifications";
    return irr == 100 && red == 100;
}

bool criterion_degree_inequality(std::string& detail) {
    const Semigroup s({3, 2});
    const bool ok = am_inequality(s, 3);
    detail = "B_0*beta_1 = 6 < 9 = n^2";
    return ok;
}

}  // namespace

int main() {
    const std::vector<Gate> gates = {
        {"1 cusp fixture", 1000.0, criterion_cusp},
        {"2 two-pair fixture", 2000.0, criterion_two_pair},
        {"3 approximate-root identities over the pinned corpus", 60000.0,
         criterion_am_roots_suite},
        {"4 dual intersection oracles with additivity", 0.0, criterion_dual_oracle},
        {"5 nested roots for every factorization", 0.0, criterion_nested},
        {"6 Noether round-trip, thresholds, symmetry", 0.0, criterion_noether},
        {"7 membership of intersection numbers", 0.0, criterion_membership},
        {"8 irreducibility ground truth 100+100", 0.0, criterion_ground_truth},
        {"9 degree-form inequality fixture", 0.0, criterion_degree_inequality},
    };
    int failures = 0;
    for (const auto& gate : gates) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = gate.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
            ok = false;
        }
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        if (gate.limit_ms > 0 && ms > gate.limit_ms) {
            ok = false;
            detail += " [over time limit]";
        }
        std::printf("[%s] criterion %s (%.1f ms) %s\n", ok ? "PASS" : "FAIL", gate.name.c_str(),
                    ms, detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
