#pragma once

// Independent test oracles. Everything here recomputes expected values by a
// route different from the library's, so agreement is evidence rather than
// tautology.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "branchroots/bipoly.hpp"
#include "branchroots/errors.hpp"
#include "branchroots/rat.hpp"

namespace oracles {

using branchroots::BiPoly;
using branchroots::Rat;

// Exhaustive membership scan: is m a nonnegative combination of gens?
// Enumerates every coefficient vector with c_i <= m / gens_i.
inline bool brute_member(const std::vector<std::int64_t>& gens, std::int64_t m) {
    if (m == 0) return true;
    if (m < 0) return false;
    std::vector<std::int64_t> c(gens.size(), 0);
    while (true) {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) total += c[i] * gens[i];
        if (total == m) return true;
        std::size_t i = 0;
        while (i < c.size()) {
            if ((c[i] + 1) * gens[i] <= m) {
                ++c[i];
                break;
            }
            c[i] = 0;
            ++i;
        }
        if (i == c.size()) return false;
    }
}

// Conductor by scanning for the first run of gens[0]-many consecutive members.
inline std::int64_t brute_conductor(const std::vector<std::int64_t>& gens) {
    const std::int64_t g0 = *std::min_element(gens.begin(), gens.end());
    std::int64_t run = 0;
    for (std::int64_t m = 0;; ++m) {
        if (brute_member(gens, m)) {
            if (++run == g0) return m - g0 + 1;
        } else {
            run = 0;
        }
        if (m > 100000) throw branchroots::Error("oracle conductor scan ran away");
    }
}

// Canonical generator scan straight from the minimality definition.
inline std::vector<std::int64_t> brute_canonical(const std::vector<std::int64_t>& values,
                                                 std::int64_t beta0) {
    std::vector<std::int64_t> all(values);
    all.push_back(beta0);
    std::vector<std::int64_t> gens{beta0};
    const std::int64_t cap = *std::max_element(all.begin(), all.end());
    while (true) {
        std::int64_t next = -1;
        for (std::int64_t m = 1; m <= cap; ++m)
            if (brute_member(all, m) && !brute_member(gens, m)) {
                next = m;
                break;
            }
        if (next < 0) return gens;
        gens.push_back(next);
    }
}

// Direct weighted-sum beta formula evaluated in exact rationals.
inline std::vector<std::int64_t> beta_by_formula(const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> B(b.size());
    std::int64_t g = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        g = std::gcd(g, b[i]);
        B[i] = g;
    }
    std::vector<std::int64_t> beta(b.size());
    beta[0] = b[0];
    for (std::size_t k = 1; k < b.size(); ++k) {
        Rat acc(0);
        for (std::size_t i = 1; i + 1 <= k; ++i) acc += Rat(B[i - 1] - B[i]) * Rat(b[i]);
        const Rat v = Rat(b[k]) + acc / Rat(B[k - 1]);
        if (!v.is_integer()) throw branchroots::Error("oracle beta formula not integral");
        beta[k] = std::stoll(v.str());
    }
    return beta;
}

// Approximate root by undetermined coefficients: solve the top deg/d
// coefficients of r^d against g; the system is triangular because the
// unknown at level j enters the matched coefficient linearly with factor d.
inline BiPoly undetermined_root(const BiPoly& g, std::int64_t d) {
    using branchroots::Rat;
    using branchroots::UniPoly;
    using branchroots::Var;
    if (!g.is_monic() || d < 1 || g.ydeg() % d != 0)
        throw branchroots::Error("oracle root preconditions");
    const std::int64_t m = g.ydeg() / d;
    BiPoly r = BiPoly::y_pow(m);
    for (std::int64_t j = 1; j <= m; ++j) {
        const BiPoly p = r.pow(d);
        const UniPoly have = p.ycoeff(g.ydeg() - j);
        const UniPoly want = g.ycoeff(g.ydeg() - j);
        UniPoly fix = (want - have) * Rat(1, d);
        BiPoly term;
        term.set_ycoeff(m - j, std::move(fix));
        r += term;
    }
    return r;
}

}  // namespace oracles
