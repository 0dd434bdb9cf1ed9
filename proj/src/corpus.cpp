#include "branchroots/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "branchroots/errors.hpp"

namespace branchroots {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw Error("empty sample range");
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % range);
}

Rat Rng::small_rat(bool allow_zero) {
    std::int64_t num = uniform(-9, 9);
    while (!allow_zero && num == 0) num = uniform(-9, 9);
    const std::int64_t den = uniform(1, 4);
    return Rat(num, den);
}

namespace {

// Strictly decreasing divisor chain n = B_0 > B_1 > ... > B_h = 1.
std::vector<std::int64_t> divisor_chain(Rng& rng, std::int64_t n, int h) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::int64_t> chain{n};
        bool ok = true;
        for (int k = 1; k < h; ++k) {
            std::vector<std::int64_t> choices;
            for (std::int64_t d = 2; d < chain.back(); ++d)
                if (chain.back() % d == 0) {
                    // d must still admit a chain of length h - k below it
                    std::int64_t rest = d;
                    int steps = 0;
                    while (rest > 1) {
                        rest /= [&] {
                            for (std::int64_t p = 2; p <= rest; ++p)
                                if (rest % p == 0) return p;
                            return rest;
                        }();
                        ++steps;
                    }
                    if (steps >= h - k) choices.push_back(d);
                }
            if (choices.empty()) {
                ok = false;
                break;
            }
            chain.push_back(choices[static_cast<std::size_t>(
                rng.uniform(0, static_cast<std::int64_t>(choices.size()) - 1))]);
        }
        if (!ok) continue;
        chain.push_back(1);
        return chain;
    }
    throw Error("no divisor chain of requested length");
}

// Candidates e with gcd(prev_gcd, e) == target, lo <= e <= hi.
std::vector<std::int64_t> exponent_choices(std::int64_t prev_gcd, std::int64_t target,
                                           std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t e = lo; e <= hi; ++e)
        if (std::gcd(prev_gcd, e) == target) out.push_back(e);
    return out;
}

BranchParam gen_branch(Rng& rng, int h, const CorpusSpec& spec) {
    if (h == 0) {
        UniPoly y(Var::t);
        if (!rng.chance(1, 6)) {  // y = 0 now and then
            const int terms = static_cast<int>(rng.uniform(1, 3));
            for (int i = 0; i < terms; ++i)
                y.set_coeff(rng.uniform(1, spec.max_exponent), rng.small_rat());
        }
        return BranchParam(1, y);
    }
    for (int attempt = 0; attempt < 256; ++attempt) {
        // Order first: it must factor into h proper steps.
        std::vector<std::int64_t> ns;
        for (std::int64_t n = 2; n <= spec.max_n; ++n) {
            std::int64_t rest = n;
            int steps = 0;
            while (rest > 1) {
                for (std::int64_t p = 2; p <= rest; ++p)
                    if (rest % p == 0) {
                        rest /= p;
                        break;
                    }
                ++steps;
            }
            if (steps >= h) ns.push_back(n);
        }
        if (ns.empty()) throw Error("no admissible order for requested h");
        const std::int64_t n =
            ns[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ns.size()) - 1))];
        const auto chain = divisor_chain(rng, n, h);
        // Characteristic exponents with the prescribed gcd chain.
        std::vector<std::int64_t> exps;
        bool ok = true;
        for (int k = 1; k <= h; ++k) {
            const std::int64_t lo = exps.empty() ? 1 : exps.back() + 1;
            auto choices = exponent_choices(chain[static_cast<std::size_t>(k) - 1],
                                            chain[static_cast<std::size_t>(k)], lo,
                                            spec.max_exponent);
            if (choices.empty()) {
                ok = false;
                break;
            }
            // Bias small so later stages keep room.
            const std::int64_t pick = std::min<std::int64_t>(
                rng.uniform(0, static_cast<std::int64_t>(choices.size()) - 1),
                rng.uniform(0, static_cast<std::int64_t>(choices.size()) - 1));
            exps.push_back(choices[static_cast<std::size_t>(pick)]);
        }
        if (!ok) continue;
        UniPoly y(Var::t);
        for (std::int64_t e : exps) y.set_coeff(e, rng.small_rat());
        // Noise: extra support restricted to multiples of the current gcd, so
        // the characteristic sequence stays exactly the constructed one.
        for (int k = 0; k <= h; ++k) {
            const std::int64_t g = chain[static_cast<std::size_t>(k)];
            const std::int64_t lo = k == 0 ? 1 : exps[static_cast<std::size_t>(k) - 1] + 1;
            const std::int64_t hi = k == h ? spec.max_exponent : exps[static_cast<std::size_t>(k)] - 1;
            const int extra = static_cast<int>(rng.uniform(0, 2));
            for (int i = 0; i < extra; ++i) {
                std::vector<std::int64_t> pos;
                for (std::int64_t e = lo; e <= hi; ++e)
                    if (e % g == 0 && y.coeff(e).is_zero()) pos.push_back(e);
                if (pos.empty()) break;
                const std::int64_t e = pos[static_cast<std::size_t>(
                    rng.uniform(0, static_cast<std::int64_t>(pos.size()) - 1))];
                y.set_coeff(e, rng.small_rat());
            }
        }
        BranchParam p(n, y);
        internal_check(p.is_primitive(), "constructed parametrization is primitive");
        const CharSeq cf = characteristic(p);
        internal_check(cf.h() == h, "constructed parametrization has the requested h");
        std::vector<std::int64_t> expect{n};
        expect.insert(expect.end(), exps.begin(), exps.end());
        internal_check(cf.b == expect, "constructed parametrization has the planned exponents");
        return p;
    }
    throw Error("branch generation did not converge");
}

}  // namespace

std::vector<BranchParam> gen_corpus(const CorpusSpec& spec) {
    Rng rng(spec.seed);
    std::vector<BranchParam> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        // Fixed coverage pattern instead of leaving h to chance.
        const int r = i % 10;
        int h = r < 3 ? 1 : r < 6 ? 2 : r < 9 ? 3 : 0;
        h = std::min(h, spec.max_h);
        if (h == 3 && spec.max_n < 8) h = 2;  // shortest order with three steps is 8
        if (h == 2 && spec.max_n < 4) h = 1;
        out.push_back(gen_branch(rng, h, spec));
    }
    return out;
}

std::vector<BiPoly> gen_products(const CorpusSpec& spec, int max_factors,
                                 std::int64_t max_total_deg) {
    CorpusSpec factors_spec = spec;
    factors_spec.seed = spec.seed ^ 0x9e3779b97f4a7c15ULL;
    factors_spec.count = std::max(spec.count, 24);
    const auto branches = gen_corpus(factors_spec);
    Rng rng(spec.seed + 1);
    std::vector<BiPoly> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    while (static_cast<int>(out.size()) < spec.count) {
        const int nf = static_cast<int>(rng.uniform(2, max_factors));
        std::vector<BiPoly> polys;
        std::int64_t total = 0;
        for (int i = 0; i < 4 * nf && static_cast<int>(polys.size()) < nf; ++i) {
            const auto& p = branches[static_cast<std::size_t>(
                rng.uniform(0, static_cast<std::int64_t>(branches.size()) - 1))];
            if (total + p.n > max_total_deg) continue;
            BiPoly f = minimal_polynomial(p);
            bool dup = false;
            for (const auto& q : polys) dup = dup || q == f;
            if (dup) continue;
            total += p.n;
            polys.push_back(std::move(f));
        }
        if (polys.size() < 2) continue;
        BiPoly prod = polys[0];
        for (std::size_t i = 1; i < polys.size(); ++i) prod *= polys[i];
        out.push_back(std::move(prod));
    }
    return out;
}

}  // namespace branchroots
