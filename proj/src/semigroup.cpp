#include "branchroots/semigroup.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "branchroots/errors.hpp"

namespace branchroots {

namespace {

void require_positive(std::span<const std::int64_t> gens) {
    if (gens.empty()) throw Error("empty generator list");
    for (std::int64_t g : gens)
        if (g <= 0) throw Error("generators must be positive");
}

// reach[i][v] = v is generated by gens[i..].
std::vector<std::vector<char>> suffix_tables(std::span<const std::int64_t> gens,
                                             std::int64_t m) {
    const std::size_t n = gens.size();
    std::vector<std::vector<char>> reach(n);
    const std::size_t size = static_cast<std::size_t>(m) + 1;
    for (std::size_t i = n; i-- > 0;) {
        reach[i].assign(size, 0);
        if (i == n - 1) {
            for (std::int64_t v = 0; v <= m; v += gens[i]) reach[i][static_cast<std::size_t>(v)] = 1;
        } else {
            for (std::int64_t v = 0; v <= m; ++v) {
                char ok = reach[i + 1][static_cast<std::size_t>(v)];
                if (!ok && v >= gens[i]) ok = reach[i][static_cast<std::size_t>(v - gens[i])];
                reach[i][static_cast<std::size_t>(v)] = ok;
            }
        }
    }
    return reach;
}

}  // namespace

std::optional<std::vector<std::int64_t>> represent(std::span<const std::int64_t> gens,
                                                   std::int64_t m) {
    require_positive(gens);
    if (m < 0) return std::nullopt;
    const auto reach = suffix_tables(gens, m);
    if (!reach[0][static_cast<std::size_t>(m)]) return std::nullopt;
    std::vector<std::int64_t> c(gens.size(), 0);
    std::int64_t rest = m;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
        std::int64_t k = 0;
        while (!reach[i + 1][static_cast<std::size_t>(rest - k * gens[i])]) ++k;
        c[i] = k;
        rest -= k * gens[i];
    }
    internal_check(rest % gens.back() == 0, "representation remainder divisible");
    c.back() = rest / gens.back();
    return c;
}

bool monoid_contains(std::span<const std::int64_t> gens, std::int64_t m) {
    return represent(gens, m).has_value();
}

std::int64_t conductor_of(std::span<const std::int64_t> gens) {
    require_positive(gens);
    std::int64_t g = 0;
    for (std::int64_t v : gens) g = std::gcd(g, v);
    if (g != 1) throw GcdNotOne("conductor requires gcd 1");
    const std::int64_t g0 = gens[0];
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 2;
    std::vector<std::int64_t> w(static_cast<std::size_t>(g0), inf);
    w[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::int64_t r = 0; r < g0; ++r) {
            if (w[static_cast<std::size_t>(r)] == inf) continue;
            for (std::int64_t gi : gens) {
                const std::int64_t nr = (r + gi) % g0;
                if (w[static_cast<std::size_t>(r)] + gi < w[static_cast<std::size_t>(nr)]) {
                    w[static_cast<std::size_t>(nr)] = w[static_cast<std::size_t>(r)] + gi;
                    changed = true;
                }
            }
        }
    }
    const std::int64_t wmax = *std::max_element(w.begin(), w.end());
    return wmax - g0 + 1;
}

Semigroup::Semigroup(std::vector<std::int64_t> gens) : gens_(std::move(gens)) {
    require_positive(gens_);
    std::int64_t g = 0;
    for (std::int64_t v : gens_) {
        std::int64_t ng = std::gcd(g, v);
        if (!B_.empty() && ng >= B_.back())
            throw InvalidSequence("generator gcd chain must strictly decrease");
        g = ng;
        B_.push_back(g);
    }
    if (B_.back() != 1) throw GcdNotOne("semigroup generators must have gcd 1");
    for (std::size_t k = 1; k < gens_.size(); ++k) {
        nk_.push_back(B_[k - 1] / B_[k]);
        internal_check(nk_.back() > 1, "quotient chain entries exceed 1");
    }
    for (std::size_t k = 2; k < gens_.size(); ++k)
        if (B_[k - 2] * gens_[k - 1] >= B_[k - 1] * gens_[k])
            throw InvalidSequence("B_{k-1} * beta_k must strictly increase");
    conductor_ = conductor_of(gens_);
    // Minimality: each generator is the least semigroup element outside the
    // monoid spanned by its predecessors.
    for (std::size_t k = 1; k < gens_.size(); ++k) {
        std::span<const std::int64_t> prefix(gens_.data(), k);
        if (monoid_contains(prefix, gens_[k]))
            throw InvalidSequence("generator lies in the preceding monoid");
        for (std::int64_t m = 1; m < gens_[k]; ++m)
            if (monoid_contains(gens_, m) && !monoid_contains(prefix, m))
                throw InvalidSequence("generator is not minimal outside the preceding monoid");
    }
}

std::optional<std::vector<std::int64_t>> Semigroup::contains(std::int64_t m) const {
    return represent(gens_, m);
}

std::vector<std::int64_t> canonical_generators(const std::vector<std::int64_t>& values,
                                               std::int64_t beta0) {
    if (beta0 <= 0) throw Error("designated first generator must be positive");
    std::vector<std::int64_t> vals;
    vals.push_back(beta0);
    for (std::int64_t v : values) {
        if (v < 0) throw Error("semigroup values must be nonnegative");
        if (v > 0) vals.push_back(v);
    }
    std::int64_t g = 0;
    for (std::int64_t v : vals) g = std::gcd(g, v);
    if (g != 1) throw GcdNotOne("values must generate a semigroup of gcd 1");
    const std::int64_t maxval = *std::max_element(vals.begin(), vals.end());
    std::vector<std::int64_t> gens{beta0};
    while (true) {
        bool covered = true;
        for (std::int64_t v : vals)
            if (!monoid_contains(gens, v)) {
                covered = false;
                break;
            }
        if (covered) return gens;
        std::int64_t next = -1;
        for (std::int64_t m = 1; m <= maxval; ++m) {
            if (monoid_contains(gens, m)) continue;
            if (monoid_contains(vals, m)) {
                next = m;
                break;
            }
        }
        internal_check(next > 0, "uncovered value yields a next generator");
        gens.push_back(next);
    }
}

bool am_inequality(const Semigroup& s, std::int64_t n) {
    if (s.h() < 1) throw HZero("inequality undefined for a smooth branch");
    const mpz_class lhs = mpz_class(static_cast<long>(s.B()[static_cast<std::size_t>(s.h()) - 1])) *
                          mpz_class(static_cast<long>(s.gens().back()));
    const mpz_class rhs = mpz_class(static_cast<long>(n)) * mpz_class(static_cast<long>(n));
    return lhs < rhs;
}

}  // namespace branchroots
