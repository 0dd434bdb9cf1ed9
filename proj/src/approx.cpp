#include "branchroots/approx.hpp"

#include "branchroots/errors.hpp"

namespace branchroots {

BiPoly HadicExpansion::reconstruct() const {
    BiPoly g = base.pow(degree);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        g += coeffs[i] * base.pow(degree - 1 - static_cast<std::int64_t>(i));
    return g;
}

HadicExpansion hadic(const BiPoly& g, const BiPoly& h) {
    if (!g.is_monic() || !h.is_monic()) throw NonMonic("expansion requires monic polynomials");
    if (h.ydeg() < 1 || g.ydeg() < h.ydeg() || g.ydeg() % h.ydeg() != 0)
        throw DegreeMismatch("base degree must divide the expanded degree");
    const std::int64_t d = g.ydeg() / h.ydeg();
    HadicExpansion ex;
    ex.base = h;
    ex.degree = d;
    ex.coeffs.assign(static_cast<std::size_t>(d), BiPoly());
    BiPoly rest = g;
    for (std::int64_t i = 0; i < d; ++i) {
        auto [q, r] = quot_rem_y(rest, h);
        ex.coeffs[static_cast<std::size_t>(d - 1 - i)] = std::move(r);  // digit of h^i
        rest = std::move(q);
    }
    internal_check(rest == BiPoly::constant(Rat(1)), "leading digit of a monic expansion is 1");
    return ex;
}

BiPoly tschirnhausen(const BiPoly& g, const BiPoly& h) {
    HadicExpansion ex = hadic(g, h);
    return h + ex.coeffs[0] * Rat(1, ex.degree);
}

BiPoly approx_root(const BiPoly& g, std::int64_t d) {
    if (d < 1) throw DegreeMismatch("root order must be positive");
    if (!g.is_monic()) throw NonMonic("approximate root of a non-monic polynomial");
    if (g.ydeg() % d != 0) throw DegreeMismatch("root order must divide the y-degree");
    const std::int64_t m = g.ydeg() / d;
    if (d == 1) return g;
    BiPoly h = BiPoly::y_pow(m);
    for (std::int64_t i = 0; i < m; ++i) {
        HadicExpansion ex = hadic(g, h);
        if (ex.coeffs[0].is_zero()) break;  // fixed point reached
        h += ex.coeffs[0] * Rat(1, d);
    }
    const BiPoly diff = g - h.pow(d);
    internal_check(diff.is_zero() || diff.ydeg() < g.ydeg() - m,
                   "approximate root satisfies its degree bound");
    return h;
}

bool check_nested(const BiPoly& g, std::int64_t d, std::int64_t e) {
    if (d < 1 || e < 1 || g.is_zero() || g.ydeg() % (d * e) != 0)
        throw DegreeMismatch("product of root orders must divide the y-degree");
    return approx_root(approx_root(g, d), e) == approx_root(g, d * e);
}

}  // namespace branchroots
