#include "branchroots/branch.hpp"

#include <numeric>
#include <string>

#include "branchroots/errors.hpp"
#include "branchroots/resultant.hpp"

namespace branchroots {

BranchParam::BranchParam(std::int64_t n_, UniPoly y_) : n(n_), y(std::move(y_)) {
    if (n < 1) throw Error("parametrization order must be positive");
    if (!y.is_zero() && y.var() != Var::t) throw Error("parametrization curve must be in t");
    if (!y.constant_term().is_zero()) throw Error("parametrization curve must vanish at t = 0");
}

bool BranchParam::is_primitive() const {
    std::int64_t g = n;
    for (std::int64_t e : y.support()) g = std::gcd(g, e);
    return g == 1;
}

CharSeq characteristic(const BranchParam& p) {
    if (!p.is_primitive()) throw NotPrimitive("characteristic of a non-primitive parametrization");
    CharSeq cf;
    cf.b.push_back(p.n);
    cf.B.push_back(p.n);
    const auto supp = p.support();
    std::int64_t g = p.n;
    while (g > 1) {
        bool found = false;
        for (std::int64_t e : supp) {
            if (std::gcd(g, e) < g) {
                cf.b.push_back(e);
                g = std::gcd(g, e);
                cf.B.push_back(g);
                found = true;
                break;
            }
        }
        internal_check(found, "gcd chain of a primitive parametrization must reach 1");
    }
    const int h = cf.h();
    cf.beta = cf.b;
    for (int k = 1; k <= h; ++k) cf.nk.push_back(cf.B[k - 1] / cf.B[k]);
    // beta_1 = b_1, then beta_{k+1} = n_k beta_k + b_{k+1} - b_k.
    for (int k = 2; k <= h; ++k)
        cf.beta[k] = cf.nk[k - 2] * cf.beta[k - 1] + cf.b[k] - cf.b[k - 1];
    // Cross-check against the direct weighted-sum expression.
    for (int k = 1; k <= h; ++k) {
        std::int64_t acc = 0;
        for (int i = 1; i <= k - 1; ++i) acc += (cf.B[i - 1] - cf.B[i]) * cf.b[i];
        internal_check(acc % cf.B[k - 1] == 0, "beta weighted sum not divisible");
        internal_check(cf.beta[k] == cf.b[k] + acc / cf.B[k - 1], "beta recurrence mismatch");
    }
    return cf;
}

std::vector<std::int64_t> beta_to_b(const std::vector<std::int64_t>& beta) {
    if (beta.empty()) throw InvalidSequence("empty generator sequence");
    std::vector<std::int64_t> B;
    std::int64_t g = 0;
    for (std::int64_t v : beta) {
        if (v <= 0) throw InvalidSequence("generators must be positive");
        std::int64_t ng = std::gcd(g, v);
        if (!B.empty() && ng >= B.back())
            throw InvalidSequence("gcd chain must strictly decrease");
        g = ng;
        B.push_back(g);
    }
    if (B.back() != 1) throw InvalidSequence("gcd chain must reach 1");
    const int h = static_cast<int>(beta.size()) - 1;
    std::vector<std::int64_t> b(beta.size());
    for (int k = 0; k <= h; ++k) {
        std::int64_t acc = beta[k];
        for (int i = 1; i <= k - 1; ++i) acc -= (B[i - 1] / B[i] - 1) * beta[i];
        b[k] = acc;
    }
    for (int k = 1; k < h; ++k)
        if (b[k + 1] <= b[k]) throw InvalidSequence("exponent sequence must increase");
    for (int k = 0; k <= h; ++k)
        if (b[k] <= 0) throw InvalidSequence("exponent sequence must stay positive");
    return b;
}

BranchParam truncate(const BranchParam& p, int k) {
    const CharSeq cf = characteristic(p);
    if (k < 0 || k > cf.h())
        throw IndexOutOfRange("truncation index " + std::to_string(k) + " outside 0.." +
                              std::to_string(cf.h()));
    const std::int64_t cutoff =
        k == cf.h() ? -1 : cf.b[static_cast<std::size_t>(k) + 1];  // -1 means "no cutoff"
    std::int64_t g = p.n;
    for (std::int64_t e : p.support())
        if (cutoff < 0 || e < cutoff) g = std::gcd(g, e);
    internal_check(g == cf.B[static_cast<std::size_t>(k)], "truncation gcd is B_k");
    UniPoly yk(Var::t);
    for (std::int64_t e : p.support())
        if (cutoff < 0 || e < cutoff) yk.set_coeff(e / g, p.y.coeff(e));
    return BranchParam(p.n / g, yk);
}

BiPoly minimal_polynomial(const BranchParam& p) {
    if (!p.is_primitive())
        throw NotPrimitive("minimal polynomial of a non-primitive parametrization");
    // Eliminate s from s^n - x and y - y(s).
    std::vector<BiPoly> a(static_cast<std::size_t>(p.n) + 1);
    a[0] = -BiPoly::monomial(Rat(1), 1, 0);
    a[static_cast<std::size_t>(p.n)] = BiPoly::constant(Rat(1));
    std::vector<BiPoly> b(static_cast<std::size_t>(std::max<std::int64_t>(p.y.deg(), 0)) + 1);
    b[0] = BiPoly::y_pow(1);
    for (std::int64_t e = 1; e <= p.y.deg(); ++e)
        b[static_cast<std::size_t>(e)] = BiPoly::constant(-p.y.coeff(e));
    BiPoly f = resultant_elim(a, b);
    internal_check(f.ydeg() == p.n, "minimal polynomial has y-degree n");
    internal_check(f.is_distinguished(), "minimal polynomial is distinguished");
    internal_check(substitute_param(f, p.n, p.y).is_zero(),
                   "minimal polynomial vanishes along its branch");
    return f;
}

BiPoly fk_polynomial(const BranchParam& p, int k) {
    return minimal_polynomial(truncate(p, k));
}

}  // namespace branchroots
