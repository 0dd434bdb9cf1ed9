#include "branchroots/resultant.hpp"

namespace branchroots {

namespace {

elim::Poly<Rat> to_vec(const UniPoly& p) {
    elim::Poly<Rat> v;
    v.reserve(static_cast<std::size_t>(p.deg() + 1));
    for (std::int64_t i = 0; i <= p.deg(); ++i) v.push_back(p.coeff(i));
    return v;
}

elim::Poly<UniPoly> to_vec_y(const BiPoly& p) {
    elim::Poly<UniPoly> v;
    v.reserve(static_cast<std::size_t>(p.ydeg() + 1));
    for (std::int64_t i = 0; i <= p.ydeg(); ++i) v.push_back(p.ycoeff(i));
    return v;
}

void check_same_var(const UniPoly& a, const UniPoly& b) {
    if (!a.is_zero() && !b.is_zero() && a.var() != b.var())
        throw Error("resultant of polynomials in different variables");
}

// Integer arithmetic is far cheaper than canonicalized rationals, and small
// numbers beat big ones, so the elimination kernels run on primitive
// integer-coefficient inputs; Res(c*a, b) = c^{deg b} Res(a, b) restores the
// exact value afterwards.
struct ContentAcc {
    mpz_class den{1};  // lcm of denominators
    mpz_class num{0};  // gcd of numerators

    void fold(const Rat& c) {
        if (c.is_zero()) return;
        den = lcm(den, c.den());
        num = gcd(num, c.num());
    }
    // Scale turning the polynomial primitive with integer coefficients.
    Rat scale() const {
        if (num == 0) return Rat(1);
        return Rat(mpq_class(den, abs(num)));
    }
};

void fold_content(ContentAcc& acc, const Rat& c) { acc.fold(c); }

void fold_content(ContentAcc& acc, const UniPoly& p) {
    for (std::int64_t e = 0; e <= p.deg(); ++e) acc.fold(p.coeff(e));
}

void fold_content(ContentAcc& acc, const BiPoly& p) {
    for (std::int64_t ye = 0; ye <= p.ydeg(); ++ye) fold_content(acc, p.ycoeff(ye));
}

template <class R>
Rat make_primitive(elim::Poly<R>& p) {
    ContentAcc acc;
    for (const auto& c : p) fold_content(acc, c);
    const Rat s = acc.scale();
    if (!s.is_one()) {
        for (auto& c : p) c = c * s;
    }
    return s;
}

Rat rat_pow(const Rat& base, std::int64_t k) {
    Rat r(1);
    for (std::int64_t i = 0; i < k; ++i) r *= base;
    return r;
}

// Scale both inputs to integer coefficients, run the kernel, undo the
// scaling: Res(sa*a, sb*b) = sa^{deg b} sb^{deg a} Res(a, b).
template <class R, class Kernel>
R scaled_resultant(elim::Poly<R> a, elim::Poly<R> b, Kernel kernel) {
    elim::trim(a);
    elim::trim(b);
    if (a.empty() || b.empty()) throw ZeroInput("resultant of zero polynomial");
    const std::int64_t da = elim::deg(a);
    const std::int64_t db = elim::deg(b);
    const Rat sa = make_primitive(a);
    const Rat sb = make_primitive(b);
    R res = kernel(std::move(a), std::move(b));
    const Rat undo = rat_pow(Rat(1) / sa, db) * rat_pow(Rat(1) / sb, da);
    if (!undo.is_one()) res = res * undo;
    return res;
}

}  // namespace

Rat resultant(const UniPoly& a, const UniPoly& b) {
    check_same_var(a, b);
    return scaled_resultant(to_vec(a), to_vec(b), elim::resultant_prs<Rat>);
}

Rat resultant_sylvester(const UniPoly& a, const UniPoly& b) {
    check_same_var(a, b);
    return scaled_resultant(to_vec(a), to_vec(b), elim::resultant_sylvester<Rat>);
}

UniPoly resultant_y(const BiPoly& a, const BiPoly& b) {
    return scaled_resultant(to_vec_y(a), to_vec_y(b), elim::resultant_prs<UniPoly>);
}

UniPoly resultant_y_sylvester(const BiPoly& a, const BiPoly& b) {
    return scaled_resultant(to_vec_y(a), to_vec_y(b), elim::resultant_sylvester<UniPoly>);
}

BiPoly resultant_elim(const std::vector<BiPoly>& a, const std::vector<BiPoly>& b) {
    return scaled_resultant(a, b, elim::resultant_prs<BiPoly>);
}

}  // namespace branchroots
