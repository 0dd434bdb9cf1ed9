#include "branchroots/contact.hpp"

#include <string>

#include "branchroots/approx.hpp"
#include "branchroots/errors.hpp"
#include "branchroots/resultant.hpp"

namespace branchroots {

Ord intersection_param(const BranchParam& p, const BiPoly& g) {
    return substitute_param(g, p.n, p.y).ord();
}

Ord intersection_resultant(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero()) return Ord::infinity();
    // Degenerate y-degrees admit direct evaluation: Res(f, c) = c^deg f, and
    // for a linear g = b1*y + b0 the resultant is the numerator of
    // f(x, -b0/b1) times a sign that cannot move the order.
    if (g.ydeg() == 0) {
        const Ord c = g.ycoeff(0).ord();
        return c.is_finite() ? Ord(f.ydeg() * c.value()) : Ord::infinity();
    }
    if (f.ydeg() == 0) {
        const Ord c = f.ycoeff(0).ord();
        return c.is_finite() ? Ord(g.ydeg() * c.value()) : Ord::infinity();
    }
    if (g.ydeg() == 1) {
        const UniPoly b0 = g.ycoeff(0);
        const UniPoly b1 = g.ycoeff(1);
        const std::int64_t m = f.ydeg();
        UniPoly acc = f.ycoeff(m);
        for (std::int64_t k = m - 1; k >= 0; --k)
            acc = acc * -b0 + f.ycoeff(k) * b1.pow(m - k);
        return acc.ord();
    }
    const UniPoly r = resultant_y(f, g);
    return r.ord();
}

namespace {

// Least k >= 1 with o <= b_k / b_0, or h + 1 when o exceeds every threshold.
int noether_piece(const CharSeq& cf, const Rat& o) {
    const int h = cf.h();
    for (int k = 1; k <= h; ++k)
        if (o <= Rat(cf.b[static_cast<std::size_t>(k)], cf.b[0])) return k;
    return h + 1;
}

Rat noether_prefix_sum(const CharSeq& cf, int k) {
    Rat sum(0);
    for (int i = 1; i <= k - 1; ++i)
        sum += Rat(cf.B[static_cast<std::size_t>(i) - 1] - cf.B[static_cast<std::size_t>(i)]) *
               Rat(cf.b[static_cast<std::size_t>(i)], cf.b[0]);
    return sum;
}

}  // namespace

Rat noether_forward(const CharSeq& cf, const Rat& o, std::int64_t gx) {
    if (!(Rat(0) < o)) throw NonPositiveContact("contact order must be positive");
    if (gx < 1) throw Error("x-order must be positive");
    const int k = noether_piece(cf, o);
    Rat v = noether_prefix_sum(cf, k) + Rat(cf.B[static_cast<std::size_t>(k) - 1]) * o;
    return Rat(gx) * v;
}

ContactOrder contact_order(const BranchParam& pf, const BranchParam& pg) {
    const BiPoly gpoly = minimal_polynomial(pg);
    const Ord meas = intersection_param(pf, gpoly);
    if (!meas.is_finite()) throw SameBranch("contact order of a branch with itself");
    const CharSeq cf = characteristic(pf);
    const Rat rho = Rat(meas.value(), pg.n);
    const int h = cf.h();
    int k = h + 1;
    for (int l = 1; l <= h; ++l) {
        const Rat threshold = Rat(cf.B[static_cast<std::size_t>(l) - 1] *
                                      cf.beta[static_cast<std::size_t>(l)],
                                  cf.beta[0]);
        if (rho <= threshold) {
            k = l;
            break;
        }
    }
    const Rat o =
        (rho - noether_prefix_sum(cf, k)) / Rat(cf.B[static_cast<std::size_t>(k) - 1]);
    internal_check(noether_forward(cf, o, pg.n) == Rat(meas.value()),
                   "contact inversion reproduces the measured intersection");
    return ContactOrder{o};
}

bool check_symmetry(const BranchParam& pf, const BranchParam& pg) {
    const Ord meas = intersection_param(pf, minimal_polynomial(pg));
    if (!meas.is_finite()) throw SameBranch("symmetry check of a branch with itself");
    const ContactOrder ofg = contact_order(pf, pg);
    const ContactOrder ogf = contact_order(pg, pf);
    if (!(ofg == ogf)) return false;
    const Rat measured(meas.value());
    const CharSeq cg = characteristic(pg);
    return noether_forward(cg, ogf.value, pf.n) == measured;
}

bool check_root_contact(const BranchParam& pf, int k) {
    const CharSeq cf = characteristic(pf);
    if (k < 1 || k > cf.h())
        throw IndexOutOfRange("root index " + std::to_string(k) + " outside 1.." +
                              std::to_string(cf.h()));
    const BiPoly f = minimal_polynomial(pf);
    const BiPoly r = approx_root(f, cf.B[static_cast<std::size_t>(k) - 1]);
    const Ord num = intersection_param(pf, r);
    const Ord den = r.x_order();
    if (!num.is_finite() || !den.is_finite()) return false;
    const Rat lhs = Rat(num.value(), den.value());
    const Rat rhs = Rat(cf.B[static_cast<std::size_t>(k) - 1] *
                            cf.beta[static_cast<std::size_t>(k)],
                        cf.beta[0]);
    return lhs == rhs;
}

}  // namespace branchroots
