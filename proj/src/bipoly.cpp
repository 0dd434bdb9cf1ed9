#include "branchroots/bipoly.hpp"

#include <ostream>
#include <sstream>

#include "branchroots/budget.hpp"
#include "branchroots/errors.hpp"

namespace branchroots {

void BiPoly::trim() {
    while (!yc_.empty() && yc_.back().is_zero()) yc_.pop_back();
}

BiPoly BiPoly::constant(Rat c) {
    BiPoly p;
    if (!c.is_zero()) p.yc_.push_back(UniPoly::constant(Var::x, std::move(c)));
    return p;
}

BiPoly BiPoly::xpoly(const UniPoly& q) {
    if (!q.is_zero() && q.var() != Var::x) throw Error("x-coefficient expected");
    BiPoly p;
    if (!q.is_zero()) p.yc_.push_back(q);
    return p;
}

BiPoly BiPoly::y_pow(std::int64_t k) {
    if (k < 0) throw Error("negative exponent");
    check_ydeg(k);
    BiPoly p;
    p.yc_.assign(static_cast<std::size_t>(k) + 1, UniPoly(Var::x));
    p.yc_.back() = UniPoly::constant(Var::x, Rat(1));
    return p;
}

BiPoly BiPoly::monomial(Rat c, std::int64_t xe, std::int64_t ye) {
    if (ye < 0) throw Error("negative exponent");
    check_ydeg(ye);
    BiPoly p;
    if (c.is_zero()) return p;
    p.yc_.assign(static_cast<std::size_t>(ye) + 1, UniPoly(Var::x));
    p.yc_.back() = UniPoly::monomial(Var::x, std::move(c), xe);
    return p;
}

std::int64_t BiPoly::xdeg() const {
    std::int64_t d = -1;
    for (const auto& c : yc_) d = std::max(d, c.deg());
    return d;
}

const UniPoly& BiPoly::ycoeff(std::int64_t k) const {
    static const UniPoly zero(Var::x);
    if (k < 0 || k >= static_cast<std::int64_t>(yc_.size())) return zero;
    return yc_[static_cast<std::size_t>(k)];
}

UniPoly BiPoly::lc_y() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return yc_.back();
}

void BiPoly::set_ycoeff(std::int64_t k, UniPoly c) {
    if (k < 0) throw Error("negative exponent");
    check_ydeg(k);
    if (k >= static_cast<std::int64_t>(yc_.size())) {
        if (c.is_zero()) return;
        yc_.resize(static_cast<std::size_t>(k) + 1, UniPoly(Var::x));
    }
    yc_[static_cast<std::size_t>(k)] = std::move(c);
    trim();
}

bool BiPoly::is_distinguished() const {
    if (!is_monic()) return false;
    for (std::int64_t k = 0; k < ydeg(); ++k)
        if (!ycoeff(k).constant_term().is_zero()) return false;
    return true;
}

Ord BiPoly::x_order() const {
    for (std::size_t k = 0; k < yc_.size(); ++k)
        if (!yc_[k].constant_term().is_zero()) return Ord(static_cast<std::int64_t>(k));
    return Ord::infinity();
}

BiPoly BiPoly::operator-() const {
    BiPoly p;
    p.yc_.reserve(yc_.size());
    for (const auto& c : yc_) p.yc_.push_back(-c);
    return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (yc_.size() < o.yc_.size()) yc_.resize(o.yc_.size(), UniPoly(Var::x));
    for (std::size_t i = 0; i < o.yc_.size(); ++i) yc_[i] += o.yc_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (yc_.size() < o.yc_.size()) yc_.resize(o.yc_.size(), UniPoly(Var::x));
    for (std::size_t i = 0; i < o.yc_.size(); ++i) yc_[i] -= o.yc_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        yc_.clear();
        return *this;
    }
    for (auto& a : yc_) a *= c;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    check_ydeg(a.ydeg() + b.ydeg());
    p.yc_.assign(a.yc_.size() + b.yc_.size() - 1, UniPoly(Var::x));
    for (std::size_t i = 0; i < a.yc_.size(); ++i) {
        if (a.yc_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.yc_.size(); ++j) {
            if (b.yc_[j].is_zero()) continue;
            p.yc_[i + j] += a.yc_[i] * b.yc_[j];
        }
    }
    p.trim();
    return p;
}

BiPoly BiPoly::pow(std::int64_t k) const {
    if (k < 0) throw Error("negative power");
    BiPoly r = BiPoly::constant(Rat(1));
    BiPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) { return a.yc_ == b.yc_; }

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::int64_t ye = ydeg(); ye >= 0; --ye) {
        const UniPoly& c = ycoeff(ye);
        for (std::int64_t xe = c.deg(); xe >= 0; --xe) {
            Rat a = c.coeff(xe);
            if (a.is_zero()) continue;
            if (first) {
                if (a.is_negative()) {
                    os << "-";
                    a = -a;
                }
                first = false;
            } else if (a.is_negative()) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
            bool has_var = xe > 0 || ye > 0;
            if (!has_var) {
                os << a.str();
                continue;
            }
            bool coef_shown = !a.is_one();
            if (coef_shown) os << a.str();
            bool star = coef_shown;
            if (xe > 0) {
                if (star) os << "*";
                os << "x";
                if (xe > 1) os << "^" << xe;
                star = true;
            }
            if (ye > 0) {
                if (star) os << "*";
                os << "y";
                if (ye > 1) os << "^" << ye;
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

UniPoly substitute_param(const BiPoly& g, std::int64_t n, const UniPoly& y_of_t) {
    if (n < 1) throw Error("parametrization order must be positive");
    if (!y_of_t.is_zero() && y_of_t.var() != Var::t) throw Error("parametrization must be in t");
    // Horner in y with x replaced by t^n.
    UniPoly r(Var::t);
    for (std::int64_t k = g.ydeg(); k >= 0; --k) {
        r = r * y_of_t;
        r += g.ycoeff(k).scale_exponents(n).rebase(Var::t);
    }
    return r;
}

std::pair<BiPoly, BiPoly> quot_rem_y(const BiPoly& g, const BiPoly& h) {
    if (!h.is_monic() || h.ydeg() < 1)
        throw NonMonicDivisor("y-division requires a monic divisor of positive y-degree");
    BiPoly q;
    BiPoly r = g;
    while (!r.is_zero() && r.ydeg() >= h.ydeg()) {
        std::int64_t e = r.ydeg() - h.ydeg();
        BiPoly m = BiPoly::xpoly(r.lc_y()) * BiPoly::y_pow(e);
        q += m;
        r -= m * h;
    }
    return {q, r};
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw ZeroInput("division by zero polynomial");
    BiPoly q;
    BiPoly r = a;
    while (!r.is_zero() && r.ydeg() >= b.ydeg()) {
        std::int64_t before = r.ydeg();
        UniPoly c = exact_div(r.lc_y(), b.lc_y());
        std::int64_t e = r.ydeg() - b.ydeg();
        BiPoly m = BiPoly::xpoly(c) * BiPoly::y_pow(e);
        q += m;
        r -= m * b;
        internal_check(r.is_zero() || r.ydeg() < before, "bivariate division does not descend");
    }
    internal_check(r.is_zero(), "inexact bivariate division");
    return q;
}

}  // namespace branchroots
