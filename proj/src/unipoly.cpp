#include "branchroots/unipoly.hpp"

#include <ostream>
#include <sstream>

#include "branchroots/budget.hpp"
#include "branchroots/errors.hpp"

namespace branchroots {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

char var_name(Var v) { return v == Var::t ? 't' : 'x'; }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void UniPoly::require_same_var(const UniPoly& o) const {
    if (var_ != o.var_ && !is_zero() && !o.is_zero())
        throw Error("mixed-variable polynomial arithmetic");
}

UniPoly UniPoly::constant(Var v, Rat c) {
    UniPoly p(v);
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::monomial(Var v, Rat c, std::int64_t e) {
    if (e < 0) throw Error("negative exponent");
    check_xdeg(e);
    UniPoly p(v);
    if (!c.is_zero()) {
        p.c_.assign(static_cast<std::size_t>(e) + 1, Rat(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

Ord UniPoly::ord() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return Ord(static_cast<std::int64_t>(i));
    return Ord::infinity();
}

const Rat& UniPoly::coeff(std::int64_t e) const {
    static const Rat zero(0);
    if (e < 0 || e >= static_cast<std::int64_t>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(e)];
}

Rat UniPoly::lc() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

void UniPoly::set_coeff(std::int64_t e, Rat c) {
    if (e < 0) throw Error("negative exponent");
    check_xdeg(e);
    if (e >= static_cast<std::int64_t>(c_.size())) {
        if (c.is_zero()) return;
        c_.resize(static_cast<std::size_t>(e) + 1, Rat(0));
    }
    c_[static_cast<std::size_t>(e)] = std::move(c);
    trim();
}

std::vector<std::int64_t> UniPoly::support() const {
    std::vector<std::int64_t> s;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) s.push_back(static_cast<std::int64_t>(i));
    return s;
}

UniPoly UniPoly::rebase(Var v) const {
    UniPoly p(v);
    p.c_ = c_;
    return p;
}

UniPoly UniPoly::scale_exponents(std::int64_t m) const {
    if (m < 1) throw Error("exponent scale must be positive");
    if (is_zero()) return *this;
    check_xdeg(deg() * m);
    UniPoly p(var_);
    p.c_.assign(static_cast<std::size_t>(deg() * m) + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) p.c_[i * static_cast<std::size_t>(m)] = c_[i];
    return p;
}

UniPoly UniPoly::operator-() const {
    UniPoly p(var_);
    p.c_.reserve(c_.size());
    for (const auto& c : c_) p.c_.push_back(-c);
    return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    require_same_var(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    require_same_var(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= c;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.require_same_var(b);
    UniPoly p(a.var_);
    if (a.is_zero() || b.is_zero()) return p;
    check_xdeg(a.deg() + b.deg());
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            p.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    p.trim();
    return p;
}

UniPoly UniPoly::pow(std::int64_t k) const {
    if (k < 0) throw Error("negative power");
    UniPoly r = UniPoly::constant(var_, Rat(1));
    UniPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    if (!a.c_.empty() && a.var_ != b.var_) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::int64_t e = deg(); e >= 0; --e) {
        const Rat& c = coeff(e);
        if (c.is_zero()) continue;
        Rat a = c;
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
        if (e == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var_name(var_);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

std::pair<UniPoly, UniPoly> quot_rem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ZeroInput("division by zero polynomial");
    UniPoly q(a.var() == b.var() ? a.var() : b.var());
    UniPoly r = a;
    const Rat blc = b.lc();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        Rat c = r.lc() / blc;
        std::int64_t e = r.deg() - b.deg();
        UniPoly m = UniPoly::monomial(b.var(), c, e);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = quot_rem(a, b);
    internal_check(r.is_zero(), "inexact univariate division");
    return q;
}

}  // namespace branchroots
