#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "branchroots/orders.hpp"
#include "branchroots/unipoly.hpp"

namespace branchroots {

// Polynomial in y whose coefficients are polynomials in x over Rat.
// Coefficient k is the UniPoly (in x) attached to y^k; the leading y
// coefficient is nonzero unless the polynomial is zero.
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly constant(Rat c);
    static BiPoly xpoly(const UniPoly& p);  // embed a polynomial in x
    static BiPoly y_pow(std::int64_t k);
    static BiPoly monomial(Rat c, std::int64_t xe, std::int64_t ye);

    bool is_zero() const { return yc_.empty(); }
    std::int64_t ydeg() const { return static_cast<std::int64_t>(yc_.size()) - 1; }
    std::int64_t xdeg() const;

    const UniPoly& ycoeff(std::int64_t k) const;
    UniPoly lc_y() const;
    void set_ycoeff(std::int64_t k, UniPoly c);

    // Monic as a polynomial in y.
    bool is_monic() const { return !is_zero() && yc_.back().is_one(); }
    // Monic and every non-leading y coefficient vanishes at x = 0.
    bool is_distinguished() const;

    // Order in y of the section at x = 0, i.e. of f(0, y).
    Ord x_order() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o) { *this = *this * o; return *this; }
    BiPoly& operator*=(const Rat& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rat& c) { a *= c; return a; }
    friend BiPoly operator*(const Rat& c, BiPoly a) { a *= c; return a; }

    BiPoly pow(std::int64_t k) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b);
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void trim();

    std::vector<UniPoly> yc_;  // yc_[k] is the x-polynomial coefficient of y^k
};

// g(t^n, y(t)) computed exactly; y must be a polynomial in t.
UniPoly substitute_param(const BiPoly& g, std::int64_t n, const UniPoly& y_of_t);

// Euclidean division in y by a monic divisor of positive y-degree.
std::pair<BiPoly, BiPoly> quot_rem_y(const BiPoly& g, const BiPoly& h);

// Division known to be exact in Q[x][y]; raises InternalError otherwise.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

}  // namespace branchroots
