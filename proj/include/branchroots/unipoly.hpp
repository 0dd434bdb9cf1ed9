#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "branchroots/orders.hpp"
#include "branchroots/rat.hpp"

namespace branchroots {

enum class Var : std::uint8_t { t = 0, x = 1 };

char var_name(Var v);

// Dense univariate polynomial over Rat, tagged with its variable.
// Coefficient i is the coefficient of var^i; the leading coefficient is
// nonzero unless the polynomial is zero.
class UniPoly {
public:
    explicit UniPoly(Var v = Var::x) : var_(v) {}

    static UniPoly constant(Var v, Rat c);
    static UniPoly monomial(Var v, Rat c, std::int64_t e);
    static UniPoly variable(Var v) { return monomial(v, Rat(1), 1); }

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    std::int64_t deg() const { return static_cast<std::int64_t>(c_.size()) - 1; }

    // Least exponent with nonzero coefficient; infinity for the zero polynomial.
    Ord ord() const;

    const Rat& coeff(std::int64_t e) const;
    Rat lc() const;
    Rat constant_term() const { return is_zero() ? Rat(0) : c_[0]; }
    void set_coeff(std::int64_t e, Rat c);
    std::vector<std::int64_t> support() const;

    UniPoly rebase(Var v) const;
    UniPoly scale_exponents(std::int64_t m) const;  // var -> var^m, m >= 1

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }
    UniPoly& operator*=(const Rat& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rat& c) { a *= c; return a; }
    friend UniPoly operator*(const Rat& c, UniPoly a) { a *= c; return a; }

    UniPoly pow(std::int64_t k) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void trim();
    void require_same_var(const UniPoly& o) const;

    Var var_;
    std::vector<Rat> c_;
};

// Euclidean division over the rational coefficient field. b must be nonzero.
std::pair<UniPoly, UniPoly> quot_rem(const UniPoly& a, const UniPoly& b);

// Division known to be exact; raises InternalError on a nonzero remainder.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace branchroots
