#pragma once

#include <cstdint>
#include <vector>

#include "branchroots/bipoly.hpp"
#include "branchroots/errors.hpp"
#include "branchroots/rat.hpp"
#include "branchroots/unipoly.hpp"

namespace branchroots {

// Resultants with the convention Res(a, b) = lc(a)^{deg b} * prod b(alpha_i)
// over the roots alpha_i of a. Two independent routes are provided: the
// fraction-free subresultant remainder sequence (default, scales) and the
// Sylvester determinant evaluated by Bareiss elimination (cross-check
// oracle, intended for small degrees).
namespace elim {

// Ring operations needed by the elimination algorithms. The polynomial
// instantiations fix the coefficient variable to x.
template <class R>
struct ring;

template <>
struct ring<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return a.is_zero(); }
    static Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
};

template <>
struct ring<UniPoly> {
    static UniPoly zero() { return UniPoly(Var::x); }
    static UniPoly one() { return UniPoly::constant(Var::x, Rat(1)); }
    static bool is_zero(const UniPoly& a) { return a.is_zero(); }
    static UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
        return branchroots::exact_div(a, b);
    }
};

template <>
struct ring<BiPoly> {
    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return BiPoly::constant(Rat(1)); }
    static bool is_zero(const BiPoly& a) { return a.is_zero(); }
    static BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
        return branchroots::exact_div(a, b);
    }
};

// Polynomial in the eliminated variable; index = exponent.
template <class R>
using Poly = std::vector<R>;

template <class R>
void trim(Poly<R>& p) {
    while (!p.empty() && ring<R>::is_zero(p.back())) p.pop_back();
}

template <class R>
std::int64_t deg(const Poly<R>& p) {
    return static_cast<std::int64_t>(p.size()) - 1;
}

template <class R>
R ring_pow(R base, std::int64_t k) {
    R r = ring<R>::one();
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

// Pseudo-remainder: returns R with lc(b)^(deg a - deg b + 1) * a = q*b + R.
template <class R>
Poly<R> prem(Poly<R> a, const Poly<R>& b) {
    const R lb = b.back();
    std::int64_t e = deg(a) - deg(b) + 1;
    while (!a.empty() && deg(a) >= deg(b)) {
        const std::int64_t shift = deg(a) - deg(b);
        const R la = a.back();
        for (auto& c : a) c = c * lb;
        for (std::int64_t i = 0; i <= deg(b); ++i)
            a[static_cast<std::size_t>(i + shift)] =
                a[static_cast<std::size_t>(i + shift)] - la * b[static_cast<std::size_t>(i)];
        trim(a);
        --e;
    }
    if (e > 0) {
        const R f = ring_pow(lb, e);
        for (auto& c : a) c = c * f;
    }
    return a;
}

// Subresultant remainder-sequence resultant over an integral domain.
template <class R>
R resultant_prs(Poly<R> a, Poly<R> b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) throw ZeroInput("resultant of zero polynomial");
    bool negate = false;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if ((deg(a) & 1) && (deg(b) & 1)) negate = true;
    }
    if (deg(b) == 0) {
        R r = ring_pow(b[0], deg(a));
        return negate ? ring<R>::zero() - r : r;
    }
    R g = ring<R>::one();
    R h = ring<R>::one();
    int sign = negate ? -1 : 1;
    while (true) {
        const std::int64_t d = deg(a) - deg(b);
        if ((deg(a) & 1) && (deg(b) & 1)) sign = -sign;
        Poly<R> r = prem(a, b);
        if (r.empty()) return ring<R>::zero();  // positive-degree common factor
        const R divisor = g * ring_pow(h, d);
        a = std::move(b);
        b.clear();
        b.reserve(r.size());
        for (auto& c : r) b.push_back(ring<R>::exact_div(c, divisor));
        g = a.back();
        h = d == 0 ? h : ring<R>::exact_div(ring_pow(g, d), ring_pow(h, d - 1));
        if (deg(b) == 0) {
            R res = ring<R>::exact_div(ring_pow(b[0], deg(a)), ring_pow(h, deg(a) - 1));
            return sign < 0 ? ring<R>::zero() - res : res;
        }
    }
}

// Determinant by fraction-free Bareiss elimination.
template <class R>
R bareiss_det(std::vector<std::vector<R>> m) {
    const std::size_t n = m.size();
    if (n == 0) return ring<R>::one();
    int sign = 1;
    R prev = ring<R>::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ring<R>::is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && ring<R>::is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return ring<R>::zero();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = ring<R>::exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return sign < 0 ? ring<R>::zero() - det : det;
}

template <class R>
R resultant_sylvester(Poly<R> a, Poly<R> b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) throw ZeroInput("resultant of zero polynomial");
    const std::int64_t m = deg(a), n = deg(b);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<R>> s(size, std::vector<R>(size, ring<R>::zero()));
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j <= m; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                a[static_cast<std::size_t>(m - j)];
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j <= n; ++j)
            s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] =
                b[static_cast<std::size_t>(n - j)];
    return bareiss_det(std::move(s));
}

}  // namespace elim

// Resultant of two polynomials in their shared variable; coefficients in Rat.
Rat resultant(const UniPoly& a, const UniPoly& b);
Rat resultant_sylvester(const UniPoly& a, const UniPoly& b);

// Resultant with respect to y; result is a polynomial in x.
UniPoly resultant_y(const BiPoly& a, const BiPoly& b);
UniPoly resultant_y_sylvester(const BiPoly& a, const BiPoly& b);

// Resultant in an auxiliary variable whose coefficients are polynomials in
// x and y; used to eliminate the parameter of a parametrization.
BiPoly resultant_elim(const std::vector<BiPoly>& a, const std::vector<BiPoly>& b);

}  // namespace branchroots
