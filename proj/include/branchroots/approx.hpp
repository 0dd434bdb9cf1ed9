#pragma once

#include <cstdint>
#include <vector>

#include "branchroots/bipoly.hpp"

namespace branchroots {

// Base-h positional expansion g = h^d + a_1 h^{d-1} + ... + a_d with
// deg_y a_i < deg_y h; the digits are unique.
struct HadicExpansion {
    BiPoly base;
    std::int64_t degree = 0;
    std::vector<BiPoly> coeffs;  // a_1 .. a_d

    BiPoly reconstruct() const;
};

HadicExpansion hadic(const BiPoly& g, const BiPoly& h);

// h + a_1 / d, where a_1 is the first digit of the h-adic expansion of g.
// Monic of the same y-degree as h; the approximate root is its fixed point.
BiPoly tschirnhausen(const BiPoly& g, const BiPoly& h);

// The unique monic r with deg_y(g - r^d) < deg_y g - deg_y r, computed by
// iterating the Tschirnhausen operator from y^(deg g / d).
BiPoly approx_root(const BiPoly& g, std::int64_t d);

// Nested-root identity: the e-th root of the d-th root equals the (d*e)-th
// root, coefficientwise.
bool check_nested(const BiPoly& g, std::int64_t d, std::int64_t e);

}  // namespace branchroots
