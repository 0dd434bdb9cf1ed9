#pragma once

#include <cstdint>
#include <vector>

#include "branchroots/bipoly.hpp"
#include "branchroots/unipoly.hpp"

namespace branchroots {

// A branch given by the parametrization x = t^n, y = y(t). Primitive means
// gcd(n, support of y) = 1, so the parametrization is one-to-one.
struct BranchParam {
    std::int64_t n;
    UniPoly y;  // in t, zero constant term; y = 0 is allowed (the x-axis)

    BranchParam(std::int64_t n_, UniPoly y_);

    bool is_primitive() const;
    std::vector<std::int64_t> support() const { return y.support(); }

    friend bool operator==(const BranchParam& a, const BranchParam& b) {
        return a.n == b.n && a.y == b.y;
    }
};

// Characteristic data of a branch: the exponent sequence b, the gcd chain B,
// the semigroup generators beta, and the quotients nk (size h).
struct CharSeq {
    std::vector<std::int64_t> b;
    std::vector<std::int64_t> B;
    std::vector<std::int64_t> beta;
    std::vector<std::int64_t> nk;

    int h() const { return static_cast<int>(b.size()) - 1; }
};

CharSeq characteristic(const BranchParam& p);

// Inverse of the beta formula: recovers the exponent sequence from the
// generator sequence. The gcd chain of the input must strictly decrease
// to 1.
std::vector<std::int64_t> beta_to_b(const std::vector<std::int64_t>& beta);

// Parametrization restricted to support exponents below b_{k+1}, reduced to
// primitive form by dividing n and the exponents by their gcd.
BranchParam truncate(const BranchParam& p, int k);

// The distinguished monic polynomial of y-degree n vanishing on the branch,
// obtained by eliminating the parameter.
BiPoly minimal_polynomial(const BranchParam& p);

// Minimal polynomial of the k-th truncation; y-degree n / B_k.
BiPoly fk_polynomial(const BranchParam& p, int k);

}  // namespace branchroots
