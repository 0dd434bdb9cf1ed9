#pragma once

#include <cstdint>

#include "branchroots/branch.hpp"
#include "branchroots/orders.hpp"
#include "branchroots/rat.hpp"

namespace branchroots {

// Coincidence order of the fractional-power expansions of two branches.
// Finite for distinct branches; tied to intersection numbers by the Noether
// formula.
struct ContactOrder {
    Rat value;

    friend bool operator==(const ContactOrder& a, const ContactOrder& b) {
        return a.value == b.value;
    }
};

// t-order of g along the parametrization; infinity iff the branch divides g.
Ord intersection_param(const BranchParam& p, const BiPoly& g);

// x-order of the y-resultant; the elimination route to the same number.
// Agrees with the parametric route when f is the distinguished polynomial of
// a branch not dividing g.
Ord intersection_resultant(const BiPoly& f, const BiPoly& g);

// The Noether formula: predicted intersection number gx * (sum_{i<k}
// (B_{i-1} - B_i) b_i / b_0 + B_{k-1} o), where k is the least index with
// o <= b_k / b_0.
Rat noether_forward(const CharSeq& cf, const Rat& o, std::int64_t gx);

// Contact order of two distinct branches, recovered by inverting the Noether
// formula on the piece selected by the threshold sequence B_{l-1} beta_l /
// beta_0.
ContactOrder contact_order(const BranchParam& pf, const BranchParam& pg);

// Both contact directions agree and the mirrored formula, evaluated with the
// second branch's characteristic, reproduces the measured intersection.
bool check_symmetry(const BranchParam& pf, const BranchParam& pg);

// The contact order of the B_{k-1}-th approximate root of the minimal
// polynomial equals b_k / b_0, checked through the equality form of the
// threshold correspondence.
bool check_root_contact(const BranchParam& pf, int k);

}  // namespace branchroots
