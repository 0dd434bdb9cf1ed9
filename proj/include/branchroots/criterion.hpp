#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "branchroots/branch.hpp"
#include "branchroots/orders.hpp"
#include "branchroots/semigroup.hpp"

namespace branchroots {

enum class VerifyStatus { holds, failed, not_applicable };

// One verified claim together with enough computed data to re-derive the
// verdict by hand.
struct VerifyOutcome {
    std::string claim;
    VerifyStatus status = VerifyStatus::failed;
    std::vector<std::pair<std::string, std::string>> witness;

    bool holds() const { return status == VerifyStatus::holds; }
    void note(std::string key, std::string value) {
        witness.emplace_back(std::move(key), std::move(value));
    }
};

const char* to_string(VerifyStatus s);

// Root-contact theorem: a monic g of y-degree n/B_k with (f,g) > n_k beta_k
// has (f, root_{n_k}(g)) = beta_k. Also checks the digit valuations of the
// expansion of g by a polynomial of intersection beta_k.
VerifyOutcome verify_root_contact(const BranchParam& pf, const BiPoly& g, int k);

// The approximate-root identities of the Abhyankar-Moh theorem: for each
// k the B_{k-1}-th root of f has y-degree n/B_{k-1}, intersection beta_k
// (by both intersection routes), and is an irreducible distinguished
// polynomial whose semigroup is the divided generator prefix.
std::vector<VerifyOutcome> verify_am_roots(const BranchParam& pf);

// Membership property: deg_y psi < n/B_k forces (f, psi) into the monoid
// spanned by beta_0..beta_k.
VerifyOutcome verify_membership(const BranchParam& pf, const BiPoly& psi, int k);

// Divisibility of the x-order of a second branch whose contact with f is
// high enough, with the divided-semigroup identity in the equality case.
VerifyOutcome verify_order_divisibility(const BranchParam& pf, const BranchParam& pg, int k);

enum class IrredStatus { irreducible, reducible, inconclusive };

const char* to_string(IrredStatus s);

struct IrreducibilityStep {
    int k = 0;
    std::int64_t gcd_before = 0;
    std::int64_t root_deg = 0;
    Ord c = Ord(0);
    std::int64_t gcd_after = 0;
};

struct IrreducibilityVerdict {
    IrredStatus status = IrredStatus::inconclusive;
    std::optional<Semigroup> semigroup;
    std::vector<IrreducibilityStep> trace;
    std::string reason;  // filled for reducible verdicts
};

// Absolute irreducibility test for a distinguished monic polynomial, built
// on the approximate-root tower: the intersection chain must drop the gcd at
// every step, grow strictly, stay outside the preceding monoid, and every
// digit of the tower expansions must respect the valuation bounds that hold
// along an irreducible branch.
IrreducibilityVerdict irreducibility_test(const BiPoly& phi);

}  // namespace branchroots
