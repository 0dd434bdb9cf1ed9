#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "branchroots/branch.hpp"
#include "branchroots/criterion.hpp"
#include "branchroots/semigroup.hpp"

namespace branchroots {

enum class ReportFormat { text, json };

// Structured analysis output. Serialization is deterministic (stable key
// order, rationals as "num/den" strings); timing is attached only on
// request so default output is byte-stable.
struct Report {
    // input echo
    std::string input_kind;  // "parametrization" or "polynomial"
    std::string input;

    // invariants
    std::optional<std::int64_t> n;
    std::vector<std::int64_t> b, B, beta, nk;
    std::optional<std::int64_t> conductor;

    // polynomials
    std::string minpoly;
    struct RootLine {
        int k = 0;
        std::int64_t order = 0;  // root order B_{k-1}
        std::string poly;
        std::string i_param;      // intersection via the parametrization
        std::string i_resultant;  // intersection via the resultant
    };
    std::vector<RootLine> roots;

    // irreducibility (polynomial input)
    std::string verdict;
    std::vector<std::string> trace;

    std::vector<VerifyOutcome> verification;
    std::optional<double> timing_ms;

    std::string render(ReportFormat fmt) const;
};

Report analyze_param(const BranchParam& p, bool with_verification);
Report analyze_poly(const BiPoly& phi);

}  // namespace branchroots
