#pragma once

#include <cstdint>

namespace branchroots {

// Degree caps for polynomial arithmetic. Resultant chains can blow up on
// adversarial input; exceeding a cap raises BudgetExceeded instead of
// grinding away. Set once at program start (e.g. from the environment);
// all library code only reads it.
struct Budget {
    std::int64_t max_xdeg = 4096;  // univariate exponents (x and t)
    std::int64_t max_ydeg = 64;
};

Budget& budget();

void check_xdeg(std::int64_t deg);
void check_ydeg(std::int64_t deg);

}  // namespace branchroots
