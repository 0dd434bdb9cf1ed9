#include "branchroots/budget.hpp"

#include <string>

#include "branchroots/errors.hpp"

namespace branchroots {

Budget& budget() {
    static Budget b;
    return b;
}

void check_xdeg(std::int64_t deg) {
    if (deg > budget().max_xdeg)
        throw BudgetExceeded("x/t degree " + std::to_string(deg) + " exceeds cap " +
                             std::to_string(budget().max_xdeg));
}

void check_ydeg(std::int64_t deg) {
    if (deg > budget().max_ydeg)
        throw BudgetExceeded("y degree " + std::to_string(deg) + " exceeds cap " +
                             std::to_string(budget().max_ydeg));
}

}  // namespace branchroots
