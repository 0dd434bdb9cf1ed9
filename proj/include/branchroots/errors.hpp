#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace branchroots {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInput : Error { using Error::Error; };
struct NonMonicDivisor : Error { using Error::Error; };
struct NonMonic : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };
struct InvalidSequence : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct GcdNotOne : Error { using Error::Error; };
struct HZero : Error { using Error::Error; };
struct NonPositiveContact : Error { using Error::Error; };
struct SameBranch : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct NotDistinguished : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownVariable : Error {
    std::size_t position;
    UnknownVariable(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Internal consistency failure; indicates a bug, not bad input.
struct InternalError : Error { using Error::Error; };

inline void internal_check(bool cond, const char* what) {
    if (!cond) throw InternalError(std::string("internal check failed: ") + what);
}

}  // namespace branchroots
