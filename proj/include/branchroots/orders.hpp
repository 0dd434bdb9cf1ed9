#pragma once

#include <cstdint>
#include <string>

#include "branchroots/errors.hpp"

namespace branchroots {

// A series order / intersection multiplicity: a nonnegative integer or
// +infinity. Infinity is a distinguished value, not a sentinel integer.
class Ord {
public:
    Ord(std::int64_t v) : finite_(true), v_(v) {}  // NOLINT(google-explicit-constructor)
    static Ord infinity() { return Ord(); }

    bool is_finite() const { return finite_; }
    std::int64_t value() const {
        if (!finite_) throw Error("value() on infinite order");
        return v_;
    }

    friend bool operator==(const Ord& a, const Ord& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend bool operator!=(const Ord& a, const Ord& b) { return !(a == b); }
    friend bool operator<(const Ord& a, const Ord& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator>(const Ord& a, const Ord& b) { return b < a; }
    friend bool operator<=(const Ord& a, const Ord& b) { return !(b < a); }
    friend bool operator>=(const Ord& a, const Ord& b) { return !(a < b); }

    friend Ord operator+(const Ord& a, const Ord& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return Ord(a.v_ + b.v_);
    }

    std::string str() const { return finite_ ? std::to_string(v_) : "inf"; }

private:
    Ord() : finite_(false), v_(0) {}
    bool finite_;
    std::int64_t v_;
};

}  // namespace branchroots
