#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "branchroots/errors.hpp"

namespace branchroots {

// Exact rational number. Always reduced, denominator always positive,
// zero is 0/1. Backed by GMP.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rat(std::int64_t num, std::int64_t den) : q_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw Error("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rat from_string(const std::string& s);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    // "num" for integers, "num/den" otherwise.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    mpq_class q_;
};

inline Rat Rat::from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(mpq_class(mpz_class(s)));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw Error("rational with zero denominator");
        mpq_class q(num, den);
        return Rat(std::move(q));
    } catch (const std::invalid_argument&) {
        throw Error("bad rational literal: " + s);
    }
}

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace branchroots
