#include "branchroots/parse.hpp"

#include <cctype>
#include <string>

#include "branchroots/errors.hpp"

namespace branchroots {

namespace {

// Recursive-descent parser over an abstract polynomial builder. The builder
// supplies constants and variable atoms; arithmetic goes through the value
// type's own operators.
template <class Builder>
class Parser {
public:
    using Value = typename Builder::Value;

    Parser(std::string_view text, const Builder& builder) : s_(text), b_(builder) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    std::int64_t integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw SyntaxError("expected an integer", pos_);
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const int digit = s_[pos_] - '0';
            if (v > (INT64_MAX - digit) / 10) throw SyntaxError("integer literal too large", pos_);
            v = v * 10 + digit;
            ++pos_;
        }
        return v;
    }

    Value expr() {
        bool neg = false;
        skip_ws();
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Value v = term();
        if (neg) v = b_.from_rat(Rat(0)) - v;
        while (true) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    Value term() {
        Value v = factor();
        while (accept('*')) v = v * factor();
        return v;
    }

    Value factor() {
        Value v = atom();
        if (accept('^')) {
            const std::size_t at = pos_;
            const std::int64_t e = integer();
            if (e < 0) throw SyntaxError("exponent must be nonnegative", at);
            v = b_.pow(v, e);
        }
        return v;
    }

    Value atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::int64_t num = integer();
            if (accept('/')) {
                const std::size_t at = pos_;
                const std::int64_t den = integer();
                if (den == 0) throw SyntaxError("fraction with zero denominator", at);
                return b_.from_rat(Rat(num, den));
            }
            return b_.from_rat(Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            return b_.variable(c, pos_ - 1);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view s_;
    const Builder& b_;
    std::size_t pos_ = 0;
};

struct UniBuilder {
    using Value = UniPoly;
    Var var;

    Value from_rat(Rat c) const { return UniPoly::constant(var, std::move(c)); }
    Value variable(char c, std::size_t pos) const {
        if (c != var_name(var))
            throw UnknownVariable(std::string("variable '") + c + "' not allowed here", pos);
        return UniPoly::variable(var);
    }
    Value pow(const Value& v, std::int64_t e) const { return v.pow(e); }
};

struct BiBuilder {
    using Value = BiPoly;

    Value from_rat(Rat c) const { return BiPoly::constant(std::move(c)); }
    Value variable(char c, std::size_t pos) const {
        if (c == 'x') return BiPoly::monomial(Rat(1), 1, 0);
        if (c == 'y') return BiPoly::y_pow(1);
        throw UnknownVariable(std::string("variable '") + c + "' not allowed here", pos);
    }
    Value pow(const Value& v, std::int64_t e) const { return v.pow(e); }
};

}  // namespace

UniPoly parse_unipoly(std::string_view text, Var var) {
    return Parser<UniBuilder>(text, UniBuilder{var}).parse();
}

BiPoly parse_bipoly(std::string_view text) {
    return Parser<BiBuilder>(text, BiBuilder{}).parse();
}

}  // namespace branchroots
