#include "k3iso/polyparse.hpp"

#include <cctype>

#include "k3iso/errors.hpp"

namespace k3iso {

namespace {

class Parser {
public:
    explicit Parser(std::string_view t) : t_(t) {}

    ZPoly run() {
        skip();
        if (pos_ == t_.size()) fail("empty expression");
        ZPoly p = expr();
        skip();
        if (pos_ != t_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg, ErrorKind k = ErrorKind::ParseError) const {
        throw ParseFailure(k, msg, pos_);
    }

    void skip() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }

    // '-' or the three-byte U+2212
    bool minus_here() const {
        if (pos_ < t_.size() && t_[pos_] == '-') return true;
        return t_.substr(pos_, 3) == "\xE2\x88\x92";
    }
    void eat_minus() { pos_ += t_[pos_] == '-' ? 1 : 3; }

    bool starts_factor() const {
        if (pos_ >= t_.size()) return false;
        const char c = t_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'X' || c == '(';
    }

    ZPoly expr() {
        ZPoly acc = term();
        for (;;) {
            skip();
            if (pos_ < t_.size() && t_[pos_] == '+') {
                ++pos_;
                acc = acc + term();
            } else if (minus_here()) {
                eat_minus();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    ZPoly term() {
        ZPoly acc = unary();
        for (;;) {
            skip();
            if (pos_ < t_.size() && t_[pos_] == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (starts_factor()) {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    ZPoly unary() {
        skip();
        if (minus_here()) {
            eat_minus();
            return -unary();
        }
        if (pos_ < t_.size() && t_[pos_] == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    ZPoly power() {
        ZPoly base = atom();
        skip();
        if (pos_ < t_.size() && t_[pos_] == '^') {
            ++pos_;
            skip();
            if (minus_here()) fail("negative exponent", ErrorKind::NegativeExponent);
            if (pos_ >= t_.size() || !std::isdigit(static_cast<unsigned char>(t_[pos_]))) fail("expected exponent");
            const std::size_t start = pos_;
            ZInt e = integer();
            if (!e.fits_uint_p() || e > 100000) {
                pos_ = start;
                fail("exponent too large");
            }
            return pow(base, static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    ZInt integer() {
        const std::size_t start = pos_;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
        if (pos_ < t_.size() && (t_[pos_] == '.' || t_[pos_] == '/' || t_[pos_] == 'e' || t_[pos_] == 'E'))
            fail("non-integer coefficient", ErrorKind::NonIntegerCoefficient);
        return ZInt(std::string(t_.substr(start, pos_ - start)));
    }

    ZPoly atom() {
        skip();
        if (pos_ >= t_.size()) fail("unexpected end of input");
        const char c = t_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return ZPoly::constant(integer());
        if (c == 'x' || c == 'X') {
            ++pos_;
            return ZPoly::x();
        }
        if (c == '(') {
            ++pos_;
            ZPoly inner = expr();
            skip();
            if (pos_ >= t_.size() || t_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '.') fail("non-integer coefficient", ErrorKind::NonIntegerCoefficient);
        fail("unexpected character");
    }

    std::string_view t_;
    std::size_t pos_ = 0;
};

}  // namespace

ZPoly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace k3iso
