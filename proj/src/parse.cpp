#include "poisson2/parse.hpp"

#include <cctype>
#include <string>

#include "poisson2/errors.hpp"

namespace poisson2 {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        bool neg = accept('-');
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (accept('^')) {
            skip_ws();
            if (peek() == '-') throw SyntaxError("negative exponent", pos_);
            return pow(b, natural());
        }
        return b;
    }

    Poly base() {
        if (at_end()) throw SyntaxError("unexpected end of input", pos_);
        char c = peek();
        if (c == 'x') { ++pos_; reject_adjacent(); return Poly::x(); }
        if (c == 'y') { ++pos_; reject_adjacent(); return Poly::y(); }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            reject_adjacent();
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(rational());
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    // "2x" and friends must not silently mean multiplication.
    void reject_adjacent() {
        if (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
                throw SyntaxError("implicit multiplication is not allowed", pos_);
        }
    }

    int natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError("expected a natural number", pos_);
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6) throw SyntaxError("exponent too large", start);
        reject_adjacent();
        return std::stoi(digits);
    }

    Rational rational() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Rational num = Rational::from_integer_literal(std::string(text_.substr(start, pos_ - start)));
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == dstart) throw SyntaxError("expected a denominator", pos_);
            Rational den = Rational::from_integer_literal(std::string(text_.substr(dstart, pos_ - dstart)));
            if (den.is_zero()) throw SyntaxError("denominator must be positive", dstart);
            num /= den;
        }
        reject_adjacent();
        return num;
    }
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace poisson2
