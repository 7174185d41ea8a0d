#include "hirz/parse.hpp"

#include "hirz/errors.hpp"

#include <cctype>

namespace hirz {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    BPoly run() {
        BPoly acc;
        skip();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            acc += term() * Rational(sign);
            first = false;
            skip();
        }
        return acc;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

    std::string digits() {
        std::size_t b = pos_;
        while (digit()) ++pos_;
        return s_.substr(b, pos_ - b);
    }

    int exponent() {
        const std::size_t at = pos_;
        const std::string d = digits();
        if (d.size() > 4) throw ParseError("exponent too large", at);
        return std::stoi(d);
    }

    BPoly term() {
        const std::size_t start = pos_;
        Rational c = 1;
        bool any = false;
        if (digit()) {
            std::string num = digits();
            skip();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip();
                if (!digit()) throw ParseError("expected denominator", pos_);
                const std::size_t at = pos_;
                std::string den = digits();
                if (Integer(den) == 0) throw ParseError("zero denominator", at);
                c = Rational(Integer(num), Integer(den));
                c.canonicalize();
            } else {
                c = Rational(Integer(num));
            }
            any = true;
            skip();
        }
        int ex = 0, ey = 0;
        while (!at_end()) {
            std::size_t save = pos_;
            if (peek() == '*') {
                ++pos_;
                skip();
                if (at_end() || (peek() != 'x' && peek() != 'y')) throw ParseError("expected x or y after '*'", pos_);
            }
            if (at_end() || (peek() != 'x' && peek() != 'y')) {
                pos_ = save;
                break;
            }
            const char var = peek();
            ++pos_;
            skip();
            int e = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip();
                if (!digit()) throw ParseError("expected exponent", pos_);
                e = exponent();
            } else if (digit()) {
                e = exponent();
            }
            (var == 'x' ? ex : ey) += e;
            any = true;
            skip();
        }
        if (!any) throw ParseError("expected a term", start);
        return BPoly::monomial(c, ex, ey);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

BPoly parse_bpoly(const std::string& text) { return Parser(text).run(); }

}  // namespace hirz
