#include "hirz/rational.hpp"

#include "hirz/errors.hpp"

#include <cctype>

namespace hirz {

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

Rational parse_rational(const std::string& s) {
    auto bad = [&] { return ValidationError("not an exact rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    bool seen_digit = false, seen_slash = false, digit_after_slash = false;
    for (std::size_t k = i; k < s.size(); ++k) {
        char c = s[k];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
            if (seen_slash) digit_after_slash = true;
        } else if (c == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
        } else {
            throw bad();
        }
    }
    if (!seen_digit || (seen_slash && !digit_after_slash)) throw bad();
    std::string body = s[0] == '+' ? s.substr(1) : s;
    Rational q;
    if (q.set_str(body, 10) != 0) throw bad();
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
}

Rational frac(const Integer& num, const Integer& den) {
    if (den == 0) throw ValidationError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace hirz
