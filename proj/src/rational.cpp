#include "jtpoly/rational.hpp"

#include <cctype>

namespace jtpoly {

Rational parseRational(const std::string& text) {
    if (text.empty()) throw ConfigError("empty rational literal");
    size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size()) throw ConfigError("bad rational literal: " + text);
    bool seenSlash = false;
    for (size_t i = start; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (seenSlash || i == start || i + 1 == text.size())
                throw ConfigError("bad rational literal: " + text);
            seenSlash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ConfigError("bad rational literal: " + text);
    }
    Rational r;
    if (r.set_str(text, 10) != 0) throw ConfigError("bad rational literal: " + text);
    if (r.get_den() == 0) throw ConfigError("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string ratStr(const Rational& r) {
    return r.get_str();
}

Rational ratPow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw ConfigError("zero raised to a negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

long ratToLong(const Rational& r) {
    if (!isInteger(r)) throw ConfigError("expected an integer, got " + ratStr(r));
    if (!r.get_num().fits_slong_p()) throw ConfigError("integer out of range: " + ratStr(r));
    return r.get_num().get_si();
}

} // namespace jtpoly
