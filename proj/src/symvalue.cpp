#include "jtpoly/symvalue.hpp"

#include <sstream>
#include <stdexcept>

namespace jtpoly {

SymValue::SymValue(const Rational& constant) {
    if (constant != 0) terms_[{0, 0}] = constant;
}

SymValue SymValue::term(int i, int j, const Rational& coef) {
    SymValue s;
    if (coef != 0) s.terms_[{i, j}] = coef;
    return s;
}

bool SymValue::isRational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0};
}

Rational SymValue::rationalPart() const { return coeff(0, 0); }

Rational SymValue::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymValue::add(int i, int j, const Rational& coef) {
    if (coef == 0) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
        terms_[{i, j}] = coef;
        return;
    }
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
}

SymValue SymValue::operator-() const {
    SymValue s = *this;
    for (auto& [key, c] : s.terms_) c = -c;
    return s;
}

SymValue& SymValue::operator+=(const SymValue& rhs) {
    for (const auto& [key, c] : rhs.terms_) add(key.first, key.second, c);
    return *this;
}

SymValue& SymValue::operator-=(const SymValue& rhs) {
    for (const auto& [key, c] : rhs.terms_) add(key.first, key.second, -c);
    return *this;
}

SymValue& SymValue::operator*=(const SymValue& rhs) {
    SymValue out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : rhs.terms_)
            out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    terms_ = std::move(out.terms_);
    return *this;
}

SymValue& SymValue::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) c *= scalar;
    return *this;
}

Rational SymValue::substitute(const Rational& uVal, const Rational& vVal) const {
    Rational acc(0);
    for (const auto& [key, c] : terms_)
        acc += c * ratPow(uVal, key.first) * ratPow(vVal, key.second);
    return acc;
}

SymValue SymValue::exactQuotient(const SymValue& num, const SymValue& den) {
    if (den.isZero()) throw std::logic_error("SymValue division by zero");
    SymValue rem = num;
    SymValue quot;
    // Leading term under the map ordering (lex on (i, j)); exact divisibility
    // guarantees each leading term of the remainder is divisible by den's.
    const auto& dlt = *den.terms_.rbegin();
    while (!rem.isZero()) {
        const auto& rlt = *rem.terms_.rbegin();
        int di = rlt.first.first - dlt.first.first;
        int dj = rlt.first.second - dlt.first.second;
        if (di < 0 || dj < 0) throw std::logic_error("SymValue division is not exact");
        SymValue t = term(di, dj, rlt.second / dlt.second);
        quot += t;
        rem -= t * den;
    }
    return quot;
}

std::string SymValue::keyStr(int i, int j) {
    if (i == 0 && j == 0) return "1";
    std::ostringstream out;
    if (i > 0) {
        out << "u";
        if (i > 1) out << "^" << i;
    }
    if (j > 0) {
        if (i > 0) out << "*";
        out << "v";
        if (j > 1) out << "^" << j;
    }
    return out.str();
}

std::string SymValue::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out << " + ";
        out << ratStr(c);
        if (key != Key{0, 0}) out << "*" << keyStr(key.first, key.second);
        first = false;
    }
    return out.str();
}

} // namespace jtpoly
