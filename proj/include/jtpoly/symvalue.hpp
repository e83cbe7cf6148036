#ifndef JTPOLY_SYMVALUE_HPP
#define JTPOLY_SYMVALUE_HPP

#include <map>
#include <string>
#include <utility>

#include "jtpoly/rational.hpp"

namespace jtpoly {

// Element of Q[u, v] for two formal, algebraically independent generators.
// Throughout the library u stands for the reciprocal Gamma value attached to
// beta and v for the one attached to alpha; this class only knows the ring
// structure. Terms map (i, j) -> nonzero rational coefficient of u^i v^j.
class SymValue {
public:
    using Key = std::pair<int, int>;

    SymValue() = default;
    SymValue(const Rational& constant);
    static SymValue term(int i, int j, const Rational& coef);
    static SymValue u() { return term(1, 0, Rational(1)); }
    static SymValue v() { return term(0, 1, Rational(1)); }

    bool isZero() const { return terms_.empty(); }
    bool isRational() const;
    // The (0,0) coefficient; the whole value if isRational().
    Rational rationalPart() const;
    Rational coeff(int i, int j) const;
    const std::map<Key, Rational>& terms() const { return terms_; }

    SymValue operator-() const;
    SymValue& operator+=(const SymValue& rhs);
    SymValue& operator-=(const SymValue& rhs);
    SymValue& operator*=(const SymValue& rhs);
    SymValue& operator*=(const Rational& scalar);
    friend SymValue operator+(SymValue a, const SymValue& b) { return a += b; }
    friend SymValue operator-(SymValue a, const SymValue& b) { return a -= b; }
    friend SymValue operator*(SymValue a, const SymValue& b) { return a *= b; }
    friend SymValue operator*(SymValue a, const Rational& s) { return a *= s; }
    friend SymValue operator*(const Rational& s, SymValue a) { return a *= s; }
    bool operator==(const SymValue& rhs) const { return terms_ == rhs.terms_; }

    // Value at concrete generator values.
    Rational substitute(const Rational& uVal, const Rational& vVal) const;

    // Exact quotient; throws std::logic_error when rhs does not divide *this.
    static SymValue exactQuotient(const SymValue& num, const SymValue& den);

    // Serialization keys: "1" for (0,0), otherwise "u"/"u^i", "v"/"v^j"
    // joined with '*'.
    static std::string keyStr(int i, int j);
    std::string str() const;

private:
    void add(int i, int j, const Rational& coef);
    std::map<Key, Rational> terms_;
};

inline SymValue exact_div(const SymValue& a, const SymValue& b) {
    return SymValue::exactQuotient(a, b);
}
inline bool isZeroValue(const SymValue& s) { return s.isZero(); }

} // namespace jtpoly

#endif
