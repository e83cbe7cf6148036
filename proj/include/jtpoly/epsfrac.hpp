#ifndef JTPOLY_EPSFRAC_HPP
#define JTPOLY_EPSFRAC_HPP

#include <string>

#include "jtpoly/unipoly.hpp"

namespace jtpoly {

// Rational function in a perturbation symbol eps, kept canonical: the
// denominator is monic and coprime to the numerator. Used to regularize the
// family determinants at integer parameters, where the raw numerator and
// denominator both vanish but their ratio has a finite limit at eps = 0.
class EpsFrac {
public:
    EpsFrac() : num_(), den_(Rational(1)) {}
    EpsFrac(const Rational& constant) : num_(constant), den_(Rational(1)) {}
    EpsFrac(UniPoly num, UniPoly den);

    static EpsFrac eps() { return EpsFrac(UniPoly::monomial(1), UniPoly(Rational(1))); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }

    EpsFrac operator-() const;
    EpsFrac& operator+=(const EpsFrac& rhs);
    EpsFrac& operator-=(const EpsFrac& rhs);
    EpsFrac& operator*=(const EpsFrac& rhs);
    EpsFrac& operator/=(const EpsFrac& rhs);
    friend EpsFrac operator+(EpsFrac a, const EpsFrac& b) { return a += b; }
    friend EpsFrac operator-(EpsFrac a, const EpsFrac& b) { return a -= b; }
    friend EpsFrac operator*(EpsFrac a, const EpsFrac& b) { return a *= b; }
    friend EpsFrac operator/(EpsFrac a, const EpsFrac& b) { return a /= b; }
    bool operator==(const EpsFrac& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }

    // True when the value at eps = 0 is finite, i.e. the numerator vanishes
    // at 0 to at least the order the denominator does.
    bool hasLimit() const;

    std::string str() const;

private:
    void normalize();
    UniPoly num_;
    UniPoly den_;
};

// Value at eps = 0 after cancelling the common eps power; throws
// DegeneracyError on a pole.
Rational epsLimit(const EpsFrac& f);

inline EpsFrac exact_div(const EpsFrac& a, const EpsFrac& b) { return a / b; }
inline bool isZeroValue(const EpsFrac& f) { return f.isZero(); }

} // namespace jtpoly

#endif
