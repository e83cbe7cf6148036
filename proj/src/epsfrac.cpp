#include "jtpoly/epsfrac.hpp"

#include "jtpoly/errors.hpp"

namespace jtpoly {

EpsFrac::EpsFrac(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw ConfigError("eps-fraction with zero denominator");
    normalize();
}

void EpsFrac::normalize() {
    if (num_.isZero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        UniPoly q, r;
        UniPoly::divmod(num_, g, q, r);
        num_ = q;
        UniPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

EpsFrac EpsFrac::operator-() const {
    EpsFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

EpsFrac& EpsFrac::operator+=(const EpsFrac& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

EpsFrac& EpsFrac::operator-=(const EpsFrac& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

EpsFrac& EpsFrac::operator*=(const EpsFrac& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

EpsFrac& EpsFrac::operator/=(const EpsFrac& rhs) {
    if (rhs.isZero()) throw DegeneracyError("eps-fraction division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

bool EpsFrac::hasLimit() const {
    if (num_.isZero()) return true;
    // Canonical form: num and den are coprime, so a denominator root at 0 is
    // not cancelled by the numerator.
    return den_.coeff(0) != 0;
}

Rational epsLimit(const EpsFrac& f) {
    if (f.isZero()) return Rational(0);
    if (!f.hasLimit())
        throw DegeneracyError("pole at eps = 0: " + f.str());
    return f.num().coeff(0) / f.den().coeff(0);
}

std::string EpsFrac::str() const {
    if (den_ == UniPoly(Rational(1))) return num_.str("e");
    return "(" + num_.str("e") + ")/(" + den_.str("e") + ")";
}

} // namespace jtpoly
