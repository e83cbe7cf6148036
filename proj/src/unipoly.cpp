#include "jtpoly/unipoly.hpp"

#include <sstream>

namespace jtpoly {

UniPoly::UniPoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

UniPoly::UniPoly(std::initializer_list<Rational> ascending)
    : coeffs_(ascending) {
    trim();
}

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    trim();
}

UniPoly UniPoly::monomial(int k, const Rational& coef) {
    UniPoly p;
    if (coef != 0) {
        p.coeffs_.assign(k + 1, Rational(0));
        p.coeffs_[k] = coef;
    }
    return p;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

const Rational& UniPoly::leading() const {
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    if (isZero() || rhs.isZero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * x + coeffs_[k];
    return acc;
}

UniPoly UniPoly::derivative() const {
    UniPoly d;
    if (coeffs_.size() <= 1) return d;
    d.coeffs_.resize(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    d.trim();
    return d;
}

UniPoly UniPoly::derivative(int order) const {
    UniPoly d = *this;
    for (int i = 0; i < order; ++i) d = d.derivative();
    return d;
}

UniPoly UniPoly::antiderivative() const {
    UniPoly a;
    if (isZero()) return a;
    a.coeffs_.assign(coeffs_.size() + 1, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k)
        a.coeffs_[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
    a.trim();
    return a;
}

UniPoly UniPoly::pow(int e) const {
    UniPoly acc(Rational(1));
    for (int i = 0; i < e; ++i) acc *= *this;
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (int k = degree(); k >= 0; --k) {
        acc *= inner;
        acc += UniPoly(coeffs_[k]);
    }
    return acc;
}

void UniPoly::divmod(const UniPoly& num, const UniPoly& den, UniPoly& quot, UniPoly& rem) {
    if (den.isZero()) throw ConfigError("polynomial division by zero");
    quot = UniPoly();
    rem = num;
    const int d = den.degree();
    while (!rem.isZero() && rem.degree() >= d) {
        int shift = rem.degree() - d;
        Rational c = rem.leading() / den.leading();
        UniPoly t = UniPoly::monomial(shift, c);
        quot += t;
        rem -= t * den;
    }
}

bool UniPoly::divides(const UniPoly& multiple) const {
    if (isZero()) return multiple.isZero();
    UniPoly q, r;
    divmod(multiple, *this, q, r);
    return r.isZero();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.isZero()) {
        UniPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.isZero()) a *= Rational(1) / a.leading();
    return a;
}

int UniPoly::orderAtZero() const {
    if (isZero()) return kZeroDegree;
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<int>(k);
    return kZeroDegree;
}

std::string UniPoly::str(const std::string& var) const {
    if (isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rational a = ratAbs(c);
        if (k == 0 || a != 1) out << ratStr(a);
        if (k > 0) {
            if (a != 1) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

} // namespace jtpoly
