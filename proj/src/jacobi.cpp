#include "jtpoly/jacobi.hpp"

namespace jtpoly {

void JacobiParams::validate() const {
    auto badParam = [](const Rational& v) {
        return v <= -1 && isInteger(v);
    };
    if (badParam(alpha) || badParam(beta) || badParam(alpha + beta))
        throw ConfigError("alpha, beta, alpha+beta must avoid the negative integers");
}

Rational pochhammer(const Rational& a, long n) {
    if (n < 0) throw ConfigError("pochhammer with negative length");
    Rational acc(1);
    Rational t = a;
    for (long i = 0; i < n; ++i) {
        acc *= t;
        t += 1;
    }
    return acc;
}

Rational gammaRatio(const Rational& a, const Rational& c, const Rational& x) {
    Rational diff = a - c;
    if (!isInteger(diff)) throw ConfigError("gammaRatio needs an integer shift a-c");
    long k = ratToLong(diff);
    if (k >= 0) return pochhammer(x + c + 1, k);
    Rational den = pochhammer(x + a + 1, -k);
    if (den == 0)
        throw DegeneracyError("gammaRatio pole: Gamma at a nonpositive integer in numerator position");
    return Rational(1) / den;
}

Rational genBinom(const Rational& a, long k) {
    if (k < 0) return Rational(0);
    return pochhammer(a - k + 1, k) / factorial(k);
}

Rational factorial(long n) {
    if (n < 0) throw ConfigError("factorial of a negative integer");
    Rational acc(1);
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Rational thetaEig(const Rational& n, const JacobiParams& p) {
    return n * (n + p.ab1());
}

UniPoly jacobiPoly(long n, const JacobiParams& p) {
    if (n < 0) throw ConfigError("jacobiPoly needs n >= 0");
    p.validate();
    Rational pref = Rational(signPow(n)) * pochhammer(p.ab1(), n) /
                    (ratPow(Rational(2), n) * pochhammer(p.beta + 1, n));
    // Power tables for (x-1)^k and (x+1)^k.
    std::vector<UniPoly> minus(n + 1), plus(n + 1);
    minus[0] = UniPoly(Rational(1));
    plus[0] = UniPoly(Rational(1));
    UniPoly xm1{Rational(-1), Rational(1)};
    UniPoly xp1{Rational(1), Rational(1)};
    for (long k = 1; k <= n; ++k) {
        minus[k] = minus[k - 1] * xm1;
        plus[k] = plus[k - 1] * xp1;
    }
    UniPoly sum;
    for (long j = 0; j <= n; ++j) {
        Rational c = genBinom(Rational(n) + p.alpha, j) * genBinom(Rational(n) + p.beta, n - j);
        if (c == 0) continue;
        sum += (minus[n - j] * plus[j]) * c;
    }
    return sum * pref;
}

Rational normalizedMass(long i, long j, const JacobiParams& p) {
    Rational w = ratPow(Rational(2), i + j);
    w *= gammaRatio(p.alpha + i, p.alpha, Rational(0));
    w *= gammaRatio(p.beta + j, p.beta, Rational(0));
    w *= gammaRatio(p.alpha + p.beta + 1, p.alpha + p.beta + i + j + 1, Rational(0));
    return w;
}

Rational normalizedMoment(const UniPoly& pPoly, long i, long j, const JacobiParams& p) {
    // Coefficients of pPoly in powers of (1+x) by synthetic division at -1.
    UniPoly rem = pPoly;
    UniPoly shift{Rational(1), Rational(1)};
    Rational acc(0);
    for (long k = 0; !rem.isZero(); ++k) {
        UniPoly q, r;
        UniPoly::divmod(rem, shift, q, r);
        Rational a = r.coeff(0);  // remainder is the constant p_k
        if (a != 0) acc += a * normalizedMass(i, j + k, p);
        rem = q;
    }
    return acc;
}

Rational jacobiWeightedIntegral(long n, long l, const JacobiParams& p) {
    if (l < 1 || n < 0) throw ConfigError("jacobiWeightedIntegral needs n >= 0, l >= 1");
    Rational value = p.ab1() / ratPow(Rational(2), l);
    value *= genBinom(Rational(n + l - 1), l - 1);
    value *= gammaRatio(p.alpha + n, p.alpha, Rational(0));                       // (alpha+1)_n
    value *= gammaRatio(p.beta - l, p.beta + n, Rational(0));                     // 1/(beta-l+1)_{n+l}
    value *= gammaRatio(p.alpha + p.beta + n, p.alpha + p.beta + n - l + 1, Rational(0));
    return value;
}

Rational boundaryDerivative(long n, long k, long j, Endpoint at, const JacobiParams& p) {
    if (n < 0 || k < 0 || j < 0) throw ConfigError("boundaryDerivative needs n, k, j >= 0");
    // Shared prefactor: the two boundary formulas differ only in sign and in
    // which parameter enters the middle binomial.
    Rational value = factorial(j) * ratPow(Rational(2), k - j);
    value *= pochhammer(p.ab1(), n) / pochhammer(p.beta + 1, n);
    value *= genBinom(Rational(n) + p.alpha + p.beta + j - k, j - k);
    if (at == Endpoint::MinusOne) {
        value *= Rational(signPow(j + k));
        value *= genBinom(Rational(n) + p.beta, n - j + k);
    } else {
        value *= Rational(signPow(n + k));
        value *= genBinom(Rational(n) + p.alpha, n - j + k);
    }
    return value;
}

std::pair<Rational, Rational> combinatorialIdentity(long alpha, long beta, long s, long k, long u) {
    if (alpha < 0 || beta < 0 || s < 0 || k < 0 || u < 0 || s < beta + k)
        throw ConfigError("combinatorialIdentity needs nonnegative arguments with s >= beta + k");
    Rational lhs(0);
    for (long j = 0; j <= s - beta; ++j) {
        lhs += genBinom(Rational(s - beta - k), j - k) *
               genBinom(Rational(u + alpha + beta - k + j), beta - k + j) *
               genBinom(Rational(u + alpha + beta - s + k), alpha + beta - s + j);
    }
    Rational rhs = genBinom(Rational(u + alpha + beta), alpha) * genBinom(Rational(u + s - k), s - k);
    return {lhs, rhs};
}

} // namespace jtpoly
