#ifndef JTPOLY_JACOBI_HPP
#define JTPOLY_JACOBI_HPP

#include <utility>

#include "jtpoly/errors.hpp"
#include "jtpoly/rational.hpp"
#include "jtpoly/unipoly.hpp"

namespace jtpoly {

// Parameter pair (alpha, beta) with alpha, beta, alpha+beta not a negative
// integer, so the renormalized polynomials and the eigenvalue map are
// defined for every degree.
struct JacobiParams {
    Rational alpha;
    Rational beta;

    void validate() const;
    Rational ab1() const { return alpha + beta + 1; }
};

// (a)_0 = 1, (a)_n = a(a+1)...(a+n-1); n must be >= 0.
Rational pochhammer(const Rational& a, long n);

template <class F>
F pochhammerF(const F& a, long n) {
    if (n < 0) throw ConfigError("pochhammer with negative length");
    F acc{Rational(1)};
    F t = a;
    for (long i = 0; i < n; ++i) {
        acc = acc * t;
        t = t + F(Rational(1));
    }
    return acc;
}

// Gamma(x+a+1)/Gamma(x+c+1) for integer a-c, evaluated as a Pochhammer chain
// (a >= c) or its reciprocal. A zero in the reciprocal chain means the
// numerator Gamma sits at a nonpositive integer while the denominator does
// not: a genuine pole, reported as DegeneracyError. A zero in the direct
// chain is the reciprocal-Gamma-vanishes convention and simply yields 0.
Rational gammaRatio(const Rational& a, const Rational& c, const Rational& x);

// Same ratio over any field F; xa1 = x+a+1, xc1 = x+c+1, k = a-c. Division
// by zero can only happen for F = Rational (an eps-perturbed chain is a
// nonzero polynomial).
template <class F>
F gammaRatioF(const F& xa1, const F& xc1, long k) {
    if (k >= 0) return pochhammerF(xc1, k);
    return F(Rational(1)) / pochhammerF(xa1, -k);
}

// binom(a, k) = (a-k+1)_k / k! for integer k >= 0, and 0 for k < 0.
Rational genBinom(const Rational& a, long k);

Rational factorial(long n);

// theta_n = n(n + alpha + beta + 1), accepted at any rational index.
Rational thetaEig(const Rational& n, const JacobiParams& p);

template <class F>
F thetaEigF(const F& n, const F& ab1) {
    return n * (n + ab1);
}

// Degree-n renormalized polynomial; every coefficient exact.
UniPoly jacobiPoly(long n, const JacobiParams& p);

// W(i, j): total mass of the (i, j)-shifted weight relative to the base
// weight's mass. Throws DegeneracyError when the continued integral
// diverges (a Gamma pole survives in numerator position).
Rational normalizedMass(long i, long j, const JacobiParams& p);

// Integral of pPoly against the (i, j)-shifted weight, relative to the base
// mass: expand pPoly in powers of (1+x) and sum shifted masses.
Rational normalizedMoment(const UniPoly& pPoly, long i, long j, const JacobiParams& p);

// Closed form for the integral of the degree-n polynomial against the
// (0, -l)-shifted weight, relative to the base mass; l >= 1. Must agree with
// normalizedMoment(jacobiPoly(n), 0, -l).
Rational jacobiWeightedIntegral(long n, long l, const JacobiParams& p);

enum class Endpoint { MinusOne, PlusOne };

// Closed-form j-th derivative of (1+x)^k J_n at -1 (Endpoint::MinusOne), or
// of (1-x)^k J_n at +1 (Endpoint::PlusOne).
Rational boundaryDerivative(long n, long k, long j, Endpoint at, const JacobiParams& p);

// Both sides of the binomial summation identity used by the discrete-Sobolev
// reduction, computed independently (lhs: direct sum, rhs: product).
// Nonnegative integer arguments with s >= beta + k.
std::pair<Rational, Rational> combinatorialIdentity(long alpha, long beta, long s, long k, long u);

} // namespace jtpoly

#endif
