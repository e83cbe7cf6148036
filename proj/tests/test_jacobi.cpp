#include <doctest.h>

#include "jtpoly/jacobi.hpp"
#include "jtpoly/linalg.hpp"

#include "oracles.hpp"

using namespace jtpoly;

namespace {

// Pool of admissible non-integer parameter pairs used across the property
// tests (alpha, beta, alpha+beta all away from the negative integers).
std::vector<JacobiParams> paramPool() {
    return {{ratio(1, 2), ratio(1, 3)},
            {ratio(5, 7), ratio(3, 2)},
            {ratio(-1, 3), ratio(7, 5)},
            {ratio(9, 4), ratio(-2, 5)}};
}

} // namespace

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(ratio(5, 3), 0) == Rational(1));
    CHECK(pochhammer(Rational(3), 2) == Rational(12));
    CHECK(pochhammer(ratio(1, 2), 3) == ratio(15, 8));
    CHECK_THROWS_AS(pochhammer(Rational(1), -1), ConfigError);
}

TEST_CASE("gamma ratios: chains, identity, reciprocal, pole") {
    CHECK(gammaRatio(Rational(2), Rational(0), Rational(2)) == Rational(12));
    CHECK(gammaRatio(ratio(7, 5), ratio(7, 5), ratio(1, 3)) == Rational(1));
    CHECK(gammaRatio(Rational(0), Rational(2), ratio(1, 2)) == ratio(4, 15));
    // Zero in the direct chain: the reciprocal-Gamma convention gives 0.
    CHECK(gammaRatio(Rational(1), Rational(-2), Rational(0)) == Rational(0));
    // Numerator Gamma at a nonpositive integer with finite denominator: pole.
    CHECK_THROWS_AS(gammaRatio(Rational(-2), Rational(0), Rational(0)), DegeneracyError);
}

TEST_CASE("renormalized polynomials at low degree") {
    JacobiParams p{ratio(1, 2), ratio(1, 3)};
    CHECK(jacobiPoly(0, p) == UniPoly(Rational(1)));

    // Degree one from the defining sum:
    // -(alpha+beta+1)/(2(beta+1)) [ (beta+1)(x-1) + (alpha+1)(x+1) ].
    for (const auto& params : paramPool()) {
        UniPoly expected =
            (UniPoly{Rational(-1), Rational(1)} * (params.beta + 1) +
             UniPoly{Rational(1), Rational(1)} * (params.alpha + 1)) *
            (-params.ab1() / (2 * (params.beta + 1)));
        CHECK(jacobiPoly(1, params) == expected);
    }

    JacobiParams legendre{Rational(0), Rational(0)};
    CHECK(jacobiPoly(1, legendre) == UniPoly{Rational(0), Rational(-1)});

    JacobiParams bad{Rational(-2), Rational(0)};
    CHECK_THROWS_AS(jacobiPoly(1, bad), ConfigError);
}

TEST_CASE("eigenvalue map") {
    JacobiParams p{ratio(1, 2), ratio(1, 3)};
    CHECK(thetaEig(Rational(0), p) == Rational(0));
    CHECK(thetaEig(Rational(1), p) == p.alpha + p.beta + 2);
    CHECK(thetaEig(Rational(2), p) == ratio(23, 3));
}

TEST_CASE("normalized masses") {
    for (const auto& p : paramPool()) {
        CHECK(normalizedMass(0, 0, p) == Rational(1));
        CHECK(normalizedMass(1, 0, p) == 2 * (p.alpha + 1) / (p.alpha + p.beta + 2));
    }
    JacobiParams p{ratio(1, 2), ratio(1, 3)};
    CHECK(normalizedMass(0, -1, p) == p.ab1() / (2 * p.beta));
}

TEST_CASE("normalized moments expand in endpoint powers") {
    JacobiParams p{ratio(1, 2), ratio(1, 3)};
    CHECK(normalizedMoment(UniPoly(Rational(1)), 0, 0, p) == Rational(1));
    CHECK(normalizedMoment(UniPoly(Rational(1)), 2, -1, p) == normalizedMass(2, -1, p));
    CHECK(normalizedMoment(UniPoly{Rational(1), Rational(1)}, 0, 0, p) == normalizedMass(0, 1, p));
    CHECK(normalizedMoment(UniPoly{Rational(0), Rational(1)}, 0, 0, p) ==
          normalizedMass(0, 1, p) - 1);
}

TEST_CASE("orthogonality of the renormalized family") {
    for (const auto& p : paramPool()) {
        std::vector<UniPoly> polys;
        for (int n = 0; n <= 8; ++n) polys.push_back(jacobiPoly(n, p));
        for (int n = 0; n <= 8; ++n) {
            for (int k = 0; k < n; ++k)
                CHECK(normalizedMoment(polys[n] * polys[k], 0, 0, p) == 0);
            CHECK(normalizedMoment(polys[n] * polys[n], 0, 0, p) != 0);
        }
    }
}

TEST_CASE("x J_n lies in the span of three consecutive polynomials") {
    for (const auto& p : paramPool()) {
        for (int n = 0; n <= 8; ++n) {
            UniPoly target = UniPoly::monomial(1) * jacobiPoly(n, p);
            UniPoly up = jacobiPoly(n + 1, p);
            UniPoly mid = jacobiPoly(n, p);
            UniPoly down = n > 0 ? jacobiPoly(n - 1, p) : UniPoly();
            ExactMatrix<Rational> a(n + 2, 3);
            std::vector<Rational> rhs(n + 2);
            for (int k = 0; k <= n + 1; ++k) {
                a.at(k, 0) = up.coeff(k);
                a.at(k, 1) = mid.coeff(k);
                a.at(k, 2) = down.coeff(k);
                rhs[k] = target.coeff(k);
            }
            CHECK(solveLinear(a, rhs).has_value());
        }
    }
}

TEST_CASE("weighted integral closed form matches the moment oracle") {
    for (const auto& p : paramPool()) {
        for (int n = 0; n <= 8; ++n)
            for (int l = 1; l <= 3; ++l)
                CHECK(jacobiWeightedIntegral(n, l, p) ==
                      normalizedMoment(jacobiPoly(n, p), 0, -l, p));
    }
    JacobiParams p{ratio(1, 2), ratio(1, 3)};
    CHECK(jacobiWeightedIntegral(0, 1, p) == normalizedMass(0, -1, p));
    JacobiParams p2{ratio(1, 2), ratio(5, 2)};
    CHECK(jacobiWeightedIntegral(2, 2, p2) == normalizedMoment(jacobiPoly(2, p2), 0, -2, p2));
}

TEST_CASE("boundary derivatives match symbolic differentiation") {
    JacobiParams p{ratio(1, 2), ratio(1, 3)};
    CHECK(boundaryDerivative(0, 0, 0, Endpoint::MinusOne, p) == Rational(1));

    for (const auto& params : paramPool()) {
        for (int n = 0; n <= 6; ++n) {
            UniPoly jn = jacobiPoly(n, params);
            for (int k = 0; k <= 2; ++k) {
                UniPoly atMinus = UniPoly{Rational(1), Rational(1)}.pow(k) * jn;
                UniPoly atPlus = UniPoly{Rational(1), Rational(-1)}.pow(k) * jn;
                for (int j = 0; j <= 3; ++j) {
                    CHECK(boundaryDerivative(n, k, j, Endpoint::MinusOne, params) ==
                          atMinus.derivative(j)(Rational(-1)));
                    CHECK(boundaryDerivative(n, k, j, Endpoint::PlusOne, params) ==
                          atPlus.derivative(j)(Rational(1)));
                }
            }
        }
    }

    // (1+x)^k kills every derivative of order < k at -1.
    JacobiParams alt{Rational(1), Rational(2)};
    for (int n = 0; n <= 4; ++n)
        CHECK(boundaryDerivative(n, 1, 0, Endpoint::MinusOne, alt) == 0);
    CHECK(boundaryDerivative(1, 0, 0, Endpoint::MinusOne, alt) ==
          jacobiPoly(1, alt)(Rational(-1)));
}

TEST_CASE("binomial summation identity holds on the admissible grid") {
    CHECK(combinatorialIdentity(0, 0, 0, 0, 0) == std::pair{Rational(1), Rational(1)});
    auto [lhs, rhs] = combinatorialIdentity(1, 1, 2, 0, 1);
    CHECK(lhs == rhs);
    for (long alpha = 0; alpha <= 6; ++alpha)
        for (long beta = 0; beta <= 6; ++beta)
            for (long s = beta; s <= 6; ++s)
                for (long k = 0; k + beta <= s; ++k)
                    for (long u = 0; u <= 6; ++u) {
                        auto [l, r] = combinatorialIdentity(alpha, beta, s, k, u);
                        CHECK(l == r);
                    }
    CHECK_THROWS_AS(combinatorialIdentity(1, 2, 1, 0, 0), ConfigError);
}
