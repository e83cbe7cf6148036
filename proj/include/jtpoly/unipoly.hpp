#ifndef JTPOLY_UNIPOLY_HPP
#define JTPOLY_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "jtpoly/rational.hpp"

namespace jtpoly {

// Dense univariate polynomial over the rationals, coefficients ascending
// (index k holds the coefficient of X^k). The variable is whatever the caller
// says it is: x, theta, or the perturbation symbol.
//
// Invariant: the highest stored coefficient is nonzero, or the vector is
// empty (the zero polynomial). degree() of zero is kZeroDegree, standing in
// for -infinity.
class UniPoly {
public:
    static constexpr int kZeroDegree = -1;

    UniPoly() = default;
    UniPoly(const Rational& constant);
    UniPoly(std::initializer_list<Rational> ascending);
    explicit UniPoly(std::vector<Rational> ascending);

    static UniPoly monomial(int k, const Rational& coef = Rational(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool isZero() const { return coeffs_.empty(); }
    Rational coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& scalar);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    bool operator==(const UniPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    Rational operator()(const Rational& x) const;

    // Horner evaluation in any commutative ring constructible from Rational.
    template <class F>
    F evalAt(const F& x) const {
        F acc{Rational(0)};
        for (int k = degree(); k >= 0; --k) acc = acc * x + F(coeffs_[k]);
        return acc;
    }

    UniPoly derivative() const;
    UniPoly derivative(int order) const;
    // Antiderivative with zero constant term.
    UniPoly antiderivative() const;
    UniPoly pow(int e) const;
    // this(inner(X))
    UniPoly compose(const UniPoly& inner) const;

    // Euclidean division; divisor must be nonzero.
    static void divmod(const UniPoly& num, const UniPoly& den, UniPoly& quot, UniPoly& rem);
    bool divides(const UniPoly& multiple) const;
    // Monic gcd; gcd(0,0) = 0.
    static UniPoly gcd(UniPoly a, UniPoly b);

    // Multiplicity of the root X = 0 (index of the lowest nonzero
    // coefficient); kZeroDegree for the zero polynomial.
    int orderAtZero() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace jtpoly

#endif
