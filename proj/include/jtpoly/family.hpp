#ifndef JTPOLY_FAMILY_HPP
#define JTPOLY_FAMILY_HPP

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "jtpoly/epsfrac.hpp"
#include "jtpoly/jacobi.hpp"
#include "jtpoly/linalg.hpp"
#include "jtpoly/unipoly.hpp"

namespace jtpoly {

// Full input datum of a Jacobi-type family: parameters, the two ascending
// sets of positive integers G and H, and monic theta-polynomials R_g (deg g)
// and S_h (deg h).
struct FamilyConfig {
    JacobiParams params;
    std::vector<int> G;
    std::vector<int> H;
    std::map<int, UniPoly> R;  // keyed by g in G
    std::map<int, UniPoly> S;  // keyed by h in H

    int m1() const { return static_cast<int>(G.size()); }
    int m2() const { return static_cast<int>(H.size()); }
    int m() const { return m1() + m2(); }
    int maxG() const { return G.back(); }
    int maxH() const { return H.back(); }

    // The interleaved family polynomials: Z_i = R_{g_i} for i = 1..m1 and
    // Z_i = S_{h_{i-m1}} for i = m1+1..m.
    const UniPoly& Z(int i) const;

    void validate() const;  // throws ConfigError
};

// Per-parameter scalar view used to evaluate the family determinants over a
// generic field: plain rationals, or eps-perturbed values when the
// denominator polynomials vanish at an integer point.
template <class F>
struct ParamView {
    F alpha;
    F beta;
    F ab1() const { return alpha + beta + F(Rational(1)); }
};

// Row weight of the quasi-Casoratian: 1 for rows past the first block,
// otherwise a signed product of two Gamma ratios with integer shifts.
// (Named locals keep GMP's expression templates from leaking into the
// deduced field type.)
template <class F>
F rhoFactorF(const ParamView<F>& pv, int i, int j, const F& x, int m, int m1) {
    if (i > m1) return F(Rational(1));
    F xa1 = x + pv.alpha + F(Rational(1 - j));
    F xc1 = x + pv.alpha + F(Rational(1 - m));
    F xb1 = x + pv.beta;
    F xd1 = x + pv.beta + F(Rational(1 - j));
    F value = gammaRatioF<F>(xa1, xc1, m - j);
    F second = gammaRatioF<F>(xb1, xd1, j - 1);
    value = value * second;
    if ((m - j) % 2 != 0) value = -value;
    return value;
}

template <class F>
F pDenomF(const ParamView<F>& pv, const F& x, int m1, int m) {
    F acc{Rational(1)};
    for (int i = 1; i <= m1 - 1; ++i) {
        F left = x + pv.alpha + F(Rational(1 - m));
        F right = x + pv.beta + F(Rational(i - m1));
        F t = pochhammerF<F>(left, m1 - i) * pochhammerF<F>(right, m1 - i);
        if ((m1 - i) % 2 != 0) t = -t;
        acc = acc * t;
    }
    return acc;
}

template <class F>
F qDenomF(const ParamView<F>& pv, const F& x, int m) {
    F acc{Rational(1)};
    for (int h = 1; h <= m - 1; ++h)
        for (int i = 1; i <= h; ++i) {
            F factor = F(Rational(2)) * x + pv.alpha + pv.beta + F(Rational(i + h - 2 * m));
            acc = acc * factor;
        }
    if ((static_cast<long>(m) * (m - 1) / 2) % 2 != 0) acc = -acc;
    return acc;
}

// The m x (m+1) grid of weighted theta-evaluations: row i-1 (i = 1..m),
// column j = 0..m holds rho^i_{x,j} Z_i(theta_{x-j}).
template <class F>
ExactMatrix<F> familyGrid(const FamilyConfig& cfg, const ParamView<F>& pv, const F& x) {
    const int m = cfg.m();
    ExactMatrix<F> grid(m, m + 1);
    for (int j = 0; j <= m; ++j) {
        F shifted = x - F(Rational(j));
        F th = thetaEigF<F>(shifted, pv.ab1());
        for (int i = 1; i <= m; ++i) {
            F entry = rhoFactorF<F>(pv, i, j, x, m, cfg.m1()) * cfg.Z(i).template evalAt<F>(th);
            grid.at(i - 1, j) = entry;
        }
    }
    return grid;
}

// Minor of the grid skipping column `skip` (columns 1..m for the
// quasi-Casoratian itself, which is the skip = 0 case).
template <class F>
F gridMinor(const ExactMatrix<F>& grid, int skip) {
    const int m = grid.rows();
    ExactMatrix<F> sq(m, m);
    for (int i = 0; i < m; ++i) {
        int col = 0;
        for (int j = 0; j <= m; ++j) {
            if (j == skip) continue;
            sq.at(i, col++) = grid.at(i, j);
        }
    }
    return detFractionFree(sq);
}

// frak p and frak q as exact polynomials in x.
std::pair<UniPoly, UniPoly> pqPolys(const FamilyConfig& cfg);

// rho^i_{x,j} over the rationals (throws DegeneracyError on a pole).
Rational rhoFactor(int i, int j, const Rational& x, const FamilyConfig& cfg);

// Paired-Pochhammer polynomial (x+alpha-lambda+1)_j (x+beta+lambda-j+1)_j,
// symmetric under x -> -x-alpha-beta-1.
UniPoly uLambdaPoly(int j, const Rational& lambda, const JacobiParams& p);

// Inverse of the theta substitution: the unique T with T(theta_x) = pPoly(x).
// Throws ConfigError when pPoly is not symmetric.
UniPoly toThetaBasis(const UniPoly& pPoly, const JacobiParams& p);

// Coordinates of the family polynomials in the u-basis.
struct UExpansion {
    std::map<int, std::vector<Rational>> nu;     // g -> nu_0..nu_g
    std::map<int, std::vector<Rational>> omega;  // h -> omega_0..omega_h
};
UExpansion expandInU(const FamilyConfig& cfg);

// Lower-triangular remixing of the R and S blocks; the produced family must
// generate identical polynomials q_n.
FamilyConfig mixInvariance(const FamilyConfig& cfg,
                           const std::map<std::pair<int, int>, Rational>& zeta,
                           const std::map<std::pair<int, int>, Rational>& chi);

// Bordered-determinant ratios in a free first (resp. last) row of
// theta-polynomials Y, recovered as exact polynomials in x by interpolation
// at integer sample points where the denominator does not vanish.
UniPoly wDetA(const std::vector<UniPoly>& y, const FamilyConfig& cfg);
UniPoly wDetB(const std::vector<UniPoly>& y, const FamilyConfig& cfg);
// Degree bounds from the block-degree law.
int wDegreeBoundA(const std::vector<int>& degs, const FamilyConfig& cfg);
int wDegreeBoundB(const std::vector<int>& degs, const FamilyConfig& cfg);

// Owns the memoized sequence data of one family: the renormalized Jacobi
// polynomials, the quasi-Casoratian values, the expansion coefficients
// beta_{n,j}, and the polynomials q_n. Populating the cache is serialized;
// reads of already-built records are safe from concurrent callers.
class FamilySession {
public:
    explicit FamilySession(FamilyConfig cfg);

    const FamilyConfig& config() const { return cfg_; }
    const JacobiParams& params() const { return cfg_.params; }

    const UniPoly& jac(int n);
    Rational lambda(int n);
    // All m+1 expansion coefficients. At integer parameters the entries with
    // j > n can genuinely diverge (they multiply polynomials of negative
    // index and are not covered by the finiteness guarantee); in that case
    // this throws while q(n) stays available.
    std::vector<Rational> betas(int n);
    // Single coefficient, nullopt when it diverges at the integer parameters.
    std::optional<Rational> betaOpt(int n, int j);
    // q_n; throws DegeneracyError naming the offending index when the
    // nondegeneracy certificate Lambda(n) != 0 fails.
    const UniPoly& q(int n);

    const UniPoly& pDen() const { return pDen_; }
    const UniPoly& qDen() const { return qDen_; }

private:
    struct Record {
        Rational lambda;
        std::vector<std::optional<Rational>> betas;
        UniPoly qn;
        bool qBuilt = false;
    };
    Record& record(int n);
    Record computeRecord(int n) const;

    FamilyConfig cfg_;
    UniPoly pDen_, qDen_;
    std::map<int, UniPoly> jacCache_;
    std::map<int, Record> cache_;
    std::mutex mu_;
};

} // namespace jtpoly

#endif
