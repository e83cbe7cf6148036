#ifndef JTPOLY_SPECTRAL_HPP
#define JTPOLY_SPECTRAL_HPP

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jtpoly/bilinear.hpp"
#include "jtpoly/family.hpp"

namespace jtpoly {

// Coefficients c_k with p = sum c_k q_k; the q-basis is degree-graded so
// this is a triangular solve.
std::vector<Rational> expandInQ(const UniPoly& p, FamilySession& fam);

// Exact coefficients of Q q_n in the q-basis over an index window, with the
// observed band. The vanishing pattern is certified on the window only.
struct RecurrenceTable {
    UniPoly Q;
    int n0 = 0, n1 = -1;
    std::map<std::pair<int, int>, Rational> gamma;  // nonzero (n, j) entries
    std::optional<std::pair<int, int>> band;        // (s, r) over the window

    Rational gammaAt(int n, int j) const;
};

RecurrenceTable recurrenceTable(const UniPoly& q, int n0, int n1, FamilySession& fam);

// Basis of {Q : deg Q <= maxDeg, (1+x)^{p1} (1-x)^{p2} divides Q'} together
// with the constants; (p1, p2) = (max G, max H) in Generic mode and
// (max{max G - beta + 1, beta}, max{max H - alpha + 1, alpha}) in Sobolev
// mode.
std::vector<UniPoly> divisibilityFamily(int maxDeg, const FamilyConfig& cfg, PairMode mode);
std::pair<int, int> divisibilityExponents(const FamilyConfig& cfg, PairMode mode);

// Basis of the degree-bounded eigenvalue polynomials whose recurrence band
// stays within [-maxDeg, maxDeg] across the window: a window certificate,
// not a proof. Window length must be at least 2 maxDeg + m + 2.
std::vector<UniPoly> algebraScan(int maxDeg, int n0, int n1, FamilySession& fam);

// Polynomial written in shifted powers of (1 + x) (PlusOne) or (1 - x)
// (MinusOne).
struct ShiftedPoly {
    enum class Side { PlusOne, MinusOne };
    Side side = Side::PlusOne;
    std::vector<Rational> sigma;  // sigma[k] multiplies the k-th shifted power

    UniPoly toPoly() const;
    int minExponent() const;  // lowest k with sigma[k] != 0; -1 if zero
};

struct WitnessResult {
    bool hypothesisApplies = false;          // the structural nonexistence test fires
    std::optional<std::pair<int, int>> witness;  // (n, j) with j < -deg Q and gamma != 0
};

// Scans the window for an out-of-band coefficient of Q q_n; the structural
// hypothesis (some element of G, resp. H, drops out of the set after the
// minimal shift) predicts one exists.
WitnessResult nonexistenceWitness(const ShiftedPoly& q, FamilySession& fam, int n0, int n1);

// Data of a point-mass family: segment sets G = {beta..beta+m1-1},
// H = {alpha..alpha+m2-1} and endpoint perturbation strengths.
struct KrallSpec {
    long alpha = 1, beta = 1;
    int m1 = 1, m2 = 1;
    std::vector<Rational> a;  // size m1, a[0] != 0
    std::vector<Rational> b;  // size m2, b[0] != 0

    void validate() const;
};

FamilyConfig krallBuild(const KrallSpec& spec);

struct ThreeTermRow {
    int n;
    Rational a, b, c;  // x q_n = a q_{n+1} + b q_n + c q_{n-1}
};

struct ThreeTermResult {
    bool holds = false;
    std::vector<ThreeTermRow> table;             // filled when holds
    std::optional<std::pair<int, int>> witness;  // gamma_{n,j} != 0 with j < -1
    RecurrenceTable rt;
};

ThreeTermResult threeTermCheck(FamilySession& fam, int n0, int n1);

// Point-mass pairing fit: the integral part uses the doubly shifted weight,
// the endpoint parts pair h-th delta derivatives with (-1)^h (pq)^(h).
struct MeasureFit {
    std::vector<Rational> c;  // m2 coefficients at +1
    std::vector<Rational> d;  // m1 coefficients at -1
    std::vector<std::vector<Rational>> freeDirections;  // affine solution space
    bool verified = false;
    std::optional<std::pair<int, int>> verifyFailure;
};

// Solves the orthogonality system on pairs (n, i), i < n <= fitMaxN, then
// re-checks every pair with n <= verifyMaxN outside the fit set. Requires
// integer parameters with alpha >= m2, beta >= m1. Throws PropertyViolation
// when the system is inconsistent (the family is not of point-mass type).
MeasureFit measureFit(FamilySession& fam, int fitMaxN, int verifyMaxN);

// The fitted pairing itself, for reports and verification.
Rational massPairing(FamilySession& fam, const UniPoly& p, const UniPoly& q,
                     const std::vector<Rational>& c, const std::vector<Rational>& d);

} // namespace jtpoly

#endif
