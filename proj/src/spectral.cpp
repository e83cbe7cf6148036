#include "jtpoly/spectral.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace jtpoly {

std::vector<Rational> expandInQ(const UniPoly& p, FamilySession& fam) {
    const int degP = p.degree();
    std::vector<Rational> coords(std::max(degP + 1, 0), Rational(0));
    UniPoly rem = p;
    for (int k = degP; k >= 0; --k) {
        if (rem.degree() < k) continue;
        const UniPoly& qk = fam.q(k);
        Rational ck = rem.coeff(k) / qk.leading();
        if (ck == 0) continue;
        coords[k] = ck;
        rem -= qk * ck;
    }
    if (!rem.isZero()) throw DegeneracyError("q-basis expansion left a remainder");
    return coords;
}

Rational RecurrenceTable::gammaAt(int n, int j) const {
    auto it = gamma.find({n, j});
    return it == gamma.end() ? Rational(0) : it->second;
}

RecurrenceTable recurrenceTable(const UniPoly& q, int n0, int n1, FamilySession& fam) {
    if (n0 < 0 || n1 < n0) throw ConfigError("recurrence window must be 0 <= n0 <= n1");
    RecurrenceTable table;
    table.Q = q;
    table.n0 = n0;
    table.n1 = n1;
    int lo = 0, hi = 0;
    bool any = false;
    for (int n = n0; n <= n1; ++n) {
        std::vector<Rational> coords = expandInQ(q * fam.q(n), fam);
        for (int k = 0; k < static_cast<int>(coords.size()); ++k) {
            if (coords[k] == 0) continue;
            int j = k - n;
            table.gamma[{n, j}] = coords[k];
            if (!any) {
                lo = hi = j;
                any = true;
            } else {
                lo = std::min(lo, j);
                hi = std::max(hi, j);
            }
        }
    }
    if (any) table.band = std::make_pair(lo, hi);
    return table;
}

std::pair<int, int> divisibilityExponents(const FamilyConfig& cfg, PairMode mode) {
    if (mode == PairMode::Generic) return {cfg.maxG(), cfg.maxH()};
    long alpha = ratToLong(cfg.params.alpha);
    long beta = ratToLong(cfg.params.beta);
    int p1 = static_cast<int>(std::max<long>(cfg.maxG() - beta + 1, beta));
    int p2 = static_cast<int>(std::max<long>(cfg.maxH() - alpha + 1, alpha));
    return {p1, p2};
}

std::vector<UniPoly> divisibilityFamily(int maxDeg, const FamilyConfig& cfg, PairMode mode) {
    auto [p1, p2] = divisibilityExponents(cfg, mode);
    std::vector<UniPoly> basis{UniPoly(Rational(1))};
    UniPoly core = UniPoly{Rational(1), Rational(1)}.pow(p1) * UniPoly{Rational(1), Rational(-1)}.pow(p2);
    for (int k = 0; p1 + p2 + k + 1 <= maxDeg; ++k)
        basis.push_back((core * UniPoly::monomial(k)).antiderivative());
    return basis;
}

std::vector<UniPoly> algebraScan(int maxDeg, int n0, int n1, FamilySession& fam) {
    if (maxDeg < 0) throw ConfigError("algebraScan needs maxDeg >= 0");
    const int m = fam.config().m();
    if (n1 - n0 + 1 < 2 * maxDeg + m + 2)
        throw ConfigError("algebraScan window shorter than the certification margin");

    // gamma_{n, k-n}(Q) is linear in Q's coefficients; stack the below-band
    // constraints for every window index and take the kernel.
    std::vector<std::vector<Rational>> rows;
    for (int n = n0; n <= n1; ++n) {
        std::vector<std::vector<Rational>> expansions(maxDeg + 1);
        for (int d = 0; d <= maxDeg; ++d)
            expansions[d] = expandInQ(UniPoly::monomial(d) * fam.q(n), fam);
        for (int k = 0; k < n - maxDeg; ++k) {
            std::vector<Rational> row(maxDeg + 1, Rational(0));
            bool nonzero = false;
            for (int d = 0; d <= maxDeg; ++d) {
                if (k < static_cast<int>(expansions[d].size())) row[d] = expansions[d][k];
                nonzero = nonzero || row[d] != 0;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    ExactMatrix<Rational> constraints(static_cast<int>(rows.size()), maxDeg + 1);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int d = 0; d <= maxDeg; ++d) constraints.at(i, d) = rows[i][d];

    std::vector<UniPoly> basis;
    for (const auto& vec : nullspaceBasis(constraints)) basis.push_back(UniPoly(vec));
    return basis;
}

UniPoly ShiftedPoly::toPoly() const {
    UniPoly shift = (side == Side::PlusOne) ? UniPoly{Rational(1), Rational(1)}
                                            : UniPoly{Rational(1), Rational(-1)};
    UniPoly out;
    for (size_t k = 0; k < sigma.size(); ++k)
        if (sigma[k] != 0) out += shift.pow(static_cast<int>(k)) * sigma[k];
    return out;
}

int ShiftedPoly::minExponent() const {
    for (size_t k = 0; k < sigma.size(); ++k)
        if (sigma[k] != 0) return static_cast<int>(k);
    return -1;
}

WitnessResult nonexistenceWitness(const ShiftedPoly& q, FamilySession& fam, int n0, int n1) {
    WitnessResult result;
    const FamilyConfig& cfg = fam.config();
    int low = q.minExponent();
    if (low < 0) return result;

    const std::vector<int>& set = (q.side == ShiftedPoly::Side::PlusOne) ? cfg.G : cfg.H;
    std::set<int> lookup(set.begin(), set.end());
    for (int e : set) {
        if (e - low >= 0 && !lookup.count(e - low)) {
            result.hypothesisApplies = true;
            break;
        }
    }

    UniPoly poly = q.toPoly();
    RecurrenceTable table = recurrenceTable(poly, n0, n1, fam);
    for (const auto& [key, value] : table.gamma) {
        if (key.second < -poly.degree()) {
            result.witness = key;
            break;
        }
    }
    return result;
}

void KrallSpec::validate() const {
    if (m1 < 1 || m2 < 1) throw ConfigError("krall spec needs m1, m2 >= 1");
    if (alpha < m2 || beta < m1)
        throw ConfigError("krall spec needs alpha >= m2 and beta >= m1");
    if (static_cast<int>(a.size()) != m1 || static_cast<int>(b.size()) != m2)
        throw ConfigError("krall spec perturbation lists must have sizes m1 and m2");
    if (a[0] == 0 || b[0] == 0) throw ConfigError("krall spec needs a0, b0 != 0");
}

FamilyConfig krallBuild(const KrallSpec& spec) {
    spec.validate();
    FamilyConfig cfg;
    cfg.params.alpha = Rational(spec.alpha);
    cfg.params.beta = Rational(spec.beta);
    for (int k = 0; k < spec.m1; ++k) cfg.G.push_back(static_cast<int>(spec.beta) + k);
    for (int k = 0; k < spec.m2; ++k) cfg.H.push_back(static_cast<int>(spec.alpha) + k);

    const int top = std::max(cfg.maxG(), cfg.maxH());
    std::vector<UniPoly> uTheta(top + 1);
    for (int s = 0; s <= top; ++s)
        uTheta[s] = toThetaBasis(uLambdaPoly(s, cfg.params.alpha, cfg.params), cfg.params);

    auto block = [&](long base, int count, const std::vector<Rational>& strengths) {
        std::map<int, UniPoly> polys;
        for (int k = 1; k <= count; ++k) {
            UniPoly poly = uTheta[base + k - 1];
            for (int l = 0; l <= k - 1; ++l) {
                Rational coef = pochhammer(Rational(base + k - l), l) * genBinom(Rational(k - 1), l) *
                                strengths[k - l - 1] /
                                (Rational(signPow(l)) * pochhammer(Rational(base - l), l));
                poly += uTheta[l] * coef;
            }
            polys[static_cast<int>(base) + k - 1] = std::move(poly);
        }
        return polys;
    };
    cfg.R = block(spec.beta, spec.m1, spec.a);
    cfg.S = block(spec.alpha, spec.m2, spec.b);
    cfg.validate();
    return cfg;
}

ThreeTermResult threeTermCheck(FamilySession& fam, int n0, int n1) {
    ThreeTermResult result;
    result.rt = recurrenceTable(UniPoly::monomial(1), n0, n1, fam);
    result.holds = true;
    for (const auto& [key, value] : result.rt.gamma) {
        if (key.second < -1) {
            result.holds = false;
            result.witness = key;
            break;
        }
    }
    if (result.holds) {
        for (int n = n0; n <= n1; ++n)
            result.table.push_back({n, result.rt.gammaAt(n, 1), result.rt.gammaAt(n, 0),
                                    result.rt.gammaAt(n, -1)});
    }
    return result;
}

Rational massPairing(FamilySession& fam, const UniPoly& p, const UniPoly& q,
                     const std::vector<Rational>& c, const std::vector<Rational>& d) {
    const FamilyConfig& cfg = fam.config();
    UniPoly prod = p * q;
    Rational acc = normalizedMoment(prod, -cfg.m2(), -cfg.m1(), cfg.params);
    for (size_t h = 0; h < c.size(); ++h)
        acc += c[h] * Rational(signPow(h)) * prod.derivative(static_cast<int>(h))(Rational(1));
    for (size_t h = 0; h < d.size(); ++h)
        acc += d[h] * Rational(signPow(h)) * prod.derivative(static_cast<int>(h))(Rational(-1));
    return acc;
}

MeasureFit measureFit(FamilySession& fam, int fitMaxN, int verifyMaxN) {
    const FamilyConfig& cfg = fam.config();
    const Rational& alpha = cfg.params.alpha;
    const Rational& beta = cfg.params.beta;
    if (!isInteger(alpha) || !isInteger(beta) || alpha < cfg.m2() || beta < cfg.m1())
        throw ConfigError("measure fit needs integer alpha >= m2 and beta >= m1");
    const int m1 = cfg.m1(), m2 = cfg.m2();
    const int unknowns = m1 + m2;  // order: c_0..c_{m2-1}, d_0..d_{m1-1}

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int n = 1; n <= fitMaxN; ++n) {
        for (int i = 0; i < n; ++i) {
            UniPoly prod = fam.q(n) * fam.q(i);
            std::vector<Rational> row(unknowns, Rational(0));
            for (int h = 0; h < m2; ++h)
                row[h] = Rational(signPow(h)) * prod.derivative(h)(Rational(1));
            for (int h = 0; h < m1; ++h)
                row[m2 + h] = Rational(signPow(h)) * prod.derivative(h)(Rational(-1));
            rows.push_back(std::move(row));
            rhs.push_back(-normalizedMoment(prod, -m2, -m1, cfg.params));
        }
    }

    ExactMatrix<Rational> a(static_cast<int>(rows.size()), unknowns);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int cIdx = 0; cIdx < unknowns; ++cIdx) a.at(r, cIdx) = rows[r][cIdx];
    auto solution = solveLinear(a, rhs);
    if (!solution)
        throw PropertyViolation("measure fit inconsistent: the family is not of point-mass type");

    MeasureFit fit;
    fit.c.assign(solution->particular.begin(), solution->particular.begin() + m2);
    fit.d.assign(solution->particular.begin() + m2, solution->particular.end());
    fit.freeDirections = solution->kernel;

    fit.verified = true;
    for (int n = 1; n <= verifyMaxN && fit.verified; ++n) {
        for (int i = 0; i < n; ++i) {
            if (n <= fitMaxN) continue;  // disjoint verification window
            if (massPairing(fam, fam.q(n), fam.q(i), fit.c, fit.d) != 0) {
                fit.verified = false;
                fit.verifyFailure = std::make_pair(n, i);
                break;
            }
        }
    }
    return fit;
}

} // namespace jtpoly
