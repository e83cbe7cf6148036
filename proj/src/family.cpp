#include "jtpoly/family.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace jtpoly {

const UniPoly& FamilyConfig::Z(int i) const {
    if (i >= 1 && i <= m1()) return R.at(G[i - 1]);
    if (i > m1() && i <= m()) return S.at(H[i - m1() - 1]);
    throw ConfigError("family polynomial index out of range");
}

void FamilyConfig::validate() const {
    params.validate();
    if (G.empty() || H.empty())
        throw ConfigError("both degree sets must be nonempty");
    auto checkSet = [](const std::vector<int>& set, const char* name) {
        int prev = 0;
        for (int v : set) {
            if (v <= prev) throw ConfigError(std::string(name) + " must be ascending positive integers");
            prev = v;
        }
    };
    checkSet(G, "G");
    checkSet(H, "H");
    auto checkPolys = [](const std::vector<int>& set, const std::map<int, UniPoly>& polys,
                         const char* name) {
        for (int deg : set) {
            auto it = polys.find(deg);
            if (it == polys.end())
                throw ConfigError(std::string(name) + " polynomial missing for degree " + std::to_string(deg));
            if (it->second.degree() != deg || it->second.leading() != 1)
                throw ConfigError(std::string(name) + " polynomial for degree " + std::to_string(deg) +
                                  " must be monic of that degree");
        }
        if (polys.size() != set.size())
            throw ConfigError(std::string(name) + " has polynomials outside the degree set");
    };
    checkPolys(G, R, "R");
    checkPolys(H, S, "S");
}

std::pair<UniPoly, UniPoly> pqPolys(const FamilyConfig& cfg) {
    const Rational& alpha = cfg.params.alpha;
    const Rational& beta = cfg.params.beta;
    const int m1 = cfg.m1(), m = cfg.m();
    UniPoly x{Rational(0), Rational(1)};

    UniPoly p(Rational(1));
    for (int i = 1; i <= m1 - 1; ++i) {
        UniPoly t(Rational(signPow(m1 - i)));
        for (int k = 0; k < m1 - i; ++k) t *= x + UniPoly(alpha - m + 1 + k);
        for (int k = 0; k < m1 - i; ++k) t *= x + UniPoly(beta - m1 + i + k);
        p *= t;
    }

    UniPoly q(Rational(signPow(static_cast<long>(m) * (m - 1) / 2)));
    for (int h = 1; h <= m - 1; ++h)
        for (int i = 1; i <= h; ++i)
            q *= UniPoly{alpha + beta + i + h - 2 * m, Rational(2)};
    return {p, q};
}

Rational rhoFactor(int i, int j, const Rational& x, const FamilyConfig& cfg) {
    if (i < 1 || i > cfg.m() || j < 0 || j > cfg.m())
        throw ConfigError("rhoFactor index out of range");
    ParamView<Rational> pv{cfg.params.alpha, cfg.params.beta};
    return rhoFactorF(pv, i, j, x, cfg.m(), cfg.m1());
}

UniPoly uLambdaPoly(int j, const Rational& lambda, const JacobiParams& p) {
    if (j < 0) throw ConfigError("uLambdaPoly needs j >= 0");
    UniPoly x{Rational(0), Rational(1)};
    UniPoly acc(Rational(1));
    for (int t = 0; t < j; ++t) acc *= x + UniPoly(p.alpha - lambda + 1 + t);
    for (int t = 0; t < j; ++t) acc *= x + UniPoly(p.beta + lambda - j + 1 + t);
    return acc;
}

UniPoly toThetaBasis(const UniPoly& pPoly, const JacobiParams& p) {
    UniPoly theta{Rational(0), p.ab1(), Rational(1)};  // x(x + alpha + beta + 1)
    UniPoly rem = pPoly;
    UniPoly result;
    while (!rem.isZero()) {
        int d = rem.degree();
        if (d % 2 != 0)
            throw ConfigError("not a theta-polynomial: asymmetric input of x-degree " + std::to_string(d));
        Rational c = rem.leading();
        result += UniPoly::monomial(d / 2, c);
        rem -= theta.pow(d / 2) * c;
        if (!rem.isZero() && rem.degree() >= d)
            throw ConfigError("theta reduction failed to decrease degree");
    }
    return result;
}

UExpansion expandInU(const FamilyConfig& cfg) {
    const int top = std::max(cfg.maxG(), cfg.maxH());
    std::vector<UniPoly> uTheta(top + 1);
    for (int s = 0; s <= top; ++s)
        uTheta[s] = toThetaBasis(uLambdaPoly(s, cfg.params.alpha, cfg.params), cfg.params);

    auto expand = [&](const UniPoly& thetaPoly, int deg) {
        std::vector<Rational> coords(deg + 1, Rational(0));
        UniPoly rem = thetaPoly;
        for (int s = deg; s >= 0; --s) {
            Rational c = rem.coeff(s);  // u-basis polys are monic in theta
            coords[s] = c;
            if (c != 0) rem -= uTheta[s] * c;
        }
        if (!rem.isZero()) throw ConfigError("u-basis expansion failed");
        return coords;
    };

    UExpansion out;
    for (int g : cfg.G) out.nu[g] = expand(cfg.R.at(g), g);
    for (int h : cfg.H) out.omega[h] = expand(cfg.S.at(h), h);
    return out;
}

FamilyConfig mixInvariance(const FamilyConfig& cfg,
                           const std::map<std::pair<int, int>, Rational>& zeta,
                           const std::map<std::pair<int, int>, Rational>& chi) {
    FamilyConfig out = cfg;
    std::set<int> gSet(cfg.G.begin(), cfg.G.end());
    std::set<int> hSet(cfg.H.begin(), cfg.H.end());
    for (const auto& [key, coef] : zeta) {
        auto [g, gTilde] = key;
        if (!gSet.count(g) || !gSet.count(gTilde) || gTilde >= g)
            throw ConfigError("R mixing must combine strictly lower degrees within G");
        out.R[g] += cfg.R.at(gTilde) * coef;
    }
    for (const auto& [key, coef] : chi) {
        auto [h, hTilde] = key;
        if (!hSet.count(h) || !hSet.count(hTilde) || hTilde >= h)
            throw ConfigError("S mixing must combine strictly lower degrees within H");
        out.S[h] += cfg.S.at(hTilde) * coef;
    }
    out.validate();  // degree collision would surface here
    return out;
}

namespace {

// The bordered determinants are quasi-Casoratians of a block-enlarged
// structure: m+1 rows of which the leading `weightedRows` carry the
// Gamma-ratio weight, columns j = 1..m+1, normalized by the denominator
// polynomials of the enlarged sizes. The family-sized normalization leaves
// a pole behind, so it cannot be the intended reading.
struct EnlargedEval {
    const std::vector<UniPoly>& rows;
    int weightedRows;
    JacobiParams params;

    // Lambda'(y), or nullopt when the denominator vanishes at this sample.
    std::optional<Rational> at(const Rational& yv) const {
        const int mp = static_cast<int>(rows.size());
        ParamView<Rational> pv{params.alpha, params.beta};
        Rational den = pDenomF(pv, yv, weightedRows, mp) * qDenomF(pv, yv, mp);
        if (den == 0) return std::nullopt;
        ExactMatrix<Rational> mat(mp, mp);
        for (int j = 1; j <= mp; ++j) {
            Rational th = thetaEig(yv - j, params);
            Rational rho = rhoFactorF(pv, 1, j, yv, mp, weightedRows);
            for (int i = 1; i <= mp; ++i)
                mat.at(i - 1, j - 1) = (i <= weightedRows ? rho : Rational(1)) * rows[i - 1](th);
        }
        return detFractionFree(mat) / den;
    }
};

// W(x) = Lambda'(x+1), recovered by Newton interpolation over integer
// samples with one extra point as a cross-check.
UniPoly wInterpolate(const std::vector<UniPoly>& y, const FamilyConfig& cfg, int degreeBound,
                     int weightedRows) {
    if (y.size() != static_cast<size_t>(cfg.m() + 1))
        throw ConfigError("bordered determinant needs m+1 polynomials");
    EnlargedEval eval{y, weightedRows, cfg.params};
    const int points = std::max(degreeBound, 0) + 2;

    std::vector<Rational> xs, vals;
    for (long x = 0; static_cast<int>(xs.size()) < points; ++x) {
        Rational rx(x);
        std::optional<Rational> value = eval.at(rx + 1);
        if (!value) continue;  // resample past denominator zeros
        xs.push_back(rx);
        vals.push_back(*value);
    }

    const int n = points - 1;
    std::vector<Rational> coef(vals.begin(), vals.begin() + n);
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
    UniPoly result;
    for (int i = n - 1; i >= 0; --i) {
        result *= UniPoly{-xs[i], Rational(1)};
        result += UniPoly(coef[i]);
    }
    if (result(xs[n]) != vals[n])
        throw DegeneracyError("bordered determinant is not a polynomial of the expected degree");
    return result;
}

} // namespace

int wDegreeBoundA(const std::vector<int>& degs, const FamilyConfig& cfg) {
    long sum = 0;
    for (int d : degs) sum += d;
    long m1 = cfg.m1(), m2 = cfg.m2();
    return static_cast<int>(2 * (sum - m1 * (m1 + 1) / 2 - m2 * (m2 - 1) / 2));
}

int wDegreeBoundB(const std::vector<int>& degs, const FamilyConfig& cfg) {
    long sum = 0;
    for (int d : degs) sum += d;
    long m1 = cfg.m1(), m2 = cfg.m2();
    return static_cast<int>(2 * (sum - m1 * (m1 - 1) / 2 - m2 * (m2 + 1) / 2));
}

UniPoly wDetA(const std::vector<UniPoly>& y, const FamilyConfig& cfg) {
    std::vector<int> degs;
    for (const auto& p : y) degs.push_back(p.degree());
    return wInterpolate(y, cfg, wDegreeBoundA(degs, cfg), cfg.m1() + 1);
}

UniPoly wDetB(const std::vector<UniPoly>& y, const FamilyConfig& cfg) {
    // Rows carry Y_1..Y_{m+1}; the appended last row joins the second block.
    std::vector<int> degs;
    for (const auto& p : y) degs.push_back(p.degree());
    return wInterpolate(y, cfg, wDegreeBoundB(degs, cfg), cfg.m1());
}

FamilySession::FamilySession(FamilyConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
    auto pq = pqPolys(cfg_);
    pDen_ = std::move(pq.first);
    qDen_ = std::move(pq.second);
}

const UniPoly& FamilySession::jac(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = jacCache_.find(n);
    if (it == jacCache_.end())
        it = jacCache_.emplace(n, jacobiPoly(n, cfg_.params)).first;
    return it->second;
}

FamilySession::Record FamilySession::computeRecord(int n) const {
    const int m = cfg_.m();
    Record rec;
    rec.betas.resize(m + 1);
    Rational pq = pDen_(Rational(n)) * qDen_(Rational(n));
    if (pq != 0) {
        ParamView<Rational> pv{cfg_.params.alpha, cfg_.params.beta};
        ExactMatrix<Rational> grid = familyGrid(cfg_, pv, Rational(n));
        rec.lambda = gridMinor(grid, 0) / pq;
        for (int j = 0; j <= m; ++j) rec.betas[j] = gridMinor(grid, j) / pq;
        return rec;
    }
    // Denominator vanishes (integer parameters, n < m): regularize with a
    // shared perturbation and take the limit entry by entry. A pole along
    // the first direction can be a resonance artifact, so each entry retries
    // along a skew direction. The coefficients with j <= n are finite by the
    // well-definedness of q_n; the j > n ones multiply polynomials of
    // negative index and may genuinely diverge, which is recorded as an
    // absent entry rather than an error.
    std::optional<ExactMatrix<EpsFrac>> grids[2];
    EpsFrac denoms[2];
    auto minorLimit = [&](int skip) -> std::optional<Rational> {
        for (int direction = 0; direction < 2; ++direction) {
            if (!grids[direction]) {
                EpsFrac eps = EpsFrac::eps();
                EpsFrac scaled = eps * Rational(direction + 1);
                ParamView<EpsFrac> pv{EpsFrac(cfg_.params.alpha) + eps,
                                      EpsFrac(cfg_.params.beta) + scaled};
                EpsFrac x{Rational(n)};
                denoms[direction] = pDenomF(pv, x, cfg_.m1(), m) * qDenomF(pv, x, m);
                grids[direction] = familyGrid(cfg_, pv, x);
            }
            try {
                return epsLimit(gridMinor(*grids[direction], skip) / denoms[direction]);
            } catch (const DegeneracyError&) {
            }
        }
        return std::nullopt;
    };
    std::optional<Rational> lambda = minorLimit(0);
    if (!lambda)
        throw DegeneracyError("family determinant diverges at the integer parameters (n = " +
                              std::to_string(n) + ")");
    rec.lambda = *lambda;
    rec.betas[0] = rec.lambda;
    for (int j = 1; j <= m; ++j) {
        rec.betas[j] = minorLimit(j);
        if (!rec.betas[j] && j <= n)
            throw DegeneracyError("expansion coefficient diverges at the integer parameters (n = " +
                                  std::to_string(n) + ", j = " + std::to_string(j) + ")");
    }
    return rec;
}

FamilySession::Record& FamilySession::record(int n) {
    if (n < 0) throw ConfigError("family index must be nonnegative");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, computeRecord(n)).first;
    return it->second;
}

Rational FamilySession::lambda(int n) { return record(n).lambda; }

std::vector<Rational> FamilySession::betas(int n) {
    Record& rec = record(n);
    std::vector<Rational> out;
    out.reserve(rec.betas.size());
    for (size_t j = 0; j < rec.betas.size(); ++j) {
        if (!rec.betas[j])
            throw DegeneracyError("expansion coefficient diverges at the integer parameters (n = " +
                                  std::to_string(n) + ", j = " + std::to_string(j) + ")");
        out.push_back(*rec.betas[j]);
    }
    return out;
}

std::optional<Rational> FamilySession::betaOpt(int n, int j) {
    Record& rec = record(n);
    if (j < 0 || j >= static_cast<int>(rec.betas.size())) throw ConfigError("beta index out of range");
    return rec.betas[j];
}

const UniPoly& FamilySession::q(int n) {
    Record& rec = record(n);
    if (rec.lambda == 0) {
        std::ostringstream msg;
        msg << "degenerate family: Lambda(" << n << ") = 0";
        throw DegeneracyError(msg.str());
    }
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (rec.qBuilt) return rec.qn;
    }
    // Build outside the lock (jac() takes it); last writer wins with an
    // identical value.
    UniPoly qn;
    const int top = std::min(cfg_.m(), n);
    for (int j = 0; j <= top; ++j) {
        if (*rec.betas[j] == 0) continue;
        qn += jac(n - j) * *rec.betas[j];
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (!rec.qBuilt) {
        rec.qn = std::move(qn);
        rec.qBuilt = true;
    }
    return rec.qn;
}

} // namespace jtpoly
