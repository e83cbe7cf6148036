#include "jtpoly/bilinear.hpp"

#include <algorithm>

namespace jtpoly {

BilinearConfig BilinearConfig::ones(int m1, int m2, PairMode mode) {
    BilinearConfig b;
    b.kappa.assign(m1, Rational(1));
    b.tau.assign(m2, Rational(1));
    b.mode = mode;
    return b;
}

void BilinearConfig::validate(const FamilyConfig& cfg) const {
    if (static_cast<int>(kappa.size()) != cfg.m1() || static_cast<int>(tau.size()) != cfg.m2())
        throw ConfigError("kappa/tau lengths must match the block sizes");
    const Rational& alpha = cfg.params.alpha;
    const Rational& beta = cfg.params.beta;
    if (mode == PairMode::Generic) {
        auto hitsNonpositive = [](const Rational& v) { return isInteger(v) && v <= 0; };
        if (hitsNonpositive(alpha - cfg.maxH()) || hitsNonpositive(beta - cfg.maxG()))
            throw ConfigError("generic mode needs alpha - max H and beta - max G off {0,-1,-2,...}");
    } else {
        if (!isInteger(alpha) || !isInteger(beta))
            throw ConfigError("sobolev mode needs integer parameters");
        long a = ratToLong(alpha), b = ratToLong(beta);
        if (a < cfg.m2() || a > cfg.maxH() || b < cfg.m1() || b > cfg.maxG())
            throw ConfigError("sobolev mode needs alpha in [m2, max H] and beta in [m1, max G]");
    }
}

UniPoly basisB(int s, const FamilyConfig& cfg) {
    if (s < 1) throw ConfigError("basis index must be >= 1");
    const int m1 = cfg.m1(), m2 = cfg.m2(), m = cfg.m();
    UniPoly onePlus{Rational(1), Rational(1)};
    UniPoly oneMinus{Rational(1), Rational(-1)};
    if (s <= m1) return onePlus.pow(s - 1) * oneMinus.pow(m2);
    if (s <= m) return onePlus.pow(m1) * oneMinus.pow(s - m1 - 1);
    return onePlus.pow(m1) * oneMinus.pow(m2) * UniPoly::monomial(s - m - 1);
}

std::vector<Rational> changeOfBasis(int i, const FamilyConfig& cfg) {
    if (i < 0) throw ConfigError("changeOfBasis needs i >= 0");
    const int m1 = cfg.m1(), m2 = cfg.m2(), m = cfg.m();
    const int count = std::max(i + 1, m);
    std::vector<Rational> gamma(count, Rational(0));

    // Unitriangular endpoint recursions for the first m coefficients.
    for (int l = 1; l <= m1; ++l) {
        Rational rhs = Rational(signPow(i + l + 1)) * genBinom(Rational(i), l - 1) /
                       ratPow(Rational(2), m2);
        for (int h = 1; h < l; ++h)
            rhs -= ratPow(Rational(-2), h - l) * genBinom(Rational(m2), l - h) * gamma[h - 1];
        gamma[l - 1] = rhs;
    }
    for (int l = 1; l <= m2; ++l) {
        Rational rhs = Rational(signPow(l + 1)) * genBinom(Rational(i), l - 1) /
                       ratPow(Rational(2), m1);
        for (int h = 1; h < l; ++h)
            rhs -= ratPow(Rational(-2), h - l) * genBinom(Rational(m1), l - h) * gamma[m1 + h - 1];
        gamma[m1 + l - 1] = rhs;
    }

    // Coefficients past the bulk block come from division by
    // (1+x)^{m1} (1-x)^{m2}.
    if (i >= m) {
        UniPoly bulk = UniPoly{Rational(1), Rational(1)}.pow(m1) *
                       UniPoly{Rational(1), Rational(-1)}.pow(m2);
        UniPoly quot, rem;
        UniPoly::divmod(UniPoly::monomial(i), bulk, quot, rem);
        for (int k = 0; k <= quot.degree(); ++k) gamma[m + k] = quot.coeff(k);
    }
    return gamma;
}

std::pair<std::vector<PoleExpansion>, std::vector<PoleExpansion>> phiPsi(const FamilyConfig& cfg) {
    const int m1 = cfg.m1(), m2 = cfg.m2(), m = cfg.m();

    // phi_s has poles at -1 of order up to m1 - s; backward recursion from
    // the top index, whose defining relation is a single term.
    std::vector<std::vector<Rational>> phi(m1);
    for (int s = 0; s < m1; ++s) phi[s].assign(m1 - s, Rational(0));
    for (int i = m1; i >= 1; --i) {
        std::vector<Rational> rhs(m1 - i + 1, Rational(0));
        rhs[m1 - i] = Rational(-1);  // -(1+x)^{i-m1-1}
        int top = std::min(m1, i + m2) - 1;
        for (int l = i; l <= top; ++l) {
            Rational c = ratPow(Rational(-2), i - l - 1) * genBinom(Rational(m2), l - i + 1);
            for (size_t u = 0; u < phi[l].size(); ++u) rhs[u] -= c * phi[l][u];
        }
        phi[i - 1] = std::move(rhs);
    }

    // psi_t has poles at +1 of order up to m2 - t; the top relation carries
    // the block factor (-2)^{m1}.
    std::vector<std::vector<Rational>> psi(m2);
    for (int t = 0; t < m2; ++t) psi[t].assign(m2 - t, Rational(0));
    const Rational blockInv = ratPow(Rational(-2), -m1);
    for (int i = m; i >= m1 + 1; --i) {
        std::vector<Rational> rhs(m - i + 1, Rational(0));
        rhs[m - i] = Rational(-1);  // -(1-x)^{i-m-1}
        int top = std::min(m2, i) - 1;
        for (int l = i - m1; l <= top; ++l) {
            Rational c = ratPow(Rational(-2), i - l - 1) * genBinom(Rational(m1), i - l - 1);
            for (size_t u = 0; u < psi[l].size(); ++u) rhs[u] -= c * psi[l][u];
        }
        for (auto& c : rhs) c *= blockInv;
        psi[i - m1 - 1] = std::move(rhs);
    }

    auto wrap = [](const std::vector<std::vector<Rational>>& raw, int center) {
        std::vector<PoleExpansion> out;
        for (const auto& coeffs : raw) {
            PoleExpansion pe;
            pe.center = center;
            for (const auto& c : coeffs) pe.coeffs.push_back(SymValue(c));
            out.push_back(std::move(pe));
        }
        return out;
    };
    return {wrap(phi, -1), wrap(psi, +1)};
}

BilinearForm::BilinearForm(const FamilyConfig& cfg, BilinearConfig bcfg)
    : cfg_(cfg), bcfg_(std::move(bcfg)) {
    cfg_.validate();
    bcfg_.validate(cfg_);
    uexp_ = expandInU(cfg_);
    auto systems = phiPsi(cfg_);
    phi_ = std::move(systems.first);
    psi_ = std::move(systems.second);

    const Rational& alpha = cfg_.params.alpha;
    const Rational& beta = cfg_.params.beta;
    const bool sobolev = bcfg_.mode == PairMode::Sobolev;
    if (sobolev) {
        uValue_ = Rational(1) / factorial(ratToLong(beta) - 1);
        vValue_ = Rational(1) / factorial(ratToLong(alpha) - 1);
    }

    for (int l = 0; l < cfg_.m1(); ++l) {
        int g = cfg_.G[l];
        PoleExpansion pe = phi_[l];
        pe.coeffs.resize(std::max<size_t>(pe.coeffs.size(), g + 1), SymValue());
        const auto& nu = uexp_.nu.at(g);
        for (int s = 0; s <= g; ++s) {
            Rational factor = pochhammer(beta - s, s) * ratPow(Rational(2), s) * factorial(s) * nu[s];
            if (factor == 0) continue;  // in sobolev mode these are exactly the divergent terms
            factor *= bcfg_.kappa[l];
            pe.coeffs[s] += sobolev ? SymValue(factor * uValue_) : SymValue::term(1, 0, factor);
        }
        bigU_.push_back(std::move(pe));
    }
    for (int l = 0; l < cfg_.m2(); ++l) {
        int h = cfg_.H[l];
        PoleExpansion pe = psi_[l];
        pe.coeffs.resize(std::max<size_t>(pe.coeffs.size(), h + 1), SymValue());
        const auto& omega = uexp_.omega.at(h);
        for (int s = 0; s <= h; ++s) {
            Rational factor = pochhammer(alpha - s, s) * ratPow(Rational(2), s) * factorial(s) * omega[s];
            if (factor == 0) continue;
            factor *= bcfg_.tau[l];
            pe.coeffs[s] += sobolev ? SymValue(factor * vValue_) : SymValue::term(0, 1, factor);
        }
        bigV_.push_back(std::move(pe));
    }
}

SymValue BilinearForm::Parts::total() const {
    return base + minusEnd + plusEnd + minusDiscrete + plusDiscrete;
}

BilinearForm::Parts BilinearForm::pairParts(const UniPoly& p, const UniPoly& q) const {
    const int m1 = cfg_.m1(), m2 = cfg_.m2();
    const Rational& alpha = cfg_.params.alpha;
    const Rational& beta = cfg_.params.beta;
    Parts parts;

    parts.base = SymValue(normalizedMoment(p * q, -m2, -m1, cfg_.params));

    for (int l = 0; l < m1; ++l) {
        Rational ql = q.derivative(l)(Rational(-1));
        if (ql == 0) continue;
        Rational f = ql / (ratPow(Rational(2), m2) * factorial(l));
        for (size_t u = 0; u < bigU_[l].coeffs.size(); ++u) {
            const SymValue& c = bigU_[l].coeffs[u];
            if (c.isZero()) continue;
            parts.minusEnd += c * (f * normalizedMoment(p, 0, -static_cast<long>(u) - 1, cfg_.params));
        }
    }
    for (int l = 0; l < m2; ++l) {
        Rational ql = q.derivative(l)(Rational(1));
        if (ql == 0) continue;
        Rational f = ql * Rational(signPow(m1 + l)) / factorial(l);
        for (size_t u = 0; u < bigV_[l].coeffs.size(); ++u) {
            const SymValue& c = bigV_[l].coeffs[u];
            if (c.isZero()) continue;
            parts.plusEnd += c * (f * normalizedMoment(p, -static_cast<long>(u) - 1, 0, cfg_.params));
        }
    }

    if (bcfg_.mode == PairMode::Sobolev) {
        const long a = ratToLong(alpha), b = ratToLong(beta);
        Rational pref2 = Rational(1) / (2 * factorial(b));
        for (int l = 0; l < m1; ++l) {
            int g = cfg_.G[l];
            if (g < b) continue;
            Rational ql = q.derivative(l)(Rational(-1));
            if (ql == 0 || bcfg_.kappa[l] == 0) continue;
            Rational outer = bcfg_.kappa[l] * ql / (ratPow(Rational(2), m2) * factorial(l));
            const auto& nu = uexp_.nu.at(g);
            Rational sumJ(0);
            for (long j = 0; j <= g - b; ++j) {
                Rational pj = p.derivative(j)(Rational(-1));
                if (pj == 0) continue;
                Rational inner(0);
                for (long s = b + j; s <= g; ++s)
                    inner += pochhammer(beta - s, j) * factorial(s) * nu[s] *
                             gammaRatio(alpha + beta + 1, alpha + beta + j - s, Rational(0));
                sumJ += ratPow(Rational(2), j) * pj / factorial(j) * inner;
            }
            parts.minusDiscrete += SymValue(pref2 * outer * sumJ);
        }
        Rational pref3 = Rational(1) / (2 * factorial(a));
        for (int l = 0; l < m2; ++l) {
            int h = cfg_.H[l];
            if (h < a) continue;
            Rational ql = q.derivative(l)(Rational(1));
            if (ql == 0 || bcfg_.tau[l] == 0) continue;
            Rational outer = bcfg_.tau[l] * ql * Rational(signPow(m1 + l)) / factorial(l);
            const auto& omega = uexp_.omega.at(h);
            Rational sumJ(0);
            for (long j = 0; j <= h - a; ++j) {
                Rational pj = p.derivative(j)(Rational(1));
                if (pj == 0) continue;
                Rational inner(0);
                for (long s = a + j; s <= h; ++s)
                    inner += pochhammer(alpha - s, j) * factorial(s) * omega[s] *
                             gammaRatio(alpha + beta + 1, alpha + beta + j - s, Rational(0));
                sumJ += Rational(signPow(j)) * ratPow(Rational(2), j) * pj / factorial(j) * inner;
            }
            parts.plusDiscrete += SymValue(pref3 * outer * sumJ);
        }
    }
    return parts;
}

SymValue BilinearForm::pair(const UniPoly& p, const UniPoly& q) const {
    return pairParts(p, q).total();
}

std::pair<SymValue, SymValue> endpointReductionCheck(FamilySession& fam, const BilinearForm& form,
                                            int k, int n, int j, int i) {
    const FamilyConfig& cfg = form.config();
    const int m1 = cfg.m1(), m2 = cfg.m2(), m = cfg.m();
    if (k < 0 || j < 0 || j > n || n - j < k || i < 1 || i > m)
        throw ConfigError("endpointReductionCheck needs 0 <= j <= n, n - j >= k >= 0, 1 <= i <= m");
    const Rational& alpha = cfg.params.alpha;
    const Rational& beta = cfg.params.beta;
    const int v = n - j;
    const bool sobolev = form.bilinear().mode == PairMode::Sobolev;

    UniPoly shift = (i <= m1) ? UniPoly{Rational(1), Rational(1)} : UniPoly{Rational(1), Rational(-1)};
    SymValue lhs = form.pair(shift.pow(k) * fam.jac(v), basisB(i, cfg));

    // u_d at an integer argument: (v+1)_d (v+beta+alpha-d+1)_d.
    auto uEval = [&](long d) -> Rational {
        return pochhammer(Rational(v + 1), d) * pochhammer(Rational(v) + beta + alpha - d + 1, d);
    };

    Rational bracket(0);
    Rational pref;
    bool uSide = i <= m1;
    if (uSide) {
        pref = Rational(signPow(i)) * ratPow(Rational(2), i - 1) * cfg.params.ab1() *
               pochhammer(alpha + 1, v) / pochhammer(beta, v + 1);
        int top = std::min(m1, m2 + i) - 1;
        for (int l = i - 1; l <= top; ++l) {
            int g = cfg.G[l];
            const auto& nu = form.uexp().nu.at(g);
            Rational inner(0);
            for (long s = k; s <= g; ++s)
                inner += ratPow(Rational(2), k) * nu[s] * pochhammer(beta - s, k) *
                         pochhammer(Rational(s - k + 1), k) * uEval(s - k);
            bracket += form.bilinear().kappa[l] * genBinom(Rational(m2), l - i + 1) *
                       ratPow(Rational(-2), -(l + 1)) * inner;
        }
    } else {
        pref = Rational(signPow(n + i + j)) * ratPow(Rational(2), i - 1) * cfg.params.ab1() / alpha;
        int top = std::min(m2, i) - 1;
        for (int l = i - m1 - 1; l <= top; ++l) {
            int h = cfg.H[l];
            const auto& omega = form.uexp().omega.at(h);
            Rational inner(0);
            for (long s = k; s <= h; ++s)
                inner += ratPow(Rational(2), k) * omega[s] * pochhammer(alpha - s, k) *
                         pochhammer(Rational(s - k + 1), k) * uEval(s - k);
            bracket += form.bilinear().tau[l] * genBinom(Rational(m1), i - l - 1) *
                       ratPow(Rational(-2), -(l + 1)) * inner;
        }
    }

    SymValue rhs;
    Rational total = pref * bracket;
    if (sobolev) {
        long a = ratToLong(alpha), b = ratToLong(beta);
        Rational gen = uSide ? Rational(1) / factorial(b - 1) : Rational(1) / factorial(a - 1);
        rhs = SymValue(total * gen);
    } else {
        rhs = uSide ? SymValue::term(1, 0, total) : SymValue::term(0, 1, total);
    }
    return {lhs, rhs};
}

DetAResult detAMatrix(FamilySession& fam, const BilinearForm& form) {
    const FamilyConfig& cfg = form.config();
    for (const auto& kl : form.bilinear().kappa)
        if (kl != 1) throw ConfigError("detAMatrix requires kappa = tau = 1");
    for (const auto& tl : form.bilinear().tau)
        if (tl != 1) throw ConfigError("detAMatrix requires kappa = tau = 1");

    const int m = cfg.m();
    ExactMatrix<SymValue> a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a.at(i, j) = form.pair(fam.q(j), UniPoly::monomial(i));
    DetAResult out;
    out.det = detFractionFree(a);

    const Rational& alpha = cfg.params.alpha;
    const Rational& beta = cfg.params.beta;
    // Product closed form; its sign carries an extra (-1)^{m1 m2} on top of
    // the (-1)^{binom(m2,2)} block factor (checked against the pairing-route
    // determinant across block sizes m1, m2 <= 3).
    long signExp = static_cast<long>(cfg.m2()) * (cfg.m2() - 1) / 2 +
                   static_cast<long>(cfg.m1()) * cfg.m2();
    Rational coef = fam.pDen()(Rational(m)) * fam.qDen()(Rational(m)) * ratPow(cfg.params.ab1(), m);
    coef /= Rational(signPow(signExp)) *
            ratPow(Rational(2), m) * ratPow(pochhammer(beta, m), cfg.m1()) * ratPow(alpha, cfg.m2());
    for (int j = 0; j <= m; ++j) coef *= fam.lambda(j);

    if (form.bilinear().mode == PairMode::Sobolev) {
        long a2 = ratToLong(alpha), b2 = ratToLong(beta);
        Rational sub = coef * ratPow(Rational(1) / factorial(b2 - 1), cfg.m1()) *
                       ratPow(Rational(1) / factorial(a2 - 1), cfg.m2());
        out.closedForm = SymValue(sub);
    } else {
        out.closedForm = SymValue::term(cfg.m1(), cfg.m2(), coef);
    }
    return out;
}

} // namespace jtpoly
