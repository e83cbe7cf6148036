#include <doctest.h>

#include <atomic>
#include <set>
#include <thread>

#include "jtpoly/family.hpp"

#include "configs.hpp"
#include "oracles.hpp"

using namespace jtpoly;

namespace {

// Independent evaluation of the bordered (m+1)x(m+1) determinant that
// defines q_n, at a single sample point, via the cofactor oracle.
Rational qFromDeterminant(FamilySession& fam, int n, const Rational& x0) {
    const FamilyConfig& cfg = fam.config();
    const int m = cfg.m();
    ExactMatrix<Rational> mat(m + 1, m + 1);
    for (int j = 0; j <= m; ++j) {
        Rational jac = (n - j >= 0) ? fam.jac(n - j)(x0) : Rational(0);
        mat.at(0, j) = Rational(signPow(j)) * jac;
        Rational th = thetaEig(Rational(n - j), cfg.params);
        for (int l = 1; l <= m; ++l)
            mat.at(l, j) = rhoFactor(l, j, Rational(n), cfg) * cfg.Z(l)(th);
    }
    Rational pq = fam.pDen()(Rational(n)) * fam.qDen()(Rational(n));
    REQUIRE(pq != 0);
    return oracle::cofactorDet(mat) / pq;
}

// Cofactor-oracle minor for the expansion coefficients.
Rational betaFromMinor(FamilySession& fam, int n, int skip) {
    const FamilyConfig& cfg = fam.config();
    const int m = cfg.m();
    ExactMatrix<Rational> mat(m, m);
    for (int l = 1; l <= m; ++l) {
        int col = 0;
        for (int j = 0; j <= m; ++j) {
            if (j == skip) continue;
            Rational th = thetaEig(Rational(n - j), cfg.params);
            mat.at(l - 1, col++) = rhoFactor(l, j, Rational(n), cfg) * cfg.Z(l)(th);
        }
    }
    Rational pq = fam.pDen()(Rational(n)) * fam.qDen()(Rational(n));
    REQUIRE(pq != 0);
    return oracle::cofactorDet(mat) / pq;
}

FamilyConfig pointMassUnit() {
    // alpha = beta = 1, G = H = {1}, R1 = t + 5, S1 = t + 4: the denominator
    // polynomials vanish at n = 0, forcing the eps route.
    FamilyConfig cfg;
    cfg.params.alpha = Rational(1);
    cfg.params.beta = Rational(1);
    cfg.G = {1};
    cfg.H = {1};
    cfg.R[1] = UniPoly{Rational(5), Rational(1)};
    cfg.S[1] = UniPoly{Rational(4), Rational(1)};
    cfg.validate();
    return cfg;
}

} // namespace

TEST_CASE("config validation rejects malformed families") {
    FamilyConfig cfg = testcfg::smallGeneric();
    CHECK_NOTHROW(cfg.validate());

    FamilyConfig emptyG = cfg;
    emptyG.G.clear();
    emptyG.R.clear();
    CHECK_THROWS_AS(emptyG.validate(), ConfigError);

    FamilyConfig nonMonic = cfg;
    nonMonic.R[1] = UniPoly{Rational(1), Rational(2)};
    CHECK_THROWS_AS(nonMonic.validate(), ConfigError);

    FamilyConfig wrongDegree = cfg;
    wrongDegree.R[1] = UniPoly(Rational(1));  // constants have degree 0, not 1
    CHECK_THROWS_AS(wrongDegree.validate(), ConfigError);
}

TEST_CASE("rho factors: trivial rows, top column, hand expansion") {
    FamilyConfig cfg = testcfg::exampleA();  // m1 = 2, m2 = 1, m = 3
    for (int j = 0; j <= 3; ++j)
        CHECK(rhoFactor(3, j, Rational(4), cfg) == Rational(1));  // i > m1

    // j = m: the alpha-leg ratio collapses to 1 and the sign is +1.
    const Rational x(5);
    CHECK(rhoFactor(1, 3, x, cfg) ==
          gammaRatio(cfg.params.beta - 1, cfg.params.beta - 3, x));

    // m = 2 family at j = 1, x = 3: -(x + alpha - 1) from the alpha leg, and
    // the beta leg is an empty chain.
    FamilyConfig small = testcfg::smallGeneric();
    CHECK(rhoFactor(1, 1, Rational(3), small) == -(Rational(3) + small.params.alpha - 1));
}

TEST_CASE("denominator polynomials") {
    FamilyConfig small = testcfg::smallGeneric();  // m1 = 1
    auto [pSmall, qSmall] = pqPolys(small);
    CHECK(pSmall == UniPoly(Rational(1)));  // empty product
    CHECK(qSmall.degree() == 1);

    FamilyConfig a = testcfg::exampleA();  // m1 = 2, m2 = 1
    auto [pA, qA] = pqPolys(a);
    CHECK(pA.degree() == 2);
    CHECK(qA.degree() == 3);
    UniPoly expectedP = UniPoly{a.params.alpha - 2, Rational(1)} *
                        UniPoly{a.params.beta - 1, Rational(1)} * Rational(-1);
    CHECK(pA == expectedP);
}

TEST_CASE("quasi-Casoratian at n = 0: frozen hand value") {
    FamilySession fam(testcfg::smallGeneric());
    // 2x2 determinant (1/12)(5/6) - (-8/9)(-1/3) = -49/216 over q(0) = 7/6.
    CHECK(fam.lambda(0) == ratio(-7, 36));
    CHECK(fam.betas(0)[0] == fam.lambda(0));
}

TEST_CASE("expansion coefficients match the cofactor-minor oracle") {
    for (FamilyConfig cfg : {testcfg::smallGeneric(), testcfg::exampleA(), testcfg::genericWide()}) {
        FamilySession fam(cfg);
        for (int n : {1, 3, 6}) {
            auto betas = fam.betas(n);
            CHECK(betas[0] == fam.lambda(n));
            for (int j = 0; j <= cfg.m(); ++j)
                CHECK(betas[j] == betaFromMinor(fam, n, j));
        }
    }
}

TEST_CASE("top expansion coefficient has the ratio closed form") {
    for (FamilyConfig cfg : {testcfg::smallGeneric(), testcfg::exampleA(), testcfg::genericWide()}) {
        FamilySession fam(cfg);
        const Rational& alpha = cfg.params.alpha;
        const Rational& beta = cfg.params.beta;
        const int m = cfg.m(), m1 = cfg.m1();
        for (int n = 1; n <= 15; ++n) {
            Rational pqN = fam.pDen()(Rational(n)) * fam.qDen()(Rational(n));
            Rational pqN1 = fam.pDen()(Rational(n + 1)) * fam.qDen()(Rational(n + 1));
            Rational closed = Rational(signPow(m1)) *
                              ratPow((Rational(n) + alpha - m + 1) / (Rational(n) + beta), m1) *
                              pqN1 / pqN * fam.lambda(n + 1);
            CHECK(fam.betas(n)[m] == closed);
        }
    }
}

TEST_CASE("row-substitution identity annihilates every family row") {
    for (FamilyConfig cfg : {testcfg::smallGeneric(), testcfg::exampleA(), testcfg::genericWide(),
                             pointMassUnit()}) {
        FamilySession fam(cfg);
        const int m = cfg.m();
        for (int n = 0; n <= 15; ++n) {
            auto betas = fam.betas(n);
            for (int l = 1; l <= m; ++l) {
                Rational acc(0);
                for (int j = 0; j <= m; ++j) {
                    Rational th = thetaEig(Rational(n - j), cfg.params);
                    acc += Rational(signPow(j)) * betas[j] * rhoFactor(l, j, Rational(n), cfg) *
                           cfg.Z(l)(th);
                }
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("q polynomials: degree law and determinant oracle") {
    FamilySession fam(testcfg::exampleA());
    CHECK(fam.q(0) == UniPoly(fam.lambda(0)));
    for (int n = 0; n <= 12; ++n) CHECK(fam.q(n).degree() == n);

    // Agreement at deg + 1 distinct points pins the polynomials themselves.
    for (FamilyConfig cfg : {testcfg::smallGeneric(), testcfg::exampleA(), testcfg::genericWide()}) {
        FamilySession session(cfg);
        for (int n = 0; n <= 8; ++n) {
            for (int k = 0; k <= n; ++k) {
                Rational x0 = ratio(2 * k + 1, 3);
                CHECK(session.q(n)(x0) == qFromDeterminant(session, n, x0));
            }
        }
    }
}

TEST_CASE("session tolerates concurrent readers") {
    FamilySession serial(testcfg::smallGeneric());
    std::vector<UniPoly> expected;
    for (int n = 0; n <= 12; ++n) expected.push_back(serial.q(n));

    FamilySession shared(testcfg::smallGeneric());
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&shared, &expected, &ok] {
            for (int n = 0; n <= 12; ++n)
                if (!(shared.q(n) == expected[n])) ok = false;
        });
    }
    for (auto& t : workers) t.join();
    CHECK(ok.load());
}

TEST_CASE("eps route: vanishing denominators at small n still produce the family") {
    FamilySession fam(pointMassUnit());
    // p(0) q(0) = 0 here; expanding the perturbed 2x2 determinant by hand
    // gives (12 - 30e + 16e^2)/2, so the limit is 6.
    CHECK(fam.pDen()(Rational(0)) * fam.qDen()(Rational(0)) == 0);
    CHECK(fam.lambda(0) == Rational(6));
    CHECK(fam.q(0) == UniPoly(Rational(6)));
    for (int n = 0; n <= 20; ++n) CHECK(fam.lambda(n) != 0);
    for (int n = 0; n <= 12; ++n) CHECK(fam.q(n).degree() == n);
}

TEST_CASE("eps route agrees with nearby exact parameter slices") {
    FamilyConfig base = pointMassUnit();
    FamilySession fam(base);
    Rational limit = fam.lambda(0);

    auto slice = [&](long k) {
        FamilyConfig shifted = base;
        shifted.params.alpha += ratio(1, k);
        shifted.params.beta += ratio(1, k);
        FamilySession s(shifted);
        return s.lambda(0);
    };
    Rational at10 = slice(10), at100 = slice(100);
    CHECK(ratAbs(at100 - limit) < ratAbs(at10 - limit));
    CHECK(ratAbs(at100 - limit) < ratio(1, 5));
}

TEST_CASE("lower-triangular remixing leaves the sequence invariant") {
    FamilyConfig cfg = testcfg::exampleA();
    FamilySession fam(cfg);

    FamilyConfig same = mixInvariance(cfg, {}, {});
    CHECK(same.R == cfg.R);
    CHECK(same.S == cfg.S);

    FamilyConfig mixedR = mixInvariance(cfg, {{{3, 1}, Rational(5)}}, {});
    FamilySession famR(mixedR);
    for (int n = 0; n <= 10; ++n) CHECK(famR.q(n) == fam.q(n));

    FamilyConfig wide = testcfg::genericWide();
    FamilySession famWide(wide);
    FamilyConfig mixedS = mixInvariance(wide, {}, {{{2, 1}, ratio(-3, 7)}});
    FamilySession famS(mixedS);
    for (int n = 0; n <= 10; ++n) CHECK(famS.q(n) == famWide.q(n));

    CHECK_THROWS_AS(mixInvariance(cfg, {{{1, 3}, Rational(1)}}, {}), ConfigError);
}

TEST_CASE("paired-Pochhammer basis polynomials") {
    JacobiParams p{Rational(1), Rational(1)};
    CHECK(uLambdaPoly(0, Rational(1), p) == UniPoly(Rational(1)));

    // j = 1, lambda = alpha = beta = 1: (x+1)(x+2) = theta + 2.
    UniPoly u1 = uLambdaPoly(1, Rational(1), p);
    CHECK(u1 == UniPoly{Rational(2), Rational(3), Rational(1)});
    CHECK(toThetaBasis(u1, p) == UniPoly{Rational(2), Rational(1)});

    // Symmetry x -> -x - alpha - beta - 1 for j = 2.
    JacobiParams p2{ratio(1, 2), ratio(1, 3)};
    UniPoly u2 = uLambdaPoly(2, ratio(1, 2), p2);
    UniPoly reflected = u2.compose(UniPoly{-p2.ab1(), Rational(-1)});
    CHECK(reflected == u2);
}

TEST_CASE("theta-basis conversion") {
    JacobiParams p{ratio(1, 2), ratio(1, 3)};
    CHECK(toThetaBasis(UniPoly(ratio(7, 3)), p) == UniPoly(ratio(7, 3)));
    UniPoly theta{Rational(0), p.ab1(), Rational(1)};
    CHECK(toThetaBasis(theta, p) == UniPoly::monomial(1));
    CHECK_THROWS_AS(toThetaBasis(UniPoly::monomial(1), p), ConfigError);
    CHECK_THROWS_AS(toThetaBasis(UniPoly::monomial(2), p), ConfigError);
}

TEST_CASE("u-basis expansion is triangular with unit diagonal") {
    FamilyConfig cfg = testcfg::exampleA();
    UExpansion exp = expandInU(cfg);
    for (int g : cfg.G) CHECK(exp.nu.at(g)[g] == Rational(1));
    for (int h : cfg.H) CHECK(exp.omega.at(h)[h] == Rational(1));

    // A family polynomial chosen as a u-basis element has delta coordinates.
    FamilyConfig basisCfg = testcfg::smallGeneric();
    basisCfg.R[1] = toThetaBasis(uLambdaPoly(1, basisCfg.params.alpha, basisCfg.params),
                                 basisCfg.params);
    basisCfg.validate();
    UExpansion basisExp = expandInU(basisCfg);
    CHECK(basisExp.nu.at(1) == std::vector<Rational>{Rational(0), Rational(1)});

    // R1 = t + 1: nu_1 = 1 and nu_0 = 1 - constant theta-term of u_1.
    UniPoly u1Theta = toThetaBasis(uLambdaPoly(1, cfg.params.alpha, cfg.params), cfg.params);
    CHECK(exp.nu.at(1)[1] == Rational(1));
    CHECK(exp.nu.at(1)[0] == Rational(1) - u1Theta.coeff(0));

    // Back-substitution reproduces the family polynomials exactly.
    std::vector<UniPoly> uTheta;
    for (int s = 0; s <= cfg.maxG(); ++s)
        uTheta.push_back(toThetaBasis(uLambdaPoly(s, cfg.params.alpha, cfg.params), cfg.params));
    for (int g : cfg.G) {
        UniPoly rebuilt;
        for (int s = 0; s <= g; ++s) rebuilt += uTheta[s] * exp.nu.at(g)[s];
        CHECK(rebuilt == cfg.R.at(g));
    }
}

TEST_CASE("bordered determinants: degree law, collisions, duplicated rows") {
    FamilyConfig cfg = testcfg::smallGeneric();  // m1 = m2 = 1, m = 2

    // Degrees (2, 1, 1): first block {2, 1} distinct, second block {1}.
    std::vector<UniPoly> y{UniPoly{Rational(1), Rational(0), Rational(1)},
                           UniPoly{Rational(1), Rational(1)},
                           UniPoly{ratio(1, 2), Rational(1)}};
    CHECK(wDegreeBoundA({2, 1, 1}, cfg) == 6);
    CHECK(wDetA(y, cfg).degree() == 6);

    // Duplicate of the first family row: identically zero.
    std::vector<UniPoly> dup{cfg.R.at(1), cfg.R.at(1), cfg.S.at(1)};
    CHECK(wDetA(dup, cfg).isZero());

    // Colliding first-block degrees: strictly below the bound.
    std::vector<UniPoly> collide{UniPoly{Rational(2), Rational(1)},
                                 UniPoly{Rational(1), Rational(1)},
                                 UniPoly{ratio(1, 2), Rational(1)}};
    CHECK(wDetA(collide, cfg).degree() < wDegreeBoundA({1, 1, 1}, cfg));

    oracle::RatGen gen(909);
    for (const FamilyConfig& family : {testcfg::smallGeneric(), testcfg::genericWide()}) {
        for (int trial = 0; trial < 5; ++trial) {
            // Distinct degrees inside each block: the bound is attained.
            std::vector<int> degs;
            std::set<int> first, second;
            while (static_cast<int>(first.size()) < family.m1() + 1)
                first.insert(gen.nextInt(0, 6));
            while (static_cast<int>(second.size()) < family.m2())
                second.insert(gen.nextInt(0, 6));
            std::vector<UniPoly> ys;
            for (int d : first) { ys.push_back(oracle::randomMonic(gen, d)); degs.push_back(d); }
            for (int d : second) { ys.push_back(oracle::randomMonic(gen, d)); degs.push_back(d); }
            CHECK(wDetA(ys, family).degree() == wDegreeBoundA(degs, family));

            // Force a first-block collision (the block always has >= 2 rows).
            std::vector<UniPoly> bad = ys;
            bad[1] = bad[0] + UniPoly(Rational(1));
            std::vector<int> badDegs = degs;
            badDegs[1] = badDegs[0];
            UniPoly w = wDetA(bad, family);
            // Zero counts as "strictly below d" (its degree is the -inf sentinel).
            CHECK((w.isZero() || w.degree() < wDegreeBoundA(badDegs, family)));
        }
    }
}

TEST_CASE("appended-row bordered determinant follows its own degree law") {
    oracle::RatGen gen(4242);
    for (const FamilyConfig& family : {testcfg::smallGeneric(), testcfg::genericWide()}) {
        for (int trial = 0; trial < 5; ++trial) {
            std::set<int> first, second;
            while (static_cast<int>(first.size()) < family.m1())
                first.insert(gen.nextInt(0, 5));
            while (static_cast<int>(second.size()) < family.m2() + 1)
                second.insert(gen.nextInt(0, 5));
            std::vector<int> degs;
            std::vector<UniPoly> ys;
            for (int d : first) { ys.push_back(oracle::randomMonic(gen, d)); degs.push_back(d); }
            for (int d : second) { ys.push_back(oracle::randomMonic(gen, d)); degs.push_back(d); }
            CHECK(wDetB(ys, family).degree() == wDegreeBoundB(degs, family));
        }
    }
}
