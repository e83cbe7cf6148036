#ifndef JTPOLY_TESTS_CONFIGS_HPP
#define JTPOLY_TESTS_CONFIGS_HPP

// Shared fixture families. exampleA and exampleB are the two regression
// configurations whose algebra structure is pinned by the acceptance suite;
// the small generic/point-mass builders cover the property tests.

#include "jtpoly/family.hpp"
#include "jtpoly/spectral.hpp"

namespace jtpoly::testcfg {

// alpha = 1/2, beta = 1/3, G = {1,3}, H = {1},
// R1 = t+1, R3 = t^3 + t^2/3 + 2t/3 + 1, S1 = t + 1/2.
inline FamilyConfig exampleA() {
    FamilyConfig cfg;
    cfg.params.alpha = ratio(1, 2);
    cfg.params.beta = ratio(1, 3);
    cfg.G = {1, 3};
    cfg.H = {1};
    cfg.R[1] = UniPoly{Rational(1), Rational(1)};
    cfg.R[3] = UniPoly{Rational(1), ratio(2, 3), ratio(1, 3), Rational(1)};
    cfg.S[1] = UniPoly{ratio(1, 2), Rational(1)};
    cfg.validate();
    return cfg;
}

// alpha = 2, beta = 1, G = {1}, H = {2}, R1 = t+1, S2 = t^2 + 2t/3 + 1/2;
// admissible for the discrete-Sobolev form.
inline FamilyConfig exampleB() {
    FamilyConfig cfg;
    cfg.params.alpha = Rational(2);
    cfg.params.beta = Rational(1);
    cfg.G = {1};
    cfg.H = {2};
    cfg.R[1] = UniPoly{Rational(1), Rational(1)};
    cfg.S[2] = UniPoly{ratio(1, 2), ratio(2, 3), Rational(1)};
    cfg.validate();
    return cfg;
}

// Minimal generic family: m1 = m2 = 1, non-integer parameters.
inline FamilyConfig smallGeneric() {
    FamilyConfig cfg;
    cfg.params.alpha = ratio(1, 2);
    cfg.params.beta = ratio(1, 3);
    cfg.G = {1};
    cfg.H = {1};
    cfg.R[1] = UniPoly{Rational(1), Rational(1)};
    cfg.S[1] = UniPoly{ratio(1, 2), Rational(1)};
    cfg.validate();
    return cfg;
}

// Generic family with a size-2 second block, again off the integer grid.
inline FamilyConfig genericWide() {
    FamilyConfig cfg;
    cfg.params.alpha = ratio(5, 7);
    cfg.params.beta = ratio(3, 2);
    cfg.G = {2};
    cfg.H = {1, 2};
    cfg.R[2] = UniPoly{Rational(1), Rational(-1), Rational(1)};
    cfg.S[1] = UniPoly{Rational(2), Rational(1)};
    cfg.S[2] = UniPoly{ratio(-1, 3), ratio(1, 5), Rational(1)};
    cfg.validate();
    return cfg;
}

inline KrallSpec smallKrall() {
    KrallSpec spec;
    spec.alpha = 1;
    spec.beta = 1;
    spec.m1 = 1;
    spec.m2 = 1;
    spec.a = {Rational(3)};
    spec.b = {Rational(2)};
    return spec;
}

} // namespace jtpoly::testcfg

#endif
