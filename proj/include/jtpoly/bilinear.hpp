#ifndef JTPOLY_BILINEAR_HPP
#define JTPOLY_BILINEAR_HPP

#include <utility>
#include <vector>

#include "jtpoly/family.hpp"
#include "jtpoly/symvalue.hpp"

namespace jtpoly {

enum class PairMode { Generic, Sobolev };

// Perturbation strengths attached to the two blocks, plus the mode gate.
// Generic mode needs alpha - max H and beta - max G away from {0, -1, -2, ...};
// Sobolev mode needs integer alpha in [m2, max H] and integer beta in [m1, max G].
struct BilinearConfig {
    std::vector<Rational> kappa;  // size m1
    std::vector<Rational> tau;    // size m2
    PairMode mode = PairMode::Generic;

    static BilinearConfig ones(int m1, int m2, PairMode mode);
    void validate(const FamilyConfig& cfg) const;
};

// Finite principal part at one endpoint: coeffs[u] multiplies
// (1+x)^{-u-1} when center = -1, and (1-x)^{-u-1} when center = +1.
struct PoleExpansion {
    int center = -1;
    std::vector<SymValue> coeffs;
};

// The working basis of the polynomial space: mixed endpoint powers for
// s <= m, then (1+x)^{m1} (1-x)^{m2} x^{s-m-1}.
UniPoly basisB(int s, const FamilyConfig& cfg);

// Coefficients gamma_s with x^i = sum_s gamma_s b_s, s = 1..max(i+1, m):
// two unitriangular endpoint recursions for s <= m, polynomial division
// beyond.
std::vector<Rational> changeOfBasis(int i, const FamilyConfig& cfg);

// The rational pole systems phi (poles at -1) and psi (poles at +1), solved
// by backward recursion; coefficients are plain rationals.
std::pair<std::vector<PoleExpansion>, std::vector<PoleExpansion>> phiPsi(const FamilyConfig& cfg);

// The bilinear forms. Values live in Q[u, v]; in Sobolev mode the reciprocal
// Gamma generators have rational values and every pairing is a plain
// rational (a constant SymValue).
class BilinearForm {
public:
    BilinearForm(const FamilyConfig& cfg, BilinearConfig bcfg);

    const FamilyConfig& config() const { return cfg_; }
    const BilinearConfig& bilinear() const { return bcfg_; }
    const UExpansion& uexp() const { return uexp_; }
    const std::vector<PoleExpansion>& phi() const { return phi_; }
    const std::vector<PoleExpansion>& psi() const { return psi_; }
    // Perturbed pole systems; in Sobolev mode the divergent terms are pruned
    // before any moment is taken.
    const std::vector<PoleExpansion>& bigU() const { return bigU_; }
    const std::vector<PoleExpansion>& bigV() const { return bigV_; }

    SymValue pair(const UniPoly& p, const UniPoly& q) const;

    // The five summands, exposed for the identity tests: base integral, the
    // two pole-perturbed integrals, and the two discrete endpoint parts
    // (zero in Generic mode).
    struct Parts {
        SymValue base, minusEnd, plusEnd, minusDiscrete, plusDiscrete;
        SymValue total() const;
    };
    Parts pairParts(const UniPoly& p, const UniPoly& q) const;

private:
    FamilyConfig cfg_;
    BilinearConfig bcfg_;
    UExpansion uexp_;
    std::vector<PoleExpansion> phi_, psi_, bigU_, bigV_;
    Rational uValue_, vValue_;  // Sobolev substitutions (unused in Generic)
};

// Both sides of the endpoint-moment reduction of a single basis pairing
// <shift^k J_{n-j}, b_i>: the left computed through the bilinear form, the
// right through the closed form. Valid in either mode; n - j >= k >= 0.
std::pair<SymValue, SymValue> endpointReductionCheck(FamilySession& fam, const BilinearForm& form,
                                            int k, int n, int j, int i);

struct DetAResult {
    SymValue det;         // det(<q_j, x^i>)_{i,j=0..m-1} over Q[u,v]
    SymValue closedForm;  // the product closed form, a monomial multiple of u^{m1} v^{m2}
};

// Requires kappa = tau = 1.
DetAResult detAMatrix(FamilySession& fam, const BilinearForm& form);

} // namespace jtpoly

#endif
