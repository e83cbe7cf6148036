#ifndef JTPOLY_REPORTS_HPP
#define JTPOLY_REPORTS_HPP

#include <functional>

#include "jtpoly/config_io.hpp"
#include "jtpoly/spectral.hpp"

namespace jtpoly {

// JSON reports for the command-line front end. Every report echoes the
// resolved configuration and carries a "pass" verdict where one applies;
// identical inputs render byte-identical JSON.

Json qpolyReport(FamilySession& fam, int n);

// Orthogonality sweep: pair(q_n, q_i) = 0 for m <= n <= maxN, i < n, and
// pair(q_n, q_n) != 0. qOverride, when set, replaces the polynomial source
// (used to exercise the violation path).
Json orthReport(FamilySession& fam, const BilinearForm& form, int maxN,
                const std::function<UniPoly(int)>& qOverride = {});

Json recurrenceReport(FamilySession& fam, const UniPoly& q, int n0, int n1);

Json algebraReport(FamilySession& fam, int maxDeg, int n0, int n1);

// Build + three-term check + measure fit for a point-mass spec.
Json krallReport(const KrallSpec& spec, int windowHi, int fitMaxN, int verifyMaxN);

std::string renderText(const Json& report);

} // namespace jtpoly

#endif
