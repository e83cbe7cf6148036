#include "jtpoly/reports.hpp"

#include <sstream>

namespace jtpoly {

namespace {

Json configEcho(const FamilyConfig& cfg) { return familyToJson(cfg); }

Json bandToJson(const RecurrenceTable& table) {
    if (!table.band) return Json();
    return Json{{"s", table.band->first}, {"r", table.band->second}, {"certificate", "window"}};
}

Json gammaToJson(const RecurrenceTable& table) {
    Json out = Json::object();
    for (const auto& [key, value] : table.gamma)
        out[std::to_string(key.first) + "," + std::to_string(key.second)] = ratStr(value);
    return out;
}

} // namespace

Json qpolyReport(FamilySession& fam, int n) {
    const int m = fam.config().m();
    Json betas = Json::array();
    for (int j = 0; j <= m; ++j) {
        // Divergent tail entries (possible at integer parameters for j > n)
        // render as null; they play no part in q_n.
        std::optional<Rational> b = fam.betaOpt(n, j);
        betas.push_back(b ? Json(ratStr(*b)) : Json());
    }
    Json report{{"check", "q-polynomial"},
                {"config", configEcho(fam.config())},
                {"n", n},
                {"lambda", ratStr(fam.lambda(n))},
                {"betas", betas},
                {"q", uniPolyToJson(fam.q(n))}};
    return report;
}

Json orthReport(FamilySession& fam, const BilinearForm& form, int maxN,
                const std::function<UniPoly(int)>& qOverride) {
    auto polyAt = [&](int n) { return qOverride ? qOverride(n) : fam.q(n); };
    const int m = fam.config().m();
    Json verdicts = Json::array();
    bool pass = true;
    Json firstFailure;
    for (int n = m; n <= maxN; ++n) {
        UniPoly qn = polyAt(n);
        for (int i = 0; i < n; ++i) {
            SymValue value = form.pair(qn, polyAt(i));
            bool zero = value.isZero();
            if (!zero) {
                verdicts.push_back(Json{{"n", n}, {"i", i}, {"zero", false},
                                        {"value", symValueToJson(value)}});
                if (pass) firstFailure = Json{{"n", n}, {"i", i}};
                pass = false;
            }
        }
        SymValue diag = form.pair(qn, qn);
        if (diag.isZero()) {
            verdicts.push_back(Json{{"n", n}, {"i", n}, {"zero", true}, {"note", "diagonal vanished"}});
            if (pass) firstFailure = Json{{"n", n}, {"i", n}};
            pass = false;
        }
    }
    Json report{{"check", "orthogonality"},
                {"config", configEcho(fam.config())},
                {"bilinear", bilinearToJson(form.bilinear())},
                {"maxN", maxN},
                {"pass", pass},
                {"failures", verdicts}};
    if (!firstFailure.is_null()) report["firstFailure"] = firstFailure;
    return report;
}

Json recurrenceReport(FamilySession& fam, const UniPoly& q, int n0, int n1) {
    RecurrenceTable table = recurrenceTable(q, n0, n1, fam);
    return Json{{"check", "recurrence"},
                {"config", configEcho(fam.config())},
                {"Q", uniPolyToJson(q)},
                {"window", Json{{"n0", n0}, {"n1", n1}}},
                {"gamma", gammaToJson(table)},
                {"band", bandToJson(table)}};
}

Json algebraReport(FamilySession& fam, int maxDeg, int n0, int n1) {
    std::vector<UniPoly> basis = algebraScan(maxDeg, n0, n1, fam);
    Json basisJson = Json::array();
    for (const auto& q : basis) basisJson.push_back(uniPolyToJson(q));
    return Json{{"check", "algebra-scan"},
                {"config", configEcho(fam.config())},
                {"maxDeg", maxDeg},
                {"window", Json{{"n0", n0}, {"n1", n1}}},
                {"dimension", basis.size()},
                {"basis", basisJson},
                {"certificate", "window"}};
}

Json krallReport(const KrallSpec& spec, int windowHi, int fitMaxN, int verifyMaxN) {
    FamilyConfig cfg = krallBuild(spec);
    FamilySession fam(cfg);
    ThreeTermResult ttr = threeTermCheck(fam, 0, windowHi);
    Json ttrJson{{"holds", ttr.holds}};
    if (ttr.holds) {
        Json rows = Json::array();
        for (const auto& row : ttr.table)
            rows.push_back(Json{{"n", row.n}, {"a", ratStr(row.a)}, {"b", ratStr(row.b)},
                                {"c", ratStr(row.c)}});
        ttrJson["table"] = rows;
    } else {
        ttrJson["witness"] = Json{{"n", ttr.witness->first}, {"j", ttr.witness->second}};
    }

    Json fitJson;
    bool pass = ttr.holds;
    try {
        MeasureFit fit = measureFit(fam, fitMaxN, verifyMaxN);
        fitJson = Json{{"c", rationalListToJson(fit.c)},
                       {"d", rationalListToJson(fit.d)},
                       {"verified", fit.verified},
                       {"freeDimensions", fit.freeDirections.size()}};
        if (!fit.verified && fit.verifyFailure)
            fitJson["failure"] = Json{{"n", fit.verifyFailure->first}, {"i", fit.verifyFailure->second}};
        pass = pass && fit.verified;
    } catch (const PropertyViolation& e) {
        fitJson = Json{{"inconsistent", true}, {"detail", e.what()}};
        pass = false;
    }

    return Json{{"check", "point-mass-family"},
                {"config", configEcho(cfg)},
                {"spec", Json{{"alpha", spec.alpha}, {"beta", spec.beta},
                              {"m1", spec.m1}, {"m2", spec.m2},
                              {"a", rationalListToJson(spec.a)}, {"b", rationalListToJson(spec.b)}}},
                {"threeTerm", ttrJson},
                {"measureFit", fitJson},
                {"pass", pass}};
}

std::string renderText(const Json& report) {
    std::ostringstream out;
    out << "check: " << report.value("check", std::string("?")) << "\n";
    for (const auto& [key, value] : report.items()) {
        if (key == "check" || key == "config") continue;
        out << key << ": " << value.dump() << "\n";
    }
    return out.str();
}

} // namespace jtpoly
