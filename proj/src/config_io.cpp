#include "jtpoly/config_io.hpp"

#include <fstream>

namespace jtpoly {

namespace {

Rational ratField(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw ConfigError("missing or non-string rational field: " + key);
    return parseRational(j.at(key).get<std::string>());
}

std::vector<int> intList(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ConfigError("missing or non-array field: " + key);
    std::vector<int> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number_integer()) throw ConfigError(key + " must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::map<int, UniPoly> polyMap(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_object())
        throw ConfigError("missing or non-object field: " + key);
    std::map<int, UniPoly> out;
    for (const auto& [deg, coeffs] : j.at(key).items()) {
        int d;
        try {
            d = std::stoi(deg);
        } catch (...) {
            throw ConfigError(key + " keys must be integer degrees");
        }
        out[d] = uniPolyFromJson(coeffs);
    }
    return out;
}

} // namespace

UniPoly uniPolyFromJson(const Json& j) {
    if (!j.is_array()) throw ConfigError("polynomial must be an array of rationals");
    std::vector<Rational> coeffs;
    for (const auto& v : j) {
        if (!v.is_string()) throw ConfigError("polynomial coefficients must be strings");
        coeffs.push_back(parseRational(v.get<std::string>()));
    }
    return UniPoly(std::move(coeffs));
}

Json uniPolyToJson(const UniPoly& p) {
    Json out = Json::array();
    for (int k = 0; k <= p.degree(); ++k) out.push_back(ratStr(p.coeff(k)));
    return out;
}

Json symValueToJson(const SymValue& s) {
    Json out = Json::object();
    for (const auto& [key, c] : s.terms())
        out[SymValue::keyStr(key.first, key.second)] = ratStr(c);
    return out;
}

Json rationalListToJson(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(ratStr(v));
    return out;
}

FamilyConfig familyFromJson(const Json& j) {
    if (!j.is_object()) throw ConfigError("family config must be a JSON object");
    FamilyConfig cfg;
    cfg.params.alpha = ratField(j, "alpha");
    cfg.params.beta = ratField(j, "beta");
    cfg.G = intList(j, "G");
    cfg.H = intList(j, "H");
    cfg.R = polyMap(j, "R");
    cfg.S = polyMap(j, "S");
    cfg.validate();
    return cfg;
}

Json familyToJson(const FamilyConfig& cfg) {
    Json r = Json::object(), s = Json::object();
    for (const auto& [deg, poly] : cfg.R) r[std::to_string(deg)] = uniPolyToJson(poly);
    for (const auto& [deg, poly] : cfg.S) s[std::to_string(deg)] = uniPolyToJson(poly);
    return Json{{"alpha", ratStr(cfg.params.alpha)},
                {"beta", ratStr(cfg.params.beta)},
                {"G", cfg.G},
                {"H", cfg.H},
                {"R", r},
                {"S", s}};
}

BilinearConfig bilinearFromJson(const Json& j, int m1, int m2) {
    BilinearConfig bcfg = BilinearConfig::ones(m1, m2, PairMode::Generic);
    if (j.is_null()) return bcfg;
    if (!j.is_object()) throw ConfigError("bilinear config must be a JSON object");
    if (j.contains("mode")) {
        std::string mode = j.at("mode").get<std::string>();
        if (mode == "generic") bcfg.mode = PairMode::Generic;
        else if (mode == "sobolev") bcfg.mode = PairMode::Sobolev;
        else throw ConfigError("mode must be \"generic\" or \"sobolev\"");
    }
    auto fill = [](const Json& arr, std::vector<Rational>& out, const char* name) {
        if (!arr.is_array() || arr.size() != out.size())
            throw ConfigError(std::string(name) + " must be an array matching the block size");
        for (size_t i = 0; i < out.size(); ++i) out[i] = parseRational(arr[i].get<std::string>());
    };
    if (j.contains("kappa")) fill(j.at("kappa"), bcfg.kappa, "kappa");
    if (j.contains("tau")) fill(j.at("tau"), bcfg.tau, "tau");
    return bcfg;
}

Json bilinearToJson(const BilinearConfig& bcfg) {
    return Json{{"kappa", rationalListToJson(bcfg.kappa)},
                {"tau", rationalListToJson(bcfg.tau)},
                {"mode", bcfg.mode == PairMode::Generic ? "generic" : "sobolev"}};
}

RunConfig runConfigFromJson(const Json& j) {
    RunConfig run;
    if (j.is_object() && j.contains("family")) {
        run.family = familyFromJson(j.at("family"));
        run.bilinear = bilinearFromJson(j.contains("bilinear") ? j.at("bilinear") : Json(),
                                        run.family.m1(), run.family.m2());
    } else {
        run.family = familyFromJson(j);
        run.bilinear = BilinearConfig::ones(run.family.m1(), run.family.m2(), PairMode::Generic);
    }
    return run;
}

RunConfig loadRunConfig(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return runConfigFromJson(j);
}

} // namespace jtpoly
