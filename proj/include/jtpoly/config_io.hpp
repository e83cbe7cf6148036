#ifndef JTPOLY_CONFIG_IO_HPP
#define JTPOLY_CONFIG_IO_HPP

#include <string>

#include <json.hpp>

#include "jtpoly/bilinear.hpp"
#include "jtpoly/family.hpp"
#include "jtpoly/symvalue.hpp"

namespace jtpoly {

using Json = nlohmann::json;

// Schema: {"alpha": "p/q", "beta": "p/q", "G": [ints], "H": [ints],
//          "R": {"g": [ascending theta coefficients]}, "S": {...}}
FamilyConfig familyFromJson(const Json& j);
Json familyToJson(const FamilyConfig& cfg);

// Schema: {"kappa": ["p/q", ...], "tau": [...], "mode": "generic"|"sobolev"};
// omitted strengths default to 1.
BilinearConfig bilinearFromJson(const Json& j, int m1, int m2);
Json bilinearToJson(const BilinearConfig& bcfg);

struct RunConfig {
    FamilyConfig family;
    BilinearConfig bilinear;
};

// Accepts either a bare family object or {"family": ..., "bilinear": ...}.
RunConfig runConfigFromJson(const Json& j);
RunConfig loadRunConfig(const std::string& path);

Json uniPolyToJson(const UniPoly& p);
UniPoly uniPolyFromJson(const Json& j);
Json symValueToJson(const SymValue& s);
Json rationalListToJson(const std::vector<Rational>& values);

} // namespace jtpoly

#endif
