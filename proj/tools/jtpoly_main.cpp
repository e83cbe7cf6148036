// jtpoly: exact construction and certification of determinantal Jacobi-type
// polynomial families from JSON configs. Subcommands print JSON (default) or
// plain text; exit codes: 0 ok, 1 bad configuration, 2 degenerate family,
// 3 property violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "jtpoly/reports.hpp"

using namespace jtpoly;

namespace {

struct OutputOpts {
    bool text = false;
    std::string outPath;
};

void emit(const Json& report, const OutputOpts& opts) {
    std::string payload = opts.text ? renderText(report) : report.dump(2) + "\n";
    if (opts.outPath.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.outPath);
    if (!out) throw ConfigError("cannot open output file: " + opts.outPath);
    out << payload;
}

std::pair<int, int> parseWindow(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ConfigError("window must look like A:B");
    try {
        int a = std::stoi(text.substr(0, colon));
        int b = std::stoi(text.substr(colon + 1));
        return {a, b};
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
        throw ConfigError("window must look like A:B");
    }
}

std::vector<Rational> parseRationalList(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parseRational(item));
    return out;
}

PairMode applyModeFlag(BilinearConfig& bcfg, const std::string& mode) {
    if (mode == "generic") bcfg.mode = PairMode::Generic;
    else if (mode == "sobolev") bcfg.mode = PairMode::Sobolev;
    else if (!mode.empty()) throw ConfigError("--mode must be generic or sobolev");
    return bcfg.mode;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Jacobi-type polynomial family toolkit"};
    app.require_subcommand(1);

    std::string configPath, windowText, modeText, qCoeffs;
    OutputOpts out;
    int n = 0, maxN = 12, maxDeg = 2;

    auto addCommon = [&](CLI::App* cmd, bool needsConfig) {
        if (needsConfig) cmd->add_option("--config", configPath, "family config JSON")->required();
        cmd->add_flag("--text", out.text, "plain-text output (default JSON)");
        cmd->add_flag("--json", [](int64_t) {}, "JSON output (default)");
        cmd->add_option("--out", out.outPath, "write the report to a file");
    };

    auto* qpoly = app.add_subcommand("qpoly", "print q_n, its expansion, and the nondegeneracy value");
    addCommon(qpoly, true);
    qpoly->add_option("--n", n, "polynomial index")->required();

    auto* orth = app.add_subcommand("orth-check", "verify orthogonality of q_n under the bilinear form");
    addCommon(orth, true);
    orth->add_option("--max-n", maxN, "check n up to this index");
    orth->add_option("--mode", modeText, "generic|sobolev (overrides config)");

    auto* recur = app.add_subcommand("recurrence", "expand Q q_n over a window and report the band");
    addCommon(recur, true);
    recur->add_option("--q", qCoeffs, "ascending Q coefficients, comma separated")->required();
    recur->add_option("--window", windowText, "index window A:B")->required();

    auto* scan = app.add_subcommand("algebra-scan", "basis of banded eigenvalue polynomials up to a degree");
    addCommon(scan, true);
    scan->add_option("--max-deg", maxDeg, "degree bound")->required();
    scan->add_option("--window", windowText, "index window A:B")->required();

    auto* krall = app.add_subcommand("krall", "build a point-mass family, check the three-term recurrence, fit the measure");
    addCommon(krall, false);
    KrallSpec spec;
    std::string aText = "1", bText = "1";
    int windowHi = 12, fitMaxN = 6, verifyMaxN = 14;
    krall->add_option("--m1", spec.m1, "size of the first block");
    krall->add_option("--m2", spec.m2, "size of the second block");
    krall->add_option("--alpha", spec.alpha, "integer alpha >= m2")->required();
    krall->add_option("--beta", spec.beta, "integer beta >= m1")->required();
    krall->add_option("--a", aText, "a coefficients, comma separated (a0 != 0)");
    krall->add_option("--b", bText, "b coefficients, comma separated (b0 != 0)");
    krall->add_option("--max-n", windowHi, "three-term window top");

    CLI11_PARSE(app, argc, argv);

    try {
        if (qpoly->parsed()) {
            RunConfig run = loadRunConfig(configPath);
            FamilySession fam(run.family);
            emit(qpolyReport(fam, n), out);
        } else if (orth->parsed()) {
            RunConfig run = loadRunConfig(configPath);
            applyModeFlag(run.bilinear, modeText);
            FamilySession fam(run.family);
            BilinearForm form(run.family, run.bilinear);
            Json report = orthReport(fam, form, maxN);
            emit(report, out);
            if (!report.at("pass").get<bool>()) return 3;
        } else if (recur->parsed()) {
            RunConfig run = loadRunConfig(configPath);
            FamilySession fam(run.family);
            auto [n0, n1] = parseWindow(windowText);
            emit(recurrenceReport(fam, UniPoly(parseRationalList(qCoeffs)), n0, n1), out);
        } else if (scan->parsed()) {
            RunConfig run = loadRunConfig(configPath);
            FamilySession fam(run.family);
            auto [n0, n1] = parseWindow(windowText);
            emit(algebraReport(fam, maxDeg, n0, n1), out);
        } else if (krall->parsed()) {
            spec.a = parseRationalList(aText);
            spec.b = parseRationalList(bText);
            Json report = krallReport(spec, windowHi, fitMaxN, verifyMaxN);
            emit(report, out);
            if (!report.at("pass").get<bool>()) return 3;
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const DegeneracyError& e) {
        std::cerr << "degeneracy: " << e.what() << "\n";
        return 2;
    } catch (const PropertyViolation& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
