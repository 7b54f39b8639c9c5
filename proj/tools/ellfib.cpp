// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Command-line driver: torsion of constant curves, fiber censuses,
// torsion-section search, height counting, section verification.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellfib/census.hpp"
#include "ellfib/emit.hpp"
#include "ellfib/inputfile.hpp"
#include "ellfib/sections.hpp"

using namespace ellfib;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCompute = 3;

struct Options {
    std::string input;
    double heightBound = 100.0;
    int nMax = 12;
    int degBound = 8;
    int samples = 100;
    int jobs = 1;
    std::string output = "jsonl";
    double margin = 0.05;
    bool records = false;
};

int cmdTorsion(const Options& opt)
{
    InputDoc doc = parseInputFile(opt.input);
    const CurveQt& c = doc.fiberCurve;
    for (const RationalFunction* a : {&c.a1, &c.a2, &c.a3, &c.a4, &c.a6}) {
        if (!a->isConstant()) {
            std::cerr << "torsion: input curve must be constant (t-free)\n";
            return kExitUsage;
        }
    }
    CurveQ curve(c.a1.constant(), c.a2.constant(), c.a3.constant(), c.a4.constant(), c.a6.constant());
    if (!curve.isSmooth())
        throw SingularCurveError("torsion: the curve is singular");
    TorsionSubgroup sub = torsionSubgroupQ(curve);
    std::cout << sub.label.str() << "\n";
    return kExitOk;
}

int cmdCensus(const Options& opt)
{
    InputDoc doc = parseInputFile(opt.input);
    Fibration fib = doc.makeFibration();
    CensusOptions copts;
    copts.jobs = opt.jobs;
    copts.keepRecords = opt.records;

    CensusStats stats;
    if (doc.baseKind == BaseKind::EllipticBase) {
        if (!doc.basis) {
            std::cerr << "census: base = elliptic requires base_* / gen keys\n";
            return kExitUsage;
        }
        stats = runCensusStats(fib, *doc.basis, opt.heightBound, copts);
    } else {
        stats = runCensusStats(fib, opt.heightBound, copts);
    }

    if (opt.records) {
        if (opt.output == "csv")
            std::cout << censusCsvHeader() << "\n";
        for (const CensusRecord& rec : stats.records)
            std::cout << (opt.output == "csv" ? censusRecordCsv(rec) : censusRecordJsonl(rec)) << "\n";
    }
    std::cout << censusSummaryJson(stats.summary, opt.margin) << "\n";
    return kExitOk;
}

int cmdFindSections(const Options& opt)
{
    InputDoc doc = parseInputFile(opt.input);
    Fibration fib = doc.makeFibration();
    SectionSearchOptions sopts;
    sopts.nMax = opt.nMax;
    sopts.degBound = opt.degBound;
    SectionSearchResult result = findTorsionSections(fib, sopts);

    std::vector<SweepReport> sweeps;
    for (const TorsionSection& s : result.sections) {
        std::cerr << sectionText(s) << "\n";
        sweeps.push_back(injectivitySweep(fib, s, opt.samples));
    }
    for (const std::string& w : result.warnings)
        std::cerr << "warning: " << w << "\n";
    std::cout << sectionsJson(fib, result, sweeps) << "\n";
    return kExitOk;
}

int cmdCount(const Options& opt)
{
    InputDoc doc = parseInputFile(opt.input);
    const bool csv = opt.output == "csv";
    std::vector<std::pair<double, double>> samples;

    if (doc.baseKind == BaseKind::EllipticBase) {
        if (!doc.basis) {
            std::cerr << "count: base = elliptic requires base_* / gen keys\n";
            return kExitUsage;
        }
        if (!(opt.heightBound > 1)) {
            std::cerr << "count: height bound must exceed 1\n";
            return kExitUsage;
        }
        // ladder of repeated square roots: x^(1/8), x^(1/4), x^(1/2), x
        for (int k = 3; k >= 0; --k) {
            double x = std::pow(opt.heightBound, 1.0 / double(1 << k));
            samples.emplace_back(x, double(countMW(*doc.basis, x)));
        }
        if (csv)
            std::cout << "x,count\n";
        for (auto& [x, n] : samples)
            std::cout << (csv ? formatSig6(x) + "," + formatSig6(n)
                              : "{\"x\":" + formatSig6(x) + ",\"count\":" + formatSig6(n) + "}")
                      << "\n";
        std::cout << fitJson("neron", fitNeron(samples)) << "\n";
        return kExitOk;
    }

    if (!(opt.heightBound >= 16)) {
        std::cerr << "count: height bound must be at least 16 on P1\n";
        return kExitUsage;
    }
    for (int k = 3; k >= 0; --k) {
        double x = opt.heightBound / double(1 << k);
        samples.emplace_back(x, double(countP1(x)));
    }
    if (csv)
        std::cout << "x,count\n";
    for (auto& [x, n] : samples)
        std::cout << (csv ? formatSig6(x) + "," + formatSig6(n)
                          : "{\"x\":" + formatSig6(x) + ",\"count\":" + formatSig6(n) + "}")
                  << "\n";
    std::cout << fitJson("schanuel", fitSchanuel(samples)) << "\n";
    return kExitOk;
}

Polynomial polyFromJson(const nlohmann::json& arr)
{
    std::vector<Rational> coeffs;
    for (const auto& c : arr)
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    return Polynomial(std::move(coeffs));
}

RationalFunction ratFuncFromJson(const nlohmann::json& obj)
{
    return RationalFunction(polyFromJson(obj.at("num")), polyFromJson(obj.at("den")));
}

int cmdVerify(const Options& opt)
{
    std::ifstream in(opt.input);
    if (!in)
        throw ellfib::ParseError("cannot open input file: " + opt.input);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ellfib::ParseError(std::string("verify: bad JSON: ") + e.what());
    }
    try {
        const auto& fj = doc.at("fibration");
        CurveQt curve(ratFuncFromJson(fj.at("a1")), ratFuncFromJson(fj.at("a2")),
                      ratFuncFromJson(fj.at("a3")), ratFuncFromJson(fj.at("a4")),
                      ratFuncFromJson(fj.at("a6")));
        BaseKind base = fj.at("base").get<std::string>() == "elliptic" ? BaseKind::EllipticBase
                                                                       : BaseKind::P1;
        Fibration fib(curve, base);
        bool allOk = true;
        std::size_t idx = 0;
        for (const auto& sj : doc.at("sections")) {
            TorsionSection s;
            s.order = sj.at("order").get<int>();
            s.x = ratFuncFromJson(sj.at("x"));
            s.y = ratFuncFromJson(sj.at("y"));
            bool ok = verifySection(fib, s);
            allOk = allOk && ok;
            std::cout << "section " << idx++ << ": " << (ok ? "ok" : "FAIL") << " (" << sectionText(s)
                      << ")\n";
        }
        return allOk ? kExitOk : kExitCompute;
    } catch (const nlohmann::json::exception& e) {
        throw ellfib::ParseError(std::string("verify: malformed document: ") + e.what());
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact arithmetic for elliptic fibrations over Q(t): fiber torsion, "
                 "height censuses, torsion sections"};
    app.require_subcommand(1);

    Options opt;
    auto addCommon = [&](CLI::App* sub, bool needsInput = true) {
        if (needsInput)
            sub->add_option("input", opt.input, "input file")->required();
        sub->add_option("--height-bound", opt.heightBound, "height bound x");
        sub->add_option("--nmax", opt.nMax, "largest torsion order to search")
            ->check(CLI::Range(2, 12));
        sub->add_option("--deg-bound", opt.degBound, "degree bound for section coordinates")
            ->check(CLI::Range(0, 64));
        sub->add_option("--samples", opt.samples, "specializations per injectivity sweep")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--jobs", opt.jobs, "worker count")->check(CLI::Range(1, 256));
        sub->add_option("--output", opt.output, "output format")
            ->check(CLI::IsMember({"csv", "jsonl"}));
        sub->add_option("--margin", opt.margin, "threshold margin around 1/2");
        return sub;
    };

    CLI::App* torsion = addCommon(app.add_subcommand("torsion", "torsion subgroup of a constant curve"));
    CLI::App* census = addCommon(app.add_subcommand("census", "sweep fibers by base height"));
    census->add_flag("--records", opt.records, "stream one record per fiber before the summary");
    CLI::App* find = addCommon(app.add_subcommand("find-sections", "search for torsion sections"));
    CLI::App* count = addCommon(app.add_subcommand("count", "count base points by height and fit"));
    CLI::App* verify = addCommon(app.add_subcommand("verify", "re-check a serialized section document"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (torsion->parsed())
            return cmdTorsion(opt);
        if (census->parsed())
            return cmdCensus(opt);
        if (find->parsed())
            return cmdFindSections(opt);
        if (count->parsed())
            return cmdCount(opt);
        if (verify->parsed())
            return cmdVerify(opt);
        return kExitUsage;
    } catch (const ellfib::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ellfib::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
}
