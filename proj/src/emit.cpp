// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/emit.hpp"

#include <cstdio>
#include <sstream>

namespace ellfib {

std::string jsonEscape(const std::string& s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

std::string formatSig6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

std::string baseString(const CensusRecord& rec)
{
    if (auto* p = std::get_if<P1Point>(&rec.base))
        return p->str();
    const PointQ& q = std::get<PointQ>(rec.base);
    return q.x.str(); // base parameter is the x-coordinate
}

std::string heightString(const CensusRecord& rec)
{
    if (std::holds_alternative<P1Point>(rec.base)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", rec.height);
        return buf;
    }
    return formatSig6(rec.height);
}

} // namespace

std::string censusRecordJsonl(const CensusRecord& rec)
{
    std::ostringstream os;
    os << "{\"t\":\"" << jsonEscape(baseString(rec)) << "\",\"height\":" << heightString(rec)
       << ",\"status\":\"" << fiberStatusName(rec.status) << "\"";
    if (rec.torsion)
        os << ",\"torsion\":\"" << rec.torsion->str() << "\"";
    os << "}";
    return os.str();
}

std::string censusRecordCsv(const CensusRecord& rec)
{
    std::ostringstream os;
    os << baseString(rec) << ',' << heightString(rec) << ',' << fiberStatusName(rec.status) << ',';
    if (rec.torsion)
        os << rec.torsion->str();
    return os.str();
}

std::string censusSummaryJson(const CensusSummary& summary, double margin)
{
    std::ostringstream os;
    os << "{\"x\":" << formatSig6(summary.x) << ",\"N\":" << summary.N << ",\"M\":" << summary.M;
    if (summary.lambdaHat) {
        os << ",\"lambda_hat\":" << formatSig6(*summary.lambdaHat);
        os << ",\"threshold\":\"" << verdictName(thresholdReport(summary, margin)) << "\"";
    }
    os << ",\"histogram\":{";
    bool first = true;
    for (const auto& [label, count] : summary.histogram) {
        if (!first)
            os << ",";
        first = false;
        os << "\"" << label.str() << "\":" << count;
    }
    os << "},\"infinity_excluded\":true}";
    return os.str();
}

namespace {

std::string polyCoeffArray(const Polynomial& p)
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i <= std::max(p.degree(), 0); ++i) {
        if (i)
            os << ",";
        os << "\"" << p.coeff(std::size_t(i)).str() << "\"";
    }
    os << "]";
    return os.str();
}

std::string ratFuncJson(const RationalFunction& f)
{
    return "{\"num\":" + polyCoeffArray(f.num()) + ",\"den\":" + polyCoeffArray(f.den()) + "}";
}

} // namespace

std::string sectionText(const TorsionSection& s)
{
    return "order=" + std::to_string(s.order) + ", x(t)=" + s.x.str() + ", y(t)=" + s.y.str();
}

std::string sectionsJson(const Fibration& fib, const SectionSearchResult& result,
                         const std::vector<SweepReport>& sweeps)
{
    const CurveQt& c = fib.curve();
    std::ostringstream os;
    os << "{\"fibration\":{\"base\":\""
       << (fib.baseKind() == BaseKind::P1 ? "P1" : "elliptic") << "\"";
    const char* names[5] = {"a1", "a2", "a3", "a4", "a6"};
    const RationalFunction* as[5] = {&c.a1, &c.a2, &c.a3, &c.a4, &c.a6};
    for (int i = 0; i < 5; ++i)
        os << ",\"" << names[i] << "\":" << ratFuncJson(*as[i]);
    os << "},\"sections\":[";
    for (std::size_t i = 0; i < result.sections.size(); ++i) {
        const TorsionSection& s = result.sections[i];
        if (i)
            os << ",";
        os << "{\"order\":" << s.order << ",\"x\":" << ratFuncJson(s.x)
           << ",\"y\":" << ratFuncJson(s.y);
        if (i < sweeps.size()) {
            os << ",\"sweep\":{\"checked\":" << sweeps[i].checked << ",\"violations\":[";
            for (std::size_t v = 0; v < sweeps[i].violations.size(); ++v) {
                if (v)
                    os << ",";
                os << "{\"t\":\"" << sweeps[i].violations[v].t0.str()
                   << "\",\"order\":" << sweeps[i].violations[v].observedOrder << "}";
            }
            os << "]}";
        }
        os << "}";
    }
    os << "],\"warnings\":[";
    for (std::size_t i = 0; i < result.warnings.size(); ++i) {
        if (i)
            os << ",";
        os << "\"" << jsonEscape(result.warnings[i]) << "\"";
    }
    os << "]}";
    return os.str();
}

std::string fitJson(const char* kind, const FitResult& fit)
{
    std::ostringstream os;
    os << "{\"fit\":\"" << kind << "\",\"exponent\":" << formatSig6(fit.exponent)
       << ",\"constant\":" << formatSig6(fit.constant) << ",\"residual\":" << formatSig6(fit.residual)
       << "}";
    return os.str();
}

} // namespace ellfib
