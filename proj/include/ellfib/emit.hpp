// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_EMIT_HPP
#define ELLFIB_EMIT_HPP

#include <string>
#include <vector>

#include "ellfib/census.hpp"
#include "ellfib/sections.hpp"

namespace ellfib {

// Deterministic text output shared by the CLI and the test suites.
// Exact quantities print as rational strings; fitted quantities print
// with 6 significant digits.

std::string jsonEscape(const std::string& s);
std::string formatSig6(double v);

std::string censusRecordJsonl(const CensusRecord& rec);
std::string censusRecordCsv(const CensusRecord& rec);
inline const char* censusCsvHeader() { return "t,height,status,torsion"; }

std::string censusSummaryJson(const CensusSummary& summary, double margin);

// Sections document: embeds the fibration so `verify` can recheck it
// standalone.  Sweep reports are optional per-section attachments.
std::string sectionsJson(const Fibration& fib, const SectionSearchResult& result,
                         const std::vector<SweepReport>& sweeps);

std::string sectionText(const TorsionSection& s);

std::string fitJson(const char* kind, const FitResult& fit);

} // namespace ellfib

#endif
