// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_INPUTFILE_HPP
#define ELLFIB_INPUTFILE_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "ellfib/fibration.hpp"
#include "ellfib/heights.hpp"

namespace ellfib {

// Line-oriented `key = value` input.  Comments start with '#'.
//
// Fibration keys:  base (P1 | elliptic; default P1),
//                  a1 a2 a3 a4 a6 (polynomial expressions in t; default 0).
// Elliptic-base keys: base_a1 .. base_a6 (rational constants; default 0),
//                  gen = (x, y)   repeatable,
//                  tors = (x, y)  repeatable.
struct InputDoc {
    BaseKind baseKind = BaseKind::P1;
    CurveQt fiberCurve;       // from a1..a6 keys
    bool hasFiberKeys = false;
    std::optional<MWBasis> basis; // present iff any base_* / gen / tors key occurs

    // Builds the fibration (requires a smooth generic fiber).
    Fibration makeFibration() const { return Fibration(fiberCurve, baseKind); }
};

InputDoc parseInputDoc(std::istream& in, const std::string& name = "<input>");
InputDoc parseInputFile(const std::string& path);

} // namespace ellfib

#endif
