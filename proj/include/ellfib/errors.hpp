// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_ERRORS_HPP
#define ELLFIB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellfib {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (expression grammar, fibration/basis files, JSON).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A precondition was violated by the caller (off-curve point, zero
// polynomial where nonzero required, too few samples for a fit, ...).
struct ContractError : Error {
    explicit ContractError(const std::string& what) : Error(what) {}
};

// Operation needs a smooth curve but the discriminant vanishes.
struct SingularCurveError : Error {
    explicit SingularCurveError(const std::string& what) : Error(what) {}
};

// Specialization hit the discriminant locus.
struct SingularFiberError : Error {
    explicit SingularFiberError(const std::string& what) : Error(what) {}
};

// Specialization hit a pole of a coefficient or coordinate.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

// Fiberwise matching in the section finder exceeded the assignment cap.
struct AmbiguityBudgetError : Error {
    explicit AmbiguityBudgetError(const std::string& what) : Error(what) {}
};

// A torsion computation exceeded its work budget (census aborts rather
// than silently dropping fibers).
struct WorkBudgetError : Error {
    explicit WorkBudgetError(const std::string& what) : Error(what) {}
};

} // namespace ellfib

#endif
