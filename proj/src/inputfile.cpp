// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/inputfile.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "ellfib/expr.hpp"

namespace ellfib {

namespace {

std::string strip(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// "(x, y)" with rational literals
PointQ parsePointLiteral(const std::string& text, const std::string& where)
{
    std::string s = strip(text);
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw ParseError(where + ": expected point literal (x, y)");
    s = s.substr(1, s.size() - 2);
    std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw ParseError(where + ": expected ',' in point literal");
    return PointQ(Rational::parse(strip(s.substr(0, comma))), Rational::parse(strip(s.substr(comma + 1))));
}

} // namespace

InputDoc parseInputDoc(std::istream& in, const std::string& name)
{
    std::map<std::string, RationalFunction> fiber;
    std::map<std::string, Rational> baseCoeff;
    std::vector<PointQ> gens, tors;
    bool sawBasisKey = false;
    std::optional<std::string> baseValue;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty())
            continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(name + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        std::string where = name + ":" + std::to_string(lineno);
        if (value.empty())
            throw ParseError(where + ": empty value for '" + key + "'");

        if (key == "base") {
            baseValue = value;
        } else if (key == "a1" || key == "a2" || key == "a3" || key == "a4" || key == "a6") {
            if (fiber.count(key))
                throw ParseError(where + ": duplicate key '" + key + "'");
            fiber[key] = RationalFunction(parsePolynomial(value));
        } else if (key == "base_a1" || key == "base_a2" || key == "base_a3" || key == "base_a4" ||
                   key == "base_a6") {
            if (baseCoeff.count(key))
                throw ParseError(where + ": duplicate key '" + key + "'");
            baseCoeff[key] = Rational::parse(value);
            sawBasisKey = true;
        } else if (key == "gen") {
            gens.push_back(parsePointLiteral(value, where));
            sawBasisKey = true;
        } else if (key == "tors") {
            tors.push_back(parsePointLiteral(value, where));
            sawBasisKey = true;
        } else {
            throw ParseError(where + ": unknown key '" + key + "'");
        }
    }

    InputDoc doc;
    if (baseValue) {
        if (*baseValue == "P1")
            doc.baseKind = BaseKind::P1;
        else if (*baseValue == "elliptic")
            doc.baseKind = BaseKind::EllipticBase;
        else
            throw ParseError(name + ": base must be P1 or elliptic, got '" + *baseValue + "'");
    }

    auto fc = [&](const char* k) {
        auto it = fiber.find(k);
        return it == fiber.end() ? RationalFunction() : it->second;
    };
    doc.hasFiberKeys = !fiber.empty();
    doc.fiberCurve = CurveQt(fc("a1"), fc("a2"), fc("a3"), fc("a4"), fc("a6"));

    if (sawBasisKey) {
        auto bc = [&](const char* k) {
            auto it = baseCoeff.find(k);
            return it == baseCoeff.end() ? Rational() : it->second;
        };
        MWBasis basis;
        basis.curve = CurveQ(bc("base_a1"), bc("base_a2"), bc("base_a3"), bc("base_a4"), bc("base_a6"));
        basis.generators = std::move(gens);
        basis.torsion = std::move(tors);
        try {
            basis.validate();
        } catch (const ContractError& e) {
            throw ParseError(name + ": invalid basis: " + e.what());
        }
        doc.basis = std::move(basis);
    }
    return doc;
}

InputDoc parseInputFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open input file: " + path);
    return parseInputDoc(in, path);
}

} // namespace ellfib
