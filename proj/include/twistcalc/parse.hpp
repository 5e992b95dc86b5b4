#pragma once

#include <string>
#include <vector>

#include "twistcalc/ore.hpp"
#include "twistcalc/semilin.hpp"

namespace twc {

/// Parsers for the shared expression grammars (documented in docs/grammar.md).
/// Syntax errors carry line/column positions; unknown identifiers raise
/// UnknownSymbol.

Scalar parse_scalar(const FieldPtr& f, const std::string& text);
CoeffElem parse_coeff(const AlgebraPtr& alg, const std::string& text);
OreOperator parse_operator(const OrePtr& alg, const std::string& text);
/// Rows in brackets: [[e, e], [e, e]]; entries are coefficient expressions.
CoeffMatrix parse_matrix(const AlgebraPtr& alg, const std::string& text);
/// Flat bracket list: [e, e, e].
std::vector<CoeffElem> parse_vector(const AlgebraPtr& alg, const std::string& text);

struct OpSymbolScan {
    bool uses_T = false;
    bool uses_d = false;
};

/// Which operator presentations an expression mentions (T../d.. identifiers
/// that are not generators or the parameter).
OpSymbolScan scan_operator_symbols(const std::string& text, const AlgebraPtr& alg);

} // namespace twc
