/// JSON interchange:
///   "o1matrix-v1"       symbol matrices, exact round-trip, rationals as
///                       [numerator, denominator] string pairs
///   "measure-report-v1" measure/certificate reports, write-only, exact
///                       endpoints as "p/q" strings plus decimal renderings
#pragma once

#include <string>
#include <string_view>

#include "ostro/measure.hpp"
#include "ostro/symbol_matrix.hpp"

namespace ostro {

std::string matrixToJson(const SymbolMatrix& P);

/// Throws invalid_argument on malformed documents and domain_error on
/// well-formed documents with invalid probabilities.
SymbolMatrix matrixFromJson(std::string_view text);

std::string measureReportToJson(const MeasureReport& rep);

const char* verdictName(Verdict v);

}  // namespace ostro
