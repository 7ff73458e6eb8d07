#pragma once

#include <string>
#include <vector>

#include "coefficients.hpp"
#include "conjecture.hpp"
#include "threeadic.hpp"
#include "verify.hpp"

namespace quartic {

// Stable text encodings of the result types. Exact values serialize as
// decimal strings, never as floating point; identical inputs produce
// byte-identical output.

std::string coeff_json(const CoeffRecord& rec, const std::string& method);
// Text form carries no method marker: all routes print identically.
std::string coeff_text(const CoeffRecord& rec);

// Table row schema: {"m", "l", "odd_part", "pow2_exponent", "nu2", "nu3"}.
std::string table_json(const std::vector<CoeffRecord>& rows);
// Same columns; header row, UTF-8, LF line endings.
std::string table_csv(const std::vector<CoeffRecord>& rows);

std::string reports_json(const std::vector<SuiteReport>& reports);
std::string reports_text(const std::vector<SuiteReport>& reports);

std::string verdict_json(const LineVerdict& verdict);
std::string verdict_text(const LineVerdict& verdict);

std::string numeric_roots_json(const NumericRootsResult& result, PolyFamily family, unsigned l);
std::string numeric_roots_text(const NumericRootsResult& result);

std::string scan_json(const ThreeAdicScan& scan);
std::string scan_text(const ThreeAdicScan& scan);

const char* family_name(PolyFamily family);

}  // namespace quartic
