#pragma once

#include <string>

#include "germ/bounds.hpp"

namespace germ {

/// Library version string.
const char* version();

/// Deterministic JSON rendering of a report. Unbounded values are the string
/// "unbounded"; integers too large for 64 bits are decimal strings; reals
/// carry 12 significant digits.
std::string emit_report(const GermReport& report);

}  // namespace germ
