#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "germ/polyring.hpp"

namespace germ {

/// Contents of an ideal file:
///
///   vars x, y, z;
///   x^2 - y^3;          # one generator per statement
///   assume pure_dimensional;
struct IdealFile {
  VarList variables;
  std::vector<Polynomial> generators;
  bool assume_pure_dimensional = false;
};

/// Throws ParseError with the line/column of the offending token.
IdealFile parse_ideal(std::string_view text);

/// Parses a single expression against a known variable list.
Polynomial parse_polynomial(std::string_view text, const VarList& vars);

/// Serializes back into the grammar accepted by parse_ideal.
std::string print_ideal(const IdealFile& ideal);

}  // namespace germ
