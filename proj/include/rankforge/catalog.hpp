// Line-oriented catalog: one self-contained JSON record per line, every
// arithmetic value a decimal string, fixed key order. Identical runs produce
// byte-identical files. Also parses the small named-field curve input format.

#ifndef RANKFORGE_CATALOG_HPP
#define RANKFORGE_CATALOG_HPP

#include <string>
#include <variant>

#include "rankforge/record.hpp"

namespace rankforge {

inline constexpr int kCatalogSchemaVersion = 1;

std::string record_to_line(const ExtensionRecord& rec);

// Throws std::invalid_argument with a description on malformed input.
ExtensionRecord record_from_line(const std::string& line);

using CurveInput = std::variant<CurveSpec, SuperellipticSpec>;

// Text format, one "name: value" per line, '#' comments:
//   kind: curve            |  kind: super
//   f: 8 8 0 1             |  d: 2
//   g: 0 0 1               |  k: 4
//                          |  D: 1
// Polynomial coefficients are little-endian rationals.
CurveInput parse_curve_input(const std::string& text);
CurveInput load_curve_file(const std::string& path);

}  // namespace rankforge

#endif
