#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latpoly/jets.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

/// A polytope read from JSON, with the optional "name" field.
struct NamedPolytope {
  LatticePolytope polytope;
  std::optional<std::string> name;
};

/**
 * Polytope files are JSON objects {"vertices": [[x, ...], ...]} with an
 * optional "name" string. Integers may be JSON numbers or decimal strings
 * (for values beyond 64 bits). Throws ParseError on malformed input.
 */
NamedPolytope parsePolytope(const std::string& text);
NamedPolytope readPolytopeFile(const std::string& path);

/// Compact JSON {"vertices": [...]} (plus "name" when given), vertices in
/// the polytope's own order.
std::string polytopeToJson(const LatticePolytope& p,
                           const std::optional<std::string>& name = std::nullopt);

/**
 * A point configuration file: {"points": [[...], ...]} lists exponents
 * directly; otherwise the lattice points of the "vertices" polytope are used.
 */
PointConfiguration parseConfiguration(const std::string& text);
PointConfiguration readConfigurationFile(const std::string& path);

std::string readTextFile(const std::string& path);

/// "p/q", or just "p" for integers.
std::string formatRational(const Rational& r);
/// "x0^4*x1^5": zero exponents omitted, no "^1", "1" for the zero vector.
std::string formatMonomial(const IntVector& exponents);
/// "(1,-2,3)".
std::string formatVector(const IntVector& v);

/// Comma-separated rationals such as "1,1" or "1/2,3".
RatVector parseRationalList(const std::string& text);
/// Comma-separated nonnegative integers such as "0,3".
std::vector<std::size_t> parseIndexList(const std::string& text);

}  // namespace latpoly
