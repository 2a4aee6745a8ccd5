#pragma once

// JSON distribution documents.
//
//   {"kind": "piecewise_linear", "breakpoints": [...], "right_limits": [...],
//    "left_limits": [...], "point_values": [...]}            point_values optional
//   {"kind": "polygonal", "breakpoints": [...], "heights": [...]}
//   {"kind": "tetragonal", "a": _, "c": _, "d": _, "b": _, "heights": [C, D]}
//   {"kind": "tetragonal", "a": _, "c": _, "d": _, "b": _, "w": _}
//   {"kind": "triangular", "a": _, "c": _, "b": _}
//
// Unknown fields are rejected. Tetragonal heights are rescaled to unit mass
// on load; the other kinds are taken as given.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pldist/density.hpp"
#include "pldist/families.hpp"

namespace pldist {

enum class SpecKind { PiecewiseLinear, Polygonal, Tetragonal, Triangular };

std::string_view to_string(SpecKind kind) noexcept;

struct PolygonalPayload {
  std::vector<double> breakpoints;
  std::vector<double> heights;
};

struct TetragonalPayload {
  double a;
  double c;
  double d;
  double b;
  std::optional<std::vector<double>> heights;  // raw C', D'
  std::optional<double> w;
};

struct DistributionSpecFile {
  SpecKind kind;
  std::variant<DensitySpec, PolygonalPayload, TetragonalPayload, TriangularParams> payload;
};

/// Throws ParseError (malformed JSON, with line and column) or SchemaError
/// (missing, mistyped, or unknown fields; family parameters out of order).
DistributionSpecFile parse_spec(std::string_view text);

/// Polygonal form for the kinds that have one.
std::optional<PolygonalDensity> to_polygonal(const DistributionSpecFile& spec);

/// Validated, canonicalized density. Not normalized unless the kind implies it.
PiecewiseLinearDensity to_density(const DistributionSpecFile& spec);

/// Documents that parse back to the same values, bit for bit.
std::string dump_spec(const PiecewiseLinearDensity& d);
std::string dump_spec(const PolygonalDensity& p);

}  // namespace pldist
