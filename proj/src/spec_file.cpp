#include "pldist/spec_file.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <json.hpp>
#include <sstream>

#include "pldist/error.hpp"

namespace pldist {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& what) {
  throw DensityError(ErrorKind::SchemaError, what);
}

void only_fields(const json& doc, std::initializer_list<std::string_view> allowed,
                 std::string_view kind) {
  for (const auto& item : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      schema_error("unknown field '" + item.key() + "' for kind '" + std::string(kind) +
                   "'");
    }
  }
}

double number_field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("missing field '") + key + "'");
  if (!it->is_number()) schema_error(std::string("field '") + key + "' must be a number");
  return it->get<double>();
}

std::vector<double> array_field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("missing field '") + key + "'");
  if (!it->is_array()) {
    schema_error(std::string("field '") + key + "' must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(it->size());
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& v = (*it)[i];
    if (!v.is_number()) {
      schema_error(std::string("field '") + key + "' element " + std::to_string(i) +
                   " must be a number");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

// Family constructors report BadOrder; in a document that is a schema fault.
template <class Fn>
void as_schema_error(Fn&& fn) {
  try {
    fn();
  } catch (const DensityError& e) {
    if (e.kind() == ErrorKind::BadOrder || e.kind() == ErrorKind::NegativeValue) {
      schema_error(e.what());
    }
    throw;
  }
}

}  // namespace

std::string_view to_string(SpecKind kind) noexcept {
  switch (kind) {
    case SpecKind::PiecewiseLinear: return "piecewise_linear";
    case SpecKind::Polygonal: return "polygonal";
    case SpecKind::Tetragonal: return "tetragonal";
    case SpecKind::Triangular: return "triangular";
  }
  return "unknown";
}

DistributionSpecFile parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DensityError(ErrorKind::ParseError,
                       "malformed document at " + position_of(text, e.byte));
  }
  if (!doc.is_object()) schema_error("document must be a JSON object");
  const auto kind_it = doc.find("kind");
  if (kind_it == doc.end() || !kind_it->is_string()) {
    schema_error("missing string field 'kind'");
  }
  const std::string kind = kind_it->get<std::string>();

  if (kind == "piecewise_linear") {
    only_fields(doc, {"kind", "breakpoints", "right_limits", "left_limits", "point_values"},
                kind);
    // Fields are read one statement at a time: a throw midway through a
    // braced aggregate leaks the finished members on some compilers.
    DensitySpec spec;
    spec.breakpoints = array_field(doc, "breakpoints");
    spec.right_limits = array_field(doc, "right_limits");
    spec.left_limits = array_field(doc, "left_limits");
    if (doc.contains("point_values")) {
      spec.point_values.emplace(array_field(doc, "point_values"));
    }
    return {SpecKind::PiecewiseLinear, std::move(spec)};
  }
  if (kind == "polygonal") {
    only_fields(doc, {"kind", "breakpoints", "heights"}, kind);
    PolygonalPayload payload;
    payload.breakpoints = array_field(doc, "breakpoints");
    payload.heights = array_field(doc, "heights");
    return {SpecKind::Polygonal, std::move(payload)};
  }
  if (kind == "tetragonal") {
    only_fields(doc, {"kind", "a", "c", "d", "b", "heights", "w"}, kind);
    TetragonalPayload t{};
    t.a = number_field(doc, "a");
    t.c = number_field(doc, "c");
    t.d = number_field(doc, "d");
    t.b = number_field(doc, "b");
    const bool has_heights = doc.contains("heights");
    const bool has_w = doc.contains("w");
    if (has_heights == has_w) {
      schema_error("tetragonal needs exactly one of 'heights' or 'w'");
    }
    if (has_heights) {
      t.heights = array_field(doc, "heights");
      if (t.heights->size() != 2) schema_error("tetragonal 'heights' must hold [C, D]");
      as_schema_error([&] {
        check(TetragonalParams{t.a, t.c, t.d, t.b, (*t.heights)[0], (*t.heights)[1]});
      });
    } else {
      t.w = number_field(doc, "w");
      if (!(*t.w >= 0.0 && *t.w <= 1.0)) schema_error("tetragonal 'w' must lie in [0, 1]");
      as_schema_error([&] { check(TetragonalParams{t.a, t.c, t.d, t.b, 0.0, 0.0}); });
    }
    return {SpecKind::Tetragonal, t};
  }
  if (kind == "triangular") {
    only_fields(doc, {"kind", "a", "c", "b"}, kind);
    const TriangularParams p{number_field(doc, "a"), number_field(doc, "c"),
                             number_field(doc, "b")};
    as_schema_error([&] { check(p); });
    return {SpecKind::Triangular, p};
  }
  schema_error("unknown kind '" + kind + "'");
}

std::optional<PolygonalDensity> to_polygonal(const DistributionSpecFile& spec) {
  switch (spec.kind) {
    case SpecKind::PiecewiseLinear:
      return std::nullopt;
    case SpecKind::Polygonal: {
      const auto& p = std::get<PolygonalPayload>(spec.payload);
      return PolygonalDensity(Grid(p.breakpoints), p.heights);
    }
    case SpecKind::Tetragonal: {
      const auto& t = std::get<TetragonalPayload>(spec.payload);
      if (t.w) return tetragonal_from_weight(t.a, t.c, t.d, t.b, *t.w);
      return tetragonal(t.a, t.c, t.d, t.b, (*t.heights)[0], (*t.heights)[1]);
    }
    case SpecKind::Triangular:
      return triangular(std::get<TriangularParams>(spec.payload));
  }
  return std::nullopt;
}

PiecewiseLinearDensity to_density(const DistributionSpecFile& spec) {
  if (spec.kind == SpecKind::PiecewiseLinear) {
    return validate(std::get<DensitySpec>(spec.payload));
  }
  return canonicalize(promote(*to_polygonal(spec)));
}

std::string dump_spec(const PiecewiseLinearDensity& d) {
  ordered_json doc;
  doc["kind"] = "piecewise_linear";
  const auto c = d.grid().points();
  doc["breakpoints"] = std::vector<double>(c.begin(), c.end());
  doc["right_limits"] = std::vector<double>(d.right_limits().begin(), d.right_limits().end());
  doc["left_limits"] = std::vector<double>(d.left_limits().begin(), d.left_limits().end());
  if (d.point_values()) doc["point_values"] = *d.point_values();
  return doc.dump(2) + "\n";
}

std::string dump_spec(const PolygonalDensity& p) {
  ordered_json doc;
  doc["kind"] = "polygonal";
  const auto c = p.grid().points();
  doc["breakpoints"] = std::vector<double>(c.begin(), c.end());
  doc["heights"] = std::vector<double>(p.heights().begin(), p.heights().end());
  return doc.dump(2) + "\n";
}

}  // namespace pldist
