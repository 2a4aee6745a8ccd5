#include "pldist/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "pldist/error.hpp"

namespace pldist {

namespace {

void check_heights(std::span<const double> values, const char* name,
                   std::size_t index_offset) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v)) {
      throw DensityError(ErrorKind::NonFinite, std::string(name) + " at index " +
                                                   std::to_string(i + index_offset) +
                                                   " is not finite");
    }
    if (v < 0.0) {
      std::ostringstream msg;
      msg << name << " at index " << i + index_offset << " is negative (" << v << ")";
      throw DensityError(ErrorKind::NegativeValue, msg.str());
    }
  }
}

std::string mass_diagnostic(double mass) {
  std::ostringstream msg;
  msg.precision(12);
  msg << "density is not normalized: raw mass " << mass;
  if (mass > 0.0) msg << ", required factor k = " << 1.0 / mass;
  return msg.str();
}

// sum (R_i + L_{i+1})(c_{i+1} - c_i), i.e. twice the total mass.
double doubled_mass(const PiecewiseLinearDensity& d) {
  const Grid& g = d.grid();
  double sum = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    sum += (d.right_limit(i) + d.left_limit(i + 1)) * g.length(i);
  }
  return sum;
}

// sum H_i (c_{i+1} - c_{i-1}) over interior vertices.
double doubled_mass(const PolygonalDensity& p) {
  const Grid& g = p.grid();
  double sum = 0.0;
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    sum += p.height(i) * (g[i + 1] - g[i - 1]);
  }
  return sum;
}

template <class Density>
std::pair<Density, NormalizationReport> normalize_impl(const Density& d) {
  const double sum = doubled_mass(d);
  if (!(sum > 0.0)) {
    throw DensityError(ErrorKind::ZeroMass, "density has no positive mass to normalize");
  }
  const double k = 2.0 / sum;
  return {d.scaled(k), NormalizationReport{0.5 * sum, k}};
}

}  // namespace

Grid::Grid(std::vector<double> breakpoints) : c_(std::move(breakpoints)) {
  if (c_.size() < 2) {
    throw DensityError(ErrorKind::EmptySupport, "at least two breakpoints are required");
  }
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!std::isfinite(c_[i])) {
      throw DensityError(ErrorKind::NonFinite,
                         "breakpoint at index " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && c_[i] < c_[i - 1]) {
      throw DensityError(ErrorKind::NotNondecreasing,
                         "breakpoint at index " + std::to_string(i) +
                             " is smaller than its predecessor");
    }
  }
  if (!(c_.front() < c_.back())) {
    throw DensityError(ErrorKind::EmptySupport, "support has zero width");
  }
}

bool Grid::strictly_increasing() const noexcept {
  return std::adjacent_find(c_.begin(), c_.end(), std::greater_equal<>()) == c_.end();
}

PiecewiseLinearDensity::PiecewiseLinearDensity(
    Grid grid, std::vector<double> right_limits, std::vector<double> left_limits,
    std::optional<std::vector<double>> point_values)
    : grid_(std::move(grid)),
      right_(std::move(right_limits)),
      left_(std::move(left_limits)),
      points_(std::move(point_values)),
      rule_(points_ ? PointRule::Given : PointRule::MaxOfLimits) {
  const std::size_t pieces = grid_.pieces();
  if (right_.size() != pieces || left_.size() != pieces) {
    std::ostringstream msg;
    msg << "expected " << pieces << " right and left limits for " << grid_.size()
        << " breakpoints, got " << right_.size() << " and " << left_.size();
    throw DensityError(ErrorKind::LengthMismatch, msg.str());
  }
  if (points_ && points_->size() != grid_.size()) {
    std::ostringstream msg;
    msg << "expected " << grid_.size() << " point values, got " << points_->size();
    throw DensityError(ErrorKind::LengthMismatch, msg.str());
  }
  check_heights(right_, "right limit", 0);
  check_heights(left_, "left limit", 1);
  if (points_) check_heights(*points_, "point value", 0);
}

double PiecewiseLinearDensity::point_value(std::size_t i) const {
  switch (rule_) {
    case PointRule::Given:
      return (*points_)[i];
    case PointRule::MeanOfLimits:
      return 0.5 * (left_limit(i) + right_limit(i));
    case PointRule::MaxOfLimits:
      break;
  }
  return std::max(left_limit(i), right_limit(i));
}

PiecewiseLinearDensity PiecewiseLinearDensity::with_point_rule(PointRule rule) const {
  if (rule == PointRule::Given && !points_) {
    throw DensityError(ErrorKind::SchemaError,
                       "point rule 'given' requires explicit point values");
  }
  PiecewiseLinearDensity copy = *this;
  copy.rule_ = rule;
  return copy;
}

PiecewiseLinearDensity PiecewiseLinearDensity::scaled(double s) const {
  PiecewiseLinearDensity copy = *this;
  for (double& v : copy.right_) v *= s;
  for (double& v : copy.left_) v *= s;
  if (copy.points_) {
    for (double& v : *copy.points_) v *= s;
  }
  return copy;
}

bool PiecewiseLinearDensity::is_normalized() const {
  return std::abs(raw_mass(*this) - 1.0) <= kNormalizationTolerance;
}

PolygonalDensity::PolygonalDensity(Grid grid, std::vector<double> heights)
    : grid_(std::move(grid)), heights_(std::move(heights)) {
  if (heights_.size() != grid_.size()) {
    std::ostringstream msg;
    msg << "expected " << grid_.size() << " heights, got " << heights_.size();
    throw DensityError(ErrorKind::LengthMismatch, msg.str());
  }
  check_heights(heights_, "height", 0);
  if (heights_.front() != 0.0 || heights_.back() != 0.0) {
    throw DensityError(ErrorKind::NonzeroEndpoint,
                       "polygonal density must vanish at both support endpoints");
  }
}

PolygonalDensity PolygonalDensity::scaled(double s) const {
  PolygonalDensity copy = *this;
  for (double& h : copy.heights_) h *= s;
  return copy;
}

PiecewiseLinearDensity validate(const DensitySpec& spec) {
  return canonicalize(PiecewiseLinearDensity(Grid(spec.breakpoints), spec.right_limits,
                                             spec.left_limits, spec.point_values));
}

double raw_mass(const PiecewiseLinearDensity& d) { return 0.5 * doubled_mass(d); }

double raw_mass(const PolygonalDensity& p) { return 0.5 * doubled_mass(p); }

std::pair<PiecewiseLinearDensity, NormalizationReport> normalize(
    const PiecewiseLinearDensity& d) {
  return normalize_impl(d);
}

std::pair<PolygonalDensity, NormalizationReport> normalize(const PolygonalDensity& p) {
  return normalize_impl(p);
}

PiecewiseLinearDensity promote(const PolygonalDensity& p) {
  const auto h = p.heights();
  std::vector<double> right(h.begin(), h.end() - 1);
  std::vector<double> left(h.begin() + 1, h.end());
  std::vector<double> points(h.begin(), h.end());
  return PiecewiseLinearDensity(p.grid(), std::move(right), std::move(left),
                                std::move(points));
}

PiecewiseLinearDensity canonicalize(const PiecewiseLinearDensity& d) {
  const Grid& g = d.grid();
  if (g.strictly_increasing()) return d;

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    if (g.length(i) > 0.0) kept.push_back(i);
  }

  std::vector<double> c{g[kept.front()]};
  std::vector<double> right, left;
  std::vector<std::size_t> point_source{kept.front()};
  for (std::size_t j = 0; j < kept.size(); ++j) {
    const std::size_t k = kept[j];
    c.push_back(g[k + 1]);
    right.push_back(d.right_limit(k));
    left.push_back(d.left_limit(k + 1));
    point_source.push_back(j + 1 < kept.size() ? kept[j + 1] : g.size() - 1);
  }

  std::optional<std::vector<double>> points;
  if (d.point_values()) {
    points.emplace();
    for (std::size_t src : point_source) points->push_back((*d.point_values())[src]);
  }
  PiecewiseLinearDensity out(Grid(std::move(c)), std::move(right), std::move(left),
                             std::move(points));
  return out.with_point_rule(d.point_rule());
}

void require_normalized(const PiecewiseLinearDensity& d) {
  const double mass = raw_mass(d);
  if (std::abs(mass - 1.0) > kNormalizationTolerance) {
    throw DensityError(ErrorKind::NotNormalized, mass_diagnostic(mass));
  }
}

}  // namespace pldist
