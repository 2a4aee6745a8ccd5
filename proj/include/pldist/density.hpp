#pragma once

// Data model for one-dimensional piecewise-linear probability densities.
//
// A density lives on breakpoints c_0 <= c_1 <= ... <= c_{n+1}. On every open
// piece (c_i, c_{i+1}) it is linear, running from the right-hand limit R_i at
// c_i to the left-hand limit L_{i+1} at c_{i+1}. The limits at one breakpoint
// need not agree, so the density may jump. Outside [c_0, c_{n+1}] it is zero,
// which is why L_0 and R_{n+1} are implicit zeros and never stored.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pldist {

/// Relative tolerance under which |raw_mass - 1| counts as normalized.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Ordered breakpoints c_0 ... c_{n+1}. Nondecreasing, with c_0 < c_{n+1}.
class Grid {
 public:
  explicit Grid(std::vector<double> breakpoints);

  std::size_t size() const noexcept { return c_.size(); }
  /// Number of pieces, n + 1.
  std::size_t pieces() const noexcept { return c_.size() - 1; }
  double operator[](std::size_t i) const { return c_[i]; }
  double lo() const noexcept { return c_.front(); }
  double hi() const noexcept { return c_.back(); }
  double width() const noexcept { return c_.back() - c_.front(); }
  double length(std::size_t piece) const { return c_[piece + 1] - c_[piece]; }
  std::span<const double> points() const noexcept { return c_; }
  bool strictly_increasing() const noexcept;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::vector<double> c_;
};

/// How f(c_i) is defined at a breakpoint.
enum class PointRule {
  MaxOfLimits,   // max{L_i, R_i}
  MeanOfLimits,  // (L_i + R_i) / 2
  Given,         // explicit point_values
};

/// Raw, unvalidated description of a density as it arrives from a caller.
struct DensitySpec {
  std::vector<double> breakpoints;
  std::vector<double> right_limits;  // R_0 ... R_n
  std::vector<double> left_limits;   // L_1 ... L_{n+1}
  std::optional<std::vector<double>> point_values;  // f(c_0) ... f(c_{n+1})
};

class PiecewiseLinearDensity {
 public:
  /// Validates sizes and signs; does not canonicalize or normalize. The point
  /// rule defaults to Given when point values are supplied, MaxOfLimits
  /// otherwise.
  PiecewiseLinearDensity(Grid grid, std::vector<double> right_limits,
                         std::vector<double> left_limits,
                         std::optional<std::vector<double>> point_values = std::nullopt);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t pieces() const noexcept { return grid_.pieces(); }

  /// R_i for i in [0, n+1]; R_{n+1} = 0.
  double right_limit(std::size_t i) const {
    return i < right_.size() ? right_[i] : 0.0;
  }
  /// L_i for i in [0, n+1]; L_0 = 0.
  double left_limit(std::size_t i) const { return i == 0 ? 0.0 : left_[i - 1]; }
  /// f(c_i) under the active point rule.
  double point_value(std::size_t i) const;

  std::span<const double> right_limits() const noexcept { return right_; }
  std::span<const double> left_limits() const noexcept { return left_; }
  const std::optional<std::vector<double>>& point_values() const noexcept {
    return points_;
  }
  PointRule point_rule() const noexcept { return rule_; }

  /// Copy with another point rule. Given requires stored point values.
  PiecewiseLinearDensity with_point_rule(PointRule rule) const;
  /// Copy with every height (limits and point values) multiplied by s > 0.
  PiecewiseLinearDensity scaled(double s) const;

  bool is_normalized() const;

  friend bool operator==(const PiecewiseLinearDensity&,
                         const PiecewiseLinearDensity&) = default;

 private:
  Grid grid_;
  std::vector<double> right_;
  std::vector<double> left_;
  std::optional<std::vector<double>> points_;
  PointRule rule_;
};

/// Continuous special case: vertex heights H_0 ... H_{n+1} with H_0 = H_{n+1} = 0.
class PolygonalDensity {
 public:
  PolygonalDensity(Grid grid, std::vector<double> heights);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> heights() const noexcept { return heights_; }
  double height(std::size_t i) const { return heights_[i]; }

  PolygonalDensity scaled(double s) const;

  friend bool operator==(const PolygonalDensity&, const PolygonalDensity&) = default;

 private:
  Grid grid_;
  std::vector<double> heights_;
};

struct NormalizationReport {
  double raw_mass;
  double factor_k;  // 1 / raw_mass
};

/// Builds, validates and canonicalizes a density from its raw description.
PiecewiseLinearDensity validate(const DensitySpec& spec);

/// Sum of per-piece trapezoid areas (R_i + L_{i+1})(c_{i+1} - c_i) / 2.
double raw_mass(const PiecewiseLinearDensity& d);
/// Sum H_i (c_{i+1} - c_{i-1}) / 2 over interior vertices.
double raw_mass(const PolygonalDensity& p);

/// Scales every height by k = 2 / sum (R_i + L_{i+1})(c_{i+1} - c_i).
/// Throws ZeroMass when no positive height exists.
std::pair<PiecewiseLinearDensity, NormalizationReport> normalize(
    const PiecewiseLinearDensity& d);
std::pair<PolygonalDensity, NormalizationReport> normalize(const PolygonalDensity& p);

/// R_i = H_i, L_{i+1} = H_{i+1}, f(c_i) = H_i. Coincident vertices are kept;
/// call canonicalize to drop them.
PiecewiseLinearDensity promote(const PolygonalDensity& p);

/// Drops zero-length pieces. Across a run of coincident breakpoints the left
/// limit of the first surviving piece boundary and the right limit of the
/// last are kept; the point value of the highest-index duplicate survives.
PiecewiseLinearDensity canonicalize(const PiecewiseLinearDensity& d);

/// Throws NotNormalized (with raw mass and the required factor in the
/// message) unless d is normalized.
void require_normalized(const PiecewiseLinearDensity& d);

}  // namespace pldist
