#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pldist/density.hpp"

namespace pldist {

/// F(c_0) ... F(c_{n+1}) as prefix sums of per-piece trapezoid masses.
class CdfTable {
 public:
  explicit CdfTable(const PiecewiseLinearDensity& d);

  std::span<const double> cumulative() const noexcept { return m_; }
  double operator[](std::size_t i) const { return m_[i]; }
  double total() const noexcept { return m_.back(); }
  std::size_t size() const noexcept { return m_.size(); }

 private:
  std::vector<double> m_;
};

inline CdfTable cdf_table(const PiecewiseLinearDensity& d) { return CdfTable(d); }

/// The j with c_j <= x < c_{j+1}, taking the highest such index when
/// breakpoints coincide; x = c_{n+1} maps to the last piece. Throws
/// OutOfSupport outside [c_0, c_{n+1}].
std::size_t piece_index(const Grid& g, double x);

/// Density at x: zero outside the support, the point rule at breakpoints,
/// linear interpolation of (R_j, L_{j+1}) inside piece j.
double pdf(const PiecewiseLinearDensity& d, double x);

/// P(X <= x). Builds the CDF table on every call; use the table overload in
/// loops.
double cdf(const PiecewiseLinearDensity& d, double x);
double cdf(const PiecewiseLinearDensity& d, const CdfTable& table, double x);

/// Mass of piece j between c_j and c_j + t, for 0 <= t <= c_{j+1} - c_j.
inline double partial_piece_mass(double right, double left, double length, double t) {
  return t * (right + 0.5 * (left - right) * t / length);
}

}  // namespace pldist
