#include "pldist/order_stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pldist/batch.hpp"
#include "pldist/error.hpp"

namespace pldist {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "probability " << p << " outside [0, 1]";
    throw DensityError(ErrorKind::BadProbability, msg.str());
  }
}

// Smallest t in [0, length] whose partial mass from the near end, starting
// at height `near` and ending at height `far`, equals `mass`. The near-end
// quadratic (far - near)/(2 length) t^2 + near t - mass = 0 is solved in the
// cancellation-free form t = 2 mass / (near + sqrt(near^2 + 2 (far - near) mass / length)).
double solve_partial(double near, double far, double length, double mass) {
  if (mass <= 0.0) return 0.0;
  const double disc = std::max(near * near + 2.0 * (far - near) * mass / length, 0.0);
  const double denom = near + std::sqrt(disc);
  if (!(denom > 0.0)) return length;
  return std::clamp(2.0 * mass / denom, 0.0, length);
}

// Point of piece j where the cumulative mass reaches target.
double solve_in_piece(const PiecewiseLinearDensity& d, std::span<const double> m,
                      std::size_t j, double target) {
  const Grid& g = d.grid();
  const double t = solve_partial(d.right_limit(j), d.left_limit(j + 1), g.length(j),
                                 target - m[j]);
  return std::min(g[j] + t, g[j + 1]);
}

}  // namespace

double lower_inverse(const PiecewiseLinearDensity& d, const CdfTable& table, double p) {
  const Grid& g = d.grid();
  const double target = p * table.total();
  if (target <= 0.0) return g.lo();
  const auto m = table.cumulative();
  const auto k = static_cast<std::size_t>(std::lower_bound(m.begin(), m.end(), target) -
                                          m.begin());
  if (k >= m.size()) return g.hi();
  if (m[k] == target) return g[k];
  return solve_in_piece(d, m, k - 1, target);
}

double upper_inverse(const PiecewiseLinearDensity& d, const CdfTable& table, double p) {
  const Grid& g = d.grid();
  const double target = p * table.total();
  if (target >= table.total()) return g.hi();
  const auto m = table.cumulative();
  const auto k = static_cast<std::size_t>(std::upper_bound(m.begin(), m.end(), target) -
                                          m.begin()) -
                 1;
  if (m[k] == target) return g[k];
  // Off the table values the level sits strictly inside a piece of positive
  // mass, where F is strictly increasing: both inverses are the same root.
  return solve_in_piece(d, m, k, target);
}

QuantilePreimage quantile_preimage(const PiecewiseLinearDensity& d, double p) {
  return quantile_preimage(d, CdfTable(d), p);
}

QuantilePreimage quantile_preimage(const PiecewiseLinearDensity& d, const CdfTable& table,
                                   double p) {
  check_probability(p);
  return {lower_inverse(d, table, p), upper_inverse(d, table, p), p};
}

double quantile(const PiecewiseLinearDensity& d, double p, QuantileRule rule) {
  const QuantilePreimage q = quantile_preimage(d, p);
  switch (rule) {
    case QuantileRule::Inf: return q.lower;
    case QuantileRule::Sup: return q.upper;
    case QuantileRule::Mid: break;
  }
  return 0.5 * (q.lower + q.upper);
}

MedianSet median_set(const PiecewiseLinearDensity& d) {
  require_normalized(d);
  const CdfTable table(d);
  const QuantilePreimage q = quantile_preimage(d, table, 0.5);
  // F is continuous, so both bounds are attained up to rounding of F itself.
  const auto attained = [&](double v) {
    return std::abs(cdf(d, table, v) - 0.5) <= kNormalizationTolerance;
  };
  return {q.lower, q.upper, attained(q.lower), attained(q.upper)};
}

std::vector<double> sample(const PiecewiseLinearDensity& d,
                           std::span<const double> uniforms) {
  for (std::size_t i = 0; i < uniforms.size(); ++i) {
    const double u = uniforms[i];
    if (!(u >= 0.0 && u < 1.0)) {
      std::ostringstream msg;
      msg << "uniform variate " << u << " at index " << i << " outside [0, 1)";
      throw DensityError(ErrorKind::BadProbability, msg.str());
    }
  }
  return batch::sample(d, uniforms);
}

}  // namespace pldist
