#include "pldist/moments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "pldist/error.hpp"

namespace pldist {

namespace {

void require_normalized(const PolygonalDensity& p) {
  const double mass = raw_mass(p);
  if (std::abs(mass - 1.0) > kNormalizationTolerance) {
    throw DensityError(ErrorKind::NotNormalized,
                       "polygonal density is not normalized: raw mass " +
                           std::to_string(mass));
  }
}

// Each piece is rewritten around its midpoint m with half-width w as
// f = A + B u on u in [-w, w]; then
//   int (m - center + u)^k (A + B u) du = sum_j C(k, j) s^{k-j} (A I_j + B I_{j+1})
// with s = m - center and I_j = int_{-w}^{w} u^j du (zero for odd j).
double shifted_moment(const PiecewiseLinearDensity& d, int order, double center) {
  if (order < 0 || order > kMaxMomentOrder) {
    throw DensityError(ErrorKind::OrderTooLarge,
                       "moment order " + std::to_string(order) + " outside [0, " +
                           std::to_string(kMaxMomentOrder) + "]");
  }
  std::array<double, kMaxMomentOrder + 1> binom{};
  binom[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    for (int j = k; j > 0; --j) binom[j] += binom[j - 1];
  }

  const Grid& g = d.grid();
  double total = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    const double len = g.length(i);
    if (len <= 0.0) continue;
    const double w = 0.5 * len;
    const double s = 0.5 * (g[i] + g[i + 1]) - center;
    const double r = d.right_limit(i);
    const double l = d.left_limit(i + 1);
    const double a = 0.5 * (r + l);
    const double b = (l - r) / len;

    // I_j for j = 0 .. order + 1.
    std::array<double, kMaxMomentOrder + 2> even_integral{};
    double wp = w;  // w^{j+1}
    for (int j = 0; j <= order + 1; ++j) {
      even_integral[j] = (j % 2 == 0) ? 2.0 * wp / (j + 1) : 0.0;
      wp *= w;
    }

    double piece = 0.0;
    double sp = 1.0;  // s^{order - j}, built from j = order downward
    for (int j = order; j >= 0; --j) {
      piece += binom[j] * sp * (a * even_integral[j] + b * even_integral[j + 1]);
      sp *= s;
    }
    total += piece;
  }
  return total;
}

}  // namespace

double mean(const PiecewiseLinearDensity& d) {
  require_normalized(d);
  const Grid& g = d.grid();
  double sum = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    const double lo = g[i];
    const double hi = g[i + 1];
    sum += (hi - lo) *
           (d.right_limit(i) * (2.0 * lo + hi) + d.left_limit(i + 1) * (lo + 2.0 * hi));
  }
  return sum / 6.0;
}

double variance(const PiecewiseLinearDensity& d) { return variance(d, mean(d)); }

double variance(const PiecewiseLinearDensity& d, double mu) {
  require_normalized(d);
  const Grid& g = d.grid();
  const double mu2 = 6.0 * mu * mu;
  double sum = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    const double lo = g[i];
    const double hi = g[i + 1];
    const double rterm =
        hi * hi + 2.0 * hi * lo + 3.0 * lo * lo - 4.0 * mu * hi - 8.0 * mu * lo + mu2;
    const double lterm =
        3.0 * hi * hi + 2.0 * hi * lo + lo * lo - 8.0 * mu * hi - 4.0 * mu * lo + mu2;
    sum += (hi - lo) * (d.right_limit(i) * rterm + d.left_limit(i + 1) * lterm);
  }
  return sum / 12.0;
}

double mean_polygonal(const PolygonalDensity& p) {
  require_normalized(p);
  const Grid& g = p.grid();
  double sum = 0.0;
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    sum += p.height(i) * (g[i + 1] - g[i - 1]) * (g[i + 1] + g[i] + g[i - 1]);
  }
  return sum / 6.0;
}

double variance_polygonal(const PolygonalDensity& p) {
  const double mu = mean_polygonal(p);
  const Grid& g = p.grid();
  double sum = 0.0;
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    const double next = g[i + 1];
    const double here = g[i];
    const double prev = g[i - 1];
    const double bracket = next * next + here * here + prev * prev + next * here +
                           next * prev + here * prev - 4.0 * mu * (next + here + prev) +
                           6.0 * mu * mu;
    sum += p.height(i) * (next - prev) * bracket;
  }
  return sum / 12.0;
}

double raw_moment(const PiecewiseLinearDensity& d, int order) {
  return shifted_moment(d, order, 0.0);
}

double central_moment(const PiecewiseLinearDensity& d, int order, double center) {
  return shifted_moment(d, order, center);
}

MomentSummary summary(const PiecewiseLinearDensity& d) {
  MomentSummary s{};
  s.mass = raw_mass(d);
  s.mean = mean(d);
  s.variance = variance(d, s.mean);
  s.std_dev = std::sqrt(std::max(s.variance, 0.0));
  if (s.std_dev > 0.0) {
    const double s2 = s.std_dev * s.std_dev;
    s.skewness = shifted_moment(d, 3, s.mean) / (s2 * s.std_dev);
    s.excess = shifted_moment(d, 4, s.mean) / (s2 * s2) - 3.0;
  } else {
    s.skewness = std::numeric_limits<double>::quiet_NaN();
    s.excess = std::numeric_limits<double>::quiet_NaN();
  }
  return s;
}

}  // namespace pldist
