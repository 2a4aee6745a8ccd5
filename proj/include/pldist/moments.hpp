#pragma once

#include "pldist/density.hpp"

namespace pldist {

/// Highest moment order accepted by raw_moment / central_moment.
inline constexpr int kMaxMomentOrder = 12;

struct MomentSummary {
  double mass;
  double mean;
  double variance;
  double std_dev;
  double skewness;  // NaN when std_dev == 0
  double excess;    // NaN when std_dev == 0
};

/// sum (c_{i+1} - c_i)[R_i(2c_i + c_{i+1}) + L_{i+1}(c_i + 2c_{i+1})] / 6.
double mean(const PiecewiseLinearDensity& d);

/// sum (c_{i+1} - c_i)[R_i(c_{i+1}^2 + 2c_{i+1}c_i + 3c_i^2 - 4mu c_{i+1} - 8mu c_i + 6mu^2)
///   + L_{i+1}(3c_{i+1}^2 + 2c_{i+1}c_i + c_i^2 - 8mu c_{i+1} - 4mu c_i + 6mu^2)] / 12.
double variance(const PiecewiseLinearDensity& d);
double variance(const PiecewiseLinearDensity& d, double mu);

/// Vertex-indexed forms for the continuous case; algebraically equal to the
/// general sums applied to promote(p).
double mean_polygonal(const PolygonalDensity& p);
double variance_polygonal(const PolygonalDensity& p);

/// Exact integral of x^m f(x). Throws OrderTooLarge above kMaxMomentOrder.
double raw_moment(const PiecewiseLinearDensity& d, int order);
/// Exact integral of (x - center)^m f(x).
double central_moment(const PiecewiseLinearDensity& d, int order, double center);

MomentSummary summary(const PiecewiseLinearDensity& d);

}  // namespace pldist
