#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "pldist/density.hpp"

namespace pldist {

/// Samples (x_k, y_k) of a target density. x strictly increasing, y >= 0,
/// at least three points.
struct FitRequest {
  std::vector<double> x;
  std::vector<double> y;
  bool clamp_endpoints = true;  // force H_0 = H_{n+1} = 0
};

using TargetDensity = std::function<double(double)>;

/// Polygonal density through the samples, rescaled to unit mass.
PolygonalDensity fit(const FitRequest& request);

/// Samples target at pieces + 1 equispaced points on [lo, hi] and fits them.
PolygonalDensity fit(const TargetDensity& target, double lo, double hi, std::size_t pieces,
                     bool clamp_endpoints = true);

/// Sup-norm of pdf - target over an equispaced grid of at least
/// max(resolution, 10 * pieces) + 1 points spanning the support.
double fit_error(const PolygonalDensity& p, const TargetDensity& target,
                 std::size_t resolution = 0);

}  // namespace pldist
