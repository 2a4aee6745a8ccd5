#include "pldist/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pldist/error.hpp"
#include "pldist/evaluate.hpp"

namespace pldist {

PolygonalDensity fit(const FitRequest& request) {
  const auto& x = request.x;
  auto y = request.y;
  if (x.size() != y.size()) {
    throw DensityError(ErrorKind::LengthMismatch, "x and y sample counts differ");
  }
  if (x.size() < 3) {
    throw DensityError(ErrorKind::LengthMismatch, "at least three samples are required");
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) {
      std::ostringstream msg;
      msg << "sample abscissa at index " << i << " does not exceed its predecessor";
      throw DensityError(ErrorKind::NotIncreasing, msg.str());
    }
  }
  if (request.clamp_endpoints) {
    y.front() = 0.0;
    y.back() = 0.0;
  }
  return normalize(PolygonalDensity(Grid(x), std::move(y))).first;
}

PolygonalDensity fit(const TargetDensity& target, double lo, double hi, std::size_t pieces,
                     bool clamp_endpoints) {
  if (pieces < 2) {
    throw DensityError(ErrorKind::LengthMismatch, "at least two pieces are required");
  }
  if (!(lo < hi)) {
    throw DensityError(ErrorKind::NotIncreasing, "fit interval must satisfy lo < hi");
  }
  FitRequest request;
  request.clamp_endpoints = clamp_endpoints;
  const double step = (hi - lo) / static_cast<double>(pieces);
  for (std::size_t k = 0; k <= pieces; ++k) {
    const double xk = k == pieces ? hi : lo + step * static_cast<double>(k);
    request.x.push_back(xk);
    request.y.push_back(target(xk));
  }
  return fit(request);
}

double fit_error(const PolygonalDensity& p, const TargetDensity& target,
                 std::size_t resolution) {
  const Grid& g = p.grid();
  const std::size_t points = std::max(resolution, 10 * g.pieces());
  const PiecewiseLinearDensity d = canonicalize(promote(p));
  const double step = g.width() / static_cast<double>(points);
  double worst = 0.0;
  for (std::size_t k = 0; k <= points; ++k) {
    const double x = k == points ? g.hi() : g.lo() + step * static_cast<double>(k);
    worst = std::max(worst, std::abs(pdf(d, x) - target(x)));
  }
  return worst;
}

}  // namespace pldist
