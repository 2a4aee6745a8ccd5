#pragma once

#include <span>
#include <vector>

#include "pldist/density.hpp"
#include "pldist/evaluate.hpp"

namespace pldist {

struct MedianSet {
  double v_min;
  double v_max;
  bool min_attained;
  bool max_attained;

  bool single() const noexcept { return v_min == v_max; }
};

/// Endpoints of the total preimage {x : F(x) = p}, clipped to the support.
struct QuantilePreimage {
  double lower;  // infimum inverse
  double upper;  // supremum inverse
  double probability;
};

enum class QuantileRule { Inf, Sup, Mid };

MedianSet median_set(const PiecewiseLinearDensity& d);

/// Throws BadProbability unless 0 <= p <= 1.
QuantilePreimage quantile_preimage(const PiecewiseLinearDensity& d, double p);
QuantilePreimage quantile_preimage(const PiecewiseLinearDensity& d, const CdfTable& table,
                                   double p);

double quantile(const PiecewiseLinearDensity& d, double p,
                QuantileRule rule = QuantileRule::Inf);

/// Infimum inverse of F at p, without argument checks. The building block of
/// quantile_preimage and of the batch sampling kernels.
double lower_inverse(const PiecewiseLinearDensity& d, const CdfTable& table, double p);
/// Supremum inverse of F at p, without argument checks.
double upper_inverse(const PiecewiseLinearDensity& d, const CdfTable& table, double p);

/// Inverse-transform sampling: out[i] = quantile(d, uniforms[i], Inf). Every
/// uniform must lie in [0, 1). Runs the OpenMP kernel.
std::vector<double> sample(const PiecewiseLinearDensity& d,
                           std::span<const double> uniforms);

}  // namespace pldist
