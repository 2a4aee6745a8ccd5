#pragma once

// Data-parallel evaluation over many abscissae or uniform variates.
//
// The kernels in pldist::batch split the input across OpenMP threads. The
// functions in pldist::batch::serial are the single-threaded reference the
// tests compare against; both produce bit-identical results because every
// output element is computed independently by the same scalar routine.
//
// Inputs are not range-checked here; the public entry points in evaluate.hpp
// and order_stats.hpp do that before dispatching.

#include <span>
#include <vector>

#include "pldist/density.hpp"

namespace pldist::batch {

std::vector<double> pdf(const PiecewiseLinearDensity& d, std::span<const double> xs);
std::vector<double> cdf(const PiecewiseLinearDensity& d, std::span<const double> xs);
std::vector<double> sample(const PiecewiseLinearDensity& d,
                           std::span<const double> uniforms);

/// Threads the OpenMP kernels would use (1 when built without OpenMP).
int max_threads();

namespace serial {

std::vector<double> pdf(const PiecewiseLinearDensity& d, std::span<const double> xs);
std::vector<double> cdf(const PiecewiseLinearDensity& d, std::span<const double> xs);
std::vector<double> sample(const PiecewiseLinearDensity& d,
                           std::span<const double> uniforms);

}  // namespace serial

}  // namespace pldist::batch
