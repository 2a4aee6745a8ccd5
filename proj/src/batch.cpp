#include "pldist/batch.hpp"

#include <cstddef>
#include <cstdint>

#include "pldist/evaluate.hpp"
#include "pldist/order_stats.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pldist::batch {

namespace {

template <class Kernel>
std::vector<double> run_parallel(std::span<const double> in, Kernel&& kernel) {
  std::vector<double> out(in.size());
  const auto n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = kernel(in[static_cast<std::size_t>(i)]);
  }
  return out;
}

template <class Kernel>
std::vector<double> run_serial(std::span<const double> in, Kernel&& kernel) {
  std::vector<double> out;
  out.reserve(in.size());
  for (double v : in) out.push_back(kernel(v));
  return out;
}

}  // namespace

std::vector<double> pdf(const PiecewiseLinearDensity& d, std::span<const double> xs) {
  return run_parallel(xs, [&](double x) { return pldist::pdf(d, x); });
}

std::vector<double> cdf(const PiecewiseLinearDensity& d, std::span<const double> xs) {
  const CdfTable table(d);
  return run_parallel(xs, [&](double x) { return pldist::cdf(d, table, x); });
}

std::vector<double> sample(const PiecewiseLinearDensity& d,
                           std::span<const double> uniforms) {
  const CdfTable table(d);
  return run_parallel(uniforms, [&](double u) { return lower_inverse(d, table, u); });
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

std::vector<double> pdf(const PiecewiseLinearDensity& d, std::span<const double> xs) {
  return run_serial(xs, [&](double x) { return pldist::pdf(d, x); });
}

std::vector<double> cdf(const PiecewiseLinearDensity& d, std::span<const double> xs) {
  const CdfTable table(d);
  return run_serial(xs, [&](double x) { return pldist::cdf(d, table, x); });
}

std::vector<double> sample(const PiecewiseLinearDensity& d,
                           std::span<const double> uniforms) {
  const CdfTable table(d);
  return run_serial(uniforms, [&](double u) { return lower_inverse(d, table, u); });
}

}  // namespace serial

}  // namespace pldist::batch
