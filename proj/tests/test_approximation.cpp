#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pldist/approximation.hpp"
#include "pldist/density.hpp"
#include "pldist/error.hpp"

using namespace pldist;

TEST_CASE("fit reproduces a polygonal target whose vertices are on the grid") {
  const auto tent = [](double x) { return x < 0.5 ? 4.0 * x : 4.0 * (1.0 - x); };
  const auto p = fit(tent, 0.0, 1.0, 4);
  CHECK(std::abs(raw_mass(p) - 1.0) <= 1e-15);
  CHECK(fit_error(p, tent) <= 1e-14);
}

TEST_CASE("fit clamps ends unless told not to") {
  FitRequest r{{0.0, 1.0, 2.0}, {1.0, 1.0, 1.0}};
  const auto clamped = fit(r);
  CHECK(clamped.height(0) == 0.0);
  CHECK(clamped.height(1) == 1.0);

  r.clamp_endpoints = false;
  CHECK_THROWS_AS(fit(r), DensityError);  // polygonal densities end at zero
}

TEST_CASE("fit input errors") {
  CHECK_THROWS_AS(fit(FitRequest{{0.0, 1.0}, {0.0, 0.0}}), DensityError);
  CHECK_THROWS_AS(fit(FitRequest{{0.0, 1.0, 1.0}, {0.0, 1.0, 0.0}}), DensityError);
  CHECK_THROWS_AS(fit(FitRequest{{0.0, 1.0, 2.0}, {0.0, 1.0}}), DensityError);
  CHECK_THROWS_AS(fit(FitRequest{{0.0, 1.0, 2.0}, {0.0, 0.0, 0.0}}), DensityError);
}

TEST_CASE("fit error shrinks quadratically on a smooth target") {
  const auto bump = [](double x) { return 0.5 * std::sin(x); };  // unit mass on [0, pi]
  double previous = 0.0;
  for (std::size_t pieces : {8u, 16u, 32u, 64u}) {
    const double e = fit_error(fit(bump, 0.0, std::numbers::pi, pieces), bump);
    if (previous > 0.0) {
      const double ratio = previous / e;
      CHECK(ratio > 3.0);
      CHECK(ratio < 5.0);
    }
    previous = e;
  }
}
