#pragma once

// Densities that recur across the unit and acceptance suites.

#include "pldist/density.hpp"
#include "pldist/families.hpp"

namespace fixtures {

inline pldist::PiecewiseLinearDensity uniform01() {
  return pldist::validate({{0.0, 1.0}, {1.0}, {1.0}, std::nullopt});
}

/// Height 0.75 on [0, 1), 0.25 on (1, 2].
inline pldist::PiecewiseLinearDensity step() {
  return pldist::validate({{0.0, 1.0, 2.0}, {0.75, 0.25}, {0.75, 0.25}, std::nullopt});
}

/// Two unit-area triangles of height 1 separated by a zero plateau on [1, 2].
inline pldist::PolygonalDensity two_triangles_polygonal() {
  return pldist::PolygonalDensity(pldist::Grid({0.0, 0.5, 1.0, 2.0, 2.5, 3.0}),
                                  {0.0, 1.0, 0.0, 0.0, 1.0, 0.0});
}

inline pldist::PiecewiseLinearDensity two_triangles() {
  return pldist::canonicalize(pldist::promote(two_triangles_polygonal()));
}

inline pldist::PiecewiseLinearDensity as_density(const pldist::PolygonalDensity& p) {
  return pldist::canonicalize(pldist::promote(p));
}

inline pldist::PiecewiseLinearDensity triangular(double a, double c, double b) {
  return as_density(pldist::triangular(a, c, b));
}

/// Symmetric trapezoid on (0, 1, 2, 3) with C = D = 0.5.
inline pldist::PiecewiseLinearDensity symmetric_tetragonal() {
  return as_density(pldist::tetragonal(0.0, 1.0, 2.0, 3.0, 1.0, 1.0));
}

}  // namespace fixtures
