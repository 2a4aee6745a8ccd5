#pragma once

// Triangular and tetragonal (generalized trapezoidal) densities, with their
// closed-form statistics. The closed forms are kept independent of the
// general piecewise-linear pipeline so each can check the other.

#include <optional>
#include <vector>

#include "pldist/density.hpp"

namespace pldist {

struct TriangularParams {
  double a;  // support start
  double c;  // apex
  double b;  // support end

  /// Apex height 2 / (b - a).
  double apex_height() const { return 2.0 / (b - a); }
};

/// Polygonal density on a <= c <= d <= b with vertex heights C at c and D at d.
struct TetragonalParams {
  double a;
  double c;
  double d;
  double b;
  double height_c;
  double height_d;

  /// w = C / (C + D).
  double weight() const { return height_c / (height_c + height_d); }
  /// alpha = w / (1 - w); empty when w = 1.
  std::optional<double> alpha() const;
};

struct TriangularStats {
  double mean;
  double variance;
  double median;
  double mode;
};

struct TetragonalStats {
  double mean;
  double variance;
  double median;
  std::vector<double> modes;  // {c, d} when C = D, else the taller vertex
};

/// Throws BadOrder unless a <= c <= b and a < b.
void check(const TriangularParams& p);
/// Throws BadOrder unless a <= c <= d <= b, a < b, and both heights >= 0.
void check(const TetragonalParams& p);

PolygonalDensity triangular(double a, double c, double b);
PolygonalDensity triangular(const TriangularParams& p);

/// Rescales C', D' by k = 2 / [C'(d - a) + D'(b - c)].
TetragonalParams tetragonal_params(double a, double c, double d, double b,
                                   double c_raw, double d_raw);
/// C = 2w / [w(d - a) + (1 - w)(b - c)], D = 2(1 - w) / [same].
TetragonalParams tetragonal_params_from_weight(double a, double c, double d, double b,
                                               double w);

PolygonalDensity tetragonal(const TetragonalParams& p);
PolygonalDensity tetragonal(double a, double c, double d, double b, double c_raw,
                            double d_raw);
PolygonalDensity tetragonal_from_weight(double a, double c, double d, double b, double w);

TriangularStats triangular_stats(const TriangularParams& p);

/// Median by explicit case analysis on F(c) = C(c - a)/2 and F(d) = 1 - D(b - d)/2.
double tetragonal_median(const TetragonalParams& p);
/// Mean in the alpha parameterization; empty when w = 1.
std::optional<double> tetragonal_mean_alpha(const TetragonalParams& p);
TetragonalStats tetragonal_stats(const TetragonalParams& p);

}  // namespace pldist
