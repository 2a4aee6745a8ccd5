#include "pldist/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pldist/error.hpp"

namespace pldist {

namespace {

double sign(double x) { return static_cast<double>((x > 0.0) - (x < 0.0)); }

[[noreturn]] void bad_order(const std::string& what) {
  throw DensityError(ErrorKind::BadOrder, what);
}

}  // namespace

std::optional<double> TetragonalParams::alpha() const {
  const double w = weight();
  if (w >= 1.0) return std::nullopt;
  return w / (1.0 - w);
}

void check(const TriangularParams& p) {
  if (!(p.a <= p.c && p.c <= p.b && p.a < p.b)) {
    std::ostringstream msg;
    msg << "triangular parameters must satisfy a <= c <= b and a < b (got a = " << p.a
        << ", c = " << p.c << ", b = " << p.b << ")";
    bad_order(msg.str());
  }
}

void check(const TetragonalParams& p) {
  if (!(p.a <= p.c && p.c <= p.d && p.d <= p.b && p.a < p.b)) {
    std::ostringstream msg;
    msg << "tetragonal parameters must satisfy a <= c <= d <= b and a < b (got a = " << p.a
        << ", c = " << p.c << ", d = " << p.d << ", b = " << p.b << ")";
    bad_order(msg.str());
  }
  if (!(p.height_c >= 0.0 && p.height_d >= 0.0)) {
    throw DensityError(ErrorKind::NegativeValue, "tetragonal heights must be nonnegative");
  }
}

PolygonalDensity triangular(double a, double c, double b) {
  return triangular(TriangularParams{a, c, b});
}

PolygonalDensity triangular(const TriangularParams& p) {
  check(p);
  return PolygonalDensity(Grid({p.a, p.c, p.b}), {0.0, p.apex_height(), 0.0});
}

TetragonalParams tetragonal_params(double a, double c, double d, double b, double c_raw,
                                   double d_raw) {
  TetragonalParams p{a, c, d, b, c_raw, d_raw};
  check(p);
  const double denom = c_raw * (d - a) + d_raw * (b - c);
  if (!(denom > 0.0)) {
    throw DensityError(ErrorKind::ZeroMass, "tetragonal heights enclose no area");
  }
  const double k = 2.0 / denom;
  p.height_c = k * c_raw;
  p.height_d = k * d_raw;
  return p;
}

TetragonalParams tetragonal_params_from_weight(double a, double c, double d, double b,
                                               double w) {
  if (!(w >= 0.0 && w <= 1.0)) {
    std::ostringstream msg;
    msg << "weight w = " << w << " outside [0, 1]";
    throw DensityError(ErrorKind::BadProbability, msg.str());
  }
  TetragonalParams p{a, c, d, b, 0.0, 0.0};
  check(p);
  const double denom = w * (d - a) + (1.0 - w) * (b - c);
  if (!(denom > 0.0)) {
    throw DensityError(ErrorKind::ZeroMass, "tetragonal geometry encloses no area");
  }
  p.height_c = 2.0 * w / denom;
  p.height_d = 2.0 * (1.0 - w) / denom;
  return p;
}

PolygonalDensity tetragonal(const TetragonalParams& p) {
  check(p);
  return PolygonalDensity(Grid({p.a, p.c, p.d, p.b}), {0.0, p.height_c, p.height_d, 0.0});
}

PolygonalDensity tetragonal(double a, double c, double d, double b, double c_raw,
                            double d_raw) {
  return tetragonal(tetragonal_params(a, c, d, b, c_raw, d_raw));
}

PolygonalDensity tetragonal_from_weight(double a, double c, double d, double b, double w) {
  return tetragonal(tetragonal_params_from_weight(a, c, d, b, w));
}

TriangularStats triangular_stats(const TriangularParams& p) {
  check(p);
  const auto [a, c, b] = p;
  TriangularStats s{};
  s.mean = (a + b + c) / 3.0;
  s.variance = (a * a + b * b + c * c - a * b - a * c - b * c) / 18.0;
  const double skew = 2.0 * c - a - b;
  s.median = (a + b) / 2.0 +
             (std::sqrt((b - a) * (b - a + std::abs(skew))) + a - b) / 2.0 * sign(skew);
  s.mode = c;
  return s;
}

double tetragonal_median(const TetragonalParams& p) {
  check(p);
  const auto [a, c, d, b, hc, hd] = p;

  const double left_mass2 = hc * (c - a);   // 2 F(c)
  const double right_mass2 = hd * (b - d);  // 2 (1 - F(d))
  if (left_mass2 > 1.0) return a + std::sqrt((c - a) / hc);
  if (left_mass2 == 1.0) return c;
  if (right_mass2 > 1.0) return b - std::sqrt((b - d) / hd);
  if (right_mass2 == 1.0) return d;
  if (!(d > c)) return c;

  if (hc == hd) return 1.0 / (2.0 * hc) + (a + c) / 2.0;

  // (D - C) v^2 + 2(Cd - Dc) v + C(c - a)(d - c) - 2(Cd - Dc)c - (D - C)c^2 + c - d = 0
  const double quad = hd - hc;
  const double lin = 2.0 * (hc * d - hd * c);
  const double con = hc * (c - a) * (d - c) - lin * c - quad * c * c + c - d;
  const double disc = std::max(lin * lin - 4.0 * quad * con, 0.0);
  const double q = -0.5 * (lin + (lin >= 0.0 ? 1.0 : -1.0) * std::sqrt(disc));

  const auto cdf_mid = [&](double v) {
    return hc * (c - a) / 2.0 +
           ((hc * d - hd * c) * (v - c) + quad * (v * v - c * c) / 2.0) / (d - c);
  };
  const auto inside = [&](double v) { return std::isfinite(v) && v >= c && v <= d; };

  const double r1 = q != 0.0 ? q / quad : -lin / (2.0 * quad);
  const double r2 = q != 0.0 ? con / q : r1;
  const bool in1 = inside(r1);
  const bool in2 = inside(r2);
  if (in1 && in2) {
    return std::abs(cdf_mid(r1) - 0.5) <= std::abs(cdf_mid(r2) - 0.5) ? r1 : r2;
  }
  if (in1) return r1;
  if (in2) return r2;
  // Rounding pushed both roots out of [c, d]; keep the nearer one, clamped.
  const auto dist = [&](double v) { return v < c ? c - v : v - d; };
  return std::clamp(dist(r1) <= dist(r2) ? r1 : r2, c, d);
}

std::optional<double> tetragonal_mean_alpha(const TetragonalParams& p) {
  const auto alpha = p.alpha();
  if (!alpha) return std::nullopt;
  const auto [a, c, d, b, hc, hd] = p;
  return (*alpha * (d - a) * (a + c + d) + (b - c) * (b + c + d)) /
         (3.0 * (*alpha * (d - a) + b - c));
}

TetragonalStats tetragonal_stats(const TetragonalParams& p) {
  check(p);
  const auto [a, c, d, b, hc, hd] = p;
  const double mass2 = hc * (d - a) + hd * (b - c);
  if (std::abs(mass2 - 2.0) > 2.0 * kNormalizationTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "tetragonal heights are not normalized: C(d - a) + D(b - c) = " << mass2;
    throw DensityError(ErrorKind::NotNormalized, msg.str());
  }

  TetragonalStats s{};
  s.mean = (hc * (d - a) * (a + c + d) + hd * (b - c) * (b + c + d)) / 6.0;
  const double mu = s.mean;
  s.variance = (hc * (d - a) *
                    (a * a + c * c + d * d + a * c + a * d + c * d - 4.0 * mu * (a + c + d) +
                     6.0 * mu * mu) +
                hd * (b - c) *
                    (b * b + c * c + d * d + b * c + b * d + c * d - 4.0 * mu * (b + c + d) +
                     6.0 * mu * mu)) /
               12.0;
  s.median = tetragonal_median(p);
  if (hc == hd) {
    s.modes = c == d ? std::vector<double>{c} : std::vector<double>{c, d};
  } else {
    s.modes = {hc > hd ? c : d};
  }
  return s;
}

}  // namespace pldist
