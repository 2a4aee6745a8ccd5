#include "pldist/modes.hpp"

#include <algorithm>
#include <cmath>

namespace pldist {

namespace {

double limit_mean(const PiecewiseLinearDensity& d, std::size_t i) {
  return 0.5 * (d.left_limit(i) + d.right_limit(i));
}

bool uses_point(ModeConvention c) {
  return c == ModeConvention::PointAndLimits || c == ModeConvention::PointAndMeanLimits;
}

bool uses_limits(ModeConvention c) {
  return c == ModeConvention::PointAndLimits || c == ModeConvention::LimitsOnly;
}

struct Attains {
  double target;
  bool operator()(double v) const {
    return std::abs(v - target) <= kModeTolerance * std::abs(target);
  }
};

}  // namespace

std::string_view to_string(ModeConvention c) noexcept {
  switch (c) {
    case ModeConvention::PointAndLimits: return "point_and_limits";
    case ModeConvention::PointAndMeanLimits: return "point_and_mean_limits";
    case ModeConvention::LimitsOnly: return "limits_only";
    case ModeConvention::MeanLimitsOnly: return "mean_limits_only";
  }
  return "unknown";
}

double f_sup(const PiecewiseLinearDensity& d, ModeConvention convention) {
  const std::size_t count = d.grid().size();
  double best = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    if (uses_point(convention)) best = std::max(best, d.point_value(i));
    if (uses_limits(convention)) {
      best = std::max({best, d.left_limit(i), d.right_limit(i)});
    } else {
      best = std::max(best, limit_mean(d, i));
    }
  }
  return best;
}

ModeSet mode_set(const PiecewiseLinearDensity& d, ModeConvention convention) {
  const Grid& g = d.grid();
  ModeSet out{f_sup(d, convention), convention, {}};
  const Attains attains{out.f_sup};
  auto emit = [&](ModeKind kind, double lo, double hi) {
    out.loci.push_back({kind, lo, hi});
  };

  for (std::size_t i = 0; i < g.size(); ++i) {
    const double c = g[i];
    const bool point = uses_point(convention) && attains(d.point_value(i));
    if (uses_limits(convention)) {
      const bool left = attains(d.left_limit(i));
      const bool right = attains(d.right_limit(i));
      // Both one-sided limits at f_sup: the density reaches f_sup through
      // c_i, which is a plain point mode unless a given point value dips.
      if (left && right && (point || convention == ModeConvention::LimitsOnly)) {
        emit(ModeKind::Point, c, c);
      } else {
        if (point) emit(ModeKind::Point, c, c);
        if (left) emit(ModeKind::LeftLimit, c, c);
        if (right) emit(ModeKind::RightLimit, c, c);
      }
    } else {
      if (point) emit(ModeKind::Point, c, c);
      if (attains(limit_mean(d, i))) emit(ModeKind::HalfHalfPair, c, c);
    }

    if (i + 1 < g.size() && g.length(i) > 0.0 && attains(d.right_limit(i)) &&
        attains(d.left_limit(i + 1))) {
      emit(ModeKind::OpenInterval, c, g[i + 1]);
    }
  }
  return out;
}

ModeSet mode_set_continuous(const PolygonalDensity& p) {
  const Grid& g = p.grid();
  const auto h = p.heights();
  ModeSet out{*std::max_element(h.begin(), h.end()), ModeConvention::LimitsOnly, {}};
  const Attains attains{out.f_sup};

  std::size_t i = 1;
  while (i + 1 < g.size()) {
    if (!attains(h[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 2 < g.size() && attains(h[j + 1])) ++j;
    if (g[j] > g[i]) {
      out.loci.push_back({ModeKind::ClosedInterval, g[i], g[j]});
    } else {
      out.loci.push_back({ModeKind::Point, g[i], g[i]});
    }
    i = j + 1;
  }
  return out;
}

}  // namespace pldist
