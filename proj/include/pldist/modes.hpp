#pragma once

#include <string_view>
#include <vector>

#include "pldist/density.hpp"

namespace pldist {

/// Which breakpoint quantities compete for the supremum density value.
enum class ModeConvention {
  PointAndLimits,      // f(c_i), L_i, R_i
  PointAndMeanLimits,  // f(c_i), (L_i + R_i) / 2
  LimitsOnly,          // L_i, R_i
  MeanLimitsOnly,      // (L_i + R_i) / 2
};

std::string_view to_string(ModeConvention c) noexcept;

enum class ModeKind {
  Point,           // c_i itself (or a continuous extension attaining f_sup)
  LeftLimit,       // c_i - 0
  RightLimit,      // c_i + 0
  HalfHalfPair,    // c_i - 0 and c_i + 0, each carrying weight 1/2
  OpenInterval,    // (c_i, c_{i+1}) on a plateau at f_sup
  ClosedInterval,  // [c_i, c_j], continuous plateau including its ends
};

struct ModeLocus {
  ModeKind kind;
  double lo;  // position; left end for interval kinds
  double hi;  // equals lo for point-like kinds

  friend bool operator==(const ModeLocus&, const ModeLocus&) = default;
};

struct ModeSet {
  double f_sup;
  ModeConvention convention;
  std::vector<ModeLocus> loci;
};

/// Relative tolerance for "attains f_sup".
inline constexpr double kModeTolerance = 1e-12;

double f_sup(const PiecewiseLinearDensity& d,
             ModeConvention convention = ModeConvention::LimitsOnly);

ModeSet mode_set(const PiecewiseLinearDensity& d,
                 ModeConvention convention = ModeConvention::LimitsOnly);

/// Modes of a polygonal density from its vertex heights. Adjacent maximal
/// vertices merge into one ClosedInterval.
ModeSet mode_set_continuous(const PolygonalDensity& p);

}  // namespace pldist
