#include "pldist/evaluate.hpp"

#include <algorithm>
#include <sstream>

#include "pldist/error.hpp"

namespace pldist {

CdfTable::CdfTable(const PiecewiseLinearDensity& d) {
  const Grid& g = d.grid();
  m_.reserve(g.size());
  m_.push_back(0.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    acc += 0.5 * (d.right_limit(i) + d.left_limit(i + 1)) * g.length(i);
    m_.push_back(acc);
  }
}

std::size_t piece_index(const Grid& g, double x) {
  if (!(x >= g.lo() && x <= g.hi())) {
    std::ostringstream msg;
    msg << "x = " << x << " lies outside the support [" << g.lo() << ", " << g.hi() << "]";
    throw DensityError(ErrorKind::OutOfSupport, msg.str());
  }
  const auto c = g.points();
  const auto it = std::upper_bound(c.begin(), c.end(), x);
  const auto j = static_cast<std::size_t>(it - c.begin()) - 1;
  return std::min(j, g.pieces() - 1);
}

double pdf(const PiecewiseLinearDensity& d, double x) {
  const Grid& g = d.grid();
  if (!(x >= g.lo() && x <= g.hi())) return 0.0;
  const std::size_t j = piece_index(g, x);
  if (x == g[j]) return d.point_value(j);
  if (x == g[j + 1]) return d.point_value(j + 1);
  const double r = d.right_limit(j);
  const double l = d.left_limit(j + 1);
  return r + (l - r) * (x - g[j]) / g.length(j);
}

double cdf(const PiecewiseLinearDensity& d, double x) {
  return cdf(d, CdfTable(d), x);
}

double cdf(const PiecewiseLinearDensity& d, const CdfTable& table, double x) {
  const Grid& g = d.grid();
  if (x <= g.lo()) return 0.0;
  if (x >= g.hi()) return 1.0;
  const std::size_t j = piece_index(g, x);
  return table[j] + partial_piece_mass(d.right_limit(j), d.left_limit(j + 1),
                                       g.length(j), x - g[j]);
}

}  // namespace pldist
