// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pldist/cli.hpp"
#include "pldist/evaluate.hpp"
#include "pldist/families.hpp"
#include "pldist/modes.hpp"
#include "pldist/moments.hpp"
#include "pldist/order_stats.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace pldist;

namespace {

// Collects the worst offence of a criterion so the report can show it.
struct Tally {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void within(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol)) {
      std::ostringstream s;
      s.precision(17);
      s << what << ": got " << got << ", want " << want << " (tol " << tol << ")";
      require(false, s.str());
    }
  }
};

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::pair<double, double> sorted_pair(oracle::Rng& rng) {
  const double x = oracle::uniform(rng, -10.0, 10.0);
  const double y = oracle::uniform(rng, -10.0, 10.0);
  return {std::min(x, y), std::max(x, y)};
}

Tally triangular_suite() {
  Tally t;
  oracle::Rng rng(1001);
  int done = 0;
  while (done < 1000) {
    double x[3] = {oracle::uniform(rng, -10, 10), oracle::uniform(rng, -10, 10),
                   oracle::uniform(rng, -10, 10)};
    std::sort(x, x + 3);
    const double a = x[0], c = x[1], b = x[2];
    if (!(a < b)) continue;
    ++done;
    const auto d = fixtures::triangular(a, c, b);
    const double want_mean = (a + b + c) / 3.0;
    const double want_var = ((c - a) * (c - a) + (b - c) * (b - c) + (b - a) * (b - a)) / 36.0;
    // Three-case median.
    double want_median;
    const double m = (a + b) / 2.0;
    if (c > m) {
      want_median = a + std::sqrt((b - a) * (c - a) / 2.0);
    } else if (c < m) {
      want_median = b - std::sqrt((b - a) * (b - c) / 2.0);
    } else {
      want_median = c;
    }
    t.within(mean(d), want_mean, 1e-9, "mean");
    t.within(variance(d), want_var, 1e-9, "variance");
    const MedianSet med = median_set(d);
    t.within(med.v_min, want_median, 1e-9, "median");
    t.within(med.v_max, want_median, 1e-9, "median (upper)");
    const ModeSet modes = mode_set(d);
    t.require(modes.loci.size() == 1, "expected a single mode locus");
    if (!modes.loci.empty()) t.within(modes.loci[0].lo, c, 1e-9, "mode");
    // The closed-form module must agree with the same oracle.
    const auto s = triangular_stats({a, c, b});
    t.within(s.mean, want_mean, 1e-9, "triangular_stats mean");
    t.within(s.variance, want_var, 1e-9, "triangular_stats variance");
    t.within(s.median, want_median, 1e-9, "triangular_stats median");
  }
  return t;
}

Tally tetragonal_suite() {
  Tally t;
  oracle::Rng rng(1002);
  int done = 0;
  while (done < 1000) {
    double x[4];
    for (double& v : x) v = oracle::uniform(rng, -10, 10);
    std::sort(x, x + 4);
    const double a = x[0], c = x[1], dd = x[2], b = x[3];
    if (!(a < b)) continue;
    // Every fourth case is a trapezoid so the C = D branch is exercised.
    const double c_raw = oracle::uniform(rng, 0.01, 3.0);
    const double d_raw = done % 4 == 0 ? c_raw : oracle::uniform(rng, 0.01, 3.0);
    ++done;
    const TetragonalParams p = tetragonal_params(a, c, dd, b, c_raw, d_raw);
    const double C = p.height_c, D = p.height_d;
    const auto dens = fixtures::as_density(tetragonal(p));
    const auto s = tetragonal_stats(p);

    const double want_mean = (C * (dd - a) * (a + c + dd) + D * (b - c) * (b + c + dd)) / 6.0;
    t.within(mean(dens), want_mean, 1e-9, "mean vs formula");
    t.within(s.mean, mean(dens), 1e-9, "tetragonal_stats mean");
    const double w = C / (C + D);
    if (w < 1.0) {
      const double alpha = w / (1.0 - w);
      const double alpha_mean = (alpha * (dd - a) * (a + c + dd) + (b - c) * (b + c + dd)) /
                                (3.0 * (alpha * (dd - a) + b - c));
      t.within(mean(dens), alpha_mean, 1e-9, "mean vs alpha form");
      const auto lib_alpha = tetragonal_mean_alpha(p);
      t.require(lib_alpha.has_value(), "alpha mean missing for w < 1");
      if (lib_alpha) t.within(*lib_alpha, alpha_mean, 1e-9, "tetragonal_mean_alpha");
    }
    t.within(s.variance, variance(dens), 1e-9, "variance");
    t.within(cdf(dens, s.median), 0.5, 1e-9, "median F(v)");

    // Mode trichotomy against the general mode set.
    const ModeSet modes = mode_set(dens);
    std::vector<double> points;
    bool plateau = false;
    for (const auto& l : modes.loci) {
      if (l.kind == ModeKind::Point) points.push_back(l.lo);
      if (l.kind == ModeKind::OpenInterval) plateau = true;
    }
    t.require(points == s.modes, "mode points differ from the trichotomy");
    t.require(plateau == (C == D && dd > c), "plateau presence differs from C = D");
  }
  return t;
}

Tally normalization_suite() {
  Tally t;
  oracle::Rng rng(1003);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = oracle::random_density(rng, {.max_inner = 8, .normalized = false});
    const auto& g = d.grid();
    double raw_sum = 0.0;
    for (std::size_t i = 0; i < g.pieces(); ++i) {
      raw_sum += (d.right_limit(i) + d.left_limit(i + 1)) * (g[i + 1] - g[i]);
    }
    const auto [n, report] = normalize(d);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.pieces(); ++i) {
      sum += (n.right_limit(i) + n.left_limit(i + 1)) * (g[i + 1] - g[i]);
    }
    t.within(sum, 2.0, 1e-9, "normalized trapezoid sum");
    t.require(rel_err(report.factor_k, 2.0 / raw_sum) <= 1e-12, "factor != 1/raw_mass");
  }
  return t;
}

Tally quadrature_suite() {
  Tally t;
  oracle::Rng rng(1004);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = oracle::random_density(rng);
    const auto& g = d.grid();
    const auto cuts = g.points();
    const auto f = [&](double x) { return pdf(d, x); };
    const double q_mass = oracle::integrate_split(f, cuts, g.lo(), g.hi());
    const double q_mean =
        oracle::integrate_split([&](double x) { return x * f(x); }, cuts, g.lo(), g.hi());
    const double q_var = oracle::integrate_split(
        [&](double x) { return (x - q_mean) * (x - q_mean) * f(x); }, cuts, g.lo(), g.hi());
    t.within(raw_mass(d), q_mass, 1e-9, "mass");
    t.within(mean(d), q_mean, 1e-9, "mean");
    t.within(variance(d), q_var, 1e-9, "variance");
    for (int k = 0; k < 20; ++k) {
      const double x = oracle::uniform(rng, g.lo(), g.hi());
      t.within(cdf(d, x), oracle::integrate_split(f, cuts, g.lo(), x), 1e-9, "cdf");
    }
  }
  return t;
}

Tally quantile_suite() {
  Tally t;
  oracle::Rng rng(1005);
  const double ps[] = {0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = oracle::random_density(rng, {.strictly_positive = true});
    for (double p : ps) t.within(cdf(d, quantile(d, p, QuantileRule::Inf)), p, 1e-10, "F(Q(p))");
  }
  const auto q = quantile_preimage(fixtures::two_triangles(), 0.5);
  t.within(q.lower, 1.0, 1e-12, "preimage lower");
  t.within(q.upper, 2.0, 1e-12, "preimage upper");
  return t;
}

Tally median_flat_suite() {
  Tally t;
  const auto d = fixtures::two_triangles();
  const MedianSet m = median_set(d);
  t.within(m.v_min, 1.0, 1e-12, "median min");
  t.within(m.v_max, 2.0, 1e-12, "median max");
  t.require(m.min_attained && m.max_attained, "endpoints not attained");
  const double gap = oracle::integrate([&](double x) { return pdf(d, x); }, 1.0, 2.0);
  t.require(gap < 1e-12, "pdf integrates to " + std::to_string(gap) + " over (1, 2)");
  return t;
}

Tally reduction_suite() {
  Tally t;
  oracle::Rng rng(1007);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = normalize(oracle::random_polygonal(rng)).first;
    const auto d = promote(p);
    t.require(rel_err(mean_polygonal(p), mean(d)) <= 1e-12, "mean reduction");
    t.require(rel_err(variance_polygonal(p), variance(d)) <= 1e-12, "variance reduction");
  }
  return t;
}

Tally sampling_suite() {
  Tally t;
  const auto d = fixtures::triangular(0.0, 0.3, 1.0);
  const auto u = cli::seeded_uniforms(20240601, 100000);
  const auto xs = sample(d, u);
  // Closed-form triangular cdf, independent of the piecewise machinery.
  const auto F = [](double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x <= 0.3 ? x * x / 0.3 : 1.0 - (1.0 - x) * (1.0 - x) / 0.7;
  };
  const double ks = oracle::ks_statistic(xs, F);
  const double crit = oracle::ks_critical(0.01, xs.size());
  t.require(ks < crit, "KS " + std::to_string(ks) + " >= " + std::to_string(crit));
  double sum = 0.0;
  for (double x : xs) sum += x;
  t.within(sum / static_cast<double>(xs.size()), 13.0 / 30.0, 0.01, "sample mean");
  return t;
}

// Symmetric about the midpoint of a random support.
PiecewiseLinearDensity random_symmetric(oracle::Rng& rng) {
  const auto [lo, hi] = sorted_pair(rng);
  const double mid = 0.5 * (lo + hi + 1.0);
  const double top = mid + (hi - lo + 1.0) / 2.0;
  const std::size_t half = oracle::uniform_index(rng, 1, 4);
  auto right_half = oracle::random_breakpoints(rng, half - 1, mid, top);
  std::vector<double> c;
  for (auto it = right_half.rbegin(); it != right_half.rend(); ++it) c.push_back(2 * mid - *it);
  c.insert(c.end(), right_half.begin() + 1, right_half.end());
  std::vector<double> hr(half), hl(half);  // heights on the right half, piece by piece
  for (std::size_t i = 0; i < half; ++i) {
    hr[i] = oracle::uniform(rng, 0.1, 2.0);
    hl[i] = oracle::uniform(rng, 0.1, 2.0);
  }
  std::vector<double> r, l;
  // Left half mirrors the right: piece j from the left is piece (half-1-j) on the right.
  for (std::size_t j = 0; j < half; ++j) {
    r.push_back(hl[half - 1 - j]);
    l.push_back(hr[half - 1 - j]);
  }
  for (std::size_t j = 0; j < half; ++j) {
    r.push_back(hr[j]);
    l.push_back(hl[j]);
  }
  return normalize(PiecewiseLinearDensity(Grid(c), r, l)).first;
}

Tally shape_suite() {
  Tally t;
  const auto quad_standardized = [](const PiecewiseLinearDensity& d, int k) {
    const auto& g = d.grid();
    const auto f = [&](double x) { return pdf(d, x); };
    const double mu =
        oracle::integrate_split([&](double x) { return x * f(x); }, g.points(), g.lo(), g.hi());
    const auto central = [&](int order) {
      return oracle::integrate_split(
          [&](double x) { return std::pow(x - mu, order) * f(x); }, g.points(), g.lo(), g.hi());
    };
    const double var = central(2);
    return central(k) / std::pow(var, k / 2.0);
  };

  const auto u = summary(fixtures::uniform01());
  t.within(u.excess, -1.2, 1e-9, "uniform excess");
  t.within(quad_standardized(fixtures::uniform01(), 4) - 3.0, -1.2, 1e-9, "uniform excess (quadrature)");

  std::vector<PiecewiseLinearDensity> symmetric{fixtures::triangular(0.0, 0.5, 1.0),
                                                fixtures::symmetric_tetragonal(),
                                                fixtures::two_triangles()};
  oracle::Rng rng(1009);
  for (int k = 0; k < 100; ++k) symmetric.push_back(random_symmetric(rng));
  for (const auto& d : symmetric) {
    const auto s = summary(d);
    t.within(s.skewness, 0.0, 1e-9, "symmetric skewness");
    t.within(quad_standardized(d, 3), 0.0, 1e-9, "symmetric skewness (quadrature)");
    t.within(s.excess, quad_standardized(d, 4) - 3.0, 1e-9, "excess vs quadrature");
  }
  return t;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Tally golden_suite() {
  Tally t;
  const std::filesystem::path dir = PLDIST_GOLDEN_DIR;
  for (const char* name : {"tri_0_05_1", "tri_0_03_1", "tet_0_1_2_3", "step"}) {
    const auto input = (dir / (std::string(name) + ".json")).string();
    for (const char* command : {"stats", "median", "mode"}) {
      const auto golden = dir / (std::string(name) + "." + command + ".txt");
      t.require(std::filesystem::exists(golden), "missing " + golden.string());
      std::ostringstream out, err;
      const int code = cli::run({command, input}, out, err);
      t.require(code == 0, std::string(command) + " " + name + " exited " + std::to_string(code) +
                               ": " + err.str());
      t.require(out.str() == slurp(golden), std::string(command) + " " + name + " differs from golden");
    }
  }
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Tally()> run;
  };
  const Criterion criteria[] = {
      {"triangular closed forms", triangular_suite},
      {"tetragonal closed forms", tetragonal_suite},
      {"normalization", normalization_suite},
      {"quadrature oracle equivalence", quadrature_suite},
      {"quantile round trip", quantile_suite},
      {"median set on a flat cdf", median_flat_suite},
      {"continuous reduction identities", reduction_suite},
      {"inverse-transform sampling", sampling_suite},
      {"skewness and excess", shape_suite},
      {"cli golden files", golden_suite},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.require(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %2d %s%s%s\n", t.ok ? "PASS" : "FAIL", index, c.name,
                t.ok ? "" : " -- ", t.detail.c_str());
    if (!t.ok) ++failures;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
