#include "pldist/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pldist/approximation.hpp"
#include "pldist/batch.hpp"
#include "pldist/error.hpp"
#include "pldist/evaluate.hpp"
#include "pldist/modes.hpp"
#include "pldist/moments.hpp"
#include "pldist/order_stats.hpp"
#include "pldist/spec_file.hpp"

namespace pldist::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  bool autonormalize = false;
  bool exact = false;
  std::string point_rule;
  std::string what = "pdf";
  std::optional<double> from;
  std::optional<double> to;
  std::size_t steps = 100;
  double p = 0.0;
  std::string rule = "mid";
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string convention = "limits_only";
  bool no_clamp = false;
};

const std::map<std::string, ModeConvention> kConventions{
    {"point_and_limits", ModeConvention::PointAndLimits},
    {"point_and_mean_limits", ModeConvention::PointAndMeanLimits},
    {"limits_only", ModeConvention::LimitsOnly},
    {"mean_limits_only", ModeConvention::MeanLimitsOnly},
};

const std::map<std::string, PointRule> kPointRules{
    {"max", PointRule::MaxOfLimits},
    {"mean", PointRule::MeanOfLimits},
    {"given", PointRule::Given},
};

const std::map<std::string, QuantileRule> kQuantileRules{
    {"inf", QuantileRule::Inf},
    {"sup", QuantileRule::Sup},
    {"mid", QuantileRule::Mid},
};

std::string format_number(double v, bool exact = false) {
  if (v == 0.0) return "0";
  std::ostringstream s;
  s.precision(exact ? 17 : 12);
  s << v;
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + opt.output + "'");
  file << text;
}

DistributionSpecFile load_spec(const Options& opt) {
  return parse_spec(read_file(opt.input));
}

PiecewiseLinearDensity apply_point_rule(PiecewiseLinearDensity d, const Options& opt) {
  if (opt.point_rule.empty()) return d;
  return d.with_point_rule(kPointRules.at(opt.point_rule));
}

// Density ready for statistical queries: normalized, or refused.
PiecewiseLinearDensity load_for_query(const Options& opt) {
  PiecewiseLinearDensity d = apply_point_rule(to_density(load_spec(opt)), opt);
  if (d.is_normalized()) return d;
  if (opt.autonormalize) return normalize(d).first;
  const double mass = raw_mass(d);
  std::ostringstream msg;
  msg << "density is not normalized: raw mass " << format_number(mass);
  if (mass > 0.0) msg << ", required factor k = " << format_number(1.0 / mass);
  msg << " (pass --autonormalize to rescale)";
  throw DensityError(ErrorKind::NotNormalized, msg.str());
}

std::string format_locus(const ModeLocus& locus) {
  switch (locus.kind) {
    case ModeKind::Point: return "point " + format_number(locus.lo);
    case ModeKind::LeftLimit: return "left-limit " + format_number(locus.lo);
    case ModeKind::RightLimit: return "right-limit " + format_number(locus.lo);
    case ModeKind::HalfHalfPair: return "half-half " + format_number(locus.lo);
    case ModeKind::OpenInterval:
      return "open-interval (" + format_number(locus.lo) + ", " + format_number(locus.hi) +
             ")";
    case ModeKind::ClosedInterval:
      return "closed-interval [" + format_number(locus.lo) + ", " +
             format_number(locus.hi) + "]";
  }
  return "unknown";
}

void write_modes(std::ostream& s, const ModeSet& modes) {
  s << "f_sup = " << format_number(modes.f_sup) << "\n";
  for (const ModeLocus& locus : modes.loci) s << "mode = " << format_locus(locus) << "\n";
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const DistributionSpecFile spec = load_spec(opt);
  const PiecewiseLinearDensity d = apply_point_rule(to_density(spec), opt);
  const double mass = raw_mass(d);
  std::ostringstream s;
  s << "kind = " << to_string(spec.kind) << "\n";
  s << "breakpoints = " << d.grid().size() << "\n";
  s << "raw_mass = " << format_number(mass) << "\n";
  s << "normalized = " << (d.is_normalized() ? "true" : "false") << "\n";
  if (mass > 0.0) s << "k = " << format_number(1.0 / mass) << "\n";
  emit(opt, s.str(), out);
  return kExitOk;
}

int cmd_normalize(const Options& opt, std::ostream& out) {
  const DistributionSpecFile spec = load_spec(opt);
  std::string doc;
  NormalizationReport report{};
  if (auto poly = to_polygonal(spec)) {
    auto [normalized, r] = normalize(*poly);
    doc = dump_spec(normalized);
    report = r;
  } else {
    auto [normalized, r] = normalize(apply_point_rule(to_density(spec), opt));
    doc = dump_spec(normalized);
    report = r;
  }
  if (opt.output.empty()) {
    out << doc;
  } else {
    emit(opt, doc, out);
    out << "raw_mass = " << format_number(report.raw_mass) << "\n";
    out << "k = " << format_number(report.factor_k) << "\n";
  }
  return kExitOk;
}

int cmd_stats(const Options& opt, std::ostream& out) {
  const PiecewiseLinearDensity d = load_for_query(opt);
  const MomentSummary m = summary(d);
  const MedianSet median = median_set(d);
  std::ostringstream s;
  s << "mass = " << format_number(m.mass) << "\n";
  s << "mean = " << format_number(m.mean) << "\n";
  s << "variance = " << format_number(m.variance) << "\n";
  s << "std_dev = " << format_number(m.std_dev) << "\n";
  s << "skewness = " << format_number(m.skewness) << "\n";
  s << "excess = " << format_number(m.excess) << "\n";
  if (median.single()) {
    s << "median = " << format_number(median.v_min) << "\n";
  } else {
    s << "median = [" << format_number(median.v_min) << ", " << format_number(median.v_max)
      << "]\n";
  }
  write_modes(s, mode_set(d, kConventions.at(opt.convention)));
  emit(opt, s.str(), out);
  return kExitOk;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  const PiecewiseLinearDensity d = load_for_query(opt);
  const double from = opt.from.value_or(d.grid().lo());
  const double to = opt.to.value_or(d.grid().hi());
  if (opt.steps == 0) throw CLI::ValidationError("--steps", "must be at least 1");
  std::vector<double> xs;
  xs.reserve(opt.steps + 1);
  const double step = (to - from) / static_cast<double>(opt.steps);
  for (std::size_t k = 0; k <= opt.steps; ++k) {
    xs.push_back(k == opt.steps ? to : from + step * static_cast<double>(k));
  }
  const std::vector<double> values = opt.what == "cdf" ? batch::cdf(d, xs) : batch::pdf(d, xs);
  std::ostringstream s;
  s << "x,value\n";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    s << format_number(xs[k], opt.exact) << "," << format_number(values[k], opt.exact)
      << "\n";
  }
  emit(opt, s.str(), out);
  return kExitOk;
}

int cmd_quantile(const Options& opt, std::ostream& out) {
  const PiecewiseLinearDensity d = load_for_query(opt);
  const QuantilePreimage q = quantile_preimage(d, opt.p);
  const double value = quantile(d, opt.p, kQuantileRules.at(opt.rule));
  std::ostringstream s;
  s << "p = " << format_number(opt.p) << "\n";
  s << "lower = " << format_number(q.lower) << "\n";
  s << "upper = " << format_number(q.upper) << "\n";
  s << "rule = " << opt.rule << "\n";
  s << "value = " << format_number(value) << "\n";
  emit(opt, s.str(), out);
  return kExitOk;
}

int cmd_median(const Options& opt, std::ostream& out) {
  const MedianSet m = median_set(load_for_query(opt));
  std::ostringstream s;
  s << "median_min = " << format_number(m.v_min) << "\n";
  s << "median_max = " << format_number(m.v_max) << "\n";
  s << "min_attained = " << (m.min_attained ? "true" : "false") << "\n";
  s << "max_attained = " << (m.max_attained ? "true" : "false") << "\n";
  emit(opt, s.str(), out);
  return kExitOk;
}

int cmd_mode(const Options& opt, std::ostream& out) {
  const ModeSet modes = mode_set(load_for_query(opt), kConventions.at(opt.convention));
  std::ostringstream s;
  s << "convention = " << to_string(modes.convention) << "\n";
  write_modes(s, modes);
  emit(opt, s.str(), out);
  return kExitOk;
}

int cmd_sample(const Options& opt, std::ostream& out) {
  const PiecewiseLinearDensity d = load_for_query(opt);
  const std::vector<double> uniforms = seeded_uniforms(opt.seed, opt.count);
  const std::vector<double> values = sample(d, uniforms);
  std::ostringstream s;
  s << "x,value\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    s << format_number(uniforms[k], opt.exact) << "," << format_number(values[k], opt.exact)
      << "\n";
  }
  emit(opt, s.str(), out);
  return kExitOk;
}

// Two numeric columns x,y; blank lines, '#' comments, and a leading
// non-numeric header row are skipped.
FitRequest read_samples(const std::string& text) {
  FitRequest request;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool first_data = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("missing comma");
      std::size_t used_x = 0;
      std::size_t used_y = 0;
      const std::string xs = line.substr(0, comma);
      const std::string ys = line.substr(comma + 1);
      const double x = std::stod(xs, &used_x);
      const double y = std::stod(ys, &used_y);
      if (ys.find_first_not_of(" \t", used_y) != std::string::npos) {
        throw std::invalid_argument("trailing characters");
      }
      request.x.push_back(x);
      request.y.push_back(y);
    } catch (const std::exception&) {
      if (first_data) {
        first_data = false;
        continue;
      }
      throw DensityError(ErrorKind::ParseError,
                         "line " + std::to_string(line_no) + ": expected 'x,y'");
    }
    first_data = false;
  }
  return request;
}

int cmd_fit(const Options& opt, std::ostream& out) {
  FitRequest request = read_samples(read_file(opt.input));
  request.clamp_endpoints = !opt.no_clamp;
  emit(opt, dump_spec(fit(request)), out);
  return kExitOk;
}

}  // namespace

std::vector<double> seeded_uniforms(std::uint64_t seed, std::size_t count) {
  std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                  1442695040888963407ULL, 0>
      engine(seed);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(static_cast<double>(engine() >> 11) * 0x1.0p-53);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Piecewise-linear probability densities: exact moments, medians, modes, "
               "quantiles.",
               "pldist"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", opt.input, what)->required();
    sub->add_option("-o", opt.output, "Write the result to this file");
  };
  auto add_query = [&](CLI::App* sub) {
    add_input(sub, "Distribution document (JSON)");
    sub->add_flag("--autonormalize", opt.autonormalize,
                  "Rescale an unnormalized input instead of refusing it");
    sub->add_option("--point-rule", opt.point_rule, "Value at breakpoints: max, mean, given")
        ->check(CLI::IsMember({"max", "mean", "given"}));
  };
  auto add_convention = [&](CLI::App* sub) {
    sub->add_option("--convention", opt.convention, "Supremum convention for modes")
        ->check(CLI::IsMember({"point_and_limits", "point_and_mean_limits", "limits_only",
                               "mean_limits_only"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a document and report its mass");
  add_input(validate_cmd, "Distribution document (JSON)");
  validate_cmd
      ->add_option("--point-rule", opt.point_rule, "Value at breakpoints: max, mean, given")
      ->check(CLI::IsMember({"max", "mean", "given"}));

  auto* normalize_cmd = app.add_subcommand("normalize", "Rescale to unit mass");
  add_input(normalize_cmd, "Distribution document (JSON)");

  auto* stats_cmd = app.add_subcommand("stats", "Moments, median, and modes");
  add_query(stats_cmd);
  add_convention(stats_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Tabulate pdf or cdf as CSV");
  add_query(eval_cmd);
  eval_cmd->add_option("--what", opt.what, "pdf or cdf")
      ->check(CLI::IsMember({"pdf", "cdf"}));
  eval_cmd->add_option("--from", opt.from, "First abscissa (default: support start)");
  eval_cmd->add_option("--to", opt.to, "Last abscissa (default: support end)");
  eval_cmd->add_option("--steps", opt.steps, "Number of intervals")->capture_default_str();
  eval_cmd->add_flag("--exact", opt.exact, "Print 17 significant digits");

  auto* quantile_cmd = app.add_subcommand("quantile", "Quantile preimage and point value");
  add_query(quantile_cmd);
  quantile_cmd->add_option("-p", opt.p, "Probability in [0, 1]")->required();
  quantile_cmd->add_option("--rule", opt.rule, "inf, sup, or mid")
      ->check(CLI::IsMember({"inf", "sup", "mid"}))
      ->capture_default_str();

  auto* median_cmd = app.add_subcommand("median", "Median set");
  add_query(median_cmd);

  auto* mode_cmd = app.add_subcommand("mode", "Mode set");
  add_query(mode_cmd);
  add_convention(mode_cmd);

  auto* sample_cmd = app.add_subcommand("sample", "Inverse-transform samples as CSV");
  add_query(sample_cmd);
  sample_cmd->add_option("-n", opt.count, "Number of samples")->required();
  sample_cmd->add_option("--seed", opt.seed, "Seed of the uniform stream")->required();
  sample_cmd->add_flag("--exact", opt.exact, "Print 17 significant digits");

  auto* fit_cmd = app.add_subcommand("fit", "Fit a polygonal density to x,y samples");
  add_input(fit_cmd, "CSV file of x,y samples");
  fit_cmd->add_flag("--no-clamp", opt.no_clamp, "Keep the end samples instead of zeroing them");

  std::vector<std::string> argv_storage{"pldist"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(opt, out);
    if (*normalize_cmd) return cmd_normalize(opt, out);
    if (*stats_cmd) return cmd_stats(opt, out);
    if (*eval_cmd) return cmd_eval(opt, out);
    if (*quantile_cmd) return cmd_quantile(opt, out);
    if (*median_cmd) return cmd_median(opt, out);
    if (*mode_cmd) return cmd_mode(opt, out);
    if (*sample_cmd) return cmd_sample(opt, out);
    if (*fit_cmd) return cmd_fit(opt, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DensityError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace pldist::cli
