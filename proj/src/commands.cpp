#include "boolmax/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>

#include "boolmax/attraction.hpp"
#include "boolmax/dist_fn.hpp"
#include "boolmax/dist_spec.hpp"
#include "boolmax/errors.hpp"
#include "boolmax/grid.hpp"
#include "boolmax/operator_model.hpp"
#include "boolmax/stable_laws.hpp"

namespace boolmax {

namespace {

constexpr std::uint64_t kOracleSeed = 0x626d61783331ull;

const char* command_name(RunConfig::Command c) {
  switch (c) {
    case RunConfig::Command::Convolve: return "convolve";
    case RunConfig::Command::Transfer: return "transfer";
    case RunConfig::Command::Stability: return "stability";
    case RunConfig::Command::Rv: return "rv";
    case RunConfig::Command::Doa: return "doa";
    case RunConfig::Command::Oracle: return "oracle";
  }
  return "?";
}

void validate(const RunConfig& config) {
  if (!(config.grid_min > 0.0)) throw std::invalid_argument("grid min must be > 0");
  if (!(config.grid_max > config.grid_min))
    throw std::invalid_argument("grid max must exceed grid min");
  if (config.grid_points < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(config.tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  const std::size_t want =
      config.command == RunConfig::Command::Oracle ? 0u
      : (config.command == RunConfig::Command::Convolve ||
         config.command == RunConfig::Command::Doa)
          ? 2u
          : 1u;
  if (config.inputs.size() != want)
    throw std::invalid_argument(std::string(command_name(config.command)) + " takes " +
                                std::to_string(want) + " input file(s), got " +
                                std::to_string(config.inputs.size()));
}

std::vector<long long> effective_n_values(const RunConfig& config) {
  if (!config.n_values.empty()) return config.n_values;
  return {10, 100, 1000, 10000};
}

void echo_config(Report& report, const RunConfig& config) {
  report.set_config_echo("grid_min", format_cell(config.grid_min));
  report.set_config_echo("grid_max", format_cell(config.grid_max));
  report.set_config_echo("grid_points", std::to_string(config.grid_points));
  report.set_config_echo("tolerance", format_cell(config.tolerance));
  std::string ns;
  for (long long n : effective_n_values(config)) {
    if (!ns.empty()) ns += ' ';
    ns += std::to_string(n);
  }
  report.set_config_echo("n_values", ns);
  for (std::size_t i = 0; i < config.inputs.size(); ++i)
    report.set_config_echo("input" + std::to_string(i + 1), config.inputs[i]);
}

void fill_convolve(Report& report, const RunConfig& config) {
  const DistSpec f = load_dist_spec(config.inputs[0]);
  const DistSpec g = load_dist_spec(config.inputs[1]);
  const DistFn classical = classical_max_conv(f.fn, g.fn);
  const DistFn boolean = boolean_max_conv(f.fn, g.fn);
  for (double t : geometric_grid(config.grid_min, config.grid_max, config.grid_points))
    report.add_row({t, f.fn(t), g.fn(t), classical(t), boolean(t)});
}

void fill_transfer(Report& report, const RunConfig& config) {
  const DistSpec f = load_dist_spec(config.inputs[0]);
  const DistFn fwd = transfer(f.fn);
  const DistFn inv = transfer_inverse(f.fn);
  for (double t : geometric_grid(config.grid_min, config.grid_max, config.grid_points))
    report.add_row({t, f.fn(t), fwd(t), inv(t)});
}

void fill_stability(Report& report, const RunConfig& config) {
  const DistSpec spec = load_dist_spec(config.inputs[0]);
  if (spec.kind != "dagum")
    throw std::invalid_argument("stability requires a dagum distribution spec");
  const DagumLaw law(spec.lambda, spec.alpha);
  const EvaluationGrid grid =
      geometric_grid(config.grid_min, config.grid_max, config.grid_points);
  double max_defect = 0.0;
  for (long long n : effective_n_values(config)) {
    const double a_n = std::pow(static_cast<double>(n), 1.0 / law.alpha);
    const double defect = stability_check(law, n, grid);
    max_defect = std::max(max_defect, defect);
    report.add_row({n, a_n, defect});
  }
  report.add_summary("max_defect", max_defect);
  report.add_summary("within_tolerance", max_defect <= config.tolerance);
}

void fill_rv(Report& report, const RunConfig& config) {
  const DistSpec spec = load_dist_spec(config.inputs[0]);
  const RvEquivalence eq =
      rv_equivalence_check(spec.fn, default_base_scales(), default_multipliers());
  // Probe layouts can differ if one tail underflows first; report the pairs
  // present on both sides.
  for (const ScaleEstimate& d : eq.direct.estimates) {
    for (const ScaleEstimate& x : eq.transferred.estimates) {
      if (x.base == d.base && x.multiplier == d.multiplier) {
        report.add_row({d.base, d.multiplier, d.alpha, x.alpha});
        break;
      }
    }
  }
  report.add_summary("alpha_hat_direct", eq.direct.alpha_hat);
  report.add_summary("alpha_hat_transfer", eq.transferred.alpha_hat);
  report.add_summary("abs_difference", eq.difference);
  report.add_summary("converged_direct", eq.direct.converged);
  report.add_summary("converged_transfer", eq.transferred.converged);
  report.add_summary("dispersion_direct", eq.direct.dispersion);
  report.add_summary("dispersion_transfer", eq.transferred.dispersion);
  report.add_summary("excluded_probes_direct",
                     static_cast<long long>(eq.direct.excluded_probes));
  report.add_summary("excluded_probes_transfer",
                     static_cast<long long>(eq.transferred.excluded_probes));
}

void fill_doa(Report& report, const RunConfig& config) {
  const DistSpec g = load_dist_spec(config.inputs[0]);
  const DistSpec target = load_dist_spec(config.inputs[1]);
  if (target.kind != "dagum")
    throw std::invalid_argument("doa target must be a dagum distribution spec");
  const DoaReport doa =
      doa_check(g.fn, DagumLaw(target.lambda, target.alpha), effective_n_values(config),
                geometric_grid(config.grid_min, config.grid_max, config.grid_points));
  for (const auto& entry : doa.entries) report.add_row({entry.n, entry.a_n, entry.sup_error});
  report.add_summary("eventually_decreasing", doa.eventually_decreasing);
}

void fill_oracle(Report& report, const RunConfig& config) {
  // Closed-form sweep: the state value of the scale meet of two Boolean
  // independent projections against 1/(1/p + 1/q - 1).
  long long case_id = 0;
  double max_diff = 0.0;
  for (int i = 1; i <= 9; ++i) {
    for (int j = 1; j <= 9; ++j) {
      const double p = i / 10.0;
      const double q = j / 10.0;
      const BooleanEmbedding emb =
          boolean_embed(make_projection_model(p, "P"), make_projection_model(q, "Q"));
      const double model_r = spectral_max_distribution(emb, {0.5}).front().second;
      const double closed_r = 1.0 / (1.0 / p + 1.0 / q - 1.0);
      const double diff = std::abs(model_r - closed_r);
      max_diff = std::max(max_diff, diff);
      report.add_row({std::string("projection_sweep"), case_id++, p, q, 0.5, closed_r, model_r, diff});
    }
  }
  report.add_summary("projection_sweep_max_abs_difference", max_diff);

  // Spectral-max pipeline against the pointwise Boolean max-convolution of
  // the two spectral distribution functions, for random diagonal PSD pairs.
  std::mt19937_64 rng(kOracleSeed);
  std::uniform_int_distribution<int> dim_dist(2, 5);
  std::uniform_real_distribution<double> value_dist(0.0, 3.0);
  std::uniform_real_distribution<double> mass_dist(0.05, 1.0);
  const EvaluationGrid grid =
      geometric_grid(config.grid_min, config.grid_max, config.grid_points);
  double max33 = 0.0;
  for (int k = 0; k < 5; ++k) {
    auto draw = [&](const std::string& name) {
      const int d = dim_dist(rng);
      std::vector<double> values(static_cast<std::size_t>(d));
      std::vector<double> masses(static_cast<std::size_t>(d));
      for (auto& v : values) v = value_dist(rng);
      for (auto& m : masses) m = mass_dist(rng);
      return make_diagonal_model(values, masses, name);
    };
    const OperatorModel ma = draw("X");
    const OperatorModel mb = draw("Y");
    const BooleanEmbedding emb = boolean_embed(ma, mb);
    const DistFn conv =
        boolean_max_conv(DistFn::step(ma.distribution("X")), DistFn::step(mb.distribution("Y")));
    for (const auto& [t, value] : spectral_max_distribution(emb, grid)) {
      const double reference = conv(t);
      const double diff = std::abs(value - reference);
      max33 = std::max(max33, diff);
      report.add_row({std::string("spectral_max"), case_id++, 0.0, 0.0, t, reference, value, diff});
    }
  }
  report.add_summary("spectral_max_max_abs_difference", max33);
}

void write_report(const Report& report, const RunConfig& config) {
  const std::string text =
      config.format == RunConfig::Format::Csv ? report.to_csv() : report.to_json();
  if (config.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + config.output);
  out << text;
}

}  // namespace

Report build_report(const RunConfig& config, int& status) {
  validate(config);
  status = 0;

  std::vector<std::string> columns;
  switch (config.command) {
    case RunConfig::Command::Convolve:
      columns = {"t", "F", "G", "classical_max", "boolean_max"};
      break;
    case RunConfig::Command::Transfer:
      columns = {"t", "F", "transfer", "transfer_inverse"};
      break;
    case RunConfig::Command::Stability:
      columns = {"n", "a_n", "defect"};
      break;
    case RunConfig::Command::Rv:
      columns = {"base_t", "multiplier", "alpha_direct", "alpha_transfer"};
      break;
    case RunConfig::Command::Doa:
      columns = {"n", "a_n", "sup_error"};
      break;
    case RunConfig::Command::Oracle:
      columns = {"section", "case", "p", "q", "t", "reference", "model", "abs_difference"};
      break;
  }
  Report report(command_name(config.command), std::move(columns));
  echo_config(report, config);

  try {
    switch (config.command) {
      case RunConfig::Command::Convolve: fill_convolve(report, config); break;
      case RunConfig::Command::Transfer: fill_transfer(report, config); break;
      case RunConfig::Command::Stability: fill_stability(report, config); break;
      case RunConfig::Command::Rv: fill_rv(report, config); break;
      case RunConfig::Command::Doa: fill_doa(report, config); break;
      case RunConfig::Command::Oracle: fill_oracle(report, config); break;
    }
  } catch (const NumericalFailure& e) {
    // The partial report is still written so the failure can be inspected.
    report.set_diagnostic(e.what());
    std::cerr << "numerical failure: " << e.what() << "\n";
    status = 2;
  }
  return report;
}

int run(const RunConfig& config) {
  int status = 0;
  const Report report = build_report(config, status);
  write_report(report, config);
  return status;
}

}  // namespace boolmax
