#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boolmax/commands.hpp"
#include "boolmax/errors.hpp"
#include "boolmax/version.hpp"

namespace {

void add_common_options(CLI::App* cmd, boolmax::RunConfig& config, std::string& format) {
  cmd->add_option("--grid-min", config.grid_min, "Geometric grid lower end (default 0.1)");
  cmd->add_option("--grid-max", config.grid_max, "Geometric grid upper end (default 10)");
  cmd->add_option("--grid-points", config.grid_points, "Number of grid points (default 50)");
  cmd->add_option("--n", config.n_values,
                  "Convolution power (repeatable; default 10 100 1000 10000)");
  cmd->add_option("--tolerance", config.tolerance, "Acceptance tolerance (default 1e-6)");
  cmd->add_option("--format", format, "Report format: csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", config.output, "Report file path (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean max-convolution toolkit: convolutions, transfer maps, "
               "Dagum stability, regular variation and operator-model sweeps"};
  app.set_version_flag("--version", boolmax::kVersion);
  app.require_subcommand(1);

  boolmax::RunConfig config;
  std::string format = "csv";

  auto* convolve = app.add_subcommand(
      "convolve", "Tabulate F, G and their classical and Boolean max-convolutions");
  convolve->add_option("inputs", config.inputs, "Two distribution spec files")
      ->expected(2)
      ->required();
  add_common_options(convolve, config, format);

  auto* transfer = app.add_subcommand(
      "transfer", "Tabulate F with its transfer and inverse transfer");
  transfer->add_option("inputs", config.inputs, "Distribution spec file")->expected(1)->required();
  add_common_options(transfer, config, format);

  auto* stability = app.add_subcommand(
      "stability", "Per-n defect of the exact Dagum max-stability identity");
  stability->add_option("inputs", config.inputs, "Dagum distribution spec file")
      ->expected(1)
      ->required();
  add_common_options(stability, config, format);

  auto* rv = app.add_subcommand(
      "rv", "Regular-variation index estimates for a tail and its transfer");
  rv->add_option("inputs", config.inputs, "Distribution spec file")->expected(1)->required();
  add_common_options(rv, config, format);

  auto* doa = app.add_subcommand(
      "doa", "Domain-of-attraction convergence toward a Dagum target");
  doa->add_option("inputs", config.inputs, "Distribution spec file and Dagum target spec file")
      ->expected(2)
      ->required();
  add_common_options(doa, config, format);

  auto* oracle = app.add_subcommand(
      "oracle", "Operator-model sweeps against the closed forms");
  add_common_options(oracle, config, format);

  CLI11_PARSE(app, argc, argv);

  if (convolve->parsed()) config.command = boolmax::RunConfig::Command::Convolve;
  if (transfer->parsed()) config.command = boolmax::RunConfig::Command::Transfer;
  if (stability->parsed()) config.command = boolmax::RunConfig::Command::Stability;
  if (rv->parsed()) config.command = boolmax::RunConfig::Command::Rv;
  if (doa->parsed()) config.command = boolmax::RunConfig::Command::Doa;
  if (oracle->parsed()) config.command = boolmax::RunConfig::Command::Oracle;
  config.format = format == "json" ? boolmax::RunConfig::Format::Json
                                   : boolmax::RunConfig::Format::Csv;

  try {
    return boolmax::run(config);
  } catch (const boolmax::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
