#ifndef BOOLMAX_COMMANDS_HPP
#define BOOLMAX_COMMANDS_HPP

#include <string>
#include <vector>

#include "boolmax/report.hpp"

namespace boolmax {

// Front-end configuration shared by the CLI and the tests.  Grids are
// geometric; reports are deterministic (fixed column order, 17 significant
// digits, LF endings), so identical configs produce byte-identical output.
struct RunConfig {
  enum class Command { Convolve, Transfer, Stability, Rv, Doa, Oracle };
  enum class Format { Csv, Json };

  Command command = Command::Convolve;
  std::vector<std::string> inputs;  // distribution spec files (0 to 2)
  double grid_min = 0.1;
  double grid_max = 10.0;
  int grid_points = 50;
  std::vector<long long> n_values;  // defaults to {10, 100, 1000, 10000}
  double tolerance = 1e-6;
  Format format = Format::Csv;
  std::string output;  // empty writes to stdout
};

// Executes the command and writes the report.  Returns the process exit
// status: 0 on success, 2 when a numerical procedure failed (the partial
// report is still written, with the diagnostic recorded).  Validation and
// parse problems throw std::invalid_argument and map to exit 1 in the CLI.
int run(const RunConfig& config);

// Command implementation without the output step, for tests that want the
// report object itself.
Report build_report(const RunConfig& config, int& status);

}  // namespace boolmax

#endif  // BOOLMAX_COMMANDS_HPP
