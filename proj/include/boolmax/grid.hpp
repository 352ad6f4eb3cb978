#ifndef BOOLMAX_GRID_HPP
#define BOOLMAX_GRID_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace boolmax {

using EvaluationGrid = std::vector<double>;

// Geometric grid with `points` entries from lo to hi inclusive.  The
// endpoints are set exactly so that repeated runs produce identical grids.
inline EvaluationGrid geometric_grid(double lo, double hi, int points) {
  if (!(lo > 0.0)) throw std::invalid_argument("geometric_grid: lo must be > 0");
  if (!(hi > lo)) throw std::invalid_argument("geometric_grid: hi must be > lo");
  if (points < 2) throw std::invalid_argument("geometric_grid: need at least 2 points");
  EvaluationGrid grid(static_cast<std::size_t>(points));
  const double ratio = hi / lo;
  for (int k = 0; k < points; ++k)
    grid[static_cast<std::size_t>(k)] = lo * std::pow(ratio, static_cast<double>(k) / (points - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace boolmax

#endif  // BOOLMAX_GRID_HPP
