#include "boolmax/stable_laws.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "boolmax/errors.hpp"
#include "boolmax/semigroup.hpp"

namespace boolmax {

namespace {
constexpr double kAlphaFloor = 1e-6;
}

DagumLaw::DagumLaw(double lambda_, double alpha_) : lambda(lambda_), alpha(alpha_) {
  if (!(lambda > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("DagumLaw: lambda and alpha must be > 0");
}

FrechetLaw::FrechetLaw(double lambda_, double alpha_) : lambda(lambda_), alpha(alpha_) {
  if (!(lambda > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("FrechetLaw: lambda and alpha must be > 0");
}

double dagum_eval(const DagumLaw& law, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("dagum_eval: t must be >= 0");
  if (t == 0.0) return 0.0;
  return value_of_odds(law.lambda * std::pow(t, -law.alpha));
}

double frechet_eval(const FrechetLaw& law, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("frechet_eval: t must be >= 0");
  if (t == 0.0) return 0.0;
  return std::exp(-law.lambda * std::pow(t, -law.alpha));
}

DistFn to_dist_fn(const DagumLaw& law) { return DistFn::dagum(law.lambda, law.alpha); }
DistFn to_dist_fn(const FrechetLaw& law) { return DistFn::frechet(law.lambda, law.alpha); }

FrechetLaw transfer_pair_identity(const DagumLaw& law) {
  return FrechetLaw(law.lambda, law.alpha);
}

double stability_check(const DagumLaw& law, long long n, const EvaluationGrid& grid) {
  if (n < 1) throw std::invalid_argument("stability_check: n must be >= 1");
  for (double t : grid)
    if (!(t > 0.0)) throw std::invalid_argument("stability_check: grid points must be > 0");
  const DistFn f = to_dist_fn(law);
  const double a_n = std::pow(static_cast<double>(n), 1.0 / law.alpha);
  const DistFn scaled_power = rescale(boolean_max_conv_power(f, n), a_n);
  return sup_distance(scaled_power, f, grid);
}

StableFit is_boolean_max_stable(const DistFn& f, const EvaluationGrid& grid, double tolerance) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("is_boolean_max_stable: tolerance must be > 0");
  std::vector<double> xs, ys;
  for (double t : grid) {
    if (!(t > 0.0)) continue;
    const double u = f.odds(t);
    if (!(u > 0.0) || std::isinf(u)) continue;  // F(t) in {0,1} carries no information
    xs.push_back(std::log(t));
    ys.push_back(std::log(u));
  }
  if (xs.size() < 3)
    throw std::invalid_argument("is_boolean_max_stable: fewer than 3 usable grid points");

  // Least squares for y = b + m x.
  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) throw NumericalFailure("is_boolean_max_stable: degenerate grid");
  const double m = (n * sxy - sx * sy) / det;
  const double b = (sy - m * sx) / n;

  StableFit fit;
  fit.alpha = -m;
  fit.lambda = std::exp(b);
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.max_residual = std::max(fit.max_residual, std::abs(ys[i] - (b + m * xs[i])));
  fit.stable = fit.max_residual <= tolerance && fit.alpha > kAlphaFloor;
  return fit;
}

}  // namespace boolmax
