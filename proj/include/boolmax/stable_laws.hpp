#ifndef BOOLMAX_STABLE_LAWS_HPP
#define BOOLMAX_STABLE_LAWS_HPP

#include "boolmax/dist_fn.hpp"
#include "boolmax/grid.hpp"

namespace boolmax {

// F(t) = (1 + lambda t^{-alpha})^{-1}: the Boolean max-stable family
// (Dagum, also known as log-logistic).
struct DagumLaw {
  DagumLaw(double lambda_, double alpha_);
  double lambda;
  double alpha;
};

// H(t) = exp(-lambda t^{-alpha}): the classical max-stable family on
// [0, inf), the image of the Dagum family under the transfer map.
struct FrechetLaw {
  FrechetLaw(double lambda_, double alpha_);
  double lambda;
  double alpha;
};

double dagum_eval(const DagumLaw& law, double t);
double frechet_eval(const FrechetLaw& law, double t);

DistFn to_dist_fn(const DagumLaw& law);
DistFn to_dist_fn(const FrechetLaw& law);

// The transfer map sends Dagum(lambda, alpha) to Frechet with the same
// parameters: chi((1 + u)^{-1}) = exp(-u) with u = lambda t^{-alpha}.
FrechetLaw transfer_pair_identity(const DagumLaw& law);

// Max absolute defect over the grid of F^{(boolean n)}(a_n t) against F(t)
// with a_n = n^{1/alpha}, under which the identity is exact up to rounding.
double stability_check(const DagumLaw& law, long long n, const EvaluationGrid& grid);

struct StableFit {
  bool stable = false;
  double lambda = 0.0;
  double alpha = 0.0;
  double max_residual = 0.0;
};

// Tests whether F is Boolean max-stable by fitting the exact linearization
// log(F(t)^{-1} - 1) = log lambda - alpha log t on the grid (least squares)
// and accepting when the max residual is <= tolerance.  Grid points with
// F(t) in {0, 1} are excluded; fewer than 3 usable points is an error.
// Fits with alpha <= 1e-6 are rejected: step plateaus linearize to a
// constant, which is not a member of the family.
StableFit is_boolean_max_stable(const DistFn& f, const EvaluationGrid& grid, double tolerance);

}  // namespace boolmax

#endif  // BOOLMAX_STABLE_LAWS_HPP
