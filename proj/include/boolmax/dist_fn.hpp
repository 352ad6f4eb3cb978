#ifndef BOOLMAX_DIST_FN_HPP
#define BOOLMAX_DIST_FN_HPP

#include <memory>
#include <utility>
#include <vector>

#include "boolmax/atomic_measure.hpp"
#include "boolmax/grid.hpp"

namespace boolmax {

// A distribution function on [0, inf): nondecreasing, right continuous,
// tending to 1.  Values are immutable expression trees, so closed-form
// identities survive composition without discretization.
//
// Besides the plain value F(t), every node can evaluate its odds
// u(t) = F(t)^{-1} - 1 and tail 1 - F(t) directly.  Boolean convolution is
// addition of odds and the transfer map is exp(-u), so routing those
// channels through the tree keeps n-fold convolutions and far tails at full
// precision where the plain value would have cancelled.
class DistFn {
 public:
  class Node;

  // Closed forms.  Family parameters are validated here; the limit at
  // infinity is analytic for all of them.
  static DistFn dagum(double lambda, double alpha);
  static DistFn frechet(double lambda, double alpha);
  static DistFn pareto(double alpha, double threshold);
  static DistFn point_mass(double location);
  static DistFn bernoulli_projection(double p);
  // Right-continuous step interpolation of (t, F) knots; the final knot
  // must reach 1 within 1e-6.
  static DistFn tabulated(std::vector<std::pair<double, double>> knots);
  // Step function of an atomic measure supported on [0, inf).
  static DistFn step(const AtomicMeasure& mu);

  double value(double t) const;
  double operator()(double t) const { return value(t); }
  // F(t)^{-1} - 1, in [0, +inf].
  double odds(double t) const;
  // 1 - F(t), computed without cancellation where the tree allows it.
  double tail(double t) const;

 private:
  explicit DistFn(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend DistFn classical_max_conv(const DistFn& f, const DistFn& g);
  friend DistFn boolean_max_conv(const DistFn& f, const DistFn& g);
  friend DistFn boolean_max_conv_power(const DistFn& f, long long n);
  friend DistFn rescale(const DistFn& f, double a);
  friend DistFn transfer(const DistFn& f);
  friend DistFn transfer_inverse(const DistFn& h);
};

// (F, G) -> F * G pointwise, the classical max-convolution.
DistFn classical_max_conv(const DistFn& f, const DistFn& g);

// Pointwise Boolean min-convolution of the values.
DistFn boolean_max_conv(const DistFn& f, const DistFn& g);

// n-fold Boolean max-convolution power, n >= 1.
DistFn boolean_max_conv_power(const DistFn& f, long long n);

// t -> F(a t), a > 0.
DistFn rescale(const DistFn& f, double a);

// X(F) = exp(1 - F^{-1}): carries Boolean max-convolution to multiplication.
DistFn transfer(const DistFn& f);

// X^{-1}(H) = (1 - log H)^{-1}.
DistFn transfer_inverse(const DistFn& h);

// max over the grid of |F(t) - G(t)|; the grid must be nonempty.
double sup_distance(const DistFn& f, const DistFn& g, const EvaluationGrid& grid);

}  // namespace boolmax

#endif  // BOOLMAX_DIST_FN_HPP
