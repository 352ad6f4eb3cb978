#ifndef BOOLMAX_ATTRACTION_HPP
#define BOOLMAX_ATTRACTION_HPP

#include <functional>
#include <vector>

#include "boolmax/dist_fn.hpp"
#include "boolmax/grid.hpp"
#include "boolmax/stable_laws.hpp"

namespace boolmax {

// A tail function t -> 1 - G(t), probed at large multiplicative scales.
using TailFn = std::function<double(double)>;

struct ScaleEstimate {
  double base;        // probe point t
  double multiplier;  // x > 1
  double alpha;       // -log(T(tx)/T(t)) / log(x)
};

struct RVEstimate {
  double alpha_hat = 0.0;  // mean estimate at the largest usable scale
  std::vector<ScaleEstimate> estimates;
  bool converged = false;
  double dispersion = 0.0;      // max spread at the largest usable scale
  int excluded_probes = 0;      // probes dropped for zero or non-finite tails
};

// Default probe layout: decades 1e2..1e9 with multipliers {2,4,8}.
EvaluationGrid default_base_scales();
std::vector<double> default_multipliers();

// Regular-variation index estimation for the tail: alpha(t,x) =
// -log(T(tx)/T(t))/log(x).  Probes with zero or non-finite tail values are
// excluded; if nothing is usable the estimation fails (NumericalFailure).
// Converged means the estimates at the largest usable scale agree within
// 1e-3 and the scale-to-scale drift of the per-scale means is decreasing
// (drifts below 1e-9 count as noise-floor zero).
RVEstimate rv_index_estimate(const TailFn& tail, const EvaluationGrid& base_scales,
                             const std::vector<double>& multipliers);

struct RvEquivalence {
  RVEstimate direct;       // tail of G itself
  RVEstimate transferred;  // tail of X(G)
  double difference = 0.0; // |alpha_hat difference|
};

// Runs the index estimate on 1-G and on 1-X(G); regular variation of one is
// equivalent to regular variation of the other with the same index.
RvEquivalence rv_equivalence_check(const DistFn& g, const EvaluationGrid& base_scales,
                                   const std::vector<double>& multipliers);

struct NormingSequence {
  struct Entry {
    long long n = 0;
    double a_n = 0.0;
  };
  std::vector<Entry> entries;
  // Checked rather than enforced: reported false when violated.
  bool nondecreasing = true;
  bool all_positive = true;
};

// a_n = inf{ t >= 0 : 1 - X(G)(t) <= 1/n }, by bisection to relative
// precision 1e-10 after doubling the upper bracket until the condition
// holds.  Brackets past t = 1e15 are a failure (NumericalFailure).
NormingSequence norming_sequence(const DistFn& g, const std::vector<long long>& n_values);

struct DoaReport {
  struct Entry {
    long long n = 0;
    double a_n = 0.0;
    double sup_error = 0.0;
  };
  std::vector<Entry> entries;
  // Strictly decreasing sup errors from some index through the end.
  bool eventually_decreasing = false;
};

// Convergence check for the domain of attraction: for each n, the sup
// distance over the grid between the rescaled n-fold Boolean power of G and
// the target Dagum law.
DoaReport doa_check(const DistFn& g, const DagumLaw& target,
                    const std::vector<long long>& n_values, const EvaluationGrid& grid);

}  // namespace boolmax

#endif  // BOOLMAX_ATTRACTION_HPP
