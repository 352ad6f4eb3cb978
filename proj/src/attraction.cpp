#include "boolmax/attraction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "boolmax/errors.hpp"

namespace boolmax {

namespace {

constexpr double kUnderflowGuard = 1e-300;  // tail values below this count as 0
constexpr double kDispersionTol = 1e-3;
constexpr double kDriftNoiseFloor = 1e-9;
constexpr double kBracketLimit = 1e15;
constexpr double kBisectRelTol = 1e-10;

}  // namespace

EvaluationGrid default_base_scales() {
  return {1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8, 1e9};
}

std::vector<double> default_multipliers() { return {2.0, 4.0, 8.0}; }

RVEstimate rv_index_estimate(const TailFn& tail, const EvaluationGrid& base_scales,
                             const std::vector<double>& multipliers) {
  if (base_scales.empty()) throw std::invalid_argument("rv_index_estimate: no base scales");
  for (double t : base_scales)
    if (!(t > 0.0)) throw std::invalid_argument("rv_index_estimate: base scales must be > 0");
  for (double x : multipliers)
    if (!(x > 1.0)) throw std::invalid_argument("rv_index_estimate: multipliers must be > 1");

  EvaluationGrid scales = base_scales;
  std::sort(scales.begin(), scales.end());

  RVEstimate result;
  std::map<double, std::vector<double>> per_scale;
  for (double t : scales) {
    const double tt = tail(t);
    if (!std::isfinite(tt) || tt <= kUnderflowGuard) {
      result.excluded_probes += 1 + static_cast<int>(multipliers.size());
      continue;
    }
    for (double x : multipliers) {
      const double tx = tail(t * x);
      if (!std::isfinite(tx) || tx <= kUnderflowGuard) {
        ++result.excluded_probes;
        continue;
      }
      const double alpha = -std::log(tx / tt) / std::log(x);
      result.estimates.push_back({t, x, alpha});
      per_scale[t].push_back(alpha);
    }
  }
  if (per_scale.empty())
    throw NumericalFailure("rv_index_estimate: no usable probes (tail vanished everywhere)");

  const auto& last = *per_scale.rbegin();
  double mean = 0.0, lo = last.second.front(), hi = last.second.front();
  for (double a : last.second) {
    mean += a;
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  result.alpha_hat = mean / static_cast<double>(last.second.size());
  result.dispersion = hi - lo;

  // Scale-to-scale drift of the per-scale means, required to be decreasing
  // down to the noise floor.
  std::vector<double> means;
  for (const auto& [t, alphas] : per_scale) {
    double m = 0.0;
    for (double a : alphas) m += a;
    means.push_back(m / static_cast<double>(alphas.size()));
  }
  bool drift_decreasing = true;
  for (std::size_t i = 2; i < means.size(); ++i) {
    const double prev = std::abs(means[i - 1] - means[i - 2]);
    const double cur = std::abs(means[i] - means[i - 1]);
    if (cur > std::max(prev, kDriftNoiseFloor)) drift_decreasing = false;
  }
  result.converged = result.dispersion <= kDispersionTol && drift_decreasing;
  return result;
}

RvEquivalence rv_equivalence_check(const DistFn& g, const EvaluationGrid& base_scales,
                                   const std::vector<double>& multipliers) {
  const DistFn transferred = transfer(g);
  RvEquivalence report{
      rv_index_estimate([&g](double t) { return g.tail(t); }, base_scales, multipliers),
      rv_index_estimate([&transferred](double t) { return transferred.tail(t); }, base_scales,
                        multipliers),
      0.0};
  report.difference = std::abs(report.direct.alpha_hat - report.transferred.alpha_hat);
  return report;
}

NormingSequence norming_sequence(const DistFn& g, const std::vector<long long>& n_values) {
  const DistFn h = transfer(g);
  NormingSequence seq;
  for (long long n : n_values) {
    if (n < 1) throw std::invalid_argument("norming_sequence: n values must be >= 1");
    const double threshold = 1.0 / static_cast<double>(n);
    double lo = 0.0;
    double hi = 1.0;
    while (h.tail(hi) > threshold) {
      hi *= 2.0;
      if (hi > kBracketLimit)
        throw NumericalFailure("norming_sequence: tail quantile bracket exceeded 1e15");
    }
    if (h.tail(lo) <= threshold) {
      // The condition already holds at the bottom of the bracket; the
      // infimum is the bracket itself (n = 1 always lands here).
      hi = lo;
    } else {
      while (hi - lo > kBisectRelTol * hi) {
        const double mid = 0.5 * (lo + hi);
        if (h.tail(mid) <= threshold)
          hi = mid;
        else
          lo = mid;
      }
    }
    seq.entries.push_back({n, hi});
  }
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    if (!(seq.entries[i].a_n > 0.0)) seq.all_positive = false;
    if (i > 0 && seq.entries[i].a_n < seq.entries[i - 1].a_n) seq.nondecreasing = false;
  }
  return seq;
}

DoaReport doa_check(const DistFn& g, const DagumLaw& target,
                    const std::vector<long long>& n_values, const EvaluationGrid& grid) {
  for (double t : grid)
    if (!(t > 0.0)) throw std::invalid_argument("doa_check: grid must be strictly positive");
  for (std::size_t i = 1; i < n_values.size(); ++i)
    if (n_values[i] <= n_values[i - 1])
      throw std::invalid_argument("doa_check: n values must be increasing");

  const NormingSequence norming = norming_sequence(g, n_values);
  const DistFn limit = to_dist_fn(target);
  DoaReport report;
  for (const auto& entry : norming.entries) {
    if (!(entry.a_n > 0.0))
      throw NumericalFailure("doa_check: norming constant is not positive");
    const DistFn candidate = rescale(boolean_max_conv_power(g, entry.n), entry.a_n);
    report.entries.push_back({entry.n, entry.a_n, sup_distance(candidate, limit, grid)});
  }
  // Eventually decreasing: strictly decreasing from some index through the
  // end of the sequence.
  if (report.entries.size() >= 2) {
    std::size_t start = report.entries.size();
    for (std::size_t i = report.entries.size(); i-- > 1;) {
      if (report.entries[i].sup_error < report.entries[i - 1].sup_error)
        start = i - 1;
      else
        break;
    }
    report.eventually_decreasing = start + 1 < report.entries.size();
  }
  return report;
}

}  // namespace boolmax
