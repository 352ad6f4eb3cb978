#include "boolmax/dist_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "boolmax/semigroup.hpp"

namespace boolmax {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
// Large-t probe for representations whose limit at infinity is not analytic.
constexpr double kLimitProbe = 1e12;
constexpr double kLimitSlack = 1e-6;
}  // namespace

// Node contract: value(t) in [0,1], nondecreasing and right continuous in t;
// odds(t) = value^{-1} - 1; tail(t) = 1 - value.  Callers have already
// validated t >= 0.
class DistFn::Node {
 public:
  virtual ~Node() = default;
  virtual double value(double t) const = 0;
  virtual double odds(double t) const { return odds_of_value(value(t)); }
  virtual double tail(double t) const {
    const double u = odds(t);
    if (std::isinf(u)) return 1.0;
    return u / (1.0 + u);
  }
};

namespace {

using NodePtr = std::shared_ptr<const DistFn::Node>;

class DagumNode final : public DistFn::Node {
 public:
  DagumNode(double lambda, double alpha) : lambda_(lambda), alpha_(alpha) {}
  double value(double t) const override { return value_of_odds(odds(t)); }
  double odds(double t) const override {
    if (t == 0.0) return kInf;
    return lambda_ * std::pow(t, -alpha_);
  }

 private:
  double lambda_, alpha_;
};

class FrechetNode final : public DistFn::Node {
 public:
  FrechetNode(double lambda, double alpha) : lambda_(lambda), alpha_(alpha) {}
  double value(double t) const override {
    if (t == 0.0) return 0.0;
    return std::exp(-lambda_ * std::pow(t, -alpha_));
  }
  double odds(double t) const override {
    if (t == 0.0) return kInf;
    return std::expm1(lambda_ * std::pow(t, -alpha_));
  }
  double tail(double t) const override {
    if (t == 0.0) return 1.0;
    return -std::expm1(-lambda_ * std::pow(t, -alpha_));
  }

 private:
  double lambda_, alpha_;
};

class ParetoNode final : public DistFn::Node {
 public:
  ParetoNode(double alpha, double threshold) : alpha_(alpha), threshold_(threshold) {}
  double value(double t) const override { return 1.0 - tail(t); }
  double tail(double t) const override {
    if (t <= threshold_) return 1.0;
    return std::pow(t / threshold_, -alpha_);
  }
  double odds(double t) const override {
    const double s = tail(t);
    if (s >= 1.0) return kInf;
    return s / (1.0 - s);
  }

 private:
  double alpha_, threshold_;
};

class PointMassNode final : public DistFn::Node {
 public:
  explicit PointMassNode(double location) : location_(location) {}
  double value(double t) const override { return t >= location_ ? 1.0 : 0.0; }
  double odds(double t) const override { return t >= location_ ? 0.0 : kInf; }
  double tail(double t) const override { return t >= location_ ? 0.0 : 1.0; }

 private:
  double location_;
};

class BernoulliProjectionNode final : public DistFn::Node {
 public:
  explicit BernoulliProjectionNode(double p) : p_(p) {}
  double value(double t) const override { return t >= 1.0 ? 1.0 : p_; }
  double odds(double t) const override { return t >= 1.0 ? 0.0 : odds_of_value(p_); }

 private:
  double p_;
};

class TabulatedNode final : public DistFn::Node {
 public:
  explicit TabulatedNode(std::vector<std::pair<double, double>> knots)
      : knots_(std::move(knots)) {}
  double value(double t) const override {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                               [](double v, const auto& k) { return v < k.first; });
    if (it == knots_.begin()) return 0.0;
    return std::prev(it)->second;
  }

 private:
  std::vector<std::pair<double, double>> knots_;
};

class StepNode final : public DistFn::Node {
 public:
  explicit StepNode(const AtomicMeasure& mu) {
    locations_.reserve(mu.size());
    // Prefix sums give the value, suffix sums the tail; both are clean sums
    // of positive terms.
    double acc = 0.0;
    for (const Atom& a : mu.atoms()) {
      locations_.push_back(a.location);
      acc += a.mass;
      cumulative_.push_back(acc);
    }
    double tail = 0.0;
    suffix_.assign(mu.size(), 0.0);
    for (std::size_t i = mu.size(); i-- > 0;) {
      tail += mu.atoms()[i].mass;
      suffix_[i] = tail;
    }
  }
  double value(double t) const override {
    const auto it = std::upper_bound(locations_.begin(), locations_.end(), t);
    if (it == locations_.begin()) return 0.0;
    return std::min(1.0, cumulative_[static_cast<std::size_t>(it - locations_.begin()) - 1]);
  }
  double tail(double t) const override {
    const auto it = std::upper_bound(locations_.begin(), locations_.end(), t);
    if (it == locations_.end()) return 0.0;
    return suffix_[static_cast<std::size_t>(it - locations_.begin())];
  }
  double odds(double t) const override {
    const double v = value(t);
    if (v <= 0.0) return kInf;
    return tail(t) / v;
  }

 private:
  std::vector<double> locations_;
  std::vector<double> cumulative_;
  std::vector<double> suffix_;
};

class ProductNode final : public DistFn::Node {
 public:
  ProductNode(NodePtr f, NodePtr g) : f_(std::move(f)), g_(std::move(g)) {}
  double value(double t) const override { return f_->value(t) * g_->value(t); }
  double tail(double t) const override {
    // 1 - FG = tF + tG - tF tG, avoiding the subtraction from 1.
    const double tf = f_->tail(t), tg = g_->tail(t);
    return tf + tg - tf * tg;
  }
  double odds(double t) const override {
    const double v = value(t);
    if (v <= 0.0) return kInf;
    return tail(t) / v;
  }

 private:
  NodePtr f_, g_;
};

class BooleanConvNode final : public DistFn::Node {
 public:
  BooleanConvNode(NodePtr f, NodePtr g) : f_(std::move(f)), g_(std::move(g)) {}
  double value(double t) const override { return value_of_odds(odds(t)); }
  double odds(double t) const override { return f_->odds(t) + g_->odds(t); }

 private:
  NodePtr f_, g_;
};

class BooleanPowerNode final : public DistFn::Node {
 public:
  BooleanPowerNode(NodePtr f, long long n) : f_(std::move(f)), n_(static_cast<double>(n)) {}
  double value(double t) const override { return value_of_odds(odds(t)); }
  double odds(double t) const override { return n_ * f_->odds(t); }

 private:
  NodePtr f_;
  double n_;
};

class RescaleNode final : public DistFn::Node {
 public:
  RescaleNode(NodePtr f, double a) : f_(std::move(f)), a_(a) {}
  double value(double t) const override { return f_->value(a_ * t); }
  double odds(double t) const override { return f_->odds(a_ * t); }
  double tail(double t) const override { return f_->tail(a_ * t); }

 private:
  NodePtr f_;
  double a_;
};

class TransferNode final : public DistFn::Node {
 public:
  explicit TransferNode(NodePtr f) : f_(std::move(f)) {}
  double value(double t) const override {
    const double u = f_->odds(t);
    return std::isinf(u) ? 0.0 : std::exp(-u);
  }
  double odds(double t) const override {
    const double u = f_->odds(t);
    return std::isinf(u) ? kInf : std::expm1(u);
  }
  double tail(double t) const override {
    const double u = f_->odds(t);
    return std::isinf(u) ? 1.0 : -std::expm1(-u);
  }

 private:
  NodePtr f_;
};

class TransferInverseNode final : public DistFn::Node {
 public:
  explicit TransferInverseNode(NodePtr h) : h_(std::move(h)) {}
  double value(double t) const override { return value_of_odds(odds(t)); }
  double odds(double t) const override {
    // (1 - log H)^{-1} has odds -log H.  Small H carries its precision in
    // the value, H near 1 carries it in the tail; read whichever side holds
    // the information.
    const double v = h_->value(t);
    if (v <= 0.0) return kInf;
    if (v < 0.5) return -std::log(v);
    return -std::log1p(-h_->tail(t));
  }

 private:
  NodePtr h_;
};

void require_nonnegative(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("DistFn: argument t must be >= 0");
}

}  // namespace

DistFn DistFn::dagum(double lambda, double alpha) {
  if (!(lambda > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("DistFn::dagum: lambda and alpha must be > 0");
  return DistFn(std::make_shared<DagumNode>(lambda, alpha));
}

DistFn DistFn::frechet(double lambda, double alpha) {
  if (!(lambda > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("DistFn::frechet: lambda and alpha must be > 0");
  return DistFn(std::make_shared<FrechetNode>(lambda, alpha));
}

DistFn DistFn::pareto(double alpha, double threshold) {
  if (!(alpha > 0.0)) throw std::invalid_argument("DistFn::pareto: alpha must be > 0");
  if (!(threshold > 0.0)) throw std::invalid_argument("DistFn::pareto: threshold must be > 0");
  return DistFn(std::make_shared<ParetoNode>(alpha, threshold));
}

DistFn DistFn::point_mass(double location) {
  if (!(location >= 0.0) || !std::isfinite(location))
    throw std::invalid_argument("DistFn::point_mass: location must be finite and >= 0");
  return DistFn(std::make_shared<PointMassNode>(location));
}

DistFn DistFn::bernoulli_projection(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("DistFn::bernoulli_projection: p must lie in [0,1]");
  return DistFn(std::make_shared<BernoulliProjectionNode>(p));
}

DistFn DistFn::tabulated(std::vector<std::pair<double, double>> knots) {
  if (knots.empty()) throw std::invalid_argument("DistFn::tabulated: no knots");
  double prev_t = -1.0, prev_f = 0.0;
  for (const auto& [t, f] : knots) {
    if (!(t >= 0.0) || !std::isfinite(t))
      throw std::invalid_argument("DistFn::tabulated: knot locations must be finite and >= 0");
    if (t <= prev_t)
      throw std::invalid_argument("DistFn::tabulated: knot locations must be strictly increasing");
    if (!(f >= prev_f && f <= 1.0))
      throw std::invalid_argument("DistFn::tabulated: knot values must be nondecreasing in [0,1]");
    prev_t = t;
    prev_f = f;
  }
  // The probe at large t sees the final knot value.
  if (knots.back().second < 1.0 - kLimitSlack || knots.back().first > kLimitProbe)
    throw std::invalid_argument("DistFn::tabulated: function must reach 1 within 1e-6");
  return DistFn(std::make_shared<TabulatedNode>(std::move(knots)));
}

DistFn DistFn::step(const AtomicMeasure& mu) {
  if (!mu.nonnegative_support())
    throw std::invalid_argument("DistFn::step: measure must be supported on [0, inf)");
  if (mu.atoms().back().location > kLimitProbe)
    throw std::invalid_argument("DistFn::step: support extends past the large-t probe 1e12");
  return DistFn(std::make_shared<StepNode>(mu));
}

double DistFn::value(double t) const {
  require_nonnegative(t);
  return node_->value(t);
}

double DistFn::odds(double t) const {
  require_nonnegative(t);
  return node_->odds(t);
}

double DistFn::tail(double t) const {
  require_nonnegative(t);
  return node_->tail(t);
}

DistFn classical_max_conv(const DistFn& f, const DistFn& g) {
  return DistFn(std::make_shared<ProductNode>(f.node_, g.node_));
}

DistFn boolean_max_conv(const DistFn& f, const DistFn& g) {
  return DistFn(std::make_shared<BooleanConvNode>(f.node_, g.node_));
}

DistFn boolean_max_conv_power(const DistFn& f, long long n) {
  if (n < 1) throw std::invalid_argument("boolean_max_conv_power: n must be >= 1");
  return DistFn(std::make_shared<BooleanPowerNode>(f.node_, n));
}

DistFn rescale(const DistFn& f, double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::invalid_argument("rescale: factor must be finite and > 0");
  return DistFn(std::make_shared<RescaleNode>(f.node_, a));
}

DistFn transfer(const DistFn& f) { return DistFn(std::make_shared<TransferNode>(f.node_)); }

DistFn transfer_inverse(const DistFn& h) {
  return DistFn(std::make_shared<TransferInverseNode>(h.node_));
}

double sup_distance(const DistFn& f, const DistFn& g, const EvaluationGrid& grid) {
  if (grid.empty()) throw std::invalid_argument("sup_distance: empty grid");
  double sup = 0.0;
  for (double t : grid) sup = std::max(sup, std::abs(f.value(t) - g.value(t)));
  return sup;
}

}  // namespace boolmax
