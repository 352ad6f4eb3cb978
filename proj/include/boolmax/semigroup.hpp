#ifndef BOOLMAX_SEMIGROUP_HPP
#define BOOLMAX_SEMIGROUP_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace boolmax {

// The semigroup ([0,1], %) of Boolean min-convolution, where
//   (x % y)^{-1} - 1 = (x^{-1} - 1) + (y^{-1} - 1),
// together with its isomorphism chi onto ([0,1], *).
//
// Internally everything runs through the "odds" coordinate u = x^{-1} - 1,
// which maps ([0,1], %) onto ([0, +inf], +).  x = 0 corresponds to u = +inf
// and is handled by that limit convention throughout (no division by zero).

// u = x^{-1} - 1, computed as (1 - x)/x so values near x = 1 do not cancel.
inline double odds_of_value(double x) {
  if (x <= 0.0) return std::numeric_limits<double>::infinity();
  return (1.0 - x) / x;
}

// Inverse coordinate map: x = 1/(1 + u); u = +inf yields 0.
inline double value_of_odds(double u) {
  if (std::isinf(u)) return 0.0;
  return 1.0 / (1.0 + u);
}

class UnitInterval {
 public:
  explicit UnitInterval(double x) : x_(x) {
    if (!(x >= 0.0 && x <= 1.0))
      throw std::invalid_argument("UnitInterval: value outside [0,1]");
  }

  double value() const noexcept { return x_; }

 private:
  double x_;
};

// x % y.  1 is the identity, 0 is absorbing.  Commutative and associative.
inline UnitInterval boolean_min(UnitInterval x, UnitInterval y) {
  if (x.value() == 0.0 || y.value() == 0.0) return UnitInterval(0.0);
  return UnitInterval(value_of_odds(odds_of_value(x.value()) + odds_of_value(y.value())));
}

// n-fold % power of x: the result z satisfies z^{-1} - 1 = n (x^{-1} - 1).
inline UnitInterval boolean_min_power(UnitInterval x, long long n) {
  if (n < 1) throw std::invalid_argument("boolean_min_power: n must be >= 1");
  if (x.value() == 0.0) return UnitInterval(0.0);
  return UnitInterval(value_of_odds(static_cast<double>(n) * odds_of_value(x.value())));
}

// chi(x) = exp(1 - x^{-1}); the isomorphism onto ([0,1], *).  chi(0) = 0.
inline UnitInterval chi(UnitInterval x) {
  if (x.value() == 0.0) return UnitInterval(0.0);
  return UnitInterval(std::exp(-odds_of_value(x.value())));
}

// chi^{-1}(y) = (1 - log y)^{-1}; chi_inverse(0) = 0.
inline UnitInterval chi_inverse(UnitInterval y) {
  if (y.value() == 0.0) return UnitInterval(0.0);
  return UnitInterval(1.0 / (1.0 - std::log(y.value())));
}

}  // namespace boolmax

#endif  // BOOLMAX_SEMIGROUP_HPP
