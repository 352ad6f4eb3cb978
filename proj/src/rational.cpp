#include "boolmax/rational.hpp"

#include <stdexcept>

namespace boolmax {

namespace {
constexpr double kGcdTol = 1e-10;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(numerator.trimmed()), den_(denominator.trimmed()) {
  if (den_.is_zero())
    throw std::invalid_argument("RationalFunction: denominator is identically zero");
  if (!num_.is_zero()) {
    const Polynomial g = gcd_approx(num_, den_, kGcdTol);
    if (g.degree() >= 1) {
      num_ = divide(num_, g).quotient.trimmed();
      den_ = divide(den_, g).quotient.trimmed();
    }
  }
  const double lead = den_.leading();
  num_ = num_ * (1.0 / lead);
  den_ = den_ * (1.0 / lead);
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

}  // namespace boolmax
