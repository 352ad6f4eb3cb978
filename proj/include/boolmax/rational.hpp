#ifndef BOOLMAX_RATIONAL_HPP
#define BOOLMAX_RATIONAL_HPP

#include <complex>

#include "boolmax/polynomial.hpp"

namespace boolmax {

// Ratio of real polynomials, kept in normalized form: common factors removed
// by approximate GCD (tolerance 1e-10 on the monic normalization) and the
// denominator made monic.  Exact for the transforms of atomic measures,
// which is the only place the library uses it.
class RationalFunction {
 public:
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  double operator()(double z) const { return num_(z) / den_(z); }
  std::complex<double> operator()(std::complex<double> z) const { return num_(z) / den_(z); }

  RationalFunction operator+(const RationalFunction& rhs) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace boolmax

#endif  // BOOLMAX_RATIONAL_HPP
