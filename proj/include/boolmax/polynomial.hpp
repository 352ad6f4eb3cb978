#ifndef BOOLMAX_POLYNOMIAL_HPP
#define BOOLMAX_POLYNOMIAL_HPP

#include <complex>
#include <vector>

namespace boolmax {

// Real univariate polynomial, coefficients in ascending degree order.
// The zero polynomial is represented as {0}.
class Polynomial {
 public:
  Polynomial() : coef_{0.0} {}
  explicit Polynomial(std::vector<double> ascending_coefficients);

  static Polynomial constant(double c) { return Polynomial({c}); }
  // The monomial z - root.
  static Polynomial linear_root(double root) { return Polynomial({-root, 1.0}); }

  const std::vector<double>& coefficients() const noexcept { return coef_; }
  int degree() const noexcept { return static_cast<int>(coef_.size()) - 1; }
  bool is_zero() const noexcept;
  double leading() const noexcept { return coef_.back(); }
  double max_abs_coefficient() const noexcept;

  double operator()(double z) const;
  std::complex<double> operator()(std::complex<double> z) const;

  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(double s) const;

  // Drops leading coefficients of magnitude <= rel_tol * max|coef|.
  Polynomial trimmed(double rel_tol = 1e-12) const;
  Polynomial monic() const;

 private:
  std::vector<double> coef_;
};

// Euclidean division: a = q*b + r with deg r < deg b.  Throws on b == 0.
struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivision divide(const Polynomial& a, const Polynomial& b);

// Approximate monic GCD via the Euclidean algorithm; remainders whose
// magnitude falls below rel_tol (relative to the working scale) are treated
// as zero.  Adequate for the small degrees used here, where common factors
// are exact up to rounding.
Polynomial gcd_approx(const Polynomial& a, const Polynomial& b, double rel_tol = 1e-10);

// All complex roots, found as eigenvalues of the companion matrix of the
// monic normalization.  Requires degree >= 1 after trimming.
std::vector<std::complex<double>> polynomial_roots(const Polynomial& p);

}  // namespace boolmax

#endif  // BOOLMAX_POLYNOMIAL_HPP
