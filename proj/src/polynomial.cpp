#include "boolmax/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boolmax/errors.hpp"

namespace boolmax {

namespace {

std::vector<double> trim_vector(std::vector<double> c, double rel_tol) {
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  const double cut = scale * rel_tol;
  while (c.size() > 1 && std::abs(c.back()) <= cut) c.pop_back();
  if (c.size() == 1 && std::abs(c[0]) <= cut) c[0] = 0.0;
  return c;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> ascending_coefficients)
    : coef_(std::move(ascending_coefficients)) {
  if (coef_.empty()) coef_.push_back(0.0);
  for (double v : coef_)
    if (!std::isfinite(v)) throw std::invalid_argument("Polynomial: non-finite coefficient");
  while (coef_.size() > 1 && coef_.back() == 0.0) coef_.pop_back();
}

bool Polynomial::is_zero() const noexcept { return coef_.size() == 1 && coef_[0] == 0.0; }

double Polynomial::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (double v : coef_) m = std::max(m, std::abs(v));
  return m;
}

double Polynomial::operator()(double z) const {
  double y = 0.0;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) y = y * z + *it;
  return y;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
  std::complex<double> y = 0.0;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) y = y * z + *it;
  return y;
}

Polynomial Polynomial::derivative() const {
  if (degree() == 0) return Polynomial();
  std::vector<double> d(coef_.size() - 1);
  for (std::size_t i = 1; i < coef_.size(); ++i)
    d[i - 1] = coef_[i] * static_cast<double>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<double> c(std::max(coef_.size(), rhs.coef_.size()), 0.0);
  for (std::size_t i = 0; i < coef_.size(); ++i) c[i] += coef_[i];
  for (std::size_t i = 0; i < rhs.coef_.size(); ++i) c[i] += rhs.coef_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<double> c(std::max(coef_.size(), rhs.coef_.size()), 0.0);
  for (std::size_t i = 0; i < coef_.size(); ++i) c[i] += coef_[i];
  for (std::size_t i = 0; i < rhs.coef_.size(); ++i) c[i] -= rhs.coef_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<double> c(coef_.size() + rhs.coef_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coef_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coef_.size(); ++j)
      c[i + j] += coef_[i] * rhs.coef_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(double s) const {
  std::vector<double> c = coef_;
  for (double& v : c) v *= s;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::trimmed(double rel_tol) const {
  return Polynomial(trim_vector(coef_, rel_tol));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::invalid_argument("Polynomial::monic: zero polynomial");
  return *this * (1.0 / coef_.back());
}

PolyDivision divide(const Polynomial& a, const Polynomial& b) {
  const Polynomial bt = b.trimmed();
  if (bt.is_zero()) throw std::invalid_argument("Polynomial division by zero");
  std::vector<double> rem = a.coefficients();
  const int db = bt.degree();
  const int da = static_cast<int>(rem.size()) - 1;
  if (da < db) return {Polynomial(), a};
  std::vector<double> quot(static_cast<std::size_t>(da - db + 1), 0.0);
  const double lead = bt.leading();
  for (int k = da - db; k >= 0; --k) {
    const double q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * bt.coefficients()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(db, 1)));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd_approx(const Polynomial& a, const Polynomial& b, double rel_tol) {
  Polynomial p = a.trimmed();
  Polynomial q = b.trimmed();
  if (p.is_zero()) return q.is_zero() ? Polynomial::constant(1.0) : q.monic();
  if (q.is_zero()) return p.monic();
  p = p.monic();
  q = q.monic();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (q.degree() > 0) {
    Polynomial r = divide(p, q).remainder;
    if (r.max_abs_coefficient() <= rel_tol * std::max(1.0, p.max_abs_coefficient()))
      return q;
    p = q;
    q = r.trimmed(rel_tol).monic();
  }
  return Polynomial::constant(1.0);
}

std::vector<std::complex<double>> polynomial_roots(const Polynomial& p) {
  const Polynomial t = p.trimmed();
  const int n = t.degree();
  if (n < 1) throw std::invalid_argument("polynomial_roots: degree must be >= 1");
  const Polynomial m = t.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -m.coefficients()[static_cast<std::size_t>(i)];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("polynomial_roots: companion eigensolver did not converge");
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  std::sort(roots.begin(), roots.end(), [](auto u, auto v) {
    return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
  });
  return roots;
}

}  // namespace boolmax
