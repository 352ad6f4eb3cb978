#include "boolmax/cauchy.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolmax/errors.hpp"

namespace boolmax {

namespace {

constexpr std::size_t kMaxAtoms = 32;
constexpr double kImagTol = 1e-8;       // roots beyond this off the real axis are a failure
constexpr double kClusterTol = 1e-8;    // near-degenerate poles are merged
constexpr double kZeroSnapTol = 1e-12;  // |location| below this snaps to the atom at 0
constexpr double kMassSumTol = 1e-9;

bool is_delta_zero(const AtomicMeasure& mu) {
  return mu.size() == 1 && mu.atoms()[0].location == 0.0;
}

}  // namespace

RationalFunction cauchy_transform(const AtomicMeasure& mu) {
  Polynomial den = Polynomial::constant(1.0);
  for (const Atom& a : mu.atoms()) den = den * Polynomial::linear_root(a.location);
  Polynomial num;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    Polynomial term = Polynomial::constant(mu.atoms()[i].mass);
    for (std::size_t j = 0; j < mu.size(); ++j)
      if (j != i) term = term * Polynomial::linear_root(mu.atoms()[j].location);
    num = num + term;
  }
  return RationalFunction(num, den);
}

RationalFunction k_transform(const RationalFunction& g) {
  if (g.numerator().degree() != g.denominator().degree() - 1)
    throw std::invalid_argument(
        "k_transform: numerator degree must be denominator degree minus 1");
  if (std::abs(g.numerator().leading() - 1.0) > 1e-6)
    throw std::invalid_argument("k_transform: G must behave like 1/z at infinity");
  // K = z - 1/G = (z*num - den)/num.
  const Polynomial z({0.0, 1.0});
  return RationalFunction(z * g.numerator() - g.denominator(), g.numerator());
}

AtomicMeasure boolean_additive_convolve(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  if (mu.size() > kMaxAtoms || nu.size() > kMaxAtoms)
    throw std::invalid_argument("boolean_additive_convolve: inputs capped at 32 atoms");
  // Delta at 0 has K = 0 and is the identity; short-circuit keeps it exact.
  if (is_delta_zero(mu)) return nu;
  if (is_delta_zero(nu)) return mu;

  const RationalFunction k = k_transform(cauchy_transform(mu)) + k_transform(cauchy_transform(nu));
  // G = 1/(z - K) = K.den / (z*K.den - K.num).
  const Polynomial z({0.0, 1.0});
  const RationalFunction g(k.denominator(), z * k.denominator() - k.numerator());

  const std::vector<std::complex<double>> roots = polynomial_roots(g.denominator());
  const Polynomial dden = g.denominator().derivative();
  std::vector<Atom> atoms;
  atoms.reserve(roots.size());
  for (const std::complex<double>& r : roots) {
    if (std::abs(r.imag()) > kImagTol)
      throw NumericalFailure(
          "boolean_additive_convolve: denominator root off the real axis (imag = " +
          std::to_string(r.imag()) + ")");
    double loc = r.real();
    if (std::abs(loc) < kZeroSnapTol) loc = 0.0;
    atoms.push_back({loc, g.numerator()(loc) / dden(loc)});
  }
  double total = 0.0;
  for (const Atom& a : atoms) total += a.mass;
  if (std::abs(total - 1.0) > kMassSumTol)
    throw NumericalFailure("boolean_additive_convolve: residues sum to " +
                           std::to_string(total) + ", expected 1");
  return AtomicMeasure::from_clustered(std::move(atoms), kClusterTol);
}

double atom_mass_at_zero(const RationalFunction& g) {
  const Polynomial& den = g.denominator();
  // 0 is a pole when the constant coefficient vanishes relative to the
  // denominator's scale.
  if (std::abs(den.coefficients()[0]) > 1e-9 * std::max(1.0, den.max_abs_coefficient()))
    return 0.0;
  return g.numerator()(0.0) / den.derivative()(0.0);
}

}  // namespace boolmax
