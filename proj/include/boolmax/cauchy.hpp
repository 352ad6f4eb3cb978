#ifndef BOOLMAX_CAUCHY_HPP
#define BOOLMAX_CAUCHY_HPP

#include "boolmax/atomic_measure.hpp"
#include "boolmax/rational.hpp"

namespace boolmax {

// G_mu(z) = sum_i w_i / (z - t_i), reduced; deg num = deg den - 1 and the
// numerator is monic because the masses sum to 1.
RationalFunction cauchy_transform(const AtomicMeasure& mu);

// K_mu(z) = z - 1/G_mu(z).  Requires G to look like a Cauchy transform of a
// probability measure: deg num = deg den - 1 with unit leading ratio.
RationalFunction k_transform(const RationalFunction& g);

// Boolean additive convolution: K_{mu (+) nu} = K_mu + K_nu.  The result is
// recovered from G = 1/(z - K) by locating the real poles of the reduced
// denominator and taking residues as masses.  Throws NumericalFailure when
// the root finder leaves roots off the real axis (tolerance 1e-8) or when
// the recovered masses fail to account for total mass 1 within 1e-9.
// Inputs are capped at 32 atoms each.
AtomicMeasure boolean_additive_convolve(const AtomicMeasure& mu, const AtomicMeasure& nu);

// lim_{z -> 0} z G(z): the residue at 0 when 0 is a pole of G, else 0.
double atom_mass_at_zero(const RationalFunction& g);

}  // namespace boolmax

#endif  // BOOLMAX_CAUCHY_HPP
