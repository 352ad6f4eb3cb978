#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <random>
#include <vector>

#include "boolmax/atomic_measure.hpp"
#include "boolmax/dist_fn.hpp"
#include "boolmax/grid.hpp"
#include "boolmax/operator_model.hpp"

using boolmax::AtomicMeasure;
using boolmax::DistFn;
using boolmax::EvaluationGrid;
using boolmax::boolean_max_conv;
using boolmax::boolean_max_conv_power;
using boolmax::classical_max_conv;
using boolmax::geometric_grid;
using boolmax::rescale;
using boolmax::sup_distance;
using boolmax::transfer;
using boolmax::transfer_inverse;

namespace {

// Random closed-form families for the property checks.
DistFn random_family(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> param(0.3, 3.0);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  switch (rng() % 5) {
    case 0: return DistFn::dagum(param(rng), param(rng));
    case 1: return DistFn::frechet(param(rng), param(rng));
    case 2: return DistFn::pareto(param(rng), param(rng));
    case 3: return DistFn::bernoulli_projection(unit(rng));
    default: return DistFn::point_mass(param(rng));
  }
}

}  // namespace

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(DistFn::dagum(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DistFn::frechet(1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(DistFn::pareto(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(DistFn::point_mass(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(DistFn::bernoulli_projection(1.5), std::invalid_argument);
  CHECK_THROWS_AS(DistFn::tabulated({}), std::invalid_argument);
  CHECK_THROWS_AS(DistFn::tabulated({{0.0, 0.5}, {0.0, 0.6}}), std::invalid_argument);
  CHECK_THROWS_AS(DistFn::tabulated({{0.0, 0.5}, {1.0, 0.4}}), std::invalid_argument);
  // Never reaches 1: rejected by the large-t probe.
  CHECK_THROWS_AS(DistFn::tabulated({{0.0, 0.5}}), std::invalid_argument);
  // Negative support cannot enter Delta_plus.
  CHECK_THROWS_AS(DistFn::step(AtomicMeasure({{-1.0, 0.5}, {1.0, 0.5}})),
                  std::invalid_argument);
}

TEST_CASE("evaluation of the base families") {
  CHECK(DistFn::bernoulli_projection(0.3)(0.5) == 0.3);
  CHECK(DistFn::bernoulli_projection(0.3)(1.0) == 1.0);
  CHECK(DistFn::point_mass(0.0)(0.0) == 1.0);
  CHECK(DistFn::point_mass(0.0)(7.0) == 1.0);

  const DistFn step = DistFn::step(AtomicMeasure({{0.0, 1.0 / 3.0}, {1.5, 2.0 / 3.0}}));
  CHECK(step(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(step(1.5) == doctest::Approx(1.0).epsilon(1e-15));

  const DistFn tab = DistFn::tabulated({{0.5, 0.2}, {1.0, 0.7}, {2.0, 1.0}});
  CHECK(tab(0.0) == 0.0);
  CHECK(tab(0.75) == 0.2);
  CHECK(tab(1.0) == 0.7);
  CHECK(tab(3.0) == 1.0);

  CHECK(DistFn::dagum(1.0, 1.0)(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(DistFn::dagum(1.0, 1.0)(0.0) == 0.0);
  CHECK(DistFn::frechet(1.0, 1.0)(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(DistFn::frechet(1.0, 1.0)(0.0) == 0.0);
  CHECK(DistFn::pareto(2.0, 1.0)(0.5) == 0.0);
  CHECK(DistFn::pareto(2.0, 1.0)(2.0) == doctest::Approx(0.75).epsilon(1e-15));

  CHECK_THROWS_AS(DistFn::dagum(1.0, 1.0)(-0.5), std::invalid_argument);
}

TEST_CASE("classical max-convolution multiplies pointwise") {
  std::mt19937_64 rng(109);
  const DistFn f = random_family(rng);
  const DistFn with_identity = classical_max_conv(f, DistFn::point_mass(0.0));
  for (double t : geometric_grid(0.01, 100.0, 40))
    CHECK(with_identity(t) == doctest::Approx(f(t)).epsilon(1e-15));

  const DistFn frechet_sq =
      classical_max_conv(DistFn::frechet(1.0, 2.0), DistFn::frechet(1.0, 2.0));
  for (double t : geometric_grid(0.1, 10.0, 20))
    CHECK(frechet_sq(t) == doctest::Approx(std::exp(-2.0 * std::pow(t, -2.0))).epsilon(1e-14));

  const DistFn b = DistFn::bernoulli_projection(0.5);
  CHECK(classical_max_conv(b, b)(0.5) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("boolean max-convolution applies the semigroup pointwise") {
  std::mt19937_64 rng(113);
  const DistFn f = random_family(rng);
  const DistFn with_identity = boolean_max_conv(f, DistFn::point_mass(0.0));
  for (double t : geometric_grid(0.01, 100.0, 40))
    CHECK(with_identity(t) == doctest::Approx(f(t)).epsilon(1e-15));

  const DistFn b = DistFn::bernoulli_projection(0.5);
  CHECK(boolean_max_conv(b, b)(0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const DistFn d = DistFn::dagum(1.0, 1.0);
  CHECK(boolean_max_conv(d, d)(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("boolean power closed form") {
  const DistFn f = DistFn::dagum(2.0, 1.5);
  CHECK(boolean_max_conv_power(f, 1)(0.7) == doctest::Approx(f(0.7)).epsilon(1e-15));
  for (long long n : {2LL, 5LL, 1000LL}) {
    const DistFn fn = boolean_max_conv_power(f, n);
    for (double t : geometric_grid(0.1, 10.0, 20)) {
      const double expected = 1.0 / (1.0 + static_cast<double>(n) * 2.0 * std::pow(t, -1.5));
      CHECK(fn(t) == doctest::Approx(expected).epsilon(1e-14));
    }
  }
  CHECK(boolean_max_conv_power(DistFn::bernoulli_projection(0.5), 4)(0.0) ==
        doctest::Approx(0.2).epsilon(1e-15));
  CHECK_THROWS_AS(boolean_max_conv_power(f, 0), std::invalid_argument);
}

TEST_CASE("rescale") {
  const DistFn f = DistFn::dagum(1.5, 2.0);
  CHECK(rescale(f, 1.0)(3.0) == doctest::Approx(f(3.0)).epsilon(1e-15));

  const double a = 2.5;
  const DistFn scaled = rescale(f, a);
  const DistFn expected = DistFn::dagum(1.5 * std::pow(a, -2.0), 2.0);
  for (double t : geometric_grid(0.1, 10.0, 20))
    CHECK(scaled(t) == doctest::Approx(expected(t)).epsilon(1e-13));

  const DistFn pareto_scaled = rescale(DistFn::pareto(1.0, 1.0), a);
  CHECK(pareto_scaled(2.0) == doctest::Approx(1.0 - 1.0 / (a * 2.0)).epsilon(1e-14));
  CHECK(pareto_scaled(0.3) == 0.0);  // a t < threshold

  CHECK_THROWS_AS(rescale(f, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(rescale(f, -1.0), std::invalid_argument);
}

TEST_CASE("transfer sends Dagum to Frechet and back") {
  const DistFn constant_one = transfer(DistFn::point_mass(0.0));
  CHECK(constant_one(0.0) == 1.0);
  CHECK(constant_one(42.0) == 1.0);

  for (auto [lambda, alpha] : {std::pair{1.0, 1.0}, {3.0, 0.5}, {0.7, 2.0}}) {
    const DistFn fwd = transfer(DistFn::dagum(lambda, alpha));
    const DistFn frechet = DistFn::frechet(lambda, alpha);
    const DistFn inv = transfer_inverse(frechet);
    const DistFn dagum = DistFn::dagum(lambda, alpha);
    for (double t : geometric_grid(0.05, 20.0, 30)) {
      CHECK(std::abs(fwd(t) - frechet(t)) <= 1e-14);
      CHECK(std::abs(inv(t) - dagum(t)) <= 1e-14);
    }
  }

  CHECK(transfer_inverse(DistFn::frechet(1.0, 1.0))(1.0) == doctest::Approx(0.5).epsilon(1e-14));

  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 30; ++trial) {
    const DistFn f = random_family(rng);
    const DistFn fwd = transfer(f);
    const DistFn round = transfer_inverse(fwd);
    for (double t : geometric_grid(0.02, 50.0, 25)) {
      // Once the transferred value underflows past the normal range, no
      // 64-bit round trip can recover F.
      if (fwd(t) < DBL_MIN) continue;
      CHECK(std::abs(round(t) - f(t)) <= 1e-12);
    }
  }
}

TEST_CASE("transfer is a homomorphism onto pointwise multiplication") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 50; ++trial) {
    const DistFn f = random_family(rng);
    const DistFn g = random_family(rng);
    const DistFn lhs = transfer(boolean_max_conv(f, g));
    const DistFn ff = transfer(f);
    const DistFn gg = transfer(g);
    std::uniform_real_distribution<double> tdist(0.0, 20.0);
    for (int k = 0; k < 40; ++k) {
      const double t = tdist(rng);
      CHECK(std::abs(lhs(t) - ff(t) * gg(t)) <= 1e-12);
    }
  }
}

TEST_CASE("rescale commutes with transfer") {
  std::mt19937_64 rng(137);
  std::uniform_real_distribution<double> adist(0.2, 5.0);
  for (int trial = 0; trial < 30; ++trial) {
    const DistFn f = random_family(rng);
    const double a = adist(rng);
    const DistFn left = transfer(rescale(f, a));
    const DistFn right = rescale(transfer(f), a);
    for (double t : geometric_grid(0.05, 20.0, 25))
      CHECK(std::abs(left(t) - right(t)) <= 1e-12);
  }
}

TEST_CASE("convolutions stay inside Delta_plus on sampled grids") {
  std::mt19937_64 rng(139);
  const EvaluationGrid grid = geometric_grid(0.01, 1e6, 60);
  for (int trial = 0; trial < 20; ++trial) {
    const DistFn f = random_family(rng);
    const DistFn g = random_family(rng);
    for (const DistFn& h : {classical_max_conv(f, g), boolean_max_conv(f, g),
                            boolean_max_conv_power(f, 7), transfer(f), transfer_inverse(f)}) {
      double prev = -1.0;
      for (double t : grid) {
        const double v = h(t);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        CHECK(v >= prev - 1e-15);
        prev = v;
      }
      // The limit at infinity is analytic for every closed form underneath;
      // the sampled check is that nothing decreases past the grid.
      CHECK(h(1e15) >= prev - 1e-15);
    }
  }
}

TEST_CASE("boolean max-convolution of projections matches the operator oracle") {
  using boolmax::BooleanEmbedding;
  using boolmax::boolean_embed;
  using boolmax::make_projection_model;
  using boolmax::spectral_max_distribution;

  const EvaluationGrid grid = geometric_grid(0.05, 2.0, 40);
  for (double p : {0.2, 0.5, 0.8}) {
    for (double q : {0.3, 0.5, 0.9}) {
      const DistFn conv = boolean_max_conv(DistFn::bernoulli_projection(p),
                                           DistFn::bernoulli_projection(q));
      const BooleanEmbedding emb =
          boolean_embed(make_projection_model(p, "P"), make_projection_model(q, "Q"));
      for (const auto& [t, value] : spectral_max_distribution(emb, grid))
        CHECK(std::abs(value - conv(t)) <= 1e-9);
    }
  }
}

TEST_CASE("evaluation does not depend on grid order") {
  std::mt19937_64 rng(149);
  const DistFn f = boolean_max_conv(DistFn::dagum(1.0, 2.0),
                                    transfer_inverse(DistFn::frechet(0.5, 1.0)));
  const EvaluationGrid original = geometric_grid(0.1, 10.0, 30);
  std::vector<double> forward;
  for (double t : original) forward.push_back(f(t));

  EvaluationGrid shuffled = original;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  for (double t : shuffled) {
    const auto idx = static_cast<std::size_t>(
        std::find(original.begin(), original.end(), t) - original.begin());
    CHECK(f(t) == forward[idx]);
  }
}

TEST_CASE("sup distance") {
  const DistFn f = DistFn::dagum(1.0, 1.0);
  CHECK(sup_distance(f, f, geometric_grid(0.1, 10.0, 10)) == 0.0);
  CHECK(sup_distance(f, boolean_max_conv(f, f), {1.0}) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(sup_distance(DistFn::point_mass(0.0), DistFn::bernoulli_projection(0.25), {0.5}) ==
        doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(sup_distance(f, f, {}), std::invalid_argument);
}
