// Acceptance suite: one pass/fail line per criterion, with the measured
// runtime against the budget each criterion carries.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <Eigen/Dense>
#include <cfloat>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "boolmax/attraction.hpp"
#include "boolmax/cauchy.hpp"
#include "boolmax/dist_fn.hpp"
#include "boolmax/grid.hpp"
#include "boolmax/operator_model.hpp"
#include "boolmax/semigroup.hpp"
#include "boolmax/stable_laws.hpp"

namespace {

using Clock = std::chrono::steady_clock;

class Criterion {
 public:
  Criterion(int number, const char* description, double budget_seconds)
      : number_(number), description_(description), budget_(budget_seconds), start_(Clock::now()) {}

  void record(bool ok) { ok_ = ok_ && ok; }
  bool ok() const { return ok_; }

  ~Criterion() {
    const double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
    const bool in_budget = elapsed <= budget_;
    std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s)\n",
                ok_ && in_budget ? "PASS" : "FAIL", number_, description_, elapsed, budget_);
    std::fflush(stdout);
    CHECK(ok_);
    CHECK(in_budget);
  }

 private:
  int number_;
  const char* description_;
  double budget_;
  Clock::time_point start_;
  bool ok_ = true;
};

}  // namespace

TEST_CASE("criterion 1: projection meet sweep matches 1/(1/p + 1/q - 1)") {
  Criterion c(1, "operator-model sweep vs closed form, 81 points, 1e-9", 5.0);
  double max_err = 0.0;
  for (int i = 1; i <= 9; ++i) {
    for (int j = 1; j <= 9; ++j) {
      const double p = i / 10.0, q = j / 10.0;
      const boolmax::BooleanEmbedding emb = boolmax::boolean_embed(
          boolmax::make_projection_model(p, "P"), boolmax::make_projection_model(q, "Q"));
      const double value = boolmax::spectral_max_distribution(emb, {0.5}).front().second;
      max_err = std::max(max_err, std::abs(value - 1.0 / (1.0 / p + 1.0 / q - 1.0)));
    }
  }
  c.record(max_err <= 1e-9);
}

TEST_CASE("criterion 2: semigroup isomorphism over 1e4 random pairs") {
  Criterion c(2, "homomorphism and chi round trip within 1e-12", 1.0);
  std::mt19937_64 rng(20260811);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  using boolmax::UnitInterval;
  for (int i = 0; i < 10000; ++i) {
    const UnitInterval x(unit(rng)), y(unit(rng));
    const double lhs = boolmax::chi(boolmax::boolean_min(x, y)).value();
    const double rhs = boolmax::chi(x).value() * boolmax::chi(y).value();
    c.record(std::abs(lhs - rhs) <= 1e-12);

    // Round trip both ways.  chi(x) underflows to an unrepresentable double
    // for x below ~1/746; 64-bit arithmetic cannot round-trip those points,
    // so the forward direction is checked where chi(x) is a normal double.
    const double cx = boolmax::chi(x).value();
    if (cx >= DBL_MIN)
      c.record(std::abs(boolmax::chi_inverse(UnitInterval(cx)).value() - x.value()) <= 1e-12);
    c.record(std::abs(boolmax::chi(boolmax::chi_inverse(y)).value() - y.value()) <= 1e-12);
  }
}

TEST_CASE("criterion 3: spectral max of random PSD pairs matches the convolution") {
  Criterion c(3, "20 random diagonal PSD pairs vs boolean_max_conv, 1e-9", 10.0);
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> dim_dist(2, 5);
  std::uniform_real_distribution<double> value_dist(0.0, 3.0);
  std::uniform_real_distribution<double> mass_dist(0.05, 1.0);
  const boolmax::EvaluationGrid grid = boolmax::geometric_grid(0.05, 6.0, 50);
  for (int trial = 0; trial < 20; ++trial) {
    auto draw = [&](const std::string& name) {
      const int d = dim_dist(rng);
      std::vector<double> values(static_cast<std::size_t>(d));
      std::vector<double> masses(static_cast<std::size_t>(d));
      for (auto& v : values) v = value_dist(rng);
      for (auto& m : masses) m = mass_dist(rng);
      return boolmax::make_diagonal_model(values, masses, name);
    };
    const boolmax::OperatorModel ma = draw("X");
    const boolmax::OperatorModel mb = draw("Y");
    const boolmax::BooleanEmbedding emb = boolmax::boolean_embed(ma, mb);
    const boolmax::DistFn conv = boolmax::boolean_max_conv(
        boolmax::DistFn::step(ma.distribution("X")), boolmax::DistFn::step(mb.distribution("Y")));
    for (const auto& [t, value] : boolmax::spectral_max_distribution(emb, grid))
      c.record(std::abs(value - conv(t)) <= 1e-9);
  }
}

TEST_CASE("criterion 4: Boolean additive convolution against both oracles") {
  Criterion c(4, "Bernoulli(1/2) convolution atoms and random-measure moments", 5.0);

  // Residue route.
  const boolmax::AtomicMeasure half({{0.0, 0.5}, {1.0, 0.5}});
  const boolmax::AtomicMeasure conv = boolmax::boolean_additive_convolve(half, half);
  c.record(conv.size() == 2);
  c.record(std::abs(conv.atoms()[0].location - 0.0) <= 1e-10);
  c.record(std::abs(conv.atoms()[0].mass - 1.0 / 3.0) <= 1e-10);
  c.record(std::abs(conv.atoms()[1].location - 1.5) <= 1e-10);
  c.record(std::abs(conv.atoms()[1].mass - 2.0 / 3.0) <= 1e-10);

  // Eigendecomposition of the embedded sum.
  const boolmax::BooleanEmbedding emb = boolmax::boolean_embed(
      boolmax::make_projection_model(0.5, "P"), boolmax::make_projection_model(0.5, "Q"));
  using Side = boolmax::BooleanEmbedding::Side;
  const Eigen::MatrixXcd sum = emb.embedded(Side::A) + emb.embedded(Side::B);
  const boolmax::OperatorModel sum_model(emb.combined().state(), {{"S", sum}});
  const boolmax::AtomicMeasure spectral = sum_model.distribution("S");
  c.record(spectral.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    c.record(std::abs(spectral.atoms()[i].location - conv.atoms()[i].location) <= 1e-10);
    c.record(std::abs(spectral.atoms()[i].mass - conv.atoms()[i].mass) <= 1e-10);
  }

  // Moments of random convolutions against the operator model.
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<int> natoms(2, 3);
  std::uniform_real_distribution<double> loc(-2.0, 3.0);
  std::uniform_real_distribution<double> mass(0.1, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    auto draw_measure = [&]() {
      const int k = natoms(rng);
      std::vector<boolmax::Atom> atoms;
      double total = 0.0;
      for (int i = 0; i < k; ++i) {
        atoms.push_back({loc(rng), mass(rng)});
        total += atoms.back().mass;
      }
      for (auto& a : atoms) a.mass /= total;
      return boolmax::AtomicMeasure(std::move(atoms));
    };
    const boolmax::AtomicMeasure mu = draw_measure();
    const boolmax::AtomicMeasure nu = draw_measure();
    auto model_of = [](const boolmax::AtomicMeasure& m, const std::string& name) {
      std::vector<double> values, masses;
      for (const auto& a : m.atoms()) {
        values.push_back(a.location);
        masses.push_back(a.mass);
      }
      return boolmax::make_diagonal_model(values, masses, name);
    };
    const boolmax::BooleanEmbedding e2 =
        boolmax::boolean_embed(model_of(mu, "X"), model_of(nu, "Y"));
    const Eigen::MatrixXcd s2 = e2.embedded(Side::A) + e2.embedded(Side::B);
    const boolmax::OperatorModel m2(e2.combined().state(), {{"S", s2}});
    const boolmax::AtomicMeasure out = boolmax::boolean_additive_convolve(mu, nu);
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(s2.rows(), s2.cols());
    for (int k = 1; k <= 2; ++k) {
      power = power * s2;
      c.record(std::abs(out.moment(k) - std::real(m2.expectation(power))) <= 1e-8);
    }
  }
}

TEST_CASE("criterion 5: exact Dagum stability across the parameter sweep") {
  Criterion c(5, "stability defect <= 1e-12 for the lambda/alpha/n sweep", 1.0);
  const boolmax::EvaluationGrid grid = boolmax::geometric_grid(0.1, 10.0, 50);
  for (double lambda : {0.5, 1.0, 2.0})
    for (double alpha : {0.5, 1.0, 2.0})
      for (long long n : {2LL, 10LL, 1000LL, 1000000LL})
        c.record(boolmax::stability_check(boolmax::DagumLaw(lambda, alpha), n, grid) <= 1e-12);
}

TEST_CASE("criterion 6: stable-law recognition") {
  Criterion c(6, "accepts sampled Dagum laws, rejects the other families", 30.0);
  const boolmax::EvaluationGrid grid = boolmax::geometric_grid(0.1, 10.0, 50);
  std::mt19937_64 rng(16180);
  std::uniform_real_distribution<double> param(0.4, 2.5);
  for (int trial = 0; trial < 20; ++trial) {
    const double lambda = param(rng), alpha = param(rng);
    const boolmax::StableFit fit =
        boolmax::is_boolean_max_stable(boolmax::DistFn::dagum(lambda, alpha), grid, 1e-6);
    c.record(fit.stable);
    c.record(std::abs(fit.lambda - lambda) / lambda <= 1e-8);
    c.record(std::abs(fit.alpha - alpha) / alpha <= 1e-8);
  }
  c.record(!boolmax::is_boolean_max_stable(boolmax::DistFn::frechet(1.0, 1.0), grid, 1e-6).stable);
  c.record(!boolmax::is_boolean_max_stable(boolmax::DistFn::pareto(1.0, 1.0), grid, 1e-6).stable);
  c.record(
      !boolmax::is_boolean_max_stable(boolmax::DistFn::bernoulli_projection(0.5), grid, 1e-6)
           .stable);
}

TEST_CASE("criterion 7: domain-of-attraction pipeline") {
  Criterion c(7, "rv recovery within 2% at 1e6, equivalence 1e-3, doa decreasing", 30.0);
  const boolmax::EvaluationGrid scales = {1e2, 1e3, 1e4, 1e5, 1e6};
  const std::vector<double> multipliers = boolmax::default_multipliers();

  const std::vector<std::pair<boolmax::DistFn, double>> cases{
      {boolmax::DistFn::dagum(1.0, 0.5), 0.5},  {boolmax::DistFn::dagum(1.0, 1.0), 1.0},
      {boolmax::DistFn::dagum(1.0, 2.0), 2.0},  {boolmax::DistFn::pareto(1.0, 1.0), 1.0},
      {boolmax::DistFn::pareto(2.0, 1.0), 2.0}};
  for (const auto& entry : cases) {
    const boolmax::DistFn& fn = entry.first;
    const double alpha = entry.second;
    const boolmax::RVEstimate est = boolmax::rv_index_estimate(
        [&fn](double t) { return fn.tail(t); }, scales, multipliers);
    c.record(std::abs(est.alpha_hat - alpha) / alpha <= 0.02);
    const boolmax::RvEquivalence eq = boolmax::rv_equivalence_check(fn, scales, multipliers);
    c.record(eq.difference <= 1e-3);
  }

  const boolmax::DoaReport doa =
      boolmax::doa_check(boolmax::DistFn::pareto(1.0, 1.0), boolmax::DagumLaw(1.0, 1.0),
                         {10, 100, 1000, 10000}, boolmax::geometric_grid(0.1, 10.0, 50));
  c.record(doa.entries.size() == 4);
  for (std::size_t i = 1; i < doa.entries.size(); ++i)
    c.record(doa.entries[i].sup_error < doa.entries[i - 1].sup_error);
}

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("criterion 8: CLI determinism") {
  Criterion c(8, "byte-identical reports across repeated runs of each command", 30.0);
  const fs::path dir = fs::temp_directory_path() / "boolmax_acceptance";
  fs::create_directories(dir);
  const fs::path dagum = dir / "dagum.json";
  const fs::path pareto = dir / "pareto.json";
  std::ofstream(dagum) << R"({"kind":"dagum","lambda":1.0,"alpha":1.0})";
  std::ofstream(pareto) << R"({"kind":"pareto","alpha":1.0,"threshold":1.0})";

  const std::vector<std::string> invocations = {
      "convolve " + dagum.string() + " " + pareto.string(),
      "transfer " + dagum.string(),
      "stability " + dagum.string() + " --n 10 --n 1000",
      "rv " + dagum.string(),
      "doa " + pareto.string() + " " + dagum.string() + " --n 10 --n 100 --n 1000",
      "oracle",
  };
  int counter = 0;
  for (const std::string& base : invocations) {
    const fs::path out1 = dir / ("run_" + std::to_string(counter) + "_1.csv");
    const fs::path out2 = dir / ("run_" + std::to_string(counter) + "_2.csv");
    ++counter;
    for (const fs::path& out : {out1, out2}) {
      const std::string command = std::string(BOOLMAX_CLI_PATH) + " " + base + " --output " +
                                  out.string() + " 2>/dev/null";
      const int status = std::system(command.c_str());
      c.record(WIFEXITED(status) && WEXITSTATUS(status) == 0);
    }
    const std::string first = read_file(out1);
    c.record(!first.empty());
    c.record(first == read_file(out2));
  }
}
