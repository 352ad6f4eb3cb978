#include "boolmax/operator_model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "boolmax/errors.hpp"

namespace boolmax {

namespace {

constexpr int kMaxDimension = 64;
constexpr double kStateTol = 1e-12;
constexpr double kHermitianTol = 1e-12;
constexpr double kScaleSlack = 1e-12;
constexpr double kProjectionTol = 1e-9;
constexpr double kMeetNullTol = 1e-9;
constexpr double kEigenClusterTol = 1e-8;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

void check_projection(const Eigen::MatrixXcd& p, const char* which) {
  if (p.rows() != p.cols()) throw std::invalid_argument(std::string(which) + ": not square");
  if (max_abs(p - p.adjoint()) > kProjectionTol)
    throw std::invalid_argument(std::string(which) + ": not hermitian within 1e-9");
  if (max_abs(p * p - p) > kProjectionTol)
    throw std::invalid_argument(std::string(which) + ": not idempotent within 1e-9");
}

// Unitary completion of a unit vector: columns 2..d span its orthogonal
// complement.  Householder QR of the single column does the job.
Eigen::MatrixXcd complement_basis(const Eigen::VectorXcd& xi) {
  const int d = static_cast<int>(xi.size());
  Eigen::MatrixXcd col(d, 1);
  col.col(0) = xi;
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(col);
  Eigen::MatrixXcd q = qr.householderQ();
  // The first column of q equals xi up to a unimodular phase; discard it.
  return q.rightCols(d - 1);
}

}  // namespace

OperatorModel::OperatorModel(Eigen::VectorXcd state,
                             std::map<std::string, Eigen::MatrixXcd> observables)
    : state_(std::move(state)), observables_(std::move(observables)) {
  const int d = static_cast<int>(state_.size());
  if (d < 1) throw std::invalid_argument("OperatorModel: dimension must be >= 1");
  if (d > kMaxDimension) throw std::invalid_argument("OperatorModel: dimension capped at 64");
  if (std::abs(state_.norm() - 1.0) > kStateTol)
    throw std::invalid_argument("OperatorModel: state vector must have unit norm");
  for (const auto& [name, obs] : observables_) {
    if (obs.rows() != d || obs.cols() != d)
      throw std::invalid_argument("OperatorModel: observable '" + name + "' has wrong shape");
    if (max_abs(obs - obs.adjoint()) > kHermitianTol)
      throw std::invalid_argument("OperatorModel: observable '" + name + "' is not hermitian");
  }
}

const Eigen::MatrixXcd& OperatorModel::observable(const std::string& name) const {
  auto it = observables_.find(name);
  if (it == observables_.end())
    throw std::invalid_argument("OperatorModel: unknown observable '" + name + "'");
  return it->second;
}

std::complex<double> OperatorModel::expectation(const Eigen::MatrixXcd& op) const {
  return state_.dot(op * state_);  // Eigen's dot conjugates its first argument
}

AtomicMeasure OperatorModel::distribution(const std::string& name) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(observable(name));
  if (es.info() != Eigen::Success)
    throw NumericalFailure("OperatorModel::distribution: eigensolver failed");
  std::vector<Atom> atoms;
  for (int i = 0; i < dimension(); ++i) {
    const double mass = std::norm(es.eigenvectors().col(i).dot(state_));
    atoms.push_back({es.eigenvalues()(i), mass});
  }
  return AtomicMeasure::from_clustered(std::move(atoms), kEigenClusterTol);
}

BooleanEmbedding::BooleanEmbedding(OperatorModel combined, Eigen::MatrixXcd va,
                                   Eigen::MatrixXcd vb, Eigen::MatrixXcd xa, Eigen::MatrixXcd xb,
                                   std::string na, std::string nb, int da, int db)
    : combined_(std::move(combined)),
      isometry_a_(std::move(va)),
      isometry_b_(std::move(vb)),
      original_a_(std::move(xa)),
      original_b_(std::move(xb)),
      name_a_(std::move(na)),
      name_b_(std::move(nb)),
      dim_a_(da),
      dim_b_(db) {}

const Eigen::MatrixXcd& BooleanEmbedding::embedded(Side s) const {
  return combined_.observable(name(s));
}

BooleanEmbedding boolean_embed(const OperatorModel& a, const OperatorModel& b) {
  if (a.observables().size() != 1 || b.observables().size() != 1)
    throw std::invalid_argument("boolean_embed: each model must carry exactly one observable");
  const std::string name_a = a.observables().begin()->first;
  const std::string name_b = b.observables().begin()->first;
  if (name_a == name_b)
    throw std::invalid_argument("boolean_embed: observable names must differ");

  const int da = a.dimension();
  const int db = b.dimension();
  const int d = da + db - 1;
  if (d > kMaxDimension) throw std::invalid_argument("boolean_embed: combined dimension over 64");

  // Combined basis: (complement of xi_a) ++ (complement of xi_b) ++ xi.
  Eigen::VectorXcd xi = Eigen::VectorXcd::Zero(d);
  xi(d - 1) = 1.0;

  // V = sum_k e_{block+k} b_k^* + xi xi_orig^*: the complement rides along
  // identically into its block and the state lands on xi.
  Eigen::MatrixXcd va = Eigen::MatrixXcd::Zero(d, da);
  if (da > 1) {
    const Eigen::MatrixXcd basis_a = complement_basis(a.state());
    for (int k = 0; k < da - 1; ++k) va.row(k) = basis_a.col(k).adjoint();
  }
  va.row(d - 1) = a.state().adjoint();

  Eigen::MatrixXcd vb = Eigen::MatrixXcd::Zero(d, db);
  if (db > 1) {
    const Eigen::MatrixXcd basis_b = complement_basis(b.state());
    for (int k = 0; k < db - 1; ++k) vb.row(da - 1 + k) = basis_b.col(k).adjoint();
  }
  vb.row(d - 1) = b.state().adjoint();

  const Eigen::MatrixXcd xa = a.observables().begin()->second;
  const Eigen::MatrixXcd xb = b.observables().begin()->second;
  std::map<std::string, Eigen::MatrixXcd> observables;
  observables.emplace(name_a, va * xa * va.adjoint());
  observables.emplace(name_b, vb * xb * vb.adjoint());
  OperatorModel combined(xi, std::move(observables));
  return BooleanEmbedding(std::move(combined), std::move(va), std::move(vb), xa, xb, name_a,
                          name_b, da, db);
}

Eigen::MatrixXcd spectral_scale(const OperatorModel& model, const std::string& name, double t) {
  const Eigen::MatrixXcd& obs = model.observable(name);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(obs);
  if (es.info() != Eigen::Success)
    throw NumericalFailure("spectral_scale: eigensolver failed");
  const int d = model.dimension();
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    if (es.eigenvalues()(i) <= t + kScaleSlack)
      proj += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  return proj;
}

namespace {

Eigen::MatrixXcd scale_of_matrix(const Eigen::MatrixXcd& obs, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(obs);
  if (es.info() != Eigen::Success)
    throw NumericalFailure("spectral scale: eigensolver failed");
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(obs.rows(), obs.cols());
  for (int i = 0; i < obs.rows(); ++i)
    if (es.eigenvalues()(i) <= t + kScaleSlack)
      proj += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  return proj;
}

// Projection onto the other side's complement block inside the combined
// space: for side A that is the B-block, and vice versa.
Eigen::MatrixXcd other_block_projection(const BooleanEmbedding& emb, BooleanEmbedding::Side side) {
  const int d = emb.combined().dimension();
  const int da = emb.original_dimension(BooleanEmbedding::Side::A);
  const int db = emb.original_dimension(BooleanEmbedding::Side::B);
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(d, d);
  if (side == BooleanEmbedding::Side::A) {
    for (int k = 0; k < db - 1; ++k) proj(da - 1 + k, da - 1 + k) = 1.0;
  } else {
    for (int k = 0; k < da - 1; ++k) proj(k, k) = 1.0;
  }
  return proj;
}

}  // namespace

Eigen::MatrixXcd embedded_scale_nonneg(const BooleanEmbedding& emb, BooleanEmbedding::Side side,
                                       double t) {
  if (t < 0.0) throw std::invalid_argument("embedded_scale_nonneg: t must be >= 0");
  const Eigen::MatrixXcd& original = emb.original(side);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(original);
  if (es.info() != Eigen::Success)
    throw NumericalFailure("embedded_scale_nonneg: eigensolver failed");
  if (es.eigenvalues()(0) < -1e-10)
    throw std::invalid_argument(
        "embedded_scale_nonneg: original observable must be positive semidefinite");
  const Eigen::MatrixXcd& v = emb.isometry(side);
  return v * scale_of_matrix(original, t) * v.adjoint() + other_block_projection(emb, side);
}

Eigen::MatrixXcd embedded_scale_signed(const BooleanEmbedding& emb, BooleanEmbedding::Side side,
                                       double t) {
  const Eigen::MatrixXcd& v = emb.isometry(side);
  const Eigen::MatrixXcd conjugated = v * scale_of_matrix(emb.original(side), t) * v.adjoint();
  if (t < 0.0) return conjugated;
  return conjugated + other_block_projection(emb, side);
}

Eigen::MatrixXcd projection_meet(const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& q) {
  check_projection(p, "projection_meet: P");
  check_projection(q, "projection_meet: Q");
  if (p.rows() != q.rows())
    throw std::invalid_argument("projection_meet: dimension mismatch");
  const int d = static_cast<int>(p.rows());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((id - p) + (id - q));
  if (es.info() != Eigen::Success)
    throw NumericalFailure("projection_meet: eigensolver failed");
  Eigen::MatrixXcd meet = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    if (es.eigenvalues()(i) <= kMeetNullTol)
      meet += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  return meet;
}

std::vector<std::pair<double, double>> spectral_max_distribution(const BooleanEmbedding& emb,
                                                                 const EvaluationGrid& grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(grid.size());
  const Eigen::VectorXcd& xi = emb.combined().state();
  for (double t : grid) {
    if (t < 0.0) throw std::invalid_argument("spectral_max_distribution: grid points must be >= 0");
    const Eigen::MatrixXcd meet = projection_meet(embedded_scale_nonneg(emb, BooleanEmbedding::Side::A, t),
                                                  embedded_scale_nonneg(emb, BooleanEmbedding::Side::B, t));
    out.emplace_back(t, std::real(xi.dot(meet * xi)));
  }
  return out;
}

namespace {

double moment_impl(const OperatorModel& model, const std::vector<std::string>& word) {
  if (word.empty()) throw std::invalid_argument("moment: empty word");
  if (word.size() > 8) throw std::invalid_argument("moment: words capped at length 8");
  Eigen::VectorXcd v = model.state();
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = model.observable(*it) * v;
  const std::complex<double> phi = model.state().dot(v);
  const bool palindrome = std::equal(word.begin(), word.end(), word.rbegin());
  if (palindrome && std::abs(phi.imag()) > 1e-10)
    throw NumericalFailure("moment: hermitian word produced imaginary part " +
                           std::to_string(phi.imag()));
  return phi.real();
}

}  // namespace

double moment(const OperatorModel& model, const std::vector<std::string>& word) {
  return moment_impl(model, word);
}

double moment(const BooleanEmbedding& emb, const std::vector<std::string>& word) {
  return moment_impl(emb.combined(), word);
}

OperatorModel make_projection_model(double p, const std::string& name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("make_projection_model: p must lie in [0,1]");
  Eigen::VectorXcd xi(2);
  xi << 1.0, 0.0;
  Eigen::VectorXcd v(2);
  v << std::sqrt(1.0 - p), std::sqrt(p);
  Eigen::MatrixXcd proj = v * v.adjoint();
  return OperatorModel(xi, {{name, proj}});
}

OperatorModel make_diagonal_model(const std::vector<double>& values,
                                  const std::vector<double>& masses, const std::string& name) {
  if (values.size() != masses.size() || values.empty())
    throw std::invalid_argument("make_diagonal_model: values/masses size mismatch");
  const int d = static_cast<int>(values.size());
  Eigen::VectorXcd xi(d);
  Eigen::MatrixXcd obs = Eigen::MatrixXcd::Zero(d, d);
  double total = 0.0;
  for (double m : masses) {
    if (m < 0.0) throw std::invalid_argument("make_diagonal_model: negative mass");
    total += m;
  }
  if (total <= 0.0) throw std::invalid_argument("make_diagonal_model: zero total mass");
  for (int i = 0; i < d; ++i) {
    xi(i) = std::sqrt(masses[static_cast<std::size_t>(i)] / total);
    obs(i, i) = values[static_cast<std::size_t>(i)];
  }
  return OperatorModel(xi, {{name, obs}});
}

}  // namespace boolmax
