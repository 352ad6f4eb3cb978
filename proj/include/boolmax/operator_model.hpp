#ifndef BOOLMAX_OPERATOR_MODEL_HPP
#define BOOLMAX_OPERATOR_MODEL_HPP

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "boolmax/atomic_measure.hpp"
#include "boolmax/grid.hpp"

namespace boolmax {

// A finite-dimensional Hilbert space with a distinguished unit state vector
// and named hermitian matrices as noncommutative random variables.  The
// expectation functional is phi(T) = <T xi, xi>.
//
// Everything here is a desk-scale oracle: dimensions are capped at 64 and
// all eigenproblems are dense hermitian.
class OperatorModel {
 public:
  OperatorModel(Eigen::VectorXcd state,
                std::map<std::string, Eigen::MatrixXcd> observables);

  int dimension() const noexcept { return static_cast<int>(state_.size()); }
  const Eigen::VectorXcd& state() const noexcept { return state_; }
  const std::map<std::string, Eigen::MatrixXcd>& observables() const noexcept {
    return observables_;
  }
  const Eigen::MatrixXcd& observable(const std::string& name) const;

  std::complex<double> expectation(const Eigen::MatrixXcd& op) const;

  // Spectral measure of a named observable with respect to the state:
  // atoms at eigenvalues (clustered within 1e-8), masses |<v, xi>|^2.
  AtomicMeasure distribution(const std::string& name) const;

 private:
  Eigen::VectorXcd state_;
  std::map<std::string, Eigen::MatrixXcd> observables_;
};

// The two-variable Boolean product construction.  The combined space has
// ordered basis (basis of A's state complement, basis of B's state
// complement, combined state vector), and the isometries V_a, V_b map each
// original space in so that both state vectors land on the combined state.
// The embedded observables are V X V^*.
class BooleanEmbedding {
 public:
  enum class Side { A, B };

  const OperatorModel& combined() const noexcept { return combined_; }
  const std::string& name(Side s) const noexcept { return s == Side::A ? name_a_ : name_b_; }
  const Eigen::MatrixXcd& isometry(Side s) const noexcept {
    return s == Side::A ? isometry_a_ : isometry_b_;
  }
  const Eigen::MatrixXcd& original(Side s) const noexcept {
    return s == Side::A ? original_a_ : original_b_;
  }
  const Eigen::MatrixXcd& embedded(Side s) const;
  int original_dimension(Side s) const noexcept { return s == Side::A ? dim_a_ : dim_b_; }

  friend BooleanEmbedding boolean_embed(const OperatorModel& a, const OperatorModel& b);

 private:
  BooleanEmbedding(OperatorModel combined, Eigen::MatrixXcd va, Eigen::MatrixXcd vb,
                   Eigen::MatrixXcd xa, Eigen::MatrixXcd xb, std::string na, std::string nb,
                   int da, int db);

  OperatorModel combined_;
  Eigen::MatrixXcd isometry_a_, isometry_b_;
  Eigen::MatrixXcd original_a_, original_b_;
  std::string name_a_, name_b_;
  int dim_a_, dim_b_;
};

// Joins two single-observable models along their state vectors.  The models
// must each carry exactly one observable, under distinct names.
BooleanEmbedding boolean_embed(const OperatorModel& a, const OperatorModel& b);

// Orthogonal projection onto the eigenspaces of the named observable with
// eigenvalue <= t (slack 1e-12).
Eigen::MatrixXcd spectral_scale(const OperatorModel& model, const std::string& name, double t);

// Spectral scale of an embedded nonnegative observable at t >= 0, computed
// by the uniform formula V E(X; (-inf, t]) V^* + P_other-block.  Rejects
// originals with eigenvalues below -1e-10.
Eigen::MatrixXcd embedded_scale_nonneg(const BooleanEmbedding& emb, BooleanEmbedding::Side side,
                                       double t);

// Scale of an embedded observable for arbitrary t, including the t < 0
// branch where the block correction is absent.
Eigen::MatrixXcd embedded_scale_signed(const BooleanEmbedding& emb, BooleanEmbedding::Side side,
                                       double t);

// Orthogonal projection onto range(P) intersect range(Q), computed from the
// null space of (I-P) + (I-Q) (eigenvalues <= 1e-9).  Inputs must be
// hermitian idempotents within 1e-9.
Eigen::MatrixXcd projection_meet(const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& q);

// Distribution function of the spectral max of the two embedded (PSD)
// observables: t -> <(E_a(t) meet E_b(t)) xi, xi> over the grid.
std::vector<std::pair<double, double>> spectral_max_distribution(const BooleanEmbedding& emb,
                                                                 const EvaluationGrid& grid);

// phi(product of named observables, applied in the given order); words are
// capped at length 8.  The real part is returned; palindromic words (whose
// products are hermitian) are checked to have imaginary part <= 1e-10.
double moment(const OperatorModel& model, const std::vector<std::string>& word);
double moment(const BooleanEmbedding& emb, const std::vector<std::string>& word);

// Rank-1-complement model of a projection with phi(P) = 1 - p: the
// distribution function of P is p on [0,1) and 1 from 1 on.  A minimal
// two-dimensional model used by the closed-form projection sweeps.
OperatorModel make_projection_model(double p, const std::string& name);

// Model of a diagonal observable diag(values) with state amplitudes
// proportional to sqrt(masses).
OperatorModel make_diagonal_model(const std::vector<double>& values,
                                  const std::vector<double>& masses, const std::string& name);

}  // namespace boolmax

#endif  // BOOLMAX_OPERATOR_MODEL_HPP
