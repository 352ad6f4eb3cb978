#ifndef BOOLMAX_ATOMIC_MEASURE_HPP
#define BOOLMAX_ATOMIC_MEASURE_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace boolmax {

struct Atom {
  double location = 0.0;
  double mass = 0.0;
};

// A finitely supported probability measure: atoms sorted by location with
// strictly increasing locations and masses summing to 1.  Locations may be
// negative; modules that need support on [0, inf) check that themselves.
class AtomicMeasure {
 public:
  // Sorts, merges exactly-equal locations, validates mass > 0 per atom and
  // total mass 1 within 1e-12.
  explicit AtomicMeasure(std::vector<Atom> atoms);

  // Merges locations that agree within cluster_tol before construction, and
  // drops masses below 1e-12 (tiny negative residues are clamped first).
  // Used by the pole/residue and eigendecomposition recovery paths, whose
  // raw output carries rounding noise.
  static AtomicMeasure from_clustered(std::vector<Atom> atoms, double cluster_tol);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  // Raw k-th moment, sum of mass * location^k.
  double moment(int k) const;

  bool nonnegative_support() const noexcept;

 private:
  std::vector<Atom> atoms_;
};

// Point mass at zero, the identity of Boolean additive convolution.
AtomicMeasure delta_zero();

}  // namespace boolmax

#endif  // BOOLMAX_ATOMIC_MEASURE_HPP
