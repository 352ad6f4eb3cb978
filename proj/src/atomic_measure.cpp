#include "boolmax/atomic_measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boolmax {

namespace {

constexpr double kMassSumTol = 1e-12;
constexpr double kMassDropTol = 1e-12;

void sort_by_location(std::vector<Atom>& atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
}

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("AtomicMeasure: no atoms");
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.location)) throw std::invalid_argument("AtomicMeasure: non-finite location");
    if (!(a.mass > 0.0)) throw std::invalid_argument("AtomicMeasure: masses must be > 0");
  }
  sort_by_location(atoms);
  // Merge exact ties so locations are strictly increasing.
  for (const Atom& a : atoms) {
    if (!atoms_.empty() && atoms_.back().location == a.location)
      atoms_.back().mass += a.mass;
    else
      atoms_.push_back(a);
  }
  double total = 0.0;
  for (const Atom& a : atoms_) total += a.mass;
  if (std::abs(total - 1.0) > kMassSumTol)
    throw std::invalid_argument("AtomicMeasure: masses must sum to 1 within 1e-12");
}

AtomicMeasure AtomicMeasure::from_clustered(std::vector<Atom> atoms, double cluster_tol) {
  if (atoms.empty()) throw std::invalid_argument("AtomicMeasure: no atoms");
  sort_by_location(atoms);
  std::vector<Atom> merged;
  for (const Atom& a : atoms) {
    if (!merged.empty() && a.location - merged.back().location <= cluster_tol) {
      // Mass-weighted location keeps clustered roots where their bulk is.
      Atom& m = merged.back();
      const double w = m.mass + a.mass;
      if (w != 0.0) m.location = (m.location * m.mass + a.location * a.mass) / w;
      m.mass = w;
    } else {
      merged.push_back(a);
    }
  }
  std::vector<Atom> kept;
  for (Atom& a : merged) {
    if (a.mass < 0.0) a.mass = 0.0;  // clamp tiny negative residues
    if (a.mass >= kMassDropTol) kept.push_back(a);
  }
  if (kept.empty()) throw std::invalid_argument("AtomicMeasure: all masses negligible");
  // Rescale the rounding drift away so the class invariant holds exactly.
  double total = 0.0;
  for (const Atom& a : kept) total += a.mass;
  for (Atom& a : kept) a.mass /= total;
  return AtomicMeasure(std::move(kept));
}

double AtomicMeasure::moment(int k) const {
  double sum = 0.0;
  for (const Atom& a : atoms_) sum += a.mass * std::pow(a.location, k);
  return sum;
}

bool AtomicMeasure::nonnegative_support() const noexcept {
  return atoms_.front().location >= 0.0;
}

AtomicMeasure delta_zero() { return AtomicMeasure({{0.0, 1.0}}); }

}  // namespace boolmax
