#ifndef THETAREP_SUBSPACE_HPP
#define THETAREP_SUBSPACE_HPP

#include <vector>

#include "thetarep/poly.hpp"
#include "thetarep/repspace.hpp"

namespace thetarep {

/// A subspace of a RepSpace held as a reduced row-echelon basis, so equality
/// of subspaces is matrix equality.
class Subspace {
public:
  explicit Subspace(const RepSpace& ambient);  // zero subspace
  static Subspace span(const RepSpace& ambient, Mat rows);
  static Subspace full(const RepSpace& ambient);

  const RepSpace& ambient() const { return *ambient_; }
  long long dim() const { return rows_.rows; }
  const Mat& basis() const { return rows_; }
  const std::vector<long long>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;  // Zassenhaus block construction
  long long quotient_dim(const Subspace& denom) const;

  Vec reduce(Vec v) const;

private:
  void check_ambient(const Subspace& o) const;

  const RepSpace* ambient_;
  Mat rows_;
  std::vector<long long> pivots_;
};

/// Divisibility submodule <P> of dst, the image of multiplication by P.
Subspace multiples_subspace(const RepSpace& dst, const MultiPoly& P);

/// <P_1> + ... + <P_k> for theta exponent tuples js.
Subspace theta_span(const RepSpace& dst, const std::vector<std::vector<int>>& js);

/// Smallest generator-stable subspace containing the given vectors.
Subspace spin(const RepSpace& space, const std::vector<Vec>& seeds);

/// True when the subspace is fixed by every group generator.
bool is_generator_stable(const Subspace& S);

}  // namespace thetarep

#endif
