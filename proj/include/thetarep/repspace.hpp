#ifndef THETAREP_REPSPACE_HPP
#define THETAREP_REPSPACE_HPP

#include <tuple>
#include <vector>

#include "thetarep/gf.hpp"
#include "thetarep/linalg.hpp"

namespace thetarep {

/// The space of multi-homogeneous polynomials of multi-degree r over F_q,
/// with the basis of monomials prod x_i^{a_i} y_i^{r_i - a_i} indexed by the
/// mixed-radix bijection with block 0 least significant.
class RepSpace {
public:
  RepSpace(const FieldSpec& F, std::vector<int> r);

  const FieldSpec& field() const { return *F_; }
  const std::vector<int>& degrees() const { return r_; }
  int blocks() const { return static_cast<int>(r_.size()); }
  long long dim() const { return dim_; }
  long long stride(int block) const { return stride_[block]; }

  long long index_of(const std::vector<int>& xexp) const;
  std::vector<int> exps_of(long long index) const;

  bool same_space(const RepSpace& o) const;

  static constexpr long long kAmbientCap = 4096;

private:
  const FieldSpec* F_;
  std::vector<int> r_;
  long long dim_ = 1;
  std::vector<long long> stride_;
};

/// An element of GL_2(F_q), entries packed, row order (a b; c d).
struct GroupElement {
  Elt a = 0, b = 0, c = 0, d = 0;

  bool operator==(const GroupElement& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator<(const GroupElement& o) const {
    return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
  }
};

Elt det_of(const FieldSpec& F, const GroupElement& g);
GroupElement group_mul(const FieldSpec& F, const GroupElement& g, const GroupElement& h);
GroupElement group_inv(const FieldSpec& F, const GroupElement& g);
GroupElement identity_element(const FieldSpec& F);

/// Throws SingularMatrix when ad - bc = 0.
void check_invertible(const FieldSpec& F, const GroupElement& g);

/// Kronecker-structured action: one (r_i+1) x (r_i+1) substitution matrix per
/// block, built once by binomial expansion and applied blockwise, never
/// materializing the dim^2 matrix. This is the hot kernel.
class BlockAction {
public:
  BlockAction(const RepSpace& space, const GroupElement& g);

  Vec apply(const Vec& v) const;
  const Mat& block(int i) const { return blocks_[i]; }

private:
  const RepSpace* space_;
  std::vector<Mat> blocks_;
};

Vec act(const FieldSpec& F, const GroupElement& g, const Vec& v, const RepSpace& space);

/// diag(g, 1), the upper shear, and the swap; g a primitive root of F_q.
/// These generate GL_2(F_q).
std::vector<GroupElement> group_generators(const FieldSpec& F);

/// Every invertible 2x2 matrix over F_q; brute-force cross-checks only.
std::vector<GroupElement> all_invertible(const FieldSpec& F);

}  // namespace thetarep

#endif
