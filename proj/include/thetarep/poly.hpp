#ifndef THETAREP_POLY_HPP
#define THETAREP_POLY_HPP

#include <vector>

#include "thetarep/repspace.hpp"

namespace thetarep {

/// Sparse multi-homogeneous polynomial: per-block degrees plus terms given by
/// x-exponents per block (y-exponents implied by the block degree).
struct MultiPoly {
  std::vector<int> deg;
  struct Term {
    std::vector<int> xexp;
    Elt coeff;
  };
  std::vector<Term> terms;
};

/// theta_i = x_i y_{i-1}^p - y_i x_{i-1}^p, indices mod f (so for f = 1 this
/// is x y^p - y x^p).
MultiPoly theta_poly(const FieldSpec& F, int i);

MultiPoly poly_mul(const FieldSpec& F, const MultiPoly& A, const MultiPoly& B);
MultiPoly poly_pow(const FieldSpec& F, const MultiPoly& A, int e);

/// prod_l theta_l^{j_l}
MultiPoly theta_product(const FieldSpec& F, const std::vector<int>& j);

/// The coefficient vector of P inside a space whose degrees equal P's.
Vec poly_to_vec(const RepSpace& space, const MultiPoly& P);

/// Coefficient vector of P * (monomial of src with the given x-exponents)
/// inside dst; requires dst.deg = src.deg + P.deg blockwise.
Vec multiply_monomial(const RepSpace& src, const RepSpace& dst, const MultiPoly& P,
                      const std::vector<int>& mono_xexp);

/// dst.dim x src.dim matrix of multiplication by P.
Mat mult_matrix(const RepSpace& src, const RepSpace& dst, const MultiPoly& P);

void check_degree_sum(const RepSpace& src, const RepSpace& dst, const MultiPoly& P);

}  // namespace thetarep

#endif
