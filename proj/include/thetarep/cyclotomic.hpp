#ifndef THETAREP_CYCLOTOMIC_HPP
#define THETAREP_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include "thetarep/errors.hpp"

namespace thetarep {

/// n-th cyclotomic polynomial, integer coefficients low-to-high, computed by
/// iterated exact division of x^n - 1 by the Phi_d for proper divisors d.
std::vector<long long> cyclotomic_poly(long long n);

/// An element of Z[zeta_n] in the canonical basis 1, zeta, ..., zeta^{deg-1}
/// modulo Phi_n. Equality is coefficient equality after reduction.
struct CycInt {
  std::vector<long long> c;

  bool operator==(const CycInt& o) const { return c == o.c; }
  bool operator!=(const CycInt& o) const { return !(*this == o); }
  bool is_zero() const {
    for (long long x : c)
      if (x) return false;
    return true;
  }
};

/// Arithmetic context Z[x]/Phi_n(x) with a power table for zeta^k, 0 <= k < n.
class CycRing {
public:
  explicit CycRing(long long n);

  long long n() const { return n_; }
  long long degree() const { return deg_; }
  const std::vector<long long>& phi() const { return phi_; }

  CycInt zero() const { return {std::vector<long long>(deg_, 0)}; }
  CycInt integer(long long v) const;
  CycInt zeta(long long k) const;  // zeta^k, k taken mod n

  CycInt add(const CycInt& a, const CycInt& b) const;
  CycInt sub(const CycInt& a, const CycInt& b) const;
  CycInt mul(const CycInt& a, const CycInt& b) const;
  CycInt scale(const CycInt& a, long long v) const;

private:
  std::vector<long long> reduce(std::vector<long long> poly) const;

  long long n_ = 0;
  long long deg_ = 0;
  std::vector<long long> phi_;
  std::vector<CycInt> zeta_pow_;  // zeta^k reduced, for k in [0, n)
};

}  // namespace thetarep

#endif
