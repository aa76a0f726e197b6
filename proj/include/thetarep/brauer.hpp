#ifndef THETAREP_BRAUER_HPP
#define THETAREP_BRAUER_HPP

#include <optional>
#include <vector>

#include "thetarep/cyclotomic.hpp"
#include "thetarep/subspace.hpp"
#include "thetarep/weights.hpp"

namespace thetarep {

/// A p-regular (semisimple) conjugacy class of GL_2(F_q), identified by the
/// discrete logs of its eigenvalues with respect to the fixed generator of
/// F_{q^2}^x.
struct PRegClass {
  enum class Kind { Central, Split, Nonsplit };
  Kind kind;
  long long k1 = 0, k2 = 0;  // eigenvalue exponents; unordered for Split/Nonsplit
  GroupElement rep;
};

const char* class_kind_name(PRegClass::Kind k);

/// All q(q-1) p-regular classes: central aI, split diag(a,b), nonsplit
/// companion matrices of x^2 - Tx + N.
std::vector<PRegClass> pregular_classes(const FieldSpec& F);

/// Shared character context: the field tower together with Z[zeta_{q^2-1}].
class CharTable {
public:
  explicit CharTable(const FieldSpec& F);

  const FieldSpec& field() const { return *F_; }
  const CycRing& ring() const { return ring_; }
  const std::vector<PRegClass>& classes() const { return classes_; }

  /// Brauer character of a weight tuple (x) det^e: the lifted eigenvalue sum
  /// prod_i sum_k A^{k p^i} B^{(m_i - k) p^i} * (AB)^e.
  CycInt weight_char(const TensorTerm& t, const PRegClass& c) const;
  CycInt weight_char(const WeightSum& s, const PRegClass& c) const;

  /// Brauer character of the quotient N/D of generator-stable subspaces, by
  /// exact eigenvalue multiplicities of the class representative over F_{q^2}.
  CycInt module_char(const Subspace& numerator, const Subspace& denominator,
                     const PRegClass& c) const;

  /// Character of the induced module ind(det^S (x) d^{r'}): fixed-point sum
  /// over the projective line.
  CycInt induced_char(long long S, long long r_prime, const PRegClass& c) const;

  /// Characters across all classes.
  std::vector<CycInt> weight_char_row(const WeightSum& s) const;
  std::vector<CycInt> induced_char_row(long long S, long long r_prime) const;
  std::vector<CycInt> module_char_row(const Subspace& numerator,
                                      const Subspace& denominator) const;

  bool rows_equal(const std::vector<CycInt>& a, const std::vector<CycInt>& b) const;

  /// All det exponents e in [0, q-1) with weight_char(w (x) det^e) equal to
  /// the residual row; the unique twist when exactly one matches.
  struct TwistSolution {
    std::vector<long long> matches;
    std::optional<long long> unique() const {
      if (matches.size() == 1) return matches[0];
      return std::nullopt;
    }
  };
  TwistSolution solve_det_twist(const std::vector<int>& w,
                                const std::vector<CycInt>& residual) const;

private:
  const FieldSpec* F_;
  CycRing ring_;
  std::vector<PRegClass> classes_;
};

}  // namespace thetarep

#endif
