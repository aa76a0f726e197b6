#ifndef THETAREP_WEIGHTS_HPP
#define THETAREP_WEIGHTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "thetarep/errors.hpp"

namespace thetarep {

/// A single weight (m_0,...,m_{f-1}) tensor det^e. Any negative entry makes
/// the weight the zero representation.
struct Weight {
  std::vector<int> m;
  long long det = 0;  // raw exponent; reduce mod q-1 for comparisons

  bool is_zero() const {
    for (int x : m)
      if (x < 0) return true;
    return false;
  }
  long long dim() const {
    if (is_zero()) return 0;
    long long d = 1;
    for (int x : m) d *= (x + 1);
    return d;
  }
};

/// A formal tensor product of weight tuples with one aggregate det exponent.
struct TensorTerm {
  std::vector<std::vector<int>> factors;
  long long det = 0;

  bool is_zero() const;
  long long dim() const;
};

/// A formal direct sum (multiset) of tensor terms, kept in canonical order.
struct WeightSum {
  std::vector<TensorTerm> terms;

  long long dim() const;
};

struct DecomposeResult {
  WeightSum decomposed;               // terms reduced to single weights
  std::vector<TensorTerm> residual;   // products no rewrite rule covers
  bool complete() const { return residual.empty(); }
};

/// True iff p does not divide binomial(n, k), by base-p digit comparison.
bool lucas_coprime(int p, long long n, long long k);

/// The symbolic Clebsch-Gordan calculus for GL_2(F_q), q = p^f.
/// All operations are pure; results are canonically normalized (zero terms
/// dropped, trivial all-zero factors absorbed, factors and terms sorted,
/// det exponents compared mod q-1 while the raw value is retained).
class WeightAlgebra {
public:
  WeightAlgebra(int p, int f);

  int p() const { return p_; }
  int f() const { return f_; }
  long long q() const { return q_; }
  long long det_order() const { return q_ - 1; }

  long long reduce_det(long long e) const;
  WeightSum normalize(std::vector<TensorTerm> terms) const;
  bool equal(const WeightSum& a, const WeightSum& b) const;

  /// One application of the single-block splitting identity on block i:
  ///   m (x) n_i e_i = (m - e_i)(x)(n_i - 1)e_i (x) det^{p^i}  (+)  (m + n_i e_i).
  /// Requires m_i, n_i >= 1 and p coprime to binomial(m_i + n_i, m_i).
  WeightSum split_step(const std::vector<int>& m, int block, int n_i) const;

  /// Full 2^f-term decomposition; requires the binomial condition in every
  /// block. Throws NotSplit listing the offending blocks.
  WeightSum cg_general(const std::vector<int>& m, const std::vector<int>& n) const;

  /// Small-weight rule: 0 <= m_i <= n_i <= p-1 and m_i + n_i <= p-1 for all i.
  WeightSum cg_small(const std::vector<int>& m, const std::vector<int>& n) const;

  /// Large-weight rule: 0 <= m_i <= n_i <= p-1 and p-2 <= m_i + n_i <= 2p-2.
  WeightSum cg_large(const std::vector<int>& m, const std::vector<int>& n) const;

  enum class CrossMode { LowHigh, HighLow };
  /// f = 2 mixed rule: one block in the small range, the other in the large.
  WeightSum cg_cross_f2(const std::vector<int>& m, const std::vector<int>& n,
                        CrossMode mode) const;

  /// m (x) (p^k - 1)(1,...,1): a single weight, the k-step rotation
  /// j -> (m_{j+k} + 1) p^k - 1.
  Weight tensor_projective(const std::vector<int>& m, int k) const;

  /// Rule dispatcher. Applies, in fixed priority, tensor_projective on exact
  /// match, cg_small, cg_large, cg_cross_f2, cg_general, then per-block
  /// splitting, recursing on multi-factor terms until every term is a single
  /// weight or no rule applies. Total and deterministic; whatever resists
  /// all rules is returned as residual.
  DecomposeResult decompose(const std::vector<int>& m, const std::vector<int>& n) const;
  DecomposeResult decompose_terms(std::vector<TensorTerm> seed) const;

  /// One rewrite step on a pair of weight tuples, or nullopt when no rule
  /// covers the pair (or a rule merely restates it).
  std::optional<WeightSum> try_pair_public(const std::vector<int>& a,
                                           const std::vector<int>& b) const {
    return try_pair(a, b);
  }

  std::string pretty(const TensorTerm& t) const;
  std::string pretty(const WeightSum& s) const;

private:
  std::optional<WeightSum> try_pair(const std::vector<int>& a, const std::vector<int>& b) const;
  std::optional<WeightSum> try_peel_block(const std::vector<int>& a,
                                          const std::vector<int>& b) const;
  TensorTerm canonical_term(TensorTerm t) const;

  int p_ = 0, f_ = 0;
  long long q_ = 0;
};

long long pow_ll(long long base, int exp);

}  // namespace thetarep

#endif
