#ifndef THETAREP_FILTRATION_HPP
#define THETAREP_FILTRATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "thetarep/brauer.hpp"
#include "thetarep/subspace.hpp"

namespace thetarep {

/// The cells of the filtration layer with top power ell, in filtration order:
/// rows bottom-up (level descending), within a row grouped by the first block
/// carrying the top power, descending lexicographically inside a group.
std::vector<std::vector<int>> layer_cells(int ell, int f);

struct CellReport {
  std::vector<int> j;
  int layer = 0;  // ell: the cell lives in V^(ell)/V^(ell+1)
  int level = 0;  // row index n within the layer
  long long S = 0;
  std::vector<long long> r_prime;
  long long r_prime_int = 0;
  long long subquot_dim = 0;     // successive quotient in the M_j chain
  long long iso_quot_dim = -1;   // dim <P>/<P theta_i union>, when computed
  bool dims_agree = true;
  bool kernel_ok = true;   // kernel of the multiplication map is V_{r'}^*
  bool char_ok = true;     // module character equals the induced character
  bool checked_kernel = false;
  bool checked_char = false;

  bool pass(long long q) const {
    return subquot_dim == q + 1 && dims_agree && kernel_ok && char_ok;
  }
};

struct FiltrationResult {
  std::vector<int> r;
  int m = 0;
  long long total_dim = 0;
  long long expected_total = 0;  // (m+1)^f (q+1)
  std::vector<CellReport> cells;

  bool pass(long long q) const {
    if (total_dim != expected_total) return false;
    for (const auto& c : cells)
      if (!c.pass(q)) return false;
    return true;
  }
};

struct FiltrationOptions {
  bool check_kernels = false;
  bool check_characters = false;
  bool force = false;  // skip the r_i >= m + mq + q bound
};

/// Materializes the theta filtration of V_r/V_r^{(m+1)} layer by layer and
/// measures every successive sub-quotient exactly.
FiltrationResult theta_filtration(const FieldSpec& F, const std::vector<int>& r, int m,
                                  const FiltrationOptions& opt = {});

struct Iso1Report {
  std::vector<int> j;
  long long S = 0;
  std::vector<long long> r_prime;
  long long r_prime_int = 0;
  long long quot_dim = 0;
  long long expected_dim = 0;  // q + 1
  bool kernel_ok = false;
  bool char_ok = false;
  bool pass() const { return quot_dim == expected_dim && kernel_ok && char_ok; }
};

/// Checks that <prod theta^j> / <union of prod theta^j * theta_i> is the
/// principal series ind(det^S (x) d^{r'}): quotient dimension, kernel of the
/// multiplication map, and exact Brauer character equality.
Iso1Report verify_iso1(const FieldSpec& F, const std::vector<int>& r, const std::vector<int>& j);

/// Both sides of the intersection identity
///   <prod theta_i^m> cap <theta_0^{m+1}, ...> = <union_l prod_{i != l}
///   theta_i^m * theta_l^{m+1}>,
/// built independently; true when they agree as subspaces.
bool verify_intersection(const FieldSpec& F, const std::vector<int>& r, int m);

struct SesReport {
  bool exact = false;        // image of the injection equals the kernel of mu
  bool surjective = false;   // mu onto
  bool injective = false;    // the twisted injection has full rank
  bool split = false;        // an equivariant section of mu exists
  bool lucas_predicts_split = false;
  bool equivariance_ok = false;  // spot-checked on random elements
  bool pass() const {
    return exact && surjective && injective && equivariance_ok &&
           split == lucas_predicts_split;
  }
};

/// Exactness and splitting of
///   0 -> (m - e_i)(x)(n_i - 1)e_i (x) det^{p^i} -> m (x) n_i e_i -> m + n_i e_i -> 0
/// on explicit monomial bases, with the equivariant section solved as an
/// exact linear system over F_q.
SesReport verify_ses(const FieldSpec& F, const std::vector<int>& m, int block, int n_i,
                     unsigned long long seed = 12345);

struct ProjectiveReport {
  long long rank = 0;
  long long target_dim = 0;
  bool equivariance_ok = false;
  std::vector<int> target;
  bool pass() const { return rank == target_dim && equivariance_ok; }
};

/// Rank and equivariance of the composition of the Frobenius rotation with
/// the product map onto the rotated weight ((m_{i+k}+1)p^k - 1, ...).
ProjectiveReport verify_projective(const FieldSpec& F, const std::vector<int>& m, int k,
                                   unsigned long long seed = 12345);

}  // namespace thetarep

#endif
