#ifndef THETAREP_PSERIES_HPP
#define THETAREP_PSERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "thetarep/brauer.hpp"

namespace thetarep {

/// The four entry shapes of a lambda tuple: x_i, x_i - 1, p-2-x_i, p-1-x_i.
enum class LambdaSym : std::uint8_t { X, XM1, PM2, PM1 };

const char* lambda_sym_name(LambdaSym s);
int eval_lambda_sym(LambdaSym s, int a, int p);

struct LambdaTuple {
  std::vector<LambdaSym> entries;

  /// S(lambda): the positions carrying p-1-x or x-1, as a bitmask.
  int subset_mask() const;
  int level() const;  // l(lambda) = |S(lambda)|
  std::vector<int> evaluate(const std::vector<int>& a, int p) const;

  bool operator==(const LambdaTuple& o) const { return entries == o.entries; }
};

/// All lambda tuples satisfying the cyclic adjacency constraints; exactly 2^f
/// of them, in bijection with subsets via S.
std::vector<LambdaTuple> enumerate_lambda(int f);

/// The unique lambda with S(lambda) = X, by the four-case closed form on
/// consecutive membership bits.
LambdaTuple lambda_for_subset(int mask, int f);

struct PSeries {
  long long S = 0;        // determinant pre-twist exponent
  long long r_prime = 0;  // induced character exponent, sum r'_i p^i
  std::vector<long long> r_prime_digits;
  std::string source;
};

struct JhFactor {
  int mask = 0;
  LambdaTuple lambda;
  std::vector<int> weight;
  std::optional<long long> twist;  // det exponent in [0, q-1); unset if undetermined
  std::string provenance;          // "identity", "socle-diagram", "character-oracle"
  bool dropped = false;            // a negative entry removed this factor
  long long dim = 0;
};

struct JhResult {
  long long r = 0;
  long long a = 0;  // r mod (q-1)
  std::vector<int> digits;
  bool generic = false;     // a not in {0, q-1}
  bool full_count = false;  // every a_i in [1, p-2], so all 2^f factors survive
  std::vector<JhFactor> factors;
  long long dim_sum = 0;  // over surviving factors
  bool char_checked = false;
  bool char_ok = false;  // factor characters sum to the induced character
};

/// Jordan-Hoelder factors of ind(det^0 (x) d^r): weights lambda(a) per subset,
/// negative entries dropped, det twists from the f=2 socle diagram or the
/// character oracle. Pass a prebuilt CharTable to amortize repeated calls.
JhResult jh_factors(int p, int f, long long r, const CharTable* table = nullptr,
                    bool verify_chars = true);

/// Socle layers of the quotient with socle tau: layer i holds the subsets X
/// with |X| = i + l(tau) containing S(tau).
std::vector<std::vector<int>> socle_layers(const LambdaTuple& tau, int f);

struct HypercubeGraph {
  int f = 0;
  std::vector<std::pair<int, int>> edges;  // subset masks, u inside v
  std::vector<PSeries> labels;             // by vertex mask
};

/// The directed hypercube on subsets of {0..f-1} with the principal-series
/// labels S = sum_{l in X} p^l and r'_i = r_i - j_i - p j_{i+1}.
HypercubeGraph hypercube_vx(int p, int f, const std::vector<long long>& r, int m_cap);

struct Diamond {
  // each entry: weight tuple plus raw det exponent
  std::pair<std::vector<int>, long long> top, left, right, bottom;
};

/// The four conjectural principal-series diamonds for f = 2; data only, the
/// arrangement is not a theorem.
std::vector<Diamond> conjectural_f2_grouping(int a0, int a1, int p);

}  // namespace thetarep

#endif
