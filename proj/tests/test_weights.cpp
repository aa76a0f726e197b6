#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "thetarep/weights.hpp"

using namespace thetarep;

namespace {

// Independent binomial oracle: exact Pascal triangle over long long.
long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<long long> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

TensorTerm term(std::vector<std::vector<int>> factors, long long det = 0) {
  return TensorTerm{std::move(factors), det};
}

}  // namespace

TEST_CASE("lucas_coprime against direct binomials") {
  CHECK(lucas_coprime(5, 3, 1));        // C(3,1) = 3
  CHECK_FALSE(lucas_coprime(5, 5, 1));  // C(5,1) = 5
  CHECK(lucas_coprime(3, 7, 3));        // C(7,3) = 35, not divisible by 3
  CHECK(binom(7, 3) % 3 != 0);
  CHECK_FALSE(lucas_coprime(3, 4, 2));  // C(4,2) = 6
  CHECK(binom(4, 2) % 3 == 0);
  CHECK_THROWS_AS(lucas_coprime(3, 2, 5), Error);

  // exhaustive cross-check for small n
  for (int p : {2, 3, 5, 7})
    for (int n = 0; n <= 20; ++n)
      for (int k = 0; k <= n; ++k) CHECK(lucas_coprime(p, n, k) == (binom(n, k) % p != 0));
}

TEST_CASE("split_step examples") {
  WeightAlgebra W1(5, 1);
  CHECK(W1.equal(W1.split_step({1}, 0, 2), W1.normalize({term({{3}}), term({{1}}, 1)})));

  WeightAlgebra W2(5, 2);
  CHECK(W2.equal(W2.split_step({2, 1}, 0, 1),
                 W2.normalize({term({{3, 1}}), term({{1, 1}}, 1)})));

  CHECK_THROWS_AS(W1.split_step({2}, 0, 3), NotSplitError);  // C(5,2) = 10, 5 | 10
  try {
    W1.split_step({2}, 0, 3);
  } catch (const NotSplitError& e) {
    CHECK(e.blocks() == std::vector<int>{0});
  }
  CHECK(binom(5, 2) % 5 == 0);

  // dimension preserved
  WeightSum s = W2.split_step({2, 1}, 0, 1);
  CHECK(s.dim() == 3LL * 2 * 2);
}

TEST_CASE("cg_general examples") {
  WeightAlgebra W(5, 2);
  WeightSum got = W.cg_general({2, 1}, {1, 1});
  WeightSum want = W.normalize({
      term({{1, 0}}, 6),
      term({{3, 0}}, 5),
      term({{1, 2}}, 1),
      term({{3, 2}}, 0),
  });
  CHECK(W.equal(got, want));
  CHECK(got.dim() == 6LL * 4);

  // tensor with the trivial representation
  WeightSum triv = W.cg_general({2, 1}, {0, 0});
  CHECK(W.equal(triv, W.normalize({term({{2, 1}})})));

  WeightAlgebra W7(7, 2);
  WeightSum four = W7.cg_general({1, 1}, {2, 2});
  CHECK(four.terms.size() == 4);
  CHECK(four.dim() == 4LL * 9);

  // offending index list
  try {
    WeightAlgebra W3(3, 2);
    W3.cg_general({2, 1}, {2, 1});
    CHECK(false);
  } catch (const NotSplitError& e) {
    CHECK(e.blocks() == std::vector<int>{0});  // C(4,2) = 6 divisible by 3
  }
}

TEST_CASE("cg_small examples") {
  WeightAlgebra W(7, 2);
  WeightSum got = W.cg_small({1, 1}, {2, 2});
  WeightSum want = W.normalize({
      term({{3, 3}}, 0),
      term({{3, 1}}, 7),
      term({{1, 3}}, 1),
      term({{1, 1}}, 8),
  });
  CHECK(W.equal(got, want));
  CHECK(got.dim() == 4LL * 9);

  CHECK(W.equal(W.cg_small({0, 0}, {2, 2}), W.normalize({term({{2, 2}})})));

  WeightAlgebra W5(5, 1);
  CHECK(W5.equal(W5.cg_small({1}, {2}), W5.split_step({1}, 0, 2)));

  CHECK_THROWS_AS(W.cg_small({3, 3}, {4, 4}), Error);  // sums exceed p-1
}

TEST_CASE("cg_large examples") {
  WeightAlgebra W(5, 1);
  WeightSum got = W.cg_large({2}, {3});
  // (p-m-2)(x)(p-n-2)(x)det^{m+n+2-p} (+) (m+n+1-p)(x)(p-1)
  WeightSum want = W.normalize({term({{1}, {0}}, 2), term({{1}, {4}})});
  CHECK(W.equal(got, want));
  CHECK(got.dim() == 3LL * 4);
  CHECK(got.dim() == 2 * 1 + 2 * 5);

  WeightAlgebra W3(3, 2);
  WeightSum g2 = W3.cg_large({1, 1}, {2, 2});
  // three of the four raw terms are zero; the rule is a tautology here
  CHECK(W3.equal(g2, W3.normalize({term({{1, 1}, {2, 2}})})));
  CHECK(g2.dim() == 36);
}

TEST_CASE("cg_cross_f2 low-high example") {
  WeightAlgebra W(5, 2);
  WeightSum got = W.cg_cross_f2({1, 2}, {1, 3}, WeightAlgebra::CrossMode::LowHigh);
  long long hi = 5 * (2 + 3 + 2 - 5);
  WeightSum want = W.normalize({
      term({{0, 1}, {0, 0}}, hi + 1),
      term({{2, 1}, {0, 0}}, hi),
      term({{0, 1}, {0, 4}}, 1),
      term({{2, 1}, {0, 4}}, 0),
  });
  CHECK(W.equal(got, want));
  CHECK(got.dim() == 6LL * 8);

  // det exponents {11, 10, 1, 0}
  std::vector<long long> dets;
  for (const auto& t : got.terms) dets.push_back(W.reduce_det(t.det));
  std::sort(dets.begin(), dets.end());
  CHECK(dets == std::vector<long long>{0, 1, 10, 11});

  CHECK_THROWS_AS(W.cg_cross_f2({1, 2}, {1, 3}, WeightAlgebra::CrossMode::HighLow), Error);
}

TEST_CASE("tensor_projective") {
  WeightAlgebra W(3, 2);
  CHECK(W.tensor_projective({1, 2}, 1).m == std::vector<int>{8, 5});
  CHECK(W.tensor_projective({1, 2}, 0).m == std::vector<int>{1, 2});
  WeightAlgebra W1(3, 1);
  CHECK(W1.tensor_projective({1}, 1).m == std::vector<int>{5});
  // dimension bookkeeping: prod(m_i+1) p^{kf} = prod((m_i+1)p^k)
  CHECK(W.tensor_projective({1, 2}, 1).dim() == 2LL * 3 * 9);
}

TEST_CASE("decompose dispatcher") {
  WeightAlgebra W(5, 2);
  DecomposeResult r = W.decompose({2, 1}, {1, 1});
  CHECK(r.complete());
  CHECK(W.equal(r.decomposed, W.cg_general({2, 1}, {1, 1})));
  for (const auto& t : r.decomposed.terms) CHECK(t.factors.size() == 1);

  DecomposeResult triv = W.decompose({2, 1}, {0, 0});
  CHECK(triv.complete());
  CHECK(W.equal(triv.decomposed, W.normalize({term({{2, 1}})})));

  // Steinberg match takes priority over everything else, so this pair
  // resolves even though C(4,2) is divisible by 3.
  WeightAlgebra W31(3, 1);
  DecomposeResult st = W31.decompose({2}, {2});
  CHECK(st.complete());
  CHECK(W31.equal(st.decomposed, W31.normalize({term({{8}})})));
  CHECK(st.decomposed.dim() == 9);

  // Steinberg match also resolves pairs whose binomial condition fails
  DecomposeResult st2 = W31.decompose({2}, {4});
  CHECK(st2.complete());
  CHECK(W31.equal(st2.decomposed, W31.normalize({term({{14}})})));

  // a pair no rule covers stays as residual: C(6,5) = 6 is divisible by 3
  DecomposeResult part = W31.decompose({1}, {5});
  CHECK_FALSE(part.complete());
  REQUIRE(part.residual.size() == 1);
  CHECK(part.residual[0].factors == std::vector<std::vector<int>>{{1}, {5}});
  CHECK(part.decomposed.terms.empty());

  // deep recursion: p=3, (1,1)(x)(2,2) hits the Steinberg rotation
  WeightAlgebra W32(3, 2);
  DecomposeResult big = W32.decompose({1, 1}, {2, 2});
  CHECK(big.complete());
  CHECK(W32.equal(big.decomposed, W32.normalize({term({{5, 5}})})));
}

TEST_CASE("dimension conservation across every rule") {
  WeightAlgebra W5(5, 1), W52(5, 2), W7(7, 2), W3(3, 2);
  auto dim_of = [](const std::vector<int>& t) {
    long long d = 1;
    for (int x : t) d *= x + 1;
    return d;
  };
  struct Case {
    WeightAlgebra* W;
    std::vector<int> m, n;
  };
  std::vector<Case> cases = {
      {&W5, {1}, {2}},  {&W5, {2}, {3}},      {&W52, {2, 1}, {1, 1}}, {&W7, {1, 1}, {2, 2}},
      {&W7, {2, 3}, {1, 1}}, {&W3, {1, 1}, {2, 2}}, {&W52, {1, 2}, {1, 3}}, {&W3, {1, 2}, {2, 2}},
  };
  for (auto& c : cases) {
    DecomposeResult r = c.W->decompose(c.m, c.n);
    long long total = r.decomposed.dim();
    for (const auto& t : r.residual) total += t.dim();
    CHECK(total == dim_of(c.m) * dim_of(c.n));
  }
}

TEST_CASE("rule agreement on overlapping preconditions") {
  // f = 1, m + n <= p-1: cg_small, cg_general and the split_step chain agree
  for (int p : {5, 7}) {
    WeightAlgebra W(p, 1);
    for (int m = 0; m <= p - 1; ++m)
      for (int n = m; m + n <= p - 1; ++n) {
        if (m < 1) continue;
        WeightSum small = W.cg_small({m}, {n});

        // one general step, then recurse on its product terms
        DecomposeResult general = W.decompose_terms(W.cg_general({m}, {n}).terms);
        REQUIRE(general.complete());
        CHECK(W.equal(small, general.decomposed));

        // explicit split_step chain: peel (m)(x)(n) one step at a time
        std::vector<TensorTerm> finished;
        std::vector<std::pair<std::pair<int, int>, long long>> stack = {{{m, n}, 0}};
        while (!stack.empty()) {
          auto [mn, det] = stack.back();
          stack.pop_back();
          auto [mm, nn] = mn;
          if (mm == 0 || nn == 0) {
            finished.push_back(term({{mm + nn}}, det));
            continue;
          }
          WeightSum step = W.split_step({std::min(mm, nn)}, 0, std::max(mm, nn));
          for (const auto& t : step.terms) {
            if (t.factors.size() == 1)
              finished.push_back(term(t.factors, det + t.det));
            else
              stack.push_back({{t.factors[0][0], t.factors[1][0]}, det + t.det});
          }
        }
        CHECK(W.equal(small, W.normalize(finished)));

        DecomposeResult chain = W.decompose({m}, {n});
        CHECK(chain.complete());
        CHECK(W.equal(small, chain.decomposed));
      }
  }
}

TEST_CASE("normalization is idempotent and det exponents reduce") {
  WeightAlgebra W(5, 2);
  WeightSum s = W.normalize({term({{1, 2}}, 100), term({{0, 0}, {1, 2}}, 100 - 24 * 3)});
  WeightSum again = W.normalize(s.terms);
  CHECK(W.equal(s, again));
  REQUIRE(s.terms.size() == 2);
  // both reduce to the same canonical key: same factors, same det mod 24
  CHECK(s.terms[0].factors == s.terms[1].factors);
  CHECK(W.reduce_det(s.terms[0].det) == W.reduce_det(s.terms[1].det));
  CHECK(W.reduce_det(100) == 100 % 24);
}

TEST_CASE("pretty printing uses weight (x) det notation") {
  WeightAlgebra W(5, 2);
  WeightSum s = W.cg_general({2, 1}, {1, 1});
  std::string txt = W.pretty(s);
  CHECK(txt.find("(3,2)") != std::string::npos);
  CHECK(txt.find("D^6") != std::string::npos);
  CHECK(W.pretty(W.normalize({term({{1, 2}}, 1)})) == "(1,2)(x)D");
}

TEST_CASE("randomized dimension preservation, all rules through dispatcher") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    int p = std::vector<int>{3, 5, 7}[rng() % 3];
    int f = 1 + static_cast<int>(rng() % 2);
    WeightAlgebra W(p, f);
    std::vector<int> m(f), n(f);
    for (int i = 0; i < f; ++i) {
      m[i] = static_cast<int>(rng() % p);
      n[i] = static_cast<int>(rng() % p);
    }
    DecomposeResult r = W.decompose(m, n);
    long long total = r.decomposed.dim();
    for (const auto& t : r.residual) total += t.dim();
    long long dm = 1, dn = 1;
    for (int x : m) dm *= x + 1;
    for (int x : n) dn *= x + 1;
    CHECK(total == dm * dn);
  }
}
