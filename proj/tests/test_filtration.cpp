#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thetarep/filtration.hpp"

using namespace thetarep;

TEST_CASE("layer cell enumeration order") {
  // level-1 row of the m=2, f=3 layer
  auto cells = layer_cells(2, 3);
  std::vector<std::vector<int>> level1;
  for (const auto& j : cells)
    if (j[0] + j[1] + j[2] == 3) level1.push_back(j);
  std::vector<std::vector<int>> want = {{2, 1, 0}, {2, 0, 1}, {1, 2, 0},
                                        {0, 2, 1}, {1, 0, 2}, {0, 1, 2}};
  CHECK(level1 == want);

  // bottom-up: the all-max tuple comes first
  CHECK(cells.front() == std::vector<int>{2, 2, 2});
  CHECK(static_cast<long long>(cells.size()) == 27 - 8);  // (m+1)^f - m^f
}

TEST_CASE("f=1 filtration of V_9, m=1") {
  FieldSpec F = FieldSpec::build(3, 1);
  FiltrationOptions opt;
  opt.check_kernels = true;
  opt.check_characters = true;
  FiltrationResult r = theta_filtration(F, {9}, 1, opt);
  CHECK(r.total_dim == 8);
  CHECK(r.expected_total == 8);
  REQUIRE(r.cells.size() == 2);
  for (const auto& c : r.cells) {
    CHECK(c.subquot_dim == 4);
    CHECK(c.dims_agree);
    CHECK(c.kernel_ok);
    CHECK(c.char_ok);
  }
  CHECK(r.pass(F.q()));
  // dim <theta^2> inside V_9
  RepSpace V(F, {9});
  CHECK(multiples_subspace(V, theta_product(F, {2})).dim() == 2);
}

TEST_CASE("f=2 filtration of V_(19,19), m=1") {
  FieldSpec F = FieldSpec::build(3, 2);
  FiltrationOptions opt;  // dimension pass only; deep checks live in acceptance
  FiltrationResult r = theta_filtration(F, {19, 19}, 1, opt);
  CHECK(r.total_dim == 40);
  CHECK(r.expected_total == 40);
  REQUIRE(r.cells.size() == 4);
  for (const auto& c : r.cells) {
    CHECK(c.subquot_dim == 10);
    CHECK(c.dims_agree);
  }
  // cell claims carry S = sum j_l p^l and r'_i = r_i - j_i - p j_{i+1}
  for (const auto& c : r.cells) {
    if (c.j == std::vector<int>{1, 1}) {
      CHECK(c.S == 4);
      CHECK(c.r_prime == std::vector<long long>{15, 15});
    }
  }
  CHECK_THROWS_WITH_AS(theta_filtration(F, {5, 5}, 1, {}), doctest::Contains("BoundViolated"),
                       Error);
}

TEST_CASE("verify_iso1 on the deepest (19,19) cell") {
  FieldSpec F = FieldSpec::build(3, 2);
  Iso1Report rep = verify_iso1(F, {19, 19}, {1, 1});
  CHECK(rep.S == 4);
  CHECK(rep.r_prime == std::vector<long long>{15, 15});
  CHECK(rep.quot_dim == 10);
  CHECK(rep.kernel_ok);
  CHECK(rep.char_ok);
  CHECK(rep.pass());
}

TEST_CASE("verify_iso1 surfaces the r' >= q hypothesis") {
  // f=2 instance where one r'_i drops below q
  FieldSpec F = FieldSpec::build(3, 2);
  CHECK_THROWS_WITH_AS(verify_iso1(F, {11, 11}, {1, 1}), doctest::Contains("BoundViolated"),
                       Error);
}

TEST_CASE("intersection identity") {
  FieldSpec F2 = FieldSpec::build(3, 2);
  CHECK(verify_intersection(F2, {19, 19}, 1));

  // f = 1 degenerate case: both sides are <theta^{m+1}>
  FieldSpec F1 = FieldSpec::build(3, 1);
  CHECK(verify_intersection(F1, {9}, 1));
}

TEST_CASE("ses exactness and splitting, f=1") {
  FieldSpec F5 = FieldSpec::build(5, 1);
  SesReport a = verify_ses(F5, {1}, 0, 2);  // C(3,1) = 3, splits
  CHECK(a.exact);
  CHECK(a.injective);
  CHECK(a.surjective);
  CHECK(a.equivariance_ok);
  CHECK(a.lucas_predicts_split);
  CHECK(a.split);
  CHECK(a.pass());

  FieldSpec F3 = FieldSpec::build(3, 1);
  SesReport b = verify_ses(F3, {2}, 0, 2);  // C(4,2) = 6, does not split
  CHECK(b.exact);
  CHECK(b.injective);
  CHECK(b.surjective);
  CHECK(b.equivariance_ok);
  CHECK_FALSE(b.lucas_predicts_split);
  CHECK_FALSE(b.split);
  CHECK(b.pass());
}

TEST_CASE("ses with Frobenius-twisted block, f=2") {
  FieldSpec F = FieldSpec::build(3, 2);
  SesReport r = verify_ses(F, {1, 1}, 1, 1);  // det^p twist on the sub; C(2,1) = 2
  CHECK(r.exact);
  CHECK(r.equivariance_ok);
  CHECK(r.lucas_predicts_split);
  CHECK(r.split);
  CHECK(r.pass());
}

TEST_CASE("projective tensor rank checks") {
  FieldSpec F2 = FieldSpec::build(3, 2);
  ProjectiveReport a = verify_projective(F2, {1, 2}, 1);
  CHECK(a.target == std::vector<int>{8, 5});
  CHECK(a.target_dim == 54);
  CHECK(a.rank == 54);
  CHECK(a.equivariance_ok);
  CHECK(a.pass());

  FieldSpec F1 = FieldSpec::build(3, 1);
  ProjectiveReport b = verify_projective(F1, {1}, 1);
  CHECK(b.target == std::vector<int>{5});
  CHECK(b.rank == 6);
  CHECK(b.pass());

  ProjectiveReport c = verify_projective(F1, {4}, 0);  // k = 0 is the identity case
  CHECK(c.target == std::vector<int>{4});
  CHECK(c.rank == 5);
  CHECK(c.pass());
}

TEST_CASE("iso3 dimension identity on a (19,19) instance") {
  // dim([V]/[W]) computed in the quotient equals
  // dim V - dim(W + V cap V^{(m+1)}) computed upstairs
  FieldSpec F = FieldSpec::build(3, 2);
  RepSpace A(F, {19, 19});
  Subspace V = multiples_subspace(A, theta_product(F, {1, 0}));
  Subspace W = multiples_subspace(A, theta_product(F, {1, 1}));
  Subspace Vmp = theta_span(A, {{2, 0}, {0, 2}});
  long long lhs = V.sum(Vmp).dim() - W.sum(Vmp).dim();  // dim [V] - dim [W]
  long long rhs = V.dim() - W.sum(V.intersect(Vmp)).dim();
  CHECK(lhs == rhs);
}
