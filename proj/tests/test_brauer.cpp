#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "thetarep/brauer.hpp"
#include "thetarep/filtration.hpp"

using namespace thetarep;

namespace {

long long element_order(const FieldSpec& F, const GroupElement& g) {
  GroupElement cur = g;
  long long n = 1;
  GroupElement id = identity_element(F);
  while (!(cur == id)) {
    cur = group_mul(F, cur, g);
    ++n;
  }
  return n;
}

// Brute-force p-regular conjugacy classes over the full group.
long long brute_force_pregular_count(const FieldSpec& F) {
  auto all = all_invertible(F);
  std::set<GroupElement> seen;
  long long classes = 0;
  for (const auto& g : all) {
    if (seen.count(g)) continue;
    if (element_order(F, g) % F.p() == 0) continue;
    ++classes;
    for (const auto& h : all) seen.insert(group_mul(F, group_mul(F, h, g), group_inv(F, h)));
  }
  return classes;
}

bool conjugate_in(const FieldSpec& F, const GroupElement& g, const GroupElement& h,
                  const std::vector<GroupElement>& all) {
  for (const auto& x : all)
    if (group_mul(F, group_mul(F, x, g), group_inv(F, x)) == h) return true;
  return false;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_poly(8) == std::vector<long long>{1, 0, 0, 0, 1});  // x^4 + 1
  auto phi80 = cyclotomic_poly(80);
  CHECK(phi80.size() == 33);  // degree phi(80) = 32

  // Phi_80 divides x^80 - 1 exactly: multiply by the cofactor product
  std::vector<long long> prod = {1};
  for (long long d = 1; d <= 80; ++d) {
    if (80 % d != 0) continue;
    auto phi = cyclotomic_poly(d);
    std::vector<long long> next(prod.size() + phi.size() - 1, 0);
    for (size_t i = 0; i < prod.size(); ++i)
      for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
    prod = next;
  }
  std::vector<long long> want(81, 0);
  want[0] = -1;
  want[80] = 1;
  CHECK(prod == want);
}

TEST_CASE("cyclotomic ring: zeta relations") {
  CycRing R(8);
  CHECK(R.zeta(8) == R.integer(1));
  CHECK(R.zeta(4) == R.scale(R.integer(1), -1));  // zeta^4 = -1 mod x^4+1
  // Phi_8(zeta) = 0
  CycInt val = R.add(R.mul(R.zeta(1), R.mul(R.zeta(1), R.mul(R.zeta(1), R.zeta(1)))), R.integer(1));
  CHECK(val.is_zero());
  CHECK(R.mul(R.zeta(3), R.zeta(7)) == R.zeta(2));
}

TEST_CASE("p-regular class count matches brute force for tiny q") {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    FieldSpec F = FieldSpec::build(p, f);
    auto classes = pregular_classes(F);
    CHECK(static_cast<long long>(classes.size()) == F.q() * (F.q() - 1));
    CHECK(brute_force_pregular_count(F) == static_cast<long long>(classes.size()));

    // representatives are p-regular and pairwise non-conjugate
    auto all = all_invertible(F);
    for (size_t i = 0; i < classes.size(); ++i) {
      CHECK(element_order(F, classes[i].rep) % F.p() != 0);
      for (size_t j = i + 1; j < classes.size(); ++j)
        CHECK_FALSE(conjugate_in(F, classes[i].rep, classes[j].rep, all));
    }
  }
}

TEST_CASE("class count formula for larger q") {
  CHECK(pregular_classes(FieldSpec::build(3, 2)).size() == 72);  // q = 9
  CHECK(pregular_classes(FieldSpec::build(5, 1)).size() == 20);
  CHECK(pregular_classes(FieldSpec::build(7, 1)).size() == 42);
}

TEST_CASE("weight character at the identity is the dimension") {
  FieldSpec F = FieldSpec::build(5, 2);
  CharTable T(F);
  const PRegClass& id = T.classes().front();
  CHECK(id.kind == PRegClass::Kind::Central);
  CHECK(id.k1 == 0);
  TensorTerm t{{{2, 1}, {1, 3}}, 7};
  CHECK(T.weight_char(t, id) == T.ring().integer(t.dim()));
}

TEST_CASE("central class: scalar matrix scales every monomial") {
  FieldSpec F = FieldSpec::build(5, 1);
  CharTable T(F);
  for (const auto& c : T.classes()) {
    if (c.kind != PRegClass::Kind::Central) continue;
    TensorTerm t{{{3}}, 2};
    // dim * zeta^{(sum m_i p^i + 2e) dlog a}
    long long n = T.ring().n();
    CycInt want = T.ring().scale(T.ring().zeta((3 + 2 * 2) * c.k1 % n), 4);
    CHECK(T.weight_char(t, c) == want);
  }
}

TEST_CASE("decomposition character oracle: p=5, (1)(x)(2)") {
  FieldSpec F = FieldSpec::build(5, 1);
  CharTable T(F);
  WeightAlgebra W(5, 1);
  WeightSum lhs = W.normalize({TensorTerm{{{1}, {2}}, 0}});
  WeightSum rhs = W.decompose({1}, {2}).decomposed;  // (3) (+) (1)(x)det
  CHECK(T.rows_equal(T.weight_char_row(lhs), T.weight_char_row(rhs)));
}

TEST_CASE("characters of every dispatcher example agree across all classes") {
  struct Inst {
    int p, f;
    std::vector<int> m, n;
  };
  std::vector<Inst> insts = {
      {5, 1, {1}, {2}}, {5, 1, {2}, {3}},     {3, 1, {2}, {2}},     {3, 1, {1}, {5}},
      {5, 2, {2, 1}, {1, 1}}, {7, 2, {1, 1}, {2, 2}}, {3, 2, {1, 1}, {2, 2}},
      {5, 2, {1, 2}, {1, 3}}, {3, 2, {1, 2}, {2, 2}}, {7, 2, {2, 3}, {1, 1}},
      {3, 1, {2}, {4}},
  };
  for (const auto& I : insts) {
    FieldSpec F = FieldSpec::build(I.p, I.f);
    CharTable T(F);
    WeightAlgebra W(I.p, I.f);
    WeightSum lhs = W.normalize({TensorTerm{{I.m, I.n}, 0}});
    DecomposeResult r = W.decompose(I.m, I.n);
    WeightSum rhs = r.decomposed;
    for (const auto& t : r.residual) rhs.terms.push_back(t);
    CHECK(T.rows_equal(T.weight_char_row(lhs), T.weight_char_row(rhs)));
    CHECK(lhs.dim() == rhs.dim());
  }
}

TEST_CASE("module character of the full space matches the symbolic weight") {
  FieldSpec F = FieldSpec::build(3, 2);
  CharTable T(F);
  RepSpace V(F, {2, 2});
  Subspace full = Subspace::full(V);
  Subspace zero(V);
  auto lhs = T.module_char_row(full, zero);
  auto rhs = T.weight_char_row(WeightSum{{TensorTerm{{{2, 2}}, 0}}});
  CHECK(T.rows_equal(lhs, rhs));
}

TEST_CASE("module character demands stability") {
  FieldSpec F = FieldSpec::build(3, 1);
  CharTable T(F);
  RepSpace V(F, {2});
  Mat one_mono(1, V.dim());
  one_mono.at(0, V.index_of({2})) = 1;  // x^2 alone is not a submodule
  Subspace S = Subspace::span(V, std::move(one_mono));
  CHECK_THROWS_WITH_AS(T.module_char_row(S, Subspace(V)), doctest::Contains("NotStable"), Error);
}

TEST_CASE("induced character values") {
  FieldSpec F = FieldSpec::build(3, 2);
  CharTable T(F);
  for (const auto& c : T.classes()) {
    CycInt v = T.induced_char(4, 15 + 9 * 15, c);
    if (c.kind == PRegClass::Kind::Nonsplit) CHECK(v.is_zero());
    if (c.k1 == 0 && c.k2 == 0) CHECK(v == T.ring().integer(10));  // identity -> q+1
  }
}

TEST_CASE("quotient module character equals the induced character (f=1 cell)") {
  // V_9 / <theta^2> splits into the cells <1>/<theta> and <theta>/<theta^2>
  FieldSpec F = FieldSpec::build(3, 1);
  CharTable T(F);
  RepSpace V(F, {9});
  Subspace num = multiples_subspace(V, theta_product(F, {1}));
  Subspace den = multiples_subspace(V, theta_product(F, {2}));
  auto lhs = T.module_char_row(num, den);
  auto rhs = T.induced_char_row(1, 9 - 1 - 3);
  CHECK(T.rows_equal(lhs, rhs));

  Subspace fullV = Subspace::full(V);
  auto top = T.module_char_row(fullV, num);
  auto top_want = T.induced_char_row(0, 9);
  CHECK(T.rows_equal(top, top_want));
}

TEST_CASE("solve_det_twist basics") {
  FieldSpec F = FieldSpec::build(7, 2);
  CharTable T(F);
  // residual equal to the untwisted weight itself recovers e = 0
  auto row = T.weight_char_row(WeightSum{{TensorTerm{{{2, 3}}, 0}}});
  auto sol = T.solve_det_twist({2, 3}, row);
  REQUIRE(sol.unique().has_value());
  CHECK(*sol.unique() == 0);
}
