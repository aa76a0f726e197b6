#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "thetarep/gf.hpp"

using namespace thetarep;

namespace {

// Brute-force multiplicative order by repeated multiplication.
long long order_of(const SmallField& F, Elt a) {
  Elt one = F.from_int(1);
  Elt cur = a;
  long long n = 1;
  while (cur != one) {
    cur = F.mul(cur, a);
    ++n;
    if (n > static_cast<long long>(F.size())) return -1;
  }
  return n;
}

}  // namespace

TEST_CASE("field_build basic shapes") {
  FieldSpec F31 = FieldSpec::build(3, 1);
  CHECK(F31.q() == 3);
  CHECK(F31.q2() == 9);
  // smallest monic irreducible quadratic over F_3 is x^2 + 1
  CHECK(F31.q2_modulus() == std::vector<int>{1, 0, 1});
  CHECK(F31.q_modulus() == std::vector<int>{0, 1});

  FieldSpec F32 = FieldSpec::build(3, 2);
  CHECK(F32.q() == 9);
  CHECK(F32.q2() == 81);
  CHECK(order_of(F32.fq2(), F32.q2_generator().v) == 80);

  CHECK_THROWS_WITH_AS(FieldSpec::build(4, 1), doctest::Contains("NotPrime"), Error);
  CHECK_THROWS_AS(FieldSpec::build(257, 1), Error);  // 257^2 > 2^16
}

TEST_CASE("moduli are irreducible (no roots / trial division witness)") {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    FieldSpec F = FieldSpec::build(p, f);
    // No element of F_q is a root of q2_modulus (degree 2f > f).
    for (Elt a = 0; a < F.fq().size(); ++a) {
      Elt im = F.embed_q2_packed(a);
      CHECK(F.fq2().eval_fp_poly(F.q2_modulus(), im) != 0);
    }
  }
}

TEST_CASE("arith laws, exhaustive on small fields") {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 4}}) {
    FieldSpec FS = FieldSpec::build(p, f);
    const SmallField& F = FS.fq();
    if (F.size() > 16) continue;
    Elt one = F.from_int(1);
    for (Elt a = 0; a < F.size(); ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, one) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == one);
      for (Elt b = 0; b < F.size(); ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (Elt c = 0; c < F.size(); ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("arith laws, randomized on larger fields") {
  std::mt19937_64 rng(12345);
  for (auto [p, f] : std::vector<std::pair<int, int>>{{3, 2}, {5, 1}, {7, 1}, {2, 6}}) {
    FieldSpec FS = FieldSpec::build(p, f);
    const SmallField& F = FS.fq2();
    for (int t = 0; t < 1000; ++t) {
      Elt a = static_cast<Elt>(rng() % F.size());
      Elt b = static_cast<Elt>(rng() % F.size());
      Elt c = static_cast<Elt>(rng() % F.size());
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == F.from_int(1));
    }
  }
}

TEST_CASE("F_9 inverse and Frobenius identities") {
  FieldSpec FS = FieldSpec::build(3, 2);
  const SmallField& F9 = FS.fq();
  for (Elt x = 1; x < 9; ++x) CHECK(F9.mul(x, F9.inv(x)) == F9.from_int(1));
  for (Elt x = 0; x < 9; ++x) CHECK(F9.pow(x, 9) == x);  // Frobenius^2 = id on F_9

  const SmallField& F81 = FS.fq2();
  Elt g = FS.q2_generator().v;
  CHECK(F81.pow(g, 80) == F81.from_int(1));
  CHECK(F81.pow(g, 40) != F81.from_int(1));
}

TEST_CASE("frobenius iterates") {
  FieldSpec FS = FieldSpec::build(3, 2);
  // prime-subfield elements are fixed
  for (int n = 0; n < 3; ++n) {
    FieldElement a = {FieldTag::Q, FS.fq().from_int(n)};
    CHECK(FS.frobenius(a, 1) == a);
  }
  // order of Frobenius on F_9 is 2
  for (Elt x = 0; x < 9; ++x) {
    FieldElement a = {FieldTag::Q, x};
    CHECK(FS.frobenius(a, 2) == a);
    bool in_f3 = (FS.fq().coeffs(x)[1] == 0);
    if (!in_f3) CHECK(FS.frobenius(a, 1) != a);
  }
  // general agreement with pow(a, 3)
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    FieldElement a = {FieldTag::Q2, static_cast<Elt>(rng() % 81)};
    CHECK(FS.frobenius(a, 1) == FS.pow(a, 3));
  }
}

TEST_CASE("frobenius is a ring homomorphism") {
  FieldSpec FS = FieldSpec::build(3, 2);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    FieldElement a = {FieldTag::Q2, static_cast<Elt>(rng() % 81)};
    FieldElement b = {FieldTag::Q2, static_cast<Elt>(rng() % 81)};
    CHECK(FS.frobenius(FS.add(a, b), 1) == FS.add(FS.frobenius(a, 1), FS.frobenius(b, 1)));
    CHECK(FS.frobenius(FS.mul(a, b), 1) == FS.mul(FS.frobenius(a, 1), FS.frobenius(b, 1)));
  }
}

TEST_CASE("dlog: identity, base, exhaustive bijection") {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}, {7, 1}, {2, 2}}) {
    FieldSpec FS = FieldSpec::build(p, f);
    const SmallField& K = FS.fq2();
    FieldElement one = FS.one(FieldTag::Q2);
    CHECK(FS.dlog(one) == 0);
    CHECK(FS.dlog(FS.q2_generator()) == 1);
    CHECK_THROWS_AS(FS.dlog(FS.zero(FieldTag::Q2)), Error);

    std::set<long long> seen;
    for (Elt a = 1; a < K.size(); ++a) {
      long long e = FS.dlog({FieldTag::Q2, a});
      CHECK(e >= 0);
      CHECK(e < static_cast<long long>(K.size()) - 1);
      CHECK(FS.pow(FS.q2_generator(), e).v == a);
      seen.insert(e);
    }
    CHECK(seen.size() == K.size() - 1);  // bijection onto [0, q^2-1)
  }
}

TEST_CASE("embedding F_q -> F_q2 is a ring homomorphism fixing F_p") {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{3, 2}, {2, 2}, {5, 1}, {3, 1}}) {
    FieldSpec FS = FieldSpec::build(p, f);
    for (Elt a = 0; a < FS.fq().size(); ++a)
      for (Elt b = 0; b < FS.fq().size(); ++b) {
        FieldElement ea = FS.embed_q2({FieldTag::Q, a});
        FieldElement eb = FS.embed_q2({FieldTag::Q, b});
        CHECK(FS.embed_q2({FieldTag::Q, FS.fq().add(a, b)}) == FS.add(ea, eb));
        CHECK(FS.embed_q2({FieldTag::Q, FS.fq().mul(a, b)}) == FS.mul(ea, eb));
      }
    for (int n = 0; n < p; ++n) {
      FieldElement in_q = {FieldTag::Q, FS.fq().from_int(n)};
      CHECK(FS.embed_q2(in_q).v == FS.fq2().from_int(n));
    }
  }
}

TEST_CASE("field mismatch and zero errors") {
  FieldSpec FS = FieldSpec::build(3, 2);
  FieldElement a = FS.one(FieldTag::Q);
  FieldElement b = FS.one(FieldTag::Q2);
  CHECK_THROWS_WITH_AS(FS.add(a, b), doctest::Contains("FieldMismatch"), Error);
  CHECK_THROWS_WITH_AS(FS.inv(FS.zero(FieldTag::Q)), doctest::Contains("DivisionByZero"), Error);
}
