#include "thetarep/poly.hpp"

#include <map>

namespace thetarep {

MultiPoly theta_poly(const FieldSpec& F, int i) {
  const int f = F.f();
  if (i < 0 || i >= f) throw Error(ErrorKind::OutOfRange, "theta block index");
  const int prev = (i - 1 + f) % f;
  MultiPoly P;
  P.deg.assign(f, 0);
  P.deg[i] += 1;
  P.deg[prev] += F.p();

  // x_i y_{i-1}^p
  MultiPoly::Term t1;
  t1.xexp.assign(f, 0);
  t1.xexp[i] += 1;
  t1.coeff = F.fq().from_int(1);
  // - y_i x_{i-1}^p
  MultiPoly::Term t2;
  t2.xexp.assign(f, 0);
  t2.xexp[prev] += F.p();
  t2.coeff = F.fq().from_int(-1);
  P.terms = {t1, t2};
  return P;
}

MultiPoly poly_mul(const FieldSpec& F, const MultiPoly& A, const MultiPoly& B) {
  const SmallField& K = F.fq();
  MultiPoly C;
  C.deg.resize(A.deg.size());
  for (size_t i = 0; i < A.deg.size(); ++i) C.deg[i] = A.deg[i] + B.deg[i];
  std::map<std::vector<int>, Elt> acc;
  for (const auto& ta : A.terms)
    for (const auto& tb : B.terms) {
      std::vector<int> e(ta.xexp.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ta.xexp[i] + tb.xexp[i];
      Elt& slot = acc[e];
      slot = K.add(slot, K.mul(ta.coeff, tb.coeff));
    }
  for (auto& [e, c] : acc)
    if (c != 0) C.terms.push_back({e, c});
  return C;
}

MultiPoly poly_pow(const FieldSpec& F, const MultiPoly& A, int e) {
  MultiPoly R;
  R.deg.assign(A.deg.size(), 0);
  R.terms = {{std::vector<int>(A.deg.size(), 0), F.fq().from_int(1)}};
  for (int t = 0; t < e; ++t) R = poly_mul(F, R, A);
  return R;
}

MultiPoly theta_product(const FieldSpec& F, const std::vector<int>& j) {
  if (static_cast<int>(j.size()) != F.f())
    throw Error(ErrorKind::DimensionMismatch, "exponent tuple length");
  MultiPoly R;
  R.deg.assign(F.f(), 0);
  R.terms = {{std::vector<int>(F.f(), 0), F.fq().from_int(1)}};
  for (int i = 0; i < F.f(); ++i) {
    if (j[i] < 0) throw Error(ErrorKind::OutOfRange, "negative theta exponent");
    if (j[i] > 0) R = poly_mul(F, R, poly_pow(F, theta_poly(F, i), j[i]));
  }
  return R;
}

Vec poly_to_vec(const RepSpace& space, const MultiPoly& P) {
  if (P.deg != space.degrees()) throw Error(ErrorKind::DegreeMismatch, "degrees differ");
  Vec v(space.dim(), 0);
  const SmallField& K = space.field().fq();
  for (const auto& t : P.terms) {
    long long idx = space.index_of(t.xexp);
    v[idx] = static_cast<Entry>(K.add(v[idx], t.coeff));
  }
  return v;
}

void check_degree_sum(const RepSpace& src, const RepSpace& dst, const MultiPoly& P) {
  for (int i = 0; i < src.blocks(); ++i)
    if (src.degrees()[i] + P.deg[i] != dst.degrees()[i])
      throw Error(ErrorKind::DegreeMismatch, "dst degrees must equal src + deg(P)");
}

Vec multiply_monomial(const RepSpace& src, const RepSpace& dst, const MultiPoly& P,
                      const std::vector<int>& mono_xexp) {
  const SmallField& K = dst.field().fq();
  Vec v(dst.dim(), 0);
  std::vector<int> e(mono_xexp.size());
  for (const auto& t : P.terms) {
    for (size_t i = 0; i < e.size(); ++i) e[i] = mono_xexp[i] + t.xexp[i];
    long long idx = dst.index_of(e);
    v[idx] = static_cast<Entry>(K.add(v[idx], t.coeff));
  }
  return v;
}

Mat mult_matrix(const RepSpace& src, const RepSpace& dst, const MultiPoly& P) {
  check_degree_sum(src, dst, P);
  Mat M(dst.dim(), src.dim());
  for (long long j = 0; j < src.dim(); ++j) {
    Vec col = multiply_monomial(src, dst, P, src.exps_of(j));
    for (long long i = 0; i < dst.dim(); ++i) M.at(i, j) = col[i];
  }
  return M;
}

}  // namespace thetarep
