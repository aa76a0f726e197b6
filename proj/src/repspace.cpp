#include "thetarep/repspace.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace thetarep {

RepSpace::RepSpace(const FieldSpec& F, std::vector<int> r) : F_(&F), r_(std::move(r)) {
  if (static_cast<int>(r_.size()) != F.f())
    throw Error(ErrorKind::DimensionMismatch, "degree tuple length must equal f");
  for (int x : r_)
    if (x < 0) throw Error(ErrorKind::OutOfRange, "negative block degree");
  stride_.resize(r_.size());
  for (size_t i = 0; i < r_.size(); ++i) {
    stride_[i] = dim_;
    dim_ *= r_[i] + 1;
    if (dim_ > kAmbientCap)
      throw Error(ErrorKind::DimensionOverflow,
                  "ambient dimension exceeds the cap " + std::to_string(kAmbientCap));
  }
}

long long RepSpace::index_of(const std::vector<int>& xexp) const {
  long long idx = 0;
  for (size_t i = 0; i < r_.size(); ++i) {
    if (xexp[i] < 0 || xexp[i] > r_[i]) throw Error(ErrorKind::OutOfRange, "exponent out of range");
    idx += stride_[i] * xexp[i];
  }
  return idx;
}

std::vector<int> RepSpace::exps_of(long long index) const {
  std::vector<int> e(r_.size());
  for (size_t i = 0; i < r_.size(); ++i) {
    e[i] = static_cast<int>(index % (r_[i] + 1));
    index /= r_[i] + 1;
  }
  return e;
}

bool RepSpace::same_space(const RepSpace& o) const {
  return F_ == o.F_ && r_ == o.r_;
}

Elt det_of(const FieldSpec& F, const GroupElement& g) {
  const SmallField& K = F.fq();
  return K.sub(K.mul(g.a, g.d), K.mul(g.b, g.c));
}

void check_invertible(const FieldSpec& F, const GroupElement& g) {
  if (det_of(F, g) == 0) throw Error(ErrorKind::SingularMatrix, "determinant is zero");
}

GroupElement group_mul(const FieldSpec& F, const GroupElement& g, const GroupElement& h) {
  const SmallField& K = F.fq();
  return {K.add(K.mul(g.a, h.a), K.mul(g.b, h.c)), K.add(K.mul(g.a, h.b), K.mul(g.b, h.d)),
          K.add(K.mul(g.c, h.a), K.mul(g.d, h.c)), K.add(K.mul(g.c, h.b), K.mul(g.d, h.d))};
}

GroupElement group_inv(const FieldSpec& F, const GroupElement& g) {
  const SmallField& K = F.fq();
  Elt di = K.inv(det_of(F, g));
  return {K.mul(di, g.d), K.mul(di, K.neg(g.b)), K.mul(di, K.neg(g.c)), K.mul(di, g.a)};
}

GroupElement identity_element(const FieldSpec& F) {
  Elt one = F.fq().from_int(1);
  return {one, 0, 0, one};
}

BlockAction::BlockAction(const RepSpace& space, const GroupElement& g) : space_(&space) {
  const FieldSpec& FS = space.field();
  const SmallField& K = FS.fq();
  check_invertible(FS, g);

  const int f = space.blocks();
  blocks_.reserve(f);
  for (int i = 0; i < f; ++i) {
    const int r = space.degrees()[i];
    // substitution x -> A x + C y, y -> B x + D y with entries Frobenius-twisted
    const Elt A = K.frob(g.a, i), B = K.frob(g.b, i), C = K.frob(g.c, i), D = K.frob(g.d, i);

    // powx[j] = coefficients of (A x + C y)^j by x-degree, powy likewise
    std::vector<std::vector<Elt>> powx(r + 1), powy(r + 1);
    powx[0] = {K.from_int(1)};
    powy[0] = {K.from_int(1)};
    for (int j = 1; j <= r; ++j) {
      powx[j].assign(j + 1, 0);
      powy[j].assign(j + 1, 0);
      for (int t = 0; t <= j - 1; ++t) {
        // multiply by (A x + C y)
        powx[j][t + 1] = K.add(powx[j][t + 1], K.mul(A, powx[j - 1][t]));
        powx[j][t] = K.add(powx[j][t], K.mul(C, powx[j - 1][t]));
        powy[j][t + 1] = K.add(powy[j][t + 1], K.mul(B, powy[j - 1][t]));
        powy[j][t] = K.add(powy[j][t], K.mul(D, powy[j - 1][t]));
      }
    }

    Mat M(r + 1, r + 1);  // column j = image of x^j y^{r-j}
    for (int j = 0; j <= r; ++j) {
      for (int s = 0; s <= j; ++s) {
        Elt cs = powx[j][s];
        if (!cs) continue;
        for (int t = 0; t <= r - j; ++t) {
          Elt ct = powy[r - j][t];
          if (!ct) continue;
          long long k = s + t;  // resulting x-degree
          M.at(k, j) = static_cast<Entry>(K.add(M.at(k, j), K.mul(cs, ct)));
        }
      }
    }
    blocks_.push_back(std::move(M));
  }
}

Vec BlockAction::apply(const Vec& v) const {
  if (static_cast<long long>(v.size()) != space_->dim())
    throw Error(ErrorKind::DimensionMismatch, "vector length");
  const SmallField& K = space_->field().fq();
  Vec cur = v;
  Vec nxt(cur.size(), 0);
  std::vector<Elt> slice, out;
  for (int i = 0; i < space_->blocks(); ++i) {
    const Mat& M = blocks_[i];
    const long long e = M.rows;           // r_i + 1
    const long long stride = space_->stride(i);
    const long long outer_step = stride * e;
    slice.assign(e, 0);
    out.assign(e, 0);
    std::fill(nxt.begin(), nxt.end(), 0);
    for (long long base = 0; base < space_->dim(); base += outer_step) {
      for (long long inner = 0; inner < stride; ++inner) {
        const long long off = base + inner;
        bool all_zero = true;
        for (long long j = 0; j < e; ++j) {
          slice[j] = cur[off + j * stride];
          all_zero &= (slice[j] == 0);
        }
        if (all_zero) continue;
        for (long long k = 0; k < e; ++k) {
          Elt acc = 0;
          const Entry* mrow = M.row(k);
          for (long long j = 0; j < e; ++j)
            if (mrow[j] && slice[j]) acc = K.add(acc, K.mul(mrow[j], slice[j]));
          nxt[off + k * stride] = static_cast<Entry>(acc);
        }
      }
    }
    std::swap(cur, nxt);
  }
  return cur;
}

Vec act(const FieldSpec& F, const GroupElement& g, const Vec& v, const RepSpace& space) {
  (void)F;
  return BlockAction(space, g).apply(v);
}

std::vector<GroupElement> group_generators(const FieldSpec& F) {
  const SmallField& K = F.fq();
  Elt one = K.from_int(1);
  Elt g = K.primitive();
  return {GroupElement{g, 0, 0, one}, GroupElement{one, one, 0, one}, GroupElement{0, one, one, 0}};
}

std::vector<GroupElement> all_invertible(const FieldSpec& F) {
  const SmallField& K = F.fq();
  std::vector<GroupElement> out;
  for (Elt a = 0; a < K.size(); ++a)
    for (Elt b = 0; b < K.size(); ++b)
      for (Elt c = 0; c < K.size(); ++c)
        for (Elt d = 0; d < K.size(); ++d) {
          GroupElement g{a, b, c, d};
          if (det_of(F, g) != 0) out.push_back(g);
        }
  return out;
}

}  // namespace thetarep
