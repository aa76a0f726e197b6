#include "thetarep/subspace.hpp"

#include <deque>

namespace thetarep {

Subspace::Subspace(const RepSpace& ambient) : ambient_(&ambient), rows_(0, ambient.dim()) {}

Subspace Subspace::span(const RepSpace& ambient, Mat rows) {
  if (rows.cols != ambient.dim()) throw Error(ErrorKind::DimensionMismatch, "row length");
  Subspace S(ambient);
  rref(ambient.field().fq(), rows, &S.pivots_);
  S.rows_ = std::move(rows);
  return S;
}

Subspace Subspace::full(const RepSpace& ambient) {
  Mat id(ambient.dim(), ambient.dim());
  Elt one = ambient.field().fq().from_int(1);
  for (long long i = 0; i < ambient.dim(); ++i) id.at(i, i) = static_cast<Entry>(one);
  return span(ambient, std::move(id));
}

void Subspace::check_ambient(const Subspace& o) const {
  if (!ambient_->same_space(*o.ambient_))
    throw Error(ErrorKind::AmbientMismatch, "subspaces live in different spaces");
}

Vec Subspace::reduce(Vec v) const {
  const SmallField& F = ambient_->field().fq();
  for (long long i = 0; i < rows_.rows; ++i) {
    Elt f = v[pivots_[i]];
    if (f) row_axpy(F, v.data(), rows_.row(i), f, pivots_[i], rows_.cols);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (Entry x : r)
    if (x) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  check_ambient(o);
  for (long long i = 0; i < o.rows_.rows; ++i) {
    Vec v(o.rows_.row(i), o.rows_.row(i) + o.rows_.cols);
    if (!contains(v)) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  check_ambient(o);
  return rows_ == o.rows_;
}

Subspace Subspace::sum(const Subspace& o) const {
  check_ambient(o);
  Mat stacked(rows_.rows + o.rows_.rows, rows_.cols);
  std::copy(rows_.a.begin(), rows_.a.end(), stacked.a.begin());
  std::copy(o.rows_.a.begin(), o.rows_.a.end(), stacked.a.begin() + rows_.a.size());
  return span(*ambient_, std::move(stacked));
}

Subspace Subspace::intersect(const Subspace& o) const {
  check_ambient(o);
  const SmallField& F = ambient_->field().fq();
  const long long n = rows_.cols;
  // Zassenhaus: rows (U | U) for U in this, (W | 0) for W in o; the rows of
  // the echelon form whose left half vanishes have right halves spanning the
  // intersection.
  Mat block(rows_.rows + o.rows_.rows, 2 * n);
  for (long long i = 0; i < rows_.rows; ++i)
    for (long long c = 0; c < n; ++c) {
      block.at(i, c) = rows_.at(i, c);
      block.at(i, n + c) = rows_.at(i, c);
    }
  for (long long i = 0; i < o.rows_.rows; ++i)
    for (long long c = 0; c < n; ++c) block.at(rows_.rows + i, c) = o.rows_.at(i, c);
  rref(F, block);

  Mat inter(0, n);
  for (long long i = 0; i < block.rows; ++i) {
    bool left_zero = true;
    for (long long c = 0; c < n && left_zero; ++c) left_zero = (block.at(i, c) == 0);
    if (!left_zero) continue;
    inter.rows += 1;
    inter.a.insert(inter.a.end(), block.row(i) + n, block.row(i) + 2 * n);
  }
  return span(*ambient_, std::move(inter));
}

long long Subspace::quotient_dim(const Subspace& denom) const {
  return sum(denom).dim() - denom.dim();
}

Subspace multiples_subspace(const RepSpace& dst, const MultiPoly& P) {
  std::vector<int> src_deg(dst.degrees());
  for (int i = 0; i < dst.blocks(); ++i) {
    src_deg[i] -= P.deg[i];
    if (src_deg[i] < 0) return Subspace(dst);  // P does not divide anything in dst
  }
  RepSpace src(dst.field(), src_deg);
  EchelonBuilder eb(dst.field().fq(), dst.dim());
  for (long long j = 0; j < src.dim(); ++j)
    eb.insert(multiply_monomial(src, dst, P, src.exps_of(j)));
  Subspace S = Subspace::span(dst, eb.reduced_rows());
  if (S.dim() != src.dim())
    throw Error(ErrorKind::DimensionMismatch, "multiplication map is not injective");
  return S;
}

Subspace theta_span(const RepSpace& dst, const std::vector<std::vector<int>>& js) {
  EchelonBuilder eb(dst.field().fq(), dst.dim());
  for (const auto& j : js) {
    MultiPoly P = theta_product(dst.field(), j);
    std::vector<int> src_deg(dst.degrees());
    bool fits = true;
    for (int i = 0; i < dst.blocks(); ++i) {
      src_deg[i] -= P.deg[i];
      fits &= (src_deg[i] >= 0);
    }
    if (!fits) continue;
    RepSpace src(dst.field(), src_deg);
    for (long long t = 0; t < src.dim(); ++t)
      eb.insert(multiply_monomial(src, dst, P, src.exps_of(t)));
  }
  return Subspace::span(dst, eb.reduced_rows());
}

Subspace spin(const RepSpace& space, const std::vector<Vec>& seeds) {
  const FieldSpec& F = space.field();
  auto gens = group_generators(F);
  std::vector<BlockAction> actions;
  actions.reserve(gens.size());
  for (const auto& g : gens) actions.emplace_back(space, g);

  EchelonBuilder eb(F.fq(), space.dim());
  std::deque<long long> fresh;
  for (const Vec& v : seeds) {
    long long r = eb.insert(v);
    if (r >= 0) fresh.push_back(r);
  }
  while (!fresh.empty()) {
    long long row = fresh.front();
    fresh.pop_front();
    Vec base = eb.stored_row(row);
    for (const auto& A : actions) {
      long long r = eb.insert(A.apply(base));
      if (r >= 0) fresh.push_back(r);
    }
  }
  return Subspace::span(space, eb.reduced_rows());
}

bool is_generator_stable(const Subspace& S) {
  const RepSpace& space = S.ambient();
  for (const auto& g : group_generators(space.field())) {
    BlockAction A(space, g);
    for (long long i = 0; i < S.dim(); ++i) {
      Vec v(S.basis().row(i), S.basis().row(i) + S.basis().cols);
      if (!S.contains(A.apply(v))) return false;
    }
  }
  return true;
}

}  // namespace thetarep
