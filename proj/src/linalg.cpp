#include "thetarep/linalg.hpp"

namespace thetarep {

void row_axpy(const SmallField& F, Entry* dst, const Entry* src, Elt factor, long long from,
              long long cols) {
  if (factor == 0) return;
  const Elt neg = F.neg(factor);
  const Elt* mrow = F.mul_row(neg);
  const Elt* add = F.add_flat();
  if (mrow && add) {
    const std::uint32_t S = F.size();
    for (long long c = from; c < cols; ++c)
      dst[c] = static_cast<Entry>(add[dst[c] * S + mrow[src[c]]]);
  } else {
    for (long long c = from; c < cols; ++c)
      dst[c] = static_cast<Entry>(F.add(dst[c], F.mul(neg, src[c])));
  }
}

namespace {

void row_scale(const SmallField& F, Entry* r, Elt factor, long long from, long long cols) {
  if (factor == F.from_int(1)) return;
  const Elt* mrow = F.mul_row(factor);
  if (mrow) {
    for (long long c = from; c < cols; ++c) r[c] = static_cast<Entry>(mrow[r[c]]);
  } else {
    for (long long c = from; c < cols; ++c) r[c] = static_cast<Entry>(F.mul(factor, r[c]));
  }
}

}  // namespace

long long rref(const SmallField& F, Mat& M, std::vector<long long>* pivot_cols) {
  long long r = 0;
  std::vector<long long> pivots;
  for (long long col = 0; col < M.cols && r < M.rows; ++col) {
    long long pr = -1;
    for (long long i = r; i < M.rows; ++i)
      if (M.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (long long c = col; c < M.cols; ++c) std::swap(M.at(pr, c), M.at(r, c));
    row_scale(F, M.row(r), F.inv(M.at(r, col)), col, M.cols);
    for (long long i = 0; i < M.rows; ++i) {
      if (i == r) continue;
      Elt f = M.at(i, col);
      if (f) row_axpy(F, M.row(i), M.row(r), f, col, M.cols);
    }
    pivots.push_back(col);
    ++r;
  }
  M.rows = r;
  M.a.resize(static_cast<size_t>(r * M.cols));
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return r;
}

long long rank_of(const SmallField& F, Mat M) { return rref(F, M); }

Mat kernel_basis(const SmallField& F, const Mat& M) {
  Mat R = M;
  std::vector<long long> pivots;
  long long rank = rref(F, R, &pivots);
  std::vector<char> is_pivot(M.cols, 0);
  for (long long c : pivots) is_pivot[c] = 1;

  Mat K(M.cols - rank, M.cols);
  long long kr = 0;
  for (long long fc = 0; fc < M.cols; ++fc) {
    if (is_pivot[fc]) continue;
    K.at(kr, fc) = static_cast<Entry>(F.from_int(1));
    for (long long i = 0; i < rank; ++i) K.at(kr, pivots[i]) = static_cast<Entry>(F.neg(R.at(i, fc)));
    ++kr;
  }
  rref(F, K);
  return K;
}

Mat matmul(const SmallField& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw Error(ErrorKind::DimensionMismatch, "matmul shapes");
  Mat C(A.rows, B.cols);
  for (long long i = 0; i < A.rows; ++i)
    for (long long k = 0; k < A.cols; ++k) {
      Elt f = A.at(i, k);
      if (!f) continue;
      const Elt* mrow = F.mul_row(f);
      const Elt* add = F.add_flat();
      Entry* ci = C.row(i);
      const Entry* bk = B.row(k);
      if (mrow && add) {
        const std::uint32_t S = F.size();
        for (long long j = 0; j < B.cols; ++j) ci[j] = static_cast<Entry>(add[ci[j] * S + mrow[bk[j]]]);
      } else {
        for (long long j = 0; j < B.cols; ++j)
          ci[j] = static_cast<Entry>(F.add(ci[j], F.mul(f, bk[j])));
      }
    }
  return C;
}

Vec matvec(const SmallField& F, const Mat& A, const Vec& v) {
  if (A.cols != static_cast<long long>(v.size()))
    throw Error(ErrorKind::DimensionMismatch, "matvec shapes");
  Vec out(A.rows, 0);
  for (long long i = 0; i < A.rows; ++i) {
    Elt acc = 0;
    const Entry* ri = A.row(i);
    for (long long j = 0; j < A.cols; ++j)
      if (ri[j] && v[j]) acc = F.add(acc, F.mul(ri[j], v[j]));
    out[i] = static_cast<Entry>(acc);
  }
  return out;
}

std::optional<Vec> solve_affine(const SmallField& F, Mat A, Vec b) {
  if (A.rows != static_cast<long long>(b.size()))
    throw Error(ErrorKind::DimensionMismatch, "solve shapes");
  Mat aug(A.rows, A.cols + 1);
  for (long long i = 0; i < A.rows; ++i) {
    for (long long j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<long long> pivots;
  rref(F, aug, &pivots);
  Vec x(A.cols, 0);
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == A.cols) return std::nullopt;  // row (0 ... 0 | 1)
    x[pivots[i]] = aug.at(static_cast<long long>(i), A.cols);
  }
  return x;
}

long long EchelonBuilder::insert(Vec v) {
  if (static_cast<long long>(v.size()) != cols_)
    throw Error(ErrorKind::DimensionMismatch, "row length");
  v = reduce(std::move(v));
  long long pc = -1;
  for (long long c = 0; c < cols_; ++c)
    if (v[c] != 0) {
      pc = c;
      break;
    }
  if (pc < 0) return -1;
  row_scale(*F_, v.data(), F_->inv(v[pc]), pc, cols_);
  if (static_cast<long long>(row_of_pivot_.size()) < cols_) row_of_pivot_.assign(cols_, -1);
  row_of_pivot_[pc] = static_cast<long long>(rows_.size());
  pivot_of_row_.push_back(pc);
  rows_.push_back(std::move(v));
  return static_cast<long long>(rows_.size()) - 1;
}

Vec EchelonBuilder::reduce(Vec v) const {
  if (rows_.empty()) return v;
  for (long long c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    long long r = row_of_pivot_.empty() ? -1 : row_of_pivot_[c];
    if (r < 0) continue;
    row_axpy(*F_, v.data(), rows_[r].data(), v[c], c, cols_);
  }
  return v;
}

Mat EchelonBuilder::reduced_rows() const {
  Mat M(rank(), cols_);
  for (long long i = 0; i < rank(); ++i)
    for (long long c = 0; c < cols_; ++c) M.at(i, c) = rows_[i][c];
  rref(*F_, M);
  return M;
}

}  // namespace thetarep
