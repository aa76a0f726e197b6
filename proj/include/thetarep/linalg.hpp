#ifndef THETAREP_LINALG_HPP
#define THETAREP_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "thetarep/gf.hpp"

namespace thetarep {

using Entry = std::uint16_t;
using Vec = std::vector<Entry>;

/// Dense row-major matrix over a SmallField, entries packed.
struct Mat {
  long long rows = 0, cols = 0;
  std::vector<Entry> a;

  Mat() = default;
  Mat(long long r, long long c) : rows(r), cols(c), a(static_cast<size_t>(r * c), 0) {}

  Entry* row(long long r) { return a.data() + r * cols; }
  const Entry* row(long long r) const { return a.data() + r * cols; }
  Entry& at(long long r, long long c) { return a[r * cols + c]; }
  Entry at(long long r, long long c) const { return a[r * cols + c]; }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// dst -= factor * src, over the column range [from, cols).
void row_axpy(const SmallField& F, Entry* dst, const Entry* src, Elt factor, long long from,
              long long cols);

/// In-place reduced row echelon form, leftmost-pivot convention.
/// Zero rows are dropped; returns the rank. Pivot columns out if requested.
long long rref(const SmallField& F, Mat& M, std::vector<long long>* pivot_cols = nullptr);

long long rank_of(const SmallField& F, Mat M);

/// Row basis of the nullspace {x : M x = 0}, in reduced echelon form.
Mat kernel_basis(const SmallField& F, const Mat& M);

Mat matmul(const SmallField& F, const Mat& A, const Mat& B);
Vec matvec(const SmallField& F, const Mat& A, const Vec& v);

/// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve_affine(const SmallField& F, Mat A, Vec b);

/// Incremental echelon accumulation: forward-eliminated rows indexed by pivot
/// column. Insertion order independent rank; call reduced_rows() for the
/// canonical reduced form.
class EchelonBuilder {
public:
  explicit EchelonBuilder(const SmallField& F, long long cols) : F_(&F), cols_(cols) {}

  /// Returns the index of the newly stored basis row, or -1 if v was already
  /// in the span.
  long long insert(Vec v);

  long long rank() const { return static_cast<long long>(rows_.size()); }
  long long cols() const { return cols_; }
  const Vec& stored_row(long long i) const { return rows_[i]; }

  /// Forward-eliminate v against the current rows (no back substitution).
  Vec reduce(Vec v) const;

  Mat reduced_rows() const;  // full rref of the accumulated span

private:
  const SmallField* F_;
  long long cols_;
  std::vector<Vec> rows_;                  // each with a unique pivot, scaled to 1
  std::vector<long long> pivot_of_row_;
  std::vector<long long> row_of_pivot_;    // lazily sized; -1 when absent
};

}  // namespace thetarep

#endif
