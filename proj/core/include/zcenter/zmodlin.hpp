#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zcenter/errors.hpp"

namespace zc {

struct PrimePower {
  long long p = 2;
  int e = 1;
  long long q = 2;  // p^e
};
std::vector<PrimePower> factor_prime_powers(long long n);

long long mod_pow(long long b, long long e, long long m);
/// Inverse of a unit mod m (gcd(a,m)=1).
long long mod_inverse(long long a, long long m);

/// Sparse integer row: list of (column, coefficient).
struct SparseRow {
  std::vector<std::pair<int, long long>> entries;
  void add(int col, long long coef) { entries.emplace_back(col, coef); }
};

/// Linear algebra over Z/q with q = p^e.  Arbitrary (possibly huge and
/// sparse) row sets are first compressed to an equivalent small row basis by
/// streaming echelon reduction; exact solving and Smith-form questions are
/// then answered on the compressed matrix with minimal-valuation pivoting.
class LocalRowSpace {
 public:
  /// width = number of unknown columns; extra RHS columns may be appended to
  /// each row (same count for all rows).
  LocalRowSpace(int width, int rhs_count, long long p, int e);

  void add_row(const SparseRow& lhs, const std::vector<long long>& rhs);
  /// The compressed rows (full width + rhs columns), spanning the same row
  /// space mod q as everything added.
  const std::vector<std::vector<long long>>& rows() const { return rows_; }

  long long p() const { return p_; }
  int e() const { return e_; }
  long long q() const { return q_; }
  int width() const { return width_; }
  int rhs_count() const { return rhs_count_; }

 private:
  void insert(std::vector<long long> row);
  int width_, rhs_count_;
  long long p_, q_;
  int e_;
  std::vector<std::vector<long long>> rows_;       // stored pivot rows
  std::vector<int> pivot_of_col_;                  // col -> index into rows_, -1 if none
  std::vector<std::vector<long long>> worklist_;
};

/// Particular solutions of A x = b_j over Z/q for the system captured in a
/// LocalRowSpace (free variables set to 0).  result[j] empty iff inconsistent.
std::vector<std::optional<std::vector<long long>>> local_solve(const LocalRowSpace& sys);

/// Smith normal form over Z/p^e of a dense matrix; tracks the column
/// transform V (x = V y) and optionally the row transform U.
struct LocalSmith {
  std::vector<long long> diag;            // p-power diagonal entries (possibly 0 = p^e)
  std::vector<std::vector<long long>> v;  // cols x cols
  std::vector<std::vector<long long>> u;  // rows x rows (if requested)
};
LocalSmith local_smith(std::vector<std::vector<long long>> m, int rows, int cols, long long p,
                       int e, bool want_u);

/// Kernel generators of the matrix whose row space is captured by `sys`
/// (RHS columns must be absent). Each generator comes with its additive order
/// p^k as an element of (Z/q)^width.
struct LocalKernel {
  std::vector<std::vector<long long>> gens;
  std::vector<long long> orders;
};
LocalKernel local_kernel(const LocalRowSpace& sys);

}  // namespace zc
