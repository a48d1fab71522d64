#include "zcenter/zmodlin.hpp"

#include <algorithm>
#include <numeric>

namespace zc {

std::vector<PrimePower> factor_prime_powers(long long n) {
  std::vector<PrimePower> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.e;
      pp.q *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back(PrimePower{n, 1, n});
  return out;
}

long long mod_pow(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

long long mod_inverse(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1 != 0) {
    long long qq = g / a1;
    g -= qq * a1;
    std::swap(g, a1);
    x -= qq * x1;
    std::swap(x, x1);
  }
  if (g != 1) throw Error(ErrorKind::Internal, "mod_inverse of non-unit");
  return ((x % m) + m) % m;
}

namespace {

int valuation(long long v, long long p, int e) {
  if (v == 0) return e;
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

long long pow_ll(long long p, int k) {
  long long r = 1;
  while (k-- > 0) r *= p;
  return r;
}

// row -= factor * pivot, mod q, from column `from` onward.
void reduce_by(std::vector<long long>& row, const std::vector<long long>& pivot,
               long long factor, long long q, std::size_t from) {
  if (factor == 0) return;
  for (std::size_t k = from; k < row.size(); ++k) {
    if (pivot[k] == 0) continue;
    long long x = (row[k] - factor * pivot[k]) % q;
    row[k] = x < 0 ? x + q : x;
  }
}

}  // namespace

LocalRowSpace::LocalRowSpace(int width, int rhs_count, long long p, int e)
    : width_(width), rhs_count_(rhs_count), p_(p), q_(pow_ll(p, e)), e_(e),
      pivot_of_col_(static_cast<std::size_t>(width), -1) {}

void LocalRowSpace::add_row(const SparseRow& lhs, const std::vector<long long>& rhs) {
  std::vector<long long> row(static_cast<std::size_t>(width_) + rhs_count_, 0);
  for (auto [c, v] : lhs.entries) {
    long long x = (row[static_cast<std::size_t>(c)] + v) % q_;
    row[static_cast<std::size_t>(c)] = x < 0 ? x + q_ : x;
  }
  for (int j = 0; j < rhs_count_; ++j) {
    long long x = rhs[static_cast<std::size_t>(j)] % q_;
    row[static_cast<std::size_t>(width_) + j] = x < 0 ? x + q_ : x;
  }
  insert(std::move(row));
}

void LocalRowSpace::insert(std::vector<long long> row) {
  for (int c = 0; c < width_; ++c) {
    long long v = row[static_cast<std::size_t>(c)];
    if (v == 0) continue;
    int pi = pivot_of_col_[static_cast<std::size_t>(c)];
    if (pi < 0) {
      pivot_of_col_[static_cast<std::size_t>(c)] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(row));
      return;
    }
    std::vector<long long>& pv = rows_[static_cast<std::size_t>(pi)];
    if (valuation(v, p_, e_) < valuation(pv[static_cast<std::size_t>(c)], p_, e_)) {
      // the incoming row has the sharper entry; it becomes the pivot and the
      // displaced pivot row continues through the reduction
      std::swap(pv, row);
      v = row[static_cast<std::size_t>(c)];
    }
    int vp = valuation(pv[static_cast<std::size_t>(c)], p_, e_);
    long long pe_vp = pow_ll(p_, vp);
    long long unit_inv = mod_inverse(pv[static_cast<std::size_t>(c)] / pe_vp, q_);
    long long factor = (v / pe_vp) % q_ * unit_inv % q_;
    reduce_by(row, pv, factor, q_, static_cast<std::size_t>(c));
    if (row[static_cast<std::size_t>(c)] != 0)
      throw Error(ErrorKind::Internal, "echelon reduction failed to clear column");
  }
  for (int j = 0; j < rhs_count_; ++j) {
    if (row[static_cast<std::size_t>(width_) + j] != 0) {
      rows_.push_back(std::move(row));  // inconsistency witness, no pivot column
      return;
    }
  }
}

namespace {

struct DenseEchelon {
  std::vector<std::vector<long long>> m;
  int width;
  int rhs;
  long long p, q;
  int e;
  std::vector<std::pair<int, int>> pivots;  // (row, col)

  // Row echelon with globally minimal-valuation pivots over the remaining
  // (unused row, unused column) submatrix.  All submatrix entries keep
  // valuation >= the current pivot's, so eliminations divide exactly and
  // reverse back-substitution with free variables set to zero decides
  // solvability exactly.
  void run() {
    int nrows = static_cast<int>(m.size());
    std::vector<bool> col_used(static_cast<std::size_t>(width), false);
    std::vector<bool> row_used(static_cast<std::size_t>(nrows), false);
    for (;;) {
      int bi = -1, bj = -1, bv = e + 1;
      for (int i = 0; i < nrows && bv > 0; ++i) {
        if (row_used[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < width; ++j) {
          if (col_used[static_cast<std::size_t>(j)]) continue;
          long long v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (v == 0) continue;
          int val = valuation(v, p, e);
          if (val < bv) {
            bv = val;
            bi = i;
            bj = j;
            if (bv == 0) break;
          }
        }
      }
      if (bi < 0) break;
      row_used[static_cast<std::size_t>(bi)] = true;
      col_used[static_cast<std::size_t>(bj)] = true;
      pivots.emplace_back(bi, bj);
      const long long pe_v = pow_ll(p, bv);
      std::vector<long long> pr = m[static_cast<std::size_t>(bi)];
      long long uinv = mod_inverse(pr[static_cast<std::size_t>(bj)] / pe_v, q);
      for (int i = 0; i < nrows; ++i) {
        if (row_used[static_cast<std::size_t>(i)]) continue;
        std::vector<long long>& row = m[static_cast<std::size_t>(i)];
        long long v = row[static_cast<std::size_t>(bj)];
        if (v == 0) continue;
        long long factor = (v / pe_v) % q * uinv % q;
        reduce_by(row, pr, factor, q, 0);
      }
    }
  }
};

}  // namespace

std::vector<std::optional<std::vector<long long>>> local_solve(const LocalRowSpace& sys) {
  DenseEchelon ech{sys.rows(), sys.width(), sys.rhs_count(), sys.p(), sys.q(), sys.e(), {}};
  ech.run();
  std::vector<bool> has_pivot(ech.m.size(), false);
  for (auto [ri, ci] : ech.pivots) has_pivot[static_cast<std::size_t>(ri)] = true;
  std::vector<std::optional<std::vector<long long>>> out;
  for (int j = 0; j < sys.rhs_count(); ++j) {
    std::size_t bj = static_cast<std::size_t>(sys.width() + j);
    std::vector<long long> x(static_cast<std::size_t>(sys.width()), 0);
    bool ok = true;
    for (std::size_t pi = ech.pivots.size(); pi-- > 0 && ok;) {
      auto [ri, ci] = ech.pivots[pi];
      const std::vector<long long>& row = ech.m[static_cast<std::size_t>(ri)];
      long long piv = row[static_cast<std::size_t>(ci)];
      long long rhs = row[bj];
      // subtract contributions of later pivots (already solved)
      for (std::size_t pj = pi + 1; pj < ech.pivots.size(); ++pj) {
        int cj = ech.pivots[pj].second;
        rhs = ((rhs - row[static_cast<std::size_t>(cj)] * x[static_cast<std::size_t>(cj)]) %
                   sys.q() +
               sys.q()) %
              sys.q();
      }
      int vp = valuation(piv, sys.p(), sys.e());
      long long pe_v = pow_ll(sys.p(), vp);
      if (rhs % pe_v != 0) {
        ok = false;
        break;
      }
      x[static_cast<std::size_t>(ci)] =
          (rhs / pe_v) % sys.q() * mod_inverse(piv / pe_v, sys.q()) % sys.q();
    }
    if (ok)
      for (std::size_t i = 0; i < ech.m.size(); ++i)
        if (!has_pivot[i] && ech.m[i][bj] != 0) {
          ok = false;
          break;
        }
    if (ok)
      out.emplace_back(std::move(x));
    else
      out.emplace_back(std::nullopt);
  }
  return out;
}

LocalSmith local_smith(std::vector<std::vector<long long>> m, int rows, int cols, long long p,
                       int e, bool want_u) {
  long long q = pow_ll(p, e);
  LocalSmith s;
  s.v.assign(static_cast<std::size_t>(cols), std::vector<long long>(cols, 0));
  for (int i = 0; i < cols; ++i) s.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  if (want_u) {
    s.u.assign(static_cast<std::size_t>(rows), std::vector<long long>(rows, 0));
    for (int i = 0; i < rows; ++i)
      s.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  }
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows; ++i)
      std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)],
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]);
    for (int i = 0; i < cols; ++i)
      std::swap(s.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)],
                s.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]);
  };
  int limit = std::min(rows, cols);
  for (int k = 0; k < limit; ++k) {
    int bi = -1, bj = -1, bv = e + 1;
    for (int i = k; i < rows && bv > 0; ++i)
      for (int j = k; j < cols; ++j) {
        long long v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (v == 0) continue;
        int val = valuation(v, p, e);
        if (val < bv) {
          bv = val;
          bi = i;
          bj = j;
          if (bv == 0) break;
        }
      }
    if (bi < 0) break;
    std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(bi)]);
    if (want_u) std::swap(s.u[static_cast<std::size_t>(k)], s.u[static_cast<std::size_t>(bi)]);
    swap_cols(k, bj);
    const long long pe_v = pow_ll(p, bv);
    long long uinv = mod_inverse(m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] / pe_v, q);
    for (int i = k + 1; i < rows; ++i) {
      long long v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (v == 0) continue;
      long long factor = (v / pe_v) % q * uinv % q;
      reduce_by(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(k)], factor, q, 0);
      if (want_u)
        reduce_by(s.u[static_cast<std::size_t>(i)], s.u[static_cast<std::size_t>(k)], factor, q,
                  0);
    }
    for (int j = k + 1; j < cols; ++j) {
      long long v = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      if (v == 0) continue;
      long long factor = (v / pe_v) % q * uinv % q;
      for (int i = 0; i < rows; ++i) {
        long long x = (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                       factor * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) %
                      q;
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x < 0 ? x + q : x;
      }
      for (int i = 0; i < cols; ++i) {
        long long x = (s.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                       factor * s.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) %
                      q;
        s.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x < 0 ? x + q : x;
      }
    }
  }
  for (int i = 0; i < limit; ++i) {
    long long v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    s.diag.push_back(v == 0 ? 0 : pow_ll(p, valuation(v, p, e)));
  }
  return s;
}

LocalKernel local_kernel(const LocalRowSpace& sys) {
  if (sys.rhs_count() != 0)
    throw Error(ErrorKind::Internal, "kernel computation expects no RHS columns");
  int rows = static_cast<int>(sys.rows().size());
  int cols = sys.width();
  LocalKernel k;
  if (rows == 0) {
    for (int i = 0; i < cols; ++i) {
      std::vector<long long> gen(static_cast<std::size_t>(cols), 0);
      gen[static_cast<std::size_t>(i)] = 1;
      k.gens.push_back(std::move(gen));
      k.orders.push_back(sys.q());
    }
    return k;
  }
  LocalSmith s = local_smith(sys.rows(), rows, cols, sys.p(), sys.e(), false);
  int limit = std::min(rows, cols);
  for (int i = 0; i < cols; ++i) {
    long long d = i < limit ? s.diag[static_cast<std::size_t>(i)] : 0;
    long long scale, order;
    if (d == 0) {
      scale = 1;
      order = sys.q();
    } else {
      scale = sys.q() / d;
      order = d;
    }
    if (order == 1) continue;
    std::vector<long long> gen(static_cast<std::size_t>(cols));
    for (int r = 0; r < cols; ++r)
      gen[static_cast<std::size_t>(r)] =
          s.v[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] * (scale % sys.q()) %
          sys.q();
    k.gens.push_back(std::move(gen));
    k.orders.push_back(order);
  }
  return k;
}

}  // namespace zc
