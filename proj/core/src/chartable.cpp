#include "zcenter/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zcenter/zmodlin.hpp"

namespace zc {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long primitive_root(long long p) {
  std::vector<long long> primes;
  long long m = p - 1;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  for (long long z = 2; z < p; ++z) {
    bool ok = true;
    for (long long q : primes)
      if (mod_pow(z, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return z;
  }
  throw Error(ErrorKind::Internal, "no primitive root found");
}

// GF(p) dense vectors/matrices as vector<long long>, row-major.
struct Fp {
  long long p;
  long long add(long long a, long long b) const { return (a + b) % p; }
  long long sub(long long a, long long b) const { return ((a - b) % p + p) % p; }
  long long mul(long long a, long long b) const { return a * b % p; }
  long long inv(long long a) const { return mod_inverse(a, p); }
};

// Echelonized subspace basis over GF(p); rows are basis vectors.
struct SubspaceBasis {
  std::vector<std::vector<long long>> rows;
  std::vector<int> pivot_cols;
  Fp f;

  void insert(std::vector<long long> v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      long long c = v[static_cast<std::size_t>(pivot_cols[r])];
      if (c == 0) continue;
      long long factor = f.mul(c, f.inv(rows[r][static_cast<std::size_t>(pivot_cols[r])]));
      for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = f.sub(v[k], f.mul(factor, rows[r][k]));
    }
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) {
        pivot_cols.push_back(static_cast<int>(k));
        rows.push_back(std::move(v));
        return;
      }
  }
  int dim() const { return static_cast<int>(rows.size()); }
  // coordinates of v in this basis (v must lie in the span)
  std::vector<long long> coords(std::vector<long long> v) const {
    std::vector<long long> c(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      long long x = v[static_cast<std::size_t>(pivot_cols[r])];
      if (x == 0) continue;
      long long factor = f.mul(x, f.inv(rows[r][static_cast<std::size_t>(pivot_cols[r])]));
      c[r] = factor;
      for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = f.sub(v[k], f.mul(factor, rows[r][k]));
    }
    for (long long x : v)
      if (x != 0) throw Error(ErrorKind::Internal, "vector escapes subspace");
    return c;
  }
};

// characteristic polynomial mod p via Faddeev-LeVerrier (requires p > dim)
std::vector<long long> char_poly(const std::vector<std::vector<long long>>& a, Fp f) {
  int k = static_cast<int>(a.size());
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(k),
                                        std::vector<long long>(k, 0));
  std::vector<long long> coeffs(static_cast<std::size_t>(k) + 1, 0);
  coeffs[static_cast<std::size_t>(k)] = 1;  // monic
  std::vector<std::vector<long long>> am = m;
  for (int step = 1; step <= k; ++step) {
    // m = a * (m + c_{k-step+1} I)
    std::vector<std::vector<long long>> t = m;
    long long c_prev = coeffs[static_cast<std::size_t>(k - step + 1)];
    for (int i = 0; i < k; ++i)
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
          f.add(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)], c_prev);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        long long s = 0;
        for (int l = 0; l < k; ++l)
          s = f.add(s, f.mul(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)],
                             t[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]));
        am[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
      }
    m = am;
    long long tr = 0;
    for (int i = 0; i < k; ++i)
      tr = f.add(tr, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    long long c = f.mul(tr, f.inv(step));
    coeffs[static_cast<std::size_t>(k - step)] = f.sub(0, c);
  }
  return coeffs;
}

}  // namespace

CharacterTable character_table(const GroupTable& g, int max_order) {
  int n = g.order();
  if (n > max_order)
    throw Error(ErrorKind::SizeLimitExceeded,
                "character table bounded at order " + std::to_string(max_order));
  CharacterTable tab;
  tab.classes = conjugacy_classes(g);
  tab.class_of = conjugacy_class_map(g);
  int k = static_cast<int>(tab.classes.size());
  long long e = g.exponent();
  tab.root_order = e;

  // prime p = 1 mod exp(G), p > 2 sqrt(|G|) exp(G) and p > |G|
  long long lower = std::max<long long>(static_cast<long long>(2.0 * std::sqrt(double(n)) * e) + 1, n + 1);
  long long p = ((lower / e) + 1) * e + 1;
  while (!is_prime(p)) p += e;
  Fp f{p};

  std::vector<int> reps(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) reps[static_cast<std::size_t>(c)] = tab.classes[static_cast<std::size_t>(c)][0];
  std::vector<long long> class_size(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) class_size[static_cast<std::size_t>(c)] = static_cast<long long>(tab.classes[static_cast<std::size_t>(c)].size());
  std::vector<int> inv_class(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c)
    inv_class[static_cast<std::size_t>(c)] = tab.class_of[static_cast<std::size_t>(g.inv(reps[static_cast<std::size_t>(c)]))];

  // class multiplication coefficients: M_i[j][l] = #{x in C_i : x^{-1} z_l in C_j}
  std::vector<std::vector<std::vector<long long>>> M(
      static_cast<std::size_t>(k),
      std::vector<std::vector<long long>>(static_cast<std::size_t>(k),
                                          std::vector<long long>(static_cast<std::size_t>(k), 0)));
  for (int i = 0; i < k; ++i)
    for (int x : tab.classes[static_cast<std::size_t>(i)])
      for (int l = 0; l < k; ++l) {
        int y = g.mul(g.inv(x), reps[static_cast<std::size_t>(l)]);
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(tab.class_of[static_cast<std::size_t>(y)])]
         [static_cast<std::size_t>(l)] += 1;
      }

  // split common eigenspaces
  std::vector<SubspaceBasis> spaces;
  {
    SubspaceBasis full;
    full.f = f;
    for (int i = 0; i < k; ++i) {
      std::vector<long long> v(static_cast<std::size_t>(k), 0);
      v[static_cast<std::size_t>(i)] = 1;
      full.insert(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    bool all_one = true;
    for (const auto& s : spaces) all_one &= s.dim() == 1;
    if (all_one) break;
    // candidate eigenvalues of M_i = roots of its characteristic polynomial
    std::vector<long long> cp = char_poly(M[static_cast<std::size_t>(i)], f);
    std::vector<long long> lambdas;
    for (long long lam = 0; lam < p; ++lam) {
      long long v = 0;
      for (int d = k; d >= 0; --d) v = f.add(f.mul(v, lam), cp[static_cast<std::size_t>(d)]);
      if (v == 0) lambdas.push_back(lam);
    }
    std::vector<SubspaceBasis> next;
    for (SubspaceBasis& s : spaces) {
      if (s.dim() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      int d = s.dim();
      for (long long lam : lambdas) {
        // rows of R = (M_i - lam) applied to basis vectors, in subspace coords
        std::vector<std::vector<long long>> r(static_cast<std::size_t>(d));
        for (int b = 0; b < d; ++b) {
          std::vector<long long> w(static_cast<std::size_t>(k), 0);
          for (int col = 0; col < k; ++col) {
            long long x = s.rows[static_cast<std::size_t>(b)][static_cast<std::size_t>(col)];
            if (x == 0) continue;
            for (int row = 0; row < k; ++row)
              w[static_cast<std::size_t>(row)] =
                  f.add(w[static_cast<std::size_t>(row)],
                        f.mul(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)]
                               [static_cast<std::size_t>(col)],
                              x));
          }
          for (std::size_t t = 0; t < w.size(); ++t)
            w[t] = f.sub(w[t], f.mul(lam, s.rows[static_cast<std::size_t>(b)][t]));
          r[static_cast<std::size_t>(b)] = s.coords(std::move(w));
        }
        // kernel vectors c: sum_b c_b r[b] = 0
        SubspaceBasis ech;
        ech.f = f;
        std::vector<std::vector<long long>> kernel;
        std::vector<std::vector<long long>> aug(static_cast<std::size_t>(d));
        for (int b = 0; b < d; ++b) {
          aug[static_cast<std::size_t>(b)] = r[static_cast<std::size_t>(b)];
          for (int t = 0; t < d; ++t)
            aug[static_cast<std::size_t>(b)].push_back(b == t ? 1 : 0);
        }
        // eliminate on the first d columns; rows that vanish give kernel coords
        std::vector<int> pivots;
        for (int b = 0; b < d; ++b) {
          std::vector<long long>& row = aug[static_cast<std::size_t>(b)];
          for (std::size_t rI = 0; rI < pivots.size(); ++rI) {
            long long c = row[static_cast<std::size_t>(pivots[rI])];
            if (c == 0) continue;
            const std::vector<long long>& prow = aug[static_cast<std::size_t>(rI)];
            long long factor = f.mul(c, f.inv(prow[static_cast<std::size_t>(pivots[rI])]));
            for (std::size_t t = 0; t < row.size(); ++t)
              row[t] = f.sub(row[t], f.mul(factor, prow[t]));
          }
          int pc = -1;
          for (int t = 0; t < d; ++t)
            if (row[static_cast<std::size_t>(t)] != 0) {
              pc = t;
              break;
            }
          if (pc >= 0) {
            if (static_cast<int>(pivots.size()) != b) std::swap(aug[pivots.size()], aug[static_cast<std::size_t>(b)]);
            pivots.push_back(pc);
          } else {
            std::vector<long long> coeffs(row.begin() + d, row.end());
            kernel.push_back(std::move(coeffs));
          }
        }
        if (kernel.empty()) continue;
        SubspaceBasis sub;
        sub.f = f;
        for (const auto& c : kernel) {
          std::vector<long long> v(static_cast<std::size_t>(k), 0);
          for (int b = 0; b < d; ++b) {
            if (c[static_cast<std::size_t>(b)] == 0) continue;
            for (int t = 0; t < k; ++t)
              v[static_cast<std::size_t>(t)] =
                  f.add(v[static_cast<std::size_t>(t)],
                        f.mul(c[static_cast<std::size_t>(b)],
                              s.rows[static_cast<std::size_t>(b)][static_cast<std::size_t>(t)]));
          }
          sub.insert(std::move(v));
        }
        if (sub.dim() > 0) next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces)
    if (s.dim() != 1)
      throw Error(ErrorKind::Internal, "class algebra failed to split over GF(p)");

  // power-map classes for the lift
  long long z = primitive_root(p);
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<long long> degrees;
  for (const auto& s : spaces) {
    std::vector<long long> v = s.rows[0];
    if (v[0] == 0) throw Error(ErrorKind::Internal, "eigenvector vanishes at identity class");
    long long scale = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, scale);
    // chi(1)^2 = |G| / sum_j v_j v_{j*} / |C_j|
    long long acc = 0;
    for (int j = 0; j < k; ++j)
      acc = f.add(acc, f.mul(f.mul(v[static_cast<std::size_t>(j)],
                                   v[static_cast<std::size_t>(inv_class[static_cast<std::size_t>(j)])]),
                             f.inv(class_size[static_cast<std::size_t>(j)] % p)));
    long long d2 = f.mul(n % p, f.inv(acc));
    long long deg = 0;
    for (long long d = 1; d * d <= n; ++d)
      if (f.mul(d % p, d % p) == d2) {
        deg = d;
        break;
      }
    if (deg == 0) throw Error(ErrorKind::Internal, "degree recovery failed");
    // values mod p per class
    std::vector<long long> chi_p(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
      chi_p[static_cast<std::size_t>(j)] =
          f.mul(f.mul(deg % p, v[static_cast<std::size_t>(j)]),
                f.inv(class_size[static_cast<std::size_t>(j)] % p));
    // lift via eigenvalue multiplicities
    std::vector<Cyclotomic> row;
    for (int j = 0; j < k; ++j) {
      int rep = reps[static_cast<std::size_t>(j)];
      int o = g.element_order(rep);
      long long zeta = mod_pow(z, (p - 1) / o, p);
      Cyclotomic val(e);
      long long oinv = f.inv(o % p);
      for (int u = 0; u < o; ++u) {
        long long m_u = 0;
        int gt = 0;
        for (int t = 0; t < o; ++t) {
          long long zexp = mod_pow(zeta, ((static_cast<long long>(o) - u) * t) % o, p);
          m_u = f.add(m_u, f.mul(chi_p[static_cast<std::size_t>(tab.class_of[static_cast<std::size_t>(gt)])], zexp));
          gt = g.mul(gt, rep);
        }
        m_u = f.mul(m_u, oinv);
        if (m_u > deg)
          throw Error(ErrorKind::Internal, "eigenvalue multiplicity out of range");
        if (m_u != 0) val += Rat(m_u) * Cyclotomic::root(e, (e / o) * u);
      }
      row.push_back(std::move(val));
    }
    degrees.push_back(deg);
    rows.push_back(std::move(row));
  }

  long long degsum = 0;
  for (long long d : degrees) degsum += d * d;
  if (degsum != n)
    throw Error(ErrorKind::Internal, "character degrees do not square-sum to |G|");

  // canonical row order: degree ascending, then value sequence lex descending
  std::vector<std::size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    for (int j = 0; j < k; ++j) {
      int c = Cyclotomic::compare(rows[a][static_cast<std::size_t>(j)],
                                  rows[b][static_cast<std::size_t>(j)]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  for (std::size_t i : perm) {
    tab.degrees.push_back(degrees[i]);
    tab.rows.push_back(std::move(rows[i]));
  }
  return tab;
}

CentralExtension central_extension(const GroupTable& h, const Cochain& mu, long long n) {
  if (mu.degree != 2) throw Error(ErrorKind::DegreeUnsupported, "extension needs a 2-cochain");
  if (!mu.is_normalized() || !is_cocycle(h, mu))
    throw Error(ErrorKind::NotACocycle, "extension multiplier is not a normalized 2-cocycle");
  if (n % mu.denominator_lcm() != 0)
    throw Error(ErrorKind::OrderMismatch, "n does not annihilate the 2-cocycle");
  int m = h.order();
  int order = static_cast<int>(n) * m;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order),
                                  std::vector<int>(static_cast<std::size_t>(order)));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < m; ++x)
      for (int b = 0; b < n; ++b)
        for (int y = 0; y < m; ++y) {
          const Phase& v = mu(x, y);
          long long shift = v.num() * (n / v.den());
          int a2 = static_cast<int>((a + b + shift) % n);
          t[static_cast<std::size_t>(a * m + x)][static_cast<std::size_t>(b * m + y)] =
              a2 * m + h.mul(x, y);
        }
  std::vector<std::string> names(static_cast<std::size_t>(order));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < m; ++x)
      names[static_cast<std::size_t>(a * m + x)] =
          "z" + std::to_string(a) + "*" + h.name(x);
  CentralExtension ext;
  ext.table = GroupTable::from_multiplication_table(t, std::move(names));
  ext.n = static_cast<int>(n);
  ext.base_order = m;
  return ext;
}

ProjectiveCharacterTable projective_character_table(const GroupTable& h, const Cochain& mu,
                                                    int max_order) {
  long long n = mu.denominator_lcm();
  ProjectiveCharacterTable out;
  if (n == 1) {
    CharacterTable tab = character_table(h, max_order);
    out.root_order = tab.root_order;
    out.degrees = tab.degrees;
    for (const auto& row : tab.rows) {
      std::vector<Cyclotomic> r;
      for (int x = 0; x < h.order(); ++x)
        r.push_back(row[static_cast<std::size_t>(tab.class_of[static_cast<std::size_t>(x)])]);
      out.rows.push_back(std::move(r));
    }
    return out;
  }
  CentralExtension ext = central_extension(h, mu, n);
  CharacterTable tab = character_table(ext.table, max_order);
  out.root_order = tab.root_order;
  Cyclotomic zeta_n = Cyclotomic::root(tab.root_order, tab.root_order / n);
  for (std::size_t chi = 0; chi < tab.rows.size(); ++chi) {
    const Cyclotomic& central = tab.value(static_cast<int>(chi), ext.central(1));
    if (!(central == Rat(tab.degrees[chi]) * zeta_n)) continue;
    std::vector<Cyclotomic> r;
    for (int x = 0; x < h.order(); ++x)
      r.push_back(tab.value(static_cast<int>(chi), ext.lift(x)));
    out.degrees.push_back(tab.degrees[chi]);
    out.rows.push_back(std::move(r));
  }
  long long degsum = 0;
  for (long long d : out.degrees) degsum += d * d;
  if (degsum != h.order())
    throw Error(ErrorKind::Internal, "projective degrees do not square-sum to |H|");
  return out;
}

}  // namespace zc
