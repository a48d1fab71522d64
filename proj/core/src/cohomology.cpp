#include "zcenter/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zcenter/zmodlin.hpp"

namespace zc {

namespace {

// Indexing of nonidentity tuples: a degree-d normalized cochain is a vector
// over (n-1)^d entries, mixed radix over elements 1..n-1.
struct TupleIndexer {
  int n;   // group order
  int deg;
  std::size_t count() const {
    std::size_t s = 1;
    for (int i = 0; i < deg; ++i) s *= static_cast<std::size_t>(n - 1);
    return s;
  }
  // args are parent-group element indices, all nonzero
  std::size_t index(const int* args) const {
    std::size_t ix = 0;
    for (int i = 0; i < deg; ++i) ix = ix * (n - 1) + static_cast<std::size_t>(args[i] - 1);
    return ix;
  }
  void decode(std::size_t ix, int* args) const {
    for (int i = deg - 1; i >= 0; --i) {
      args[i] = static_cast<int>(ix % (n - 1)) + 1;
      ix /= static_cast<std::size_t>(n - 1);
    }
  }
};

// Sparse row of the bar differential d: C^{deg-1} -> C^{deg} at a given
// degree-deg tuple; entries hitting identity-containing tuples are dropped
// (normalized cochains).
SparseRow differential_row(const GroupTable& g, const TupleIndexer& unknowns,
                           const int* args) {
  int deg = unknowns.deg + 1;
  SparseRow row;
  std::vector<int> sub(static_cast<std::size_t>(unknowns.deg));
  auto emit = [&](long long sign) {
    for (int v : sub)
      if (v == 0) return;
    row.add(static_cast<int>(unknowns.index(sub.data())), sign);
  };
  for (int i = 0; i < deg - 1; ++i) sub[static_cast<std::size_t>(i)] = args[i + 1];
  emit(1);
  long long sign = -1;
  for (int i = 1; i < deg; ++i) {
    for (int j = 0, k = 0; j < deg; ++j) {
      if (j == i - 1) {
        sub[static_cast<std::size_t>(k++)] = g.mul(args[j], args[j + 1]);
        ++j;
      } else {
        sub[static_cast<std::size_t>(k++)] = args[j];
      }
    }
    emit(sign);
    sign = -sign;
  }
  for (int i = 0; i < deg - 1; ++i) sub[static_cast<std::size_t>(i)] = args[i];
  emit(sign);
  return row;
}

// Scaled residues of a cochain's values over nonidentity tuples: value p/q
// becomes p * (modulus/q) mod modulus (requires q | modulus).
std::vector<long long> scaled_values(const Cochain& c, const TupleIndexer& ix,
                                     long long modulus) {
  std::vector<long long> out(ix.count());
  std::vector<int> args(static_cast<std::size_t>(ix.deg));
  for (std::size_t t = 0; t < out.size(); ++t) {
    ix.decode(t, args.data());
    const Phase& v = c.values[c.index(args.data())];
    if (modulus % v.den() != 0)
      throw Error(ErrorKind::Internal, "modulus does not clear cochain denominators");
    out[t] = v.num() % modulus * (modulus / v.den()) % modulus;
  }
  return out;
}

Cochain cochain_from_residues(const GroupTable& g, int deg,
                              const std::vector<long long>& vals, long long modulus) {
  TupleIndexer ix{g.order(), deg};
  Cochain c(deg, g.order());
  std::vector<int> args(static_cast<std::size_t>(deg));
  for (std::size_t t = 0; t < ix.count(); ++t) {
    ix.decode(t, args.data());
    c.values[c.index(args.data())] = Phase(vals[t], modulus);
  }
  return c;
}

// One witness search at a fixed modulus L (solved independently modulo each
// prime power of L, CRT-combined).  Returns the witness cochain if every
// prime-power system is consistent.
std::optional<Cochain> witness_at_modulus(const GroupTable& g, const Cochain& beta,
                                          long long L) {
  int n = g.order();
  int deg = beta.degree;
  TupleIndexer unknowns{n, deg - 1};
  TupleIndexer rows{n, deg};
  std::vector<long long> combined(unknowns.count(), 0);
  long long combined_mod = 1;
  std::vector<long long> rhs_all = scaled_values(beta, rows, L);
  for (const PrimePower& pp : factor_prime_powers(L)) {
    LocalRowSpace sys(static_cast<int>(unknowns.count()), 1, pp.p, pp.e);
    std::vector<int> args(static_cast<std::size_t>(deg));
    std::vector<long long> rhs1(1);
    for (std::size_t t = 0; t < rows.count(); ++t) {
      rows.decode(t, args.data());
      rhs1[0] = rhs_all[t] % pp.q;
      sys.add_row(differential_row(g, unknowns, args.data()), rhs1);
    }
    auto sols = local_solve(sys);
    if (!sols[0].has_value()) return std::nullopt;
    const std::vector<long long>& x = *sols[0];
    // CRT combine into modulus combined_mod * q
    long long m1 = combined_mod, m2 = pp.q;
    long long m = m1 * m2;
    long long inv1 = m1 == 1 ? 0 : mod_inverse(m2 % m1, m1);
    for (std::size_t i = 0; i < combined.size(); ++i) {
      long long r2 = x[i] % m2;
      long long r1 = combined[i] % std::max<long long>(m1, 1);
      long long t = m1 == 1 ? r2 : (r2 + m2 * (((r1 - r2) % m1 + m1) % m1 * inv1 % m1)) % m;
      combined[i] = ((t % m) + m) % m;
    }
    combined_mod = m;
  }
  // combined_mod = L up to prime ordering; values are residues mod L
  return cochain_from_residues(g, deg - 1, combined, combined_mod);
}

}  // namespace

CoboundaryOutcome solve_coboundary(const GroupTable& g, const Cochain& beta) {
  if (beta.degree != 2 && beta.degree != 3)
    throw Error(ErrorKind::DegreeUnsupported, "solve_coboundary handles degrees 2 and 3");
  if (beta.group_order != g.order())
    throw Error(ErrorKind::MismatchedContext, "cochain/group mismatch");
  if (!beta.is_normalized())
    throw Error(ErrorKind::NotACocycle, "cochain is not normalized");
  if (!is_cocycle(g, beta)) throw Error(ErrorKind::NotACocycle, "input is not a cocycle");

  CoboundaryOutcome out;
  if (beta.is_zero()) {
    out.is_coboundary = true;
    out.witness = zero_cochain(g, beta.degree - 1);
    out.modulus_tried = 1;
    return out;
  }

  // Cyclic obstruction: on <x> of order m, sum_i beta(x, x^i, x) is a
  // complete invariant of the restricted class; nonzero means the class is
  // nontrivial already on a cyclic subgroup.
  if (beta.degree == 3) {
    for (int x = 1; x < g.order(); ++x) {
      Phase nu;
      int xi = 0;
      do {
        nu += beta(x, xi, x);
        xi = g.mul(xi, x);
      } while (xi != 0);
      if (!nu.is_zero()) {
        out.is_coboundary = false;
        out.certain_negative = true;
        out.obstruction = "nontrivial on the cyclic subgroup generated by element " +
                          std::to_string(x) + " (invariant " + nu.str() + ")";
        out.modulus_tried = 0;
        return out;
      }
    }
  }

  long long m = beta.denominator_lcm();
  long long n = g.order();
  for (long long L : {m * n, m * n * n}) {
    out.modulus_tried = L;
    std::optional<Cochain> w = witness_at_modulus(g, beta, L);
    if (!w.has_value()) continue;
    if (!(differential(g, *w) == beta))
      throw Error(ErrorKind::Internal, "coboundary witness failed verification");
    out.is_coboundary = true;
    out.witness = std::move(*w);
    return out;
  }
  out.is_coboundary = false;
  out.obstruction = "no witness with denominator dividing " + std::to_string(out.modulus_tried);
  return out;
}

Cochain require_coboundary_witness(const GroupTable& g, const Cochain& beta) {
  CoboundaryOutcome o = solve_coboundary(g, beta);
  if (!o.is_coboundary)
    throw Error(ErrorKind::NotACoboundary, o.obstruction);
  return o.witness;
}

namespace {

// A subquotient of the cochain module presented as an internal direct sum of
// cyclic groups: generators (residue vectors mod q) with their orders.
struct CyclicStack {
  std::vector<std::vector<long long>> gens;
  std::vector<long long> orders;
};

// Quotient of `stack` by the subgroup generated by `rels` (each given as a
// coefficient tuple over stack.gens).  Returns a new independent stack.
CyclicStack quotient_stack(const CyclicStack& stack,
                           const std::vector<std::vector<long long>>& rels, long long p, int e) {
  long long q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  int k = static_cast<int>(stack.gens.size());
  if (k == 0) return {};
  int rcount = static_cast<int>(rels.size());
  std::vector<std::vector<long long>> pres(static_cast<std::size_t>(k),
                                           std::vector<long long>(k + rcount, 0));
  for (int i = 0; i < k; ++i)
    pres[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        stack.orders[static_cast<std::size_t>(i)] % q;
  for (int j = 0; j < rcount; ++j)
    for (int i = 0; i < k; ++i)
      pres[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + j)] =
          ((rels[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] % q) + q) % q;
  LocalSmith s = local_smith(pres, k, k + rcount, p, e, /*want_u=*/true);
  // invert U mod q (it is a product of elementary operations)
  std::vector<std::vector<long long>> uinv(static_cast<std::size_t>(k),
                                           std::vector<long long>(k, 0));
  {
    LocalRowSpace rs(k, k, p, e);
    for (int i = 0; i < k; ++i) {
      SparseRow r;
      for (int j = 0; j < k; ++j)
        if (s.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
          r.add(j, s.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      std::vector<long long> rhs(static_cast<std::size_t>(k), 0);
      rhs[static_cast<std::size_t>(i)] = 1;
      rs.add_row(r, rhs);
    }
    auto sols = local_solve(rs);
    for (int i = 0; i < k; ++i) {
      if (!sols[static_cast<std::size_t>(i)].has_value())
        throw Error(ErrorKind::Internal, "row transform not invertible");
      for (int r = 0; r < k; ++r)
        uinv[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] =
            (*sols[static_cast<std::size_t>(i)])[static_cast<std::size_t>(r)];
    }
  }
  CyclicStack out;
  std::size_t width = stack.gens[0].size();
  for (int i = 0; i < k; ++i) {
    long long d = i < static_cast<int>(s.diag.size()) ? s.diag[static_cast<std::size_t>(i)] : 0;
    long long order = d == 0 ? q : d;
    if (order <= 1) continue;
    std::vector<long long> gen(width, 0);
    for (int j = 0; j < k; ++j) {
      long long c = uinv[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (c == 0) continue;
      for (std::size_t t = 0; t < width; ++t)
        gen[t] = (gen[t] + c * stack.gens[static_cast<std::size_t>(j)][t]) % q;
    }
    bool nonzero = false;
    for (long long v : gen) nonzero |= v != 0;
    if (!nonzero) continue;
    out.gens.push_back(std::move(gen));
    out.orders.push_back(order);
  }
  return out;
}

struct PrimeCohomology {
  long long p;
  int e;
  long long q;
  CyclicStack classes;  // independent generators of H^deg(G, Z/q) after filtering
};

// Enumerate all coefficient tuples over the stack orders; calls f(coeffs).
template <typename F>
bool enumerate_coeffs(const std::vector<long long>& orders, long long cap, F&& f) {
  long long total = 1;
  for (long long o : orders) {
    total *= o;
    if (total > cap) return false;
  }
  std::vector<long long> c(orders.size(), 0);
  for (long long t = 0; t < total; ++t) {
    long long x = t;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      c[i] = x % orders[i];
      x /= orders[i];
    }
    f(c);
  }
  return true;
}

PrimeCohomology prime_cohomology(const GroupTable& g, int degree, const PrimePower& pp) {
  int n = g.order();
  TupleIndexer unknowns{n, degree};
  TupleIndexer rows{n, degree + 1};
  PrimeCohomology out{pp.p, pp.e, pp.q, {}};

  // kernel of d_degree
  LocalRowSpace sys(static_cast<int>(unknowns.count()), 0, pp.p, pp.e);
  {
    std::vector<int> args(static_cast<std::size_t>(degree) + 1);
    for (std::size_t t = 0; t < rows.count(); ++t) {
      rows.decode(t, args.data());
      sys.add_row(differential_row(g, unknowns, args.data()), {});
    }
  }
  LocalKernel ker = local_kernel(sys);
  CyclicStack stack;
  stack.gens = std::move(ker.gens);
  stack.orders = std::move(ker.orders);
  if (stack.gens.empty()) return out;

  // image of d_{degree-1}: relations, expressed in kernel coordinates
  if (degree >= 1) {
    TupleIndexer lower{n, degree - 1};
    std::vector<std::vector<long long>> img;
    if (degree - 1 >= 1) {
      std::vector<int> args(static_cast<std::size_t>(degree));
      for (std::size_t b = 0; b < lower.count(); ++b) {
        // d of the basis cochain e_b, evaluated over nonidentity tuples
        std::vector<long long> v(unknowns.count(), 0);
        for (std::size_t t = 0; t < unknowns.count(); ++t) {
          unknowns.decode(t, args.data());
          SparseRow r = differential_row(g, lower, args.data());
          for (auto [c, coef] : r.entries)
            if (static_cast<std::size_t>(c) == b)
              v[t] = ((v[t] + coef) % pp.q + pp.q) % pp.q;
        }
        img.push_back(std::move(v));
      }
    }
    if (!img.empty()) {
      // coordinates of image vectors in terms of kernel generators
      int kk = static_cast<int>(stack.gens.size());
      LocalRowSpace coords(kk, static_cast<int>(img.size()), pp.p, pp.e);
      for (std::size_t r = 0; r < unknowns.count(); ++r) {
        SparseRow row;
        bool any = false;
        for (int j = 0; j < kk; ++j) {
          long long v = stack.gens[static_cast<std::size_t>(j)][r];
          if (v != 0) {
            row.add(j, v);
            any = true;
          }
        }
        std::vector<long long> rhs(img.size());
        for (std::size_t j = 0; j < img.size(); ++j) {
          rhs[j] = img[j][r];
          any |= rhs[j] != 0;
        }
        if (any) coords.add_row(row, rhs);
      }
      auto sols = local_solve(coords);
      std::vector<std::vector<long long>> rels;
      for (auto& s : sols) {
        if (!s.has_value())
          throw Error(ErrorKind::Internal, "coboundary image escaped the cocycle kernel");
        rels.push_back(std::move(*s));
      }
      stack = quotient_stack(stack, rels, pp.p, pp.e);
    }
  }
  out.classes = std::move(stack);
  return out;
}

// Filter out classes that die over Q/Z (degree >= 2): quotient by the
// subgroup of elements whose representing cocycles are Q/Z-coboundaries.
void filter_prime_classes(const GroupTable& g, int degree, PrimeCohomology& pc,
                          const CohomologyOptions& opt) {
  if (degree < 2 || pc.classes.gens.empty()) return;
  std::vector<std::vector<long long>> dead;
  bool ok = enumerate_coeffs(pc.classes.orders, opt.max_enumeration,
                             [&](const std::vector<long long>& coeffs) {
    bool zero = true;
    for (long long c : coeffs) zero &= c == 0;
    if (zero) return;
    std::vector<long long> vec(pc.classes.gens[0].size(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      for (std::size_t t = 0; t < vec.size(); ++t)
        vec[t] = (vec[t] + coeffs[i] * pc.classes.gens[i][t]) % pc.q;
    }
    Cochain beta = cochain_from_residues(g, degree, vec, pc.q);
    CoboundaryOutcome o = solve_coboundary(g, beta);
    if (o.is_coboundary) dead.push_back(coeffs);
  });
  if (!ok)
    throw Error(ErrorKind::SizeLimitExceeded, "raw cohomology group too large to filter");
  if (!dead.empty()) pc.classes = quotient_stack(pc.classes, dead, pc.p, pc.e);
}

bool try_split_product(const GroupTable& g, GroupTable& a_out, GroupTable& b_out,
                       std::vector<std::pair<int, int>>& factor_of) {
  // look for elementwise-commuting normal subgroups A, B with A*B = G,
  // A ^ B = {e}
  std::vector<Subgroup> subs;
  try {
    subs = all_subgroups_raw(g, 64);
  } catch (const Error&) {
    return false;
  }
  for (const Subgroup& a : subs) {
    if (a.order() == 1 || a.order() == g.order()) continue;
    if (!is_normal_in(a, full_subgroup(g))) continue;
    for (const Subgroup& b : subs) {
      if (a.order() * b.order() != g.order()) continue;
      if ((a.mask & b.mask) != 1u) continue;
      if (!is_normal_in(b, full_subgroup(g))) continue;
      bool commuting = true;
      for (int x : a.elems)
        for (int y : b.elems)
          if (g.mul(x, y) != g.mul(y, x)) {
            commuting = false;
            break;
          }
      if (!commuting) continue;
      EmbeddedGroup ea = subgroup_as_group(a), eb = subgroup_as_group(b);
      a_out = ea.table;
      b_out = eb.table;
      factor_of.assign(static_cast<std::size_t>(g.order()), {-1, -1});
      for (int x = 0; x < a_out.order(); ++x)
        for (int y = 0; y < b_out.order(); ++y) {
          int gete = g.mul(ea.to_parent[static_cast<std::size_t>(x)],
                           eb.to_parent[static_cast<std::size_t>(y)]);
          factor_of[static_cast<std::size_t>(gete)] = {x, y};
        }
      for (auto [x, y] : factor_of)
        if (x < 0) return false;
      return true;
    }
  }
  return false;
}

// H^2 of an (internal) direct product via the Schur-Kunneth decomposition:
// H^2(AxB) = H^2(A) + H^2(B) + Bihom(A x B -> Q/Z), with explicit cocycle
// representatives (inflations plus beta(a1, b2) cup terms).
CohomologyResult product_cohomology2(const GroupTable& g, const GroupTable& a,
                                     const GroupTable& b,
                                     const std::vector<std::pair<int, int>>& factor_of,
                                     const CohomologyOptions& opt) {
  CohomologyResult ca = cohomology(a, 2, opt);
  CohomologyResult cb = cohomology(b, 2, opt);
  std::vector<std::vector<Phase>> bil = all_bilinear_qz(a, b);

  CohomologyResult out;
  auto inflate = [&](const Cochain& c, bool first_factor) {
    Cochain r(2, g.order());
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y) {
        int ax = factor_of[static_cast<std::size_t>(x)].first;
        int bx = factor_of[static_cast<std::size_t>(x)].second;
        int ay = factor_of[static_cast<std::size_t>(y)].first;
        int by = factor_of[static_cast<std::size_t>(y)].second;
        r.at({x, y}) = first_factor ? c(ax, ay) : c(bx, by);
      }
    return r;
  };
  for (std::size_t i = 0; i < ca.generators.size(); ++i) {
    out.invariant_factors.push_back(ca.invariant_factors[i]);
    out.generators.push_back(inflate(ca.generators[i], true));
  }
  for (std::size_t i = 0; i < cb.generators.size(); ++i) {
    out.invariant_factors.push_back(cb.invariant_factors[i]);
    out.generators.push_back(inflate(cb.generators[i], false));
  }
  // independent generators of the bihomomorphism group, picked greedily by
  // descending order; a candidate is kept only if it enlarges the span by a
  // full factor of its order, which keeps the chosen family independent
  if (bil.size() > 1) {
    std::vector<std::vector<Phase>> chosen;
    std::vector<long long> orders;
    auto element_order = [](const std::vector<Phase>& v) {
      long long o = 1;
      for (const Phase& p : v) o = std::lcm(o, p.den());
      return o;
    };
    std::vector<std::vector<Phase>> cands = bil;
    std::stable_sort(cands.begin(), cands.end(), [&](const auto& x, const auto& y) {
      return element_order(x) > element_order(y);
    });
    std::set<std::vector<Phase>> span;
    span.insert(std::vector<Phase>(bil[0].size()));
    for (const auto& cand : cands) {
      if (span.count(cand)) continue;
      long long o = element_order(cand);
      std::set<std::vector<Phase>> next;
      for (const auto& s : span) {
        std::vector<Phase> cur = s;
        for (long long k = 0; k < o; ++k) {
          next.insert(cur);
          for (std::size_t t = 0; t < cur.size(); ++t) cur[t] += cand[t];
        }
      }
      if (next.size() != span.size() * static_cast<std::size_t>(o)) continue;
      chosen.push_back(cand);
      orders.push_back(o);
      span = std::move(next);
      if (span.size() == bil.size()) break;
    }
    if (span.size() != bil.size())
      throw Error(ErrorKind::Internal, "bilinear group decomposition incomplete");
    int nb = b.order();
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      Cochain r(2, g.order());
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) {
          int ax = factor_of[static_cast<std::size_t>(x)].first;
          int by = factor_of[static_cast<std::size_t>(y)].second;
          r.at({x, y}) = chosen[i][static_cast<std::size_t>(ax) * nb + by];
        }
      out.invariant_factors.push_back(orders[i]);
      out.generators.push_back(r);
    }
  }
  // normalize to a descending divisibility chain presentation: here factors
  // may repeat or be unordered; downstream only needs (generator, order)
  // pairs, so sort by order descending for determinism
  std::vector<std::size_t> perm(out.generators.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
    return out.invariant_factors[i] > out.invariant_factors[j];
  });
  CohomologyResult sorted;
  for (std::size_t i : perm) {
    sorted.invariant_factors.push_back(out.invariant_factors[i]);
    sorted.generators.push_back(std::move(out.generators[i]));
  }
  return sorted;
}

}  // namespace

std::vector<std::vector<Phase>> all_characters_qz(const GroupTable& g) {
  long long e = g.exponent();
  int n = g.order();
  std::vector<std::vector<Phase>> out;
  std::vector<std::vector<long long>> gens;
  std::vector<long long> orders;
  for (const PrimePower& pp : factor_prime_powers(e)) {
    LocalRowSpace sys(n - 1, 0, pp.p, pp.e);
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y) {
        SparseRow r;
        int xy = g.mul(x, y);
        if (xy != 0) r.add(xy - 1, 1);
        r.add(x - 1, -1);
        r.add(y - 1, -1);
        sys.add_row(r, {});
      }
    LocalKernel k = local_kernel(sys);
    for (std::size_t i = 0; i < k.gens.size(); ++i) {
      std::vector<long long> full(static_cast<std::size_t>(n), 0);
      for (int x = 1; x < n; ++x) full[static_cast<std::size_t>(x)] = k.gens[i][x - 1];
      gens.push_back(std::move(full));
      orders.push_back(k.orders[i]);
      // stash modulus in the generator by scaling later; remember q via order
      gens.back().push_back(pp.q);  // trailing slot = modulus
    }
  }
  // enumerate the full (small) group of characters
  std::vector<std::vector<Phase>> chars = {std::vector<Phase>(static_cast<std::size_t>(n))};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    long long q = gens[i].back();
    std::vector<std::vector<Phase>> next;
    for (const auto& base : chars) {
      std::vector<Phase> cur = base;
      for (long long k = 0; k < orders[i]; ++k) {
        next.push_back(cur);
        for (int x = 0; x < n; ++x)
          cur[static_cast<std::size_t>(x)] += Phase(gens[i][static_cast<std::size_t>(x)], q);
      }
    }
    chars = std::move(next);
  }
  std::sort(chars.begin(), chars.end(), [](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      return a[i] < b[i];
    }
    return false;
  });
  chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
  return chars;
}

std::vector<std::vector<Phase>> all_bilinear_qz(const GroupTable& a, const GroupTable& b) {
  long long e = std::gcd(a.exponent(), b.exponent());
  int na = a.order(), nb = b.order();
  std::size_t width = static_cast<std::size_t>(na) * nb;
  std::vector<std::vector<Phase>> out = {std::vector<Phase>(width)};
  if (e == 1) return out;
  for (const PrimePower& pp : factor_prime_powers(e)) {
    LocalRowSpace sys(static_cast<int>(width), 0, pp.p, pp.e);
    auto ix = [nb](int x, int y) { return x * nb + y; };
    for (int x1 = 0; x1 < na; ++x1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y = 0; y < nb; ++y) {
          SparseRow r;
          r.add(ix(a.mul(x1, x2), y), 1);
          r.add(ix(x1, y), -1);
          r.add(ix(x2, y), -1);
          sys.add_row(r, {});
        }
    for (int x = 0; x < na; ++x)
      for (int y1 = 0; y1 < nb; ++y1)
        for (int y2 = 0; y2 < nb; ++y2) {
          SparseRow r;
          r.add(ix(x, b.mul(y1, y2)), 1);
          r.add(ix(x, y1), -1);
          r.add(ix(x, y2), -1);
          sys.add_row(r, {});
        }
    LocalKernel k = local_kernel(sys);
    for (std::size_t i = 0; i < k.gens.size(); ++i) {
      std::vector<std::vector<Phase>> next;
      for (const auto& base : out) {
        std::vector<Phase> cur = base;
        for (long long t = 0; t < k.orders[i]; ++t) {
          next.push_back(cur);
          for (std::size_t w = 0; w < width; ++w) cur[w] += Phase(k.gens[i][w], pp.q);
        }
      }
      out = std::move(next);
      if (out.size() > 4096)
        throw Error(ErrorKind::SizeLimitExceeded, "bilinear group too large");
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == y[i]) continue;
      return x[i] < y[i];
    }
    return false;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CohomologyResult cohomology(const GroupTable& g, int degree, const CohomologyOptions& opt) {
  if (degree < 1 || degree > 3)
    throw Error(ErrorKind::DegreeUnsupported, "cohomology supports degrees 1..3");
  int n = g.order();
  if (n == 1) return {};
  if (degree == 1) {
    // Hom(G, Q/Z): computed directly; present as a descending chain
    std::vector<std::vector<Phase>> chars = all_characters_qz(g);
    // the enumerated character group: rebuild invariant factors via orders
    // (sufficient for reporting; generators drawn greedily)
    CohomologyResult out;
    std::vector<std::vector<Phase>> span = {std::vector<Phase>(static_cast<std::size_t>(n))};
    auto contains = [&](const std::vector<Phase>& v) {
      for (const auto& s : span)
        if (s == v) return true;
      return false;
    };
    std::vector<std::vector<Phase>> sorted = chars;
    std::sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
      auto ord = [&](const std::vector<Phase>& c) {
        long long o = 1;
        for (const Phase& p : c) o = std::lcm(o, p.den());
        return o;
      };
      return ord(x) > ord(y);
    });
    for (const auto& cand : sorted) {
      if (contains(cand)) continue;
      long long o = 1;
      for (const Phase& p : cand) o = std::lcm(o, p.den());
      Cochain c(1, n);
      for (int x = 0; x < n; ++x) c.values[static_cast<std::size_t>(x)] = cand[static_cast<std::size_t>(x)];
      out.invariant_factors.push_back(o);
      out.generators.push_back(std::move(c));
      std::vector<std::vector<Phase>> next;
      for (const auto& s : span) {
        std::vector<Phase> cur = s;
        for (long long k = 0; k < o; ++k) {
          next.push_back(cur);
          for (int x = 0; x < n; ++x) cur[static_cast<std::size_t>(x)] += cand[static_cast<std::size_t>(x)];
        }
      }
      span = std::move(next);
      if (span.size() == chars.size()) break;
    }
    return out;
  }

  int bound = degree == 2 ? opt.max_order_deg2 : opt.max_order_deg3;
  if (n > bound) {
    if (degree == 2) {
      GroupTable a, b;
      std::vector<std::pair<int, int>> factor_of;
      if (try_split_product(g, a, b, factor_of))
        return product_cohomology2(g, a, b, factor_of, opt);
    }
    throw Error(ErrorKind::SizeLimitExceeded,
                "cohomology degree " + std::to_string(degree) + " bounded at order " +
                    std::to_string(bound));
  }

  std::vector<PrimeCohomology> per_prime;
  for (const PrimePower& pp : factor_prime_powers(static_cast<long long>(n) * n)) {
    PrimeCohomology pc = prime_cohomology(g, degree, pp);
    filter_prime_classes(g, degree, pc, opt);
    if (!pc.classes.gens.empty()) per_prime.push_back(std::move(pc));
  }
  // combine primes: sort each prime's orders descending, then zip
  CohomologyResult out;
  std::size_t maxlen = 0;
  for (auto& pc : per_prime) {
    std::vector<std::size_t> perm(pc.classes.gens.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
      return pc.classes.orders[i] > pc.classes.orders[j];
    });
    CyclicStack sorted;
    for (std::size_t i : perm) {
      sorted.gens.push_back(std::move(pc.classes.gens[i]));
      sorted.orders.push_back(pc.classes.orders[i]);
    }
    pc.classes = std::move(sorted);
    maxlen = std::max(maxlen, pc.classes.gens.size());
  }
  for (std::size_t i = 0; i < maxlen; ++i) {
    long long order = 1;
    Cochain gen = zero_cochain(g, degree);
    for (const auto& pc : per_prime) {
      if (i >= pc.classes.gens.size()) continue;
      order *= pc.classes.orders[i];
      gen = gen + cochain_from_residues(g, degree, pc.classes.gens[i], pc.q);
    }
    out.invariant_factors.push_back(order);
    out.generators.push_back(std::move(gen));
  }
  return out;
}

}  // namespace zc
