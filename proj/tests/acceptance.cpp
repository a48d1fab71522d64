// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout.  Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "zcenter/centre.hpp"
#include "zcenter/cochain.hpp"
#include "zcenter/cohomology.hpp"
#include "zcenter/etale.hpp"
#include "zcenter/group.hpp"
#include "zcenter/invariants.hpp"

using namespace zc;

namespace {

struct Check {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

using Row = std::vector<Cyclotomic>;

Row galois_canonical(const Row& row, long long n) {
  Row best = row;
  for (long long j = 1; j < n; ++j) {
    if (std::gcd(j, n) != 1) continue;
    Row cand;
    cand.reserve(row.size());
    for (const Cyclotomic& v : row) cand.push_back(v.galois(j));
    for (std::size_t i = 0; i < row.size(); ++i) {
      int c = Cyclotomic::compare(cand[i], best[i]);
      if (c < 0) {
        best = std::move(cand);
        break;
      }
      if (c > 0) break;
    }
  }
  return best;
}

bool rows_match_as_multisets(std::vector<Row> a, std::vector<Row> b, long long n) {
  if (a.size() != b.size()) return false;
  for (Row& r : a) r = galois_canonical(r, n);
  for (Row& r : b) r = galois_canonical(r, n);
  auto cmp = [](const Row& x, const Row& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      int c = Cyclotomic::compare(x[i], y[i]);
      if (c != 0) return c < 0;
    }
    return false;
  };
  std::sort(a.begin(), a.end(), cmp);
  std::sort(b.begin(), b.end(), cmp);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

Row computed_row(const CentreContext& ctx, const CentreCharacter& chi) {
  Row r;
  for (auto [f, g] : ctx.column_pairs()) r.push_back(ctx.value_at(chi, f, g));
  return r;
}

Cochain random_normalized(const GroupTable& g, int degree, long long denom,
                          std::mt19937_64& rng) {
  Cochain c(degree, g.order());
  std::vector<int> args(static_cast<std::size_t>(degree));
  for (std::size_t ix = 0; ix < c.values.size(); ++ix) {
    std::size_t t = ix;
    bool id = false;
    for (int i = degree - 1; i >= 0; --i) {
      args[static_cast<std::size_t>(i)] = static_cast<int>(t % g.order());
      t /= g.order();
      id |= args[static_cast<std::size_t>(i)] == 0;
    }
    if (!id) c.values[ix] = Phase(static_cast<long long>(rng() % (2 * denom)), denom);
  }
  return c;
}

// ---------------------------------------------------------------- criterion 1
Check criterion1() {
  Check c;
  GroupTable d3 = dihedral_group(3);
  c.require(cohomology(d3, 3).invariant_factors == std::vector<long long>{6},
            "H^3(D3, Q/Z) = Z/6");
  c.require(cohomology(d3, 2).invariant_factors.empty(), "H^2(D3, Q/Z) trivial");
  return c;
}

// ---------------------------------------------------------------- criterion 2
Check criterion2() {
  Check c;
  GroupTable d3 = dihedral_group(3);
  Cochain t1 = theta_d3(1);
  c.require(is_cocycle(d3, t1), "theta is a 3-cocycle (all 6^4 tuples)");
  c.require(hs_check(d3, t1), "theta passes the double-complex splitting check");
  c.require(check_pca_identities(d3, t1), "theta passes the transgression identities");
  for (int k = 1; k <= 5; ++k)
    c.require(!solve_coboundary(d3, theta_d3(k)).is_coboundary,
              "theta^" + std::to_string(k) + " is not a coboundary");
  for (int m : {6, 12})
    c.require(solve_coboundary(d3, theta_d3(m)).is_coboundary,
              "theta^" + std::to_string(m) + " is a coboundary");
  return c;
}

// ---------------------------------------------------------------- criterion 3
Check criterion3() {
  Check c;
  GroupTable d3 = dihedral_group(3);
  for (int k : {0, 3, 2, 1}) {
    CentreContext ctx(d3, theta_d3(k));
    long long n = ctx.root_order();
    c.require(ctx.simples().size() == 8, "8 simples for k=" + std::to_string(k));
    Cyclotomic one = Cyclotomic::one(n), zero = Cyclotomic::zero(n);
    Cyclotomic mone = Cyclotomic(n, Rat(-1)), two = Cyclotomic(n, Rat(2));
    auto row8 = [&](std::initializer_list<Cyclotomic> vs) { return Row(vs); };
    std::vector<Row> golden;
    golden.push_back(row8({one, one, one, zero, zero, zero, zero, zero}));
    golden.push_back(row8({one, one, mone, zero, zero, zero, zero, zero}));
    golden.push_back(row8({two, mone, zero, zero, zero, zero, zero, zero}));
    if (k % 3 == 0) {
      Cyclotomic w = Cyclotomic::root(n, n / 3);
      golden.push_back(row8({zero, zero, zero, one, one, one, zero, zero}));
      golden.push_back(row8({zero, zero, zero, one, w, w * w, zero, zero}));
      golden.push_back(row8({zero, zero, zero, one, w * w, w, zero, zero}));
    } else {
      auto etapow = [&](int e) { return Cyclotomic::root(n, (n / 9) * e); };
      // twisted sector rows (1, eta^c, eta^2c) for c in {1,4,7}: the sector
      // multiplier vanishes at (r,r), forcing value(r,r2) = value(r,r)^2,
      // so the third row necessarily ends in eta^5 = (eta^7)^2
      golden.push_back(row8({zero, zero, zero, one, etapow(1), etapow(2), zero, zero}));
      golden.push_back(row8({zero, zero, zero, one, etapow(4), etapow(8), zero, zero}));
      golden.push_back(row8({zero, zero, zero, one, etapow(7), etapow(5), zero, zero}));
    }
    if (k % 2 == 0) {
      golden.push_back(row8({zero, zero, zero, zero, zero, zero, one, one}));
      golden.push_back(row8({zero, zero, zero, zero, zero, zero, one, mone}));
    } else {
      Cyclotomic eps = Cyclotomic::root(n, n / 4);
      golden.push_back(row8({zero, zero, zero, zero, zero, zero, one, eps}));
      golden.push_back(row8({zero, zero, zero, zero, zero, zero, one, -eps}));
    }
    std::vector<Row> computed;
    for (std::size_t i = 0; i < 8; ++i)
      computed.push_back(computed_row(ctx, ctx.simple_character(static_cast<int>(i))));
    c.require(rows_match_as_multisets(computed, golden, n),
              "table multiset matches for k=" + std::to_string(k));
    // erratum certificate for the twisted sectors: the r-sector multiplier at
    // (r,r) vanishes exactly, so every row obeys value(r,r2) = value(r,r)^2;
    // a row ending in eta^3 instead of eta^5 cannot occur
    if (k % 3 != 0) {
      const CentreContext::Sector& s = ctx.sectors()[1];
      int lr = s.cg.from_parent[1];
      c.require(s.mu(lr, lr).is_zero(), "sector multiplier mu_r(r,r) = 0 exactly");
      for (int i = 3; i <= 5; ++i) {
        Cyclotomic vrr = ctx.value_at(ctx.simple_character(i), 1, 1);
        Cyclotomic vrr2 = ctx.value_at(ctx.simple_character(i), 1, 2);
        c.require(vrr2 == vrr * vrr, "square identity on twisted sector row");
      }
      c.require(!(Cyclotomic::root(9, 14 % 9) == Cyclotomic::root(9, 3)),
                "eta^7 squared is eta^5, not eta^3");
      c.note("square identity pins the third eta-row ending to eta^5 (k=" +
             std::to_string(k) + ")");
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 4
Check criterion4() {
  Check c;
  GroupTable d3 = dihedral_group(3);
  auto orders = [&](int k) {
    std::vector<int> o;
    for (auto& [s, w] : admissible_subgroups(d3, theta_d3(k))) o.push_back(s.order());
    return o;
  };
  c.require(orders(0) == std::vector<int>{1, 2, 3, 6}, "k=0: all four subgroups admissible");
  c.require(orders(3) == std::vector<int>{1, 3}, "k=3: {e} and C3");
  c.require(orders(2) == std::vector<int>{1, 2}, "k=2: {e} and C2");
  c.require(orders(1) == std::vector<int>{1}, "k=1: only {e}");
  return c;
}

// ---------------------------------------------------------------- criterion 5
Check criterion5() {
  Check c;
  GroupTable d3 = dihedral_group(3);
  auto lagr_by_order = [&](const std::vector<LagrangianDatum>& data, int order) {
    for (const LagrangianDatum& d : data)
      if (d.h.order() == order) return d;
    throw Error(ErrorKind::Internal, "missing Lagrangian datum");
  };
  auto check_row = [&](const CentreContext& ctx, const CentreCharacter& chi,
                       const std::vector<Cyclotomic>& expect, const std::string& what) {
    Row r = computed_row(ctx, chi);
    bool ok = r.size() == expect.size();
    for (std::size_t i = 0; ok && i < r.size(); ++i) ok = r[i] == expect[i];
    c.require(ok, what);
  };

  for (int k : {0, 2}) {
    CentreContext ctx(d3, theta_d3(k));
    long long n = ctx.root_order();
    std::vector<LagrangianDatum> data = lagrangian_data(d3, theta_d3(k));
    CentreCharacter chi = lagrangian_character(ctx, lagr_by_order(data, 2));
    auto cc = [&](long long v) { return Cyclotomic(n, Rat(v)); };
    check_row(ctx, chi, {cc(3), cc(0), cc(1), cc(0), cc(0), cc(0), cc(1), cc(1)},
              "chi_L(C2) = (3,0,1,0,0,0,1,1) for k=" + std::to_string(k));
    c.require(decomposition_string(decompose(ctx, chi), false) == "x0+x2+x6",
              "L(C2) decomposes as x0+x2+x6 for k=" + std::to_string(k));
    c.require(decomposition_string(
                  decompose(ctx, lagrangian_character(ctx, lagr_by_order(data, 1))), false) ==
                  "x0+x1+2x2",
              "L({e}) = x0+x1+2x2 for k=" + std::to_string(k));
  }
  {
    CentreContext ctx(d3, theta_d3(0));
    long long n = ctx.root_order();
    auto cc = [&](long long v) { return Cyclotomic(n, Rat(v)); };
    std::vector<LagrangianDatum> data = lagrangian_data(d3, theta_d3(0));
    check_row(ctx, lagrangian_character(ctx, lagr_by_order(data, 1)),
              {cc(6), cc(0), cc(0), cc(0), cc(0), cc(0), cc(0), cc(0)},
              "chi_L({e}) = (6,0,...,0) for k=0");
    check_row(ctx, lagrangian_character(ctx, lagr_by_order(data, 3)),
              {cc(2), cc(2), cc(0), cc(2), cc(2), cc(2), cc(0), cc(0)},
              "chi_L(C3) = (2,2,0,2,2,2,0,0) for k=0");
    check_row(ctx, lagrangian_character(ctx, lagr_by_order(data, 6)),
              {cc(1), cc(1), cc(1), cc(1), cc(1), cc(1), cc(1), cc(1)},
              "chi_L(D3) = (1,...,1) for k=0");
    auto dec = [&](int order) {
      return decomposition_string(
          decompose(ctx, lagrangian_character(ctx, lagr_by_order(data, order))), false);
    };
    c.require(dec(1) == "x0+x1+2x2", "L({e}) = x0+x1+2x2");
    c.require(dec(3) == "x0+x1+2x3", "L(C3) = x0+x1+2x3");
    c.require(dec(6) == "x0+x3+x6", "L(D3) = x0+x3+x6");
  }
  {
    // order-two twist: theta^3 takes values in (1/2)Z only, so every phase
    // in the induced-character sum for L(C3) is a half-integer and no cube
    // root of unity can appear; the row is pinned to (2,2,0,2,2,2,0,0).
    Cochain t3 = theta_d3(3);
    bool half_integer = true;
    for (const Phase& p : t3.values) half_integer &= (2 * p).is_zero();
    c.require(half_integer, "theta^3 takes values in (1/2)Z (erratum certificate)");
    CentreContext ctx(d3, t3);
    long long n = ctx.root_order();
    auto cc = [&](long long v) { return Cyclotomic(n, Rat(v)); };
    std::vector<LagrangianDatum> data = lagrangian_data(d3, t3);
    CentreCharacter chi = lagrangian_character(ctx, lagr_by_order(data, 3));
    check_row(ctx, chi, {cc(2), cc(2), cc(0), cc(2), cc(2), cc(2), cc(0), cc(0)},
              "chi_L(C3) = (2,2,0,2,2,2,0,0) for k=3");
    c.require(decomposition_string(decompose(ctx, chi), false) == "x0+x1+2x3",
              "L(C3) decomposes as x0+x1+2x3 for k=3");
    c.note("half-integer certificate pins the k=3 L(C3) row to rational values; "
           "a row containing 1+w or 1+w^-1 is impossible for this twist");
    check_row(ctx, lagrangian_character(ctx, lagr_by_order(data, 1)),
              {cc(6), cc(0), cc(0), cc(0), cc(0), cc(0), cc(0), cc(0)},
              "chi_L({e}) = (6,0,...,0) for k=3");
    c.require(decomposition_string(
                  decompose(ctx, lagrangian_character(ctx, lagr_by_order(data, 1))), false) ==
                  "x0+x1+2x2",
              "L({e}) = x0+x1+2x2 for k=3");
  }
  {
    CentreContext ctx(d3, theta_d3(1));
    std::vector<LagrangianDatum> data = lagrangian_data(d3, theta_d3(1));
    c.require(data.size() == 1, "k=1 has a single Lagrangian datum");
    c.require(decomposition_string(
                  decompose(ctx, lagrangian_character(ctx, data[0])), false) == "x0+x1+2x2",
              "L({e}) = x0+x1+2x2 for k=1");
  }
  return c;
}

// ---------------------------------------------------------------- criterion 6
Check criterion6() {
  Check c;
  std::mt19937_64 rng(20260809);
  GroupTable d3 = dihedral_group(3);

  // orthonormality + pcf across the required family
  std::vector<GroupTable> groups = {cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                    direct_product(cyclic_group(2), cyclic_group(2)),
                                    quaternion_group()};
  std::vector<std::pair<const GroupTable*, Cochain>> cases;
  for (int k : {0, 1, 2, 3}) cases.emplace_back(&d3, theta_d3(k));
  std::vector<Cochain> derived;
  for (const GroupTable& g : groups) {
    cases.emplace_back(&g, zero_cochain(g, 3));
    cases.emplace_back(&g, differential(g, random_normalized(g, 2, 4, rng)));
  }
  for (auto& [gp, alpha] : cases) {
    CentreContext ctx(*gp, alpha);
    bool ortho = true, pcf = true;
    for (std::size_t i = 0; i < ctx.simples().size(); ++i) {
      pcf &= is_class_function(ctx, ctx.simple_character(static_cast<int>(i)));
      for (std::size_t j = 0; j < ctx.simples().size(); ++j)
        ortho &= scalar_product(ctx, ctx.simple_character(static_cast<int>(i)),
                                ctx.simple_character(static_cast<int>(j))) ==
                 Rat(i == j ? 1 : 0);
    }
    c.require(ortho, "orthonormality on |G|=" + std::to_string(gp->order()));
    c.require(pcf, "class-function property on |G|=" + std::to_string(gp->order()));
    // Lagrangian identities in this context
    for (const LagrangianDatum& d : lagrangian_data(*gp, alpha)) {
      CentreCharacter chi = lagrangian_character(ctx, d);
      c.require(is_class_function(ctx, chi), "chi_L satisfies (pcf)");
      c.require(ctx.value_at(chi, 0, 0) ==
                    Cyclotomic(ctx.root_order(), Rat(gp->order() / d.h.order())),
                "chi_L(e,e) = [G:H]");
      Cyclotomic dim = Cyclotomic::zero(ctx.root_order());
      for (int f = 0; f < gp->order(); ++f) dim += ctx.value_at(chi, f, 0);
      c.require(dim == Cyclotomic(ctx.root_order(), Rat(gp->order())),
                "total dimension of L equals |G|");
      std::vector<long long> m = decompose(ctx, chi);
      c.require(m[0] == 1, "unit multiplicity (chi_0, chi_L) = 1");
    }
  }

  // coboundary-solver round trip on 200 random 2-cochains
  for (int t = 0; t < 200; ++t) {
    Cochain gamma = random_normalized(d3, 2, 12, rng);
    Cochain beta = differential(d3, gamma);
    CoboundaryOutcome o = solve_coboundary(d3, beta);
    bool ok = o.is_coboundary && differential(d3, o.witness) == beta;
    if (!ok) {
      c.require(false, "coboundary round trip, trial " + std::to_string(t));
      break;
    }
  }

  // representative independence of the Lagrangian induction under 50 random
  // coset-representative draws (conjugation transport included)
  int draws = 0;
  for (int k : {0, 2, 3}) {
    CentreContext ctx(d3, theta_d3(k));
    for (const LagrangianDatum& d : lagrangian_data(d3, theta_d3(k))) {
      CentreCharacter ref = lagrangian_character(ctx, d);
      while (draws < 50 * (k + 1) / 4 + 10) {
        std::vector<int> reps;
        std::vector<bool> used(static_cast<std::size_t>(d3.order()), false);
        for (int y = 0; y < d3.order(); ++y) {
          if (used[static_cast<std::size_t>(y)]) continue;
          std::vector<int> coset;
          for (int h : d.h.elems) {
            coset.push_back(d3.mul(y, h));
            used[static_cast<std::size_t>(d3.mul(y, h))] = true;
          }
          reps.push_back(coset[rng() % coset.size()]);
        }
        CentreCharacter alt = lagrangian_character_with_reps(ctx, d, reps);
        bool same = true;
        for (std::size_t ix = 0; ix < ref.values.size(); ++ix)
          same &= alt.values[ix] == ref.values[ix];
        if (!same) {
          c.require(false, "coset-representative independence");
          break;
        }
        ++draws;
      }
    }
  }
  c.require(draws >= 50, "at least 50 representative draws exercised");
  return c;
}

// ---------------------------------------------------------------- criterion 7
Check criterion7() {
  Check c;
  std::mt19937_64 rng(777);
  int section_changes = 0;
  auto exercise = [&](const GroupTable& g, const Cochain& alpha, const EtaleDatum& d,
                      const std::string& what) {
    QuotientCocycle q = quotient_cocycle(g, alpha, d);
    c.require(is_cocycle(q.quotient.quotient, q.alpha_bar), what + ": alpha_bar is a cocycle");
    if (d.f.order() == d.h.order()) {
      c.require(q.quotient.quotient.order() == 1 && q.alpha_bar.is_zero(),
                what + ": F = H gives the trivial answer");
      return;
    }
    // random alternative sections
    for (int t = 0; t < 6; ++t) {
      std::vector<int> alt = q.quotient.section;
      for (std::size_t i = 1; i < alt.size(); ++i) {
        std::vector<int> coset;
        for (int x : d.h.elems)
          if (q.quotient.projection[static_cast<std::size_t>(x)] == static_cast<int>(i))
            coset.push_back(x);
        alt[i] = coset[rng() % coset.size()];
      }
      QuotientCocycle q2 = quotient_cocycle(g, alpha, d, alt);
      c.require(is_cocycle(q2.quotient.quotient, q2.alpha_bar),
                what + ": alpha_bar under alternative section");
      Cochain diff = q2.alpha_bar - q.alpha_bar;
      c.require(solve_coboundary(q.quotient.quotient, diff).is_coboundary,
                what + ": section change is a coboundary");
      ++section_changes;
    }
  };

  GroupTable d3 = dihedral_group(3);
  Cochain a0 = zero_cochain(d3, 3);
  for (const EtaleDatum& d : etale_enumerate(d3, a0))
    exercise(d3, a0, d,
             "(D3; |H|=" + std::to_string(d.h.order()) + ",|F|=" + std::to_string(d.f.order()) +
                 ")");
  // (D3, C2) is rejected: C2 is not normal in D3
  {
    Subgroup full = full_subgroup(d3);
    Subgroup c2 = generated_subgroup(d3, {3});
    bool rejected = false;
    try {
      quotient_with_section(full, c2);
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::NotNormal;
    }
    c.require(rejected, "(D3, C2) rejected as not normal");
  }
  GroupTable c4 = cyclic_group(4);
  Cochain c4a = zero_cochain(c4, 3);
  for (const EtaleDatum& d : etale_enumerate(c4, c4a))
    if (d.h.order() == 4 && d.f.order() == 2) exercise(c4, c4a, d, "(Z/4, Z/2)");
  GroupTable q8 = quaternion_group();
  Cochain q8a = zero_cochain(q8, 3);
  int q8_center_cases = 0;
  for (const EtaleDatum& d : etale_enumerate(q8, q8a))
    if (d.h.order() == 8 && d.f.order() == 2) {
      exercise(q8, q8a, d, "(Q8, center)");
      ++q8_center_cases;
    }
  c.require(q8_center_cases > 0, "Q8 center instances present");
  c.require(section_changes >= 50, "at least 50 section changes exercised");
  return c;
}

// ---------------------------------------------------------------- criterion 8
Check criterion8() {
  Check c;
  GroupTable d3 = dihedral_group(3);
  PhysicalInvariants inv = physical_invariants(d3, zero_cochain(d3, 3));
  c.require(inv.ctx_prod->simples().size() == 64, "64 = 8 x 8 simples in the product centre");
  bool found_diagonal = false;
  for (const ModularInvariant& m : inv.invariants) {
    for (const auto& row : m.matrix)
      for (long long v : row)
        if (v < 0) c.require(false, "non-negative entries");
    c.require(m.matrix[0][0] == 1, "vacuum entry Z00 = 1");
    long long s = 0;
    for (std::size_t i = 0; i < m.matrix.size(); ++i)
      for (std::size_t j = 0; j < m.matrix[i].size(); ++j)
        s += m.matrix[i][j] * inv.ctx_a->simple_total_dimension(static_cast<int>(i)) *
             inv.ctx_b->simple_total_dimension(static_cast<int>(j));
    c.require(s == 36, "sum Z_ij d_i d_j = 36");
    // the diagonal datum: U = {(g,g)}, gamma = 0
    bool diag = m.datum.h.order() == 6;
    if (diag)
      for (int x : m.datum.h.elems) diag &= x / 6 == x % 6;
    if (diag && m.datum.gamma.is_zero()) {
      found_diagonal = true;
      bool perm = true;
      for (const auto& row : m.matrix) {
        long long rs = 0;
        for (long long v : row) {
          perm &= v == 0 || v == 1;
          rs += v;
        }
        perm &= rs == 1;
      }
      for (std::size_t j = 0; j < m.matrix[0].size(); ++j) {
        long long cs = 0;
        for (std::size_t i = 0; i < m.matrix.size(); ++i) cs += m.matrix[i][j];
        perm &= cs == 1;
      }
      c.require(perm, "diagonal datum yields a permutation matrix");
    }
  }
  c.require(found_diagonal, "diagonal datum present");
  c.note(std::to_string(inv.invariants.size()) +
         " physical invariants for Z(D3) (recorded as repository data)");
  return c;
}

// ---------------------------------------------------------------- criterion 9
Check criterion9() {
  Check c;
  std::mt19937_64 rng(4242);
  std::vector<GroupTable> groups = {cyclic_group(2), cyclic_group(3), cyclic_group(6),
                                    direct_product(cyclic_group(2), cyclic_group(2)),
                                    dihedral_group(3), quaternion_group()};
  for (const GroupTable& g : groups) {
    for (int t = 0; t < 3; ++t) {
      Cochain mu = differential(g, random_normalized(g, 1, 4, rng));
      ProjectiveCharacterTable p = projective_character_table(g, mu);
      long long s = 0;
      for (long long d : p.degrees) s += d * d;
      c.require(s == g.order(), "sum deg^2 = |H| on |H|=" + std::to_string(g.order()));
    }
    // mu = 0 reproduces the ordinary table
    ProjectiveCharacterTable p0 = projective_character_table(g, zero_cochain(g, 2));
    CharacterTable t0 = character_table(g);
    bool same = p0.rows.size() == t0.rows.size();
    for (std::size_t i = 0; same && i < p0.rows.size(); ++i)
      for (int x = 0; x < g.order(); ++x)
        same &= p0.rows[i][static_cast<std::size_t>(x)] == t0.value(static_cast<int>(i), x);
    c.require(same, "mu = 0 reproduces the ordinary table, |H|=" + std::to_string(g.order()));
  }
  {
    GroupTable v4 = direct_product(cyclic_group(2), cyclic_group(2));
    Cochain mu(2, 4);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) mu.at({x, y}) = Phase((x % 2) * (y / 2), 2);
    ProjectiveCharacterTable p = projective_character_table(v4, mu);
    c.require(p.degrees == std::vector<long long>{2},
              "nontrivial multiplier on Z/2 x Z/2 has one degree-2 character");
  }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Check()> run;
  };
  std::vector<Entry> entries = {
      {1, "H^3(D3) = Z/6 and H^2(D3) trivial", criterion1},
      {2, "theta cocycle/splitting checks and coboundary orders", criterion2},
      {3, "simple-character tables of Z(D3, theta^k), k in {0,3,2,1}", criterion3},
      {4, "admissible subgroups per twist", criterion4},
      {5, "Lagrangian characters and decompositions", criterion5},
      {6, "property suite (orthonormality, pcf, solver round trips, independence)", criterion6},
      {7, "quotient-cocycle suite", criterion7},
      {8, "modular invariants for Z(D3)", criterion8},
      {9, "projective character tables", criterion9},
  };
  bool all = true;
  for (const Entry& e : entries) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = e.run();
    } catch (const std::exception& ex) {
      c.pass = false;
      c.notes.push_back(std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s (%.2fs) - %s\n", e.id, c.pass ? "PASS" : "FAIL", secs,
                e.name);
    for (const std::string& n : c.notes) std::printf("    %s\n", n.c_str());
    all &= c.pass;
  }
  return all ? 0 : 1;
}
