#include "zcenter/etale.hpp"

#include <algorithm>
#include <numeric>

#include "zcenter/zmodlin.hpp"

namespace zc {

namespace {

Cochain gamma_with_class(const Cochain& base, const CohomologyResult& h2,
                         const std::vector<long long>& coeffs) {
  Cochain g = base;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) g = g + coeffs[i] * h2.generators[i];
  return g;
}

}  // namespace

std::vector<std::pair<Subgroup, Cochain>> admissible_subgroups(const GroupTable& g,
                                                               const Cochain& alpha,
                                                               const EtaleOptions& opt) {
  if (!is_cocycle(g, alpha)) throw Error(ErrorKind::NotACocycle, "alpha is not a 3-cocycle");
  std::vector<std::pair<Subgroup, Cochain>> out;
  for (const Subgroup& h : all_subgroups(g, opt.max_group_order)) {
    EmbeddedGroup hg = subgroup_as_group(h);
    Cochain beta = restrict_cochain(alpha, hg);
    CoboundaryOutcome o = solve_coboundary(hg.table, beta);
    if (o.is_coboundary) out.emplace_back(h, std::move(o.witness));
  }
  return out;
}

std::vector<LagrangianDatum> lagrangian_data(const GroupTable& g, const Cochain& alpha,
                                             const EtaleOptions& opt) {
  std::vector<LagrangianDatum> out;
  for (auto& [h, base] : admissible_subgroups(g, alpha, opt)) {
    EmbeddedGroup hg = subgroup_as_group(h);
    CohomologyResult h2 = cohomology(hg.table, 2);
    std::vector<long long> coeffs(h2.invariant_factors.size(), 0);
    for (;;) {
      LagrangianDatum d;
      d.h = h;
      d.hg = hg;
      d.gamma = gamma_with_class(base, h2, coeffs);
      out.push_back(std::move(d));
      // next coefficient tuple
      std::size_t i = 0;
      while (i < coeffs.size() && ++coeffs[i] == h2.invariant_factors[i]) coeffs[i++] = 0;
      if (i == coeffs.size()) break;
    }
  }
  return out;
}

EpsilonTable epsilon_from_gamma(const EmbeddedGroup& hg, const Cochain& gamma) {
  int n = static_cast<int>(hg.from_parent.size());
  int m = hg.table.order();
  EpsilonTable eps(n);
  for (int f = 0; f < m; ++f)
    for (int x = 0; x < m; ++x) {
      int fxf = hg.table.conj(f, x);
      eps.at(hg.to_parent[static_cast<std::size_t>(f)],
             hg.to_parent[static_cast<std::size_t>(x)]) = gamma(f, x) - gamma(fxf, f);
    }
  return eps;
}

EtaleValidation validate_etale(const GroupTable& g, const Cochain& alpha,
                               const EtaleDatum& datum) {
  EtaleValidation v;
  TransgressionTables tg = transgression_tables(g, alpha);
  const EmbeddedGroup& fg = datum.fg;
  auto fail = [&](const std::string& what) {
    v.ok = false;
    if (v.first_failure.empty()) v.first_failure = what;
  };
  v.ok = true;
  if (!is_normal_in(datum.f, datum.h)) fail("F is not normal in H");
  if (!datum.gamma.is_normalized()) fail("gamma is not normalized");
  Cochain beta = restrict_cochain(alpha, fg);
  if (!(differential(fg.table, datum.gamma) == beta)) fail("d(gamma) != alpha|_F");
  // normalization of epsilon
  for (int h : datum.h.elems)
    if (!datum.epsilon.at(h, 0).is_zero()) fail("epsilon_h(e) != 0");
  for (int f : datum.f.elems)
    if (!datum.epsilon.at(0, f).is_zero()) fail("epsilon_e(f) != 0");
  // projectivity of the action: eps_{gh}(f) = tefa(g,h|f) + eps_g(hfh^-1) + eps_h(f)
  for (int x : datum.h.elems)
    for (int y : datum.h.elems)
      for (int f : datum.f.elems) {
        Phase lhs = datum.epsilon.at(g.mul(x, y), f);
        Phase rhs = tg.tefa(x, y, f) + datum.epsilon.at(x, g.conj(y, f)) +
                    datum.epsilon.at(y, f);
        if (lhs != rhs)
          fail("action is not alpha-projective at (g,h,f)=(" + g.name(x) + "," + g.name(y) +
               "," + g.name(f) + ")");
        Phase swapped = tg.acfa(f, x, y) + datum.epsilon.at(x, g.conj(y, f)) +
                        datum.epsilon.at(y, f);
        if (lhs != swapped) v.action_bar_swapped_matches = false;
      }
  // multiplicativity: gamma(f,g) + eps_h(fg) =
  //   acfa(h|f,g) + eps_h(f) + eps_h(g) + gamma(hfh^-1, hgh^-1)
  for (int x : datum.h.elems)
    for (int f : datum.f.elems)
      for (int f2 : datum.f.elems) {
        int lf = fg.from_parent[static_cast<std::size_t>(f)];
        int lf2 = fg.from_parent[static_cast<std::size_t>(f2)];
        int lcf = fg.from_parent[static_cast<std::size_t>(g.conj(x, f))];
        int lcf2 = fg.from_parent[static_cast<std::size_t>(g.conj(x, f2))];
        Phase lhs = datum.gamma(lf, lf2) + datum.epsilon.at(x, g.mul(f, f2));
        Phase rhs = tg.acfa(x, f, f2) + datum.epsilon.at(x, f) + datum.epsilon.at(x, f2) +
                    datum.gamma(lcf, lcf2);
        if (lhs != rhs)
          fail("action is not multiplicative at (h,f,g)=(" + g.name(x) + "," + g.name(f) +
               "," + g.name(f2) + ")");
        Phase swapped = tg.tefa(f, f2, x) + datum.epsilon.at(x, f) +
                        datum.epsilon.at(x, f2) + datum.gamma(lcf, lcf2);
        if (lhs != swapped) v.product_bar_swapped_matches = false;
      }
  // commutativity: gamma(f,g) = eps_f(g) + gamma(fgf^-1, f)
  for (int f : datum.f.elems)
    for (int f2 : datum.f.elems) {
      int lf = fg.from_parent[static_cast<std::size_t>(f)];
      int lf2 = fg.from_parent[static_cast<std::size_t>(f2)];
      int lcf2 = fg.from_parent[static_cast<std::size_t>(g.conj(f, f2))];
      if (datum.gamma(lf, lf2) != datum.epsilon.at(f, f2) + datum.gamma(lcf2, lf))
        fail("algebra is not commutative at (f,g)=(" + g.name(f) + "," + g.name(f2) + ")");
    }
  return v;
}

namespace {

Cyclotomic lagrangian_sum(const CentreContext& ctx, const LagrangianDatum& datum, int fp,
                          int gg, const std::vector<int>& ys) {
  Cyclotomic acc = Cyclotomic::zero(ctx.root_order());
  const GroupTable& g = ctx.group();
  for (int y : ys) {
    int yi = g.inv(y);
    int hh = g.conj(yi, fp);  // y^-1 f y, in H
    int uu = g.conj(yi, gg);  // y^-1 g y, in H
    int lh = datum.hg.from_parent[static_cast<std::size_t>(hh)];
    int lu = datum.hg.from_parent[static_cast<std::size_t>(uu)];
    Phase ph = ctx.tg().tefa(uu, yi, fp) - ctx.tg().tefa(yi, gg, fp) +
               datum.gamma(lu, lh) - datum.gamma(lh, lu);
    acc += Cyclotomic::from_phase(ph, ctx.root_order());
  }
  return acc;
}

}  // namespace

CentreCharacter lagrangian_character(const CentreContext& ctx, const LagrangianDatum& datum) {
  const GroupTable& g = ctx.group();
  int n = g.order();
  CentreCharacter chi = ctx.zero_character();
  for (std::size_t ix = 0; ix < ctx.pairs().size(); ++ix) {
    auto [fp, gg] = ctx.pairs()[ix];
    std::vector<int> ys;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      int yi = g.inv(y);
      if (!datum.h.contains(g.conj(yi, fp)) || !datum.h.contains(g.conj(yi, gg))) continue;
      for (int h : datum.h.elems) used[static_cast<std::size_t>(g.mul(y, h))] = true;
      ys.push_back(y);
    }
    chi.values[ix] = lagrangian_sum(ctx, datum, fp, gg, ys);
  }
  return chi;
}

CentreCharacter lagrangian_character_with_reps(const CentreContext& ctx,
                                               const LagrangianDatum& datum,
                                               const std::vector<int>& coset_reps) {
  const GroupTable& g = ctx.group();
  CentreCharacter chi = ctx.zero_character();
  for (std::size_t ix = 0; ix < ctx.pairs().size(); ++ix) {
    auto [fp, gg] = ctx.pairs()[ix];
    std::vector<int> ys;
    for (int y : coset_reps) {
      int yi = g.inv(y);
      if (datum.h.contains(g.conj(yi, fp)) && datum.h.contains(g.conj(yi, gg)))
        ys.push_back(y);
    }
    chi.values[ix] = lagrangian_sum(ctx, datum, fp, gg, ys);
  }
  return chi;
}

QuotientCocycle quotient_cocycle(const GroupTable& g, const Cochain& alpha,
                                 const EtaleDatum& datum,
                                 const std::optional<std::vector<int>>& section_override) {
  QuotientCocycle out;
  out.quotient = quotient_with_section(datum.h, datum.f);
  if (section_override.has_value()) {
    const std::vector<int>& s = *section_override;
    if (s.size() != out.quotient.section.size())
      throw Error(ErrorKind::MismatchedContext, "section override has wrong size");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!datum.h.contains(s[i]) ||
          out.quotient.projection[static_cast<std::size_t>(s[i])] != static_cast<int>(i))
        throw Error(ErrorKind::MismatchedContext, "section override is not a section");
    }
    if (s[0] != 0)
      throw Error(ErrorKind::MismatchedContext, "section must fix the identity coset");
    out.quotient.section = s;
  }
  const GroupTable& q = out.quotient.quotient;
  const std::vector<int>& s = out.quotient.section;
  const EmbeddedGroup& fg = datum.fg;
  int m = q.order();
  auto in_f = [&](int e) { return datum.f.contains(e); };
  auto floc = [&](int e) { return fg.from_parent[static_cast<std::size_t>(e)]; };
  Cochain bar(3, m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        int sx = s[static_cast<std::size_t>(x)], sy = s[static_cast<std::size_t>(y)],
            sz = s[static_cast<std::size_t>(z)];
        int yz = q.mul(y, z), xy = q.mul(x, y);
        int xyz = q.mul(x, yz);
        int sxyz = s[static_cast<std::size_t>(xyz)];
        int syz = s[static_cast<std::size_t>(yz)], sxy = s[static_cast<std::size_t>(xy)];
        // tau(a,b) = s(b)^-1 s(a)^-1 s(ab)
        int t_yz = g.mul(g.mul(g.inv(sz), g.inv(sy)), syz);
        int t_x_yz = g.mul(g.mul(g.inv(syz), g.inv(sx)), sxyz);
        int t_xy = g.mul(g.mul(g.inv(sy), g.inv(sx)), sxy);
        int h0 = g.mul(g.inv(sxyz), g.mul(sx, sy));
        int tprime = g.mul(g.mul(h0, g.inv(t_xy)), g.inv(h0));
        if (!in_f(t_yz) || !in_f(t_x_yz) || !in_f(t_xy) || !in_f(tprime))
          throw Error(ErrorKind::Internal, "section defect escaped F");
        int third = g.mul(g.mul(g.inv(sy), g.inv(sx)), sxyz);
        Phase v = alpha(sx, sy, third);
        v += datum.gamma(floc(t_yz), floc(t_x_yz));
        v += datum.gamma(floc(g.mul(t_yz, t_x_yz)), floc(tprime));
        v += datum.epsilon.at(h0, t_xy);
        v += datum.gamma(floc(g.inv(tprime)), floc(tprime));
        bar.at({x, y, z}) = v;
      }
  if (!bar.is_normalized() || !is_cocycle(q, bar))
    throw Error(ErrorKind::QuotientNotCocycle, "assembled quotient cochain fails the cocycle identity");
  out.alpha_bar = std::move(bar);
  return out;
}

namespace {

// Solve the linear epsilon constraints for a fixed (H, F, gamma); returns the
// inequivalent solutions modulo shifts by characters of F.
std::vector<EpsilonTable> solve_epsilons(const GroupTable& g, const TransgressionTables& tg,
                                         const Subgroup& h, const Subgroup& f,
                                         const EmbeddedGroup& fg, const Cochain& gamma,
                                         const EtaleOptions& opt) {
  int nh = h.order(), nf = f.order();
  int width = (nh - 1) * (nf - 1);
  auto unknown = [&](int hl, int fl) { return (hl - 1) * (nf - 1) + (fl - 1); };
  EmbeddedGroup hg = subgroup_as_group(h);
  auto hloc = [&](int e) { return hg.from_parent[static_cast<std::size_t>(e)]; };
  auto flocal = [&](int e) { return fg.from_parent[static_cast<std::size_t>(e)]; };

  struct Eq {
    SparseRow lhs;
    Phase rhs;
  };
  std::vector<Eq> eqs;
  auto add_term = [&](SparseRow& row, int hp, int fp, long long c) {
    // parent-element slot (hp, fp); identity slots are pinned to zero
    if (hp == 0 || fp == 0) return;
    row.add(unknown(hloc(hp), flocal(fp)), c);
  };
  for (int x : h.elems)
    for (int y : h.elems)
      for (int ff : f.elems) {
        if (x == 0 && y == 0) continue;
        Eq e;
        add_term(e.lhs, g.mul(x, y), ff, 1);
        add_term(e.lhs, x, g.conj(y, ff), -1);
        add_term(e.lhs, y, ff, -1);
        e.rhs = tg.tefa(x, y, ff);
        eqs.push_back(std::move(e));
      }
  for (int x : h.elems)
    for (int f1 : f.elems)
      for (int f2 : f.elems) {
        Eq e;
        add_term(e.lhs, x, g.mul(f1, f2), 1);
        add_term(e.lhs, x, f1, -1);
        add_term(e.lhs, x, f2, -1);
        e.rhs = tg.acfa(x, f1, f2) + gamma(flocal(g.conj(x, f1)), flocal(g.conj(x, f2))) -
                gamma(flocal(f1), flocal(f2));
        eqs.push_back(std::move(e));
      }
  for (int f1 : f.elems)
    for (int f2 : f.elems) {
      Eq e;
      add_term(e.lhs, f1, f2, 1);
      e.rhs = gamma(flocal(f1), flocal(f2)) - gamma(flocal(g.conj(f1, f2)), flocal(f1));
      eqs.push_back(std::move(e));
    }

  long long m = 1;
  for (const Eq& e : eqs) m = std::lcm(m, e.rhs.den());
  std::vector<EpsilonTable> solutions;
  for (long long L : {m * nh, m * nh * nh}) {
    std::vector<long long> particular(static_cast<std::size_t>(width), 0);
    long long combined_mod = 1;
    bool ok = true;
    std::vector<long long> korders;
    std::vector<std::vector<long long>> kgens;  // over combined modulus
    std::vector<long long> kmods;
    for (const PrimePower& pp : factor_prime_powers(L)) {
      LocalRowSpace sys(width, 1, pp.p, pp.e);
      LocalRowSpace hom(width, 0, pp.p, pp.e);
      for (const Eq& e : eqs) {
        long long r = e.rhs.num() % L * (L / e.rhs.den()) % pp.q;
        sys.add_row(e.lhs, {r});
        hom.add_row(e.lhs, {});
      }
      auto sol = local_solve(sys);
      if (!sol[0].has_value()) {
        ok = false;
        break;
      }
      // CRT into particular
      long long m1 = combined_mod, m2 = pp.q, mm = m1 * m2;
      long long inv1 = m1 == 1 ? 0 : mod_inverse(m2 % m1, m1);
      for (int i = 0; i < width; ++i) {
        long long r2 = (*sol[0])[static_cast<std::size_t>(i)] % m2;
        long long r1 = particular[static_cast<std::size_t>(i)];
        long long t = m1 == 1 ? r2
                              : (r2 + m2 * (((r1 - r2) % m1 + m1) % m1 * inv1 % m1)) % mm;
        particular[static_cast<std::size_t>(i)] = ((t % mm) + mm) % mm;
      }
      combined_mod = mm;
      LocalKernel k = local_kernel(hom);
      for (std::size_t i = 0; i < k.gens.size(); ++i) {
        kgens.push_back(k.gens[i]);
        korders.push_back(k.orders[i]);
        kmods.push_back(pp.q);
      }
    }
    if (!ok) continue;
    // enumerate epsilon = particular + combination of kernel generators
    long long total = 1;
    for (long long o : korders) {
      total *= o;
      if (total > opt.max_epsilon_orbit)
        throw Error(ErrorKind::SizeLimitExceeded, "epsilon solution space too large");
    }
    // characters of F give the shift subgroup
    std::vector<std::vector<Phase>> fchars = all_characters_qz(fg.table);
    std::vector<EpsilonTable> shifts;
    for (const auto& c : fchars) {
      EpsilonTable sh(g.order());
      for (int x : h.elems)
        for (int ff : f.elems)
          sh.at(x, ff) = c[static_cast<std::size_t>(flocal(g.conj(x, ff)))] -
                         c[static_cast<std::size_t>(flocal(ff))];
      shifts.push_back(std::move(sh));
    }
    std::vector<EpsilonTable> seen;
    for (long long t = 0; t < total; ++t) {
      EpsilonTable eps(g.order());
      long long tt = t;
      for (int x : h.elems)
        for (int ff : f.elems)
          if (x != 0 && ff != 0)
            eps.at(x, ff) =
                Phase(particular[static_cast<std::size_t>(unknown(hloc(x), flocal(ff)))],
                      combined_mod);
      for (std::size_t i = 0; i < kgens.size(); ++i) {
        long long c = tt % korders[i];
        tt /= korders[i];
        if (c == 0) continue;
        for (int x : h.elems)
          for (int ff : f.elems)
            if (x != 0 && ff != 0)
              eps.at(x, ff) += Phase(
                  c * kgens[i][static_cast<std::size_t>(unknown(hloc(x), flocal(ff)))],
                  kmods[i]);
      }
      // canonicalize under character shifts
      EpsilonTable best = eps;
      for (const EpsilonTable& sh : shifts) {
        EpsilonTable cand(g.order());
        for (std::size_t i = 0; i < cand.values.size(); ++i)
          cand.values[i] = eps.values[i] + sh.values[i];
        if (std::lexicographical_compare(
                cand.values.begin(), cand.values.end(), best.values.begin(),
                best.values.end(),
                [](const Phase& a, const Phase& b) { return a < b; }))
          best = std::move(cand);
      }
      bool dup = false;
      for (const EpsilonTable& s : seen) dup |= s == best;
      if (!dup) seen.push_back(std::move(best));
    }
    solutions = std::move(seen);
    break;
  }
  return solutions;
}

}  // namespace

std::vector<EtaleDatum> etale_enumerate(const GroupTable& g, const Cochain& alpha,
                                        const EtaleOptions& opt) {
  if (!is_cocycle(g, alpha)) throw Error(ErrorKind::NotACocycle, "alpha is not a 3-cocycle");
  TransgressionTables tg = transgression_tables(g, alpha);
  std::vector<EtaleDatum> out;
  for (const Subgroup& h : all_subgroups(g, opt.max_group_order)) {
    for (const Subgroup& f : normal_subgroups_of(h)) {
      EmbeddedGroup fg = subgroup_as_group(f);
      Cochain beta = restrict_cochain(alpha, fg);
      CoboundaryOutcome o = solve_coboundary(fg.table, beta);
      if (!o.is_coboundary) continue;
      CohomologyResult h2 = cohomology(fg.table, 2);
      std::vector<long long> coeffs(h2.invariant_factors.size(), 0);
      for (;;) {
        Cochain gamma = gamma_with_class(o.witness, h2, coeffs);
        for (EpsilonTable& eps : solve_epsilons(g, tg, h, f, fg, gamma, opt)) {
          EtaleDatum d;
          d.h = h;
          d.f = f;
          d.fg = fg;
          d.gamma = gamma;
          d.epsilon = std::move(eps);
          EtaleValidation v = validate_etale(g, alpha, d);
          if (!v.ok)
            throw Error(ErrorKind::Internal, "enumerated datum failed validation: " +
                                                 v.first_failure);
          out.push_back(std::move(d));
        }
        std::size_t i = 0;
        while (i < coeffs.size() && ++coeffs[i] == h2.invariant_factors[i]) coeffs[i++] = 0;
        if (i == coeffs.size()) break;
      }
    }
  }
  return out;
}

EtaleDatum lagrangian_as_etale(const LagrangianDatum& datum) {
  EtaleDatum d;
  d.h = datum.h;
  d.f = datum.h;
  d.fg = datum.hg;
  d.gamma = datum.gamma;
  d.epsilon = epsilon_from_gamma(datum.hg, datum.gamma);
  return d;
}

}  // namespace zc
