#include "zcenter/centre.hpp"

#include <algorithm>
#include <numeric>

namespace zc {

CentreContext::CentreContext(const GroupTable& g, const Cochain& alpha, int max_extension_order)
    : g_(g), alpha_(alpha) {
  if (alpha_.degree != 3 || alpha_.group_order != g_.order())
    throw Error(ErrorKind::MismatchedContext, "centre context needs a 3-cochain on G");
  if (!alpha_.is_normalized() || !is_cocycle(g_, alpha_))
    throw Error(ErrorKind::NotACocycle, "alpha is not a normalized 3-cocycle");
  tg_ = transgression_tables(g_, alpha_);
  classes_ = conjugacy_classes(g_);
  class_of_ = conjugacy_class_map(g_);
  int n = g_.order();

  pair_index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int f = 0; f < n; ++f)
    for (int x = 0; x < n; ++x)
      if (g_.commutes(f, x)) {
        pair_index_[static_cast<std::size_t>(f) * n + x] = static_cast<int>(pairs_.size());
        pairs_.emplace_back(f, x);
      }

  for (std::size_t c = 0; c < classes_.size(); ++c) {
    Sector s;
    s.rep = classes_[c][0];
    s.cent = centralizer(g_, s.rep);
    s.cg = subgroup_as_group(s.cent);
    int m = s.cg.table.order();
    s.mu = Cochain(2, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        s.mu.at({a, b}) =
            -tg_.tefa(s.cg.to_parent[static_cast<std::size_t>(a)],
                      s.cg.to_parent[static_cast<std::size_t>(b)], s.rep);
    if (!is_cocycle(s.cg.table, s.mu))
      throw Error(ErrorKind::Internal, "sector multiplier is not a 2-cocycle");
    s.ptab = projective_character_table(s.cg.table, s.mu, max_extension_order);
    sectors_.push_back(std::move(s));
  }

  // canonical printed columns: for each class rep f, the centralizer's own
  // conjugacy classes give one representative pair (f, u) each
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const Sector& s = sectors_[c];
    for (const auto& cls : conjugacy_classes(s.cg.table))
      column_pairs_.emplace_back(s.rep, s.cg.to_parent[static_cast<std::size_t>(cls[0])]);
  }

  // global root order
  std::vector<Phase> phases;
  for (const Phase& p : tg_.right) phases.push_back(p);
  for (const Phase& p : tg_.left) phases.push_back(p);
  std::vector<long long> extra = {g_.exponent()};
  for (const Sector& s : sectors_) extra.push_back(s.ptab.root_order);
  root_order_ = common_root_order(phases, extra);

  for (std::size_t c = 0; c < sectors_.size(); ++c)
    for (std::size_t i = 0; i < sectors_[c].ptab.rows.size(); ++i)
      simples_.push_back(SimpleLabel{static_cast<int>(c), static_cast<int>(i)});
  for (const SimpleLabel& l : simples_) simple_chars_.push_back(compute_simple_character(l));
}

int CentreContext::simple_index(const SimpleLabel& l) const {
  for (std::size_t i = 0; i < simples_.size(); ++i)
    if (simples_[i].class_index == l.class_index && simples_[i].char_index == l.char_index)
      return static_cast<int>(i);
  throw Error(ErrorKind::Internal, "unknown simple label");
}

long long CentreContext::simple_degree(int i) const {
  const SimpleLabel& l = simples_[static_cast<std::size_t>(i)];
  return sectors_[static_cast<std::size_t>(l.class_index)]
      .ptab.degrees[static_cast<std::size_t>(l.char_index)];
}

long long CentreContext::simple_total_dimension(int i) const {
  const SimpleLabel& l = simples_[static_cast<std::size_t>(i)];
  return simple_degree(i) *
         static_cast<long long>(classes_[static_cast<std::size_t>(l.class_index)].size());
}

Cyclotomic CentreContext::value_at(const CentreCharacter& chi, int f, int g) const {
  int ix = pair_index(f, g);
  if (ix < 0) return Cyclotomic::zero(chi.root_order);
  return chi.values[static_cast<std::size_t>(ix)];
}

CentreCharacter CentreContext::zero_character() const {
  CentreCharacter chi;
  chi.root_order = root_order_;
  chi.values.assign(pairs_.size(), Cyclotomic::zero(root_order_));
  return chi;
}

CentreCharacter CentreContext::compute_simple_character(const SimpleLabel& l) const {
  const Sector& s = sectors_[static_cast<std::size_t>(l.class_index)];
  const std::vector<Cyclotomic>& prow = s.ptab.rows[static_cast<std::size_t>(l.char_index)];
  int n = g_.order();
  CentreCharacter chi = zero_character();
  for (std::size_t ix = 0; ix < pairs_.size(); ++ix) {
    auto [fp, gg] = pairs_[ix];
    if (class_of_[static_cast<std::size_t>(fp)] != l.class_index) continue;
    // sum over Y = {y : y^-1 fp y = rep, y^-1 gg y in C(rep)} / C(rep)
    Cyclotomic acc = Cyclotomic::zero(root_order_);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      int yi = g_.inv(y);
      if (g_.conj(yi, fp) != s.rep) continue;  // coset-invariant condition
      int u = g_.conj(yi, gg);
      if (!s.cent.contains(u)) continue;
      for (int h : s.cent.elems) used[static_cast<std::size_t>(g_.mul(y, h))] = true;
      Phase ph = tg_.tefa(u, yi, fp) - tg_.tefa(yi, gg, fp);
      Cyclotomic term = Cyclotomic::from_phase(ph, root_order_) *
                        prow[static_cast<std::size_t>(s.cg.from_parent[static_cast<std::size_t>(u)])]
                            .change_order(root_order_);
      acc += term;
    }
    chi.values[ix] = std::move(acc);
  }
  return chi;
}

bool is_class_function(const CentreContext& ctx, const CentreCharacter& chi) {
  const GroupTable& g = ctx.group();
  int n = g.order();
  for (std::size_t ix = 0; ix < ctx.pairs().size(); ++ix) {
    auto [f, u] = ctx.pairs()[ix];
    for (int x = 0; x < n; ++x) {
      int f2 = g.conj(x, f), u2 = g.conj(x, u);
      Phase ph = ctx.tg().tefa(x, u, f) - ctx.tg().tefa(u2, x, f);
      Cyclotomic lhs = ctx.value_at(chi, f2, u2);
      Cyclotomic rhs = Cyclotomic::from_phase(ph, chi.root_order) * chi.values[ix];
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

CentreCharacter char_product(const CentreContext& ctx, const CentreCharacter& a,
                             const CentreCharacter& b) {
  if (a.root_order != b.root_order || a.values.size() != b.values.size())
    throw Error(ErrorKind::MismatchedContext, "characters from different contexts");
  const GroupTable& g = ctx.group();
  int n = g.order();
  CentreCharacter out = ctx.zero_character();
  for (std::size_t ix = 0; ix < ctx.pairs().size(); ++ix) {
    auto [f, gg] = ctx.pairs()[ix];
    Cyclotomic acc = Cyclotomic::zero(out.root_order);
    for (int f1 = 0; f1 < n; ++f1) {
      if (!g.commutes(f1, gg)) continue;
      int f2 = g.mul(g.inv(f1), f);
      if (!g.commutes(f2, gg)) continue;
      int i1 = ctx.pair_index(f1, gg), i2 = ctx.pair_index(f2, gg);
      acc += Cyclotomic::from_phase(ctx.tg().acfa(gg, f1, f2), out.root_order) *
             a.values[static_cast<std::size_t>(i1)] * b.values[static_cast<std::size_t>(i2)];
    }
    out.values[ix] = std::move(acc);
  }
  return out;
}

CentreCharacter char_dual(const CentreContext& ctx, const CentreCharacter& a) {
  const GroupTable& g = ctx.group();
  CentreCharacter out = ctx.zero_character();
  for (std::size_t ix = 0; ix < ctx.pairs().size(); ++ix) {
    auto [f, gg] = ctx.pairs()[ix];
    int fi = g.inv(f), gi = g.inv(gg);
    Phase ph = ctx.tg().tefa(gi, gg, fi) - ctx.tg().acfa(gg, f, fi);
    out.values[ix] = Cyclotomic::from_phase(ph, out.root_order) * ctx.value_at(a, fi, gi);
  }
  return out;
}

Rat scalar_product(const CentreContext& ctx, const CentreCharacter& a,
                   const CentreCharacter& b) {
  if (a.values.size() != b.values.size())
    throw Error(ErrorKind::MismatchedContext, "characters from different contexts");
  const GroupTable& g = ctx.group();
  Cyclotomic acc = Cyclotomic::zero(ctx.root_order());
  for (std::size_t ix = 0; ix < ctx.pairs().size(); ++ix) {
    auto [f, gg] = ctx.pairs()[ix];
    int gi = g.inv(gg);
    acc += Cyclotomic::from_phase(ctx.tg().tefa(gi, gg, f), ctx.root_order()) *
           ctx.value_at(a, f, gi) * b.values[ix];
  }
  Rat val = acc.rat_value();  // throws NonRationalResult if not rational
  return val / Rat(g.order());
}

std::vector<long long> decompose(const CentreContext& ctx, const CentreCharacter& chi) {
  std::vector<long long> m;
  CentreCharacter recon = ctx.zero_character();
  for (std::size_t i = 0; i < ctx.simples().size(); ++i) {
    Rat c = scalar_product(ctx, ctx.simple_character(static_cast<int>(i)), chi);
    if (!c.is_integer() || c.num() < 0)
      throw Error(ErrorKind::NotACharacter,
                  "multiplicity " + c.str() + " of simple " + std::to_string(i));
    m.push_back(c.num());
    if (c.num() != 0)
      for (std::size_t ix = 0; ix < recon.values.size(); ++ix)
        recon.values[ix] +=
            Rat(c.num()) * ctx.simple_character(static_cast<int>(i)).values[ix];
  }
  for (std::size_t ix = 0; ix < recon.values.size(); ++ix)
    if (!(recon.values[ix] == chi.values[ix]))
      throw Error(ErrorKind::NotACharacter, "reconstruction mismatch at pair " +
                                                std::to_string(ix));
  return m;
}

std::string decomposition_string(const std::vector<long long>& m, bool unicode) {
  std::string out;
  const char* chi = unicode ? "χ" : "x";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (m[i] != 1) out += std::to_string(m[i]);
    out += chi;
    out += std::to_string(i);
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace zc
