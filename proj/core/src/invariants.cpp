#include "zcenter/invariants.hpp"

#include <algorithm>

namespace zc {

namespace {

// Matches each simple of the product centre to a pair of factor simples by
// exact comparison of sector characters: the product-sector projective row
// must equal the outer product of factor rows on the product centralizer.
std::vector<std::pair<int, int>> match_product_simples(const CentreContext& prod,
                                                       const CentreContext& a,
                                                       const CentreContext& b) {
  int nb = b.group().order();
  if (prod.classes().size() != a.classes().size() * b.classes().size())
    throw Error(ErrorKind::Internal, "product class count mismatch");
  std::vector<std::pair<int, int>> match(prod.simples().size(), {-1, -1});
  // class pairing: product class reps are (rep_a, rep_b) componentwise
  for (std::size_t cp = 0; cp < prod.classes().size(); ++cp) {
    int rep = prod.class_rep(static_cast<int>(cp));
    int ra = rep / nb, rb = rep % nb;
    int ca = -1, cb = -1;
    for (std::size_t i = 0; i < a.classes().size(); ++i)
      if (a.class_rep(static_cast<int>(i)) == ra) ca = static_cast<int>(i);
    for (std::size_t i = 0; i < b.classes().size(); ++i)
      if (b.class_rep(static_cast<int>(i)) == rb) cb = static_cast<int>(i);
    if (ca < 0 || cb < 0)
      throw Error(ErrorKind::Internal, "product class representative is not componentwise minimal");
    const auto& sp = prod.sectors()[cp];
    const auto& sa = a.sectors()[static_cast<std::size_t>(ca)];
    const auto& sb = b.sectors()[static_cast<std::size_t>(cb)];
    if (sp.cent.order() != sa.cent.order() * sb.cent.order())
      throw Error(ErrorKind::Internal, "product centralizer does not factor");
    long long n = prod.root_order();
    // offsets of the sector rows inside the global simple lists
    auto offset = [](const CentreContext& c, int sector) {
      int off = 0;
      for (int i = 0; i < sector; ++i)
        off += static_cast<int>(c.sectors()[static_cast<std::size_t>(i)].ptab.rows.size());
      return off;
    };
    int offp = offset(prod, static_cast<int>(cp));
    int offa = offset(a, ca), offb = offset(b, cb);
    for (std::size_t rp = 0; rp < sp.ptab.rows.size(); ++rp) {
      int found_i = -1, found_j = -1;
      for (std::size_t i = 0; i < sa.ptab.rows.size() && found_i < 0; ++i)
        for (std::size_t j = 0; j < sb.ptab.rows.size(); ++j) {
          bool all = true;
          for (int ua = 0; ua < sa.cg.table.order() && all; ++ua)
            for (int ub = 0; ub < sb.cg.table.order() && all; ++ub) {
              int pu = sa.cg.to_parent[static_cast<std::size_t>(ua)] * nb +
                       sb.cg.to_parent[static_cast<std::size_t>(ub)];
              int lu = sp.cg.from_parent[static_cast<std::size_t>(pu)];
              if (lu < 0) {
                all = false;
                break;
              }
              Cyclotomic lhs = sp.ptab.rows[rp][static_cast<std::size_t>(lu)].change_order(n);
              Cyclotomic rhs = sa.ptab.rows[i][static_cast<std::size_t>(ua)].change_order(n) *
                               sb.ptab.rows[j][static_cast<std::size_t>(ub)].change_order(n);
              all = lhs == rhs;
            }
          if (all) {
            found_i = static_cast<int>(i);
            found_j = static_cast<int>(j);
            break;
          }
        }
      if (found_i < 0)
        throw Error(ErrorKind::Internal,
                    "product sector row does not factor as an outer product");
      match[static_cast<std::size_t>(offp + static_cast<int>(rp))] = {offa + found_i,
                                                                      offb + found_j};
    }
  }
  return match;
}

}  // namespace

PhysicalInvariants physical_invariants(const GroupTable& g, const Cochain& alpha,
                                       const InvariantOptions& opt) {
  if (g.order() > opt.max_group_order)
    throw Error(ErrorKind::SizeLimitExceeded,
                "modular invariants bounded at |G| <= " + std::to_string(opt.max_group_order));
  PhysicalInvariants out;
  GroupTable g2 = direct_product(g, g);
  Cochain alpha2 = product_cocycle(g, alpha, g, inverse_cocycle(alpha));
  out.ctx_a = std::make_shared<CentreContext>(g, alpha);
  out.ctx_b = std::make_shared<CentreContext>(g, inverse_cocycle(alpha));
  out.ctx_prod = std::make_shared<CentreContext>(g2, alpha2);

  std::vector<std::pair<int, int>> match =
      match_product_simples(*out.ctx_prod, *out.ctx_a, *out.ctx_b);
  std::size_t na = out.ctx_a->simples().size(), nbs = out.ctx_b->simples().size();
  if (out.ctx_prod->simples().size() != na * nbs)
    throw Error(ErrorKind::Internal, "simple count does not factor");

  for (LagrangianDatum& d : lagrangian_data(g2, alpha2)) {
    CentreCharacter chi = lagrangian_character(*out.ctx_prod, d);
    std::vector<long long> m = decompose(*out.ctx_prod, chi);
    ModularInvariant inv;
    inv.datum = std::move(d);
    inv.matrix.assign(na, std::vector<long long>(nbs, 0));
    for (std::size_t s = 0; s < m.size(); ++s) {
      auto [i, j] = match[s];
      inv.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[s];
    }
    out.invariants.push_back(std::move(inv));
  }
  return out;
}

}  // namespace zc
