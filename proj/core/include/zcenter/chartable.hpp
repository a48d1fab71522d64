#pragma once

#include <vector>

#include "zcenter/cochain.hpp"
#include "zcenter/cyclotomic.hpp"
#include "zcenter/group.hpp"

namespace zc {

/// Exact ordinary character table (Dixon-Schneider: class-algebra structure
/// constants split over GF(p), p = 1 mod exp(G), lifted to Q(zeta_exp(G))
/// through eigenvalue multiplicities).
struct CharacterTable {
  long long root_order = 1;  // exp(G)
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<long long> degrees;
  std::vector<std::vector<Cyclotomic>> rows;  // [character][class]
  const Cyclotomic& value(int chi, int element) const {
    return rows[static_cast<std::size_t>(chi)]
               [static_cast<std::size_t>(class_of[static_cast<std::size_t>(element)])];
  }
};
CharacterTable character_table(const GroupTable& g, int max_order = 256);

/// Central extension 0 -> Z/n -> E -> H -> 1 defined by an n-torsion
/// 2-cocycle; element (a, h) has index a*|H| + h.
struct CentralExtension {
  GroupTable table;
  int n = 1;
  int base_order = 1;
  int element(int a, int h) const { return a * base_order + h; }
  int central(int a) const { return a * base_order; }
  int lift(int h) const { return h; }
};
CentralExtension central_extension(const GroupTable& h, const Cochain& mu, long long n);

/// Irreducible projective characters of H with multiplier exp(2 pi i mu):
/// rows R satisfy R(g)R(h) = e(mu(g,h)) R(gh).  Values are stored per
/// element (projective characters are only twisted-class functions).
struct ProjectiveCharacterTable {
  long long root_order = 1;
  std::vector<long long> degrees;
  std::vector<std::vector<Cyclotomic>> rows;  // [character][element]
};
ProjectiveCharacterTable projective_character_table(const GroupTable& h, const Cochain& mu,
                                                    int max_order = 256);

}  // namespace zc
