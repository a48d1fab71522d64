#pragma once

#include <cstdint>
#include <vector>

#include "zcenter/group.hpp"
#include "zcenter/phase.hpp"

namespace zc {

/// Normalized n-cochain on a finite group with Q/Z coefficients, stored as a
/// dense table over G^n (entries with an identity argument stay 0).
struct Cochain {
  int degree = 0;
  int group_order = 1;
  std::vector<Phase> values;  // size group_order^degree, row-major

  Cochain() : values(1) {}
  Cochain(int deg, int n)
      : degree(deg), group_order(n), values(table_size(deg, n)) {}

  static std::size_t table_size(int deg, int n) {
    std::size_t s = 1;
    for (int i = 0; i < deg; ++i) s *= static_cast<std::size_t>(n);
    return s;
  }

  std::size_t index(const int* args) const {
    std::size_t ix = 0;
    for (int i = 0; i < degree; ++i) ix = ix * group_order + static_cast<std::size_t>(args[i]);
    return ix;
  }
  const Phase& at(std::initializer_list<int> args) const {
    return values[index(args.begin())];
  }
  Phase& at(std::initializer_list<int> args) { return values[index(args.begin())]; }
  const Phase& operator()(int a) const { return values[index(&a)]; }
  const Phase& operator()(int a, int b) const {
    int args[2] = {a, b};
    return values[index(args)];
  }
  const Phase& operator()(int a, int b, int c) const {
    int args[3] = {a, b, c};
    return values[index(args)];
  }

  bool is_zero() const {
    for (const Phase& p : values)
      if (!p.is_zero()) return false;
    return true;
  }
  bool is_normalized() const;
  /// lcm of value denominators.
  long long denominator_lcm() const;

  friend Cochain operator+(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a);
  friend Cochain operator*(long long k, const Cochain& a);
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree == b.degree && a.group_order == b.group_order && a.values == b.values;
  }
};

Cochain zero_cochain(const GroupTable& g, int degree);

/// Standard normalized bar differential; degree <= 3 only.
Cochain differential(const GroupTable& g, const Cochain& c);
bool is_cocycle(const GroupTable& g, const Cochain& c);

/// Right transgression alpha(f,g|h) = -a(f,g,h) + a(f, ghg^-1, g) - a((fg)h(fg)^-1, f, g).
Phase transgression_right(const GroupTable& g, const Cochain& alpha, int f, int gg, int h);
/// Left transgression alpha(f|g,h) = a(f,g,h) - a(fgf^-1, f, h) + a(fgf^-1, fhf^-1, f).
Phase transgression_left(const GroupTable& g, const Cochain& alpha, int f, int gg, int h);

/// Dense lookup tables for the two transgression components of a 3-cocycle;
/// used everywhere in character computations.
struct TransgressionTables {
  int n = 1;
  std::vector<Phase> right;  // [f][g][h] = alpha(f,g|h)
  std::vector<Phase> left;   // [f][g][h] = alpha(f|g,h)
  const Phase& tefa(int f, int g, int h) const {
    return right[(static_cast<std::size_t>(f) * n + g) * n + h];
  }
  const Phase& acfa(int f, int g, int h) const {
    return left[(static_cast<std::size_t>(f) * n + g) * n + h];
  }
};
TransgressionTables transgression_tables(const GroupTable& g, const Cochain& alpha);

/// The three identities relating the transgression components of a 3-cocycle,
/// checked over all of G^4.
bool check_pca_identities(const GroupTable& g, const Cochain& alpha);

/// Checks that (alpha(.,.|.), alpha(.|.,.), alpha) is a 3-cocycle of the
/// truncated total complex of the conjugation double complex:
/// d(gamma) = 0, del(gamma) = d(beta), del(beta) = d(alpha), del(alpha) = 0.
bool hs_check(const GroupTable& g, const Cochain& alpha);

/// Restriction along an embedded subgroup (values reindexed to H).
Cochain restrict_cochain(const Cochain& c, const EmbeddedGroup& h);

/// (alpha x beta)((g1,h1),(g2,h2),(g3,h3)) = alpha(g1,g2,g3) + beta(h1,h2,h3)
/// on the direct product ordered as in direct_product().
Cochain product_cocycle(const GroupTable& a, const Cochain& alpha, const GroupTable& b,
                        const Cochain& beta);
Cochain inverse_cocycle(const Cochain& alpha);

/// The explicit 3-cocycle on dihedral(3) generating H^3; theta_d3(k) is the
/// k-th power (k mod 6).
Cochain theta_d3(long long k);

/// Parses "trivial" / "theta3:k" for a given group (theta3 requires the
/// builtin dihedral(3) table).
Cochain builtin_cocycle(const GroupTable& g, const std::string& spec);

/// epsilon: H x F -> Q/Z, normalized in both arguments; stored densely over
/// parent-group indices for simplicity.
struct EpsilonTable {
  int parent_order = 1;
  std::vector<Phase> values;  // [h][f], size parent_order^2

  EpsilonTable() = default;
  explicit EpsilonTable(int n)
      : parent_order(n), values(static_cast<std::size_t>(n) * n) {}
  const Phase& at(int h, int f) const {
    return values[static_cast<std::size_t>(h) * parent_order + f];
  }
  Phase& at(int h, int f) { return values[static_cast<std::size_t>(h) * parent_order + f]; }
  friend bool operator==(const EpsilonTable& a, const EpsilonTable& b) {
    return a.parent_order == b.parent_order && a.values == b.values;
  }
};

}  // namespace zc
