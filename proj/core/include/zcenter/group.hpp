#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zcenter/errors.hpp"

namespace zc {

/// A finite group as an explicit multiplication table.  Elements are dense
/// indices 0..order-1 with the identity fixed at index 0.  Immutable after
/// construction; safe to share between threads.
class GroupTable {
 public:
  GroupTable() = default;  // empty placeholder; assign before use

  /// Validates associativity, identity, inverses and the latin-square
  /// property; throws the matching error otherwise.
  static GroupTable from_multiplication_table(const std::vector<std::vector<int>>& table,
                                              std::vector<std::string> names = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  /// Conjugation a b a^{-1}.
  int conj(int a, int b) const { return mul(mul(a, b), inv(a)); }
  int pow(int g, long long k) const;
  int element_order(int g) const;
  long long exponent() const;
  bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }

 private:
  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

GroupTable cyclic_group(int n);
GroupTable dihedral_group(int n);   // <r,s | r^n = s^2 = e, srs = r^-1>, order e,r,..,s,sr,..
GroupTable symmetric_group(int n);  // n <= 5
GroupTable quaternion_group();      // Q8
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// Parses builtin specs: "cyclic:n", "dihedral:n", "symmetric:n",
/// "quaternion8", "product:SPEC,SPEC", "trivial".
GroupTable builtin_group(const std::string& spec, int max_order = 4096);

/// Subgroup as a sorted element list (and bitmask; group order <= 64 whenever
/// subgroup machinery is involved).
struct Subgroup {
  const GroupTable* parent = nullptr;
  std::vector<int> elems;   // sorted, closed under mul and inv, contains 0
  std::uint64_t mask = 0;

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int g) const { return (mask >> g) & 1u; }
  bool operator==(const Subgroup& o) const { return parent == o.parent && mask == o.mask; }
};

Subgroup make_subgroup(const GroupTable& g, std::vector<int> elems);
Subgroup trivial_subgroup(const GroupTable& g);
Subgroup full_subgroup(const GroupTable& g);
Subgroup generated_subgroup(const GroupTable& g, const std::vector<int>& gens);
Subgroup conjugate_subgroup(const Subgroup& s, int x);
bool is_normal_in(const Subgroup& f, const Subgroup& h);

/// Conjugacy classes, each sorted ascending, ordered by smallest member;
/// classes[0] = {identity}.
std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g);
/// class_of[g] = index of g's class in conjugacy_classes(g).
std::vector<int> conjugacy_class_map(const GroupTable& g);

Subgroup centralizer(const GroupTable& g, int f);
/// Centralizer inside a subgroup: { x in H : xf = fx }.
Subgroup centralizer_in(const Subgroup& h, int f);
std::vector<std::pair<int, int>> commuting_pairs(const GroupTable& g);

/// All subgroups up to conjugacy; representative = lexicographically least
/// element set among conjugates; list sorted by (order, element set).
std::vector<Subgroup> all_subgroups(const GroupTable& g, int max_order = 64);
/// All subgroups, no dedup (sorted the same way).
std::vector<Subgroup> all_subgroups_raw(const GroupTable& g, int max_order = 64);
/// Normal subgroups F of H (as subgroups of the common parent).
std::vector<Subgroup> normal_subgroups_of(const Subgroup& h);

/// A subgroup re-indexed as a standalone GroupTable, with translation maps.
struct EmbeddedGroup {
  GroupTable table;
  std::vector<int> to_parent;    // local index -> parent index
  std::vector<int> from_parent;  // parent index -> local index, -1 outside
};
EmbeddedGroup subgroup_as_group(const Subgroup& h);

/// Quotient H/F with a chosen section (least-index coset representatives).
struct QuotientWithSection {
  GroupTable quotient;
  std::vector<int> section;     // quotient index -> representative in parent
  std::vector<int> projection;  // parent index of h in H -> quotient index; -1 outside H
};
QuotientWithSection quotient_with_section(const Subgroup& h, const Subgroup& f);

}  // namespace zc
