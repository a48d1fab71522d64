#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zcenter/chartable.hpp"
#include "zcenter/cochain.hpp"
#include "zcenter/cyclotomic.hpp"
#include "zcenter/group.hpp"
#include "zcenter/rational.hpp"

namespace zc {

/// Label of a simple object: a conjugacy class (through its canonical
/// representative) and an irreducible projective character of the
/// representative's centralizer, twisted by -alpha(.,.|f).
struct SimpleLabel {
  int class_index = 0;
  int char_index = 0;
};

/// Character of an object of the twisted centre: a cyclotomic-valued function
/// on the commuting pairs of G.  Lookups at non-commuting pairs are zero by
/// contract.
struct CentreCharacter {
  long long root_order = 1;
  std::vector<Cyclotomic> values;  // aligned with CentreContext::pairs
};

/// Everything fixed by the choice of (G, alpha): transgression tables, the
/// commuting-pair index, the per-class centralizer sectors with their
/// projective character tables, and the simple-object list.
class CentreContext {
 public:
  CentreContext(const GroupTable& g, const Cochain& alpha, int max_extension_order = 256);

  const GroupTable& group() const { return g_; }
  const Cochain& alpha() const { return alpha_; }
  const TransgressionTables& tg() const { return tg_; }
  long long root_order() const { return root_order_; }

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[static_cast<std::size_t>(g)]; }
  int class_rep(int c) const { return classes_[static_cast<std::size_t>(c)][0]; }

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int pair_index(int f, int g) const {
    return pair_index_[static_cast<std::size_t>(f) * g_.order() + g];
  }
  /// Canonical printed columns: one commuting pair per simultaneous-conjugacy
  /// orbit, ordered by (class of f, centralizer-class of g).
  const std::vector<std::pair<int, int>>& column_pairs() const { return column_pairs_; }

  struct Sector {
    int rep = 0;
    Subgroup cent;
    EmbeddedGroup cg;
    Cochain mu;  // 2-cocycle -alpha(.,.|rep) on cg.table
    ProjectiveCharacterTable ptab;
  };
  const std::vector<Sector>& sectors() const { return sectors_; }

  const std::vector<SimpleLabel>& simples() const { return simples_; }
  int simple_index(const SimpleLabel& l) const;
  /// Degree chi(e,e)-style data: value of the simple character at (rep, e).
  long long simple_degree(int i) const;
  /// Total dimension of the simple object (class size times degree).
  long long simple_total_dimension(int i) const;

  const CentreCharacter& simple_character(int i) const { return simple_chars_[static_cast<std::size_t>(i)]; }
  const CentreCharacter& unit_character() const { return simple_chars_[0]; }

  Cyclotomic value_at(const CentreCharacter& chi, int f, int g) const;
  CentreCharacter zero_character() const;

 private:
  CentreCharacter compute_simple_character(const SimpleLabel& l) const;

  GroupTable g_;
  Cochain alpha_;
  TransgressionTables tg_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_index_;
  std::vector<std::pair<int, int>> column_pairs_;
  std::vector<Sector> sectors_;
  long long root_order_ = 1;
  std::vector<SimpleLabel> simples_;
  std::vector<CentreCharacter> simple_chars_;
};

/// The projective class-function property: chi(xfx^-1, xgx^-1) equals
/// (alpha(x,g|f) - alpha(xgx^-1,x|f)) times chi(f,g), for all x.
bool is_class_function(const CentreContext& ctx, const CentreCharacter& chi);

CentreCharacter char_product(const CentreContext& ctx, const CentreCharacter& a,
                             const CentreCharacter& b);
CentreCharacter char_dual(const CentreContext& ctx, const CentreCharacter& a);
/// (chi, psi) = |G|^-1 sum_{fg=gf} alpha(g^-1,g|f) chi(f,g^-1) psi(f,g);
/// must come out rational (NonRationalResult otherwise).
Rat scalar_product(const CentreContext& ctx, const CentreCharacter& a,
                   const CentreCharacter& b);
/// Multiplicities (chi_i, chi) over the simples; verifies exact non-negative
/// integral reconstruction (NotACharacter otherwise).
std::vector<long long> decompose(const CentreContext& ctx, const CentreCharacter& chi);

/// Pretty multiplicity vectors like "x0+x1+2x2".
std::string decomposition_string(const std::vector<long long>& m, bool unicode = true);

}  // namespace zc
