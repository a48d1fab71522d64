#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zcenter/centre.hpp"
#include "zcenter/cochain.hpp"
#include "zcenter/cohomology.hpp"
#include "zcenter/group.hpp"

namespace zc {

/// Lagrangian datum: a subgroup (canonical conjugacy representative) with a
/// trivializing 2-cochain for alpha restricted to it.
struct LagrangianDatum {
  Subgroup h;
  EmbeddedGroup hg;
  Cochain gamma;  // on hg.table, d(gamma) = alpha|_H
};

/// Etale datum A(H, F, gamma, epsilon): normal F in H, trivializing gamma on
/// F and a compatible projective action table epsilon : H x F -> Q/Z
/// (stored on parent-group indices).
struct EtaleDatum {
  Subgroup h;
  Subgroup f;
  EmbeddedGroup fg;
  Cochain gamma;  // on fg.table, d(gamma) = alpha|_F
  EpsilonTable epsilon;
};

struct EtaleOptions {
  int max_group_order = 64;
  bool identify_by_normalizer = false;  // extra identification, off by default
  long long max_epsilon_orbit = 4096;
};

/// Subgroup conjugacy representatives H with alpha|_H a coboundary, each with
/// one verified witness.
std::vector<std::pair<Subgroup, Cochain>> admissible_subgroups(const GroupTable& g,
                                                               const Cochain& alpha,
                                                               const EtaleOptions& opt = {});

/// All Lagrangian data: admissible H, witnesses enumerated one per
/// H^2(H, Q/Z)-class (base witness plus class generators).
std::vector<LagrangianDatum> lagrangian_data(const GroupTable& g, const Cochain& alpha,
                                             const EtaleOptions& opt = {});

/// For F = H the action table is determined by gamma:
/// epsilon_f(g) = gamma(f,g) - gamma(fgf^-1, f).
EpsilonTable epsilon_from_gamma(const EmbeddedGroup& hg, const Cochain& gamma);

/// First-principles validation of an etale datum: d(gamma) = alpha|_F, the
/// action is alpha-projective, multiplicative and commutative.  The
/// alternative transgression placements (arguments on the other side of the
/// bar) are evaluated alongside and reported for comparison.
struct EtaleValidation {
  bool ok = false;
  std::string first_failure;
  bool action_bar_swapped_matches = true;   // acfa(f|g,h) in place of tefa(g,h|f)
  bool product_bar_swapped_matches = true;  // tefa(f,g|h) in place of acfa(h|f,g)
};
EtaleValidation validate_etale(const GroupTable& g, const Cochain& alpha,
                               const EtaleDatum& datum);

/// Character of the Lagrangian algebra L(H, gamma) via coset transport of the
/// twisted-group-algebra character.
CentreCharacter lagrangian_character(const CentreContext& ctx, const LagrangianDatum& datum);
/// Same with explicit coset representatives (for representative-independence
/// tests); reps[i] must enumerate one y per contributing coset.
CentreCharacter lagrangian_character_with_reps(const CentreContext& ctx,
                                               const LagrangianDatum& datum,
                                               const std::vector<int>& coset_reps);

/// The reduced 3-cocycle on H/F attached to an etale datum and a section of
/// H -> H/F; throws QuotientNotCocycle if the assembled cochain fails the
/// cocycle identity.
struct QuotientCocycle {
  QuotientWithSection quotient;
  Cochain alpha_bar;  // 3-cocycle on quotient.quotient
};
QuotientCocycle quotient_cocycle(const GroupTable& g, const Cochain& alpha,
                                 const EtaleDatum& datum,
                                 const std::optional<std::vector<int>>& section_override = {});

/// Complete enumeration of etale data up to isomorphism: H up to conjugacy,
/// F normal in H, gamma per H^2(F)-class of witnesses, epsilon solved from
/// the linear constraints and deduplicated under the character shifts
/// c : F -> Q/Z.
std::vector<EtaleDatum> etale_enumerate(const GroupTable& g, const Cochain& alpha,
                                        const EtaleOptions& opt = {});

/// The Lagrangian data seen inside the etale enumeration (F = H), for
/// cross-checking; epsilon is then forced by gamma.
EtaleDatum lagrangian_as_etale(const LagrangianDatum& datum);

}  // namespace zc
