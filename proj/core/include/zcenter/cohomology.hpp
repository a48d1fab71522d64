#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zcenter/cochain.hpp"
#include "zcenter/group.hpp"

namespace zc {

/// Outcome of a coboundary solve.  Positive answers carry a verified witness
/// (d(witness) = beta exactly).  Negative answers are certain when a cyclic
/// obstruction was found, otherwise they hold relative to the escalated
/// modulus recorded in `modulus_tried`.
struct CoboundaryOutcome {
  bool is_coboundary = false;
  Cochain witness;
  long long modulus_tried = 0;
  bool certain_negative = false;
  std::string obstruction;  // human-readable note for negatives
};

/// Decides whether a normalized 2- or 3-cocycle is a coboundary over Q/Z and
/// produces a witness when it is.  Witness values are searched in
/// (1/(m|G|))Z/Z and then (1/(m|G|^2))Z/Z, m = lcm of value denominators.
CoboundaryOutcome solve_coboundary(const GroupTable& g, const Cochain& beta);

/// Throwing wrapper: returns the witness or raises NotACoboundary.
Cochain require_coboundary_witness(const GroupTable& g, const Cochain& beta);

struct CohomologyResult {
  std::vector<long long> invariant_factors;  // descending divisibility chain
  std::vector<Cochain> generators;           // one representative cocycle each
};

struct CohomologyOptions {
  int max_order_deg2 = 32;  // generic bound; internal direct products split via Kunneth
  int max_order_deg3 = 12;
  int max_enumeration = 4096;  // cap on raw-class enumeration during filtering
};

/// H^n(G, Q/Z) for n in {1,2,3}, with representative cocycles per generator.
/// Computed from the normalized bar complex modulo |G|^2 prime power by prime
/// power; classes that die in Q/Z (witnesses with larger denominators) are
/// filtered out through the coboundary solver.
CohomologyResult cohomology(const GroupTable& g, int degree,
                            const CohomologyOptions& opt = {});

/// All homomorphisms G -> Q/Z (the character group of the abelianization),
/// enumerated deterministically; index 0 is the zero map.
std::vector<std::vector<Phase>> all_characters_qz(const GroupTable& g);

/// All bihomomorphisms A x B -> Q/Z, deterministically ordered, zero first.
std::vector<std::vector<Phase>> all_bilinear_qz(const GroupTable& a, const GroupTable& b);

}  // namespace zc
