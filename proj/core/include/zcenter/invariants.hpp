#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zcenter/centre.hpp"
#include "zcenter/etale.hpp"

namespace zc {

/// A physical modular invariant: the multiplicity matrix of a Lagrangian
/// algebra in Z(GxG, alpha x alpha^-1), reindexed by pairs of simples of
/// Z(G, alpha) and Z(G, alpha^-1).
struct ModularInvariant {
  LagrangianDatum datum;                        // in G x G
  std::vector<std::vector<long long>> matrix;   // [simple of Z(G,a)][simple of Z(G,a^-1)]
};

struct InvariantOptions {
  int max_group_order = 8;  // bound on |G|; G x G then has order <= 64
};

/// The full pipeline: Z(GxG, alpha x alpha^-1) is built, its Lagrangian data
/// enumerated, their characters decomposed, and multiplicities reindexed by
/// the verified product structure of the simples.
struct PhysicalInvariants {
  std::shared_ptr<CentreContext> ctx_a;    // Z(G, alpha)
  std::shared_ptr<CentreContext> ctx_b;    // Z(G, alpha^-1)
  std::shared_ptr<CentreContext> ctx_prod; // Z(GxG, alpha x alpha^-1)
  std::vector<ModularInvariant> invariants;
};
PhysicalInvariants physical_invariants(const GroupTable& g, const Cochain& alpha,
                                       const InvariantOptions& opt = {});

}  // namespace zc
