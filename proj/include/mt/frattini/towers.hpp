#pragma once

#include <optional>
#include <vector>

#include "mt/frattini/cohomology.hpp"
#include "mt/frattini/level.hpp"
#include "mt/groups/subgroups.hpp"

namespace mt {

/// D_N as permutations of Z/N: r = i -> i+1, s = i -> -i.
GroupPtr dihedral_group(std::size_t n);

/// Level k of the dihedral tower for odd p: total D_{p^{k+1}} over base
/// D_{p^k}; for k = 0 both are D_p and the projection is the identity.
FrattiniLevel dihedral_level(unsigned p, unsigned k, std::size_t max_order);

struct SplitLevel {
  FrattiniLevel level;  // G_1 = P_1 x| H over G_0 = P_0 x| H
  PresentedGroup base;  // presentation of G_0 used for the construction
  std::size_t p1_order = 0;
  /// Per H generator, the chosen images of x_1..x_d as elements of P_1.
  std::vector<std::vector<Word>> action_lift;
};

/// First Frattini level of P_0 x| H with P_0 = F_p^d given as the module
/// `v` over H: P_1 = F / Phi(Phi(F)) from the Schreier generators of Phi(F),
/// with the lexicographically first lift of the H action.
SplitLevel split_level(const GModule& v, std::size_t max_cosets);

struct FirstLevel {
  SubgroupHandle sylow;
  SubgroupHandle normalizer;
  SubgroupHandle complement;
  SplitLevel local;                // level over the normalizer
  std::vector<Elem> local_embedding;  // local base -> G
  std::optional<GModule> induced;  // only when the normalizer is proper
  std::vector<Subspace> summands;
  std::size_t chosen = 0;
  GModule m0;
  std::size_t h2_dimension = 0;
  std::optional<FrattiniLevel> level;
};

/// G_1 -> G_0 for a presented group whose p-Sylow is elementary abelian.
/// With a proper normalizer the Frattini module is the summand of the
/// induced module carrying nonzero H^2 (one induction step only). The
/// level itself is built only when |G| * p^dim M_0 <= max_cosets.
FirstLevel first_level(const PresentedGroup& g, unsigned p, std::size_t max_cosets);

}  // namespace mt
