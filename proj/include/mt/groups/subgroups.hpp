#pragma once

#include <vector>

#include "mt/groups/finite_group.hpp"

namespace mt {

/// A subgroup recorded by a generating list and its sorted elements.
struct SubgroupHandle {
  std::vector<Elem> generators;
  std::vector<Elem> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem e) const;
};

SubgroupHandle make_subgroup(const FiniteGroup& g, std::vector<Elem> gens);

/// A Sylow p-subgroup grown greedily from p-elements in index order.
SubgroupHandle sylow_subgroup(const FiniteGroup& g, unsigned p);

SubgroupHandle normalizer(const FiniteGroup& g, const SubgroupHandle& s);

/// A p'-subgroup of `s` of order |s|/|normal p-part|, grown greedily from
/// p' elements; throws HypothesisUnmet when the greedy search stalls.
SubgroupHandle p_prime_complement(const FiniteGroup& g, const SubgroupHandle& s, unsigned p);

/// Basis of an elementary abelian p-subgroup, chosen greedily in index order.
std::vector<Elem> elementary_abelian_basis(const FiniteGroup& g, const SubgroupHandle& s, unsigned p);

unsigned p_part(std::size_t n, unsigned p);

}  // namespace mt
