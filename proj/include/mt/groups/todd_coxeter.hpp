#pragma once

#include <cstdint>
#include <vector>

#include "mt/groups/finite_group.hpp"
#include "mt/groups/presentation.hpp"

namespace mt {

/// Standardized coset table: cosets are numbered in BFS order from the
/// subgroup coset 0. Column 2k is generator k, column 2k+1 its inverse.
struct CosetTable {
  std::size_t generator_count = 0;
  std::vector<std::vector<std::uint32_t>> rows;

  std::size_t index() const { return rows.size(); }
  std::uint32_t act(std::uint32_t coset, int letter) const;
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;
  /// Right action of generator k on cosets.
  std::vector<std::uint32_t> generator_action(std::size_t k) const;
};

/// HLT coset enumeration of the subgroup generated by `subgroup` in the
/// group presented by `p`. Throws Overflow once more than `max_cosets`
/// cosets are live at once.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets);

/// The group presented by `p` as a regular permutation group on cosets of
/// the trivial subgroup.
FiniteGroup group_from_presentation(const Presentation& p, std::size_t max_order);

struct SchreierData {
  std::vector<Word> coset_representatives;  // BFS spanning tree words
  std::vector<Word> generators;             // u_c x u_{cx}^-1 over non-tree edges
  /// (coset, generator) of the non-tree edge behind each Schreier generator.
  std::vector<std::pair<std::uint32_t, std::size_t>> edges;
};

/// Schreier generators of the subgroup whose coset table is `t`; there are
/// 1 + index * (d - 1) of them.
SchreierData schreier_generators(const CosetTable& t);

}  // namespace mt
