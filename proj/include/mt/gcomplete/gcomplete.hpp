#pragma once

#include <cstddef>
#include <vector>

#include "mt/groups/finite_group.hpp"

namespace mt {

struct CompletenessVerdict {
  bool complete = false;
  /// When not complete: a largest proper subgroup meeting every required
  /// class (ties broken by sorted element list).
  std::vector<Elem> witness_generators;
  std::vector<Elem> witness_elements;
  std::size_t subgroups_examined = 0;
};

/// True iff no proper subgroup meets all classes in `classes` (indices
/// into g.classes()). Subgroups are found by closing pairs, then adjoining
/// one element at a time; throws Budget past `max_subgroups`.
CompletenessVerdict is_gcomplete(const FiniteGroup& g, const std::vector<std::size_t>& classes,
                                 std::size_t max_subgroups = 50'000);

/// is_gcomplete over the classes of order prime to p.
CompletenessVerdict is_p_gcomplete(const FiniteGroup& g, unsigned p, std::size_t max_subgroups = 50'000);

/// Removes each pair of entries C_i, C_j (i != j) with C_j = C_i^-1 and
/// asks whether the remaining classes are gcomplete; an empty remainder
/// counts as not gcomplete. Throws NoInversePairs when there is no such
/// pair. The witness is that of the first failing removal.
CompletenessVerdict is_hm_p_gcomplete(const FiniteGroup& g, const std::vector<std::size_t>& classes, unsigned p,
                                      std::size_t max_subgroups = 50'000);

/// Least d with Q(zeta_d) = Q(zeta_n).
unsigned cyclotomic_order_q(unsigned n);
unsigned euler_phi(unsigned n);
/// 2 sum [Q(zeta_{d_i}) : Q] over the element orders.
unsigned branch_count_bound(const std::vector<unsigned>& orders);

}  // namespace mt
