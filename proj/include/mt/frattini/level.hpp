#pragma once

#include <string>
#include <vector>

#include "mt/groups/finite_group.hpp"
#include "mt/groups/presentation.hpp"
#include "mt/modules/gmodule.hpp"

namespace mt {

/// An extension 1 -> M -> total -> base -> 1 with M elementary abelian,
/// carried with the conjugation module structure of M over base.
struct FrattiniLevel {
  PresentedGroup total;  // generator images are the generators of total.group
  GroupPtr base;
  unsigned p = 2;
  std::vector<Elem> projection;  // total element -> base element
  std::vector<Elem> section;     // base element -> chosen lift
  std::vector<Elem> kernel_basis;
  GModule kernel_module;
  /// kernel_elements[i] is the product of kernel_basis[l]^{a_l}, where the
  /// a_l are the base-p digits of i (most significant first).
  std::vector<Elem> kernel_elements;
  std::vector<std::int64_t> kernel_index;  // total element -> index or -1
  /// Construction choices worth reporting (e.g. the chosen action lift).
  std::vector<std::string> notes;

  const FiniteGroup& total_group() const { return *total.group; }
  std::size_t kernel_dim() const { return kernel_basis.size(); }
  bool in_kernel(Elem e) const { return kernel_index[e] >= 0; }
  Vec kernel_vector(Elem e) const;
  Elem kernel_element(const Vec& v) const;
  /// All elements of total over base element g.
  std::vector<Elem> fiber(Elem g) const;
};

/// Assembles a level from a total group, a surjection onto base given by
/// images of the total generators, and a basis of the kernel. The kernel
/// module is read off by conjugation; throws Collapse if the kernel is not
/// elementary abelian of order p^(basis size).
FrattiniLevel make_level(PresentedGroup total, GroupPtr base, const std::vector<Elem>& generator_images, unsigned p,
                         const std::vector<Elem>& kernel_basis);

struct OrderLiftingReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks that lifts of elements of order divisible by p gain a factor p in
/// order and that each p' class has exactly one p' class above it.
OrderLiftingReport verify_order_lifting(const FrattiniLevel& level);

/// True iff every choice of lifts of the base generators generates total.
/// Exhaustive up to 2^16 choices, deterministic sampling beyond.
bool verify_frattini(const FrattiniLevel& level);

/// The unique p' class of total mapping onto the p' class `c` of base.
const ConjClass& lift_class(const FrattiniLevel& level, const ConjClass& c);
std::size_t lift_class_index(const FrattiniLevel& level, std::size_t base_class);

/// True iff the preimage of the subgroup generated by `gens` splits.
bool restriction_splits(const FrattiniLevel& level, const std::vector<Elem>& gens);

}  // namespace mt
