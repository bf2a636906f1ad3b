#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mt/groups/perm.hpp"

namespace mt {

/// Elements are indices into the canonical BFS table of their group.
using Elem = std::uint32_t;

/// A word over group generators: letter +k (resp. -k) is generator k-1
/// (resp. its inverse). Shared with free words of presentations.
using Word = std::vector<int>;

struct ConjClass {
  Elem representative = 0;   // smallest member
  std::vector<Elem> members;  // sorted
  unsigned element_order = 1;
};

/// A concrete finite group given by its right Cayley graph.
///
/// Element 0 is the identity; the remaining elements are numbered in BFS
/// order from the identity, expanding generators in input order. The full
/// multiplication table is materialized up to kTableLimit elements; above
/// that products are traced along stored BFS words.
class FiniteGroup {
 public:
  static constexpr Elem kIdentity = 0;
  static constexpr std::size_t kTableLimit = 4096;

  static FiniteGroup from_permutations(const std::vector<Perm>& gens, std::size_t max_order);

  /// Builds the group from a regular right action: right_mult[k][x] is the
  /// point x * gen_k. Points reachable from `start` become the elements.
  static FiniteGroup from_right_action(const std::vector<std::vector<std::uint32_t>>& right_mult,
                                       std::uint32_t start, std::size_t max_order);

  std::size_t order() const { return parent_.size(); }
  std::size_t generator_count() const { return right_.size(); }
  Elem generator(std::size_t k) const { return right_[k][kIdentity]; }
  std::vector<Elem> generators() const;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, long long e) const;
  /// h^-1 g h.
  Elem conj(Elem g, Elem h) const { return mul(inv(h), mul(g, h)); }
  /// a^-1 b^-1 a b.
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem times_generator(Elem a, std::size_t k) const { return right_[k][a]; }
  unsigned element_order(Elem a) const { return orders_[a]; }

  /// BFS word (generator indices, all positive) spelling the element.
  std::vector<std::size_t> word(Elem a) const;
  /// Same word as a signed free word (letters k+1).
  Word free_word(Elem a) const;
  Elem evaluate(const Word& w) const;
  /// BFS tree: element = parent(element) * generator(parent_generator(element)).
  Elem parent(Elem a) const { return parent_[a]; }
  std::size_t parent_generator(Elem a) const { return parent_gen_[a]; }

  const std::vector<ConjClass>& classes() const { return classes_; }
  std::size_t class_of(Elem a) const { return class_of_[a]; }

  bool has_permutations() const { return !perms_.empty(); }
  const Perm& permutation(Elem a) const { return perms_.at(a); }
  std::optional<Elem> find(const Perm& p) const;
  /// Cycle notation for permutation groups, otherwise "g<index>".
  std::string label(Elem a) const;

  /// Sorted element list of the subgroup generated by `gens`.
  std::vector<Elem> closure(std::span<const Elem> gens) const;
  /// Subgroup as a group in its own right, with generators `gens`;
  /// `embedding` receives subgroup element -> ambient element.
  FiniteGroup subgroup(std::span<const Elem> gens, std::vector<Elem>* embedding) const;

  std::vector<Elem> centralizer(std::span<const Elem> elems) const;
  bool is_abelian() const;

  /// Raw right-multiplication tables, indexed [generator][element].
  const std::vector<std::vector<Elem>>& right_tables() const { return right_; }

 private:
  FiniteGroup() = default;
  void finish();
  void build_table();
  void build_inverses_and_orders();
  void build_classes();

  std::vector<std::vector<Elem>> right_;
  std::vector<Elem> parent_;
  std::vector<std::uint16_t> parent_gen_;
  std::vector<std::uint16_t> table_;  // row-major, only when order <= kTableLimit
  std::vector<Elem> inverse_;
  std::vector<unsigned> orders_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<Perm> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

GroupPtr group_from_generators(const std::vector<Perm>& gens, std::size_t max_order);

/// Classes sorted by (element order, class size, representative index).
const std::vector<ConjClass>& conjugacy_classes(const FiniteGroup& g);

/// True iff the abelianization of G has trivial p-part.
bool is_p_perfect(const FiniteGroup& g, unsigned p);

bool is_center_free(const FiniteGroup& g);

/// Homomorphism determined by images of the source generators; throws
/// InvariantViolation if the images do not define a homomorphism.
std::vector<Elem> homomorphism_from_generators(const FiniteGroup& source, const FiniteGroup& target,
                                               std::span<const Elem> images);

bool is_prime(unsigned n);

}  // namespace mt
