#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mt/frattini/level.hpp"
#include "mt/groups/finite_group.hpp"

namespace mt {

using Tuple = std::vector<Elem>;

struct NielsenSpec {
  GroupPtr group;
  /// Indices into group->classes(); treated as a multiset.
  std::vector<std::size_t> classes;
  unsigned p = 2;
  /// Maximum number of partial tuples visited by enumerate().
  std::size_t budget = 50'000'000;
};

/// A Nielsen class with its reduced equivalence: simultaneous conjugation,
/// and for r = 4 also the Klein group generated by q1 q3^-1 and sh^2.
class Nielsen {
 public:
  explicit Nielsen(NielsenSpec spec);

  const NielsenSpec& spec() const { return spec_; }
  const FiniteGroup& group() const { return *spec_.group; }
  std::size_t r() const { return spec_.classes.size(); }
  bool uses_q2() const { return r() == 4; }

  /// Product one, generation, and class multiset.
  bool is_valid(const Tuple& t) const;
  bool in_classes(const Tuple& t) const;
  bool generates(const Tuple& t) const;
  /// Which class each entry lies in (the reordering of the class list).
  std::vector<std::size_t> class_assignment(const Tuple& t) const;

  /// Lexicographically least tuple over conjugation (and Q'' when r = 4).
  Tuple canonical(const Tuple& t) const;
  /// Least tuple over conjugation only.
  Tuple inner_canonical(const Tuple& t) const;
  /// The images of t under the elements of Q'' (t itself first); just {t}
  /// when r != 4.
  std::vector<Tuple> q2_images(const Tuple& t) const;

  // Raw braid moves. None of these canonicalize.
  Tuple sh(const Tuple& t) const;
  /// q_i for 1 <= i <= r-1.
  Tuple twist(const Tuple& t, std::size_t i) const;
  Tuple twist_inverse(const Tuple& t, std::size_t i) const;
  Tuple q1q3inv(const Tuple& t) const;

  // Moves on reduced classes; results are canonical.
  Tuple gamma1(const Tuple& t) const { return canonical(sh(t)); }
  Tuple gamma_inf(const Tuple& t) const { return canonical(twist(t, 2)); }
  Tuple gamma0(const Tuple& t) const;

  /// All reduced classes, sorted.
  std::vector<Tuple> enumerate() const;

  bool is_hm(const Tuple& t) const;
  /// True if some representative of the reduced class of t is H-M.
  bool is_hm_class(const Tuple& t) const;
  unsigned middle_product(const Tuple& t) const;
  bool is_p_divisible(const Tuple& t) const { return middle_product(t) % spec_.p == 0; }

  std::string format(const Tuple& t) const;
  Tuple parse(std::string_view text) const;

 private:
  Tuple conjugate(const Tuple& t, Elem h) const;
  void min_over_conjugation(const Tuple& t, Tuple& best, bool& have) const;

  NielsenSpec spec_;
  std::vector<std::size_t> sorted_classes_;
  // to_rep_[x] conjugates x to its class representative; cent_[c] is the
  // centralizer of the representative of class c.
  std::vector<Elem> to_rep_;
  std::vector<std::vector<Elem>> cent_;
};

/// The M4-bar action on a set of reduced classes closed under the moves.
struct BraidAction {
  std::vector<Tuple> classes;  // sorted
  std::vector<std::uint32_t> gamma1, gamma_inf, gamma0;

  std::size_t size() const { return classes.size(); }
  /// Index of a canonical tuple; throws InvalidArgument if absent.
  std::uint32_t index(const Tuple& t) const;
};

/// Closure of the seeds under gamma1 and gamma_inf. `threads` splits each
/// BFS frontier; the result does not depend on it.
BraidAction braid_action(const Nielsen& ni, const std::vector<Tuple>& seeds, unsigned threads = 1);

using Orbit = std::vector<std::uint32_t>;

/// Orbits of <gamma1, gamma_inf>, each sorted, ordered by least member.
std::vector<Orbit> mbar4_orbits(const BraidAction& a);
/// gamma_inf cycles inside an orbit, each starting at its least member, in
/// order of least member. Cusp widths are their lengths.
std::vector<Orbit> gamma_inf_orbits(const BraidAction& a, const Orbit& orbit);

/// Reduced classes of the lifted Nielsen class lying over t entrywise.
/// Throws EmptyFiber when nothing lies over t.
std::vector<Tuple> lift_tuples(const FrattiniLevel& level, const Tuple& t, const Nielsen& lifted);

/// Class data upstairs: the lifted p' classes of `spec` in level.total.
NielsenSpec lifted_spec(const FrattiniLevel& level, const NielsenSpec& spec);

}  // namespace mt
