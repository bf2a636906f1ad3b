#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "mt/frattini/cohomology.hpp"
#include "mt/frattini/level.hpp"

namespace mt {

/// A central extension R -> G with kernel Z/p, carried as a level whose
/// kernel is one-dimensional and trivial.
struct CentralExt {
  FrattiniLevel ext;
  Vec h2_class;  // coordinates on the H^2(G, F_p) basis

  Elem center_gen() const { return ext.kernel_basis.at(0); }
  const FiniteGroup& group() const { return ext.total_group(); }
};

/// One extension per line of H^2(G, F_p): the quotients of the universal
/// exponent-p central extension by its index-p kernel subgroups. Throws
/// NotPPerfect when G has a Z/p quotient.
std::vector<CentralExt> enumerate_schur_quotients(const PresentedGroup& g, unsigned p, std::size_t max_cosets);

/// Kernel indices of `level` (its M_k) whose lifts to R have order <= p.
struct VDSet {
  std::vector<bool> in;  // by kernel index
  std::vector<std::size_t> members;
  bool is_submodule = false;

  bool contains(std::size_t i) const { return in[i]; }
};

/// `e` must be an extension of level.total. Throws InvariantViolation if
/// m^p depends on the lift of some m.
VDSet vd_set(const CentralExt& e, const FrattiniLevel& level);

enum class P3Type { Klein4, D4, Q8, Z4xZ2, ElemAbelian, Up, Hp_Wp, Zp2xZp };

const char* to_string(P3Type t);

struct GroupInvariants {
  std::size_t order = 0;
  bool abelian = false;
  unsigned exponent = 1;
  std::size_t order_p = 0;  // elements of order exactly p
};

GroupInvariants invariants_of(const FiniteGroup& g, const std::vector<Elem>& elements, unsigned p);

/// Type of the group generated by lifts of kernel elements i1, i2. Throws
/// RankDeficient when they span a line, InvariantViolation when the type is
/// outside the list allowed for their V_D membership.
P3Type classify_pair(const CentralExt& e, const FrattiniLevel& level, const VDSet& vd, std::size_t i1,
                     std::size_t i2);

bool allowed_pair_type(P3Type t, bool first_in_vd, bool second_in_vd, unsigned p);

struct ModAssume {
  bool a = false, b = false, c = false;
};

ModAssume check_modassume(const FrattiniLevel& level, const VDSet& vd);

struct AbelianWitness {
  std::size_t alpha = 0;  // kernel index outside V_D
  bool abelian = false;
  /// When abelian: M-hat = (Z/p^2)^wide + (Z/p)^narrow.
  std::size_t wide = 0, narrow = 0;
  /// Union of V_D alpha^j over j covers M_k.
  bool cosets_cover = false;
};

/// Throws NoAlpha when every element lifts to order <= p.
AbelianWitness abelian_test(const CentralExt& e, const FrattiniLevel& level, const VDSet& vd);

struct AntecedentResult {
  bool antecedent = false;
  /// G_{k+1} -> R_prev over G_k, by element.
  std::vector<Elem> map;
  /// Kernel indices sent to the identity of R_prev.
  std::vector<bool> in_kernel;
};

/// `prev` is a Schur quotient of level.base, `e` one of level.total. The
/// antecedent holds when the elements of M_k with nontrivial image in R_prev
/// are exactly those whose lifts to R have order p^2.
/// Throws IncompatibleLevels when the groups do not match or no map
/// G_{k+1} -> R_prev over G_k exists.
AntecedentResult antecedent_test(const CentralExt& prev, const CentralExt& e, const FrattiniLevel& level);

/// "<rad> -> <top>" where <top> names M-hat divided by a normal lift of
/// rad(M_k): "K4+Z4", "Q8+Z2", "Q8.Z4", or a generic invariant string.
std::string slice_display(const CentralExt& e, const FrattiniLevel& level, const VDSet& vd);

/// Pair-type counts over unordered independent pairs of kernel elements.
std::map<std::string, std::size_t> p3_census(const CentralExt& e, const FrattiniLevel& level, const VDSet& vd);

/// Exhaustive checks of lift independence, the pair lemma, the corollary
/// on Z/p^2 x Z/p, and the implications among (a), (b), (c), abelian.
/// Returns descriptions of violations.
std::vector<std::string> verify_schur_properties(const CentralExt& e, const FrattiniLevel& level, const VDSet& vd,
                                                 std::size_t* assertions = nullptr);

/// G_k-orbits on M_k minus V_D.
std::vector<std::vector<std::size_t>> outside_orbits(const FrattiniLevel& level, const VDSet& vd);

nlohmann::ordered_json schur_report(const std::vector<CentralExt>& quotients, const FrattiniLevel& level,
                                    const std::vector<CentralExt>& previous);

}  // namespace mt
