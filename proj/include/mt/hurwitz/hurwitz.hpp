#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mt/nielsen/nielsen.hpp"

namespace mt {

struct ShIncidence {
  std::vector<std::string> labels;  // "O1", "O2", ... in cusp order
  std::vector<std::vector<std::size_t>> matrix;
  /// Diagonal blocks as lists of cusp indices, ordered by least index.
  std::vector<std::vector<std::size_t>> blocks;

  bool symmetric() const;
  std::string to_csv() const;
};

/// All gamma_inf orbits of the action, ordered by least member.
std::vector<Orbit> all_cusps(const BraidAction& a);

/// Entry (i, j) counts x in cusps[i] with (x)sh in cusps[j].
ShIncidence sh_incidence(const BraidAction& a, const std::vector<Orbit>& cusps);

/// ind of a permutation restricted to an invariant set: size minus cycles.
std::size_t index_of(const std::vector<std::uint32_t>& perm, const Orbit& orbit);

struct Indices {
  std::size_t ind0 = 0, ind1 = 0, indinf = 0;
  std::size_t sum() const { return ind0 + ind1 + indinf; }
};

/// Cycle-count indices.
Indices orbit_indices(const BraidAction& a, const Orbit& orbit);
/// The same indices from fixed points alone: gamma0 has order 3 and gamma1
/// order 2 on reduced classes (r = 4), gamma_inf from cusp widths.
Indices fixed_point_indices(const BraidAction& a, const Orbit& orbit);

/// Solves 2(|O| + g - 1) = ind0 + ind1 + indinf; throws NonIntegralGenus.
std::size_t genus_from(std::size_t orbit_size, const Indices& ind);
std::size_t component_genus(const BraidAction& a, const Orbit& orbit);

struct ModuliFlags {
  bool b_fine = false;
  bool fine = false;
  std::vector<std::uint32_t> gamma0_fixed, gamma1_fixed;
};

/// b-fine: Q'' faithful on the inner classes over the orbit. Fine: b-fine
/// and neither gamma0 nor gamma1 has a fixed point.
ModuliFlags moduli_tests(const Nielsen& ni, const BraidAction& a, const Orbit& orbit);

/// Cusps of the orbit (indices into gamma_inf_orbits order) whose length
/// is shorter than the q2 orbit of an inner class over them.
std::vector<std::size_t> shortening_detect(const Nielsen& ni, const BraidAction& a, const Orbit& orbit);

struct CuspCensus {
  std::vector<std::size_t> widths;
  std::vector<unsigned> middle_products;
  std::vector<bool> p_divisible;
  std::vector<bool> hm;
  std::size_t t_prime = 0;
};

/// Per cusp width, mpr and H-M membership. Throws InvariantViolation if
/// mpr is not constant along a cusp.
CuspCensus cusp_census(const Nielsen& ni, const BraidAction& a, const Orbit& orbit);

struct ComponentReport {
  std::size_t orbit_size = 0;
  std::vector<std::size_t> cusp_widths;
  Indices ind;
  std::size_t genus = 0;
  std::size_t t_prime = 0;
  std::vector<std::size_t> hm_cusps;
  bool b_fine = false;
  bool fine = false;

  nlohmann::ordered_json to_json() const;
};

ComponentReport component_report(const Nielsen& ni, const BraidAction& a, const Orbit& orbit);

struct CuspFiber {
  std::size_t width = 0;
  unsigned mpr = 0;
  bool p_divisible = false;
  std::size_t lifts = 0;  // elements upstairs over the first cusp member
  std::vector<std::size_t> widths_above;
  std::vector<unsigned> mpr_above;
  std::size_t divisible_above = 0;  // p-divisible cusps above
};

struct LevelComparison {
  std::size_t degree = 0;
  std::vector<CuspFiber> cusps;
  std::size_t t_prime = 0;
  /// Counts of p-divisible cusps above each non-divisible cusp.
  std::vector<std::size_t> u;
  bool elliptic_ramification = false;
  /// Cusps upstairs whose width grows by less than their mpr does.
  std::vector<std::size_t> orbit_shortening;
  /// shortening_detect on each orbit.
  std::vector<std::size_t> shortening_down, shortening_up;
  /// Cusps upstairs whose width grows by more than their mpr does.
  std::vector<std::size_t> width_excess;
  std::vector<std::string> mpr_violations;
};

/// Compares an orbit upstairs with the orbit below it. Throws
/// MismatchedLevels when the orbits do not lie over each other.
LevelComparison level_compare(const Nielsen& down, const BraidAction& a_down, const Orbit& o_down,
                              const Nielsen& up, const BraidAction& a_up, const Orbit& o_up,
                              const FrattiniLevel& level);

/// elliptic_detect: gamma0 or gamma1 cycles upstairs longer than the cycle
/// below them.
bool elliptic_detect(const BraidAction& a_down, const BraidAction& a_up, const Orbit& o_up,
                     const std::vector<std::uint32_t>& image);

struct Fraction {
  long long num = 0, den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// ((p-1)/2p t' - 1) deg + 1 + (p-1)/2 sum U, reduced.
Fraction genus_lower_bound(std::size_t t_prime, std::size_t degree, const std::vector<std::size_t>& u, unsigned p);

enum class GoupVerdict { Equal, Below, Violated };

struct GoupFlags {
  std::size_t genus_below = 0;
  bool elliptic = false;
  bool shortening = false;
  bool width_excess = false;
};

GoupFlags goup_flags(const LevelComparison& lc, std::size_t genus_below);

/// Equality is required when there is neither elliptic ramification nor
/// width excess, otherwise only the inequality. Throws
/// HypothesisUnmet when the lower orbit has positive genus or shortens.
GoupVerdict check_goup(const Fraction& bound, std::size_t actual, const GoupFlags& flags);

}  // namespace mt
