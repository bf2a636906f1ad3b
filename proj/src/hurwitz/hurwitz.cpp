#include "mt/hurwitz/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mt/error.hpp"

namespace mt {

bool ShIncidence::symmetric() const {
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (matrix[i][j] != matrix[j][i]) return false;
  return true;
}

std::string ShIncidence::to_csv() const {
  std::ostringstream out;
  for (const auto& l : labels) out << ',' << l;
  out << '\n';
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << labels[i];
    for (auto v : matrix[i]) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

std::vector<Orbit> all_cusps(const BraidAction& a) {
  Orbit everything(a.size());
  std::iota(everything.begin(), everything.end(), 0u);
  return gamma_inf_orbits(a, everything);
}

ShIncidence sh_incidence(const BraidAction& a, const std::vector<Orbit>& cusps) {
  std::map<std::uint32_t, std::size_t> where;
  for (std::size_t i = 0; i < cusps.size(); ++i)
    for (auto x : cusps[i]) where[x] = i;
  ShIncidence s;
  const std::size_t u = cusps.size();
  s.matrix.assign(u, std::vector<std::size_t>(u, 0));
  for (std::size_t i = 0; i < u; ++i) {
    s.labels.push_back("O" + std::to_string(i + 1));
    for (auto x : cusps[i]) {
      auto it = where.find(a.gamma1[x]);
      if (it == where.end()) throw Error(ErrorKind::InvalidArgument, "cusp list is not closed under sh");
      ++s.matrix[i][it->second];
    }
  }
  std::vector<bool> seen(u, false);
  for (std::size_t i = 0; i < u; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> block{i};
    seen[i] = true;
    for (std::size_t k = 0; k < block.size(); ++k) {
      for (std::size_t j = 0; j < u; ++j) {
        if (!seen[j] && (s.matrix[block[k]][j] || s.matrix[j][block[k]])) {
          seen[j] = true;
          block.push_back(j);
        }
      }
    }
    std::sort(block.begin(), block.end());
    s.blocks.push_back(std::move(block));
  }
  return s;
}

std::size_t index_of(const std::vector<std::uint32_t>& perm, const Orbit& orbit) {
  std::set<std::uint32_t> seen;
  std::size_t cycles = 0;
  for (auto s : orbit) {
    if (seen.count(s)) continue;
    ++cycles;
    for (auto x = s; !seen.count(x); x = perm[x]) seen.insert(x);
  }
  return orbit.size() - cycles;
}

Indices orbit_indices(const BraidAction& a, const Orbit& orbit) {
  return {index_of(a.gamma0, orbit), index_of(a.gamma1, orbit), index_of(a.gamma_inf, orbit)};
}

Indices fixed_point_indices(const BraidAction& a, const Orbit& orbit) {
  std::size_t f0 = 0, f1 = 0;
  for (auto x : orbit) {
    f0 += a.gamma0[x] == x;
    f1 += a.gamma1[x] == x;
  }
  const std::size_t n = orbit.size();
  Indices ind;
  ind.ind0 = 2 * (n - f0) / 3;
  ind.ind1 = (n - f1) / 2;
  for (const auto& c : gamma_inf_orbits(a, orbit)) ind.indinf += c.size() - 1;
  return ind;
}

std::size_t genus_from(std::size_t orbit_size, const Indices& ind) {
  long long rhs = static_cast<long long>(ind.sum());
  if (rhs % 2 != 0) throw Error(ErrorKind::NonIntegralGenus, "index sum " + std::to_string(rhs) + " is odd");
  long long g = rhs / 2 - static_cast<long long>(orbit_size) + 1;
  if (g < 0) throw Error(ErrorKind::NonIntegralGenus, "negative genus " + std::to_string(g));
  return static_cast<std::size_t>(g);
}

std::size_t component_genus(const BraidAction& a, const Orbit& orbit) {
  return genus_from(orbit.size(), orbit_indices(a, orbit));
}

namespace {

// Inner classes lying over the reduced classes of the orbit.
std::set<Tuple> inner_preimage(const Nielsen& ni, const BraidAction& a, const Orbit& orbit) {
  std::set<Tuple> out;
  for (auto x : orbit)
    for (const auto& q : ni.q2_images(a.classes[x])) out.insert(ni.inner_canonical(q));
  return out;
}

}  // namespace

ModuliFlags moduli_tests(const Nielsen& ni, const BraidAction& a, const Orbit& orbit) {
  ModuliFlags f;
  if (ni.uses_q2()) {
    std::vector<bool> moves(3, false);
    for (const auto& y : inner_preimage(ni, a, orbit)) {
      auto imgs = ni.q2_images(y);
      for (std::size_t k = 1; k < 4; ++k)
        if (ni.inner_canonical(imgs[k]) != y) moves[k - 1] = true;
    }
    f.b_fine = moves[0] && moves[1] && moves[2];
  } else {
    f.b_fine = true;
  }
  for (auto x : orbit) {
    if (a.gamma0[x] == x) f.gamma0_fixed.push_back(x);
    if (a.gamma1[x] == x) f.gamma1_fixed.push_back(x);
  }
  f.fine = f.b_fine && f.gamma0_fixed.empty() && f.gamma1_fixed.empty();
  return f;
}

std::vector<std::size_t> shortening_detect(const Nielsen& ni, const BraidAction& a, const Orbit& orbit) {
  auto cusps = gamma_inf_orbits(a, orbit);
  std::map<std::uint32_t, std::size_t> cusp_of;
  for (std::size_t i = 0; i < cusps.size(); ++i)
    for (auto x : cusps[i]) cusp_of[x] = i;
  std::set<std::size_t> shortened;
  std::set<Tuple> done;
  for (const auto& y : inner_preimage(ni, a, orbit)) {
    if (done.count(y)) continue;
    std::size_t len = 0;
    Tuple z = y;
    do {
      done.insert(z);
      ++len;
      z = ni.inner_canonical(ni.twist(z, 2));
    } while (z != y);
    std::size_t c = cusp_of.at(a.index(ni.canonical(y)));
    if (cusps[c].size() < len) shortened.insert(c);
  }
  return {shortened.begin(), shortened.end()};
}

CuspCensus cusp_census(const Nielsen& ni, const BraidAction& a, const Orbit& orbit) {
  CuspCensus c;
  for (const auto& cusp : gamma_inf_orbits(a, orbit)) {
    unsigned m = ni.middle_product(a.classes[cusp[0]]);
    bool hm = false;
    for (auto x : cusp) {
      if (ni.middle_product(a.classes[x]) != m)
        throw Error(ErrorKind::InvariantViolation, "middle product not constant on a cusp");
      hm = hm || ni.is_hm_class(a.classes[x]);
    }
    c.widths.push_back(cusp.size());
    c.middle_products.push_back(m);
    c.p_divisible.push_back(m % ni.spec().p == 0);
    c.hm.push_back(hm);
    c.t_prime += m % ni.spec().p == 0;
  }
  return c;
}

nlohmann::ordered_json ComponentReport::to_json() const {
  nlohmann::ordered_json j;
  j["orbit_size"] = orbit_size;
  j["cusp_widths"] = cusp_widths;
  j["ind0"] = ind.ind0;
  j["ind1"] = ind.ind1;
  j["indinf"] = ind.indinf;
  j["genus"] = genus;
  j["t_prime"] = t_prime;
  j["hm_cusps"] = hm_cusps;
  j["b_fine"] = b_fine;
  j["fine"] = fine;
  return j;
}

ComponentReport component_report(const Nielsen& ni, const BraidAction& a, const Orbit& orbit) {
  ComponentReport r;
  r.orbit_size = orbit.size();
  auto census = cusp_census(ni, a, orbit);
  r.cusp_widths = census.widths;
  r.t_prime = census.t_prime;
  for (std::size_t i = 0; i < census.hm.size(); ++i)
    if (census.hm[i]) r.hm_cusps.push_back(i);
  r.ind = orbit_indices(a, orbit);
  r.genus = genus_from(orbit.size(), r.ind);
  auto flags = moduli_tests(ni, a, orbit);
  r.b_fine = flags.b_fine;
  r.fine = flags.fine;
  return r;
}

bool elliptic_detect(const BraidAction& a_down, const BraidAction& a_up, const Orbit& o_up,
                     const std::vector<std::uint32_t>& image) {
  auto cycle_len = [](const std::vector<std::uint32_t>& perm, std::uint32_t x) {
    std::size_t n = 1;
    for (auto y = perm[x]; y != x; y = perm[y]) ++n;
    return n;
  };
  for (auto x : o_up) {
    if (cycle_len(a_up.gamma0, x) > cycle_len(a_down.gamma0, image[x])) return true;
    if (cycle_len(a_up.gamma1, x) > cycle_len(a_down.gamma1, image[x])) return true;
  }
  return false;
}

LevelComparison level_compare(const Nielsen& down, const BraidAction& a_down, const Orbit& o_down,
                              const Nielsen& up, const BraidAction& a_up, const Orbit& o_up,
                              const FrattiniLevel& level) {
  if (level.base.get() != &down.group() || level.total.group.get() != &up.group())
    throw Error(ErrorKind::MismatchedLevels, "Nielsen classes are not on the level's groups");
  const unsigned p = up.spec().p;
  std::vector<std::uint32_t> image(a_up.size(), 0);
  std::map<std::uint32_t, std::size_t> fiber_count;
  for (auto x : o_up) {
    Tuple t;
    for (Elem e : a_up.classes[x]) t.push_back(level.projection[e]);
    auto y = a_down.index(down.canonical(t));
    if (!std::binary_search(o_down.begin(), o_down.end(), y))
      throw Error(ErrorKind::MismatchedLevels, "upper orbit does not lie over the lower orbit");
    image[x] = y;
    ++fiber_count[y];
  }
  LevelComparison lc;
  if (o_up.size() % o_down.size() != 0 || fiber_count.size() != o_down.size())
    throw Error(ErrorKind::MismatchedLevels, "upper orbit does not cover the lower orbit");
  lc.degree = o_up.size() / o_down.size();
  for (const auto& [y, n] : fiber_count)
    if (n != lc.degree) throw Error(ErrorKind::InvariantViolation, "fiber size varies along the orbit");

  auto cusps_down = gamma_inf_orbits(a_down, o_down);
  std::map<std::uint32_t, std::size_t> cusp_of;
  for (std::size_t i = 0; i < cusps_down.size(); ++i) {
    for (auto x : cusps_down[i]) cusp_of[x] = i;
    CuspFiber f;
    f.width = cusps_down[i].size();
    f.mpr = down.middle_product(a_down.classes[cusps_down[i][0]]);
    f.p_divisible = f.mpr % p == 0;
    for (auto x : o_up) f.lifts += image[x] == cusps_down[i][0];
    lc.cusps.push_back(std::move(f));
  }
  auto cusps_up = gamma_inf_orbits(a_up, o_up);
  for (std::size_t j = 0; j < cusps_up.size(); ++j) {
    std::size_t i = cusp_of.at(image[cusps_up[j][0]]);
    auto& f = lc.cusps[i];
    std::size_t w = cusps_up[j].size();
    unsigned m = up.middle_product(a_up.classes[cusps_up[j][0]]);
    f.widths_above.push_back(w);
    f.mpr_above.push_back(m);
    if (m % p == 0) ++f.divisible_above;
    if (f.p_divisible && m != p * f.mpr)
      lc.mpr_violations.push_back("cusp " + std::to_string(i) + ": mpr " + std::to_string(f.mpr) + " lifts to " +
                                  std::to_string(m));
    std::size_t ratio = m / f.mpr;
    if (w % f.width != 0) throw Error(ErrorKind::InvariantViolation, "cusp width upstairs not a multiple");
    if (w / f.width < ratio) lc.orbit_shortening.push_back(j);
    if (w / f.width > ratio) lc.width_excess.push_back(j);
  }
  for (const auto& f : lc.cusps) {
    if (f.p_divisible) {
      ++lc.t_prime;
    } else {
      lc.u.push_back(f.divisible_above);
    }
  }
  lc.elliptic_ramification = elliptic_detect(a_down, a_up, o_up, image);
  lc.shortening_down = shortening_detect(down, a_down, o_down);
  lc.shortening_up = shortening_detect(up, a_up, o_up);
  return lc;
}

Fraction genus_lower_bound(std::size_t t_prime, std::size_t degree, const std::vector<std::size_t>& u, unsigned p) {
  long long P = p;
  long long su = std::accumulate(u.begin(), u.end(), 0LL);
  long long num = ((P - 1) * static_cast<long long>(t_prime) - 2 * P) * static_cast<long long>(degree) + 2 * P +
                  P * (P - 1) * su;
  long long den = 2 * P;
  long long g = std::gcd(num, den);
  return {num / g, den / g};
}

GoupFlags goup_flags(const LevelComparison& lc, std::size_t genus_below) {
  GoupFlags f;
  f.genus_below = genus_below;
  f.elliptic = lc.elliptic_ramification;
  f.shortening = !lc.orbit_shortening.empty() || !lc.shortening_down.empty() || !lc.shortening_up.empty();
  f.width_excess = !lc.width_excess.empty();
  return f;
}

GoupVerdict check_goup(const Fraction& bound, std::size_t actual, const GoupFlags& flags) {
  if (flags.genus_below != 0) throw Error(ErrorKind::HypothesisUnmet, "lower component has positive genus");
  if (flags.shortening) throw Error(ErrorKind::HypothesisUnmet, "orbit shortening below");
  long long a = static_cast<long long>(actual) * bound.den;
  if (!flags.elliptic && !flags.width_excess) return a == bound.num ? GoupVerdict::Equal : GoupVerdict::Violated;
  if (a == bound.num) return GoupVerdict::Equal;
  return a > bound.num ? GoupVerdict::Below : GoupVerdict::Violated;
}

}  // namespace mt
