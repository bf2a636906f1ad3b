#include "doctest.h"

#include "mt/error.hpp"
#include "mt/frattini/towers.hpp"
#include "mt/hurwitz/hurwitz.hpp"

using namespace mt;

namespace {

std::size_t class_of_order(const FiniteGroup& g, unsigned order) {
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    if (g.classes()[c].element_order == order) return c;
  throw Error(ErrorKind::InvalidArgument, "no class of that order");
}

struct Tower {
  FrattiniLevel level;
  Nielsen down, up;
  BraidAction a_down, a_up;
};

Tower a5_tower() {
  auto a5 = group_from_generators({Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)}, 1000);
  auto pg = find_presentation(a5, Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n"));
  auto f = first_level(pg, 2, 200000);
  const auto& level = *f.level;
  std::size_t c = class_of_order(*level.base, 3);
  NielsenSpec s0{level.base, {c, c, c, c}, 2};
  Nielsen down(s0);
  Nielsen up(lifted_spec(level, s0));
  auto a_down = braid_action(down, down.enumerate());
  std::vector<Tuple> seeds;
  for (const auto& t : a_down.classes) {
    auto l = lift_tuples(level, t, up);
    seeds.insert(seeds.end(), l.begin(), l.end());
  }
  auto a_up = braid_action(up, seeds);
  return {level, down, up, a_down, a_up};
}

}  // namespace

TEST_CASE("genus arithmetic") {
  CHECK(genus_from(1, {0, 0, 0}) == 0);
  CHECK_THROWS_AS(genus_from(2, {1, 0, 0}), Error);
  CHECK(genus_lower_bound(4, 2, {}, 2) == Fraction{1, 1});
  CHECK(genus_lower_bound(0, 3, {0, 0}, 5).value() <= 0);
  CHECK(check_goup({1, 1}, 1, {}) == GoupVerdict::Equal);
  CHECK(check_goup({1, 1}, 2, {}) == GoupVerdict::Violated);
  CHECK(check_goup({1, 1}, 2, {0, true, false, false}) == GoupVerdict::Below);
  CHECK_THROWS_AS(check_goup({1, 1}, 2, {1, false, false, false}), Error);
}

TEST_CASE("A5 components at levels 0 and 1") {
  auto t = a5_tower();
  auto o0 = mbar4_orbits(t.a_down);
  REQUIRE(o0.size() == 1);
  auto r0 = component_report(t.down, t.a_down, o0[0]);
  CHECK(r0.genus == 0);
  CHECK(r0.t_prime == 0);
  CHECK_FALSE(r0.hm_cusps.empty());
  CHECK(r0.to_json()["cusp_widths"] == nlohmann::json({5, 2, 3, 3, 5}));
  CHECK(fixed_point_indices(t.a_down, o0[0]).sum() == r0.ind.sum());
  auto inc = sh_incidence(t.a_down, all_cusps(t.a_down));
  CHECK(inc.symmetric());
  CHECK(inc.blocks.size() == 1);

  auto o1 = mbar4_orbits(t.a_up);
  REQUIRE(o1.size() == 2);
  std::vector<std::size_t> genera;
  for (const auto& o : o1) {
    auto r = component_report(t.up, t.a_up, o);
    genera.push_back(r.genus);
    auto fp = fixed_point_indices(t.a_up, o);
    CHECK(fp.sum() == r.ind.sum());
    auto lc = level_compare(t.down, t.a_down, o0[0], t.up, t.a_up, o, t.level);
    CHECK(lc.mpr_violations.empty());
    CHECK(lc.degree == 16);
    CHECK(lc.t_prime == 0);
    CHECK_FALSE(lc.elliptic_ramification);
    auto bound = genus_lower_bound(lc.t_prime, lc.degree, lc.u, 2);
    CHECK(bound.value() <= r.genus);
    CHECK_THROWS_AS(check_goup(bound, r.genus, goup_flags(lc, 0)), Error);
  }
  std::sort(genera.begin(), genera.end());
  CHECK(genera == std::vector<std::size_t>{9, 12});
  auto inc1 = sh_incidence(t.a_up, all_cusps(t.a_up));
  CHECK(inc1.symmetric());
  CHECK(inc1.blocks.size() == 2);
}

TEST_CASE("dihedral tower genus rise") {
  for (unsigned p : {3u, 5u, 7u}) {
    auto level = dihedral_level(p, 1, 100000);
    std::size_t c = class_of_order(*level.base, 2);
    NielsenSpec s0{level.base, {c, c, c, c}, p};
    Nielsen down(s0);
    Nielsen up(lifted_spec(level, s0));
    auto a_down = braid_action(down, down.enumerate());
    auto a_up = braid_action(up, up.enumerate());
    auto od = mbar4_orbits(a_down);
    std::size_t compared = 0;
    for (const auto& o : mbar4_orbits(a_up)) {
      auto r = component_report(up, a_up, o);
      for (const auto& d : od) {
        LevelComparison lc;
        try {
          lc = level_compare(down, a_down, d, up, a_up, o, level);
        } catch (const Error&) {
          continue;
        }
        auto bound = genus_lower_bound(lc.t_prime, lc.degree, lc.u, p);
        auto verdict = check_goup(bound, r.genus, goup_flags(lc, component_genus(a_down, d)));
        CHECK(verdict == (p == 3 ? GoupVerdict::Below : GoupVerdict::Equal));
        CHECK(lc.elliptic_ramification == (p == 3));
        ++compared;
      }
    }
    CHECK(compared == 1);
  }
}
