#include "doctest.h"

#include "mt/error.hpp"
#include "mt/frattini/towers.hpp"
#include "mt/nielsen/nielsen.hpp"

using namespace mt;

namespace {

GroupPtr a5() {
  return group_from_generators({Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)}, 1000);
}

std::size_t class_of_order(const FiniteGroup& g, unsigned order) {
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    if (g.classes()[c].element_order == order) return c;
  throw Error(ErrorKind::InvalidArgument, "no class of that order");
}

Nielsen a5_threes() {
  auto g = a5();
  std::size_t c = class_of_order(*g, 3);
  return Nielsen({g, {c, c, c, c}, 2});
}

void check_action(const Nielsen& ni, const BraidAction& a) {
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    CHECK(ni.is_valid(a.classes[i]));
    CHECK(a.gamma1[a.gamma1[i]] == i);
    CHECK(a.gamma0[a.gamma0[a.gamma0[i]]] == i);
    CHECK(a.index(ni.gamma0(a.classes[i])) == a.gamma0[i]);
  }
}

}  // namespace

TEST_CASE("braid moves on A5 tuples") {
  auto ni = a5_threes();
  const auto& G = ni.group();
  auto p = [&](const char* s) { return *G.find(Perm::parse_cycles(s, 5)); };
  Tuple t{p("(1 2 3)"), p("(1 3 2)"), p("(1 4 5)"), p("(1 5 4)")};
  CHECK(ni.is_valid(t));
  CHECK(ni.is_hm(t));
  CHECK(ni.format(t) == "[(1 2 3), (1 3 2), (1 4 5), (1 5 4)]");
  CHECK(ni.parse(ni.format(t)) == t);
  CHECK(ni.sh(t) == Tuple{t[1], t[2], t[3], t[0]});
  Tuple u = ni.twist(t, 2);
  CHECK(u[2] == t[1]);
  CHECK(G.mul(u[1], u[2]) == G.mul(t[1], t[2]));
  CHECK(ni.twist_inverse(u, 2) == t);
  CHECK(ni.middle_product(t) == 5);
  CHECK_FALSE(ni.is_p_divisible(t));
  Tuple c = ni.canonical(t);
  CHECK(ni.canonical(c) == c);
  CHECK(ni.is_hm_class(c));
  for (const auto& q : ni.q2_images(t)) CHECK(ni.canonical(q) == c);
  // Q'' composed with itself is inner.
  CHECK(ni.inner_canonical(ni.q1q3inv(ni.q1q3inv(t))) == ni.inner_canonical(t));
}

TEST_CASE("A5 with four 3-cycles at level 0") {
  auto ni = a5_threes();
  auto classes = ni.enumerate();
  REQUIRE_FALSE(classes.empty());
  auto a = braid_action(ni, classes);
  CHECK(a.size() == classes.size());
  check_action(ni, a);
  auto orbits = mbar4_orbits(a);
  CHECK(orbits.size() == 1);
  std::size_t total = 0;
  for (const auto& c : gamma_inf_orbits(a, orbits[0])) {
    total += c.size();
    unsigned m = ni.middle_product(a.classes[c[0]]);
    for (auto i : c) CHECK(ni.middle_product(a.classes[i]) == m);
    CHECK(m % 2 != 0);
  }
  CHECK(total == a.size());
  auto threaded = braid_action(ni, {classes[0]}, 4);
  CHECK(threaded.classes == a.classes);
  CHECK(threaded.gamma_inf == a.gamma_inf);
}

TEST_CASE("dihedral Nielsen classes") {
  auto g = dihedral_group(5);
  std::size_t c = class_of_order(*g, 2);
  Nielsen ni({g, {c, c, c, c}, 5});
  auto classes = ni.enumerate();
  auto a = braid_action(ni, classes);
  check_action(ni, a);
  auto orbits = mbar4_orbits(a);
  REQUIRE(orbits.size() == 1);
  std::vector<std::size_t> widths;
  for (const auto& cyc : gamma_inf_orbits(a, orbits[0])) widths.push_back(cyc.size());
  CHECK(std::count(widths.begin(), widths.end(), 5) > 0);
  CHECK(std::count(widths.begin(), widths.end(), 1) > 0);
  CHECK(a.size() == 12);
}

TEST_CASE("classes must be p-prime") {
  auto g = a5();
  CHECK_THROWS_AS(Nielsen({g, {class_of_order(*g, 2)}, 2}), Error);
}

TEST_CASE("cyclic group of order 2 degenerate case") {
  auto g = group_from_generators({Perm::parse_cycles("(1 2)", 2)}, 4);
  std::size_t c = class_of_order(*g, 2);
  Nielsen ni({g, {c, c, c, c}, 3});
  CHECK(ni.enumerate().size() == 1);
}

TEST_CASE("lifting A5 tuples to the first level") {
  auto g = a5();
  auto pg = find_presentation(g, Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n"));
  auto f = first_level(pg, 2, 200000);
  REQUIRE(f.level.has_value());
  const auto& level = *f.level;
  auto ni0 = a5_threes();
  auto base_classes = ni0.enumerate();
  // first_level builds its own copy of A5; map tuples across by permutation.
  auto to_base = [&](const Tuple& t) {
    Tuple out;
    for (Elem e : t) out.push_back(*level.base->find(ni0.group().permutation(e)));
    return out;
  };
  NielsenSpec s0{level.base, {}, 2};
  std::size_t c = class_of_order(*level.base, 3);
  s0.classes = {c, c, c, c};
  Nielsen ni1(lifted_spec(level, s0));
  std::vector<Tuple> seeds;
  std::size_t hm_lifted = 0;
  for (const auto& t : base_classes) {
    auto lifts = lift_tuples(level, to_base(t), ni1);
    if (ni0.is_hm_class(t)) {
      bool any = false;
      for (const auto& l : lifts) any = any || ni1.is_hm_class(l);
      hm_lifted += any;
    }
    seeds.insert(seeds.end(), lifts.begin(), lifts.end());
  }
  CHECK(hm_lifted > 0);
  auto a = braid_action(ni1, seeds);
  check_action(ni1, a);
  CHECK(mbar4_orbits(a).size() == 2);
}
