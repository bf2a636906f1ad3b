#include "doctest.h"

#include <set>

#include "mt/error.hpp"
#include "mt/frattini/towers.hpp"
#include "mt/schur/schur.hpp"

using namespace mt;

namespace {

GModule k4_over_c3() {
  auto c3 = group_from_generators({Perm::parse_cycles("(1 2 3)", 3)}, 10);
  Matrix a(2, 2, 2);
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  return GModule(c3, 2, {a});
}

}  // namespace

TEST_CASE("pair types allowed by V_D membership") {
  CHECK(allowed_pair_type(P3Type::Klein4, true, true, 2));
  CHECK_FALSE(allowed_pair_type(P3Type::Q8, true, true, 2));
  CHECK(allowed_pair_type(P3Type::Q8, false, false, 2));
  CHECK(allowed_pair_type(P3Type::D4, true, false, 2));
  CHECK_FALSE(allowed_pair_type(P3Type::Klein4, false, true, 2));
  CHECK(allowed_pair_type(P3Type::Hp_Wp, true, true, 3));
  CHECK_FALSE(allowed_pair_type(P3Type::Hp_Wp, false, false, 3));
}

TEST_CASE("Schur quotients of A5 and A4 at p = 2") {
  auto a5 = group_from_generators({Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)}, 1000);
  auto pg = find_presentation(a5, Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n"));
  auto q = enumerate_schur_quotients(pg, 2, 100000);
  REQUIRE(q.size() == 1);
  CHECK(q[0].group().order() == 120);
  // The spin cover has a unique involution.
  std::size_t inv = 0;
  for (Elem x = 0; x < 120; ++x) inv += q[0].group().element_order(x) == 2;
  CHECK(inv == 1);

  auto s = split_level(k4_over_c3(), 100000);
  auto qa4 = enumerate_schur_quotients(s.base, 2, 100000);
  REQUIRE(qa4.size() == 1);
  CHECK(qa4[0].group().order() == 24);

  auto c3 = group_from_generators({Perm::parse_cycles("(1 2 3)", 3)}, 10);
  auto pc3 = find_presentation(c3, Presentation::parse("gens: a\na^3\n"));
  CHECK_THROWS_AS(enumerate_schur_quotients(pc3, 3, 1000), Error);
}

TEST_CASE("Schur quotients of the first A4 level") {
  auto s = split_level(k4_over_c3(), 100000);
  const auto& level = s.level;
  auto prev = enumerate_schur_quotients(s.base, 2, 100000);
  auto q = enumerate_schur_quotients(level.total, 2, 2'000'000);
  REQUIRE(q.size() == 3);
  std::set<std::string> tops;
  std::size_t antecedents = 0;
  for (const auto& e : q) {
    CHECK(e.group().order() == 768);
    auto vd = vd_set(e, level);
    auto display = slice_display(e, level, vd);
    tops.insert(display.substr(display.find("-> ") + 3));
    auto ma = check_modassume(level, vd);
    auto ante = antecedent_test(prev[0], e, level);
    CHECK((ma.a && ma.b) == ante.antecedent);
    CHECK(abelian_test(e, level, vd).abelian == display.ends_with("K4+Z4"));
    if (ante.antecedent) {
      ++antecedents;
      CHECK(ma.a);
      CHECK(ma.b);
      CHECK(ma.c);
      CHECK(display.ends_with("K4+Z4"));
    }
    std::size_t n = 0;
    auto bad = verify_schur_properties(e, level, vd, &n);
    CHECK(bad.empty());
    CHECK(n > 0);
    auto orbits = outside_orbits(level, vd);
    std::size_t outside = 0;
    for (const auto& o : orbits) outside += o.size();
    CHECK(outside + vd.members.size() == vd.in.size());
  }
  CHECK(antecedents == 1);
  CHECK(tops == std::set<std::string>{"K4+Z4", "Q8+Z2", "Q8.Z4"});
}

TEST_CASE("spin cover is antecedent at the first A5 level") {
  auto a5 = group_from_generators({Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)}, 1000);
  auto pg = find_presentation(a5, Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n"));
  auto f = first_level(pg, 2, 200000);
  REQUIRE(f.level.has_value());
  const auto& level = *f.level;
  auto base_pg = find_presentation(level.base, Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n"));
  auto spin = enumerate_schur_quotients(base_pg, 2, 100000);
  REQUIRE(spin.size() == 1);
  auto q = enumerate_schur_quotients(eliminate_generators(level.total, 2), 2, 2'000'000);
  REQUIRE(q.size() == 1);
  std::size_t antecedents = 0;
  for (const auto& e : q) {
    auto vd = vd_set(e, level);
    auto ma = check_modassume(level, vd);
    auto ante = antecedent_test(spin[0], e, level);
    antecedents += ante.antecedent;
    CHECK((ma.a && ma.b) == ante.antecedent);
    CHECK(verify_schur_properties(e, level, vd).empty());
    CHECK(vd.members.size() == 16);
    CHECK(vd.is_submodule);
    CHECK(outside_orbits(level, vd).size() == 2);
    CHECK(abelian_test(e, level, vd).abelian);
    CHECK(slice_display(e, level, vd).ends_with("-> Z4"));
  }
  CHECK(antecedents == 1);
}
