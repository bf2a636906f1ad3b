#include "doctest.h"

#include "mt/error.hpp"
#include "mt/frattini/towers.hpp"

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

TEST_CASE("dihedral tower levels") {
  auto l0 = dihedral_level(5, 0, 1000);
  CHECK(l0.total_group().order() == 10);
  CHECK(l0.kernel_dim() == 0);
  auto l1 = dihedral_level(5, 1, 1000);
  CHECK(l1.total_group().order() == 50);
  CHECK(l1.kernel_dim() == 1);
  CHECK(verify_order_lifting(l1).ok());
  CHECK(verify_frattini(l1));
  // The rotation of order 5 lifts to order 25.
  CHECK(l1.total_group().element_order(l1.section[l1.base->generator(0)]) == 25);
  CHECK_THROWS_AS(dihedral_level(5, 4, 1000), Error);
}

TEST_CASE("split level for K4 x| C3 at p = 2") {
  auto s = split_level(k4_over_c3(), 100000);
  CHECK(s.p1_order == 128);
  CHECK(s.level.total_group().order() == 384);
  CHECK(s.level.base->order() == 12);
  CHECK(s.level.kernel_dim() == 5);
  CHECK(verify_frattini(s.level));
  CHECK(verify_order_lifting(s.level).ok());
  CHECK(is_indecomposable(s.level.kernel_module));
  auto l = loewy_layers(s.level.kernel_module);
  REQUIRE(l.layers.size() == 2);
  CHECK(l.layer_dims == std::vector<std::size_t>{3, 2});
}

TEST_CASE("split level with d = 1 reproduces the dihedral tower") {
  auto c2 = group_from_generators({Perm::parse_cycles("(1 2)", 2)}, 10);
  Matrix m(1, 1, 5);
  m(0, 0) = 4;
  auto s = split_level(GModule(c2, 5, {m}), 10000);
  CHECK(s.level.total_group().order() == 50);
  CHECK(s.level.kernel_dim() == 1);
  auto d = dihedral_level(5, 1, 1000);
  std::vector<unsigned> a, b;
  for (Elem x = 0; x < 50; ++x) {
    a.push_back(s.level.total_group().element_order(x));
    b.push_back(d.total_group().element_order(x));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("first level of A5 at p = 2") {
  auto a5 = group_from_generators({Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)}, 1000);
  auto pg = find_presentation(a5, Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n"));
  auto f = first_level(pg, 2, 200000);
  CHECK(f.normalizer.order() == 12);
  REQUIRE(f.induced.has_value());
  CHECK(f.induced->dim() == 25);
  CHECK(f.m0.dim() == 5);
  CHECK(f.h2_dimension == 1);
  REQUIRE(f.level.has_value());
  CHECK(f.level->total_group().order() == 1920);
  CHECK(verify_frattini(*f.level));
  CHECK(verify_order_lifting(*f.level).ok());
  CHECK_FALSE(restriction_splits(*f.level, f.normalizer.generators));
  CHECK(is_center_free(f.level->total_group()));
}

TEST_CASE("first level of A5 at p = 5 stays a module") {
  auto a5 = group_from_generators({Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)}, 1000);
  auto pg = find_presentation(a5, Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n"));
  auto f = first_level(pg, 5, 200000);
  CHECK(f.normalizer.order() == 10);
  CHECK(f.m0.dim() == 6);
  CHECK(f.summands.size() == 1);
  CHECK(f.h2_dimension == 1);
  CHECK_FALSE(f.level.has_value());
}
