#include "doctest.h"

#include "mt/error.hpp"
#include "mt/frattini/cohomology.hpp"

using namespace mt;

namespace {

GroupPtr a5() {
  return group_from_generators({Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)}, 1000);
}
GroupPtr a4() {
  return group_from_generators({Perm::parse_cycles("(1 2 3)", 4), Perm::parse_cycles("(2 3 4)", 4)}, 100);
}

}  // namespace

TEST_CASE("Fox derivative identities on trivial modules") {
  auto c2 = group_from_generators({Perm::parse_cycles("(1 2)", 2)}, 10);
  auto pg = find_presentation(c2, Presentation::parse("gens: x\nx^2\n"));
  auto f = fox_matrix(pg, GModule::trivial(c2, 2));
  CHECK(f.is_zero());
  auto f3 = fox_matrix(pg, GModule::trivial(c2, 3));
  CHECK(f3(0, 0) == 2);
  auto k4 = group_from_generators({Perm::parse_cycles("(1 2)", 4), Perm::parse_cycles("(3 4)", 4)}, 10);
  auto pk = find_presentation(k4, Presentation::parse("gens: x y\n[x,y]\nx^2\ny^2\n"));
  auto fk = fox_matrix(pk, GModule::trivial(k4, 2));
  CHECK(fk(0, 0) == 0);
  CHECK(fk(1, 0) == 0);
}

TEST_CASE("H2 with trivial coefficients") {
  auto g4 = a4();
  auto p4 = find_presentation(g4, Presentation::parse("gens: a b\na^2\nb^3\n(ab)^3\n"));
  auto h4 = h2_classes(p4, GModule::trivial(g4, 2), 100000);
  CHECK(h4.dimension == 1);
  CHECK(h4.classes.size() == 2);
  auto g5 = a5();
  auto p5 = find_presentation(g5, Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n"));
  auto h5 = h2_classes(p5, GModule::trivial(g5, 2), 100000);
  CHECK(h5.dimension == 1);
  auto spin = build_extension(p5, GModule::trivial(g5, 2), h5.classes[1], 100000);
  CHECK(spin.total_group().order() == 120);
  // SL(2,5) has a unique involution.
  std::size_t involutions = 0;
  for (Elem x = 0; x < 120; ++x) involutions += spin.total_group().element_order(x) == 2;
  CHECK(involutions == 1);
  CHECK(verify_frattini(spin));
  auto split = build_extension(p5, GModule::trivial(g5, 2), h5.classes[0], 100000);
  CHECK_FALSE(verify_frattini(split));
  CHECK(h2_classes(p5, GModule::trivial(g5, 3), 100000).dimension == 0);
}

TEST_CASE("coboundary tails give split extensions") {
  auto g5 = a5();
  auto p5 = find_presentation(g5, Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n"));
  // a^2 = m over F_3 is undone by relifting a -> a m.
  auto ext = build_extension(p5, GModule::trivial(g5, 3), {1, 0, 0}, 100000);
  CHECK(ext.total_group().order() == 180);
  CHECK(restriction_splits(ext, g5->generators()));
  CHECK_THROWS_AS(build_extension(p5, GModule::trivial(g5, 3), {1, 0}, 100000), Error);
}
