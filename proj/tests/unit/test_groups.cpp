#include "doctest.h"

#include "mt/error.hpp"
#include "mt/groups/finite_group.hpp"
#include "mt/groups/presentation.hpp"
#include "mt/groups/todd_coxeter.hpp"

#include <algorithm>

using namespace mt;

namespace {

GroupPtr a5() {
  return group_from_generators({Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)}, 1000);
}

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& c : g.classes()) out.push_back(c.members.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("permutation products act on the right") {
  Perm a = Perm::parse_cycles("(1 2)", 3);
  Perm b = Perm::parse_cycles("(2 3)", 3);
  // 1 -> 2 under a, then 2 -> 3 under b.
  CHECK((a * b).images()[0] == 2);
  CHECK((a * b).to_cycles() == "(1 3 2)");
  CHECK(Perm::identity(4).to_cycles() == "()");
  CHECK_THROWS_AS(Perm::parse_cycles("(1 2)(2 3)", 3), Error);
}

TEST_CASE("closures and classes") {
  auto g = a5();
  CHECK(g->order() == 60);
  CHECK(class_sizes(*g) == std::vector<std::size_t>{1, 12, 12, 15, 20});
  auto d5 = group_from_generators({Perm::parse_cycles("(1 2 3 4 5)", 5), Perm::parse_cycles("(2 5)(3 4)", 5)}, 100);
  CHECK(d5->order() == 10);
  CHECK(class_sizes(*d5) == std::vector<std::size_t>{1, 2, 2, 5});
  auto triv = group_from_generators({Perm::identity(3)}, 10);
  CHECK(triv->order() == 1);
  CHECK_THROWS_AS(group_from_generators({Perm::parse_cycles("(1 2 3 4 5)", 5), Perm::parse_cycles("(1 2)", 5)}, 100),
                  Error);
}

TEST_CASE("p-perfect and center-free") {
  auto g = a5();
  CHECK(is_p_perfect(*g, 2));
  CHECK(is_p_perfect(*g, 3));
  CHECK(is_center_free(*g));
  auto a4 = group_from_generators({Perm::parse_cycles("(1 2 3)", 4), Perm::parse_cycles("(2 3 4)", 4)}, 100);
  CHECK(a4->order() == 12);
  CHECK(is_p_perfect(*a4, 2));
  CHECK_FALSE(is_p_perfect(*a4, 3));
}

TEST_CASE("presentation parsing round trip") {
  auto p = Presentation::parse("gens: a b\na^2\nb^3\n(a*b)^5\n");
  CHECK(p.generator_count() == 2);
  CHECK(p.relators.size() == 3);
  CHECK(p.format_word(p.relators[2]) == "a*b*a*b*a*b*a*b*a*b");
  auto q = Presentation::parse(p.to_text());
  CHECK(q.relators == p.relators);
  CHECK(p.parse_word("[a,b]") == Word{-1, -2, 1, 2});
  CHECK_THROWS_AS(Presentation::parse("gens: a\nc^2"), Error);
}

TEST_CASE("Todd-Coxeter enumerations") {
  auto p = Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n");
  CHECK(todd_coxeter(p, {}, 1000).index() == 60);
  CHECK(todd_coxeter(p, {{2}}, 1000).index() == 20);
  CHECK_THROWS_AS(todd_coxeter(p, {}, 10), Error);
  for (int n = 3; n <= 9; ++n) {
    auto d = Presentation::parse("gens: r s\nr^" + std::to_string(n) + "\ns^2\n(rs)^2\n");
    CHECK(todd_coxeter(d, {}, 1000).index() == static_cast<std::size_t>(2 * n));
  }
  auto g = group_from_presentation(p, 1000);
  CHECK(g.order() == 60);
  CHECK(class_sizes(g) == std::vector<std::size_t>{1, 12, 12, 15, 20});
}

TEST_CASE("Schreier generators") {
  auto p = Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n");
  auto t = todd_coxeter(p, {{2}}, 1000);
  auto s = schreier_generators(t);
  CHECK(s.generators.size() == 1 + 20 * (2 - 1));
  // Frattini subgroup of the free group of rank 2 at p = 2 has index 4.
  auto e = Presentation::parse("gens: x y\nx^2\ny^2\n[x,y]\n");
  auto te = todd_coxeter(e, {}, 100);
  CHECK(te.index() == 4);
  CHECK(schreier_generators(te).generators.size() == 5);
}

TEST_CASE("Cayley presentation and generator elimination") {
  auto g = a5();
  auto cp = cayley_presentation(*g);
  CHECK(group_from_presentation(cp, 100).order() == 60);
  PresentedGroup pg{Presentation::parse("gens: a b c\na^3\nb^3\nc^2\n"), g, {}};
  pg.presentation.relators.clear();
  pg.generator_images = {g->generator(0), g->generator(1), g->mul(g->generator(0), g->generator(1))};
  for (auto r : cp.relators) pg.presentation.add_relator(r);
  pg.presentation.add_relator(Word{3, -2, -1});
  pg.validate();
  auto small = eliminate_generators(pg, 2);
  small.validate();
  CHECK(small.presentation.generator_count() == 2);
  CHECK(group_from_presentation(small.presentation, 100).order() == 60);
}

TEST_CASE("homomorphisms from generator images") {
  auto g = a5();
  std::vector<Elem> same = {g->generator(0), g->generator(1)};
  auto h = homomorphism_from_generators(*g, *g, same);
  for (Elem x = 0; x < g->order(); ++x) CHECK(h[x] == x);
  std::vector<Elem> bad = {g->generator(0), g->generator(0)};
  CHECK_THROWS_AS(homomorphism_from_generators(*g, *g, bad), Error);
}
