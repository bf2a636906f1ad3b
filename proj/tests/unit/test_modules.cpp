#include "doctest.h"

#include "mt/error.hpp"
#include "mt/groups/finite_group.hpp"
#include "mt/modules/gmodule.hpp"

using namespace mt;

namespace {

GroupPtr a5() {
  return group_from_generators({Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)}, 1000);
}

Matrix scalar(unsigned x, unsigned p) {
  Matrix m(1, 1, p);
  m(0, 0) = static_cast<std::uint8_t>(x);
  return m;
}

// D5 inside A5 with its sign character over F_5.
struct D5Setup {
  GroupPtr g = a5();
  GroupPtr d5;
  std::vector<Elem> embed;
  D5Setup() {
    std::vector<Elem> gens = {*g->find(Perm::parse_cycles("(1 2 3 4 5)", 5)), *g->find(Perm::parse_cycles("(2 5)(3 4)", 5))};
    d5 = make_group(g->subgroup(gens, &embed));
  }
};

}  // namespace

TEST_CASE("module construction checks relations") {
  auto g = a5();
  CHECK_NOTHROW(GModule::trivial(g, 2, 3));
  std::vector<Matrix> bad = {scalar(1, 5), scalar(2, 5)};
  CHECK_THROWS_AS(GModule(g, 5, bad), Error);
}

TEST_CASE("induced module from D5 at p = 5") {
  D5Setup s;
  CHECK(s.d5->order() == 10);
  GModule sign(s.d5, 5, {scalar(1, 5), scalar(4, 5)});
  GModule ind = induce(sign, s.g, s.embed);
  CHECK(ind.dim() == 6);
  CHECK(is_indecomposable(ind));
  auto l = loewy_layers(ind);
  REQUIRE(l.layers.size() == 2);
  CHECK(l.layers[0].size() == 1);
  CHECK(l.layers[0][0].dim == 3);
  CHECK(l.layers[1].size() == 1);
  CHECK(l.layers[0] == l.layers[1]);
}

TEST_CASE("permutation module on A4 cosets") {
  auto g = a5();
  std::vector<Elem> gens = {*g->find(Perm::parse_cycles("(1 2 3)", 5)), *g->find(Perm::parse_cycles("(2 3 4)", 5))};
  std::vector<Elem> embed;
  auto a4 = make_group(g->subgroup(gens, &embed));
  CHECK(a4->order() == 12);
  GModule perm = induce(GModule::trivial(a4, 2), g, embed);
  CHECK(perm.dim() == 5);
  // Fixed vector: the all-ones vector.
  CHECK(invariant_vectors(perm, g->generators()).dim() == 1);
  // Over F_2 with 5 odd, the permutation module splits off the trivial module.
  auto parts = decompose(perm);
  CHECK(parts.size() == 2);
  CHECK(parts[0].dim() == 1);
  CHECK(parts[1].dim() == 4);
  CHECK_FALSE(is_indecomposable(perm));
  auto l = loewy_layers(perm);
  CHECK(l.layers.size() == 1);
}

TEST_CASE("trivial module layers and Fitting on nilpotents") {
  auto g = a5();
  auto t = GModule::trivial(g, 2);
  auto l = loewy_layers(t);
  REQUIRE(l.layers.size() == 1);
  CHECK(l.layers[0][0].trivial);
  CHECK(l.display() == "1");
  auto t3 = GModule::trivial(g, 3, 3);
  Matrix nil(3, 3, 3);
  nil(0, 1) = 1;
  nil(1, 2) = 1;
  auto [ker, im] = fitting_decompose(t3, nil);
  CHECK(ker.dim() == 3);
  CHECK(im.dim() == 0);
  CHECK_FALSE(is_indecomposable(t3));
}

TEST_CASE("pairing, Frobenius and Hopf utilities") {
  CHECK(involution_pairing({1, 2, 3}, {1, 1, 1}, {0, 1, 2}, 5) == 1);
  CHECK(involution_pairing({1, 0, 0}, {0, 1, 0}, {1, 0, 2}, 5) == 1);
  CHECK_THROWS_AS(involution_pairing({1, 0, 0}, {0, 1, 0}, {1, 2, 0}, 5), Error);
  auto a4 = group_from_generators({Perm::parse_cycles("(1 2 3)", 4), Perm::parse_cycles("(2 3 4)", 4)}, 100);
  CHECK(frobenius_check(*a4, 2));
  D5Setup s;
  GModule sign(s.d5, 5, {scalar(1, 5), scalar(4, 5)});
  auto t = hopf_tensor(GModule::trivial(s.d5, 5), sign);
  CHECK(t.generator_action() == sign.generator_action());
  auto sq = hopf_tensor(sign, sign);
  CHECK(sq.is_trivial());
}

TEST_CASE("module text round trip") {
  D5Setup s;
  GModule sign(s.d5, 5, {scalar(1, 5), scalar(4, 5)});
  auto back = GModule::from_text(s.d5, sign.to_text());
  CHECK(back.generator_action() == sign.generator_action());
  CHECK_THROWS_AS(GModule::from_text(s.d5, "p: 5\ndim: 1\n1\n"), Error);
}
