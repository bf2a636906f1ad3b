#include "doctest.h"

#include "mt/error.hpp"
#include "mt/linalg/fp.hpp"

using namespace mt;

TEST_CASE("matrix inverse and rank") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    Matrix a(3, 3, p);
    a(0, 0) = 1; a(0, 1) = 1; a(1, 1) = 1; a(1, 2) = 1; a(2, 0) = 1; a(2, 2) = static_cast<std::uint8_t>(p == 2 ? 0 : 2);
    if (a.rank() == 3) CHECK((a * a.inverse()).is_identity());
    CHECK(Matrix::identity(4, p).rank() == 4);
  }
  Matrix s(2, 2, 2);
  s(0, 0) = 1; s(0, 1) = 1; s(1, 0) = 1; s(1, 1) = 1;
  CHECK(s.rank() == 1);
  CHECK_THROWS_AS(s.inverse(), Error);
}

TEST_CASE("kernels and subspace operations") {
  Matrix a(2, 4, 5);
  a(0, 0) = 1; a(0, 1) = 2; a(1, 2) = 3; a(1, 3) = 1;
  auto k = right_kernel(a);
  CHECK(k.dim() == 2);
  for (const auto& v : k.basis()) CHECK(is_zero(vec_times(v, a.transpose())));
  auto w = Subspace::whole(5, 4);
  CHECK(w.dim() == 4);
  CHECK(k.intersect(annihilator(k)).dim() <= 2);
  auto u = Subspace::span(2, 3, {{1, 1, 0}, {0, 1, 1}});
  auto v = Subspace::span(2, 3, {{1, 0, 1}, {0, 0, 1}});
  CHECK(u.intersect(v).dim() == 1);
  CHECK(u.intersect(v).contains(Vec{1, 0, 1}));
  CHECK(u.sum(v).dim() == 3);
  CHECK(u.elements().size() == 4);
  CHECK(u.complement_in(Subspace::whole(2, 3)).size() == 1);
  CHECK(u.coordinates(Vec{1, 0, 1}).size() == 2);
}

TEST_CASE("packed and byte echelon agree") {
  Echelon e2(2, 130);
  Echelon e3(3, 130);
  unsigned seed = 7;
  auto next = [&] { seed = seed * 1103515245u + 12345u; return (seed >> 16) & 0x7fff; };
  for (int r = 0; r < 100; ++r) {
    Vec v(130);
    for (auto& x : v) x = static_cast<std::uint8_t>(next() % 2);
    e2.insert(v);
    e3.insert(v);
  }
  CHECK(e2.rank() <= 100);
  for (const auto& r : e2.reduced_basis()) CHECK(e2.contains(r));
}
