#include "mt/groups/subgroups.hpp"

#include <algorithm>

#include "mt/error.hpp"

namespace mt {

bool SubgroupHandle::contains(Elem e) const { return std::binary_search(elements.begin(), elements.end(), e); }

SubgroupHandle make_subgroup(const FiniteGroup& g, std::vector<Elem> gens) {
  SubgroupHandle s;
  s.elements = g.closure(gens);
  s.generators = std::move(gens);
  return s;
}

unsigned p_part(std::size_t n, unsigned p) {
  unsigned r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

namespace {

bool is_power_of(std::size_t n, unsigned p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

SubgroupHandle sylow_subgroup(const FiniteGroup& g, unsigned p) {
  unsigned target = p_part(g.order(), p);
  SubgroupHandle s = make_subgroup(g, {});
  for (Elem x = 1; x < g.order() && s.order() < target; ++x) {
    if (!is_power_of(g.element_order(x), p) || s.contains(x)) continue;
    auto gens = s.generators;
    gens.push_back(x);
    auto t = make_subgroup(g, gens);
    if (is_power_of(t.order(), p)) s = std::move(t);
  }
  return s;
}

SubgroupHandle normalizer(const FiniteGroup& g, const SubgroupHandle& s) {
  std::vector<Elem> norm;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y : s.generators) {
      if (!s.contains(g.conj(y, x))) {
        ok = false;
        break;
      }
    }
    if (ok) norm.push_back(x);
  }
  // Generate greedily so the handle carries a short generating list.
  SubgroupHandle n = make_subgroup(g, {});
  for (Elem x : norm) {
    if (n.contains(x)) continue;
    auto gens = n.generators;
    gens.push_back(x);
    n = make_subgroup(g, gens);
  }
  return n;
}

SubgroupHandle p_prime_complement(const FiniteGroup& g, const SubgroupHandle& s, unsigned p) {
  std::size_t target = s.order() / p_part(s.order(), p);
  SubgroupHandle h = make_subgroup(g, {});
  for (Elem x : s.elements) {
    if (h.order() >= target) break;
    if (g.element_order(x) % p == 0 || h.contains(x)) continue;
    auto gens = h.generators;
    gens.push_back(x);
    auto t = make_subgroup(g, gens);
    if (t.order() % p != 0) h = std::move(t);
  }
  if (h.order() != target) throw Error(ErrorKind::HypothesisUnmet, "no p' complement found");
  return h;
}

std::vector<Elem> elementary_abelian_basis(const FiniteGroup& g, const SubgroupHandle& s, unsigned p) {
  std::vector<Elem> basis;
  SubgroupHandle span = make_subgroup(g, {});
  for (Elem x : s.elements) {
    if (span.contains(x)) continue;
    if (g.element_order(x) != p) throw Error(ErrorKind::HypothesisUnmet, "subgroup is not elementary abelian");
    basis.push_back(x);
    span = make_subgroup(g, basis);
  }
  std::size_t expect = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) expect *= p;
  if (expect != s.order()) throw Error(ErrorKind::HypothesisUnmet, "subgroup is not elementary abelian");
  for (Elem a : basis)
    for (Elem b : basis)
      if (g.mul(a, b) != g.mul(b, a)) throw Error(ErrorKind::HypothesisUnmet, "subgroup is not abelian");
  return basis;
}

}  // namespace mt
