#include "mt/gcomplete/gcomplete.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mt/error.hpp"

namespace mt {

namespace {

struct Search {
  const FiniteGroup& g;
  std::vector<std::size_t> classes;
  std::size_t budget;
  std::set<std::vector<Elem>> seen;
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> meeting;  // (gens, elements)

  bool meets(const std::vector<Elem>& elems, std::size_t c) const {
    return std::any_of(elems.begin(), elems.end(), [&](Elem x) { return g.class_of(x) == c; });
  }

  bool visit(const std::vector<Elem>& elems) {
    if (!seen.insert(elems).second) return false;
    if (seen.size() > budget) throw Error(ErrorKind::Budget, "subgroup search exceeded its budget");
    return true;
  }

  // Adjoin one element from each class H still misses; proper results only.
  void dfs(const std::vector<Elem>& gens, const std::vector<Elem>& elems) {
    auto missing = std::find_if(classes.begin(), classes.end(), [&](std::size_t c) { return !meets(elems, c); });
    if (missing == classes.end()) {
      meeting.emplace_back(gens, elems);
      return;
    }
    const auto& members = g.classes()[*missing].members;
    // Up to conjugacy the first element may be the class representative.
    std::size_t tries = gens.empty() ? 1 : members.size();
    for (std::size_t i = 0; i < tries; ++i) {
      auto next = gens;
      next.push_back(members[i]);
      auto sub = g.closure(next);
      if (sub.size() == g.order() || !visit(sub)) continue;
      dfs(next, sub);
    }
  }
};

}  // namespace

CompletenessVerdict is_gcomplete(const FiniteGroup& g, const std::vector<std::size_t>& classes,
                                 std::size_t max_subgroups) {
  Search s{g, classes, max_subgroups, {}, {}};
  std::sort(s.classes.begin(), s.classes.end());
  s.classes.erase(std::unique(s.classes.begin(), s.classes.end()), s.classes.end());
  CompletenessVerdict v;
  if (s.classes.empty()) {
    // The trivial subgroup meets an empty list.
    v.complete = g.order() == 1;
    if (!v.complete) v.witness_elements = {FiniteGroup::kIdentity};
    return v;
  }
  std::vector<Elem> trivial{FiniteGroup::kIdentity};
  s.visit(trivial);
  s.dfs({}, trivial);
  // Grow each meeting subgroup while it stays proper; keep the largest.
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> queue = s.meeting;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto [gens, elems] = queue[k];
    for (Elem x = 0; x < g.order(); ++x) {
      if (std::binary_search(elems.begin(), elems.end(), x)) continue;
      auto next = gens;
      next.push_back(x);
      auto sub = g.closure(next);
      if (sub.size() == g.order() || !s.visit(sub)) continue;
      queue.emplace_back(std::move(next), std::move(sub));
    }
  }
  v.subgroups_examined = s.seen.size();
  v.complete = queue.empty();
  for (auto& [gens, elems] : queue) {
    bool better = v.witness_elements.empty() || elems.size() > v.witness_elements.size() ||
                  (elems.size() == v.witness_elements.size() && elems < v.witness_elements);
    if (better) {
      v.witness_generators = gens;
      v.witness_elements = elems;
    }
  }
  return v;
}

CompletenessVerdict is_p_gcomplete(const FiniteGroup& g, unsigned p, std::size_t max_subgroups) {
  std::vector<std::size_t> cls;
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    if (g.classes()[c].element_order % p != 0) cls.push_back(c);
  return is_gcomplete(g, cls, max_subgroups);
}

CompletenessVerdict is_hm_p_gcomplete(const FiniteGroup& g, const std::vector<std::size_t>& classes, unsigned p,
                                      std::size_t max_subgroups) {
  for (std::size_t c : classes)
    if (g.classes().at(c).element_order % p == 0)
      throw Error(ErrorKind::NotPPrime, "class of order divisible by p");
  auto inverse_class = [&](std::size_t c) { return g.class_of(g.inv(g.classes()[c].representative)); };
  bool any = false;
  CompletenessVerdict total;
  total.complete = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[j] != inverse_class(classes[i])) continue;
      any = true;
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < classes.size(); ++k)
        if (k != i && k != j) rest.push_back(classes[k]);
      CompletenessVerdict v;
      if (rest.empty()) {
        v.witness_elements = {FiniteGroup::kIdentity};
      } else {
        v = is_gcomplete(g, rest, max_subgroups);
      }
      total.subgroups_examined += v.subgroups_examined;
      if (!v.complete && total.complete) {
        total.complete = false;
        total.witness_generators = v.witness_generators;
        total.witness_elements = v.witness_elements;
      }
    }
  }
  if (!any) throw Error(ErrorKind::NoInversePairs, "no two entries are inverse classes");
  return total;
}

unsigned cyclotomic_order_q(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  return n % 4 == 2 ? n / 2 : n;
}

unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    r -= r / q;
  }
  if (n > 1) r -= r / n;
  return r;
}

unsigned branch_count_bound(const std::vector<unsigned>& orders) {
  unsigned r = 0;
  for (unsigned n : orders) r += euler_phi(cyclotomic_order_q(n));
  return 2 * r;
}

}  // namespace mt
