#include "mt/groups/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "mt/error.hpp"

namespace mt {

namespace {

void check_budget(std::size_t n, std::size_t max_order) {
  if (n > max_order) {
    throw Error(ErrorKind::OrderExceeded, "group closure exceeds " + std::to_string(max_order) + " elements");
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& gens_in, std::size_t max_order) {
  if (gens_in.empty()) throw Error(ErrorKind::InvalidArgument, "at least one generator required");
  std::size_t degree = 0;
  for (const auto& g : gens_in) degree = std::max(degree, g.degree());
  std::vector<Perm> gens;
  for (const auto& g : gens_in) gens.push_back(g.extended(degree));

  FiniteGroup G;
  G.right_.assign(gens.size(), {});
  std::unordered_map<Perm, Elem, PermHash> index;
  G.perms_.push_back(Perm::identity(degree));
  index.emplace(G.perms_[0], 0);
  G.parent_.push_back(0);
  G.parent_gen_.push_back(0);
  for (std::size_t cur = 0; cur < G.perms_.size(); ++cur) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm next = G.perms_[cur] * gens[k];
      auto it = index.find(next);
      Elem e;
      if (it == index.end()) {
        e = static_cast<Elem>(G.perms_.size());
        check_budget(G.perms_.size() + 1, max_order);
        index.emplace(next, e);
        G.perms_.push_back(std::move(next));
        G.parent_.push_back(static_cast<Elem>(cur));
        G.parent_gen_.push_back(static_cast<std::uint16_t>(k));
      } else {
        e = it->second;
      }
      G.right_[k].push_back(e);
    }
  }
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::from_right_action(const std::vector<std::vector<std::uint32_t>>& right_mult,
                                           std::uint32_t start, std::size_t max_order) {
  if (right_mult.empty()) throw Error(ErrorKind::InvalidArgument, "at least one generator required");
  const std::size_t points = right_mult[0].size();
  std::vector<std::uint32_t> to_elem(points, UINT32_MAX);
  std::vector<std::uint32_t> to_point;
  FiniteGroup G;
  G.right_.assign(right_mult.size(), {});
  to_elem[start] = 0;
  to_point.push_back(start);
  G.parent_.push_back(0);
  G.parent_gen_.push_back(0);
  for (std::size_t cur = 0; cur < to_point.size(); ++cur) {
    for (std::size_t k = 0; k < right_mult.size(); ++k) {
      std::uint32_t q = right_mult[k][to_point[cur]];
      if (to_elem[q] == UINT32_MAX) {
        check_budget(to_point.size() + 1, max_order);
        to_elem[q] = static_cast<std::uint32_t>(to_point.size());
        to_point.push_back(q);
        G.parent_.push_back(static_cast<Elem>(cur));
        G.parent_gen_.push_back(static_cast<std::uint16_t>(k));
      }
      G.right_[k].push_back(to_elem[q]);
    }
  }
  G.finish();
  return G;
}

void FiniteGroup::finish() {
  if (order() <= kTableLimit) build_table();
  build_inverses_and_orders();
  build_classes();
}

void FiniteGroup::build_table() {
  const std::size_t n = order();
  table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint16_t* row = &table_[i * n];
    row[0] = static_cast<std::uint16_t>(i);
    for (std::size_t j = 1; j < n; ++j) row[j] = static_cast<std::uint16_t>(right_[parent_gen_[j]][row[parent_[j]]]);
  }
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  // Trace the BFS word of b starting from a.
  std::uint16_t stack[256];
  std::vector<std::uint16_t> big;
  std::size_t depth = 0;
  for (Elem x = b; x != kIdentity; x = parent_[x]) {
    if (depth < 256) {
      stack[depth] = parent_gen_[x];
    } else {
      if (big.empty()) big.assign(stack, stack + 256);
      big.push_back(parent_gen_[x]);
    }
    ++depth;
  }
  Elem r = a;
  if (big.empty()) {
    for (std::size_t i = depth; i-- > 0;) r = right_[stack[i]][r];
  } else {
    for (std::size_t i = big.size(); i-- > 0;) r = right_[big[i]][r];
  }
  return r;
}

void FiniteGroup::build_inverses_and_orders() {
  const std::size_t n = order();
  inverse_.assign(n, 0);
  orders_.assign(n, 1);
  for (std::size_t i = 1; i < n; ++i) {
    const Elem a = static_cast<Elem>(i);
    unsigned k = 1;
    Elem prev = kIdentity;
    Elem x = a;
    while (x != kIdentity) {
      prev = x;
      x = mul(x, a);
      ++k;
    }
    // x == a^k == 1 and prev == a^(k-1) == a^-1
    orders_[i] = k;
    inverse_[i] = prev;
  }
}

void FiniteGroup::build_classes() {
  const std::size_t n = order();
  std::vector<std::size_t> raw(n, SIZE_MAX);
  std::vector<ConjClass> found;
  for (std::size_t s = 0; s < n; ++s) {
    if (raw[s] != SIZE_MAX) continue;
    ConjClass c;
    std::deque<Elem> queue{static_cast<Elem>(s)};
    raw[s] = found.size();
    while (!queue.empty()) {
      Elem g = queue.front();
      queue.pop_front();
      c.members.push_back(g);
      for (std::size_t k = 0; k < generator_count(); ++k) {
        Elem h = conj(g, generator(k));
        if (raw[h] == SIZE_MAX) {
          raw[h] = found.size();
          queue.push_back(h);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    c.element_order = orders_[c.representative];
    found.push_back(std::move(c));
  }
  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = found[a];
    const auto& y = found[b];
    if (x.element_order != y.element_order) return x.element_order < y.element_order;
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.representative < y.representative;
  });
  std::vector<std::size_t> rank(found.size());
  classes_.clear();
  for (std::size_t i = 0; i < perm.size(); ++i) {
    rank[perm[i]] = i;
    classes_.push_back(std::move(found[perm[i]]));
  }
  class_of_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) class_of_[i] = rank[raw[i]];
}

std::vector<Elem> FiniteGroup::generators() const {
  std::vector<Elem> g;
  for (std::size_t k = 0; k < generator_count(); ++k) g.push_back(generator(k));
  return g;
}

Elem FiniteGroup::pow(Elem a, long long e) const {
  long long m = orders_[a];
  e %= m;
  if (e < 0) e += m;
  Elem r = kIdentity;
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::vector<std::size_t> FiniteGroup::word(Elem a) const {
  std::vector<std::size_t> w;
  for (Elem x = a; x != kIdentity; x = parent_[x]) w.push_back(parent_gen_[x]);
  std::reverse(w.begin(), w.end());
  return w;
}

Word FiniteGroup::free_word(Elem a) const {
  Word w;
  for (auto k : word(a)) w.push_back(static_cast<int>(k) + 1);
  return w;
}

Elem FiniteGroup::evaluate(const Word& w) const {
  Elem r = kIdentity;
  for (int letter : w) {
    std::size_t k = static_cast<std::size_t>(std::abs(letter) - 1);
    if (k >= generator_count()) throw Error(ErrorKind::InvalidArgument, "word letter out of range");
    r = letter > 0 ? right_[k][r] : mul(r, inv(generator(k)));
  }
  return r;
}

std::optional<Elem> FiniteGroup::find(const Perm& p) const {
  if (perms_.empty()) return std::nullopt;
  Perm q = p.extended(perms_[0].degree());
  for (std::size_t i = 0; i < perms_.size(); ++i)
    if (perms_[i] == q) return static_cast<Elem>(i);
  return std::nullopt;
}

std::string FiniteGroup::label(Elem a) const {
  if (!perms_.empty()) return perms_[a].to_cycles();
  return "g" + std::to_string(a);
}

std::vector<Elem> FiniteGroup::closure(std::span<const Elem> gens) const {
  std::vector<char> in(order(), 0);
  std::vector<Elem> elems{kIdentity};
  in[kIdentity] = 1;
  for (std::size_t cur = 0; cur < elems.size(); ++cur) {
    for (Elem g : gens) {
      Elem x = mul(elems[cur], g);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

FiniteGroup FiniteGroup::subgroup(std::span<const Elem> gens, std::vector<Elem>* embedding) const {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "subgroup needs generators");
  std::vector<Elem> elems{kIdentity};
  std::unordered_map<Elem, std::uint32_t> index{{kIdentity, 0}};
  std::vector<std::vector<std::uint32_t>> right(gens.size());
  for (std::size_t cur = 0; cur < elems.size(); ++cur) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem x = mul(elems[cur], gens[k]);
      auto it = index.find(x);
      if (it == index.end()) {
        it = index.emplace(x, static_cast<std::uint32_t>(elems.size())).first;
        elems.push_back(x);
      }
      right[k].push_back(it->second);
    }
  }
  FiniteGroup sub = from_right_action(right, 0, elems.size());
  // from_right_action re-runs BFS in the same order, so indices coincide.
  if (embedding) *embedding = elems;
  if (!perms_.empty()) {
    for (Elem e : elems) sub.perms_.push_back(perms_[e]);
  }
  return sub;
}

std::vector<Elem> FiniteGroup::centralizer(std::span<const Elem> elems) const {
  std::vector<Elem> c;
  for (Elem g = 0; g < order(); ++g) {
    bool ok = true;
    for (Elem x : elems) {
      if (mul(g, x) != mul(x, g)) {
        ok = false;
        break;
      }
    }
    if (ok) c.push_back(g);
  }
  return c;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generator_count(); ++i)
    for (std::size_t j = i + 1; j < generator_count(); ++j)
      if (mul(generator(i), generator(j)) != mul(generator(j), generator(i))) return false;
  return true;
}

GroupPtr group_from_generators(const std::vector<Perm>& gens, std::size_t max_order) {
  return make_group(FiniteGroup::from_permutations(gens, max_order));
}

const std::vector<ConjClass>& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

namespace {

std::vector<Elem> normal_closure(const FiniteGroup& g, std::vector<Elem> seeds) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> elems{FiniteGroup::kIdentity};
  in[FiniteGroup::kIdentity] = 1;
  std::vector<Elem> gens;
  auto add_gen = [&](Elem x) {
    if (in[x]) return;
    gens.push_back(x);
    for (std::size_t cur = 0; cur < elems.size(); ++cur) {
      for (Elem s : gens) {
        Elem y = g.mul(elems[cur], s);
        if (!in[y]) {
          in[y] = 1;
          elems.push_back(y);
        }
      }
    }
  };
  for (Elem s : seeds) add_gen(s);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t k = 0; k < g.generator_count(); ++k) {
        Elem c = g.conj(gens[i], g.generator(k));
        if (!in[c]) {
          add_gen(c);
          changed = true;
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

bool is_p_perfect(const FiniteGroup& g, unsigned p) {
  std::vector<Elem> comms;
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    for (std::size_t j = i + 1; j < g.generator_count(); ++j)
      comms.push_back(g.commutator(g.generator(i), g.generator(j)));
  std::size_t derived = comms.empty() ? 1 : normal_closure(g, comms).size();
  std::size_t ab = g.order() / derived;
  return ab % p != 0;
}

bool is_center_free(const FiniteGroup& g) {
  auto gens = g.generators();
  return g.centralizer(gens).size() == 1;
}

std::vector<Elem> homomorphism_from_generators(const FiniteGroup& source, const FiniteGroup& target,
                                               std::span<const Elem> images) {
  if (images.size() != source.generator_count())
    throw Error(ErrorKind::InvalidArgument, "one image per source generator required");
  std::vector<Elem> map(source.order(), 0);
  for (Elem x = 1; x < source.order(); ++x)
    map[x] = target.mul(map[source.parent(x)], images[source.parent_generator(x)]);
  for (Elem x = 0; x < source.order(); ++x) {
    for (std::size_t k = 0; k < source.generator_count(); ++k) {
      if (map[source.times_generator(x, k)] != target.mul(map[x], images[k]))
        throw Error(ErrorKind::InvariantViolation, "generator images do not define a homomorphism");
    }
  }
  return map;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace mt
