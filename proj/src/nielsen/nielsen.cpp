#include "mt/nielsen/nielsen.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "mt/error.hpp"

namespace mt {

Nielsen::Nielsen(NielsenSpec spec) : spec_(std::move(spec)) {
  if (!spec_.group) throw Error(ErrorKind::InvalidArgument, "Nielsen spec without a group");
  if (spec_.classes.empty()) throw Error(ErrorKind::InvalidArgument, "empty class list");
  const auto& G = *spec_.group;
  for (std::size_t c : spec_.classes) {
    if (c >= G.classes().size()) throw Error(ErrorKind::InvalidArgument, "class index out of range");
    if (G.classes()[c].element_order % spec_.p == 0)
      throw Error(ErrorKind::NotPPrime, "class " + std::to_string(c) + " has order divisible by p");
  }
  sorted_classes_ = spec_.classes;
  std::sort(sorted_classes_.begin(), sorted_classes_.end());

  to_rep_.assign(G.order(), 0);
  cent_.resize(G.classes().size());
  const auto gens = G.generators();
  std::vector<std::size_t> distinct = sorted_classes_;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t c : distinct) {
    Elem rep = G.classes()[c].representative;
    std::vector<bool> seen(G.order(), false);
    std::deque<Elem> queue{rep};
    seen[rep] = true;
    to_rep_[rep] = FiniteGroup::kIdentity;
    while (!queue.empty()) {
      Elem y = queue.front();
      queue.pop_front();
      for (Elem s : gens) {
        Elem z = G.conj(y, s);
        if (seen[z]) continue;
        seen[z] = true;
        to_rep_[z] = G.mul(G.inv(s), to_rep_[y]);
        queue.push_back(z);
      }
    }
    Elem single[] = {rep};
    cent_[c] = G.centralizer(single);
  }
}

bool Nielsen::in_classes(const Tuple& t) const {
  if (t.size() != r()) return false;
  std::vector<std::size_t> got;
  for (Elem e : t) got.push_back(group().class_of(e));
  std::sort(got.begin(), got.end());
  return got == sorted_classes_;
}

bool Nielsen::generates(const Tuple& t) const { return group().closure(t).size() == group().order(); }

bool Nielsen::is_valid(const Tuple& t) const {
  if (!in_classes(t)) return false;
  Elem prod = FiniteGroup::kIdentity;
  for (Elem e : t) prod = group().mul(prod, e);
  return prod == FiniteGroup::kIdentity && generates(t);
}

std::vector<std::size_t> Nielsen::class_assignment(const Tuple& t) const {
  std::vector<std::size_t> out;
  for (Elem e : t) out.push_back(group().class_of(e));
  return out;
}

Tuple Nielsen::conjugate(const Tuple& t, Elem h) const {
  Tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = group().conj(t[i], h);
  return out;
}

void Nielsen::min_over_conjugation(const Tuple& t, Tuple& best, bool& have) const {
  const auto& G = group();
  std::size_t c = G.class_of(t[0]);
  Elem rep = G.classes()[c].representative;
  if (have && rep > best[0]) return;
  if (cent_[c].empty()) throw Error(ErrorKind::InvalidArgument, "tuple entry outside the Nielsen classes");
  Elem h0 = to_rep_[t[0]];
  Tuple cur(t.size());
  cur[0] = rep;
  for (Elem z : cent_[c]) {
    Elem h = G.mul(h0, z);
    bool better = !have || rep < best[0];
    bool decided = better;
    for (std::size_t i = 1; i < t.size(); ++i) {
      cur[i] = G.conj(t[i], h);
      if (!decided) {
        if (cur[i] < best[i]) {
          better = decided = true;
        } else if (cur[i] > best[i]) {
          decided = true;
          break;
        }
      }
    }
    if (better) {
      best = cur;
      have = true;
    }
  }
}

std::vector<Tuple> Nielsen::q2_images(const Tuple& t) const {
  if (t.size() != 4) return {t};
  Tuple a = q1q3inv(t);
  Tuple b = Tuple{t[2], t[3], t[0], t[1]};
  Tuple ab = Tuple{a[2], a[3], a[0], a[1]};
  return {t, a, b, ab};
}

Tuple Nielsen::canonical(const Tuple& t) const {
  Tuple best;
  bool have = false;
  for (const auto& q : q2_images(t)) min_over_conjugation(q, best, have);
  return best;
}

Tuple Nielsen::inner_canonical(const Tuple& t) const {
  Tuple best;
  bool have = false;
  min_over_conjugation(t, best, have);
  return best;
}

Tuple Nielsen::sh(const Tuple& t) const {
  Tuple out(t.begin() + 1, t.end());
  out.push_back(t[0]);
  return out;
}

Tuple Nielsen::twist(const Tuple& t, std::size_t i) const {
  if (i < 1 || i >= t.size()) throw Error(ErrorKind::InvalidArgument, "twist index out of range");
  Tuple out = t;
  out[i - 1] = group().conj(t[i], group().inv(t[i - 1]));
  out[i] = t[i - 1];
  return out;
}

Tuple Nielsen::twist_inverse(const Tuple& t, std::size_t i) const {
  if (i < 1 || i >= t.size()) throw Error(ErrorKind::InvalidArgument, "twist index out of range");
  Tuple out = t;
  out[i - 1] = t[i];
  out[i] = group().conj(t[i - 1], t[i]);
  return out;
}

Tuple Nielsen::q1q3inv(const Tuple& t) const {
  if (t.size() != 4) throw Error(ErrorKind::InvalidArgument, "q1 q3^-1 needs a 4-tuple");
  return twist_inverse(twist(t, 1), 3);
}

Tuple Nielsen::gamma0(const Tuple& t) const {
  // (gamma1 gamma_inf)^-1 = gamma_inf^-1 followed by sh^-1.
  Tuple u = twist_inverse(t, 2);
  Tuple v;
  v.push_back(u.back());
  v.insert(v.end(), u.begin(), u.end() - 1);
  return canonical(v);
}

std::vector<Tuple> Nielsen::enumerate() const {
  const auto& G = group();
  const std::size_t n = r();
  std::set<Tuple> found;
  std::set<Tuple> rejected;
  std::size_t visited = 0;
  std::vector<std::size_t> order = sorted_classes_;
  do {
    Tuple t(n);
    t[0] = G.classes()[order[0]].representative;
    // Depth-first over positions 1..n-2; the last entry is forced.
    auto rec = [&](auto& self, std::size_t pos, Elem prod) -> void {
      if (pos + 1 == n) {
        Elem last = G.inv(prod);
        if (G.class_of(last) != order[n - 1]) return;
        t[n - 1] = last;
        Tuple c = canonical(t);
        if (found.count(c) || rejected.count(c)) return;
        if (generates(c)) {
          found.insert(std::move(c));
        } else {
          rejected.insert(std::move(c));
        }
        return;
      }
      for (Elem e : G.classes()[order[pos]].members) {
        if (++visited > spec_.budget) throw Error(ErrorKind::Budget, "Nielsen enumeration budget exceeded");
        t[pos] = e;
        self(self, pos + 1, G.mul(prod, e));
      }
    };
    if (n == 1) {
      if (t[0] == FiniteGroup::kIdentity && generates(t)) found.insert(t);
    } else {
      rec(rec, 1, t[0]);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return {found.begin(), found.end()};
}

bool Nielsen::is_hm(const Tuple& t) const {
  if (t.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < t.size(); i += 2)
    if (group().mul(t[i], t[i + 1]) != FiniteGroup::kIdentity) return false;
  return true;
}

bool Nielsen::is_hm_class(const Tuple& t) const {
  for (const auto& q : q2_images(t))
    if (is_hm(q)) return true;
  return false;
}

unsigned Nielsen::middle_product(const Tuple& t) const {
  if (t.size() != 4) throw Error(ErrorKind::InvalidArgument, "middle product needs a 4-tuple");
  return group().element_order(group().mul(t[1], t[2]));
}

std::string Nielsen::format(const Tuple& t) const {
  std::string out = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += group().label(t[i]);
  }
  return out + "]";
}

Tuple Nielsen::parse(std::string_view text) const {
  auto a = text.find('[');
  auto b = text.rfind(']');
  if (a == std::string_view::npos || b == std::string_view::npos || b < a)
    throw Error(ErrorKind::Parse, "tuple must be enclosed in brackets");
  std::string body(text.substr(a + 1, b - a - 1));
  Tuple out;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto s = item.find_first_not_of(" \t");
    if (s == std::string::npos) throw Error(ErrorKind::Parse, "empty tuple entry");
    item = item.substr(s, item.find_last_not_of(" \t") - s + 1);
    if (group().has_permutations()) {
      auto e = group().find(Perm::parse_cycles(item, group().permutation(0).degree()));
      if (!e) throw Error(ErrorKind::Parse, "permutation " + item + " is not in the group");
      out.push_back(*e);
    } else {
      if (item.size() < 2 || item[0] != 'g') throw Error(ErrorKind::Parse, "expected g<index>, got " + item);
      unsigned long v = std::stoul(item.substr(1));
      if (v >= group().order()) throw Error(ErrorKind::Parse, "element index out of range");
      out.push_back(static_cast<Elem>(v));
    }
  }
  return out;
}

std::uint32_t BraidAction::index(const Tuple& t) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), t);
  if (it == classes.end() || *it != t) throw Error(ErrorKind::InvalidArgument, "tuple not in the braid action set");
  return static_cast<std::uint32_t>(it - classes.begin());
}

BraidAction braid_action(const Nielsen& ni, const std::vector<Tuple>& seeds, unsigned threads) {
  std::map<Tuple, std::pair<Tuple, Tuple>> images;  // class -> (gamma1, gamma_inf)
  std::vector<Tuple> frontier;
  std::set<Tuple> seen;
  for (const auto& s : seeds) {
    Tuple c = ni.canonical(s);
    if (seen.insert(c).second) frontier.push_back(std::move(c));
  }
  threads = std::max(1u, threads);
  while (!frontier.empty()) {
    std::vector<std::pair<Tuple, Tuple>> out(frontier.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) out[i] = {ni.gamma1(frontier[i]), ni.gamma_inf(frontier[i])};
    };
    if (threads == 1 || frontier.size() < 64) {
      work(0, frontier.size());
    } else {
      std::vector<std::future<void>> jobs;
      std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (std::size_t lo = 0; lo < frontier.size(); lo += chunk)
        jobs.push_back(std::async(std::launch::async, work, lo, std::min(frontier.size(), lo + chunk)));
      for (auto& j : jobs) j.get();
    }
    std::vector<Tuple> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (const Tuple* img : {&out[i].first, &out[i].second})
        if (seen.insert(*img).second) next.push_back(*img);
      images.emplace(std::move(frontier[i]), std::move(out[i]));
    }
    frontier = std::move(next);
  }
  BraidAction a;
  for (const auto& [t, _] : images) a.classes.push_back(t);
  const std::size_t n = a.classes.size();
  a.gamma1.resize(n);
  a.gamma_inf.resize(n);
  a.gamma0.resize(n);
  std::uint32_t i = 0;
  for (const auto& [t, img] : images) {
    a.gamma1[i] = a.index(img.first);
    a.gamma_inf[i] = a.index(img.second);
    ++i;
  }
  for (std::uint32_t k = 0; k < n; ++k) a.gamma0[a.gamma_inf[a.gamma1[k]]] = k;
  return a;
}

std::vector<Orbit> mbar4_orbits(const BraidAction& a) {
  std::vector<Orbit> orbits;
  std::vector<bool> seen(a.size(), false);
  for (std::uint32_t s = 0; s < a.size(); ++s) {
    if (seen[s]) continue;
    Orbit o{s};
    seen[s] = true;
    for (std::size_t k = 0; k < o.size(); ++k) {
      for (std::uint32_t y : {a.gamma1[o[k]], a.gamma_inf[o[k]]}) {
        if (!seen[y]) {
          seen[y] = true;
          o.push_back(y);
        }
      }
    }
    std::sort(o.begin(), o.end());
    orbits.push_back(std::move(o));
  }
  return orbits;
}

std::vector<Orbit> gamma_inf_orbits(const BraidAction& a, const Orbit& orbit) {
  std::vector<Orbit> cycles;
  std::set<std::uint32_t> seen;
  for (std::uint32_t s : orbit) {
    if (seen.count(s)) continue;
    Orbit c;
    for (std::uint32_t x = s; !seen.count(x); x = a.gamma_inf[x]) {
      seen.insert(x);
      c.push_back(x);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

NielsenSpec lifted_spec(const FrattiniLevel& level, const NielsenSpec& spec) {
  NielsenSpec out = spec;
  out.group = level.total.group;
  out.classes.clear();
  for (std::size_t c : spec.classes) out.classes.push_back(lift_class_index(level, c));
  return out;
}

std::vector<Tuple> lift_tuples(const FrattiniLevel& level, const Tuple& t, const Nielsen& lifted) {
  const auto& base = *level.base;
  const auto& G = lifted.group();
  const std::size_t n = t.size();
  if (&G != level.total.group.get()) throw Error(ErrorKind::MismatchedLevels, "lifted Nielsen class is not over the level");
  std::vector<std::vector<Elem>> cand(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t want = lift_class_index(level, base.class_of(t[i]));
    for (Elem e : level.fiber(t[i]))
      if (G.class_of(e) == want) cand[i].push_back(e);
  }
  std::set<Tuple> found;
  std::set<Tuple> rejected;
  Tuple cur(n);
  auto rec = [&](auto& self, std::size_t pos, Elem prod) -> void {
    if (pos + 1 == n) {
      Elem last = G.inv(prod);
      if (!std::binary_search(cand[n - 1].begin(), cand[n - 1].end(), last)) return;
      cur[n - 1] = last;
      Tuple c = lifted.canonical(cur);
      if (found.count(c) || rejected.count(c)) return;
      if (lifted.generates(c)) {
        found.insert(std::move(c));
      } else {
        rejected.insert(std::move(c));
      }
      return;
    }
    for (Elem e : cand[pos]) {
      cur[pos] = e;
      self(self, pos + 1, G.mul(prod, e));
    }
  };
  for (auto& c : cand) std::sort(c.begin(), c.end());
  rec(rec, 0, FiniteGroup::kIdentity);
  if (found.empty()) throw Error(ErrorKind::EmptyFiber, "no Nielsen tuple lies over the given tuple");
  return {found.begin(), found.end()};
}

}  // namespace mt
