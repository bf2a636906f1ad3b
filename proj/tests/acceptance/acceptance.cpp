// One PASS/FAIL line per acceptance criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "modular_curve_oracle.hpp"
#include "mt/error.hpp"
#include "mt/frattini/towers.hpp"
#include "mt/gcomplete/gcomplete.hpp"
#include "mt/hurwitz/hurwitz.hpp"
#include "mt/schur/schur.hpp"

using namespace mt;

namespace {

struct Checker {
  std::size_t assertions = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++assertions;
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
};

GroupPtr a5() {
  return group_from_generators({Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)}, 1000);
}

PresentedGroup a5_presented() { return find_presentation(a5(), Presentation::parse("gens: a b\na^2\nb^3\n(ab)^5\n")); }

GModule k4_over_c3() {
  auto c3 = group_from_generators({Perm::parse_cycles("(1 2 3)", 3)}, 10);
  Matrix a(2, 2, 2);
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  return GModule(c3, 2, {a});
}

std::size_t class_of_order(const FiniteGroup& g, unsigned order) {
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    if (g.classes()[c].element_order == order) return c;
  throw Error(ErrorKind::InvalidArgument, "no class of order " + std::to_string(order));
}

struct A5Tower {
  FirstLevel first;
  Nielsen down, up;
  BraidAction a_down, a_up;
};

A5Tower& a5_tower() {
  static A5Tower t = [] {
    auto f = first_level(a5_presented(), 2, 200000);
    const auto& level = *f.level;
    std::size_t c = class_of_order(*level.base, 3);
    NielsenSpec s0{level.base, {c, c, c, c}, 2};
    Nielsen down(s0);
    Nielsen up(lifted_spec(level, s0));
    auto a_down = braid_action(down, down.enumerate());
    std::vector<Tuple> seeds;
    for (const auto& t : a_down.classes) {
      if (!down.is_hm_class(t)) continue;
      auto l = lift_tuples(level, t, up);
      seeds.insert(seeds.end(), l.begin(), l.end());
    }
    auto a_up = braid_action(up, seeds, 2);
    return A5Tower{std::move(f), std::move(down), std::move(up), std::move(a_down), std::move(a_up)};
  }();
  return t;
}

// 1. Dihedral Nielsen classes against the classical X1(N) formulas.
void dihedral_oracle(Checker& c) {
  for (auto [p, k] : {std::pair{5u, 0u}, {7u, 0u}, {11u, 0u}, {5u, 1u}}) {
    auto level = dihedral_level(p, k, 100000);
    const auto& G = level.total_group();
    std::size_t inv = class_of_order(G, 2);
    Nielsen ni({level.total.group, {inv, inv, inv, inv}, p});
    auto a = braid_action(ni, ni.enumerate());
    auto orbits = mbar4_orbits(a);
    auto want = oracle::x1(G.order() / 2);
    std::string tag = "X1(" + std::to_string(G.order() / 2) + ")";
    c.expect(orbits.size() == want.components, tag + " component count");
    std::vector<std::size_t> widths;
    for (const auto& o : orbits) {
      auto r = component_report(ni, a, o);
      widths.insert(widths.end(), r.cusp_widths.begin(), r.cusp_widths.end());
      c.expect(r.genus == want.genus, tag + " genus");
    }
    std::sort(widths.begin(), widths.end());
    c.expect(widths == want.cusp_widths, tag + " cusp widths");
    c.expect(a.size() == want.index, tag + " degree");
  }
}

// 2. (A5, four 3-cycles) at level 0.
void a5_level0(Checker& c) {
  auto& t = a5_tower();
  auto orbits = mbar4_orbits(t.a_down);
  c.expect(orbits.size() == 1, "one orbit");
  for (const auto& o : orbits) {
    auto r = component_report(t.down, t.a_down, o);
    c.expect(r.genus == 0, "genus 0");
    c.expect(r.t_prime == 0, "no 2-divisible cusps");
  }
}

// 3. G1(A5).
void a5_first_level(Checker& c) {
  auto& f = a5_tower().first;
  c.expect(f.h2_dimension == 1, "H^2 dimension one");
  c.expect(f.level.has_value(), "level built");
  if (!f.level) return;
  c.expect(f.level->total_group().order() == 1920, "order 1920");
  c.expect(verify_frattini(*f.level), "Frattini");
  c.expect(verify_order_lifting(*f.level).ok(), "order lifting");
  c.expect(f.normalizer.order() == 12, "A4 normalizer");
  c.expect(!restriction_splits(*f.level, f.normalizer.generators), "nonsplit over A4");
}

// 4. (A5, four 3-cycles) at level 1.
void a5_level1(Checker& c) {
  auto& t = a5_tower();
  auto orbits = mbar4_orbits(t.a_up);
  c.expect(orbits.size() == 2, "two orbits");
  std::multiset<std::size_t> genera;
  for (const auto& o : orbits) genera.insert(genus_from(o.size(), orbit_indices(t.a_up, o)));
  c.expect(genera == std::multiset<std::size_t>{9, 12}, "genuses 12 and 9");
}

// 5. M0(A5) at p = 5.
void a5_p5_module(Checker& c) {
  auto f = first_level(a5_presented(), 5, 200000);
  c.expect(f.normalizer.order() == 10, "D5 normalizer");
  c.expect(f.induced && f.induced->dim() == 6, "induced dim 6");
  c.expect(f.m0.dim() == 6, "M0 dim 6");
  c.expect(is_indecomposable(f.m0), "indecomposable");
  auto l = loewy_layers(f.m0);
  c.expect(l.layers.size() == 2, "two Loewy layers");
  if (l.layers.size() == 2) {
    c.expect(l.layers[0].size() == 1 && l.layers[1].size() == 1, "one simple per layer");
    c.expect(l.layers[0] == l.layers[1], "same simple in both layers");
    c.expect(l.layers[0][0].dim == 3, "3-dimensional simple");
  }
}

// 6. Split tower over A4.
void a4_split(Checker& c) {
  auto s = split_level(k4_over_c3(), 100000);
  c.expect(s.level.kernel_dim() == 5, "dim M0 = 5");
  c.expect(s.level.total_group().order() == 384, "order 384");
  auto l = loewy_layers(s.level.kernel_module);
  c.expect(l.layers.size() == 2, "two layers");
  if (l.layers.size() != 2) return;
  auto is_k = [](const SimpleLabel& x) { return x.dim == 2 && !x.trivial; };
  auto head = l.layers[0], socle = l.layers[1];
  c.expect(socle.size() == 1 && is_k(socle[0]), "socle K4,H");
  c.expect(head.size() == 2 && std::count_if(head.begin(), head.end(), is_k) == 1 &&
               std::count_if(head.begin(), head.end(), [](const SimpleLabel& x) { return x.trivial; }) == 1,
           "head K4,H + 1");
}

// 7. Schur quotients of G1(A4).
void a4_schur(Checker& c) {
  auto s = split_level(k4_over_c3(), 100000);
  const auto& level = s.level;
  auto q = enumerate_schur_quotients(level.total, 2, 2'000'000);
  c.expect(q.size() == 3, "three quotients");
  std::multiset<std::string> tops;
  auto rad = radical(level.kernel_module);
  for (const auto& e : q) {
    auto vd = vd_set(e, level);
    auto d = slice_display(e, level, vd);
    tops.insert(d.substr(d.find("-> ") + 3));
    for (const auto& v : rad.elements())
      c.expect(vd.in[static_cast<std::size_t>(level.kernel_index[level.kernel_element(v)])], "rad lifts to order 2");
  }
  c.expect(tops == std::multiset<std::string>{"K4+Z4", "Q8+Z2", "Q8.Z4"}, "slice types");
}

// 8. Completeness of A5.
void a5_gcomplete(Checker& c) {
  auto g = a5();
  c.expect(is_p_gcomplete(*g, 2).complete, "2-gcomplete");
  auto v3 = is_p_gcomplete(*g, 3);
  c.expect(!v3.complete && v3.witness_elements.size() == 10, "witness D5");
  if (!v3.complete) {
    std::size_t inv = 0;
    for (Elem x : v3.witness_elements) inv += g->element_order(x) == 2;
    c.expect(inv == 5, "witness is dihedral");
  }
  auto v5 = is_p_gcomplete(*g, 5);
  c.expect(!v5.complete && v5.witness_elements.size() == 12, "witness A4");
}

// 9. Property suites.
void action_properties(Checker& c, const Nielsen& ni, const BraidAction& a, const std::string& tag) {
  const auto& G = ni.group();
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    c.expect(a.gamma1[a.gamma1[i]] == i, tag + " gamma1^2");
    c.expect(a.gamma0[a.gamma0[a.gamma0[i]]] == i, tag + " gamma0^3");
    c.expect(a.gamma0[a.gamma_inf[a.gamma1[i]]] == i, tag + " gamma0 gamma_inf gamma1");
    const auto& t = a.classes[i];
    auto moved = ni.twist(t, 2);
    c.expect(G.mul(t[1], t[2]) == G.mul(moved[1], moved[2]), tag + " gamma_inf fixes g2g3");
    c.expect(ni.middle_product(t) == ni.middle_product(a.classes[a.gamma_inf[i]]), tag + " mpr on cusps");
  }
  auto orbits = mbar4_orbits(a);
  auto cusps = all_cusps(a);
  auto inc = sh_incidence(a, cusps);
  c.expect(inc.symmetric(), tag + " sh-incidence symmetric");
  c.expect(inc.blocks.size() == orbits.size(), tag + " blocks = orbits");
  // Each block is the set of cusps inside one orbit.
  std::vector<std::size_t> orbit_of(a.size());
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (auto x : orbits[o]) orbit_of[x] = o;
  for (const auto& b : inc.blocks) {
    std::set<std::size_t> os;
    for (auto cusp : b) os.insert(orbit_of[cusps[cusp].front()]);
    c.expect(os.size() == 1, tag + " block inside one orbit");
  }
  for (const auto& o : orbits) {
    auto ind = orbit_indices(a, o);
    c.expect(ind.sum() % 2 == 0, tag + " index sum parity");
    c.expect(fixed_point_indices(a, o).sum() == ind.sum(), tag + " fixed-point indices");
    bool integral = true;
    try {
      genus_from(o.size(), ind);
    } catch (const Error&) {
      integral = false;
    }
    c.expect(integral, tag + " integral genus");
  }
}

void compare_properties(Checker& c, const Nielsen& down, const BraidAction& a_down, const Nielsen& up,
                        const BraidAction& a_up, const FrattiniLevel& level, const std::string& tag) {
  for (const auto& ou : mbar4_orbits(a_up)) {
    for (const auto& od : mbar4_orbits(a_down)) {
      LevelComparison lc;
      try {
        lc = level_compare(down, a_down, od, up, a_up, ou, level);
      } catch (const Error&) {
        continue;
      }
      c.expect(lc.mpr_violations.empty(), tag + " mpr multiplies by p");
      for (const auto& f : lc.cusps) {
        if (!f.p_divisible) continue;
        for (unsigned m : f.mpr_above) c.expect(m == f.mpr * level.p, tag + " mpr over p-divisible cusp");
      }
      auto bound = genus_lower_bound(lc.t_prime, lc.degree, lc.u, level.p);
      std::size_t genus = component_genus(a_up, ou);
      auto flags = goup_flags(lc, component_genus(a_down, od));
      try {
        auto v = check_goup(bound, genus, flags);
        c.expect(v != GoupVerdict::Violated, tag + " bound <= genus");
        if (!flags.elliptic && !flags.width_excess) c.expect(v == GoupVerdict::Equal, tag + " equality");
      } catch (const Error& e) {
        c.expect(e.kind() == ErrorKind::HypothesisUnmet, tag + " only hypothesis failures");
      }
    }
  }
}

void schur_properties(Checker& c, const std::vector<CentralExt>& q, const FrattiniLevel& level,
                      const std::string& tag) {
  for (const auto& e : q) {
    auto vd = vd_set(e, level);
    std::size_t n = 0;
    auto bad = verify_schur_properties(e, level, vd, &n);
    c.assertions += n;
    for (const auto& b : bad) c.expect(false, tag + ": " + b);
  }
}

void properties(Checker& c) {
  auto& t = a5_tower();
  action_properties(c, t.down, t.a_down, "A5 level 0");
  action_properties(c, t.up, t.a_up, "A5 level 1");
  compare_properties(c, t.down, t.a_down, t.up, t.a_up, *t.first.level, "A5");
  for (unsigned p : {3u, 5u, 7u, 11u}) {
    for (unsigned k : {0u, 1u}) {
      auto level = dihedral_level(p, k, 100000);
      std::size_t inv = class_of_order(*level.base, 2);
      NielsenSpec s0{level.base, {inv, inv, inv, inv}, p};
      Nielsen down(s0);
      auto a_down = braid_action(down, down.enumerate());
      std::string tag = "D" + std::to_string(level.total_group().order() / 2);
      if (k == 0) {
        action_properties(c, down, a_down, tag);
        continue;
      }
      Nielsen up(lifted_spec(level, s0));
      auto a_up = braid_action(up, up.enumerate());
      action_properties(c, up, a_up, tag);
      compare_properties(c, down, a_down, up, a_up, level, tag);
    }
  }
  auto s = split_level(k4_over_c3(), 100000);
  schur_properties(c, enumerate_schur_quotients(s.level.total, 2, 2'000'000), s.level, "G1(A4)");
  const auto& l5 = *t.first.level;
  schur_properties(c, enumerate_schur_quotients(eliminate_generators(l5.total, 2), 2, 2'000'000), l5, "G1(A5)");
  c.expect(c.assertions >= 10'000, "at least 10000 assertions");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Checker&)>>> criteria = {
      {"dihedral X1 oracle", dihedral_oracle},
      {"A5 level 0", a5_level0},
      {"G1(A5) construction", a5_first_level},
      {"A5 level 1", a5_level1},
      {"M0(A5) at p=5", a5_p5_module},
      {"A4 split tower", a4_split},
      {"G1(A4) Schur quotients", a4_schur},
      {"A5 completeness", a5_gcomplete},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty() && c.failures.empty();
    failed += !ok;
    std::printf("%s %zu %s (%zu assertions, %.2fs)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, c.assertions,
                secs);
    if (!error.empty()) std::printf("  exception: %s\n", error.c_str());
    for (const auto& f : c.failures) std::printf("  failed: %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}
