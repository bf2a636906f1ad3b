#include "mt/schur/schur.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mt/error.hpp"

namespace mt {

namespace {

Vec vec_at(const FrattiniLevel& level, std::size_t i) { return level.kernel_vector(level.kernel_elements[i]); }

std::size_t index_at(const FrattiniLevel& level, const Vec& v) {
  return static_cast<std::size_t>(level.kernel_index[level.kernel_element(v)]);
}

// The subgroup <m_i, m_j> as kernel indices.
std::vector<std::size_t> span_indices(const FrattiniLevel& level, std::size_t i, std::size_t j) {
  const unsigned p = level.p;
  Vec a = vec_at(level, i), b = vec_at(level, j);
  std::set<std::size_t> out;
  for (unsigned x = 0; x < p; ++x)
    for (unsigned y = 0; y < p; ++y) out.insert(index_at(level, vec_add(vec_scale(a, x, p), vec_scale(b, y, p), p)));
  return {out.begin(), out.end()};
}

bool independent(const FrattiniLevel& level, std::size_t i, std::size_t j) {
  return span_indices(level, i, j).size() == static_cast<std::size_t>(level.p) * level.p;
}

void check_compatible(const CentralExt& e, const FrattiniLevel& level) {
  if (e.ext.base.get() != level.total.group.get())
    throw Error(ErrorKind::IncompatibleLevels, "extension is not over the level's total group");
}

Elem lift(const CentralExt& e, const FrattiniLevel& level, std::size_t i) {
  return e.ext.section[level.kernel_elements[i]];
}

// Elements of R over M_k.
std::vector<Elem> mhat(const CentralExt& e, const FrattiniLevel& level) {
  std::vector<Elem> out;
  for (Elem m : level.kernel_elements) {
    auto f = e.ext.fiber(m);
    out.insert(out.end(), f.begin(), f.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CentralExt> enumerate_schur_quotients(const PresentedGroup& g, unsigned p, std::size_t max_cosets) {
  if (!is_p_perfect(*g.group, p)) throw Error(ErrorKind::NotPPerfect, "group has a Z/p quotient");
  GModule triv = GModule::trivial(g.group, p, 1);
  H2Result h2 = h2_classes(g, triv, max_cosets, false);
  std::vector<CentralExt> out;
  const std::size_t h = h2.dimension;
  if (h == 0) return out;
  // Projective points of F_p^h: first nonzero coordinate 1, lexicographic.
  std::size_t total = 1;
  for (std::size_t i = 0; i < h; ++i) total *= p;
  for (std::size_t code = 1; code < total; ++code) {
    Vec c(h);
    std::size_t x = code;
    for (std::size_t i = h; i-- > 0;) {
      c[i] = static_cast<std::uint8_t>(x % p);
      x /= p;
    }
    auto first = std::find_if(c.begin(), c.end(), [](auto v) { return v != 0; });
    if (*first != 1) continue;
    TailVector tail(h2.basis[0].size(), 0);
    for (std::size_t i = 0; i < h; ++i) tail = vec_add(tail, vec_scale(h2.basis[i], c[i], p), p);
    out.push_back({build_extension(g, triv, tail, max_cosets), c});
  }
  return out;
}

VDSet vd_set(const CentralExt& e, const FrattiniLevel& level) {
  check_compatible(e, level);
  const auto& R = e.group();
  const std::size_t n = level.kernel_elements.size();
  VDSet vd;
  vd.in.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto f = e.ext.fiber(level.kernel_elements[i]);
    Elem first = R.pow(f[0], level.p);
    for (Elem x : f)
      if (R.pow(x, level.p) != first) throw Error(ErrorKind::InvariantViolation, "m-hat^p depends on the lift");
    if (first == FiniteGroup::kIdentity) {
      vd.in[i] = true;
      vd.members.push_back(i);
    }
  }
  bool closed = true;
  for (std::size_t a : vd.members) {
    for (std::size_t b : vd.members)
      if (!vd.in[index_at(level, vec_add(vec_at(level, a), vec_at(level, b), level.p))]) closed = false;
    for (const auto& A : level.kernel_module.generator_action())
      if (!vd.in[index_at(level, vec_times(vec_at(level, a), A))]) closed = false;
  }
  vd.is_submodule = closed;
  return vd;
}

const char* to_string(P3Type t) {
  switch (t) {
    case P3Type::Klein4: return "Klein4";
    case P3Type::D4: return "D4";
    case P3Type::Q8: return "Q8";
    case P3Type::Z4xZ2: return "Z4xZ2";
    case P3Type::ElemAbelian: return "ElemAbelian";
    case P3Type::Up: return "Up";
    case P3Type::Hp_Wp: return "Hp_Wp";
    case P3Type::Zp2xZp: return "Zp2xZp";
  }
  return "?";
}

GroupInvariants invariants_of(const FiniteGroup& g, const std::vector<Elem>& elements, unsigned p) {
  GroupInvariants inv;
  inv.order = elements.size();
  inv.abelian = true;
  for (Elem x : elements) {
    unsigned o = g.element_order(x);
    inv.exponent = std::lcm(inv.exponent, o);
    inv.order_p += o == p;
  }
  for (std::size_t i = 0; i < elements.size() && inv.abelian; ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (g.mul(elements[i], elements[j]) != g.mul(elements[j], elements[i])) {
        inv.abelian = false;
        break;
      }
  return inv;
}

bool allowed_pair_type(P3Type t, bool first_in_vd, bool second_in_vd, unsigned p) {
  std::vector<P3Type> ok;
  if (first_in_vd && second_in_vd) {
    ok = p == 2 ? std::vector{P3Type::Klein4, P3Type::D4}
                : std::vector{P3Type::ElemAbelian, P3Type::Up, P3Type::Hp_Wp};
  } else if (!first_in_vd && !second_in_vd) {
    ok = p == 2 ? std::vector{P3Type::Z4xZ2, P3Type::Q8} : std::vector{P3Type::Zp2xZp, P3Type::Up};
  } else {
    // U_2 is the dihedral group of order 8.
    ok = p == 2 ? std::vector{P3Type::Z4xZ2, P3Type::D4} : std::vector{P3Type::Zp2xZp, P3Type::Up};
  }
  return std::find(ok.begin(), ok.end(), t) != ok.end();
}

P3Type classify_pair(const CentralExt& e, const FrattiniLevel& level, const VDSet& vd, std::size_t i1,
                     std::size_t i2) {
  check_compatible(e, level);
  if (!independent(level, i1, i2)) throw Error(ErrorKind::RankDeficient, "pair spans less than a plane");
  const auto& R = e.group();
  const unsigned p = level.p;
  Elem gens[] = {lift(e, level, i1), lift(e, level, i2)};
  auto inv = invariants_of(R, R.closure(gens), p);
  const std::size_t p2 = static_cast<std::size_t>(p) * p;
  P3Type t;
  if (inv.order == p2) {
    t = p == 2 ? P3Type::Klein4 : P3Type::ElemAbelian;
  } else if (inv.order == p2 * p) {
    if (inv.abelian) {
      t = inv.exponent == p ? P3Type::ElemAbelian : (p == 2 ? P3Type::Z4xZ2 : P3Type::Zp2xZp);
    } else if (p == 2) {
      t = inv.order_p == 5 ? P3Type::D4 : P3Type::Q8;
    } else {
      t = inv.exponent == p ? P3Type::Hp_Wp : P3Type::Up;
    }
  } else {
    throw Error(ErrorKind::InvariantViolation, "lifted pair has order " + std::to_string(inv.order));
  }
  if (!allowed_pair_type(t, vd.in[i1], vd.in[i2], p))
    throw Error(ErrorKind::InvariantViolation, std::string("pair type ") + to_string(t) + " not allowed");
  return t;
}

ModAssume check_modassume(const FrattiniLevel& level, const VDSet& vd) {
  const std::size_t n = vd.in.size();
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < n; ++i)
    if (!vd.in[i]) outside.push_back(i);
  ModAssume m;
  m.a = true;
  for (std::size_t x = 0; x < outside.size() && m.a; ++x) {
    for (std::size_t y = x + 1; y < outside.size(); ++y) {
      if (!independent(level, outside[x], outside[y])) continue;
      bool hit = false;
      for (std::size_t s : span_indices(level, outside[x], outside[y]))
        if (s != 0 && vd.in[s]) hit = true;
      if (!hit) {
        m.a = false;
        break;
      }
    }
  }
  std::vector<Vec> vs;
  for (std::size_t i : outside) vs.push_back(vec_at(level, i));
  m.b = !outside.empty() && Subspace::span(level.p, level.kernel_dim(), vs).dim() == level.kernel_dim();
  m.c = vd.is_submodule;
  return m;
}

AbelianWitness abelian_test(const CentralExt& e, const FrattiniLevel& level, const VDSet& vd) {
  check_compatible(e, level);
  AbelianWitness w;
  auto it = std::find(vd.in.begin(), vd.in.end(), false);
  if (it == vd.in.end()) throw Error(ErrorKind::NoAlpha, "every element of M_k lifts to order p");
  w.alpha = static_cast<std::size_t>(it - vd.in.begin());
  const auto& R = e.group();
  const std::size_t d = level.kernel_dim();
  std::vector<Elem> lifts;
  for (std::size_t l = 0; l < d; ++l) lifts.push_back(e.ext.section[level.kernel_basis[l]]);
  w.abelian = true;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      if (R.commutator(lifts[a], lifts[b]) != FiniteGroup::kIdentity) w.abelian = false;
  if (w.abelian) {
    // |{x : x^p = 1}| = p |V_D| = p^(wide + narrow); |M-hat| = p^(2 wide + narrow).
    std::size_t omega = 0;
    for (std::size_t s = vd.members.size() * level.p; s > 1; s /= level.p) ++omega;
    w.wide = d + 1 - omega;
    w.narrow = omega - w.wide;
  }
  std::set<std::size_t> covered;
  Vec alpha = vec_at(level, w.alpha);
  for (std::size_t v : vd.members)
    for (unsigned j = 0; j < level.p; ++j)
      covered.insert(index_at(level, vec_add(vec_at(level, v), vec_scale(alpha, j, level.p), level.p)));
  w.cosets_cover = covered.size() == vd.in.size();
  return w;
}

AntecedentResult antecedent_test(const CentralExt& prev, const CentralExt& e, const FrattiniLevel& level) {
  check_compatible(e, level);
  if (prev.ext.base.get() != level.base.get())
    throw Error(ErrorKind::IncompatibleLevels, "antecedent is not over the level's base");
  const auto& G = level.total_group();
  const auto& Rp = prev.group();
  const auto& pres = level.total;
  if (pres.generator_images != G.generators())
    throw Error(ErrorKind::InvalidArgument, "level presentation generators differ from the group generators");
  const std::size_t d = pres.generator_images.size();
  std::vector<std::vector<Elem>> cand(d);
  for (std::size_t j = 0; j < d; ++j) cand[j] = prev.ext.fiber(level.projection[pres.generator_images[j]]);
  std::vector<std::size_t> pick(d, 0);
  PresentedGroup trial{pres.presentation, prev.ext.total.group, std::vector<Elem>(d)};
  AntecedentResult res;
  while (true) {
    for (std::size_t j = 0; j < d; ++j) trial.generator_images[j] = cand[j][pick[j]];
    bool ok = true;
    for (const auto& r : pres.presentation.relators) {
      if (trial.evaluate(r) != FiniteGroup::kIdentity) {
        ok = false;
        break;
      }
    }
    if (ok) {
      res.map = homomorphism_from_generators(G, Rp, trial.generator_images);
      break;
    }
    std::size_t j = d;
    while (j-- > 0) {
      if (++pick[j] < cand[j].size()) break;
      pick[j] = 0;
    }
    if (j == SIZE_MAX) throw Error(ErrorKind::IncompatibleLevels, "no map onto the antecedent candidate");
  }
  VDSet vd = vd_set(e, level);
  res.in_kernel.assign(level.kernel_elements.size(), false);
  for (std::size_t i = 0; i < level.kernel_elements.size(); ++i) {
    res.in_kernel[i] = res.map[level.kernel_elements[i]] == FiniteGroup::kIdentity;
  }
  // m lifts to order p^2 in R exactly when it survives in R_prev.
  res.antecedent = res.in_kernel == vd.in && std::find(vd.in.begin(), vd.in.end(), false) != vd.in.end();
  return res;
}

namespace {

std::string invariant_name(const GroupInvariants& inv) {
  if (inv.order == 16 && inv.abelian && inv.exponent == 4 && inv.order_p == 7) return "K4+Z4";
  if (inv.order == 16 && !inv.abelian && inv.order_p == 3) return "Q8+Z2";
  if (inv.order == 16 && !inv.abelian && inv.order_p == 7) return "Q8.Z4";
  if (inv.abelian && inv.exponent == inv.order) return "Z" + std::to_string(inv.order);
  return "order " + std::to_string(inv.order) + (inv.abelian ? " abelian" : " nonabelian") + " exponent " +
         std::to_string(inv.exponent) + " with " + std::to_string(inv.order_p) + " elements of order p";
}

}  // namespace

std::string slice_display(const CentralExt& e, const FrattiniLevel& level, const VDSet& vd) {
  check_compatible(e, level);
  const auto& R = e.group();
  const unsigned p = level.p;
  Subspace rad = radical(level.kernel_module);
  for (const auto& v : rad.elements())
    if (!vd.in[index_at(level, v)]) return "rad not in V_D";
  auto all = mhat(e, level);
  std::vector<std::vector<Elem>> options;
  for (const auto& b : rad.basis()) {
    std::vector<Elem> opts;
    for (Elem x : e.ext.fiber(level.kernel_element(b)))
      if (R.pow(x, p) == FiniteGroup::kIdentity) opts.push_back(x);
    options.push_back(opts);
  }
  const std::size_t t = rad.dim();
  std::size_t want = 1;
  for (std::size_t i = 0; i < t; ++i) want *= p;
  std::vector<std::size_t> pick(t, 0);
  while (true) {
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < t; ++i) gens.push_back(options[i][pick[i]]);
    auto sub = R.closure(gens);
    bool normal = sub.size() == want;
    for (std::size_t k = 0; normal && k < all.size(); ++k)
      for (Elem s : gens)
        if (!std::binary_search(sub.begin(), sub.end(), R.conj(s, all[k]))) {
          normal = false;
          break;
        }
    if (normal) {
      // Quotient invariants: order mod L, commutators in L.
      auto in_sub = [&](Elem x) { return std::binary_search(sub.begin(), sub.end(), x); };
      std::set<Elem> reps;
      GroupInvariants inv;
      inv.abelian = true;
      for (Elem x : all) {
        Elem rep = x;
        for (Elem s : sub) rep = std::min(rep, R.mul(x, s));
        if (!reps.insert(rep).second) continue;
        unsigned o = 1;
        for (Elem y = x; !in_sub(y); y = R.mul(y, x)) ++o;
        inv.exponent = std::lcm(inv.exponent, o);
        inv.order_p += o == p;
      }
      inv.order = reps.size();
      for (Elem x : reps)
        for (Elem y : reps)
          if (!in_sub(R.commutator(x, y))) inv.abelian = false;
      auto labels = loewy_layers(level.kernel_module.restrict_to(rad)).layers;
      std::string left;
      for (const auto& layer : labels)
        for (const auto& s : layer) left += (left.empty() ? "" : "+") + s.name();
      return left + " -> " + invariant_name(inv);
    }
    std::size_t j = t;
    while (j-- > 0) {
      if (++pick[j] < options[j].size()) break;
      pick[j] = 0;
    }
    if (j == SIZE_MAX) return "no normal lift of rad";
  }
}

std::map<std::string, std::size_t> p3_census(const CentralExt& e, const FrattiniLevel& level, const VDSet& vd) {
  std::map<std::string, std::size_t> out;
  const std::size_t n = vd.in.size();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (independent(level, i, j)) ++out[to_string(classify_pair(e, level, vd, i, j))];
  return out;
}

std::vector<std::string> verify_schur_properties(const CentralExt& e, const FrattiniLevel& level, const VDSet& vd,
                                                 std::size_t* assertions) {
  std::vector<std::string> bad;
  std::size_t count = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++count;
    if (!ok) bad.push_back(what);
  };
  const auto& R = e.group();
  const unsigned p = level.p;
  const std::size_t n = vd.in.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto f = e.ext.fiber(level.kernel_elements[i]);
    for (Elem x : f) expect(R.pow(x, p) == R.pow(f[0], p), "lift dependence at " + std::to_string(i));
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!independent(level, i, j)) continue;
      P3Type t;
      try {
        t = classify_pair(e, level, vd, i, j);
      } catch (const Error& err) {
        expect(false, err.what());
        continue;
      }
      expect(true, "");
      if (!vd.in[i] && !vd.in[j]) {
        bool meets = false;
        for (std::size_t s : span_indices(level, i, j))
          if (s != 0 && vd.in[s]) meets = true;
        if (meets)
          expect(t == (p == 2 ? P3Type::Z4xZ2 : P3Type::Zp2xZp),
                 "corollary fails for pair " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  auto ma = check_modassume(level, vd);
  AbelianWitness w;
  try {
    w = abelian_test(e, level, vd);
    expect(true, "");
  } catch (const Error& err) {
    expect(false, err.what());
    if (assertions) *assertions += count;
    return bad;
  }
  if (ma.a && ma.b) {
    expect(w.abelian, "(a) and (b) hold but M-hat is not abelian");
    expect(ma.c, "(a) and (b) hold but (c) fails");
    expect(w.cosets_cover, "(a) and (b) hold but V_D alpha^j do not cover");
  }
  if (w.abelian) expect(ma.c, "M-hat abelian but V_D is not a submodule");
  if (p == 2 && ma.a && ma.c) expect(w.abelian, "(a) and (c) hold but M-hat is not abelian");
  if (assertions) *assertions += count;
  return bad;
}

std::vector<std::vector<std::size_t>> outside_orbits(const FrattiniLevel& level, const VDSet& vd) {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(vd.in.size(), false);
  for (std::size_t i = 0; i < vd.in.size(); ++i) {
    if (vd.in[i] || seen[i]) continue;
    std::vector<std::size_t> o{i};
    seen[i] = true;
    for (std::size_t k = 0; k < o.size(); ++k) {
      for (const auto& A : level.kernel_module.generator_action()) {
        std::size_t j = index_at(level, vec_times(vec_at(level, o[k]), A));
        if (!seen[j]) {
          seen[j] = true;
          o.push_back(j);
        }
      }
    }
    std::sort(o.begin(), o.end());
    orbits.push_back(std::move(o));
  }
  return orbits;
}

nlohmann::ordered_json schur_report(const std::vector<CentralExt>& quotients, const FrattiniLevel& level,
                                    const std::vector<CentralExt>& previous) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& e : quotients) {
    auto vd = vd_set(e, level);
    auto ma = check_modassume(level, vd);
    nlohmann::ordered_json q;
    q["kernel_gen"] = e.group().label(e.center_gen());
    q["vd_size"] = vd.members.size();
    q["modassume"] = {ma.a, ma.b, ma.c};
    q["abelian"] = abelian_test(e, level, vd).abelian;
    q["display"] = slice_display(e, level, vd);
    q["p3_census"] = p3_census(e, level, vd);
    std::vector<std::size_t> ante;
    for (std::size_t i = 0; i < previous.size(); ++i)
      if (antecedent_test(previous[i], e, level).antecedent) ante.push_back(i);
    q["antecedent_of"] = ante;
    out.push_back(q);
  }
  return out;
}

}  // namespace mt
