#include "mt/frattini/towers.hpp"

#include <functional>

#include "mt/error.hpp"
#include "mt/groups/todd_coxeter.hpp"

namespace mt {

GroupPtr dihedral_group(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "dihedral groups need n >= 3");
  std::vector<std::uint32_t> r(n);
  std::vector<std::uint32_t> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint32_t>((i + 1) % n);
    s[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return group_from_generators({Perm(r), Perm(s)}, 2 * n);
}

FrattiniLevel dihedral_level(unsigned p, unsigned k, std::size_t max_order) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::InvalidArgument, "dihedral towers need an odd prime");
  std::size_t n = p;
  for (unsigned i = 0; i < k; ++i) {
    n *= p;
    if (2 * n > max_order) throw Error(ErrorKind::OrderExceeded, "dihedral level exceeds the order budget");
  }
  if (2 * n > max_order) throw Error(ErrorKind::OrderExceeded, "dihedral level exceeds the order budget");
  auto total = dihedral_group(n);
  auto pres = Presentation::parse("gens: r s\nr^" + std::to_string(n) + "\ns^2\n(rs)^2\n");
  PresentedGroup tp{pres, total, total->generators()};
  tp.validate();
  if (k == 0) return make_level(tp, total, total->generators(), p, {});
  auto base = dihedral_group(n / p);
  Elem kern = total->pow(total->generator(0), static_cast<long long>(n / p));
  return make_level(tp, base, base->generators(), p, {kern});
}

namespace {

Vec exponent_sums(const Word& w, std::size_t d, unsigned p) {
  std::vector<long long> acc(d, 0);
  for (int x : w) acc[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  Vec v(d);
  Field f(p);
  for (std::size_t i = 0; i < d; ++i) v[i] = f.reduce(acc[i]);
  return v;
}

Word shifted(const Word& w, int by) {
  Word out;
  for (int x : w) out.push_back(x > 0 ? x + by : x - by);
  return out;
}

Word vector_word(const Vec& v, std::size_t offset) {
  Word w;
  for (std::size_t l = 0; l < v.size(); ++l)
    for (unsigned e = 0; e < v[l]; ++e) w.push_back(static_cast<int>(offset + l) + 1);
  return w;
}

}  // namespace

SplitLevel split_level(const GModule& v, std::size_t max_cosets) {
  const FiniteGroup& H = *v.group();
  const std::size_t d = v.dim();
  const unsigned p = v.p();
  const std::size_t e = H.generator_count();
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "P_0 must be nontrivial");

  Presentation elem;
  for (std::size_t j = 0; j < d; ++j) elem.generator_names.push_back("x" + std::to_string(j + 1));
  for (std::size_t j = 0; j < d; ++j) {
    elem.add_relator(power_word({static_cast<int>(j) + 1}, static_cast<int>(p)));
    for (std::size_t l = j + 1; l < d; ++l) elem.add_relator(commutator_word({static_cast<int>(j) + 1}, {static_cast<int>(l) + 1}));
  }
  SchreierData phi = schreier_generators(todd_coxeter(elem, {}, max_cosets));

  Presentation p1pres;
  p1pres.generator_names = elem.generator_names;
  for (std::size_t i = 0; i < phi.generators.size(); ++i) {
    p1pres.add_relator(power_word(phi.generators[i], static_cast<int>(p)));
    for (std::size_t l = i + 1; l < phi.generators.size(); ++l)
      p1pres.add_relator(commutator_word(phi.generators[i], phi.generators[l]));
  }
  SplitLevel out;
  FiniteGroup p1 = group_from_presentation(p1pres, max_cosets);
  out.p1_order = p1.order();
  std::size_t expect = 1;
  for (std::size_t i = 0; i < d + phi.generators.size(); ++i) expect *= p;
  if (p1.order() != expect) throw Error(ErrorKind::InvariantViolation, "P_1 has unexpected order");

  // Candidate images of x_j under h_k: elements of P_1 over row j of V(h_k).
  std::vector<Vec> coords(p1.order());
  for (Elem u = 0; u < p1.order(); ++u) coords[u] = exponent_sums(p1.free_word(u), d, p);
  Presentation hpres = cayley_presentation(H);
  std::vector<std::vector<std::vector<Elem>>> autos;  // per k: list of automorphism maps
  std::vector<std::vector<std::vector<Elem>>> tuples;
  for (std::size_t k = 0; k < e; ++k) {
    const Matrix& a = v.generator_action()[k];
    std::vector<std::vector<Elem>> cand(d);
    for (std::size_t j = 0; j < d; ++j)
      for (Elem u = 0; u < p1.order(); ++u)
        if (coords[u] == a.row(j)) cand[j].push_back(u);
    std::vector<std::size_t> idx(d, 0);
    autos.emplace_back();
    tuples.emplace_back();
    while (true) {
      std::vector<Elem> images(d);
      for (std::size_t j = 0; j < d; ++j) images[j] = cand[j][idx[j]];
      try {
        autos.back().push_back(homomorphism_from_generators(p1, p1, images));
        tuples.back().push_back(images);
      } catch (const Error&) {
      }
      std::size_t j = d;
      while (j-- > 0) {
        if (++idx[j] < cand[j].size()) break;
        idx[j] = 0;
      }
      if (j == SIZE_MAX) break;
    }
  }
  auto inverse_map = [](const std::vector<Elem>& m) {
    std::vector<Elem> inv(m.size());
    for (Elem x = 0; x < m.size(); ++x) inv[m[x]] = x;
    return inv;
  };
  std::vector<std::size_t> choice(e, 0);
  std::vector<std::vector<Elem>> inv(e);
  // Relators are checked once every letter they use has been assigned.
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == e) return true;
    for (std::size_t c = 0; c < autos[k].size(); ++c) {
      choice[k] = c;
      inv[k] = inverse_map(autos[k][c]);
      bool ok = true;
      for (const auto& r : hpres.relators) {
        int top = 0;
        for (int x : r) top = std::max(top, std::abs(x));
        if (top != static_cast<int>(k) + 1) continue;
        for (std::size_t j = 0; j < d && ok; ++j) {
          Elem y = p1.generator(j);
          for (int x : r) {
            std::size_t kk = static_cast<std::size_t>(std::abs(x) - 1);
            y = x > 0 ? autos[kk][choice[kk]][y] : inv[kk][y];
          }
          ok = y == p1.generator(j);
        }
        if (!ok) break;
      }
      if (ok && search(k + 1)) return true;
    }
    return false;
  };
  if (!search(0)) throw Error(ErrorKind::ActionLiftFailed, "no lift of the H action to P_1 satisfies the H relators");

  Presentation g1;
  Presentation g0;
  g1.generator_names = elem.generator_names;
  for (std::size_t k = 0; k < e; ++k) g1.generator_names.push_back("h" + std::to_string(k + 1));
  g0.generator_names = g1.generator_names;
  for (const auto& r : p1pres.relators) g1.add_relator(r);
  for (const auto& r : elem.relators) g0.add_relator(r);
  for (const auto& r : hpres.relators) {
    g1.add_relator(shifted(r, static_cast<int>(d)));
    g0.add_relator(shifted(r, static_cast<int>(d)));
  }
  out.action_lift.resize(e);
  for (std::size_t k = 0; k < e; ++k) {
    Word h{static_cast<int>(d + k) + 1};
    std::string note = "h" + std::to_string(k + 1) + ":";
    for (std::size_t j = 0; j < d; ++j) {
      Word x{static_cast<int>(j) + 1};
      Word lhs = concat(concat(inverse_word(h), x), h);
      Word img = p1.free_word(tuples[k][choice[k]][j]);
      out.action_lift[k].push_back(img);
      note += " x" + std::to_string(j + 1) + "->" + p1pres.format_word(img);
      g1.add_relator(concat(lhs, inverse_word(img)));
      g0.add_relator(concat(lhs, inverse_word(vector_word(v.generator_action()[k].row(j), 0))));
    }
    out.level.notes.push_back(note);
  }
  auto g1grp = make_group(group_from_presentation(g1, max_cosets));
  auto g0grp = make_group(group_from_presentation(g0, max_cosets));
  std::size_t p0_order = 1;
  for (std::size_t j = 0; j < d; ++j) p0_order *= p;
  if (g1grp->order() != p1.order() * H.order() || g0grp->order() != p0_order * H.order())
    throw Error(ErrorKind::InvariantViolation, "semidirect product has unexpected order");
  std::vector<Elem> basis;
  for (const auto& w : phi.generators) basis.push_back(g1grp->evaluate(w));
  auto notes = out.level.notes;
  out.level = make_level(PresentedGroup{g1, g1grp, g1grp->generators()}, g0grp, g0grp->generators(), p, basis);
  out.level.notes = notes;
  out.base = PresentedGroup{g0, g0grp, g0grp->generators()};
  return out;
}

FirstLevel first_level(const PresentedGroup& g, unsigned p, std::size_t max_cosets) {
  const FiniteGroup& G = *g.group;
  FirstLevel out;
  out.sylow = sylow_subgroup(G, p);
  out.normalizer = normalizer(G, out.sylow);
  out.complement = p_prime_complement(G, out.normalizer, p);
  auto basis = elementary_abelian_basis(G, out.sylow, p);
  const std::size_t d = basis.size();

  // Coordinates on P_0 with respect to the chosen basis.
  std::vector<std::int64_t> code(G.order(), -1);
  std::size_t count = out.sylow.order();
  for (std::size_t idx = 0; idx < count; ++idx) {
    Elem x = FiniteGroup::kIdentity;
    std::size_t t = idx;
    for (std::size_t l = d; l-- > 0;) {
      x = G.mul(G.pow(basis[l], static_cast<long long>(t % p)), x);
      t /= p;
    }
    code[x] = static_cast<std::int64_t>(idx);
  }
  auto coords = [&](Elem x) {
    std::int64_t c = code[x];
    if (c < 0) throw Error(ErrorKind::InvariantViolation, "element outside the Sylow subgroup");
    Vec v(d);
    for (std::size_t l = d; l-- > 0;) {
      v[l] = static_cast<std::uint8_t>(c % p);
      c /= p;
    }
    return v;
  };
  std::vector<Elem> emb_h;
  auto hgrp = make_group(G.subgroup(out.complement.generators, &emb_h));
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < hgrp->generator_count(); ++k) {
    Elem h = emb_h[hgrp->generator(k)];
    Matrix m(d, d, p);
    for (std::size_t j = 0; j < d; ++j) m.set_row(j, coords(G.conj(basis[j], h)));
    mats.push_back(std::move(m));
  }
  GModule v(hgrp, p, std::move(mats));
  out.local = split_level(v, max_cosets);

  std::vector<Elem> images = basis;
  for (std::size_t k = 0; k < hgrp->generator_count(); ++k) images.push_back(emb_h[hgrp->generator(k)]);
  out.local_embedding = homomorphism_from_generators(*out.local.level.base, G, images);
  if (G.closure(images).size() != out.local.level.base->order())
    throw Error(ErrorKind::InvariantViolation, "normalizer is not the expected semidirect product");

  std::size_t expected = G.order();
  if (out.normalizer.order() == G.order()) {
    FrattiniLevel lvl = make_level(out.local.level.total, g.group, images, p, out.local.level.kernel_basis);
    lvl.notes = out.local.level.notes;
    out.m0 = lvl.kernel_module;
    out.summands = {Subspace::whole(p, out.m0.dim())};
    out.h2_dimension = tail_space(g, out.m0).complement.size();
    out.level = std::move(lvl);
    return out;
  }
  GModule ind = induce(out.local.level.kernel_module, g.group, out.local_embedding);
  out.summands = decompose(ind);
  bool found = false;
  for (std::size_t i = 0; i < out.summands.size() && !found; ++i) {
    GModule piece = out.summands.size() == 1 ? ind : ind.restrict_to(out.summands[i]);
    std::size_t h = tail_space(g, piece).complement.size();
    if (h > 0) {
      out.chosen = i;
      out.m0 = piece;
      out.h2_dimension = h;
      found = true;
    }
  }
  out.induced = std::move(ind);
  if (!found) throw Error(ErrorKind::InvariantViolation, "no summand of the induced module has nonzero H^2");
  for (std::size_t i = 0; i < out.m0.dim(); ++i) {
    expected *= p;
    if (expected > max_cosets) return out;
  }
  auto h2 = h2_classes(g, out.m0, max_cosets, false);
  out.level = build_extension(g, out.m0, h2.classes.at(1), max_cosets);
  return out;
}

}  // namespace mt
