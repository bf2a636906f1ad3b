#include "mt/frattini/cohomology.hpp"

#include <cmath>

#include "mt/error.hpp"
#include "mt/groups/todd_coxeter.hpp"

namespace mt {

std::vector<Matrix> generator_matrices(const PresentedGroup& pg, const GModule& m) {
  if (pg.group != m.group()) throw Error(ErrorKind::DimensionMismatch, "module is over a different group");
  std::vector<Matrix> out;
  for (Elem g : pg.generator_images) out.push_back(m.matrix_of(g));
  return out;
}

namespace {

// Per relator position k, the matrix C_k such that the relator trace picks
// up c * C_k from the edge crossed at step k (sign folded in).
std::vector<Matrix> position_coefficients(const Word& r, const std::vector<Matrix>& a,
                                          const std::vector<Matrix>& ainv, unsigned p) {
  std::size_t n = a.empty() ? 0 : a[0].rows();
  std::vector<Matrix> coeff(r.size());
  Matrix suffix = Matrix::identity(n, p);
  for (std::size_t k = r.size(); k-- > 0;) {
    std::size_t j = static_cast<std::size_t>(std::abs(r[k]) - 1);
    if (r[k] > 0) {
      coeff[k] = suffix;
      suffix = a[j] * suffix;
    } else {
      coeff[k] = (ainv[j] * suffix).scaled(p - 1);
      suffix = ainv[j] * suffix;
    }
  }
  if (!suffix.is_identity()) throw Error(ErrorKind::InvariantViolation, "relator does not act trivially on the module");
  return coeff;
}

}  // namespace

Matrix fox_matrix(const PresentedGroup& pg, const GModule& m) {
  auto a = generator_matrices(pg, m);
  std::vector<Matrix> ainv;
  for (const auto& x : a) ainv.push_back(x.inverse());
  std::size_t n = m.dim();
  std::size_t d = pg.presentation.generator_count();
  std::size_t s = pg.presentation.relators.size();
  unsigned p = m.p();
  Matrix f(d * n, s * n, p);
  for (std::size_t i = 0; i < s; ++i) {
    const Word& r = pg.presentation.relators[i];
    auto coeff = position_coefficients(r, a, ainv, p);
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::size_t j = static_cast<std::size_t>(std::abs(r[k]) - 1);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          f(j * n + u, i * n + v) = static_cast<std::uint8_t>((f(j * n + u, i * n + v) + coeff[k](u, v)) % p);
    }
  }
  return f;
}

TailSpace tail_space(const PresentedGroup& pg, const GModule& m) {
  const FiniteGroup& G = *pg.group;
  auto a = generator_matrices(pg, m);
  std::vector<Matrix> ainv;
  for (const auto& x : a) ainv.push_back(x.inverse());
  std::size_t n = m.dim();
  std::size_t d = pg.presentation.generator_count();
  std::size_t s = pg.presentation.relators.size();
  unsigned p = m.p();
  std::size_t order = G.order();

  // Spanning tree of the Cayley graph for the presentation generators.
  std::vector<Elem> right(order * d);
  for (Elem g = 0; g < order; ++g)
    for (std::size_t j = 0; j < d; ++j) right[g * d + j] = G.mul(g, pg.generator_images[j]);
  std::vector<std::int64_t> edge(order * d, -1);
  std::vector<char> seen(order, 0);
  std::vector<Elem> queue{FiniteGroup::kIdentity};
  seen[0] = 1;
  std::vector<char> tree(order * d, 0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Elem y = right[queue[i] * d + j];
      if (!seen[y]) {
        seen[y] = 1;
        tree[queue[i] * d + j] = 1;
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != order) throw Error(ErrorKind::InvariantViolation, "presentation generators do not generate");
  std::size_t edges = 0;
  for (std::size_t e = 0; e < order * d; ++e)
    if (!tree[e]) edge[e] = static_cast<std::int64_t>(edges++);
  std::vector<Elem> left_inv(order * d);  // g * x_j^-1
  for (Elem g = 0; g < order; ++g)
    for (std::size_t j = 0; j < d; ++j) left_inv[right[g * d + j] * d + j] = g;

  std::size_t cols = edges * n + s * n;
  std::size_t tail0 = edges * n;
  Echelon ech(p, cols);
  Field f(p);
  Vec row(cols);
  for (std::size_t i = 0; i < s; ++i) {
    const Word& r = pg.presentation.relators[i];
    auto coeff = position_coefficients(r, a, ainv, p);
    for (Elem g = 0; g < order; ++g) {
      // Collect (edge, position) pairs along the trace from g.
      std::vector<std::pair<std::int64_t, std::size_t>> hits;
      Elem cur = g;
      for (std::size_t k = 0; k < r.size(); ++k) {
        std::size_t j = static_cast<std::size_t>(std::abs(r[k]) - 1);
        if (r[k] > 0) {
          std::int64_t e = edge[cur * d + j];
          if (e >= 0) hits.emplace_back(e, k);
          cur = right[cur * d + j];
        } else {
          Elem prev = left_inv[cur * d + j];
          std::int64_t e = edge[prev * d + j];
          if (e >= 0) hits.emplace_back(e, k);
          cur = prev;
        }
      }
      if (cur != g) throw Error(ErrorKind::InvariantViolation, "relator does not hold in the group");
      for (std::size_t q = 0; q < n; ++q) {
        std::fill(row.begin(), row.end(), 0);
        for (auto [e, k] : hits)
          for (std::size_t u = 0; u < n; ++u)
            row[static_cast<std::size_t>(e) * n + u] = f.add(row[static_cast<std::size_t>(e) * n + u], coeff[k](u, q));
        row[tail0 + i * n + q] = f.neg(1);
        ech.insert(row);
      }
    }
  }
  // Rows whose pivot lies among the tail columns constrain t alone.
  std::vector<Vec> constraints;
  for (std::size_t i = 0; i < ech.rank(); ++i) {
    if (ech.pivots()[i] < tail0) continue;
    Vec r = ech.row(i);
    constraints.emplace_back(r.begin() + static_cast<long>(tail0), r.end());
  }
  TailSpace ts;
  ts.consistent = constraints.empty() ? Subspace::whole(p, s * n)
                                      : right_kernel(Matrix::from_rows(constraints, s * n, p));
  Matrix fox = fox_matrix(pg, m);
  ts.coboundaries = Subspace::span(p, s * n, fox.row_list());
  if (!ts.consistent.contains(ts.coboundaries))
    throw Error(ErrorKind::InvariantViolation, "coboundary tails are not consistent");
  ts.complement = ts.coboundaries.complement_in(ts.consistent);
  return ts;
}

Presentation extension_presentation(const PresentedGroup& pg, const GModule& m, const TailVector& tail) {
  auto a = generator_matrices(pg, m);
  std::size_t n = m.dim();
  std::size_t d = pg.presentation.generator_count();
  unsigned p = m.p();
  Presentation out;
  out.generator_names = pg.presentation.generator_names;
  for (std::size_t l = 0; l < n; ++l) out.generator_names.push_back("m" + std::to_string(l + 1));
  auto mword = [&](const Vec& v) {
    Word w;
    for (std::size_t l = 0; l < n; ++l)
      for (unsigned e = 0; e < v[l]; ++e) w.push_back(static_cast<int>(d + l) + 1);
    return w;
  };
  for (std::size_t i = 0; i < pg.presentation.relators.size(); ++i) {
    Vec t(tail.begin() + static_cast<long>(i * n), tail.begin() + static_cast<long>((i + 1) * n));
    out.add_relator(concat(pg.presentation.relators[i], inverse_word(mword(t))));
  }
  for (std::size_t l = 0; l < n; ++l) {
    Word ml{static_cast<int>(d + l) + 1};
    out.add_relator(power_word(ml, static_cast<int>(p)));
    for (std::size_t l2 = l + 1; l2 < n; ++l2) out.add_relator(commutator_word(ml, {static_cast<int>(d + l2) + 1}));
  }
  for (std::size_t j = 0; j < d; ++j) {
    Word xj{static_cast<int>(j) + 1};
    for (std::size_t l = 0; l < n; ++l) {
      Word ml{static_cast<int>(d + l) + 1};
      Word lhs = concat(concat(inverse_word(xj), ml), xj);
      out.add_relator(concat(lhs, inverse_word(mword(a[j].row(l)))));
    }
  }
  return out;
}

FrattiniLevel build_extension(const PresentedGroup& pg, const GModule& m, const TailVector& tail,
                              std::size_t max_cosets) {
  std::size_t n = m.dim();
  if (tail.size() != pg.presentation.relators.size() * n)
    throw Error(ErrorKind::DimensionMismatch, "tail length must be relators * dim");
  Presentation ext = extension_presentation(pg, m, tail);
  std::size_t expected = pg.group->order();
  for (std::size_t i = 0; i < n; ++i) expected *= m.p();
  CosetTable t = todd_coxeter(ext, {}, max_cosets);
  if (t.index() != expected)
    throw Error(ErrorKind::Collapse, "extension has order " + std::to_string(t.index()) + ", expected " +
                                         std::to_string(expected));
  std::vector<std::vector<std::uint32_t>> action;
  for (std::size_t k = 0; k < ext.generator_count(); ++k) action.push_back(t.generator_action(k));
  auto total = make_group(FiniteGroup::from_right_action(action, 0, expected));
  PresentedGroup tp{ext, total, total->generators()};
  std::vector<Elem> images = pg.generator_images;
  std::size_t d = images.size();
  images.resize(d + n, FiniteGroup::kIdentity);
  std::vector<Elem> basis;
  for (std::size_t l = 0; l < n; ++l) basis.push_back(total->generator(d + l));
  FrattiniLevel level = make_level(std::move(tp), pg.group, images, m.p(), basis);
  // The conjugation module must reproduce the input module.
  if (level.kernel_module.generator_action() != m.generator_action())
    throw Error(ErrorKind::InvariantViolation, "extension kernel module differs from the input module");
  return level;
}

H2Result h2_classes(const PresentedGroup& pg, const GModule& m, std::size_t max_cosets, bool validate) {
  TailSpace ts = tail_space(pg, m);
  H2Result r;
  r.dimension = ts.complement.size();
  r.basis = ts.complement;
  unsigned p = m.p();
  std::size_t len = pg.presentation.relators.size() * m.dim();
  std::size_t count = 1;
  for (std::size_t i = 0; i < r.dimension; ++i) count *= p;
  Vec coeff(r.dimension, 0);
  for (std::size_t c = 0; c < count; ++c) {
    Vec t(len, 0);
    for (std::size_t i = 0; i < r.dimension; ++i)
      if (coeff[i]) t = vec_add(t, vec_scale(r.basis[i], coeff[i], p), p);
    if (validate) build_extension(pg, m, t, max_cosets);
    r.classes.push_back(std::move(t));
    for (std::size_t i = r.dimension; i-- > 0;) {
      if (++coeff[i] < p) break;
      coeff[i] = 0;
    }
  }
  return r;
}

}  // namespace mt
