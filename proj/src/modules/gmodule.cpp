#include "mt/modules/gmodule.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "mt/error.hpp"

namespace mt {

GModule::GModule(GroupPtr group, unsigned p, std::vector<Matrix> generator_action)
    : group_(std::move(group)), p_(p), gens_(std::move(generator_action)) {
  if (gens_.size() != group_->generator_count())
    throw Error(ErrorKind::DimensionMismatch, "need one action matrix per group generator");
  dim_ = gens_.empty() ? 0 : gens_[0].rows();
  for (const auto& a : gens_) {
    if (a.rows() != dim_ || a.cols() != dim_ || a.p() != p_)
      throw Error(ErrorKind::DimensionMismatch, "action matrices must be square of a common size over F_p");
  }
  const auto& G = *group_;
  all_.resize(G.order());
  all_[0] = Matrix::identity(dim_, p_);
  for (Elem x = 1; x < G.order(); ++x) all_[x] = all_[G.parent(x)] * gens_[G.parent_generator(x)];
  // Every Cayley edge must be respected; this covers all group relations.
  for (Elem x = 0; x < G.order(); ++x) {
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if (all_[x] * gens_[k] != all_[G.times_generator(x, k)])
        throw Error(ErrorKind::InvariantViolation, "action matrices do not satisfy the group relations");
    }
  }
}

GModule GModule::trivial(GroupPtr group, unsigned p, std::size_t dim) {
  std::vector<Matrix> gens(group->generator_count(), Matrix::identity(dim, p));
  return GModule(std::move(group), p, std::move(gens));
}

GModule GModule::dual() const {
  std::vector<Matrix> d;
  for (const auto& a : gens_) d.push_back(a.inverse().transpose());
  return GModule(group_, p_, std::move(d));
}

Subspace GModule::spin(const std::vector<Vec>& seeds) const {
  Echelon e(p_, dim_);
  std::vector<Vec> queue;
  for (const auto& s : seeds)
    if (e.insert(s)) queue.push_back(s);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& a : gens_) {
      Vec w = vec_times(queue[i], a);
      if (e.insert(w)) queue.push_back(std::move(w));
    }
  }
  return Subspace::span(p_, dim_, queue);
}

bool GModule::is_submodule(const Subspace& s) const {
  for (const auto& b : s.basis())
    for (const auto& a : gens_)
      if (!s.contains(vec_times(b, a))) return false;
  return true;
}

GModule GModule::restrict_to(const Subspace& s) const {
  if (!is_submodule(s)) throw Error(ErrorKind::InvalidArgument, "subspace is not a submodule");
  std::vector<Matrix> out;
  for (const auto& a : gens_) {
    Matrix m(s.dim(), s.dim(), p_);
    for (std::size_t i = 0; i < s.dim(); ++i) m.set_row(i, s.coordinates(vec_times(s.basis()[i], a)));
    out.push_back(std::move(m));
  }
  return GModule(group_, p_, std::move(out));
}

GModule GModule::quotient(const Subspace& s, std::vector<Vec>* lift_basis) const {
  if (!is_submodule(s)) throw Error(ErrorKind::InvalidArgument, "subspace is not a submodule");
  auto comp = s.complement_in(Subspace::whole(p_, dim_));
  std::vector<Vec> all = s.basis();
  all.insert(all.end(), comp.begin(), comp.end());
  Matrix binv = Matrix::from_rows(all, dim_, p_).inverse();
  std::size_t k = s.dim();
  std::size_t q = comp.size();
  std::vector<Matrix> out;
  for (const auto& a : gens_) {
    Matrix m(q, q, p_);
    for (std::size_t i = 0; i < q; ++i) {
      Vec coords = vec_times(vec_times(comp[i], a), binv);
      m.set_row(i, Vec(coords.begin() + static_cast<long>(k), coords.end()));
    }
    out.push_back(std::move(m));
  }
  if (lift_basis) *lift_basis = comp;
  return GModule(group_, p_, std::move(out));
}

GModule GModule::restrict_to_subgroup(GroupPtr sub, const std::vector<Elem>& embedding) const {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < sub->generator_count(); ++k) out.push_back(all_[embedding.at(sub->generator(k))]);
  return GModule(std::move(sub), p_, std::move(out));
}

bool GModule::is_trivial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Matrix& a) { return a.is_identity(); });
}

std::string GModule::to_text() const {
  std::ostringstream out;
  out << "p: " << p_ << "\ndim: " << dim_ << '\n';
  for (const auto& a : gens_) out << '\n' << a.to_string();
  return out.str();
}

GModule GModule::from_text(GroupPtr group, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  unsigned p = 0;
  std::size_t dim = 0;
  std::vector<Vec> rows;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line.erase(std::remove_if(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; }),
               line.end());
    if (line.empty()) continue;
    if (line.rfind("p:", 0) == 0) {
      p = static_cast<unsigned>(std::stoul(line.substr(2)));
    } else if (line.rfind("dim:", 0) == 0) {
      dim = std::stoul(line.substr(4));
    } else {
      Vec r;
      for (char c : line) {
        if (c < '0' || c > '9') throw Error(ErrorKind::Parse, "bad matrix row '" + line + "'");
        r.push_back(static_cast<std::uint8_t>(c - '0'));
      }
      rows.push_back(std::move(r));
    }
  }
  if (p == 0 || !is_prime(p) || p > 10) throw Error(ErrorKind::Parse, "module file needs a prime 'p:' below 10");
  if (dim == 0) throw Error(ErrorKind::Parse, "module file needs 'dim:'");
  if (rows.size() != dim * group->generator_count())
    throw Error(ErrorKind::Parse, "module file must hold one dim x dim matrix per generator");
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < group->generator_count(); ++k) {
    Matrix m(dim, dim, p);
    for (std::size_t i = 0; i < dim; ++i) {
      const Vec& r = rows[k * dim + i];
      if (r.size() != dim) throw Error(ErrorKind::Parse, "matrix row has the wrong length");
      for (auto x : r)
        if (x >= p) throw Error(ErrorKind::Parse, "matrix entry out of range");
      m.set_row(i, r);
    }
    gens.push_back(std::move(m));
  }
  return GModule(std::move(group), p, std::move(gens));
}

// ---------------------------------------------------------------------------

std::vector<Matrix> hom_basis(const GModule& m, const GModule& n) {
  if (m.group() != n.group() || m.p() != n.p())
    throw Error(ErrorKind::DimensionMismatch, "modules over different groups or fields");
  unsigned p = m.p();
  std::size_t a = m.dim();
  std::size_t b = n.dim();
  Field f(p);
  // Unknown X[i][j] at index i*b + j; equations (A X - X B)[i][j] = 0.
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < m.group()->generator_count(); ++k) {
    const Matrix& A = m.generator_action()[k];
    const Matrix& B = n.generator_action()[k];
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        Vec r(a * b, 0);
        for (std::size_t t = 0; t < a; ++t) r[t * b + j] = f.add(r[t * b + j], A(i, t));
        for (std::size_t t = 0; t < b; ++t) r[i * b + t] = f.sub(r[i * b + t], B(t, j));
        rows.push_back(std::move(r));
      }
    }
  }
  Subspace sol = rows.empty() ? Subspace::whole(p, a * b) : right_kernel(Matrix::from_rows(rows, a * b, p));
  std::vector<Matrix> out;
  for (const auto& v : sol.basis()) {
    Matrix x(a, b, p);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) x(i, j) = v[i * b + j];
    out.push_back(std::move(x));
  }
  return out;
}

GModule induce(const GModule& mprime, GroupPtr gptr, const std::vector<Elem>& embedding) {
  const auto& H = *mprime.group();
  const auto& G = *gptr;
  if (embedding.size() != H.order()) throw Error(ErrorKind::NotASubgroup, "embedding size does not match subgroup");
  for (Elem h = 0; h < H.order(); ++h) {
    for (std::size_t k = 0; k < H.generator_count(); ++k) {
      if (embedding[H.times_generator(h, k)] != G.mul(embedding[h], embedding[H.generator(k)]))
        throw Error(ErrorKind::NotASubgroup, "embedding is not a homomorphism");
    }
  }
  std::vector<std::int64_t> in_h(G.order(), -1);
  for (Elem h = 0; h < H.order(); ++h) {
    if (in_h[embedding[h]] >= 0) throw Error(ErrorKind::NotASubgroup, "embedding is not injective");
    in_h[embedding[h]] = h;
  }
  std::vector<Elem> reps;
  std::vector<std::size_t> coset_of(G.order(), SIZE_MAX);
  for (Elem g = 0; g < G.order(); ++g) {
    if (coset_of[g] != SIZE_MAX) continue;
    for (Elem h = 0; h < H.order(); ++h) coset_of[G.mul(embedding[h], g)] = reps.size();
    reps.push_back(g);
  }
  std::size_t n = mprime.dim();
  std::size_t idx = reps.size();
  unsigned p = mprime.p();
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < G.generator_count(); ++k) {
    Elem gk = G.generator(k);
    Matrix m(n * idx, n * idx, p);
    for (std::size_t i = 0; i < idx; ++i) {
      Elem x = G.mul(reps[i], gk);
      std::size_t j = coset_of[x];
      Elem h = G.mul(x, G.inv(reps[j]));
      const Matrix& block = mprime.matrix_of(static_cast<Elem>(in_h[h]));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m(i * n + a, j * n + b) = block(a, b);
    }
    gens.push_back(std::move(m));
  }
  return GModule(std::move(gptr), p, std::move(gens));
}

Subspace invariant_vectors(const GModule& m, const std::vector<Elem>& elems) {
  Subspace s = Subspace::whole(m.p(), m.dim());
  Matrix id = Matrix::identity(m.dim(), m.p());
  for (Elem e : elems) s = s.intersect(left_kernel(m.matrix_of(e) - id));
  return s;
}

unsigned involution_pairing(const Vec& v1, const Vec& v2, const std::vector<std::uint32_t>& h, unsigned p) {
  if (v1.size() != v2.size() || h.size() != v1.size())
    throw Error(ErrorKind::DimensionMismatch, "pairing arguments differ in length");
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] >= h.size() || h[h[i]] != i) throw Error(ErrorKind::NotInvolution, "basis permutation is not an involution");
  unsigned s = 0;
  for (std::size_t i = 0; i < v1.size(); ++i) s = (s + v1[i] * v2[h[i]]) % p;
  return s;
}

namespace {

Vec algebra_product(const FiniteGroup& g, const Vec& a, const Vec& b, unsigned p) {
  std::vector<unsigned> acc(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (!a[x]) continue;
    for (Elem y = 0; y < g.order(); ++y)
      if (b[y]) acc[g.mul(x, y)] += a[x] * b[y];
  }
  Vec out(g.order());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint8_t>(acc[i] % p);
  return out;
}

}  // namespace

bool frobenius_check(const FiniteGroup& g, unsigned p, std::size_t samples) {
  std::vector<std::uint32_t> h(g.order());
  for (Elem x = 0; x < g.order(); ++x) h[x] = g.inv(x);
  std::mt19937 rng(20240611);
  auto random_elem = [&] {
    Vec v(g.order());
    for (auto& x : v) x = static_cast<std::uint8_t>(rng() % p);
    return v;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    Vec a = random_elem();
    Vec b = random_elem();
    Vec c = random_elem();
    if (involution_pairing(algebra_product(g, a, b, p), c, h, p) != involution_pairing(a, algebra_product(g, b, c, p), h, p))
      return false;
  }
  return true;
}

GModule hopf_tensor(const GModule& m, const GModule& n) {
  if (m.group() != n.group() || m.p() != n.p())
    throw Error(ErrorKind::DimensionMismatch, "modules over different groups or fields");
  std::vector<Matrix> gens;
  std::size_t a = m.dim();
  std::size_t b = n.dim();
  Field f(m.p());
  for (std::size_t k = 0; k < m.generator_action().size(); ++k) {
    const Matrix& A = m.generator_action()[k];
    const Matrix& B = n.generator_action()[k];
    Matrix t(a * b, a * b, m.p());
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j)
        for (std::size_t r = 0; r < b; ++r)
          for (std::size_t s = 0; s < b; ++s) t(i * b + r, j * b + s) = f.mul(A(i, j), B(r, s));
    gens.push_back(std::move(t));
  }
  return GModule(m.group(), m.p(), std::move(gens));
}

// ---------------------------------------------------------------------------

std::string SimpleLabel::name() const {
  if (trivial) return "1";
  std::string s = std::to_string(dim) + "[";
  for (std::size_t i = 0; i < traces.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(traces[i]);
  }
  return s + "]";
}

SimpleLabel simple_label(const GModule& m) {
  SimpleLabel l;
  l.dim = m.dim();
  l.trivial = m.dim() == 1 && m.is_trivial();
  for (const auto& c : m.group()->classes())
    if (c.element_order % m.p() != 0) l.traces.push_back(m.matrix_of(c.representative).trace());
  return l;
}

std::string LoewyData::display(const std::map<SimpleLabel, std::string>& names) const {
  std::string out;
  for (std::size_t j = layers.size(); j-- > 0;) {
    if (!out.empty()) out += " -> ";
    for (std::size_t i = 0; i < layers[j].size(); ++i) {
      if (i) out += " + ";
      auto it = names.find(layers[j][i]);
      out += it == names.end() ? layers[j][i].name() : it->second;
    }
  }
  return out;
}

namespace {

constexpr double kSpinLimit = 1 << 18;

std::vector<Subspace> cyclic_submodules(const GModule& m) {
  double count = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) count *= m.p();
  if (count > kSpinLimit) throw Error(ErrorKind::TooLarge, "module too large for submodule spinning");
  std::set<Subspace> seen;
  Vec v(m.dim(), 0);
  // Walk all vectors whose first nonzero entry is 1.
  for (std::size_t lead = 0; lead < m.dim(); ++lead) {
    std::size_t tail = m.dim() - lead - 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < tail; ++i) total *= m.p();
    for (std::size_t t = 0; t < total; ++t) {
      Vec w(m.dim(), 0);
      w[lead] = 1;
      std::size_t x = t;
      for (std::size_t i = m.dim(); i-- > lead + 1;) {
        w[i] = static_cast<std::uint8_t>(x % m.p());
        x /= m.p();
      }
      seen.insert(m.spin({w}));
    }
  }
  return {seen.begin(), seen.end()};
}

Vec lift_coords(const Vec& coords, const Subspace& s) {
  return vec_times(coords, Matrix::from_rows(s.basis(), s.ambient_dim(), s.p()));
}

Subspace lift_subspace(const Subspace& inner, const Subspace& outer) {
  std::vector<Vec> vs;
  for (const auto& b : inner.basis()) vs.push_back(lift_coords(b, outer));
  return Subspace::span(outer.p(), outer.ambient_dim(), vs);
}

}  // namespace

std::vector<Subspace> simple_submodules(const GModule& m) {
  if (m.dim() == 0) return {};
  auto cyc = cyclic_submodules(m);
  std::sort(cyc.begin(), cyc.end(), [](const Subspace& a, const Subspace& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a < b;
  });
  std::vector<Subspace> simples;
  for (const auto& s : cyc) {
    bool minimal = true;
    for (const auto& t : cyc) {
      if (t.dim() >= s.dim()) break;
      if (s.contains(t)) {
        minimal = false;
        break;
      }
    }
    if (minimal) simples.push_back(s);
  }
  return simples;
}

Subspace socle(const GModule& m) {
  Subspace s(m.p(), m.dim());
  for (const auto& t : simple_submodules(m)) s = s.sum(t);
  return s;
}

Subspace radical(const GModule& m) {
  if (m.dim() == 0) return Subspace(m.p(), 0);
  return annihilator(socle(m.dual()));
}

std::vector<SimpleLabel> composition_factors(const GModule& m) {
  std::vector<SimpleLabel> out;
  GModule cur = m;
  while (cur.dim() > 0) {
    auto simples = simple_submodules(cur);
    const Subspace& s = simples.front();
    out.push_back(simple_label(cur.restrict_to(s)));
    if (s.dim() == cur.dim()) break;
    cur = cur.quotient(s);
  }
  std::sort(out.begin(), out.end(), [](const SimpleLabel& a, const SimpleLabel& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a < b;
  });
  return out;
}

LoewyData loewy_layers(const GModule& m) {
  LoewyData d;
  // Current radical power as a subspace of m, and its module.
  Subspace cur = Subspace::whole(m.p(), m.dim());
  while (cur.dim() > 0) {
    GModule cm = m.restrict_to(cur);
    Subspace rad_in = radical(cm);
    GModule layer = cm.quotient(rad_in);
    d.layers.push_back(composition_factors(layer));
    d.layer_dims.push_back(layer.dim());
    Subspace next = lift_subspace(rad_in, cur);
    if (next.dim() >= cur.dim()) throw Error(ErrorKind::InvariantViolation, "radical series did not descend");
    cur = next;
  }
  return d;
}

std::pair<Subspace, Subspace> fitting_decompose(const GModule& m, const Matrix& endo) {
  Matrix y = endo.power(m.dim() == 0 ? 1 : m.dim());
  Subspace ker = left_kernel(y);
  Subspace im = Subspace::whole(m.p(), m.dim()).image(y);
  return {ker, im};
}

namespace {

std::optional<std::pair<Subspace, Subspace>> find_split(const GModule& m) {
  auto basis = hom_basis(m, m);
  std::size_t n = m.dim();
  unsigned p = m.p();
  Matrix zero(n, n, p);
  auto try_endo = [&](const Matrix& x) -> std::optional<std::pair<Subspace, Subspace>> {
    for (unsigned lambda = 0; lambda < p; ++lambda) {
      Matrix y = x - Matrix::identity(n, p).scaled(lambda);
      auto [ker, im] = fitting_decompose(m, y);
      if (ker.dim() != 0 && im.dim() != 0) return std::make_pair(ker, im);
    }
    return std::nullopt;
  };
  double size = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) size *= p;
  if (size <= 4096) {
    Vec coeff(basis.size(), 0);
    for (std::size_t t = 0; t < static_cast<std::size_t>(size); ++t) {
      Matrix x = zero;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeff[i]) x = x + basis[i].scaled(coeff[i]);
      if (x * x == x && !x.is_zero() && !x.is_identity()) return fitting_decompose(m, x);
      for (std::size_t i = basis.size(); i-- > 0;) {
        if (++coeff[i] < p) break;
        coeff[i] = 0;
      }
    }
    return std::nullopt;
  }
  for (const auto& b : basis)
    if (auto s = try_endo(b)) return s;
  std::mt19937 rng(977);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix x = zero;
    for (const auto& b : basis) x = x + b.scaled(rng() % p);
    if (auto s = try_endo(x)) return s;
  }
  return std::nullopt;
}

}  // namespace

bool is_indecomposable(const GModule& m) { return m.dim() > 0 && !find_split(m).has_value(); }

std::vector<Subspace> decompose(const GModule& m) {
  auto split = find_split(m);
  if (!split) return {Subspace::whole(m.p(), m.dim())};
  std::vector<Subspace> out;
  for (const Subspace* part : {&split->first, &split->second}) {
    for (const auto& s : decompose(m.restrict_to(*part))) out.push_back(lift_subspace(s, *part));
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a < b;
  });
  return out;
}

}  // namespace mt
