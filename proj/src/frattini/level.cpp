#include "mt/frattini/level.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "mt/error.hpp"

namespace mt {

Vec FrattiniLevel::kernel_vector(Elem e) const {
  std::int64_t idx = kernel_index.at(e);
  if (idx < 0) throw Error(ErrorKind::InvalidArgument, "element is not in the kernel");
  Vec v(kernel_dim(), 0);
  for (std::size_t l = kernel_dim(); l-- > 0;) {
    v[l] = static_cast<std::uint8_t>(idx % p);
    idx /= p;
  }
  return v;
}

Elem FrattiniLevel::kernel_element(const Vec& v) const {
  std::size_t idx = 0;
  for (auto x : v) idx = idx * p + x;
  return kernel_elements.at(idx);
}

std::vector<Elem> FrattiniLevel::fiber(Elem g) const {
  std::vector<Elem> out;
  for (Elem k : kernel_elements) out.push_back(total_group().mul(section[g], k));
  return out;
}

FrattiniLevel make_level(PresentedGroup total, GroupPtr base, const std::vector<Elem>& generator_images, unsigned p,
                         const std::vector<Elem>& kernel_basis) {
  FrattiniLevel L;
  L.total = std::move(total);
  L.base = std::move(base);
  L.p = p;
  L.kernel_basis = kernel_basis;
  const FiniteGroup& T = *L.total.group;
  const FiniteGroup& B = *L.base;
  L.projection = homomorphism_from_generators(T, B, generator_images);
  std::size_t n = kernel_basis.size();
  std::size_t kernel_order = 1;
  for (std::size_t i = 0; i < n; ++i) kernel_order *= p;
  if (T.order() != B.order() * kernel_order)
    throw Error(ErrorKind::Collapse, "total order " + std::to_string(T.order()) + " is not |base| * p^" +
                                         std::to_string(n));
  for (Elem k : kernel_basis) {
    if (L.projection[k] != FiniteGroup::kIdentity) throw Error(ErrorKind::InvalidArgument, "kernel basis element not in kernel");
    if (T.pow(k, p) != FiniteGroup::kIdentity) throw Error(ErrorKind::Collapse, "kernel is not of exponent p");
    for (Elem k2 : kernel_basis)
      if (T.mul(k, k2) != T.mul(k2, k)) throw Error(ErrorKind::Collapse, "kernel is not abelian");
  }
  L.kernel_index.assign(T.order(), -1);
  L.kernel_elements.resize(kernel_order);
  for (std::size_t idx = 0; idx < kernel_order; ++idx) {
    Elem e = FiniteGroup::kIdentity;
    std::size_t x = idx;
    std::vector<unsigned> digits(n);
    for (std::size_t l = n; l-- > 0;) {
      digits[l] = static_cast<unsigned>(x % p);
      x /= p;
    }
    for (std::size_t l = 0; l < n; ++l) e = T.mul(e, T.pow(kernel_basis[l], digits[l]));
    if (L.kernel_index[e] >= 0) throw Error(ErrorKind::Collapse, "kernel basis is not independent");
    L.kernel_index[e] = static_cast<std::int64_t>(idx);
    L.kernel_elements[idx] = e;
  }
  for (Elem e = 0; e < T.order(); ++e) {
    if ((L.projection[e] == FiniteGroup::kIdentity) != (L.kernel_index[e] >= 0))
      throw Error(ErrorKind::InvariantViolation, "kernel basis does not span the kernel");
  }
  // Lifts of base generators: smallest preimage of each.
  std::vector<Elem> lifts(B.generator_count(), UINT32_MAX);
  for (Elem e = 0; e < T.order(); ++e) {
    for (std::size_t k = 0; k < B.generator_count(); ++k)
      if (lifts[k] == UINT32_MAX && L.projection[e] == B.generator(k)) lifts[k] = e;
  }
  L.section.assign(B.order(), FiniteGroup::kIdentity);
  for (Elem g = 1; g < B.order(); ++g) L.section[g] = T.mul(L.section[B.parent(g)], lifts[B.parent_generator(g)]);
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < B.generator_count(); ++k) {
    Matrix m(n, n, p);
    for (std::size_t l = 0; l < n; ++l) m.set_row(l, L.kernel_vector(T.conj(kernel_basis[l], lifts[k])));
    action.push_back(std::move(m));
  }
  L.kernel_module = GModule(L.base, p, std::move(action));
  return L;
}

OrderLiftingReport verify_order_lifting(const FrattiniLevel& L) {
  OrderLiftingReport r;
  const FiniteGroup& T = L.total_group();
  const FiniteGroup& B = *L.base;
  auto note = [&](std::string s) {
    if (r.violations.size() < 100) r.violations.push_back(std::move(s));
  };
  for (Elem g = 0; g < B.order(); ++g) {
    ++r.checked;
    unsigned og = B.element_order(g);
    auto fib = L.fiber(g);
    if (og % L.p == 0) {
      for (Elem x : fib)
        if (T.element_order(x) != L.p * og)
          note("lift of " + B.label(g) + " has order " + std::to_string(T.element_order(x)) + ", expected " +
               std::to_string(L.p * og));
    } else {
      std::set<std::size_t> classes;
      for (Elem x : fib)
        if (T.element_order(x) % L.p != 0) classes.insert(T.class_of(x));
      if (classes.size() != 1)
        note("p' element " + B.label(g) + " has " + std::to_string(classes.size()) + " p' classes above it");
    }
  }
  return r;
}

namespace {

// Calls f on every (or a deterministic sample of) choice of kernel translates
// for the lifts of `gens`; stops when f returns true.
template <class F>
bool any_lift_choice(const FrattiniLevel& L, const std::vector<Elem>& gens, F&& f) {
  const FiniteGroup& T = L.total_group();
  std::size_t kn = L.kernel_elements.size();
  double total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) total *= static_cast<double>(kn);
  std::vector<Elem> lifts(gens.size());
  if (total <= 65536) {
    std::vector<std::size_t> idx(gens.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < gens.size(); ++i) lifts[i] = T.mul(L.section[gens[i]], L.kernel_elements[idx[i]]);
      if (f(lifts)) return true;
      std::size_t i = gens.size();
      while (i-- > 0) {
        if (++idx[i] < kn) break;
        idx[i] = 0;
      }
      if (i == SIZE_MAX) return false;
    }
  }
  std::mt19937_64 rng(0x5eed);
  for (int s = 0; s < 4096; ++s) {
    for (std::size_t i = 0; i < gens.size(); ++i) lifts[i] = T.mul(L.section[gens[i]], L.kernel_elements[rng() % kn]);
    if (f(lifts)) return true;
  }
  return false;
}

}  // namespace

bool verify_frattini(const FrattiniLevel& L) {
  const FiniteGroup& T = L.total_group();
  auto gens = L.base->generators();
  bool failure = any_lift_choice(L, gens, [&](const std::vector<Elem>& lifts) {
    return T.closure(lifts).size() != T.order();
  });
  return !failure;
}

std::size_t lift_class_index(const FrattiniLevel& L, std::size_t base_class) {
  const auto& c = L.base->classes().at(base_class);
  if (c.element_order % L.p == 0) throw Error(ErrorKind::NotPPrime, "class elements have order divisible by p");
  const FiniteGroup& T = L.total_group();
  std::set<std::size_t> found;
  for (Elem x : L.fiber(c.representative))
    if (T.element_order(x) % L.p != 0) found.insert(T.class_of(x));
  if (found.size() != 1) throw Error(ErrorKind::InvariantViolation, "p' class does not lift uniquely");
  return *found.begin();
}

const ConjClass& lift_class(const FrattiniLevel& L, const ConjClass& c) {
  std::size_t idx = L.base->class_of(c.representative);
  return L.total_group().classes()[lift_class_index(L, idx)];
}

bool restriction_splits(const FrattiniLevel& L, const std::vector<Elem>& gens) {
  std::size_t target = L.base->closure(gens).size();
  const FiniteGroup& T = L.total_group();
  return any_lift_choice(L, gens, [&](const std::vector<Elem>& lifts) { return T.closure(lifts).size() == target; });
}

}  // namespace mt
