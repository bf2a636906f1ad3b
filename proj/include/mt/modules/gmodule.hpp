#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mt/groups/finite_group.hpp"
#include "mt/linalg/fp.hpp"

namespace mt {

/// A right F_p[G]-module: row vectors, v^g = v * A_g with A_{gh} = A_g A_h.
class GModule {
 public:
  GModule() = default;
  /// One matrix per generator of `group`; throws InvariantViolation unless
  /// the matrices define a homomorphism G -> GL_n(F_p).
  GModule(GroupPtr group, unsigned p, std::vector<Matrix> generator_action);
  static GModule trivial(GroupPtr group, unsigned p, std::size_t dim = 1);

  const GroupPtr& group() const { return group_; }
  unsigned p() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& generator_action() const { return gens_; }
  const Matrix& matrix_of(Elem g) const { return all_[g]; }
  Vec act(const Vec& v, Elem g) const { return vec_times(v, all_[g]); }

  /// Contragredient module: A_g -> (A_g^-1)^T, so the dot product is invariant.
  GModule dual() const;
  /// Smallest submodule containing the seeds.
  Subspace spin(const std::vector<Vec>& seeds) const;
  bool is_submodule(const Subspace& s) const;
  /// Action on a submodule in coordinates of its stored basis.
  GModule restrict_to(const Subspace& s) const;
  /// Action on M/s; `lift_basis` receives the vectors of M spanning the
  /// chosen complement, whose images form the quotient basis.
  GModule quotient(const Subspace& s, std::vector<Vec>* lift_basis = nullptr) const;
  /// Restriction to a subgroup given by its element embedding into G.
  GModule restrict_to_subgroup(GroupPtr sub, const std::vector<Elem>& embedding) const;
  bool is_trivial() const;

  std::string to_text() const;
  static GModule from_text(GroupPtr group, const std::string& text);

 private:
  GroupPtr group_;
  unsigned p_ = 2;
  std::size_t dim_ = 0;
  std::vector<Matrix> gens_;
  std::vector<Matrix> all_;
};

/// Linear maps X with A_g X = X B_g for all g (M -> N in row convention).
std::vector<Matrix> hom_basis(const GModule& m, const GModule& n);

/// Induced module M' (x)_{F_p[H]} F_p[G] with basis m (x) g_i over right
/// coset representatives g_i taken in element index order. `embedding`
/// maps elements of H to elements of G.
GModule induce(const GModule& mprime, GroupPtr g, const std::vector<Elem>& embedding);

/// Common fixed vectors of the listed elements.
Subspace invariant_vectors(const GModule& m, const std::vector<Elem>& elems);

/// sum_i x_i y_{h(i)} for an order <= 2 permutation h of the basis.
unsigned involution_pairing(const Vec& v1, const Vec& v2, const std::vector<std::uint32_t>& h, unsigned p);

/// Checks <ab,c> = <a,bc> in F_p[G] for the inversion pairing on sampled triples.
bool frobenius_check(const FiniteGroup& g, unsigned p, std::size_t samples = 24);

/// Tensor product with the diagonal action g -> g (x) g.
GModule hopf_tensor(const GModule& m, const GModule& n);

// ---------------------------------------------------------------------------

/// A simple module identified by dimension and the traces of the p'-class
/// representatives of the group.
struct SimpleLabel {
  std::size_t dim = 0;
  std::vector<unsigned> traces;
  bool trivial = false;

  std::string name() const;
  auto operator<=>(const SimpleLabel&) const = default;
};

SimpleLabel simple_label(const GModule& simple);

struct LoewyData {
  /// layers[j] = rad^j M / rad^{j+1} M, head first.
  std::vector<std::vector<SimpleLabel>> layers;
  std::vector<std::size_t> layer_dims;

  /// Socle first, head last, e.g. "K -> K + 1" with the given names.
  std::string display(const std::map<SimpleLabel, std::string>& names = {}) const;
};

/// All simple submodules (as subspaces), found by spinning every vector.
std::vector<Subspace> simple_submodules(const GModule& m);
Subspace socle(const GModule& m);
Subspace radical(const GModule& m);
LoewyData loewy_layers(const GModule& m);
/// Composition factors of a module, via repeated simple-submodule quotients.
std::vector<SimpleLabel> composition_factors(const GModule& m);

/// Fitting split for an endomorphism: (ker X^n, im X^n).
std::pair<Subspace, Subspace> fitting_decompose(const GModule& m, const Matrix& endo);
bool is_indecomposable(const GModule& m);
/// Indecomposable summands as subspaces of m, in a deterministic order.
std::vector<Subspace> decompose(const GModule& m);

}  // namespace mt
