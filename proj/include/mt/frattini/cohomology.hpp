#pragma once

#include <vector>

#include "mt/frattini/level.hpp"
#include "mt/groups/presentation.hpp"
#include "mt/modules/gmodule.hpp"

namespace mt {

/// One module vector per relator, concatenated (length s * dim M).
using TailVector = Vec;

/// Matrices for the presentation generators acting on M.
std::vector<Matrix> generator_matrices(const PresentedGroup& pg, const GModule& m);

/// The map M^d -> M^s, (m_j) -> (sum_j m_j * F_ij), whose block F_ij is the
/// Fox derivative of relator i by generator j pushed through the action.
/// Rows index (generator, coordinate), columns (relator, coordinate).
Matrix fox_matrix(const PresentedGroup& pg, const GModule& m);

struct TailSpace {
  Subspace consistent;    // tails realized by some extension
  Subspace coboundaries;  // image of the Fox matrix
  std::vector<Vec> complement;  // basis of consistent / coboundaries
};

/// Solves for the relator tails t for which G acts on M x G compatibly.
TailSpace tail_space(const PresentedGroup& pg, const GModule& m);

struct H2Result {
  std::size_t dimension = 0;
  /// All p^dimension class representatives, the zero tail first, in
  /// lexicographic order of their coefficients on `basis`.
  std::vector<TailVector> classes;
  std::vector<TailVector> basis;
};

/// H^2(G, M) as tail classes; each class is validated by building its
/// extension and checking the order.
H2Result h2_classes(const PresentedGroup& pg, const GModule& m, std::size_t max_cosets, bool validate = true);

/// Presentation of the extension of G by M with the given relator tails:
/// generators x_1..x_d (lifts), m_1..m_n; relators r_i * w(t_i)^-1, m_l^p,
/// [m_k, m_l] and x_j^-1 m_k x_j = w(e_k A_j).
Presentation extension_presentation(const PresentedGroup& pg, const GModule& m, const TailVector& tail);

/// Builds the extension by coset enumeration; Collapse if the order is short.
FrattiniLevel build_extension(const PresentedGroup& pg, const GModule& m, const TailVector& tail,
                              std::size_t max_cosets);

}  // namespace mt
