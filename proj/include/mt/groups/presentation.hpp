#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mt/groups/finite_group.hpp"

namespace mt {

Word free_reduce(Word w);
Word inverse_word(const Word& w);
Word power_word(const Word& w, int e);
Word concat(const Word& a, const Word& b);
/// a^-1 b^-1 a b
Word commutator_word(const Word& a, const Word& b);
/// Substitutes letter k (1-based) by images[k-1].
Word substitute(const Word& w, const std::vector<Word>& images);

/// A finitely presented group <x_1..x_d | relators>.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  std::size_t generator_count() const { return generator_names.size(); }
  void add_relator(Word w);

  /// Parses the text form: a first line `gens: a b`, then one relator per line
  /// using juxtaposition or `*`, `^n` powers, parentheses and `[u,v]`.
  static Presentation parse(std::string_view text);
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;
  std::string to_text() const;
};

/// A presentation together with a concrete group it presents and the
/// images of the presentation generators in that group.
struct PresentedGroup {
  Presentation presentation;
  GroupPtr group;
  std::vector<Elem> generator_images;

  /// Checks that every relator evaluates to the identity and that the
  /// images generate the group.
  void validate() const;
  Elem evaluate(const Word& w) const;
};

/// Lexicographically first images of the presentation generators in `g`
/// that satisfy all relators and generate `g`. Throws TooLarge when the
/// search space exceeds 10^7 tuples and InvariantViolation when none exist.
PresentedGroup find_presentation(GroupPtr g, const Presentation& p);

/// Presentation read off the Cayley graph: one relator per non-tree edge.
/// Intended for small groups where relator count does not matter.
Presentation cayley_presentation(const FiniteGroup& g);

/// Rewrites a presented group onto its first `keep` generators: the other
/// generators are replaced by BFS words of their images (Tietze elimination).
PresentedGroup eliminate_generators(const PresentedGroup& pg, std::size_t keep);

}  // namespace mt
