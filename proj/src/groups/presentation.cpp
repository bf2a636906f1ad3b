#include "mt/groups/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mt/error.hpp"

namespace mt {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

Word power_word(const Word& w, int e) {
  Word base = e < 0 ? inverse_word(w) : w;
  Word out;
  for (int i = 0; i < std::abs(e); ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(out);
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word commutator_word(const Word& a, const Word& b) {
  return free_reduce(concat(concat(inverse_word(a), inverse_word(b)), concat(a, b)));
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int x : w) {
    const Word& img = images.at(static_cast<std::size_t>(std::abs(x) - 1));
    if (x > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      Word inv = inverse_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

void Presentation::add_relator(Word w) {
  w = free_reduce(std::move(w));
  if (!w.empty()) relators.push_back(std::move(w));
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  Word parse() {
    Word w = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return free_reduce(w);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, why + " in word '" + std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_factor_start() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c)) || c == '1';
  }
  Word expr() {
    Word w;
    while (true) {
      skip();
      if (i_ < s_.size() && s_[i_] == '*') {
        ++i_;
        continue;
      }
      if (!at_factor_start()) break;
      Word t = term();
      w.insert(w.end(), t.begin(), t.end());
    }
    return w;
  }
  Word term() {
    Word f = factor();
    skip();
    if (i_ < s_.size() && s_[i_] == '^') {
      ++i_;
      skip();
      bool neg = false;
      if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
        neg = s_[i_] == '-';
        ++i_;
      }
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected exponent");
      int e = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) e = e * 10 + (s_[i_++] - '0');
      return power_word(f, neg ? -e : e);
    }
    return f;
  }
  Word factor() {
    skip();
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Word w = expr();
      skip();
      if (i_ >= s_.size() || s_[i_] != ')') fail("expected ')'");
      ++i_;
      return w;
    }
    if (c == '[') {
      ++i_;
      Word a = expr();
      skip();
      if (i_ >= s_.size() || s_[i_] != ',') fail("expected ','");
      ++i_;
      Word b = expr();
      skip();
      if (i_ >= s_.size() || s_[i_] != ']') fail("expected ']'");
      ++i_;
      return commutator_word(a, b);
    }
    if (c == '1') {
      ++i_;
      return {};
    }
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    std::string name(s_.substr(start, i_ - start));
    // Longest generator-name match so names like "a1" work.
    for (std::size_t k = 0; k < names_.size(); ++k)
      if (names_[k] == name) return {static_cast<int>(k) + 1};
    // Fall back to single-letter juxtaposition, e.g. "ab".
    Word w;
    for (char ch : name) {
      bool found = false;
      for (std::size_t k = 0; k < names_.size(); ++k) {
        if (names_[k].size() == 1 && names_[k][0] == ch) {
          w.push_back(static_cast<int>(k) + 1);
          found = true;
          break;
        }
      }
      if (!found) fail("unknown generator '" + name + "'");
    }
    return w;
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t i_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

Word Presentation::parse_word(std::string_view text) const { return WordParser(text, generator_names).parse(); }

Presentation Presentation::parse(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    if (!have_gens) {
      if (t.rfind("gens:", 0) != 0) throw Error(ErrorKind::Parse, "presentation must start with 'gens:'");
      std::istringstream names(t.substr(5));
      std::string name;
      while (names >> name) p.generator_names.push_back(name);
      if (p.generator_names.empty()) throw Error(ErrorKind::Parse, "no generators listed");
      have_gens = true;
      continue;
    }
    p.add_relator(p.parse_word(t));
  }
  if (!have_gens) throw Error(ErrorKind::Parse, "empty presentation");
  return p;
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) out << '*';
    first = false;
    const auto& name = generator_names.at(static_cast<std::size_t>(std::abs(w[i]) - 1));
    int e = static_cast<int>(j - i) * (w[i] > 0 ? 1 : -1);
    out << name;
    if (e != 1) out << '^' << e;
    i = j;
  }
  return out.str();
}

std::string Presentation::to_text() const {
  std::ostringstream out;
  out << "gens:";
  for (const auto& n : generator_names) out << ' ' << n;
  out << '\n';
  for (const auto& r : relators) out << format_word(r) << '\n';
  return out.str();
}

Elem PresentedGroup::evaluate(const Word& w) const {
  Elem r = FiniteGroup::kIdentity;
  for (int x : w) {
    Elem g = generator_images.at(static_cast<std::size_t>(std::abs(x) - 1));
    r = group->mul(r, x > 0 ? g : group->inv(g));
  }
  return r;
}

void PresentedGroup::validate() const {
  if (generator_images.size() != presentation.generator_count())
    throw Error(ErrorKind::InvalidArgument, "generator image count mismatch");
  for (const auto& r : presentation.relators) {
    if (evaluate(r) != FiniteGroup::kIdentity)
      throw Error(ErrorKind::InvariantViolation, "relator " + presentation.format_word(r) + " is not satisfied");
  }
  if (group->closure(generator_images).size() != group->order())
    throw Error(ErrorKind::InvariantViolation, "presentation generators do not generate the group");
}

Presentation cayley_presentation(const FiniteGroup& g) {
  Presentation p;
  for (std::size_t k = 0; k < g.generator_count(); ++k) p.generator_names.push_back("x" + std::to_string(k + 1));
  for (Elem x = 0; x < g.order(); ++x) {
    for (std::size_t k = 0; k < g.generator_count(); ++k) {
      Elem y = g.times_generator(x, k);
      if (y != 0 && g.parent(y) == x && g.parent_generator(y) == k) continue;
      Word r = concat(concat(g.free_word(x), Word{static_cast<int>(k) + 1}), inverse_word(g.free_word(y)));
      if (!r.empty()) p.add_relator(r);
    }
  }
  std::sort(p.relators.begin(), p.relators.end());
  p.relators.erase(std::unique(p.relators.begin(), p.relators.end()), p.relators.end());
  return p;
}

PresentedGroup find_presentation(GroupPtr g, const Presentation& p) {
  const std::size_t d = p.generator_count();
  double space = 1;
  for (std::size_t i = 0; i < d; ++i) space *= static_cast<double>(g->order());
  if (space > 1e7) throw Error(ErrorKind::TooLarge, "generator image search space too large");
  PresentedGroup pg{p, g, std::vector<Elem>(d, 0)};
  while (true) {
    bool ok = true;
    for (const auto& r : p.relators) {
      if (pg.evaluate(r) != FiniteGroup::kIdentity) {
        ok = false;
        break;
      }
    }
    if (ok && g->closure(pg.generator_images).size() == g->order()) return pg;
    std::size_t i = d;
    while (i-- > 0) {
      if (++pg.generator_images[i] < g->order()) break;
      pg.generator_images[i] = 0;
    }
    if (i == SIZE_MAX) break;
  }
  throw Error(ErrorKind::InvariantViolation, "no generator images satisfy the presentation");
}

PresentedGroup eliminate_generators(const PresentedGroup& pg, std::size_t keep) {
  const auto& G = *pg.group;
  std::vector<Elem> kept(pg.generator_images.begin(), pg.generator_images.begin() + static_cast<long>(keep));
  std::vector<Elem> embed;
  FiniteGroup sub = G.subgroup(kept, &embed);
  if (sub.order() != G.order())
    throw Error(ErrorKind::InvalidArgument, "kept generators do not generate the group");
  std::vector<Elem> where(G.order());
  for (Elem i = 0; i < embed.size(); ++i) where[embed[i]] = i;
  std::vector<Word> images;
  for (std::size_t k = 0; k < pg.presentation.generator_count(); ++k) {
    if (k < keep) {
      images.push_back({static_cast<int>(k) + 1});
    } else {
      images.push_back(sub.free_word(where[pg.generator_images[k]]));
    }
  }
  PresentedGroup out;
  out.presentation.generator_names.assign(pg.presentation.generator_names.begin(),
                                          pg.presentation.generator_names.begin() + static_cast<long>(keep));
  for (const auto& r : pg.presentation.relators) out.presentation.add_relator(substitute(r, images));
  out.group = pg.group;
  out.generator_images = kept;
  return out;
}

}  // namespace mt
