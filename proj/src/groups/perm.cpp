#include "mt/groups/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mt/error.hpp"

namespace mt {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw Error(ErrorKind::InvalidArgument, "permutation images are not a bijection");
    }
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<std::uint32_t>(i);
  Perm p;
  p.images_ = std::move(im);
  return p;
}

Perm Perm::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorKind::Parse, "expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::uint32_t> cyc;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw Error(ErrorKind::Parse, "unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(ErrorKind::Parse, "bad character in cycle: " + std::string(text));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      if (v == 0) throw Error(ErrorKind::Parse, "cycle points are 1-based");
      max_point = std::max(max_point, v);
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  Perm p = identity(std::max(degree, max_point));
  std::vector<bool> used(p.degree(), false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (used[cyc[k]]) throw Error(ErrorKind::Parse, "cycles are not disjoint: " + std::string(text));
      used[cyc[k]] = true;
      p.images_[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
  }
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  std::size_t n = std::max(degree(), rhs.degree());
  std::vector<std::uint32_t> im(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t a = i < degree() ? images_[i] : static_cast<std::uint32_t>(i);
    im[i] = a < rhs.degree() ? rhs.images_[a] : a;
  }
  Perm p;
  p.images_ = std::move(im);
  return p;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> im(degree());
  for (std::size_t i = 0; i < degree(); ++i) im[images_[i]] = static_cast<std::uint32_t>(i);
  Perm p;
  p.images_ = std::move(im);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::extended(std::size_t n) const {
  if (n <= degree()) return *this;
  Perm p = identity(n);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace mt
