#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mt {

/// A permutation of {0, ..., degree-1}. Products act on the right:
/// point i under a*b is (i^a)^b.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t degree);
  /// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
  /// An empty string or "()" is the identity.
  static Perm parse_cycles(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  Perm extended(std::size_t degree) const;

  /// Disjoint-cycle notation with 1-based points; "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace mt
