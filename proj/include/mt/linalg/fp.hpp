#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mt {

/// Vectors over F_p, entries in [0, p).
using Vec = std::vector<std::uint8_t>;

/// Arithmetic in the prime field F_p for p < 256.
class Field {
 public:
  explicit Field(unsigned p);
  unsigned p() const { return p_; }
  std::uint8_t add(unsigned a, unsigned b) const { return static_cast<std::uint8_t>((a + b) % p_); }
  std::uint8_t sub(unsigned a, unsigned b) const { return static_cast<std::uint8_t>((a + p_ - b) % p_); }
  std::uint8_t mul(unsigned a, unsigned b) const { return static_cast<std::uint8_t>((a * b) % p_); }
  std::uint8_t neg(unsigned a) const { return static_cast<std::uint8_t>((p_ - a) % p_); }
  std::uint8_t inv(unsigned a) const;
  std::uint8_t reduce(long long a) const;

 private:
  unsigned p_;
  std::vector<std::uint8_t> inv_;
};

/// Dense matrix over F_p acting on row vectors: v -> v * A.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, unsigned p);
  static Matrix identity(std::size_t n, unsigned p);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, unsigned p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned p() const { return p_; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::uint8_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);
  std::vector<Vec> row_list() const;

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix scaled(unsigned c) const;
  Matrix transpose() const;
  Matrix power(unsigned long long e) const;
  /// Throws RankDeficient when singular.
  Matrix inverse() const;
  std::size_t rank() const;
  bool is_zero() const;
  bool is_identity() const;
  unsigned trace() const;

  bool operator==(const Matrix& o) const = default;
  auto operator<=>(const Matrix& o) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned p_ = 2;
  std::vector<std::uint8_t> a_;
};

Vec vec_times(const Vec& v, const Matrix& a);
Vec vec_add(const Vec& a, const Vec& b, unsigned p);
Vec vec_sub(const Vec& a, const Vec& b, unsigned p);
Vec vec_scale(const Vec& a, unsigned c, unsigned p);
bool is_zero(const Vec& v);

/// Incremental semi-echelon basis of a row space. Each stored row has a
/// pivot (its first nonzero column, normalized to 1) at which all rows
/// inserted later vanish. Rows are bit-packed when p = 2.
class Echelon {
 public:
  Echelon(unsigned p, std::size_t cols);

  /// Reduces v and keeps it if independent. Returns true when the rank grew.
  bool insert(const Vec& v);
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  unsigned p() const { return p_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec row(std::size_t i) const;
  /// Fully reduced basis sorted by pivot column (canonical for the space).
  std::vector<Vec> reduced_basis() const;

 private:
  unsigned p_;
  std::size_t cols_;
  std::size_t words_;
  Field f_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> rows_;                  // odd p
  std::vector<std::vector<std::uint64_t>> bits_;  // p = 2
};

/// A subspace of F_p^n stored by its canonical reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(unsigned p, std::size_t n) : p_(p), n_(n) {}
  static Subspace span(unsigned p, std::size_t n, const std::vector<Vec>& vectors);
  static Subspace whole(unsigned p, std::size_t n);

  unsigned p() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Image under v -> v * A.
  Subspace image(const Matrix& a) const;
  /// Basis vectors extending this subspace to `outer` (a complement inside it).
  std::vector<Vec> complement_in(const Subspace& outer) const;
  /// Coordinates of v in the stored basis; throws when v is not inside.
  Vec coordinates(const Vec& v) const;
  /// All p^dim vectors of the subspace, in the order of coefficient tuples.
  std::vector<Vec> elements() const;

  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
  bool operator<(const Subspace& o) const { return basis_ < o.basis_; }

 private:
  unsigned p_ = 2;
  std::size_t n_ = 0;
  std::vector<Vec> basis_;
};

/// {v : v * A = 0}.
Subspace left_kernel(const Matrix& a);
/// {x : A * x^T = 0}, as row vectors.
Subspace right_kernel(const Matrix& a);
/// Orthogonal complement under the standard dot product.
Subspace annihilator(const Subspace& s);

}  // namespace mt
