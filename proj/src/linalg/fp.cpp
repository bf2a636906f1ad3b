#include "mt/linalg/fp.hpp"

#include <algorithm>
#include <sstream>

#include "mt/error.hpp"

namespace mt {

Field::Field(unsigned p) : p_(p), inv_(p, 0) {
  if (p < 2 || p > 251) throw Error(ErrorKind::InvalidArgument, "field characteristic out of range");
  for (unsigned a = 1; a < p; ++a)
    for (unsigned b = 1; b < p; ++b)
      if (a * b % p == 1) inv_[a] = static_cast<std::uint8_t>(b);
}

std::uint8_t Field::inv(unsigned a) const {
  if (a % p_ == 0) throw Error(ErrorKind::RankDeficient, "division by zero in F_p");
  return inv_[a % p_];
}

std::uint8_t Field::reduce(long long a) const {
  long long r = a % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint8_t>(r);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, unsigned p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, unsigned p) {
  Matrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, unsigned p) {
  Matrix m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + static_cast<long>(i * cols_));
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  Matrix c(rows_, b.cols_, p_);
  std::vector<unsigned> acc(b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0u);
    for (std::size_t k = 0; k < cols_; ++k) {
      unsigned x = (*this)(i, k);
      if (x == 0) continue;
      const std::uint8_t* brow = &b.a_[k * b.cols_];
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * brow[j];
    }
    for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<std::uint8_t>(acc[j] % p_);
  }
  return c;
}

Matrix Matrix::operator+(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  Matrix c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = static_cast<std::uint8_t>((a_[i] + b.a_[i]) % p_);
  return c;
}

Matrix Matrix::operator-(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  Matrix c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = static_cast<std::uint8_t>((a_[i] + p_ - b.a_[i]) % p_);
  return c;
}

Matrix Matrix::scaled(unsigned s) const {
  Matrix c = *this;
  for (auto& x : c.a_) x = static_cast<std::uint8_t>(x * s % p_);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::power(unsigned long long e) const {
  Matrix result = identity(rows_, p_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  Field f(p_);
  std::size_t n = rows_;
  Matrix a = *this;
  Matrix b = identity(n, p_);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::RankDeficient, "matrix is singular");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(b(piv, j), b(c, j));
      }
    }
    unsigned s = f.inv(a(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = f.mul(a(c, j), s);
      b(c, j) = f.mul(b(c, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      unsigned m = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = f.sub(a(i, j), f.mul(m, a(c, j)));
        b(i, j) = f.sub(b(i, j), f.mul(m, b(c, j)));
      }
    }
  }
  return b;
}

std::size_t Matrix::rank() const {
  Echelon e(p_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) e.insert(row(i));
  return e.rank();
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint8_t x) { return x == 0; });
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_, p_); }

unsigned Matrix::trace() const {
  unsigned t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = (t + (*this)(i, i)) % p_;
  return t;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out << static_cast<unsigned>((*this)(i, j));
    out << '\n';
  }
  return out.str();
}

Vec vec_times(const Vec& v, const Matrix& a) {
  if (v.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "vector/matrix shape mismatch");
  std::vector<unsigned> acc(a.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) acc[j] += v[k] * a(k, j);
  }
  Vec out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out[j] = static_cast<std::uint8_t>(acc[j] % a.p());
  return out;
}

Vec vec_add(const Vec& a, const Vec& b, unsigned p) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = static_cast<std::uint8_t>((a[i] + b[i]) % p);
  return c;
}

Vec vec_sub(const Vec& a, const Vec& b, unsigned p) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = static_cast<std::uint8_t>((a[i] + p - b[i]) % p);
  return c;
}

Vec vec_scale(const Vec& a, unsigned s, unsigned p) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = static_cast<std::uint8_t>(a[i] * s % p);
  return c;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint64_t> pack(const Vec& v, std::size_t words) {
  std::vector<std::uint64_t> out(words, 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] & 1) out[i / 64] |= std::uint64_t{1} << (i % 64);
  return out;
}

Vec unpack(const std::vector<std::uint64_t>& w, std::size_t cols) {
  Vec out(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) out[i] = static_cast<std::uint8_t>((w[i / 64] >> (i % 64)) & 1);
  return out;
}

bool bit(const std::vector<std::uint64_t>& w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1; }

std::size_t first_bit(const std::vector<std::uint64_t>& w) {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k]) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(w[k]));
  return SIZE_MAX;
}

}  // namespace

Echelon::Echelon(unsigned p, std::size_t cols) : p_(p), cols_(cols), words_((cols + 63) / 64), f_(p) {}

bool Echelon::insert(const Vec& v) {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "echelon row length mismatch");
  if (p_ == 2) {
    auto w = pack(v, words_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      if (!bit(w, pivots_[i])) continue;
      const auto& r = bits_[i];
      for (std::size_t k = pivots_[i] / 64; k < words_; ++k) w[k] ^= r[k];
    }
    std::size_t piv = first_bit(w);
    if (piv == SIZE_MAX) return false;
    pivots_.push_back(piv);
    bits_.push_back(std::move(w));
    return true;
  }
  Vec w = reduce(v);
  std::size_t piv = 0;
  while (piv < cols_ && w[piv] == 0) ++piv;
  if (piv == cols_) return false;
  unsigned s = f_.inv(w[piv]);
  for (std::size_t j = piv; j < cols_; ++j) w[j] = f_.mul(w[j], s);
  pivots_.push_back(piv);
  rows_.push_back(std::move(w));
  return true;
}

Vec Echelon::reduce(const Vec& v) const {
  if (p_ == 2) {
    auto w = pack(v, words_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      if (!bit(w, pivots_[i])) continue;
      const auto& r = bits_[i];
      for (std::size_t k = pivots_[i] / 64; k < words_; ++k) w[k] ^= r[k];
    }
    return unpack(w, cols_);
  }
  Vec w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    unsigned c = w[pivots_[i]];
    if (c == 0) continue;
    const Vec& r = rows_[i];
    for (std::size_t j = pivots_[i]; j < cols_; ++j)
      if (r[j]) w[j] = static_cast<std::uint8_t>((w[j] + (p_ - c) * r[j]) % p_);
  }
  return w;
}

bool Echelon::contains(const Vec& v) const { return is_zero(reduce(v)); }

Vec Echelon::row(std::size_t i) const { return p_ == 2 ? unpack(bits_[i], cols_) : rows_[i]; }

std::vector<Vec> Echelon::reduced_basis() const {
  std::vector<std::size_t> order(pivots_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<Vec> rows;
  std::vector<std::size_t> piv;
  for (auto i : order) {
    rows.push_back(row(i));
    piv.push_back(pivots_[i]);
  }
  for (std::size_t i = rows.size(); i-- > 0;) {
    for (std::size_t j = 0; j < i; ++j) {
      unsigned c = rows[j][piv[i]];
      if (c == 0) continue;
      for (std::size_t k = piv[i]; k < cols_; ++k)
        rows[j][k] = static_cast<std::uint8_t>((rows[j][k] + (p_ - c) * rows[i][k]) % p_);
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(unsigned p, std::size_t n, const std::vector<Vec>& vectors) {
  Echelon e(p, n);
  for (const auto& v : vectors) e.insert(v);
  Subspace s(p, n);
  s.basis_ = e.reduced_basis();
  return s;
}

Subspace Subspace::whole(unsigned p, std::size_t n) {
  return span(p, n, Matrix::identity(n, p).row_list());
}

bool Subspace::contains(const Vec& v) const {
  Echelon e(p_, n_);
  for (const auto& b : basis_) e.insert(b);
  return e.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  Echelon e(p_, n_);
  for (const auto& b : basis_) e.insert(b);
  for (const auto& v : other.basis_)
    if (!e.contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(p_, n_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  return annihilator(annihilator(*this).sum(annihilator(other)));
}

Subspace Subspace::image(const Matrix& a) const {
  std::vector<Vec> im;
  for (const auto& b : basis_) im.push_back(vec_times(b, a));
  return span(p_, a.cols(), im);
}

std::vector<Vec> Subspace::complement_in(const Subspace& outer) const {
  Echelon e(p_, n_);
  for (const auto& b : basis_) e.insert(b);
  std::vector<Vec> out;
  for (const auto& v : outer.basis_)
    if (e.insert(v)) out.push_back(v);
  return out;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(basis_.size());
  Vec acc(n_, 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t piv = 0;
    while (basis_[i][piv] == 0) ++piv;
    c[i] = v[piv];
    acc = vec_add(acc, vec_scale(basis_[i], c[i], p_), p_);
  }
  if (acc != v) throw Error(ErrorKind::InvalidArgument, "vector is not in the subspace");
  return c;
}

std::vector<Vec> Subspace::elements() const {
  std::vector<Vec> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) total *= p_;
  out.reserve(total);
  Vec coeff(basis_.size(), 0);
  for (std::size_t t = 0; t < total; ++t) {
    Vec v(n_, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (coeff[i]) v = vec_add(v, vec_scale(basis_[i], coeff[i], p_), p_);
    out.push_back(std::move(v));
    for (std::size_t i = basis_.size(); i-- > 0;) {
      if (++coeff[i] < p_) break;
      coeff[i] = 0;
    }
  }
  return out;
}

Subspace right_kernel(const Matrix& a) {
  Echelon e(a.p(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) e.insert(a.row(i));
  auto rows = e.reduced_basis();
  std::vector<std::size_t> pivots;
  for (const auto& r : rows) {
    std::size_t piv = 0;
    while (r[piv] == 0) ++piv;
    pivots.push_back(piv);
  }
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Field f(a.p());
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(a.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) x[pivots[i]] = f.neg(rows[i][free]);
    basis.push_back(std::move(x));
  }
  return Subspace::span(a.p(), a.cols(), basis);
}

Subspace left_kernel(const Matrix& a) { return right_kernel(a.transpose()); }

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::whole(s.p(), s.ambient_dim());
  return right_kernel(Matrix::from_rows(s.basis(), s.ambient_dim(), s.p()));
}

}  // namespace mt
