#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace twostar {

bool is_prime(unsigned n) noexcept;
unsigned inv_mod(unsigned a, unsigned p) noexcept;

/// A vector over GF(p), p < 256 prime. Bit-packed into 64-bit words when p = 2,
/// one byte per entry otherwise.
class GFVec {
 public:
  GFVec() = default;
  GFVec(unsigned p, std::size_t len);

  unsigned prime() const noexcept { return p_; }
  std::size_t size() const noexcept { return len_; }

  unsigned get(std::size_t i) const noexcept {
    return p_ == 2 ? static_cast<unsigned>((bits_[i >> 6] >> (i & 63)) & 1U) : vals_[i];
  }
  void set(std::size_t i, unsigned v) noexcept;

  /// this += c * other.
  void add_scaled(const GFVec& other, unsigned c) noexcept;
  void scale(unsigned c) noexcept;
  bool is_zero() const noexcept;
  /// First index >= from with a nonzero entry, or size() if none.
  std::size_t first_nonzero(std::size_t from = 0) const noexcept;
  std::size_t weight() const noexcept;

  friend bool operator==(const GFVec& a, const GFVec& b) noexcept {
    return a.p_ == b.p_ && a.len_ == b.len_ && a.bits_ == b.bits_ && a.vals_ == b.vals_;
  }

 private:
  unsigned p_ = 2;
  std::size_t len_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint8_t> vals_;
};

/// Dense matrix over GF(p), stored as rows. Vectors act on the right: v * M.
class GFMatrix {
 public:
  GFMatrix() = default;
  GFMatrix(unsigned p, std::size_t rows, std::size_t cols);
  static GFMatrix identity(unsigned p, std::size_t n);
  static GFMatrix from_rows(unsigned p, std::size_t cols, std::vector<GFVec> rows);
  static GFMatrix from_ints(unsigned p, const std::vector<std::vector<unsigned>>& entries);

  unsigned prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  unsigned get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, unsigned v) noexcept { rows_[r].set(c, v); }
  const GFVec& row(std::size_t r) const noexcept { return rows_[r]; }
  GFVec& row(std::size_t r) noexcept { return rows_[r]; }
  const std::vector<GFVec>& row_list() const noexcept { return rows_; }
  void append_row(GFVec v);

  GFMatrix operator*(const GFMatrix& rhs) const;
  GFMatrix operator+(const GFMatrix& rhs) const;
  GFMatrix scaled(unsigned c) const;
  GFMatrix transpose() const;
  bool is_zero() const noexcept;
  std::vector<std::vector<unsigned>> to_ints() const;

  friend bool operator==(const GFMatrix& a, const GFMatrix& b) noexcept {
    return a.p_ == b.p_ && a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  unsigned p_ = 2;
  std::size_t cols_ = 0;
  std::vector<GFVec> rows_;
};

/// v * M for a row vector v.
GFVec vec_mul(const GFVec& v, const GFMatrix& m);

/// Reduces in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(GFMatrix& m);
std::size_t rank(GFMatrix m);
/// Basis (as rows) of {x : M x^T = 0}.
GFMatrix nullspace(const GFMatrix& m);
/// Basis (as rows) of {v : v M = 0}.
GFMatrix left_nullspace(const GFMatrix& m);
/// Inverse of a square matrix; false if singular.
bool invert(const GFMatrix& m, GFMatrix& out);

/// A subspace kept in reduced row echelon form under insertion. Reducing a
/// vector touches only the basis rows whose pivots it actually hits, so sparse
/// input rows are cheap even against a large basis.
class RrefBasis {
 public:
  RrefBasis(unsigned p, std::size_t dim);

  unsigned prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Reduces v modulo the span in place.
  void reduce(GFVec& v) const;
  /// Inserts v if it is outside the span; returns whether it was.
  bool insert(GFVec v);
  bool contains(GFVec v) const;
  bool is_pivot(std::size_t c) const noexcept { return pivot_row_[c] != kNone; }

  /// Rows sorted by pivot column.
  GFMatrix basis() const;
  std::vector<std::size_t> pivots() const;

 private:
  static constexpr std::size_t kNone = ~std::size_t{0};
  unsigned p_;
  std::size_t dim_;
  std::vector<GFVec> rows_;
  std::vector<std::size_t> pivot_of_;  // row -> pivot column
  std::vector<std::size_t> pivot_row_;  // column -> row or kNone
};

}  // namespace twostar
