#include "twostar/gf.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "twostar/error.hpp"

namespace twostar {

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

unsigned inv_mod(unsigned a, unsigned p) noexcept {
  // Fermat; p is prime and small.
  unsigned long long r = 1, b = a % p;
  for (unsigned e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<unsigned>(r);
}

GFVec::GFVec(unsigned p, std::size_t len) : p_(p), len_(len) {
  if (p == 2) {
    bits_.assign((len + 63) / 64, 0);
  } else {
    vals_.assign(len, 0);
  }
}

void GFVec::set(std::size_t i, unsigned v) noexcept {
  if (p_ == 2) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v & 1U) {
      bits_[i >> 6] |= m;
    } else {
      bits_[i >> 6] &= ~m;
    }
  } else {
    vals_[i] = static_cast<std::uint8_t>(v % p_);
  }
}

void GFVec::add_scaled(const GFVec& other, unsigned c) noexcept {
  if (p_ == 2) {
    if ((c & 1U) == 0) return;
    for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] ^= other.bits_[w];
    return;
  }
  c %= p_;
  if (c == 0) return;
  for (std::size_t i = 0; i < len_; ++i) {
    if (other.vals_[i]) vals_[i] = static_cast<std::uint8_t>((vals_[i] + c * other.vals_[i]) % p_);
  }
}

void GFVec::scale(unsigned c) noexcept {
  if (p_ == 2) {
    if ((c & 1U) == 0) std::fill(bits_.begin(), bits_.end(), 0);
    return;
  }
  c %= p_;
  for (auto& v : vals_) v = static_cast<std::uint8_t>(v * c % p_);
}

bool GFVec::is_zero() const noexcept {
  if (p_ == 2) return std::all_of(bits_.begin(), bits_.end(), [](auto w) { return w == 0; });
  return std::all_of(vals_.begin(), vals_.end(), [](auto v) { return v == 0; });
}

std::size_t GFVec::first_nonzero(std::size_t from) const noexcept {
  if (from >= len_) return len_;
  if (p_ == 2) {
    std::size_t w = from >> 6;
    std::uint64_t word = bits_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word) return std::min(len_, (w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
      if (++w >= bits_.size()) return len_;
      word = bits_[w];
    }
  }
  for (std::size_t i = from; i < len_; ++i) {
    if (vals_[i]) return i;
  }
  return len_;
}

std::size_t GFVec::weight() const noexcept {
  if (p_ == 2) {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  return static_cast<std::size_t>(std::count_if(vals_.begin(), vals_.end(), [](auto v) { return v != 0; }));
}

GFMatrix::GFMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), cols_(cols), rows_(rows, GFVec(p, cols)) {}

GFMatrix GFMatrix::identity(unsigned p, std::size_t n) {
  GFMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

GFMatrix GFMatrix::from_rows(unsigned p, std::size_t cols, std::vector<GFVec> rows) {
  GFMatrix m(p, 0, cols);
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

GFMatrix GFMatrix::from_ints(unsigned p, const std::vector<std::vector<unsigned>>& entries) {
  const std::size_t cols = entries.empty() ? 0 : entries.front().size();
  GFMatrix m(p, entries.size(), cols);
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (entries[r].size() != cols) throw Error(Errc::MalformedInput, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, entries[r][c] % p);
  }
  return m;
}

void GFMatrix::append_row(GFVec v) {
  if (v.size() != cols_ || v.prime() != p_) throw Error(Errc::MalformedInput, "row shape mismatch");
  rows_.push_back(std::move(v));
}

GFMatrix GFMatrix::operator*(const GFMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw Error(Errc::MalformedInput, "matrix shape mismatch");
  GFMatrix out(p_, rows(), rhs.cols());
  for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] = vec_mul(rows_[i], rhs);
  return out;
}

GFMatrix GFMatrix::operator+(const GFMatrix& rhs) const {
  if (rows() != rhs.rows() || cols_ != rhs.cols_) throw Error(Errc::MalformedInput, "shape mismatch");
  GFMatrix out = *this;
  for (std::size_t i = 0; i < rows(); ++i) out.rows_[i].add_scaled(rhs.rows_[i], 1);
  return out;
}

GFMatrix GFMatrix::scaled(unsigned c) const {
  GFMatrix out = *this;
  for (auto& r : out.rows_) r.scale(c);
  return out;
}

GFMatrix GFMatrix::transpose() const {
  GFMatrix out(p_, cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = rows_[r].first_nonzero(); c < cols_; c = rows_[r].first_nonzero(c + 1)) {
      out.set(c, r, rows_[r].get(c));
    }
  }
  return out;
}

bool GFMatrix::is_zero() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](const GFVec& v) { return v.is_zero(); });
}

std::vector<std::vector<unsigned>> GFMatrix::to_ints() const {
  std::vector<std::vector<unsigned>> out(rows(), std::vector<unsigned>(cols_));
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = get(r, c);
  }
  return out;
}

GFVec vec_mul(const GFVec& v, const GFMatrix& m) {
  GFVec out(m.prime(), m.cols());
  for (std::size_t k = v.first_nonzero(); k < v.size(); k = v.first_nonzero(k + 1)) {
    out.add_scaled(m.row(k), v.get(k));
  }
  return out;
}

std::vector<std::size_t> rref(GFMatrix& m) {
  const unsigned p = m.prime();
  std::vector<GFVec> rows = m.row_list();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv].get(c) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    rows[r].scale(inv_mod(rows[r].get(c), p));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r) {
        const unsigned e = rows[i].get(c);
        if (e) rows[i].add_scaled(rows[r], p - e);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  m = GFMatrix::from_rows(p, m.cols(), std::move(rows));
  return pivots;
}

std::size_t rank(GFMatrix m) { return rref(m).size(); }

GFMatrix nullspace(const GFMatrix& m) {
  const unsigned p = m.prime();
  GFMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  GFMatrix out(p, 0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    GFVec v(p, m.cols());
    v.set(f, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const unsigned e = r.get(i, f);
      if (e) v.set(pivots[i], p - e);
    }
    out.append_row(std::move(v));
  }
  return out;
}

GFMatrix left_nullspace(const GFMatrix& m) { return nullspace(m.transpose()); }

bool invert(const GFMatrix& m, GFMatrix& out) {
  const std::size_t n = m.rows();
  if (m.cols() != n) return false;
  const unsigned p = m.prime();
  GFMatrix aug(p, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.get(i, j));
    aug.set(i, n + i, 1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return false;
  out = GFMatrix(p, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, aug.get(i, n + j));
  }
  return true;
}

RrefBasis::RrefBasis(unsigned p, std::size_t dim) : p_(p), dim_(dim), pivot_row_(dim, kNone) {}

void RrefBasis::reduce(GFVec& v) const {
  for (std::size_t c = v.first_nonzero(); c < dim_; c = v.first_nonzero(c + 1)) {
    const std::size_t r = pivot_row_[c];
    if (r != kNone) v.add_scaled(rows_[r], p_ - v.get(c));
  }
}

bool RrefBasis::insert(GFVec v) {
  reduce(v);
  const std::size_t c = v.first_nonzero();
  if (c == dim_) return false;
  v.scale(inv_mod(v.get(c), p_));
  for (auto& row : rows_) {
    const unsigned e = row.get(c);
    if (e) row.add_scaled(v, p_ - e);
  }
  pivot_row_[c] = rows_.size();
  pivot_of_.push_back(c);
  rows_.push_back(std::move(v));
  return true;
}

bool RrefBasis::contains(GFVec v) const {
  reduce(v);
  return v.is_zero();
}

GFMatrix RrefBasis::basis() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivot_of_[a] < pivot_of_[b]; });
  GFMatrix out(p_, 0, dim_);
  for (auto i : order) out.append_row(rows_[i]);
  return out;
}

std::vector<std::size_t> RrefBasis::pivots() const {
  std::vector<std::size_t> out = pivot_of_;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twostar
