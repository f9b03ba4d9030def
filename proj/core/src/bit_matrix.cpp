#include "fourcirc/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

#include "fourcirc/error.hpp"

namespace fourcirc {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw Error(ErrorKind::BadCharacter, "binary string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.length_ != length_) throw Error(ErrorKind::LengthMismatch, "dot product of unequal lengths");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

bool BitVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) throw Error(ErrorKind::LengthMismatch, "xor of unequal lengths");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
  BitMatrix m;
  if (!rows.empty()) m.cols_ = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw Error(ErrorKind::LengthMismatch, "rows of unequal length");
  }
  m.data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
  std::vector<BitVector> v;
  v.reserve(rows.size());
  for (auto r : rows) v.push_back(BitVector::from_string(r));
  return from_rows(std::move(v));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r);
    }
  }
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw Error(ErrorKind::LengthMismatch, "matrix product shape mismatch");
  BitMatrix out(rows(), rhs.cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (get(r, k)) out.row(r) ^= rhs.row(k);
    }
  }
  return out;
}

BitMatrix BitMatrix::gram() const {
  BitMatrix out(rows(), rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < rows(); ++j) {
      if (data_[i].dot(data_[j])) out.set(i, j);
    }
  }
  return out;
}

bool BitMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const BitVector& r) { return r.is_zero(); });
}

RrefResult rref_in_column_order(const BitMatrix& m, std::span<const std::size_t> order) {
  if (m.empty()) throw Error(ErrorKind::InvalidArgument, "row reduction of an empty matrix");
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

  RrefResult out;
  std::size_t next = 0;
  for (std::size_t col : order) {
    if (next == rows.size()) break;
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    }
    out.pivot_cols.push_back(col);
    ++next;
  }
  out.rank = next;
  rows.resize(next);
  out.reduced = BitMatrix::from_rows(std::move(rows));
  return out;
}

RrefResult rref(const BitMatrix& m) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return rref_in_column_order(m, order);
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

bool is_self_orthogonal(const BitMatrix& g) { return g.gram().is_zero(); }

bool is_self_dual(const BitMatrix& g) {
  if (g.cols() % 2 != 0) throw Error(ErrorKind::OddLength, "self-duality needs even length");
  if (g.empty()) return false;
  return is_self_orthogonal(g) && rank(g) == g.cols() / 2;
}

bool is_doubly_even(const BitMatrix& g) {
  if (!is_self_orthogonal(g)) throw Error(ErrorKind::NotSelfOrthogonal, "G * G^T != 0");
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (g.row(i).weight() % 4 != 0) return false;
  }
  return true;
}

BitMatrix permute_columns(const BitMatrix& m, std::span<const std::size_t> col_perm) {
  if (col_perm.size() != m.cols()) throw Error(ErrorKind::LengthMismatch, "permutation size");
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < col_perm.size(); ++j) {
      if (m.get(r, col_perm[j])) out.set(r, j);
    }
  }
  return out;
}

StandardForm standard_form(const BitMatrix& g) {
  auto red = rref(g);
  if (red.rank < g.rows()) throw Error(ErrorKind::RankDeficient, "generator rows are linearly dependent");

  // Pivot columns first (in pivot order), then the rest in their original order.
  StandardForm out;
  std::vector<bool> is_pivot(g.cols(), false);
  for (auto c : red.pivot_cols) {
    out.col_perm.push_back(c);
    is_pivot[c] = true;
  }
  for (std::size_t c = 0; c < g.cols(); ++c) {
    if (!is_pivot[c]) out.col_perm.push_back(c);
  }
  out.matrix = permute_columns(red.reduced, out.col_perm);
  return out;
}

}  // namespace fourcirc
