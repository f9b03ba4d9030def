#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fourcirc {

/// Packed vector over F2. Coordinate i lives in bit (i % 64) of word i / 64;
/// bits at positions >= size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  /// Parses a string of '0'/'1' characters, leftmost character = coordinate 0.
  static BitVector from_string(std::string_view bits);

  [[nodiscard]] std::size_t size() const noexcept { return length_; }
  [[nodiscard]] bool get(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value = true) noexcept;
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  [[nodiscard]] std::size_t weight() const noexcept;
  /// Parity of the coordinatewise product.
  [[nodiscard]] bool dot(const BitVector& other) const;
  [[nodiscard]] bool is_zero() const noexcept;

  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
  [[nodiscard]] std::span<std::uint64_t> words() noexcept { return words_; }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// All rows must share one length.
  static BitMatrix from_rows(std::vector<BitVector> rows);
  static BitMatrix from_strings(std::span<const std::string_view> rows);
  static BitMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return data_.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return data_.empty() || cols_ == 0; }

  [[nodiscard]] const BitVector& row(std::size_t i) const { return data_[i]; }
  [[nodiscard]] BitVector& row(std::size_t i) { return data_[i]; }
  [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }

  [[nodiscard]] BitMatrix transpose() const;
  [[nodiscard]] BitMatrix operator*(const BitMatrix& rhs) const;
  /// this * this^T
  [[nodiscard]] BitMatrix gram() const;
  [[nodiscard]] bool is_zero() const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

struct RrefResult {
  BitMatrix reduced;  ///< nonzero rows only, in echelon order
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Throws InvalidArgument on an empty matrix.
RrefResult rref(const BitMatrix& m);

/// Row reduction that scans columns in the given order. Pivots are reported as
/// original column indices and rows stay in original coordinates.
RrefResult rref_in_column_order(const BitMatrix& m, std::span<const std::size_t> order);

std::size_t rank(const BitMatrix& m);

bool is_self_orthogonal(const BitMatrix& g);
bool is_self_dual(const BitMatrix& g);
bool is_doubly_even(const BitMatrix& g);

struct StandardForm {
  BitMatrix matrix;  ///< [I_k | A]
  /// matrix column j holds original column col_perm[j].
  std::vector<std::size_t> col_perm;
};

/// Column-permuted systematic form. Throws RankDeficient if rank < rows.
StandardForm standard_form(const BitMatrix& g);

BitMatrix permute_columns(const BitMatrix& m, std::span<const std::size_t> col_perm);

}  // namespace fourcirc
