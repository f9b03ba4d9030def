#pragma once

#include <cstddef>
#include <vector>

#include "fourcirc/bit_matrix.hpp"
#include "fourcirc/ring.hpp"

namespace fourcirc {

/// Dense matrix over one alphabet, stored as rows.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(Alphabet alphabet, std::size_t rows, std::size_t cols);
  /// Rows must share the alphabet and the length.
  RingMatrix(Alphabet alphabet, std::vector<RingVector> rows);

  static RingMatrix identity(Alphabet alphabet, std::size_t n);
  static RingMatrix all_ones(Alphabet alphabet, std::size_t n);

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t rows() const noexcept { return data_.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows() == cols_; }

  [[nodiscard]] const RingVector& row(std::size_t i) const { return data_[i]; }
  [[nodiscard]] RingElement at(std::size_t r, std::size_t c) const { return data_[r][c]; }
  void set(std::size_t r, std::size_t c, RingElement value) { data_[r].set(c, value); }

  [[nodiscard]] RingMatrix transpose() const;
  [[nodiscard]] RingMatrix operator*(const RingMatrix& rhs) const;
  [[nodiscard]] RingMatrix operator+(const RingMatrix& rhs) const;
  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

  /// Horizontal concatenation [this | rhs].
  [[nodiscard]] RingMatrix hconcat(const RingMatrix& rhs) const;
  /// Vertical stacking.
  [[nodiscard]] RingMatrix vconcat(const RingMatrix& rhs) const;

  /// F2 matrices convert losslessly; other alphabets throw AlphabetMismatch.
  [[nodiscard]] BitMatrix to_bits() const;

 private:
  Alphabet alphabet_ = Alphabet::F2;
  std::size_t cols_ = 0;
  std::vector<RingVector> data_;
};

/// (a1, ..., an) -> (lambda an, a1, ..., a(n-1)). Throws NonUnitLambda.
RingVector sigma_lambda(const RingVector& row, RingElement lambda);
/// (a1, ..., an) -> (a2, ..., an, lambda a1). Throws NonUnitLambda.
RingVector rho_lambda(const RingVector& row, RingElement lambda);

enum class CirculantKind { Circulant, ReverseCirculant };

struct CirculantSpec {
  RingElement lambda;
  RingVector first_row;
  CirculantKind kind = CirculantKind::Circulant;
};

/// Row i is sigma_lambda^i(first_row) or rho_lambda^i(first_row).
RingMatrix build(const CirculantSpec& spec);
RingMatrix lambda_circulant(const RingVector& first_row, RingElement lambda);
RingMatrix lambda_reverse_circulant(const RingVector& first_row, RingElement lambda);
inline RingMatrix circulant(const RingVector& first_row) {
  return lambda_circulant(first_row, RingElement::one(first_row.alphabet()));
}
inline RingMatrix reverse_circulant(const RingVector& first_row) {
  return lambda_reverse_circulant(first_row, RingElement::one(first_row.alphabet()));
}

/// Ones on the anti-diagonal. D * D = I.
RingMatrix backdiagonal(std::size_t n, Alphabet alphabet);

/// True iff row i+1 = sigma_lambda(row i) for every i.
bool is_lambda_circulant(const RingMatrix& m, RingElement lambda);
/// True iff row i+1 = rho_lambda(row i) for every i.
bool is_lambda_reverse_circulant(const RingMatrix& m, RingElement lambda);

}  // namespace fourcirc
