#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "fourcirc/bit_matrix.hpp"

namespace fourcirc {

/// F2, R1 = F2 + uF2, R2 = F2 + uF2 + vF2 + uvF2 (u^2 = v^2 = 0, char 2).
enum class Alphabet : std::uint8_t { F2, R1, R2 };

std::string_view to_string(Alphabet a) noexcept;
/// Accepts "f2", "r1", "r2" (any case).
Alphabet parse_alphabet(std::string_view text);
/// Bits per element: 1, 2, 4.
unsigned element_width(Alphabet a) noexcept;

/// An element a + b*u + c*v + d*uv stored as the nibble (d c b a), so the
/// nibble is also the element's hex digit under the basis {uv, v, u, 1}.
/// Coefficients the alphabet does not have are always zero.
class RingElement {
 public:
  RingElement() = default;
  /// Throws InvalidArgument if `nibble` uses coefficients outside the alphabet.
  RingElement(Alphabet alphabet, unsigned nibble);

  static RingElement zero(Alphabet a) { return {a, 0}; }
  static RingElement one(Alphabet a) { return {a, 1}; }

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] unsigned nibble() const noexcept { return bits_; }
  [[nodiscard]] bool constant() const noexcept { return bits_ & 1u; }
  [[nodiscard]] bool u_coeff() const noexcept { return (bits_ >> 1) & 1u; }
  [[nodiscard]] bool v_coeff() const noexcept { return (bits_ >> 2) & 1u; }
  [[nodiscard]] bool uv_coeff() const noexcept { return (bits_ >> 3) & 1u; }

  [[nodiscard]] bool is_zero() const noexcept { return bits_ == 0; }
  /// Units are exactly the elements with constant term 1.
  [[nodiscard]] bool is_unit() const noexcept { return constant(); }
  /// Every unit squares to 1, so it is its own inverse. Throws NonUnitLambda otherwise.
  [[nodiscard]] RingElement inverse() const;

  friend RingElement operator+(RingElement x, RingElement y);
  friend RingElement operator*(RingElement x, RingElement y);
  RingElement& operator+=(RingElement y) { return *this = *this + y; }
  friend bool operator==(RingElement, RingElement) = default;

 private:
  Alphabet alphabet_ = Alphabet::F2;
  std::uint8_t bits_ = 0;
};

RingElement mul(RingElement x, RingElement y);
bool is_unit(RingElement x) noexcept;

/// All elements (ascending nibble order) and all units of an alphabet.
std::vector<RingElement> elements(Alphabet a);
std::vector<RingElement> units(Alphabet a);

class RingVector {
 public:
  RingVector() = default;
  RingVector(Alphabet alphabet, std::size_t length);
  /// Throws AlphabetMismatch if any entry is over another alphabet.
  RingVector(Alphabet alphabet, std::vector<RingElement> entries);
  /// Convenience: entries given as nibbles.
  static RingVector from_nibbles(Alphabet alphabet, std::initializer_list<unsigned> nibbles);
  static RingVector from_nibbles(Alphabet alphabet, std::span<const unsigned> nibbles);
  static RingVector constant(Alphabet alphabet, std::size_t length, RingElement value);

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] RingElement operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, RingElement value);
  [[nodiscard]] std::span<const RingElement> entries() const noexcept { return entries_; }

  [[nodiscard]] RingVector scaled(RingElement s) const;
  [[nodiscard]] RingElement sum() const;
  RingVector& operator+=(const RingVector& other);
  friend RingVector operator+(RingVector lhs, const RingVector& rhs) { return lhs += rhs; }
  friend bool operator==(const RingVector&, const RingVector&) = default;

 private:
  Alphabet alphabet_ = Alphabet::F2;
  std::vector<RingElement> entries_;
};

RingElement inner_product(const RingVector& x, const RingVector& y);

/// phi1(a + u b) = (b, a + b); length doubles.
BitVector gray_phi1(const RingVector& v);
/// phi2(a + u b + v c + uv d) = (d, c + d, b + d, a + b + c + d); length quadruples.
BitVector gray_phi2(const RingVector& v);
/// phi1 for R1, phi2 for R2, identity embedding for F2.
BitVector gray_image(const RingVector& v);

/// How an R2 vector is split into two R1 halves before the Gray-style map.
enum class PhiUVariant : std::uint8_t {
  /// x + v y with x, y in F2 + uF2.
  AlongV,
  /// x + u y with x, y in F2 + vF2, then v renamed to u.
  AlongU,
};

/// R2^n -> R1^2n, x + w y |-> (y, x + y) with w the split variable.
RingVector phi_u(const RingVector& v, PhiUVariant variant = PhiUVariant::AlongV);
/// The R1-scalar that multiplies across the split (v for AlongV, u for AlongU).
RingElement phi_u_split_scalar(PhiUVariant variant);

}  // namespace fourcirc
