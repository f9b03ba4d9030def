#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fourcirc/bit_matrix.hpp"
#include "fourcirc/circulant.hpp"
#include "fourcirc/ring.hpp"

namespace fourcirc {

enum class Construction : std::uint8_t {
  FourCirculant,  ///< classic [I | A B ; -B^T A^T], A and B circulant
  Modified,       ///< [I | A B ; -B A], A lambda-circulant, B lambda-reverse-circulant
  Bordered,       ///< bordered version of Modified with lambda = 1, n odd
  Extension,      ///< length n + 2 extension by (X, c)
  Gray,           ///< binary Gray image of a ring code
  PhiU,           ///< R2 -> R1 image
};

std::string_view to_string(Construction c) noexcept;
Construction parse_construction(std::string_view text);

/// How a tabulated r_B defines the reverse-circulant block B.
enum class ReverseBlockRow : std::uint8_t {
  /// B = C * D, C the lambda-circulant with first row r_B (the tables' notation).
  CirculantTimesBackdiagonal,
  /// B is the lambda-reverse-circulant whose first row is r_B itself.
  FirstRow,
};

std::string_view to_string(ReverseBlockRow c) noexcept;
ReverseBlockRow parse_reverse_block_row(std::string_view text);

/// The reverse-circulant block for a tabulated r_B.
RingMatrix reverse_block(const RingVector& rb, RingElement lambda,
                         ReverseBlockRow convention = ReverseBlockRow::CirculantTimesBackdiagonal);

/// Everything needed to rebuild a record. Fields a construction does not use stay empty.
struct Provenance {
  Construction construction = Construction::Modified;
  std::optional<RingElement> lambda;
  std::optional<RingVector> ra;
  std::optional<RingVector> rb;
  std::optional<ReverseBlockRow> rb_convention;
  std::optional<RingElement> x;
  std::optional<RingElement> y;
  std::optional<RingVector> ext_vector;  ///< X of the extension
  std::optional<RingElement> c;
  std::optional<PhiUVariant> phi_u_variant;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> parent_id;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// A self-dual code over an alphabet: a generator matrix plus how it was made.
/// Construction functions never return a record whose code is not self-dual.
struct CodeRecord {
  Alphabet alphabet = Alphabet::F2;
  RingMatrix generator;
  Provenance provenance;

  [[nodiscard]] std::size_t length() const noexcept { return generator.cols(); }
  /// Length of the binary Gray image.
  [[nodiscard]] std::size_t binary_length() const noexcept { return length() * element_width(alphabet); }
  /// Stable content hash of alphabet and generator (16 hex digits).
  [[nodiscard]] std::string id() const;

  friend bool operator==(const CodeRecord&, const CodeRecord&) = default;
};

/// Binary images phi(m * r) of every generator row r and every F2-basis
/// element m of the alphabet ({1}, {1, u} or {1, u, v, uv}).
BitMatrix gray_generator(const RingMatrix& g);
/// Row-reduced basis of the binary image; rows() equals the binary dimension.
BitMatrix binary_basis(const CodeRecord& r);

/// G * G^T == 0 over the ring.
bool is_self_orthogonal(const RingMatrix& g);

struct RowSumClass {
  enum class Verdict { BothUnits, BothNonUnits, Mixed };
  RingElement sum_a;
  RingElement sum_b;
  Verdict verdict = Verdict::Mixed;
};

RowSumClass rowsum_class(const RingVector& ra, const RingVector& rb);

/// Block conditions without building the record; the search driver uses these as cheap filters.
/// A A^T + B B^T does not depend on the r_B convention.
bool modified_condition_holds(const RingVector& ra, const RingVector& rb, RingElement lambda);
bool classic_condition_holds(const RingVector& ra, const RingVector& rb);
bool bordered_condition_holds(const RingVector& ra, const RingVector& rb);

CodeRecord four_circulant_classic(const RingVector& ra, const RingVector& rb);
CodeRecord modified_four_circulant(const RingVector& ra, const RingVector& rb, RingElement lambda,
                                   ReverseBlockRow convention = ReverseBlockRow::CirculantTimesBackdiagonal);
/// Generator [I_{2n+2} | M] of length 4n + 4.
CodeRecord bordered_four_circulant(const RingVector& ra, const RingVector& rb, RingElement x, RingElement y,
                                   ReverseBlockRow convention = ReverseBlockRow::CirculantTimesBackdiagonal);
CodeRecord extend(const CodeRecord& parent, const RingVector& ext_vector, RingElement c);

/// F2 record of the binary image.
CodeRecord gray_record(const CodeRecord& parent);
/// R1 record of phi_u(parent); the generator holds phi_u(r) and phi_u(w r) for each row r.
CodeRecord phi_u_record(const CodeRecord& parent, PhiUVariant variant = PhiUVariant::AlongV);

/// Rebuilds a record from its provenance. Extension, Gray and PhiU records need their parent.
CodeRecord replay(const Provenance& p, const CodeRecord* parent = nullptr);

}  // namespace fourcirc
