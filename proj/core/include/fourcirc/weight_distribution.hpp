#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fourcirc/bit_matrix.hpp"

namespace fourcirc {

/// Codeword counts by Hamming weight. A truncated profile covers weights 0..w_max only.
struct WeightProfile {
  std::size_t n = 0;
  std::vector<std::uint64_t> histogram;  ///< histogram[w] = A_w
  bool complete = false;

  /// Largest weight whose count is known.
  [[nodiscard]] std::size_t max_weight() const noexcept { return histogram.empty() ? 0 : histogram.size() - 1; }
  [[nodiscard]] bool covers(std::size_t w) const noexcept { return w < histogram.size(); }
  /// Throws MissingWeights if w is outside the covered range.
  [[nodiscard]] std::uint64_t count(std::size_t w) const;
  /// Smallest nonzero weight with a nonzero count, if any is covered.
  [[nodiscard]] std::optional<std::size_t> min_nonzero_weight() const noexcept;
  [[nodiscard]] std::uint64_t total() const noexcept;

  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

enum class EnumerationMethod {
  Auto,
  /// All 2^k information patterns in Gray-code order, one row XOR per step.
  GrayCode,
  /// Exact low-weight count over two disjoint information sets; needs w_max.
  SplitInformationSets,
};

struct EnumerationOptions {
  std::optional<std::size_t> w_max;
  unsigned workers = 1;
  /// Gray-code runs split the information space on the top `partition_bits`
  /// bits; 0 picks a value from `workers`.
  std::optional<unsigned> partition_bits;
  EnumerationMethod method = EnumerationMethod::Auto;
};

inline constexpr std::size_t kMaxDimension = 40;
inline constexpr std::size_t kMaxLength = 128;

/// Weight distribution of the code generated by g. Requires rank(g) = rows(g)
/// (RankDeficient), rows(g) <= kMaxDimension and cols(g) <= kMaxLength
/// (DimensionTooLarge).
WeightProfile weight_distribution(const BitMatrix& g, const EnumerationOptions& options = {});
inline WeightProfile weight_distribution(const BitMatrix& g, std::optional<std::size_t> w_max) {
  EnumerationOptions options;
  options.w_max = w_max;
  return weight_distribution(g, options);
}

/// Exact minimum distance. With a hint the first pass is truncated there and
/// widened only if no codeword is found.
std::size_t minimum_distance(const BitMatrix& g, std::optional<std::size_t> w_max_hint = {}, unsigned workers = 1);

/// Two column sets that are both information sets, if the code has them.
struct DisjointInformationSets {
  BitMatrix first;   ///< basis that is the identity on `first_set`
  BitMatrix second;  ///< basis that is the identity on `second_set`
  std::vector<std::size_t> first_set;
  std::vector<std::size_t> second_set;
};
std::optional<DisjointInformationSets> find_disjoint_information_sets(const BitMatrix& g);

enum class Family { W64_1, W64_2, W66_1, W66_2, W66_3, W68_1, W68_2, Unknown };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view text);

struct EnumeratorClass {
  Family family = Family::Unknown;
  std::optional<std::int64_t> beta;
  std::optional<std::int64_t> gamma;
  /// A W68_1 match is also W68_2 with gamma = 16.
  bool ambiguous = false;

  friend bool operator==(const EnumeratorClass&, const EnumeratorClass&) = default;
};

/// Matches A_12 and A_14 against the extremal enumerator families of lengths 64, 66 and 68.
/// Throws UnsupportedLength or MissingWeights.
EnumeratorClass classify(const WeightProfile& profile);

/// Rains bound: 4 floor(n/24) + 6 if n = 22 mod 24, else 4 floor(n/24) + 4.
std::size_t extremal_bound(std::size_t n);
bool is_extremal(std::size_t n, std::size_t d);

}  // namespace fourcirc
