#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "fourcirc/codec.hpp"
#include "fourcirc/constructions.hpp"
#include "fourcirc/ring.hpp"
#include "fourcirc/weight_distribution.hpp"

namespace fourcirc {

struct SearchTarget {
  Family family = Family::Unknown;
  std::set<std::int64_t> betas;   ///< empty accepts any beta
  std::set<std::int64_t> gammas;  ///< empty accepts any gamma

  friend bool operator==(const SearchTarget&, const SearchTarget&) = default;
};

struct SearchConfig {
  Alphabet alphabet = Alphabet::F2;
  /// FourCirculant, Modified, Bordered or Extension.
  Construction construction = Construction::Modified;
  /// Block order; ignored for Extension, which takes its length from the parent.
  std::size_t n = 0;
  /// Empty means every unit of the alphabet.
  std::vector<RingElement> lambda_pool;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<SearchTarget> target;
  std::size_t w_max = 14;
  unsigned workers = 1;
  /// Smallest binary minimum distance worth keeping; defaults to the extremal bound.
  std::optional<std::size_t> min_distance;
  /// Parent code of an Extension search.
  std::optional<CodeRecord> parent;
  /// Extension searches draw X only for coordinates [0, free_prefix) and fill
  /// the rest with a fixed value (the Table 4 shape); 0 draws every coordinate.
  std::size_t free_prefix = 0;

  friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

/// Throws ConfigInvalid.
void validate(const SearchConfig& config);

/// Reads a JSON config, then applies FOURCIRC_SEED and FOURCIRC_WORKERS from the environment.
/// A "parent" entry names a record file, resolved relative to the config file.
SearchConfig load_search_config(const std::filesystem::path& path);
SearchConfig parse_search_config(std::string_view json_text, const std::filesystem::path& base_dir = {});

struct SearchReport {
  std::uint64_t attempted = 0;
  std::uint64_t condition_passed = 0;
  std::uint64_t self_dual_built = 0;
  std::uint64_t extremal_found = 0;
  std::uint64_t distinct_profiles = 0;
  std::vector<StoredRecord> hits;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Trials are dealt round-robin to `workers` threads; worker w draws from the
/// seed's stream jumped w times. Hits are ordered by trial index and deduplicated
/// by (n, family, beta, gamma, histogram). When `store` is given the hits are
/// appended to it.
SearchReport run_search(const SearchConfig& config, const std::optional<std::filesystem::path>& store = {});

/// Analysis of a binary basis truncated at w_max, widened if no codeword is seen.
struct Measurement {
  WeightProfile profile;
  RecordAnalysis analysis;
};
Measurement measure(const BitMatrix& basis, std::size_t w_max = 14, unsigned workers = 1);

}  // namespace fourcirc
