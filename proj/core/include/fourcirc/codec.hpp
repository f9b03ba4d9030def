#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourcirc/constructions.hpp"
#include "fourcirc/ring.hpp"
#include "fourcirc/weight_distribution.hpp"

namespace fourcirc {

// Row notation:
//   F2  characters 0 1
//   R1  characters 0 1 u 3        (3 = 1 + u)
//   R2  hex digits 0-9 A-F        (bits b3 b2 b1 b0 = b3 uv + b2 v + b1 u + b0)
// Rows may be wrapped in parentheses and separated by commas or spaces.

RingElement parse_element(Alphabet alphabet, std::string_view text);
std::string format_element(RingElement e);

/// Throws BadCharacter or EmptyRow.
RingVector parse_row(Alphabet alphabet, std::string_view text);
/// Canonical text: no separators, uppercase hex. `separator` goes between entries.
std::string format_row(const RingVector& v, std::string_view separator = "");

/// Coordinate 0 is the most significant bit of the first digit; the tail is zero-padded.
std::string to_hex(const BitVector& v);
BitVector from_hex(std::string_view hex, std::size_t length);

/// Parameters measured on a record's binary image.
struct RecordAnalysis {
  std::size_t d = 0;
  EnumeratorClass enumerator;

  friend bool operator==(const RecordAnalysis&, const RecordAnalysis&) = default;
};

struct StoredRecord {
  CodeRecord record;
  std::optional<RecordAnalysis> analysis;
  std::uint64_t timestamp = 0;

  friend bool operator==(const StoredRecord&, const StoredRecord&) = default;
};

/// One JSON object, no trailing newline, fixed field order.
std::string serialize_record(const StoredRecord& r);
/// Throws ParseError on malformed input or an id that does not match the generator.
StoredRecord parse_record(std::string_view line);

/// Appends one line per record.
void append_records(const std::filesystem::path& path, const std::vector<StoredRecord>& records);
/// Overwrites the file with one line per record.
void write_records(const std::filesystem::path& path, const std::vector<StoredRecord>& records);
std::vector<StoredRecord> read_records(const std::filesystem::path& path);

}  // namespace fourcirc
