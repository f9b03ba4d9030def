#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fourcirc/constructions.hpp"
#include "fourcirc/weight_distribution.hpp"

namespace fourcirc {

/// One published code: how to build it and the parameters it must have.
struct TableRow {
  std::string_view name;
  Construction construction = Construction::Modified;
  Alphabet alphabet = Alphabet::F2;
  std::string_view lambda;  ///< empty means 1
  std::string_view ra;
  std::string_view rb;
  /// Border symbols of a bordered row.
  std::string_view border_x;
  std::string_view border_y;
  /// Extension rows: the parent row's name and the extension data.
  std::string_view parent;
  std::string_view x;
  std::string_view c;
  Family family = Family::Unknown;
  std::int64_t beta = 0;
  std::optional<std::int64_t> gamma;
  /// Expect a doubly-even image instead of a Type I family.
  bool type_ii = false;
};

struct PaperTable {
  int id = 0;
  std::string_view title;
  std::span<const TableRow> rows;
  /// FNV-1a over the row fields, pinned at transcription time.
  std::uint64_t checksum = 0;
};

/// Throws UnknownTable for ids outside 1..7.
const PaperTable& paper_table(int id);
std::uint64_t compute_checksum(std::span<const TableRow> rows);

/// Rebuilds a row. Extension rows of Tables 4 and 5 extend a Table 3 code;
/// rows of Table 7 extend phi_u of a Table 2 code.
CodeRecord build_row(const TableRow& row);

struct RowCheck {
  std::string name;
  bool self_dual = false;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  EnumeratorClass got;
  bool passed = false;
  std::string detail;
};

struct TableReport {
  int id = 0;
  bool checksum_ok = false;
  std::vector<RowCheck> rows;

  [[nodiscard]] bool passed() const noexcept;
};

/// Rows are selected by name or 1-based index; an empty selection checks every row.
/// Throws UnknownTable, or InvalidArgument for an unknown row.
TableReport verify_table(int id, std::span<const std::string> rows = {}, unsigned workers = 1);

/// The two worked examples outside the tables.
enum class PaperExample {
  BorderedR1,     ///< R1 bordered code whose phi1 image is a Type II [64,32,12] code
  PhiUExtension,  ///< extensions of phi_u(D_{64,21}) with beta 155 and 157
};
std::string_view to_string(PaperExample e) noexcept;
PaperExample parse_paper_example(std::string_view text);
TableReport verify_example(PaperExample e, unsigned workers = 1);

}  // namespace fourcirc
