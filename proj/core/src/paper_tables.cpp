#include "fourcirc/paper_tables.hpp"

#include <algorithm>
#include <charconv>

#include "fourcirc/codec.hpp"
#include "fourcirc/error.hpp"
#include "fourcirc/search.hpp"

namespace fourcirc {

namespace {

// Table 1: binary modified four-circulant codes of length 64, beta in W64_2.
constexpr TableRow kTable1[] = {
    {"B64_1", Construction::Modified, Alphabet::F2, "", "0101110001100111", "1011010101010100", "", "", "", "", "", Family::W64_2, 0, std::nullopt, false},
    {"B64_2", Construction::Modified, Alphabet::F2, "", "1010101011110101", "0110110001001001", "", "", "", "", "", Family::W64_2, 8, std::nullopt, false},
    {"B64_3", Construction::Modified, Alphabet::F2, "", "0111000010111110", "0011001111010010", "", "", "", "", "", Family::W64_2, 16, std::nullopt, false},
    {"B64_4", Construction::Modified, Alphabet::F2, "", "1011001001100101", "0110100101000000", "", "", "", "", "", Family::W64_2, 24, std::nullopt, false},
    {"B64_5", Construction::Modified, Alphabet::F2, "", "1100110010100010", "1110010010111110", "", "", "", "", "", Family::W64_2, 32, std::nullopt, false},
    {"B64_6", Construction::Modified, Alphabet::F2, "", "1000111110101000", "0110100011011101", "", "", "", "", "", Family::W64_2, 40, std::nullopt, false},
    {"B64_7", Construction::Modified, Alphabet::F2, "", "0100010000111100", "1011101010000001", "", "", "", "", "", Family::W64_2, 48, std::nullopt, false},
    {"B64_8", Construction::Modified, Alphabet::F2, "", "1111011010000100", "1101010101100011", "", "", "", "", "", Family::W64_2, 56, std::nullopt, false},
    {"B64_9", Construction::Modified, Alphabet::F2, "", "1000110110110001", "1011001001101011", "", "", "", "", "", Family::W64_2, 64, std::nullopt, false},
    {"B64_10", Construction::Modified, Alphabet::F2, "", "0101110111001111", "0001000111000110", "", "", "", "", "", Family::W64_2, 72, std::nullopt, false},
};

// Table 2: R2 codes with lambda, Gray images in W64_2.
constexpr TableRow kTable2[] = {
    {"D64_1", Construction::Modified, Alphabet::R2, "5", "6,5,A,E", "D,7,D,5", "", "", "", "", "", Family::W64_2, 0, std::nullopt, false},
    {"D64_2", Construction::Modified, Alphabet::R2, "B", "1,6,3,B", "1,8,7,4", "", "", "", "", "", Family::W64_2, 1, std::nullopt, false},
    {"D64_3", Construction::Modified, Alphabet::R2, "7", "9,7,9,D", "5,C,A,A", "", "", "", "", "", Family::W64_2, 4, std::nullopt, false},
    {"D64_4", Construction::Modified, Alphabet::R2, "7", "5,2,3,9", "7,4,3,8", "", "", "", "", "", Family::W64_2, 5, std::nullopt, false},
    {"D64_5", Construction::Modified, Alphabet::R2, "7", "6,F,A,B", "C,9,3,1", "", "", "", "", "", Family::W64_2, 8, std::nullopt, false},
    {"D64_6", Construction::Modified, Alphabet::R2, "D", "9,E,D,B", "F,A,5,0", "", "", "", "", "", Family::W64_2, 9, std::nullopt, false},
    {"D64_7", Construction::Modified, Alphabet::R2, "7", "4,9,F,9", "7,8,B,6", "", "", "", "", "", Family::W64_2, 12, std::nullopt, false},
    {"D64_8", Construction::Modified, Alphabet::R2, "D", "F,E,3,3", "D,2,B,4", "", "", "", "", "", Family::W64_2, 13, std::nullopt, false},
    {"D64_9", Construction::Modified, Alphabet::R2, "3", "3,3,5,B", "8,4,2,9", "", "", "", "", "", Family::W64_2, 16, std::nullopt, false},
    {"D64_10", Construction::Modified, Alphabet::R2, "B", "D,4,7,9", "D,6,B,0", "", "", "", "", "", Family::W64_2, 17, std::nullopt, false},
    {"D64_11", Construction::Modified, Alphabet::R2, "D", "3,7,9,B", "3,2,E,E", "", "", "", "", "", Family::W64_2, 20, std::nullopt, false},
    {"D64_12", Construction::Modified, Alphabet::R2, "7", "E,7,0,4", "B,3,5,7", "", "", "", "", "", Family::W64_2, 21, std::nullopt, false},
    {"D64_13", Construction::Modified, Alphabet::R2, "7", "C,1,1,9", "5,2,F,8", "", "", "", "", "", Family::W64_2, 24, std::nullopt, false},
    {"D64_14", Construction::Modified, Alphabet::R2, "7", "8,B,6,2", "1,1,D,F", "", "", "", "", "", Family::W64_2, 25, std::nullopt, false},
    {"D64_15", Construction::Modified, Alphabet::R2, "B", "C,D,0,3", "D,E,7,5", "", "", "", "", "", Family::W64_2, 28, std::nullopt, false},
    {"D64_16", Construction::Modified, Alphabet::R2, "B", "6,7,C,4", "F,D,9,D", "", "", "", "", "", Family::W64_2, 29, std::nullopt, false},
    {"D64_17", Construction::Modified, Alphabet::R2, "3", "5,4,1,4", "7,B,7,6", "", "", "", "", "", Family::W64_2, 32, std::nullopt, false},
    {"D64_18", Construction::Modified, Alphabet::R2, "D", "8,5,4,2", "1,B,5,1", "", "", "", "", "", Family::W64_2, 33, std::nullopt, false},
    {"D64_19", Construction::Modified, Alphabet::R2, "B", "9,9,C,3", "8,1,A,F", "", "", "", "", "", Family::W64_2, 36, std::nullopt, false},
    {"D64_20", Construction::Modified, Alphabet::R2, "5", "E,A,D,6", "F,3,B,D", "", "", "", "", "", Family::W64_2, 48, std::nullopt, false},
    {"D64_21", Construction::Modified, Alphabet::R2, "D", "6,9,0,3", "A,9,3,1", "", "", "", "", "", Family::W64_2, 64, std::nullopt, false},
    {"D64_22", Construction::Modified, Alphabet::R2, "5", "A,9,D,1", "F,8,5,E", "", "", "", "", "", Family::W64_2, 80, std::nullopt, false},
};

// Table 3: bordered binary codes of length 64, beta in W64_1.
constexpr TableRow kTable3[] = {
    {"C64_1", Construction::Bordered, Alphabet::F2, "", "001101000000011", "011000010011011", "1", "0", "", "", "", Family::W64_1, 14, std::nullopt, false},
    {"C64_2", Construction::Bordered, Alphabet::F2, "", "010001101111110", "111111100011110", "1", "0", "", "", "", Family::W64_1, 14, std::nullopt, false},
    {"C64_3", Construction::Bordered, Alphabet::F2, "", "001101111000010", "110010110110011", "1", "0", "", "", "", Family::W64_1, 29, std::nullopt, false},
    {"C64_4", Construction::Bordered, Alphabet::F2, "", "111010001101101", "100101000001111", "1", "0", "", "", "", Family::W64_1, 44, std::nullopt, false},
    {"C64_5", Construction::Bordered, Alphabet::F2, "", "101000110101111", "000000000011100", "1", "0", "", "", "", Family::W64_1, 44, std::nullopt, false},
    {"C64_6", Construction::Bordered, Alphabet::F2, "", "101101011101111", "001000001110001", "1", "0", "", "", "", Family::W64_1, 59, std::nullopt, false},
    {"C64_7", Construction::Bordered, Alphabet::F2, "", "011000100111111", "011000000000010", "1", "0", "", "", "", Family::W64_1, 74, std::nullopt, false},
};

// Table 4: extensions of Table 3 codes, X ends in 32 ones, beta in W66_3.
constexpr TableRow kTable4[] = {
    {"C64_5+X1", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_5", "1100110111001000110111101110110011111111111111111111111111111111", "1", Family::W66_3, 52, std::nullopt, false},
    {"C64_4+X2", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_4", "1111010101101011101011010000000111111111111111111111111111111111", "1", Family::W66_3, 61, std::nullopt, false},
    {"C64_5+X3", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_5", "0010010101100000100011101010110011111111111111111111111111111111", "1", Family::W66_3, 64, std::nullopt, false},
    {"C64_7+X4", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_7", "1111010010010001111010010110010111111111111111111111111111111111", "1", Family::W66_3, 81, std::nullopt, false},
    {"C64_7+X5", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_7", "1111001101000100000011110101111011111111111111111111111111111111", "1", Family::W66_3, 83, std::nullopt, false},
    {"C64_7+X6", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_7", "0010101111101010011000100101111011111111111111111111111111111111", "1", Family::W66_3, 84, std::nullopt, false},
    {"C64_7+X7", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_7", "0010111100011101000010101011110111111111111111111111111111111111", "1", Family::W66_3, 85, std::nullopt, false},
    {"C64_7+X8", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_7", "1100100001110000010101001100011011111111111111111111111111111111", "1", Family::W66_3, 87, std::nullopt, false},
    {"C64_7+X9", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_7", "1111100001000010001101101010010111111111111111111111111111111111", "1", Family::W66_3, 90, std::nullopt, false},
    {"C64_7+X10", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_7", "0101011000010011001100011000001111111111111111111111111111111111", "1", Family::W66_3, 92, std::nullopt, false},
};

// Table 5: extensions of Table 3 codes with a full X, beta in W66_3.
constexpr TableRow kTable5[] = {
    {"C64_3+Y1", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_3", "1100110010100000010111010111000010110000110011010000111001101100", "1", Family::W66_3, 46, std::nullopt, false},
    {"C64_5+Y2", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_5", "0010001010110101110110100110011000110110101100100000110000111101", "1", Family::W66_3, 53, std::nullopt, false},
    {"C64_7+Y3", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_7", "0000101100110000000001100100101110100001010010101111110011001001", "1", Family::W66_3, 82, std::nullopt, false},
    {"C64_7+Y4", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_7", "0011000101011100001001101011011000101100110100101110000011100010", "1", Family::W66_3, 86, std::nullopt, false},
    {"C64_7+Y5", Construction::Extension, Alphabet::F2, "", "", "", "", "", "C64_7", "1110110000111111101101111011001110101101010101100100001101111001", "1", Family::W66_3, 88, std::nullopt, false},
};

// Table 6: binary codes of length 68 in W68_2 with gamma 0.
constexpr TableRow kTable6[] = {
    {"C68_1", Construction::Modified, Alphabet::F2, "", "01111110101111011", "11001000101001011", "", "", "", "", "", Family::W68_2, 17, 0, false},
    {"C68_2", Construction::Modified, Alphabet::F2, "", "11110001011001010", "11010100001011010", "", "", "", "", "", Family::W68_2, 187, 0, false},
    {"C68_3", Construction::Modified, Alphabet::F2, "", "00110001101111011", "01000010000000100", "", "", "", "", "", Family::W68_2, 221, 0, false},
    {"C68_4", Construction::Modified, Alphabet::F2, "", "11010010110010011", "10100001001111100", "", "", "", "", "", Family::W68_2, 255, 0, false},
};

// Table 7: R1 extensions of phi_u(D64_10) and phi_u(D64_22); c = 3 is 1 + u.
constexpr TableRow kTable7[] = {
    {"D64_10+X1", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_10", "1u1001030u3103111u3130u01u0u0331", "1", Family::W68_2, 103, 3, false},
    {"D64_10+X2", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_10", "303u0101uu3301113u31300u1000u113", "3", Family::W68_2, 105, 3, false},
    {"D64_10+X3", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_10", "3u1u03u3u03303331u313u0u30uuu331", "1", Family::W68_2, 115, 3, false},
    {"D64_10+X4", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_10", "3010u1u10u1103313u111u0u3uu00113", "1", Family::W68_2, 119, 3, false},
    {"D64_10+X5", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_10", "301001030u1303131u31100u3u000133", "3", Family::W68_2, 121, 3, false},
    {"D64_10+X6", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_10", "uuu101u303u3u11uu3u1003uu1u1001u", "3", Family::W68_2, 124, 3, false},
    {"D64_10+X7", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_10", "1u1uu3030u11u3133u3330uu3u00u333", "1", Family::W68_2, 125, 3, false},
    {"D64_10+X8", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_10", "1u1003u10u33u313303330u01000u111", "3", Family::W68_2, 129, 3, false},
    {"D64_10+X9", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_10", "1u10u1030u13u31330331u001uu0u111", "3", Family::W68_2, 131, 3, false},
    {"D64_10+X10", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_10", "1u303011uu01000u10303133u0u10u33", "3", Family::W68_2, 134, 3, false},
    {"D64_10+X11", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_10", "000101u10103u110u1030u30u101uu30", "1", Family::W68_2, 150, 3, false},
    {"D64_22+X12", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_22", "3u000103031u00u30uu03u30u0uu11u1", "1", Family::W68_2, 178, 3, false},
    {"D64_22+X13", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_22", "3u0uu3u3u13uuuu3uuuu1u3uuu0031u3", "1", Family::W68_2, 182, 3, false},
    {"D64_22+X14", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_22", "u1100u001uu0uuu311331u101u03111u", "3", Family::W68_2, 184, 3, false},
    {"D64_22+X15", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_22", "1uu00301u33uuu03u00u3u1u0u0031u3", "1", Family::W68_2, 190, 3, false},
    {"D64_22+X16", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_22", "30000101013u00u100003u100u001303", "1", Family::W68_2, 194, 3, false},
};

constexpr TableRow kExampleBorderedR1[] = {
    {"R1_bordered", Construction::Bordered, Alphabet::R1, "", "u011u1u", "0001uuu", "1", "u", "", "", "",
     Family::Unknown, 0, std::nullopt, true},
};

constexpr TableRow kExamplePhiU[] = {
    {"D64_21+X1", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_21",
     "3u00001u303u1100u110131u130u0033", "3", Family::W68_2, 155, 0, false},
    {"D64_21+X2", Construction::Extension, Alphabet::R1, "", "", "", "", "", "D64_21",
     "1uu00u10303013u0u11u331u11u0uu11", "1", Family::W68_2, 157, 0, false},
};

constexpr std::uint64_t kChecksums[] = {
    0x6E2176DC91AB2979ULL, 0xD99874F8453AC0A8ULL, 0xE1BC5A2109B0C559ULL, 0x7BA2E54B3BADE557ULL,
    0x6A0EE366802BE271ULL, 0xCCC0CF330BDFE68CULL, 0xC24A9D8C6EE8FAA9ULL,
};

const PaperTable kTables[] = {
    {1, "binary modified four-circulant codes, length 64", kTable1, kChecksums[0]},
    {2, "R2 modified four-circulant codes, Gray images of length 64", kTable2, kChecksums[1]},
    {3, "bordered binary codes, length 64", kTable3, kChecksums[2]},
    {4, "binary extensions to length 66, X ending in 32 ones", kTable4, kChecksums[3]},
    {5, "binary extensions to length 66", kTable5, kChecksums[4]},
    {6, "binary modified four-circulant codes, length 68", kTable6, kChecksums[5]},
    {7, "R1 extensions of phi_u images, length 68", kTable7, kChecksums[6]},
};

void fnv(std::uint64_t& h, std::string_view s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  h ^= 0xFF;
  h *= 0x100000001B3ULL;
}

const TableRow& find_row(std::span<const TableRow> rows, std::string_view name) {
  for (const auto& r : rows) {
    if (r.name == name) return r;
  }
  throw Error(ErrorKind::InvalidArgument, "no row named " + std::string(name));
}

RingElement element_or_one(Alphabet a, std::string_view text) {
  return text.empty() ? RingElement::one(a) : parse_element(a, text);
}

RowCheck check_row(const TableRow& row, unsigned workers) {
  RowCheck out;
  out.name = std::string(row.name);
  try {
    const CodeRecord record = build_row(row);
    const BitMatrix basis = binary_basis(record);
    out.n = basis.cols();
    out.k = basis.rows();
    out.self_dual = is_self_dual(basis);
    const Measurement m = measure(basis, 14, workers);
    out.d = m.analysis.d;
    out.got = m.analysis.enumerator;

    std::string problems;
    if (!out.self_dual) problems += " not self-dual;";
    if (2 * out.k != out.n) problems += " k != n/2;";
    if (out.d != 12) problems += " d = " + std::to_string(out.d) + ";";
    if (row.type_ii) {
      if (!is_doubly_even(basis)) problems += " not doubly even;";
    } else {
      if (out.got.family != row.family) {
        problems += " family " + std::string(to_string(out.got.family)) + ";";
      }
      if (out.got.beta != std::optional<std::int64_t>(row.beta)) {
        problems += " beta " + (out.got.beta ? std::to_string(*out.got.beta) : std::string("none")) + ";";
      }
      if (row.gamma && out.got.gamma != row.gamma) {
        problems += " gamma " + (out.got.gamma ? std::to_string(*out.got.gamma) : std::string("none")) + ";";
      }
    }
    out.passed = problems.empty();
    out.detail = out.passed ? "ok" : problems.substr(1);
  } catch (const Error& e) {
    out.passed = false;
    out.detail = e.what();
  }
  return out;
}

}  // namespace

const PaperTable& paper_table(int id) {
  if (id < 1 || id > 7) throw Error(ErrorKind::UnknownTable, "no table " + std::to_string(id));
  return kTables[id - 1];
}

std::uint64_t compute_checksum(std::span<const TableRow> rows) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const auto& r : rows) {
    fnv(h, r.name);
    fnv(h, to_string(r.construction));
    fnv(h, to_string(r.alphabet));
    for (auto s : {r.lambda, r.ra, r.rb, r.border_x, r.border_y, r.parent, r.x, r.c}) fnv(h, s);
    fnv(h, to_string(r.family));
    fnv(h, std::to_string(r.beta));
    fnv(h, r.gamma ? std::to_string(*r.gamma) : std::string("-"));
    fnv(h, r.type_ii ? "II" : "I");
  }
  return h;
}

CodeRecord build_row(const TableRow& row) {
  const Alphabet a = row.alphabet;
  switch (row.construction) {
    case Construction::Modified:
      return modified_four_circulant(parse_row(a, row.ra), parse_row(a, row.rb), element_or_one(a, row.lambda));
    case Construction::FourCirculant:
      return four_circulant_classic(parse_row(a, row.ra), parse_row(a, row.rb));
    case Construction::Bordered:
      return bordered_four_circulant(parse_row(a, row.ra), parse_row(a, row.rb), parse_element(a, row.border_x),
                                     parse_element(a, row.border_y));
    case Construction::Extension: {
      CodeRecord parent;
      if (row.parent.starts_with("C64_")) {
        parent = build_row(find_row(kTable3, row.parent));
      } else if (row.parent.starts_with("D64_")) {
        parent = phi_u_record(build_row(find_row(kTable2, row.parent)));
      } else {
        throw Error(ErrorKind::InvalidArgument, "unknown parent " + std::string(row.parent));
      }
      if (parent.alphabet != a) throw Error(ErrorKind::AlphabetMismatch, "parent alphabet differs from row");
      return extend(parent, parse_row(a, row.x), parse_element(a, row.c));
    }
    default:
      throw Error(ErrorKind::InvalidArgument, "table rows are never " + std::string(to_string(row.construction)));
  }
}

bool TableReport::passed() const noexcept {
  return checksum_ok && !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.passed; });
}

TableReport verify_table(int id, std::span<const std::string> selection, unsigned workers) {
  const PaperTable& table = paper_table(id);
  TableReport report;
  report.id = id;
  report.checksum_ok = compute_checksum(table.rows) == table.checksum;

  std::vector<const TableRow*> chosen;
  if (selection.empty()) {
    for (const auto& r : table.rows) chosen.push_back(&r);
  }
  for (const auto& sel : selection) {
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(sel.data(), sel.data() + sel.size(), index);
    if (ec == std::errc() && ptr == sel.data() + sel.size()) {
      if (index < 1 || index > table.rows.size()) {
        throw Error(ErrorKind::InvalidArgument, "table " + std::to_string(id) + " has no row " + sel);
      }
      chosen.push_back(&table.rows[index - 1]);
    } else {
      chosen.push_back(&find_row(table.rows, sel));
    }
  }
  for (const TableRow* r : chosen) report.rows.push_back(check_row(*r, workers));
  return report;
}

std::string_view to_string(PaperExample e) noexcept {
  return e == PaperExample::BorderedR1 ? "bordered-r1" : "phi-u-extension";
}

PaperExample parse_paper_example(std::string_view text) {
  if (text == "bordered-r1") return PaperExample::BorderedR1;
  if (text == "phi-u-extension") return PaperExample::PhiUExtension;
  throw Error(ErrorKind::UnknownTable, "no example named " + std::string(text));
}

TableReport verify_example(PaperExample e, unsigned workers) {
  TableReport report;
  report.checksum_ok = true;
  const std::span<const TableRow> rows =
      e == PaperExample::BorderedR1 ? std::span<const TableRow>(kExampleBorderedR1) : std::span<const TableRow>(kExamplePhiU);
  for (const auto& r : rows) report.rows.push_back(check_row(r, workers));
  return report;
}

}  // namespace fourcirc
