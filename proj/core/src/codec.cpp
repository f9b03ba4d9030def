#include "fourcirc/codec.hpp"

#include <cctype>
#include <fstream>
#include <json.hpp>

#include "fourcirc/error.hpp"

namespace fourcirc {

namespace {

using ordered_json = nlohmann::ordered_json;

int hex_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  return -1;
}

unsigned parse_symbol(Alphabet alphabet, char ch) {
  switch (alphabet) {
    case Alphabet::F2:
      if (ch == '0' || ch == '1') return static_cast<unsigned>(ch - '0');
      break;
    case Alphabet::R1:
      if (ch == '0' || ch == '1') return static_cast<unsigned>(ch - '0');
      if (ch == 'u' || ch == 'U') return 2;
      if (ch == '3') return 3;
      break;
    case Alphabet::R2:
      if (int v = hex_value(ch); v >= 0) return static_cast<unsigned>(v);
      break;
  }
  throw Error(ErrorKind::BadCharacter,
              "'" + std::string(1, ch) + "' is not a symbol of " + std::string(to_string(alphabet)));
}

char format_symbol(RingElement e) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  if (e.alphabet() == Alphabet::R1) {
    static constexpr char kR1[] = "01u3";
    return kR1[e.nibble()];
  }
  return kHex[e.nibble()];
}

StoredRecord from_json(const ordered_json& j) {
  StoredRecord out;
  CodeRecord& r = out.record;
  Provenance& p = r.provenance;
  r.alphabet = parse_alphabet(j.at("alphabet").get<std::string>());
  p.construction = parse_construction(j.at("construction").get<std::string>());
  const Alphabet a = r.alphabet;
  auto elem = [&](const char* key) -> std::optional<RingElement> {
    if (!j.contains(key)) return std::nullopt;
    return parse_element(a, j.at(key).get<std::string>());
  };
  auto row = [&](const char* key) -> std::optional<RingVector> {
    if (!j.contains(key)) return std::nullopt;
    return parse_row(a, j.at(key).get<std::string>());
  };
  p.lambda = elem("lambda");
  p.ra = row("rA");
  p.rb = row("rB");
  if (j.contains("rb_convention")) p.rb_convention = parse_reverse_block_row(j.at("rb_convention").get<std::string>());
  p.x = elem("x");
  p.y = elem("y");
  p.ext_vector = row("X");
  p.c = elem("c");
  if (j.contains("phi_u")) {
    const auto v = j.at("phi_u").get<std::string>();
    if (v == "along-v") {
      p.phi_u_variant = PhiUVariant::AlongV;
    } else if (v == "along-u") {
      p.phi_u_variant = PhiUVariant::AlongU;
    } else {
      throw Error(ErrorKind::ParseError, "unknown phi_u variant '" + v + "'");
    }
  }
  if (j.contains("parent_id")) p.parent_id = j.at("parent_id").get<std::string>();
  if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();

  std::vector<RingVector> rows;
  for (const auto& text : j.at("generator")) rows.push_back(parse_row(a, text.get<std::string>()));
  r.generator = RingMatrix(a, std::move(rows));

  if (j.contains("d")) {
    RecordAnalysis an;
    an.d = j.at("d").get<std::size_t>();
    an.enumerator.family = parse_family(j.value("family", std::string("unknown")));
    if (j.contains("beta")) an.enumerator.beta = j.at("beta").get<std::int64_t>();
    if (j.contains("gamma")) an.enumerator.gamma = j.at("gamma").get<std::int64_t>();
    an.enumerator.ambiguous = j.value("ambiguous", false);
    out.analysis = an;
  }
  out.timestamp = j.value("timestamp", std::uint64_t{0});

  if (j.contains("id") && j.at("id").get<std::string>() != r.id()) {
    throw Error(ErrorKind::ParseError, "record id does not match its generator");
  }
  return out;
}

}  // namespace

RingElement parse_element(Alphabet alphabet, std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw Error(ErrorKind::EmptyRow, "empty element");
  text = text.substr(first, last - first + 1);
  if (text.size() != 1) throw Error(ErrorKind::BadCharacter, "element must be a single symbol: '" + std::string(text) + "'");
  return {alphabet, parse_symbol(alphabet, text.front())};
}

std::string format_element(RingElement e) { return std::string(1, format_symbol(e)); }

RingVector parse_row(Alphabet alphabet, std::string_view text) {
  std::vector<RingElement> entries;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ',' || std::isspace(static_cast<unsigned char>(ch))) continue;
    entries.emplace_back(alphabet, parse_symbol(alphabet, ch));
  }
  if (entries.empty()) throw Error(ErrorKind::EmptyRow, "row has no entries");
  return {alphabet, std::move(entries)};
}

std::string format_row(const RingVector& v, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += separator;
    out += format_symbol(v[i]);
  }
  return out;
}

std::string to_hex(const BitVector& v) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out((v.size() + 3) / 4, '0');
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.get(i)) {
      const auto digit = static_cast<std::size_t>(hex_value(out[i / 4]) | (8 >> (i % 4)));
      out[i / 4] = kHex[digit];
    }
  }
  return out;
}

BitVector from_hex(std::string_view hex, std::size_t length) {
  if (hex.size() != (length + 3) / 4) throw Error(ErrorKind::LengthMismatch, "hex row has the wrong number of digits");
  BitVector v(length);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const int value = hex_value(hex[d]);
    if (value < 0) throw Error(ErrorKind::BadCharacter, "'" + std::string(1, hex[d]) + "' is not a hex digit");
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + b;
      const bool bit = (value >> (3 - b)) & 1;
      if (i >= length) {
        if (bit) throw Error(ErrorKind::ParseError, "nonzero padding bit");
        continue;
      }
      v.set(i, bit);
    }
  }
  return v;
}

std::string serialize_record(const StoredRecord& stored) {
  const CodeRecord& r = stored.record;
  const Provenance& p = r.provenance;
  const BitMatrix basis = binary_basis(r);

  ordered_json j;
  j["id"] = r.id();
  j["construction"] = std::string(to_string(p.construction));
  j["alphabet"] = std::string(to_string(r.alphabet));
  if (p.lambda) j["lambda"] = format_element(*p.lambda);
  if (p.ra) j["rA"] = format_row(*p.ra);
  if (p.rb) j["rB"] = format_row(*p.rb);
  if (p.rb_convention) j["rb_convention"] = std::string(to_string(*p.rb_convention));
  if (p.x) j["x"] = format_element(*p.x);
  if (p.y) j["y"] = format_element(*p.y);
  if (p.ext_vector) j["X"] = format_row(*p.ext_vector);
  if (p.c) j["c"] = format_element(*p.c);
  if (p.phi_u_variant) j["phi_u"] = *p.phi_u_variant == PhiUVariant::AlongV ? "along-v" : "along-u";
  if (p.parent_id) j["parent_id"] = *p.parent_id;
  if (p.seed) j["seed"] = *p.seed;
  j["n"] = basis.cols();
  j["k"] = basis.rows();
  if (stored.analysis) {
    const auto& an = *stored.analysis;
    j["d"] = an.d;
    j["family"] = std::string(to_string(an.enumerator.family));
    if (an.enumerator.beta) j["beta"] = *an.enumerator.beta;
    if (an.enumerator.gamma) j["gamma"] = *an.enumerator.gamma;
    if (an.enumerator.ambiguous) j["ambiguous"] = true;
  }
  auto& gen = j["generator"] = ordered_json::array();
  for (std::size_t i = 0; i < r.generator.rows(); ++i) gen.push_back(format_row(r.generator.row(i)));
  auto& hex = j["binary_generator_hex_rows"] = ordered_json::array();
  for (std::size_t i = 0; i < basis.rows(); ++i) hex.push_back(to_hex(basis.row(i)));
  j["timestamp"] = stored.timestamp;
  return j.dump();
}

StoredRecord parse_record(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

void append_records(const std::filesystem::path& path, const std::vector<StoredRecord>& records) {
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  for (const auto& r : records) out << serialize_record(r) << '\n';
}

void write_records(const std::filesystem::path& path, const std::vector<StoredRecord>& records) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  for (const auto& r : records) out << serialize_record(r) << '\n';
}

std::vector<StoredRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  std::vector<StoredRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_record(line));
  }
  return out;
}

}  // namespace fourcirc
