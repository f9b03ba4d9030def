#include "fourcirc/ring.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "fourcirc/error.hpp"

namespace fourcirc {

namespace {

constexpr unsigned alphabet_mask(Alphabet a) noexcept {
  switch (a) {
    case Alphabet::F2: return 0x1;
    case Alphabet::R1: return 0x3;
    case Alphabet::R2: return 0xF;
  }
  return 0;
}

void require_same(Alphabet a, Alphabet b) {
  if (a != b) {
    throw Error(ErrorKind::AlphabetMismatch,
                std::string(to_string(a)) + " vs " + std::string(to_string(b)));
  }
}

}  // namespace

std::string_view to_string(Alphabet a) noexcept {
  switch (a) {
    case Alphabet::F2: return "f2";
    case Alphabet::R1: return "r1";
    case Alphabet::R2: return "r2";
  }
  return "?";
}

Alphabet parse_alphabet(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "f2") return Alphabet::F2;
  if (lower == "r1") return Alphabet::R1;
  if (lower == "r2") return Alphabet::R2;
  throw Error(ErrorKind::ParseError, "unknown alphabet '" + std::string(text) + "'");
}

unsigned element_width(Alphabet a) noexcept {
  switch (a) {
    case Alphabet::F2: return 1;
    case Alphabet::R1: return 2;
    case Alphabet::R2: return 4;
  }
  return 0;
}

RingElement::RingElement(Alphabet alphabet, unsigned nibble) : alphabet_(alphabet) {
  if ((nibble & ~alphabet_mask(alphabet)) != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "value " + std::to_string(nibble) + " is not an element of " + std::string(to_string(alphabet)));
  }
  bits_ = static_cast<std::uint8_t>(nibble);
}

RingElement RingElement::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::NonUnitLambda, "non-unit has no inverse");
  return *this;
}

RingElement operator+(RingElement x, RingElement y) {
  require_same(x.alphabet_, y.alphabet_);
  x.bits_ ^= y.bits_;
  return x;
}

RingElement operator*(RingElement x, RingElement y) {
  require_same(x.alphabet_, y.alphabet_);
  const unsigned a = x.constant(), b = x.u_coeff(), c = x.v_coeff(), d = x.uv_coeff();
  const unsigned a2 = y.constant(), b2 = y.u_coeff(), c2 = y.v_coeff(), d2 = y.uv_coeff();
  const unsigned k = a & a2;
  const unsigned ku = (a & b2) ^ (b & a2);
  const unsigned kv = (a & c2) ^ (c & a2);
  const unsigned kuv = (a & d2) ^ (d & a2) ^ (b & c2) ^ (c & b2);
  x.bits_ = static_cast<std::uint8_t>(k | (ku << 1) | (kv << 2) | (kuv << 3));
  return x;
}

RingElement mul(RingElement x, RingElement y) { return x * y; }

bool is_unit(RingElement x) noexcept { return x.is_unit(); }

std::vector<RingElement> elements(Alphabet a) {
  std::vector<RingElement> out;
  for (unsigned n = 0; n <= alphabet_mask(a); ++n) out.emplace_back(a, n);
  return out;
}

std::vector<RingElement> units(Alphabet a) {
  auto all = elements(a);
  std::erase_if(all, [](RingElement e) { return !e.is_unit(); });
  return all;
}

RingVector::RingVector(Alphabet alphabet, std::size_t length)
    : alphabet_(alphabet), entries_(length, RingElement::zero(alphabet)) {}

RingVector::RingVector(Alphabet alphabet, std::vector<RingElement> entries)
    : alphabet_(alphabet), entries_(std::move(entries)) {
  for (auto e : entries_) require_same(alphabet_, e.alphabet());
}

RingVector RingVector::from_nibbles(Alphabet alphabet, std::initializer_list<unsigned> nibbles) {
  return from_nibbles(alphabet, std::span<const unsigned>(nibbles.begin(), nibbles.size()));
}

RingVector RingVector::from_nibbles(Alphabet alphabet, std::span<const unsigned> nibbles) {
  std::vector<RingElement> e;
  e.reserve(nibbles.size());
  for (auto n : nibbles) e.emplace_back(alphabet, n);
  return {alphabet, std::move(e)};
}

RingVector RingVector::constant(Alphabet alphabet, std::size_t length, RingElement value) {
  require_same(alphabet, value.alphabet());
  return {alphabet, std::vector<RingElement>(length, value)};
}

void RingVector::set(std::size_t i, RingElement value) {
  require_same(alphabet_, value.alphabet());
  entries_.at(i) = value;
}

RingVector RingVector::scaled(RingElement s) const {
  RingVector out = *this;
  for (auto& e : out.entries_) e = s * e;
  return out;
}

RingElement RingVector::sum() const {
  RingElement s = RingElement::zero(alphabet_);
  for (auto e : entries_) s += e;
  return s;
}

RingVector& RingVector::operator+=(const RingVector& other) {
  require_same(alphabet_, other.alphabet_);
  if (other.size() != size()) throw Error(ErrorKind::LengthMismatch, "vector sum of unequal lengths");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RingElement inner_product(const RingVector& x, const RingVector& y) {
  require_same(x.alphabet(), y.alphabet());
  if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "inner product of unequal lengths");
  RingElement s = RingElement::zero(x.alphabet());
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

BitVector gray_phi1(const RingVector& v) {
  require_same(v.alphabet(), Alphabet::R1);
  const std::size_t n = v.size();
  BitVector out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool a = v[i].constant(), b = v[i].u_coeff();
    out.set(i, b);
    out.set(n + i, a != b);
  }
  return out;
}

BitVector gray_phi2(const RingVector& v) {
  require_same(v.alphabet(), Alphabet::R2);
  const std::size_t n = v.size();
  BitVector out(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool a = v[i].constant(), b = v[i].u_coeff(), c = v[i].v_coeff(), d = v[i].uv_coeff();
    out.set(i, d);
    out.set(n + i, c != d);
    out.set(2 * n + i, b != d);
    out.set(3 * n + i, (a ^ b ^ c ^ d) != 0);
  }
  return out;
}

BitVector gray_image(const RingVector& v) {
  switch (v.alphabet()) {
    case Alphabet::F2: {
      BitVector out(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) out.set(i, v[i].constant());
      return out;
    }
    case Alphabet::R1: return gray_phi1(v);
    case Alphabet::R2: return gray_phi2(v);
  }
  return {};
}

RingVector phi_u(const RingVector& v, PhiUVariant variant) {
  require_same(v.alphabet(), Alphabet::R2);
  const std::size_t n = v.size();
  RingVector out(Alphabet::R1, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned a = v[i].constant(), b = v[i].u_coeff(), c = v[i].v_coeff(), d = v[i].uv_coeff();
    unsigned x = 0, y = 0;
    if (variant == PhiUVariant::AlongV) {
      x = a | (b << 1);  // a + b u
      y = c | (d << 1);  // c + d u
    } else {
      x = a | (c << 1);  // a + c v, v renamed to u
      y = b | (d << 1);
    }
    out.set(i, RingElement(Alphabet::R1, y));
    out.set(n + i, RingElement(Alphabet::R1, x ^ y));
  }
  return out;
}

RingElement phi_u_split_scalar(PhiUVariant variant) {
  return RingElement(Alphabet::R2, variant == PhiUVariant::AlongV ? 0x4u : 0x2u);
}

}  // namespace fourcirc
