#include <gtest/gtest.h>

#include <random>

#include "fourcirc/codec.hpp"
#include "fourcirc/error.hpp"
#include "fourcirc/ring.hpp"
#include "oracles.hpp"

using namespace fourcirc;

namespace {

RingElement r2(unsigned nibble) { return {Alphabet::R2, nibble}; }
RingElement r1(unsigned nibble) { return {Alphabet::R1, nibble}; }

std::vector<bool> bits(const BitVector& v) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v.get(i));
  return out;
}

}  // namespace

TEST(Ring, ProductsMatchSymbolicExpansion) {
  for (unsigned x = 0; x < 16; ++x) {
    for (unsigned y = 0; y < 16; ++y) {
      EXPECT_EQ((r2(x) * r2(y)).nibble(), oracle::symbolic_mul(x, y)) << x << "*" << y;
      EXPECT_EQ(r2(x) * r2(y), r2(y) * r2(x));
    }
  }
  for (unsigned x = 0; x < 4; ++x) {
    for (unsigned y = 0; y < 4; ++y) EXPECT_EQ((r1(x) * r1(y)).nibble(), oracle::symbolic_mul(x, y));
  }
}

TEST(Ring, Examples) {
  EXPECT_EQ(r2(5) * r2(5), r2(1));
  EXPECT_EQ(r1(2) * r1(2), r1(0));
  EXPECT_EQ(r2(6) * r2(3), r2(0xE));
  EXPECT_TRUE(r2(5).is_unit());
  EXPECT_FALSE(r1(2).is_unit());
  EXPECT_TRUE(RingElement::one(Alphabet::F2).is_unit());
}

TEST(Ring, UnitsSquareToOneNonUnitsToZero) {
  for (auto a : {Alphabet::F2, Alphabet::R1, Alphabet::R2}) {
    for (auto e : elements(a)) {
      EXPECT_EQ(e * e, e.is_unit() ? RingElement::one(a) : RingElement::zero(a));
      if (e.is_unit()) EXPECT_EQ(e * e.inverse(), RingElement::one(a));
    }
    EXPECT_EQ(units(a).size(), elements(a).size() / 2);
  }
}

TEST(Ring, Rejections) {
  EXPECT_THROW(RingElement(Alphabet::R1, 4), Error);
  EXPECT_THROW((void)r2(2).inverse(), Error);
  try {
    (void)(r2(1) * r1(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AlphabetMismatch);
  }
}

TEST(Gray, Phi1Examples) {
  EXPECT_EQ(gray_phi1(RingVector::from_nibbles(Alphabet::R1, {1})).to_string(), "01");
  EXPECT_EQ(gray_phi1(RingVector::from_nibbles(Alphabet::R1, {2})).to_string(), "11");
  EXPECT_EQ(gray_phi1(RingVector::from_nibbles(Alphabet::R1, {3, 2})).to_string(), "1101");
  EXPECT_THROW(gray_phi1(RingVector::from_nibbles(Alphabet::R2, {1})), Error);
}

TEST(Gray, Phi2Examples) {
  EXPECT_EQ(gray_phi2(RingVector::from_nibbles(Alphabet::R2, {8})).to_string(), "1111");
  EXPECT_EQ(gray_phi2(RingVector::from_nibbles(Alphabet::R2, {1})).to_string(), "0001");
  EXPECT_EQ(gray_phi2(RingVector::from_nibbles(Alphabet::R2, {5})).to_string(), "0100");
}

TEST(Gray, MatchesFormulaAndIsAdditiveBijection) {
  std::mt19937_64 rng(3);
  for (auto a : {Alphabet::R1, Alphabet::R2}) {
    std::set<std::string> images;
    for (auto e : elements(a)) images.insert(gray_image(RingVector(a, {e})).to_string());
    EXPECT_EQ(images.size(), elements(a).size());
    for (int t = 0; t < 300; ++t) {
      const auto x = oracle::random_row(rng, a, 1 + rng() % 9);
      const auto y = oracle::random_row(rng, a, x.size());
      EXPECT_EQ(bits(gray_image(x)), oracle::gray(x));
      EXPECT_EQ(gray_image(x + y), gray_image(x) ^ gray_image(y));
    }
  }
}

TEST(PhiU, Examples) {
  EXPECT_EQ(phi_u(RingVector::from_nibbles(Alphabet::R2, {4})), RingVector::from_nibbles(Alphabet::R1, {1, 1}));
  EXPECT_EQ(phi_u(RingVector::from_nibbles(Alphabet::R2, {1})), RingVector::from_nibbles(Alphabet::R1, {0, 1}));
  EXPECT_EQ(phi_u(RingVector::from_nibbles(Alphabet::R2, {0})), RingVector::from_nibbles(Alphabet::R1, {0, 0}));
}

TEST(PhiU, LinearOverR1) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto x = oracle::random_row(rng, Alphabet::R2, 1 + rng() % 6);
    const auto y = oracle::random_row(rng, Alphabet::R2, x.size());
    EXPECT_EQ(phi_u(x + y), phi_u(x) + phi_u(y));
    const unsigned s = rng() % 4;  // an R1 scalar, embedded in R2 with the same nibble
    EXPECT_EQ(phi_u(x.scaled(r2(s))), phi_u(x).scaled(r1(s)));
  }
}

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(RingVector::from_nibbles(Alphabet::F2, {1, 0, 1}), RingVector::from_nibbles(Alphabet::F2, {1, 1, 1})),
            RingElement::zero(Alphabet::F2));
  const auto v = RingVector::from_nibbles(Alphabet::R1, {1, 2});
  EXPECT_EQ(inner_product(v, v), r1(1));
  const auto x1 = parse_row(Alphabet::R1, "3u00001u303u1100u110131u130u0033");
  EXPECT_EQ(inner_product(x1, x1), r1(1));
  try {
    (void)inner_product(v, RingVector::from_nibbles(Alphabet::R1, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
}
