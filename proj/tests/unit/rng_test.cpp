#include <gtest/gtest.h>

#include "fourcirc/rng.hpp"

using fourcirc::Rng;

TEST(Rng, ReferenceOutputs) {
  auto r = Rng::from_state({1, 2, 3, 4});
  EXPECT_EQ(r(), 11520u);
  EXPECT_EQ(r(), 0u);
  EXPECT_EQ(r(), 1509978240u);
  EXPECT_EQ(r(), 1215971899390074240u);
}

TEST(Rng, SeededAndJumpedStreams) {
  Rng r(42);
  EXPECT_EQ(r(), 0x15780B2E0C2EC716ULL);
  EXPECT_EQ(r(), 0x6104D9866D113A7EULL);
  EXPECT_EQ(r(), 0xAE17533239E499A1ULL);
  auto s = Rng(42).stream(1);
  EXPECT_EQ(s(), 0x50086EF83CBF4F4AULL);
  EXPECT_EQ(s(), 0xBA285EC21347D703ULL);
  EXPECT_EQ(Rng(42).stream(0).state(), Rng(42).state());
}

TEST(Rng, BelowStaysInRange) {
  Rng r(1);
  std::array<int, 7> seen{};
  for (int i = 0; i < 7000; ++i) {
    const auto v = r.below(7);
    ASSERT_LT(v, 7u);
    ++seen[v];
  }
  for (int c : seen) EXPECT_GT(c, 800);
}
