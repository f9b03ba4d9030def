#include <gtest/gtest.h>

#include <random>

#include "fourcirc/bit_matrix.hpp"
#include "fourcirc/error.hpp"
#include "oracles.hpp"

using namespace fourcirc;

namespace {

BitMatrix m(std::initializer_list<std::string_view> rows) {
  std::vector<std::string_view> v(rows);
  return BitMatrix::from_strings(v);
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  BitMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, rng() & 1);
  }
  return out;
}

}  // namespace

TEST(BitVector, WeightAndTailStayClean) {
  auto v = BitVector::from_string("0101110001100111");
  EXPECT_EQ(v.size(), 16u);
  EXPECT_EQ(v.weight(), 9u);
  EXPECT_TRUE(v.get(1));
  EXPECT_FALSE(v.get(0));
  EXPECT_EQ(v.to_string(), "0101110001100111");
  BitVector w(70);
  w.set(69);
  EXPECT_EQ(w.weight(), 1u);
  EXPECT_EQ(w.words()[1], std::uint64_t{1} << 5);
}

TEST(BitVector, DotIsParityOfOverlap) {
  EXPECT_FALSE(BitVector::from_string("101").dot(BitVector::from_string("111")));
  EXPECT_TRUE(BitVector::from_string("100").dot(BitVector::from_string("111")));
}

TEST(Rref, DuplicateRows) {
  const auto r = rref(m({"11", "11"}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0}));
}

TEST(Rref, Identity) {
  const auto r = rref(BitMatrix::identity(4));
  EXPECT_EQ(r.rank, 4u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Rref, DependentThirdRow) {
  const auto g = m({"101", "011", "110"});
  EXPECT_EQ(rref(g).rank, 2u);
  EXPECT_EQ(oracle::span_rank(g), 2u);
}

TEST(Rref, EmptyMatrixRejected) { EXPECT_THROW(rref(BitMatrix()), Error); }

TEST(Rref, RandomMatchesSpanRankAndIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 12;
    const auto g = random_matrix(rng, rows, cols);
    const auto r = rref(g);
    EXPECT_EQ(r.rank, oracle::span_rank(g));
    EXPECT_TRUE(std::is_sorted(r.pivot_cols.begin(), r.pivot_cols.end()));
    if (r.rank > 0) {
      EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
      std::vector<BitVector> both;
      for (std::size_t i = 0; i < rows; ++i) both.push_back(g.row(i));
      for (std::size_t i = 0; i < r.reduced.rows(); ++i) both.push_back(r.reduced.row(i));
      EXPECT_EQ(oracle::span_rank(BitMatrix::from_rows(both)), r.rank);
    }
  }
}

TEST(SelfDual, SmallExamples) {
  EXPECT_TRUE(is_self_dual(m({"1010", "0101"})));
  EXPECT_FALSE(is_self_dual(m({"1111"})));
  EXPECT_THROW(is_self_dual(m({"111"})), Error);
}

TEST(DoublyEven, ExtendedHamming) {
  const auto h = m({"10000111", "01001011", "00101101", "00011110"});
  ASSERT_TRUE(is_self_dual(h));
  EXPECT_TRUE(is_doubly_even(h));
  const auto hist = oracle::naive_histogram(h);
  EXPECT_EQ(hist[4], 14u);
  EXPECT_EQ(hist[8], 1u);
  EXPECT_FALSE(is_doubly_even(m({"1010", "0101"})));
  try {
    (void)is_doubly_even(m({"1100", "1000"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSelfOrthogonal);
  }
}

TEST(StandardForm, AlreadyStandard) {
  const auto g = m({"1011", "0110"});
  const auto s = standard_form(g);
  EXPECT_EQ(s.matrix, g);
  EXPECT_EQ(s.col_perm, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(StandardForm, RowReorderOnly) {
  const auto s = standard_form(m({"011", "101"}));
  EXPECT_EQ(s.matrix, m({"101", "011"}));
  EXPECT_EQ(s.col_perm, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(StandardForm, RankDeficientRejected) {
  try {
    (void)standard_form(m({"11", "11"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankDeficient);
  }
}

TEST(StandardForm, RandomPreservesPermutedRowSpace) {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 100) {
    const auto g = random_matrix(rng, 6, 12);
    if (rank(g) != 6) continue;
    ++checked;
    const auto s = standard_form(g);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(s.matrix.get(i, j), i == j);
    }
    EXPECT_EQ(rref(permute_columns(g, s.col_perm)).reduced, rref(s.matrix).reduced);
    EXPECT_EQ(oracle::naive_histogram(g), oracle::naive_histogram(s.matrix));
  }
}

TEST(SelfDual, AllOnesInEveryRandomSelfDualCode) {
  std::mt19937_64 rng(8);
  const auto codes = oracle::random_modified_codes(rng, Alphabet::F2, 4, 20);
  ASSERT_FALSE(codes.empty());
  for (const auto& c : codes) {
    const auto g = binary_basis(c);
    for (std::size_t i = 0; i < g.rows(); ++i) EXPECT_EQ(g.row(i).weight() % 2, 0u);
    BitVector ones(g.cols());
    for (std::size_t i = 0; i < g.cols(); ++i) ones.set(i);
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < g.rows(); ++i) rows.push_back(g.row(i));
    rows.push_back(ones);
    EXPECT_EQ(rank(BitMatrix::from_rows(rows)), g.rows());
  }
}
