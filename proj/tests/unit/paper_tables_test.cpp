#include <gtest/gtest.h>

#include "fourcirc/error.hpp"
#include "fourcirc/paper_tables.hpp"

using namespace fourcirc;

TEST(PaperTables, ChecksumsAndRowCounts) {
  const std::size_t sizes[] = {10, 22, 7, 10, 5, 4, 16};
  for (int id = 1; id <= 7; ++id) {
    const auto& t = paper_table(id);
    EXPECT_EQ(t.rows.size(), sizes[id - 1]);
    EXPECT_EQ(compute_checksum(t.rows), t.checksum) << "table " << id;
  }
  try {
    (void)paper_table(8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownTable);
  }
}

TEST(PaperTables, SpotChecks) {
  const std::vector<std::string> b1{"B64_1"};
  auto r = verify_table(1, b1);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.rows[0].got.family, Family::W64_2);
  EXPECT_EQ(r.rows[0].got.beta, 0);

  const std::vector<std::string> c3{"C64_3"};
  r = verify_table(3, c3);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.rows[0].got.beta, 29);

  const std::vector<std::string> first{"1"};
  r = verify_table(7, first);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.rows[0].got.family, Family::W68_2);
  EXPECT_EQ(r.rows[0].got.gamma, 3);
  EXPECT_EQ(r.rows[0].got.beta, 103);
}

TEST(PaperTables, BadSelections) {
  const std::vector<std::string> missing{"nope"};
  EXPECT_THROW(verify_table(1, missing), Error);
  const std::vector<std::string> out_of_range{"11"};
  EXPECT_THROW(verify_table(1, out_of_range), Error);
  EXPECT_THROW(parse_paper_example("other"), Error);
}

TEST(PaperTables, ExampleRecordsBuild) {
  EXPECT_TRUE(verify_example(PaperExample::BorderedR1).passed());
}
