#include <gtest/gtest.h>

#include "csep/errors.hpp"
#include "csep/ramsey.hpp"

using namespace csep;

TEST(RamseyUpper, TightTable) {
  EXPECT_EQ(ramsey_upper(1).value, 1u);
  EXPECT_EQ(ramsey_upper(2).value, 2u);
  EXPECT_EQ(ramsey_upper(3).value, 6u);
  EXPECT_EQ(ramsey_upper(4).value, 18u);
  EXPECT_EQ(ramsey_upper(5).value, 1024u);
  EXPECT_EQ(ramsey_upper(3).provenance, RamseyProvenance::exact_table);
  EXPECT_EQ(ramsey_upper(5).provenance, RamseyProvenance::paper_bound);
}

TEST(RamseyUpper, BoundModeIsPowerOfFour) {
  for (int q = 1; q <= 8; ++q) EXPECT_EQ(ramsey_upper(q, RamseyMode::paper).value, std::uint64_t{1} << (2 * q));
  EXPECT_EQ(ramsey_upper(kMaxRamseyQ, RamseyMode::paper).value, std::uint64_t{1} << 62);
}

TEST(RamseyUpper, TightNeverExceedsBound) {
  for (int q = 1; q <= 20; ++q) {
    EXPECT_LE(ramsey_upper(q).value, ramsey_upper(q, RamseyMode::paper).value);
    EXPECT_LE(ramsey_upper(q).value, ramsey_upper(q + 1).value);
  }
}

TEST(RamseyUpper, Errors) {
  EXPECT_THROW(ramsey_upper(0), InputError);
  EXPECT_THROW(ramsey_upper(-3, RamseyMode::paper), InputError);
  EXPECT_THROW(ramsey_upper(40, RamseyMode::paper), ResourceError);
}

TEST(VerifyRamsey, Examples) {
  EXPECT_TRUE(verify_ramsey_property(6, 3));
  EXPECT_FALSE(verify_ramsey_property(5, 3));
  EXPECT_TRUE(verify_ramsey_property(2, 2));
  EXPECT_TRUE(verify_ramsey_property(1, 1));
  EXPECT_FALSE(verify_ramsey_property(1, 2));
}

// The table entries are exact: the value works and one less does not.
TEST(VerifyRamsey, TableIsTightForSmallQ) {
  for (int q = 1; q <= 3; ++q) {
    const int r = static_cast<int>(ramsey_upper(q).value);
    EXPECT_TRUE(verify_ramsey_property(r, q)) << q;
    EXPECT_FALSE(verify_ramsey_property(r - 1, q)) << q;
  }
}

TEST(VerifyRamsey, Errors) {
  EXPECT_THROW(verify_ramsey_property(-1, 2), InputError);
  EXPECT_THROW(verify_ramsey_property(5, 0), InputError);
  EXPECT_THROW(verify_ramsey_property(9, 3), ResourceError);
}
