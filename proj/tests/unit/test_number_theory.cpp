#include <gtest/gtest.h>

#include <numeric>

#include "gauge_atlas/number_theory.hpp"

using namespace gauge_atlas;

TEST(Mod, RepresentativeInRange) {
  EXPECT_EQ(mod(7, 5), 2);
  EXPECT_EQ(mod(-1, 5), 4);
  EXPECT_EQ(mod(-10, 5), 0);
  EXPECT_EQ(mod(0, 2), 0);
}

TEST(Mod, NonPositiveModulusThrows) {
  EXPECT_THROW(mod(3, 0), Error);
  EXPECT_THROW(mod(3, -2), Error);
}

TEST(ExtendedGcd, BezoutIdentityHolds) {
  for (std::int64_t a = -30; a <= 30; ++a) {
    for (std::int64_t b = -30; b <= 30; ++b) {
      const auto res = extended_gcd(a, b);
      EXPECT_EQ(res.g, std::gcd(a, b)) << a << " " << b;
      EXPECT_EQ(res.x * a + res.y * b, res.g) << a << " " << b;
      EXPECT_GE(res.g, 0);
    }
  }
}

TEST(ModularInverse, MatchesBruteForce) {
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (std::int64_t a = -15; a <= 15; ++a) {
      std::optional<std::int64_t> expected;
      for (std::int64_t m = 0; m < n && !expected; ++m)
        if (mod(m * a, n) == 1) expected = m;
      EXPECT_EQ(modular_inverse(a, n), expected) << a << " mod " << n;
    }
  }
}

TEST(ModularInverse, ThreeModFive) { EXPECT_EQ(modular_inverse(3, 5), 2); }
