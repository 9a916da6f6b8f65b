#include <gtest/gtest.h>

#include <random>

#include "seifert/error.hpp"
#include "seifert/oracle.hpp"
#include "seifert/smale.hpp"
#include "test_support.hpp"

namespace seifert {
namespace {

TEST(SmaleFromSingular, Examples) {
  EXPECT_EQ(smale_from_singular({0, 0}), 0);
  EXPECT_EQ(smale_from_singular({-1, 7}), 2);
  try {
    smale_from_singular({1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParityViolation);
  }
}

TEST(SmaleOfProjection, Examples) {
  EXPECT_EQ(smale_of_projection(s2xs2(1, 1)), 4);
  EXPECT_EQ(smale_of_projection(s2xs2(1, 1)), smale_from_singular({0, 8}));
  EXPECT_EQ(smale_of_projection(p_block()), 2);
  EXPECT_EQ(smale_of_projection(kummer(0, 0)), -24);
}

TEST(LiftableParity, Examples) {
  EXPECT_TRUE(is_liftable_parity(0));
  EXPECT_TRUE(is_liftable_parity(4));
  EXPECT_FALSE(is_liftable_parity(3));
  EXPECT_FALSE(is_liftable_parity(-7));
}

TEST(SmaleProperty, EvenAndCongruentOnBuilders) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = testing::random_builder(rng);
    const BigInt w = smale_of_projection(s);
    EXPECT_TRUE(is_liftable_parity(w)) << s.label();
    EXPECT_EQ(testing::mod(BigInt(w - 2 * signature(s)), 4), 0) << s.label();
    EXPECT_EQ(w, smale_from_singular({BigInt(signature(s)), cup_square(s.euler())}));
  }
}

TEST(SmaleProperty, EvenOnSmallLattices) {
  for (std::size_t rank = 1; rank <= 2; ++rank) {
    for (const auto& l : oracle::all_lattices({rank, 2, true})) {
      for (const auto& e : oracle::characteristic_exhaustive(l, 3)) {
        const auto s = make_surface(l, e);
        const BigInt w = smale_of_projection(s);
        EXPECT_EQ(testing::mod(BigInt(w - 2 * signature(s)), 4), 0);
      }
    }
  }
}

TEST(SmaleProperty, Additivity) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_builder(rng);
    const auto b = testing::random_builder(rng);
    EXPECT_EQ(smale_of_projection(boundary_connected_sum(a, b)), smale_of_projection(a) + smale_of_projection(b));
  }
}

}  // namespace
}  // namespace seifert
