#include <gtest/gtest.h>

#include "qabe/errors.hpp"
#include "qabe/torus.hpp"
#include "random_sums.hpp"

using namespace qabe;
using qabe::testing::uniform;

TEST(TorusPoint, MakeReducesModZ) {
  EXPECT_EQ(make_point(5, 3), TorusPoint::make(2, 3));
  EXPECT_EQ(make_point(5, 3).to_string(), "2/3");
  EXPECT_EQ(TorusPoint::make(-1, 4).to_string(), "3/4");
  EXPECT_EQ(TorusPoint::make(2, 4).to_string(), "1/2");
  EXPECT_EQ(TorusPoint::make(3, -4).to_string(), "1/4");
  EXPECT_EQ(TorusPoint::make(7, 7).to_string(), "0/1");
  EXPECT_TRUE(TorusPoint::make(0, 5).is_zero());
  EXPECT_EQ(TorusPoint::make(0, 5).den(), 1);
}

TEST(TorusPoint, ZeroDenominatorRejected) { EXPECT_THROW(TorusPoint::make(1, 0), PreconditionError); }

TEST(TorusPoint, ArbitraryPrecisionComponents) {
  const Integer big("123456789012345678901234567890");
  const TorusPoint a = make_point(big + 1, big);
  EXPECT_EQ(a.num(), 1);
  EXPECT_EQ(a.den(), big);
}

TEST(TorusPoint, Scale) {
  const TorusPoint third = TorusPoint::make(1, 3);
  EXPECT_EQ(scale_point(1, third), third);
  EXPECT_EQ(scale_point(-1, third), TorusPoint::make(2, 3));
  EXPECT_EQ(scale_point(7, TorusPoint::make(2, 15)), TorusPoint::make(14, 15));
  EXPECT_EQ(scale_point(3, third), TorusPoint());
}

TEST(TorusPoint, TwoAdicPredicates) {
  EXPECT_TRUE(is_two_adic_integer(TorusPoint::make(1, 3)));
  EXPECT_TRUE(is_two_adic_unit(TorusPoint::make(1, 3)));
  EXPECT_TRUE(is_two_adic_integer(TorusPoint::make(2, 3)));
  EXPECT_FALSE(is_two_adic_unit(TorusPoint::make(2, 3)));
  EXPECT_FALSE(is_two_adic_integer(TorusPoint::make(1, 4)));
  EXPECT_FALSE(is_two_adic_unit(TorusPoint::make(1, 4)));
  EXPECT_TRUE(is_two_adic_integer(TorusPoint()));
  EXPECT_FALSE(is_two_adic_unit(TorusPoint()));
}

TEST(TorusPoint, HalfIntegers) {
  EXPECT_TRUE(is_half_integer(TorusPoint()));
  EXPECT_TRUE(is_half_integer(TorusPoint::make(1, 2)));
  EXPECT_FALSE(is_half_integer(TorusPoint::make(1, 3)));
}

TEST(TorusPoint, AdditionAndNegation) {
  EXPECT_EQ(TorusPoint::make(1, 3) + TorusPoint::make(1, 5), TorusPoint::make(8, 15));
  EXPECT_EQ(-TorusPoint::make(1, 3), TorusPoint::make(2, 3));
  EXPECT_EQ(-TorusPoint(), TorusPoint());
  EXPECT_EQ(TorusPoint::make(1, 4) - TorusPoint::make(3, 4), TorusPoint::make(1, 2));
}

TEST(TorusPoint, ScaleComposes) {
  for (int i = 0; i < 500; ++i) {
    const TorusPoint a = TorusPoint::make(uniform(-1000, 1000), uniform(1, 500));
    const std::int64_t s = uniform(-50, 50), t = uniform(-50, 50);
    ASSERT_EQ(scale_point(make_integer(s), scale_point(make_integer(t), a)), scale_point(make_integer(s * t), a));
  }
}

TEST(TorusPoint, ExactlyOneOfPairIsTwoAdicUnit) {
  for (int i = 0; i < 500; ++i) {
    const std::int64_t d = 2 * uniform(1, 200) + 1;
    const TorusPoint a = TorusPoint::make(uniform(1, d - 1), d);
    if (a.is_zero()) continue;
    ASSERT_NE(a.is_two_adic_unit(), (-a).is_two_adic_unit()) << a;
  }
}

TEST(TorusPoint, MakeIsIdempotent) {
  for (int i = 0; i < 500; ++i) {
    const TorusPoint a = TorusPoint::make(uniform(-10000, 10000), uniform(-300, 300) | 1);
    ASSERT_EQ(make_point(a.num(), a.den()), a);
    ASSERT_GE(a.num(), 0);
    ASSERT_LT(a.num(), a.den());
    ASSERT_EQ(gcd(a.num(), a.den()), 1);
  }
}
