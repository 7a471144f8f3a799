#include <gtest/gtest.h>

#include <string>

#include "oracle.hpp"
#include "qabe/cyclotomic.hpp"
#include "qabe/das.hpp"
#include "qabe/errors.hpp"
#include "qabe/galois_select.hpp"
#include "qabe/text.hpp"
#include "random_sums.hpp"

using namespace qabe;
using qabe::testing::oracle;
using qabe::testing::uniform;

namespace {

FormalSum S(const char* text) { return parse_sum(text); }

CycloNum Q(std::int64_t level, std::int64_t num, std::int64_t den = 1) {
  return CycloNum::from_rational(level, Rational(num, den));
}

CycloNum random_element(std::int64_t level) {
  std::vector<Rational> c;
  const std::int64_t n = uniform(1, level);
  for (std::int64_t i = 0; i < n; ++i) c.emplace_back(uniform(-5, 5), uniform(1, 4));
  return CycloNum::from_coeffs(level, c);
}

}  // namespace

TEST(CyclotomicPoly, SmallLevels) {
  EXPECT_EQ(cyclotomic_poly(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(1), (std::vector<std::int64_t>{-1, 1}));
}

TEST(CyclotomicPoly, MatchesOracle) {
  for (const auto& [key, coeffs] : oracle()["cyclotomic_polys"].items())
    ASSERT_EQ(cyclotomic_poly(std::stoll(key)), coeffs.get<std::vector<std::int64_t>>()) << key;
}

TEST(CycloNum, DefiningRelations) {
  EXPECT_EQ(CycloNum::zeta(4, 1) * CycloNum::zeta(4, 1), Q(4, -1));
  EXPECT_EQ((Q(3, 1) - CycloNum::zeta(3, 1)) * (Q(3, 1) - CycloNum::zeta(3, 2)), Q(3, 3));
  EXPECT_EQ(CycloNum::zeta(12, 12), Q(12, 1));
  EXPECT_EQ(CycloNum::zeta(12, -1), CycloNum::zeta(12, 11));
  EXPECT_TRUE((CycloNum::zeta(6, 3) + Q(6, 1)).is_zero());
  EXPECT_EQ(CycloNum::zeta(12, 1).pow(12), Q(12, 1));
}

TEST(CycloNum, SumOfPrimitiveRootsIsMoebius) {
  for (std::int64_t n : {5, 9, 12, 15, 30, 60}) {
    CycloNum s = CycloNum::zero(n);
    for (std::int64_t k : units_mod(n)) s = s + CycloNum::zeta(n, k);
    const int mu = n == 5 ? -1 : n == 9 ? 0 : n == 12 ? 0 : n == 15 ? 1 : n == 30 ? -1 : 0;
    EXPECT_EQ(s, Q(n, mu)) << n;
  }
}

TEST(CycloNum, Embedding) {
  const CycloNum z3 = CycloNum::zeta(3, 1);
  EXPECT_EQ(z3.embed(12), CycloNum::zeta(12, 4));
  EXPECT_EQ(z3 + CycloNum::zeta(4, 1), CycloNum::zeta(12, 4) + CycloNum::zeta(12, 3));
  EXPECT_EQ((z3 * CycloNum::zeta(4, 1)).level(), 12);
  EXPECT_THROW(z3.embed(10), PreconditionError);
}

TEST(CycloNum, Division) {
  const CycloNum a = Q(7, 1) - CycloNum::zeta(7, 1);
  EXPECT_EQ(a * a.inverse(), Q(7, 1));
  EXPECT_EQ((Q(7, 3) / a) * a, Q(7, 3));
  EXPECT_THROW(a / CycloNum::zero(7), PreconditionError);
}

TEST(CycloNum, FieldAxiomsRandom) {
  for (std::int64_t n : {5, 8, 12, 20, 21}) {
    for (int i = 0; i < 10; ++i) {
      const CycloNum x = random_element(n), y = random_element(n), z = random_element(n);
      ASSERT_EQ(x * (y + z), x * y + x * z);
      ASSERT_EQ((x * y) * z, x * (y * z));
      if (!y.is_zero()) ASSERT_EQ((x / y) * y, x);
    }
  }
}

TEST(Galois, Examples) {
  const CycloNum sqrt2 = CycloNum::zeta(8, 1) + CycloNum::zeta(8, 7);
  EXPECT_EQ(sqrt2.galois(5), -sqrt2);
  EXPECT_EQ(sqrt2 * sqrt2, Q(8, 2));
  EXPECT_EQ(sqrt2.galois(7), sqrt2);
  EXPECT_EQ(galois_act_cyclo(1, random_element(15)).level(), 15);
  EXPECT_EQ(galois_act_cyclo(5, CycloNum::zeta(4, 1)).embed(8), CycloNum::zeta(8, 2));
  EXPECT_THROW(sqrt2.galois(2), PreconditionError);
}

TEST(Galois, RingHomomorphismRandom) {
  for (std::int64_t n : {7, 12, 15, 24}) {
    for (int i = 0; i < 10; ++i) {
      const CycloNum x = random_element(n), y = random_element(n);
      for (std::int64_t t : units_mod(n)) {
        ASSERT_EQ((x + y).galois(t), x.galois(t) + y.galois(t));
        ASSERT_EQ((x * y).galois(t), x.galois(t) * y.galois(t));
      }
      ASSERT_EQ(x.galois(n - 1), x.conj());
      ASSERT_TRUE((x + x.conj()).is_real());
    }
  }
}

TEST(Xi, Examples) {
  EXPECT_EQ(xi_exact(S("[0]"), 3), Q(3, 1));
  EXPECT_EQ(xi_exact(y_op(3, S("[0]")), 3), Q(3, 1, 3));
  EXPECT_EQ(xi_exact(S("[1/3] + [2/3]"), 3), Q(3, 3));
  EXPECT_THROW(xi_exact(S("[1/5]"), 12), PreconditionError);
}

TEST(Xi, DistributionRelation) {
  // xi(Y_p [0]) = 1/p and xi(Y_p [a]) = 1 for a != 0.
  for (std::int64_t p : {2, 3, 5, 7}) {
    EXPECT_EQ(xi_exact(y_op(p, S("[0]")), p), Q(p, 1, p));
    for (const char* a : {"[1/3]", "[2/5]", "[5/12]"}) {
      const FormalSum s = y_op(p, S(a));
      const std::int64_t n = lcm64(420, 60 * p);
      EXPECT_EQ(xi_exact(s, n), Q(n, 1)) << p << " " << a;
    }
  }
}

TEST(Xi, GaloisEquivariant) {
  for (int i = 0; i < 30; ++i) {
    const FormalSum s = qabe::testing::random_a_prime(4);
    const std::int64_t n = 2520;
    for (std::int64_t t : {-1, 11, 13, 209}) ASSERT_EQ(xi_exact(galois_act(t, s), n), xi_exact(s, n).galois(t)) << format_sum(s);
  }
}

TEST(Sin, Examples) {
  EXPECT_EQ(sin_exact(FormalSum::zero(), 4), Q(4, 1));
  EXPECT_EQ(sin_exact(S("[1/2]"), 4), Q(4, 2));
  const CycloNum s3 = sin_exact(S("[1/3]"), 12);
  EXPECT_EQ(s3 * s3, Q(12, 3));
  EXPECT_EQ(s3.sign_of_real(), 1);
  EXPECT_EQ(sin_level(S("[1/3]")), 12);
  EXPECT_EQ(sin_level(S("[1/4] + [1/5]")), 40);
  EXPECT_THROW(sin_exact(S("[1/3]"), 6), PreconditionError);
}

TEST(Sin, RealAndPositiveOnDasClass) {
  const FormalSum a = canonical_apq(3, 5);
  const CycloNum s = sin_exact(a, 60);
  EXPECT_TRUE(s.is_real());
  EXPECT_EQ(s.sign_of_real(), 1);
}

TEST(Sin, XiRatioIsRootOfUnity) {
  for (int i = 0; i < 20; ++i) {
    const FormalSum s = qabe::testing::random_a_prime(3);
    const std::int64_t n = 5040;
    const CycloNum r = xi_exact(s, n) / sin_exact(s, n);
    ASSERT_EQ(r.pow(2 * n), Q(n, 1)) << format_sum(s);
  }
}

TEST(Sin, XiFactorization) {
  // xi((1 + sigma_-1)[a]) = 4 sin^2 pi a.
  for (std::int64_t d : {3, 5, 7, 8, 12}) {
    for (std::int64_t k = 1; k < d; ++k) {
      const FormalSum s = FormalSum::single(TorusPoint::make(k, d));
      const std::int64_t n = 4 * d;
      const CycloNum sn = sin_exact(s, n);
      ASSERT_EQ(xi_exact(s + conjugate(s), n), sn * sn);
    }
  }
}

TEST(SqrtExact, Squares) {
  EXPECT_EQ(sqrt_exact(2) * sqrt_exact(2), Q(8, 2));
  EXPECT_EQ(sqrt_exact(5) * sqrt_exact(5), Q(20, 5));
  EXPECT_EQ(sqrt_exact(-1) * sqrt_exact(-1), Q(4, -1));
  for (std::int64_t l : {3, 7, 11, 13, 17, 19, 23, 29}) {
    const CycloNum r = sqrt_exact(l);
    EXPECT_EQ(r.level(), 4 * l);
    EXPECT_EQ(r * r, Q(4 * l, l));
    EXPECT_EQ(r.sign_of_real(), 1);
  }
  EXPECT_THROW(sqrt_exact(9), PreconditionError);
}

TEST(SignOfReal, Examples) {
  EXPECT_EQ(CycloNum::zero(12).sign_of_real(), 0);
  EXPECT_EQ(sqrt_exact(2).sign_of_real(), 1);
  EXPECT_EQ(sqrt_exact(2).galois(5).sign_of_real(), -1);
  EXPECT_THROW(CycloNum::zeta(4, 1).sign_of_real(), PreconditionError);
  // 1 + sqrt(2) - 12/5 is about 0.0142.
  EXPECT_EQ((Q(8, 1) + sqrt_exact(2) - Q(8, 12, 5)).sign_of_real(), 1);
  // Tiny but nonzero: (sqrt 2 - 1)^40 > 0, its conjugate image is huge.
  const CycloNum tiny = (sqrt_exact(2) - Q(8, 1)).pow(40);
  EXPECT_EQ(tiny.sign_of_real(), 1);
  EXPECT_EQ((tiny - Q(8, 1, 1000000)).sign_of_real(), -1);
}

TEST(ToString, Polynomial) {
  EXPECT_EQ(CycloNum::zero(5).to_string(), "0");
  EXPECT_EQ(Q(5, 3, 2).to_string(), "3/2");
  EXPECT_EQ((Q(5, 1) - CycloNum::zeta(5, 2)).to_string(), "1 - z^2");
}
