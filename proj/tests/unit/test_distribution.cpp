#include <gtest/gtest.h>

#include "qabe/distribution.hpp"
#include "qabe/errors.hpp"
#include "qabe/text.hpp"
#include "random_sums.hpp"

using namespace qabe;
using qabe::testing::random_a_doubleprime;
using qabe::testing::random_a_prime;
using qabe::testing::uniform;

namespace {

FormalSum S(const char* text) { return parse_sum(text); }

const TorusPoint kZero;

}  // namespace

TEST(FormalSum, GroupOperations) {
  EXPECT_TRUE(add(S("[1/3]"), negate(S("[1/3]"))).is_zero());
  EXPECT_EQ(scale(2, S("[1/5]")), S("2*[1/5]"));
  EXPECT_EQ(add(S("[1/3]"), S("[1/3]")), S("2*[1/3]"));
  EXPECT_TRUE(FormalSum::zero().is_zero());
  EXPECT_EQ(single(TorusPoint::make(1, 3)).coefficient(TorusPoint::make(1, 3)), 1);
  EXPECT_TRUE(scale(0, S("[1/5]")).is_zero());
}

TEST(FormalSum, SupportStaysExact) {
  FormalSum s = S("[1/3] + [1/5]");
  s.add_term(TorusPoint::make(1, 5), -1);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.coefficient(TorusPoint::make(1, 5)), 0);
}

TEST(FormalSum, Degree) {
  EXPECT_EQ(deg(single(kZero)), 1);
  EXPECT_EQ(deg(S("[1/3] + [2/15] - [4/15] - [1/5]")), 0);
  EXPECT_EQ(deg(FormalSum::zero()), 0);
}

TEST(FormalSum, GaloisAction) {
  const FormalSum s = random_a_prime();
  EXPECT_EQ(galois_act(1, s), s);
  EXPECT_EQ(galois_act(-1, S("[1/3]")), S("[2/3]"));
  EXPECT_EQ(galois_act(2, S("[1/5] + [2/5]")), S("[2/5] + [4/5]"));
  EXPECT_THROW(galois_act(3, S("[1/3]")), PreconditionError);
  EXPECT_THROW(galois_act(2, S("[1/4]")), PreconditionError);
}

TEST(YOperator, SmallCases) {
  EXPECT_EQ(y_op(2, single(kZero)), S("-[1/2]"));
  EXPECT_EQ(y_op(3, single(kZero)), S("-[1/3] - [2/3]"));
  EXPECT_EQ(y_op(5, y_op(3, single(kZero))), y_op(3, y_op(5, single(kZero))));
  EXPECT_THROW(y_op(4, single(kZero)), PreconditionError);
}

TEST(YOperator, Commute) {
  const std::int64_t primes[] = {2, 3, 5, 7};
  for (int i = 0; i < 60; ++i) {
    const FormalSum s = random_a_prime(4);
    const std::int64_t p = primes[uniform(0, 3)], q = primes[uniform(0, 3)];
    ASSERT_EQ(y_op(p, y_op(q, s)), y_op(q, y_op(p, s))) << format_sum(s);
  }
}

TEST(YOperator, GaloisEquivariant) {
  const std::int64_t primes[] = {2, 3, 5, 7};
  const std::int64_t units[] = {-1, 11, 13, 17, 19, 23, -29};
  for (int i = 0; i < 60; ++i) {
    const FormalSum s = random_a_prime(4);
    const std::int64_t p = primes[uniform(0, 3)];
    const std::int64_t t = units[uniform(0, 6)];
    ASSERT_EQ(galois_act(t, y_op(p, s)), y_op(p, galois_act(t, s))) << format_sum(s);
  }
}

TEST(ThetaOperator, Examples) {
  const FormalSum s = random_a_doubleprime();
  EXPECT_EQ(theta_op(3, 2, s), s);
  EXPECT_EQ(theta_op(5, 2, S("[1/5]")), S("[1/5] + [2/5]"));
  // (1 - sigma_5) Theta_5 [a + b] = [a + b] - [-a + b] with sigma_5 the
  // generator t = 7 mod 15 (2 mod 5, 1 mod 3).
  const TorusPoint ab = TorusPoint::make(1, 5) + TorusPoint::make(1, 3);
  const TorusPoint mab = -TorusPoint::make(1, 5) + TorusPoint::make(1, 3);
  const FormalSum th = theta_op(5, 7, single(ab));
  EXPECT_EQ(th - galois_act(7, th), single(ab) - single(mab));
  EXPECT_THROW(theta_op(2, 1, s), PreconditionError);
  EXPECT_THROW(theta_op(5, 5, S("[1/5]")), PreconditionError);
}

TEST(Projector, Examples) {
  EXPECT_EQ(p_projector(S("[1/3]")), S("[1/3]"));
  EXPECT_TRUE(p_projector(S("[2/3]")).is_zero());
  const FormalSum s = S("[1/3] + [2/3]");
  EXPECT_EQ(p_projector(s) + conjugate(p_projector(conjugate(s))), s);
  EXPECT_THROW(p_projector(S("[1/4]")), PreconditionError);
  EXPECT_THROW(p_projector(single(kZero)), PreconditionError);
}

TEST(Projector, DualityProperty) {
  for (int i = 0; i < 200; ++i) {
    const FormalSum s = random_a_doubleprime();
    ASSERT_EQ(p_projector(s) + conjugate(p_projector(conjugate(s))), s) << format_sum(s);
  }
}

TEST(Subgroups, Membership) {
  EXPECT_TRUE(in_A_prime(S("[1/3]")));
  EXPECT_TRUE(in_A_doubleprime(S("[1/3]")));
  EXPECT_TRUE(in_A_prime(S("[1/4]")));
  EXPECT_FALSE(in_A_doubleprime(S("[1/4]")));
  EXPECT_FALSE(in_A_prime(S("[1/2]")));
  EXPECT_FALSE(in_A_prime(single(kZero)));
  EXPECT_FALSE(in_A_doubleprime(single(kZero)));
}

TEST(Lift, CanonicalExamples) {
  const Selector h = Selector::canonical();
  EXPECT_EQ(lift(h, S("[1/3] + [2/3]")), S("[1/3]"));
  EXPECT_TRUE(lift(h, S("[2/3]")).is_zero());
  EXPECT_THROW(lift(h, S("[1/2]")), PreconditionError);
  EXPECT_THROW(lift(h, single(kZero)), PreconditionError);
}

namespace {

std::vector<Selector> sample_selectors() {
  std::vector<Selector> out{Selector::canonical()};
  for (std::uint64_t seed = 1; seed <= 8; ++seed) out.push_back(Selector::seeded(seed));
  out.push_back(Selector::main_formula(3, 5, 11, 7));
  out.push_back(Selector::main_formula(2, 7, 1, 17));
  return out;
}

}  // namespace

TEST(Selector, PartitionProperty) {
  for (const Selector& h : sample_selectors()) {
    for (std::int64_t d = 3; d <= 60; ++d) {
      for (std::int64_t n = 1; n < d; ++n) {
        const TorusPoint a = TorusPoint::make(n, d);
        if (a.is_half_integer()) continue;
        ASSERT_NE(h.contains(a), h.contains(-a)) << h.name() << " " << a;
        ASSERT_EQ(h.contains(a), h.contains(a)) << h.name();
      }
    }
  }
}

TEST(Selector, SeedsDiffer) {
  int disagreements = 0;
  for (std::int64_t n = 1; n < 50; ++n)
    if (Selector::seeded(1).contains(TorusPoint::make(n, 101)) != Selector::seeded(2).contains(TorusPoint::make(n, 101)))
      ++disagreements;
  EXPECT_GT(disagreements, 0);
}

TEST(Selector, MainFormulaNeedsGenerators) {
  EXPECT_NO_THROW(Selector::main_formula(3, 5, 11, 7));
  EXPECT_THROW(Selector::main_formula(3, 5, 1, 7), PreconditionError);    // 1 generates nothing mod 3
  EXPECT_THROW(Selector::main_formula(3, 5, 11, 17), PreconditionError);  // 17 = 2 mod 3
  EXPECT_THROW(Selector::main_formula(2, 7, 1, 29), PreconditionError);  // 29 = 1 mod 7
  EXPECT_THROW(Selector::main_formula(2, 7, 1, 31), PreconditionError);  // 31 = 3 mod 4
  EXPECT_THROW(Selector::main_formula(5, 3, 1, 1), PreconditionError);
}

TEST(Lift, Idempotent) {
  for (const Selector& h : sample_selectors()) {
    for (int i = 0; i < 30; ++i) {
      const FormalSum s = random_a_prime();
      ASSERT_EQ(lift(h, lift(h, s)), lift(h, s));
    }
  }
}

TEST(Lift, ComplementIdentity) {
  for (const Selector& h : sample_selectors()) {
    for (int i = 0; i < 30; ++i) {
      const FormalSum s = random_a_prime();
      ASSERT_EQ(lift(h, s) + conjugate(lift(h, conjugate(s))), s) << h.name() << " " << format_sum(s);
    }
  }
}

TEST(Lift, OddAndEvenParts) {
  for (const Selector& h : sample_selectors()) {
    for (int i = 0; i < 30; ++i) {
      const FormalSum s = random_a_prime();
      const FormalSum odd = s - conjugate(s);   // (1 + sigma_-1) odd = 0
      const FormalSum even = s + conjugate(s);  // (1 - sigma_-1) even = 0
      const FormalSum lo = lift(h, odd), le = lift(h, even);
      ASSERT_EQ(odd, lo - conjugate(lo));
      ASSERT_EQ(even, le + conjugate(le));
    }
  }
}

TEST(Degree, AdditiveAndGaloisInvariant) {
  for (int i = 0; i < 200; ++i) {
    const FormalSum s = random_a_prime(), t = random_a_prime();
    ASSERT_EQ(deg(s + t), deg(s) + deg(t));
    ASSERT_EQ(deg(galois_act(-1, s)), deg(s));
    ASSERT_EQ(deg(galois_act(1129, s)), deg(s));
  }
}
