#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tatedual/error.hpp"
#include "tatedual/padic.hpp"

using namespace tatedual;

namespace {

std::vector<std::uint64_t> digits_of(const PAdicInt& x) { return x.digits(); }

PAdicInt random_padic(std::mt19937_64& rng, Prime p, std::size_t n) {
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  std::vector<std::uint64_t> ds(n);
  for (auto& c : ds) c = d(rng);
  return PAdicInt::from_digits(p, ds);
}

constexpr Prime kPrimes[] = {2, 3, 5, 7, 11, 13};

}  // namespace

TEST(PadicFromInteger, SpecExamples) {
  EXPECT_EQ(digits_of(PAdicInt::from_integer(12, 3, 3)), (std::vector<std::uint64_t>{0, 1, 1}));
  EXPECT_EQ(digits_of(PAdicInt::from_integer(0, 5, 4)), (std::vector<std::uint64_t>{0, 0, 0, 0}));
  EXPECT_EQ(digits_of(PAdicInt::from_integer(2, 2, 4)), (std::vector<std::uint64_t>{0, 1, 0, 0}));
}

TEST(PadicFromInteger, NegativeIntegersWrap) {
  // -1 = (p-1)(1 + p + p^2 + ...)
  EXPECT_EQ(digits_of(PAdicInt::from_integer(-1, 3, 4)), (std::vector<std::uint64_t>{2, 2, 2, 2}));
  EXPECT_EQ(PAdicInt::from_integer(-5, 7, 3).residue(), 343 - 5);
}

TEST(PadicFromInteger, RejectsCompositeModulusNamingFactor) {
  try {
    PAdicInt::from_integer(1, 91, 2);
    FAIL() << "91 accepted";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("divisible by 7"), std::string::npos) << e.what();
  }
  EXPECT_THROW(PAdicInt::from_integer(1, 1, 2), DomainError);
  EXPECT_THROW(PAdicInt::from_integer(1, 0, 2), DomainError);
}

TEST(PadicFromInteger, RejectsZeroPrecision) {
  EXPECT_THROW(PAdicInt::from_integer(3, 3, 0), DomainError);
}

TEST(PadicFromInteger, LargeWordPrime) {
  const Prime p = 18446744073709551557ULL;  // largest 64-bit prime
  const auto x = PAdicInt::from_integer(-1, p, 2);
  EXPECT_EQ(digits_of(x), (std::vector<std::uint64_t>{p - 1, p - 1}));
}

TEST(PadicText, ParsesBothForms) {
  const auto a = PAdicInt::parse("p=3 N=3 digits=[0,1,1]");
  const auto b = PAdicInt::parse("p=3 N=3 int=12");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.str(), "p=3 N=3 digits=[0,1,1]");
  EXPECT_EQ(a.residue_str(), "12 mod 3^3");
  EXPECT_EQ(PAdicInt::parse("  p=2 N=4 int=-1 ").residue(), 15);
}

TEST(PadicText, RejectsMalformed) {
  EXPECT_THROW(PAdicInt::parse("p=3 N=3 digits=[0,3,1]"), ParseError);  // digit out of range
  EXPECT_THROW(PAdicInt::parse("p=3 N=3 digits=[0,1]"), ParseError);    // wrong length
  EXPECT_THROW(PAdicInt::parse("p=3 N=3 digits=[0,,1]"), ParseError);
  EXPECT_THROW(PAdicInt::parse("p=3 digits=[0,1,1]"), ParseError);
  EXPECT_THROW(PAdicInt::parse("N=3 p=3 int=1"), ParseError);
  EXPECT_THROW(PAdicInt::parse("p=4 N=3 int=1"), DomainError);
}

TEST(PadicArithmetic, SpecExamples) {
  const auto nine = PAdicInt::from_integer(9, 2, 4);
  EXPECT_EQ(invert(nine), nine);
  ASSERT_EQ(oracle::inverse_by_search(9, 16), 9UL);

  const auto two = PAdicInt::from_integer(2, 3, 2);
  EXPECT_EQ(digits_of(two + two), (std::vector<std::uint64_t>{1, 1}));
}

TEST(PadicArithmetic, InvertMatchesBruteForce) {
  for (Prime p : {2, 3, 5, 7}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const unsigned long m = oracle::upow(p, n).get_ui();
      for (unsigned long y = 0; y < m; ++y) {
        if (y % p == 0) continue;
        const auto inv = invert(PAdicInt::from_integer(y, p, n));
        EXPECT_EQ(inv.residue(), *oracle::inverse_by_search(y, m)) << y << " mod " << m;
      }
    }
  }
}

TEST(PadicArithmetic, InvertRejectsNonUnitWithValuation) {
  try {
    invert(PAdicInt::from_integer(12, 2, 6));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("valuation 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(invert(PAdicInt::zero(5, 3)), DomainError);
}

TEST(PadicArithmetic, RejectsMismatchedRings) {
  const auto a = PAdicInt::from_integer(1, 3, 3);
  EXPECT_THROW(a + PAdicInt::from_integer(1, 3, 4), DomainError);
  EXPECT_THROW(a * PAdicInt::from_integer(1, 5, 3), DomainError);
}

TEST(PadicArithmetic, DispatchForm) {
  const auto x = PAdicInt::from_integer(5, 7, 2);
  const auto y = PAdicInt::from_integer(10, 7, 2);
  EXPECT_EQ(arithmetic(ArithOp::kAdd, x, y).residue(), 15);
  EXPECT_EQ(arithmetic(ArithOp::kSub, x, y).residue(), 49 - 5);
  EXPECT_EQ(arithmetic(ArithOp::kMul, x, y).residue(), 1);
  EXPECT_EQ(arithmetic(ArithOp::kNeg, x).residue(), 44);
  EXPECT_EQ(arithmetic(ArithOp::kInvert, x).residue(), 10);
  EXPECT_THROW(arithmetic(ArithOp::kMul, x), DomainError);
  EXPECT_EQ(parse_arith_op("invert"), ArithOp::kInvert);
  EXPECT_FALSE(parse_arith_op("div"));
}

TEST(PadicValuation, SpecExamples) {
  EXPECT_EQ(PAdicInt::from_integer(12, 2, 6).valuation(), 2U);
  EXPECT_EQ(PAdicInt::from_integer(12, 3, 4).valuation(), 1U);
  EXPECT_FALSE(PAdicInt::zero(7, 5).valuation().has_value());
  EXPECT_FALSE(PAdicInt::from_integer(81, 3, 4).valuation().has_value());  // 0 at precision 4
}

TEST(CanonicalSequenceTest, SpecExamples) {
  for (Prime p : {2, 3, 5, 7, 11}) {
    const auto seq = canonical_sequence(PAdicInt::from_integer(p, p, 4));
    const BigInt pp = to_bigint(p);
    EXPECT_EQ(seq.entries, (std::vector<BigInt>{0, pp, pp, pp}));
  }
  EXPECT_EQ(canonical_sequence(PAdicInt::zero(3, 3)).entries, (std::vector<BigInt>{0, 0, 0}));
  EXPECT_EQ(canonical_sequence(PAdicInt::from_integer(12, 3, 4)).entries,
            (std::vector<BigInt>{0, 3, 12, 12}));
}

TEST(CanonicalSequenceTest, InvariantsDetectViolations) {
  CanonicalSequence bad{3, {0, 3, 13}};  // 13 != 3 mod 9
  EXPECT_FALSE(bad.satisfies_invariants());
  CanonicalSequence out_of_range{3, {3}};
  EXPECT_FALSE(out_of_range.satisfies_invariants());
}

// Properties

TEST(PadicProperties, AgreesWithDivisionOracle) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const Prime p = kPrimes[rng() % 6];
    const unsigned n = 1 + rng() % 20;
    mpz_class m;
    m = static_cast<unsigned long>(rng());
    m *= static_cast<unsigned long>(rng());
    if (rng() % 2) m = -m;
    const auto x = PAdicInt::from_integer(m, p, n);
    EXPECT_EQ(x.digits(), oracle::digits(m, p, n));
    const auto seq = canonical_sequence(x);
    EXPECT_EQ(seq.entries, oracle::canonical(m, p, n));
    EXPECT_TRUE(seq.satisfies_invariants());
  }
}

TEST(PadicProperties, RoundTripThroughCanonicalSequence) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const Prime p = kPrimes[rng() % 6];
    const unsigned n = 1 + rng() % 12;
    const BigInt m = BigInt(static_cast<unsigned long>(rng())) % oracle::upow(p, n);
    EXPECT_EQ(canonical_sequence(PAdicInt::from_integer(m, p, n)).entries.back(), m);
  }
}

TEST(PadicProperties, RingLaws) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 300; ++iter) {
    const Prime p = kPrimes[rng() % 6];
    const std::size_t n = 1 + rng() % 16;
    const auto x = random_padic(rng, p, n);
    const auto y = random_padic(rng, p, n);
    const auto z = random_padic(rng, p, n);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + (-x), PAdicInt::zero(p, n));
    EXPECT_EQ(x * PAdicInt::one(p, n), x);
    if (x.is_unit()) EXPECT_EQ(invert(x) * x, PAdicInt::one(p, n));
  }
}

TEST(PadicProperties, ValuationIsAdditive) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const Prime p = kPrimes[rng() % 4];
    const std::size_t n = 2 + rng() % 14;
    const auto x = random_padic(rng, p, n);
    const auto y = random_padic(rng, p, n);
    const auto vx = x.valuation();
    const auto vy = y.valuation();
    if (!vx || !vy || *vx + *vy >= n) continue;
    EXPECT_EQ((x * y).valuation(), *vx + *vy);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(PadicProperties, TruncationCommutesWithArithmetic) {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 100; ++iter) {
    const Prime p = kPrimes[rng() % 6];
    const std::size_t n = 2 + rng() % 10;
    const std::size_t k = 1 + rng() % n;
    const auto x = random_padic(rng, p, n);
    const auto y = random_padic(rng, p, n);
    EXPECT_EQ((x * y).truncated(k), x.truncated(k) * y.truncated(k));
    EXPECT_EQ((x + y).truncated(k), x.truncated(k) + y.truncated(k));
  }
}
