#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "suzree/arith.hpp"

using namespace suzree;

namespace {

Nat product_of(const FactorMultiset& fs) {
  Nat n = 1;
  for (const auto& pp : fs) n *= pow(pp.prime, pp.exponent);
  return n;
}

}  // namespace

TEST(IsPrime, MatchesTrialDivisionBelow100k) {
  for (std::uint64_t n = 0; n < 100000; ++n) ASSERT_EQ(is_prime(Nat(n)), oracle::trial_prime(n)) << n;
}

TEST(IsPrime, WorkedValues) {
  EXPECT_TRUE(is_prime(Nat(13)));
  EXPECT_FALSE(is_prime(Nat(4033)));  // 37 * 109, a strong base-2 pseudoprime
  EXPECT_FALSE(is_prime(Nat(1)));
  EXPECT_FALSE(is_prime(Nat(0)));
}

TEST(IsPrime, RejectsStrongPseudoprimes) {
  // Strong pseudoprimes to all prime bases up to 31 and 37 respectively.
  EXPECT_FALSE(is_prime(Nat("3825123056546413051")));
  EXPECT_FALSE(is_prime(Nat("318665857834031151167461")));
  EXPECT_FALSE(is_prime(Nat("3317044064679887385961981")));
  for (const char* c : {"561", "1105", "1729", "2465", "2821", "6601", "8911", "3215031751"})
    EXPECT_FALSE(is_prime(Nat(c))) << c;
}

TEST(IsPrime, Mersenne) {
  const Nat m127 = pow(Nat(2), 127) - 1;
  EXPECT_TRUE(is_prime(m127));
  EXPECT_FALSE(primality_is_certain(m127));
  EXPECT_FALSE(is_prime(pow(Nat(2), 128) + 1));
  EXPECT_TRUE(is_prime(pow(Nat(2), 521) - 1));
  EXPECT_FALSE(is_prime(pow(Nat(2), 523) - 1));
  EXPECT_TRUE(is_prime(m127, PrimalityOptions{4}));
}

TEST(IsPrime, AgreesWithGmpOnRandomWideIntegers) {
  std::mt19937_64 rng(20261014);
  for (int i = 0; i < 3000; ++i) {
    const Nat n = oracle::random_bits(rng, 65 + rng() % 200) | 1;
    ASSERT_EQ(is_prime(n), mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) << n;
  }
}

TEST(IsPrime, SemiprimesOfLargePrimes) {
  const Nat p = pow(Nat(2), 61) - 1, q = pow(Nat(2), 89) - 1;
  EXPECT_FALSE(is_prime(p * q));
  EXPECT_FALSE(is_prime(p * p));
}

TEST(Factorize, RoundTripAndTrialDivisionOracle) {
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    const FactorMultiset fs = factorize(Nat(n));
    ASSERT_EQ(product_of(fs), Nat(n)) << n;
    const auto expected = oracle::trial_factor(n);
    ASSERT_EQ(fs.size(), expected.size()) << n;
    std::size_t i = 0;
    for (const auto& [p, e] : expected) {
      ASSERT_EQ(fs[i].prime, Nat(p)) << n;
      ASSERT_EQ(fs[i].exponent, e) << n;
      ++i;
    }
  }
}

TEST(Factorize, WorkedValues) {
  const FactorMultiset fs = factorize(Nat(703));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0], (PrimePower{Nat(19), 1}));
  EXPECT_EQ(fs[1], (PrimePower{Nat(37), 1}));
  EXPECT_TRUE(factorize(Nat(1)).empty());
  EXPECT_THROW(factorize(Nat(0)), DomainError);
}

TEST(Factorize, RandomProductsOfKnownPrimes) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Nat n = 1;
    FactorMultiset built;
    std::map<Nat, unsigned> want;
    const int parts = 1 + rng() % 4;
    for (int k = 0; k < parts; ++k) {
      Nat p;
      const Nat start = oracle::random_bits(rng, 8 + rng() % 28);
      mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
      const unsigned e = 1 + rng() % 3;
      want[p] += e;
      n *= pow(p, e);
    }
    const FactorMultiset fs = factorize(n);
    ASSERT_EQ(product_of(fs), n);
    ASSERT_EQ(fs.size(), want.size());
    std::size_t i = 0;
    for (const auto& [p, e] : want) {
      ASSERT_EQ(fs[i].prime, p);
      ASSERT_EQ(fs[i].exponent, e);
      ++i;
    }
  }
}

TEST(Factorize, PerfectPowersAndCyclotomicValues) {
  const Nat p = pow(Nat(2), 31) - 1;
  const FactorMultiset fs = factorize(pow(p, 5));
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0].prime, p);
  EXPECT_EQ(fs[0].exponent, 5u);

  // 2^64 + 1 = 274177 * 67280421310721
  const FactorMultiset f64 = factorize(pow(Nat(2), 64) + 1);
  ASSERT_EQ(f64.size(), 2u);
  EXPECT_EQ(f64[0].prime, Nat(274177));
  EXPECT_EQ(f64[1].prime, Nat("67280421310721"));
}

TEST(Factorize, BudgetExhaustionCarriesCofactor) {
  const Nat p = pow(Nat(2), 61) - 1, q = pow(Nat(2), 89) - 1;
  try {
    factorize(p * q, 5);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.cofactor(), p * q);
    EXPECT_EQ(e.budget(), 5u);
  }
  const Factorization partial = factorize_partial(Nat(6) * p * q, 5);
  EXPECT_FALSE(partial.complete());
  ASSERT_EQ(partial.unfactored.size(), 1u);
  EXPECT_EQ(partial.unfactored[0], p * q);
  ASSERT_EQ(partial.factors.size(), 2u);
  EXPECT_EQ(partial.factors[0].prime, Nat(2));
  EXPECT_EQ(partial.factors[1].prime, Nat(3));
}

TEST(Factorize, DeterministicAcrossCalls) {
  const Nat n = (pow(Nat(2), 67) - 1) * (pow(Nat(3), 41) - 2);
  const FactorMultiset a = factorize(n), b = factorize(n);
  EXPECT_EQ(a, b);
}

TEST(LargestPrimeDivisor, MatchesTrialDivision) {
  for (std::uint64_t n = 2; n < 3000; ++n) {
    const std::uint64_t want = oracle::trial_factor(n).rbegin()->first;
    ASSERT_EQ(largest_prime_divisor(Nat(n)), Nat(want));
    ASSERT_EQ(largest_prime_divisor(n), want);
  }
  EXPECT_THROW(largest_prime_divisor(Nat(1)), DomainError);
}

TEST(MultiplicativeOrder, MatchesStepping) {
  EXPECT_EQ(multiplicative_order(Nat(2), Nat(13)), Nat(12));
  EXPECT_EQ(multiplicative_order(Nat(2), Nat(19)), Nat(18));
  for (std::uint64_t r = 3; r < 2000; ++r) {
    if (!oracle::trial_prime(r)) continue;
    for (std::uint64_t q : {2, 3, 5, 10, 1000003}) {
      if (q % r == 0) continue;
      ASSERT_EQ(multiplicative_order(Nat(q), Nat(r)), Nat(oracle::order_by_stepping(q, r))) << q << " mod " << r;
    }
  }
}

TEST(MultiplicativeOrder, Domain) {
  EXPECT_THROW(multiplicative_order(Nat(2), Nat(15)), DomainError);
  EXPECT_THROW(multiplicative_order(Nat(26), Nat(13)), DomainError);
  // order of 2 mod the Mersenne prime 2^127 - 1 is 127
  EXPECT_EQ(multiplicative_order(Nat(2), pow(Nat(2), 127) - 1), Nat(127));
}

TEST(SmallIntegerFunctions, MobiusPhiDivisors) {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto f = oracle::trial_factor(n);
    int mu = 1;
    std::uint64_t phi = 1, count = 1;
    for (const auto& [p, e] : f) {
      mu = e > 1 ? 0 : -mu;
      phi *= (p - 1) * oracle::ipow(p, e - 1).get_ui();
      count *= e + 1;
    }
    ASSERT_EQ(mobius(n), mu) << n;
    ASSERT_EQ(euler_phi(n), phi) << n;
    const auto ds = divisors(n);
    ASSERT_EQ(ds.size(), count) << n;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      ASSERT_EQ(n % ds[i], 0u);
      if (i) {
        ASSERT_LT(ds[i - 1], ds[i]);
      }
    }
  }
}

TEST(Nat, DecimalStringRoundTripTo4000Bits) {
  std::mt19937_64 rng(4000);
  for (unsigned bits = 1; bits <= 4000; bits += 37) {
    const Nat n = oracle::random_bits(rng, bits);
    const std::string s = n.get_str();
    EXPECT_EQ(Nat(s), n);
    EXPECT_EQ(Nat(s).get_str(), s);
  }
  const Nat big = pow(Nat(2), 4000);
  EXPECT_EQ(Nat(big.get_str()), big);
}
