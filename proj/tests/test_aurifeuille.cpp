#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "suzree/aurifeuille.hpp"

using namespace suzree;

namespace {

int n_of(Family f) { return torus_index(f); }
int eps_int(Sign s) { return s == Sign::Plus ? 1 : -1; }

std::vector<std::uint64_t> coprime_up_to(Family f, std::uint64_t max_m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    if (std::gcd(m, std::uint64_t(n_of(f))) == 1) out.push_back(m);
  }
  return out;
}

// f(x) = prod over primitive d-th roots w of (x - xi w)(x - conj(xi) w), in
// floating point, at x = sqrt(v).
long double f_numeric(Family f, std::uint64_t m, const RootChoice& xi) {
  using C = std::complex<long double>;
  const std::uint64_t d = f == Family::ReeF4 ? 3 * m : m;
  const long double tau = 2 * std::numbers::pi_v<long double>;
  const C z = std::polar<long double>(1, tau * xi.exponent / xi.order);
  const C x(std::sqrt(static_cast<long double>(field_base(f))), 0);
  C acc(1, 0);
  for (std::uint64_t k = 1; k <= d; ++k) {
    if (std::gcd(k, d) != 1) continue;
    const C w = std::polar<long double>(1, tau * k / d);
    acc *= (x - z * w) * (x - std::conj(z) * w);
  }
  return acc.real();
}

}  // namespace

TEST(Psi, HeadlineValues) {
  EXPECT_EQ(psi_eval(Family::Suzuki, Sign::Plus, 3), Nat(13));
  EXPECT_EQ(psi_eval(Family::Suzuki, Sign::Minus, 3), Nat(5));
  EXPECT_EQ(psi_eval(Family::Suzuki, Sign::Plus, 5), Nat(41));
  EXPECT_EQ(psi_eval(Family::Suzuki, Sign::Minus, 5), Nat(25));
  EXPECT_EQ(psi_eval(Family::Suzuki, Sign::Plus, 7), Nat(145));
  EXPECT_EQ(psi_eval(Family::Suzuki, Sign::Minus, 7), Nat(113));
  EXPECT_EQ(psi_eval(Family::ReeF4, Sign::Plus, 3), Nat(109));
  EXPECT_EQ(psi_eval(Family::ReeF4, Sign::Minus, 3), Nat(37));
  EXPECT_THROW(psi_eval(Family::Suzuki, Sign::Plus, 4), DomainError);
}

TEST(Psi, ClosedFormsAndAurifeuillianSplit) {
  for (Family f : kAllFamilies) {
    for (std::uint64_t e = 1; e <= 151; e += 2) {
      for (Sign s : kBothSigns) ASSERT_EQ(psi_eval(f, s, e), oracle::psi_closed_form(n_of(f), eps_int(s), e));
      const PsiPair p = psi_pair_check(f, e);
      ASSERT_TRUE(p.product_ok) << family_name(f) << " " << e;
      ASSERT_TRUE(p.coprime_ok) << family_name(f) << " " << e;
    }
  }
}

TEST(InducedSign, TwoRootsGiveOppositeSigns) {
  for (Family f : kAllFamilies) {
    for (std::uint64_t m : coprime_up_to(f, 61)) {
      const auto roots = root_choices(f);
      ASSERT_NE(induced_sign(f, m, roots[0]), induced_sign(f, m, roots[1])) << family_name(f) << " " << m;
    }
  }
  EXPECT_THROW(induced_sign(Family::Suzuki, 3, RootChoice{8, 2}), DomainError);
  EXPECT_THROW(induced_sign(Family::Suzuki, 3, RootChoice{12, 1}), DomainError);
}

TEST(BuildF, F3Coefficients) {
  // Phi_3(x/zeta8) Phi_3(x/zeta8^-1) for m = 3: degree 4, monic, palindromic
  const auto f = build_f<Family::Suzuki>(3, RootChoice{8, 1});
  ASSERT_EQ(f.degree(), 4);
  EXPECT_TRUE(f.is_monic());
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(f.coeff(k), f.coeff(4 - k));
  EXPECT_THROW(build_f<Family::Suzuki>(2, RootChoice{8, 1}), DomainError);
  EXPECT_THROW(build_f<Family::ReeG2>(9, RootChoice{12, 1}), DomainError);
}

TEST(BuildF, MatchesFloatingPointRootProduct) {
  for (Family f : kAllFamilies) {
    for (std::uint64_t m : coprime_up_to(f, f == Family::ReeF4 ? 7 : 13)) {
      for (const RootChoice& xi : root_choices(f)) {
        const Int exact = with_family(f, [&](auto tag) {
          constexpr Family F = decltype(tag)::value;
          return eval_f(build_f<F>(m, xi), 1);
        });
        const long double approx = f_numeric(f, m, xi);
        ASSERT_NEAR(exact.get_d(), static_cast<double>(approx), 1e-6 * std::max(1.0, std::fabs(exact.get_d())))
            << family_name(f) << " m=" << m << " " << root_name(xi);
      }
    }
  }
}

TEST(Lemma1, GcdEqualsFValueAgainstIntegerOracle) {
  for (Family f : kAllFamilies) {
    for (std::uint64_t m : coprime_up_to(f, f == Family::ReeF4 ? 9 : 15)) {
      for (std::uint64_t s : {1, 3}) {
        const Lemma1Result r = lemma1_evaluate(f, m, s);
        ASSERT_TRUE(r.holds) << family_name(f) << " m=" << m << " s=" << s;
        for (const auto& e : r.entries) {
          const Nat phi = oracle::cyclotomic_value_by_division(n_of(f) * m, oracle::ipow(field_base(f), s));
          const Nat psi = oracle::psi_closed_form(n_of(f), eps_int(e.induced), s * m);
          Nat g;
          mpz_gcd(g.get_mpz_t(), phi.get_mpz_t(), psi.get_mpz_t());
          ASSERT_EQ(e.gcd, g);
          ASSERT_EQ(gcd_phi_psi(f, m, s, e.induced), g);
          ASSERT_EQ(e.f_abs, g) << family_name(f) << " m=" << m << " s=" << s << " " << root_name(e.root);
        }
      }
    }
  }
}

TEST(Identities, FactorAndDivisorProduct) {
  for (Family f : kAllFamilies) {
    for (std::uint64_t m : coprime_up_to(f, f == Family::ReeF4 ? 9 : 15)) {
      for (const RootChoice& xi : root_choices(f)) {
        with_family(f, [&](auto tag) {
          constexpr Family F = decltype(tag)::value;
          EXPECT_TRUE(factor_identity_holds<F>(m, xi)) << family_name(F) << " " << m;
          EXPECT_TRUE(divisor_product_identity_holds<F>(m, xi)) << family_name(F) << " " << m;
        });
      }
    }
  }
}

TEST(Identities, WrongSignBreaksDivisorProduct) {
  // The product identity pins ε: Psi_n(-ε x^m) must differ.
  const auto xi = RootChoice{8, 1};
  QuadPolyOf<Family::Suzuki> product = QuadPolyOf<Family::Suzuki>::constant(QuadInt<2>(1));
  for (std::uint64_t d : divisors(7)) product *= build_f<Family::Suzuki>(d, xi);
  const QuadInt<2> s = QuadInt<2>::sqrt_radicand();
  const Sign eps = induced_sign<Family::Suzuki>(7, xi);
  const QuadInt<2> wrong = eps == Sign::Plus ? -s : s;
  std::vector<QuadInt<2>> c(15, QuadInt<2>(0));
  c[0] = QuadInt<2>(1);
  c[7] = wrong;
  c[14] = QuadInt<2>(1);
  EXPECT_NE(product, QuadPolyOf<Family::Suzuki>(c));
}

TEST(Lemma2, StatusesOnGrid) {
  for (Family f : {Family::Suzuki, Family::ReeG2}) {
    for (std::uint64_t m : coprime_up_to(f, 99)) {
      const Lemma2Result r = lemma2_evaluate(f, m);
      ASSERT_NE(r.status, Lemma2Status::Fail) << family_name(f) << " " << m;
      const bool applicable = f == Family::Suzuki ? m > 5 : m > 3;
      ASSERT_EQ(r.status == Lemma2Status::Pass, applicable);
      if (applicable) {
        for (const auto& v : r.values) ASSERT_GT(v, Nat(largest_prime_divisor(m)));
      }
    }
  }
  EXPECT_EQ(lemma2_check(Family::Suzuki, 5), Lemma2Status::NotApplicable);
  EXPECT_THROW(lemma2_evaluate(Family::ReeF4, 5), DomainError);
  EXPECT_THROW(lemma2_evaluate(Family::Suzuki, 4), DomainError);
}

TEST(Theorem2, SuzukiExceptionsOnly) {
  for (Family f : kAllFamilies) {
    for (std::uint64_t m = 3; m <= 41; m += 2) {
      for (Sign s : kBothSigns) {
        const Verdict v = verify_theorem2(f, m, s);
        const bool exception = f == Family::Suzuki && s == Sign::Minus && (m == 3 || m == 5);
        ASSERT_EQ(v.holds, !exception) << family_name(f) << " " << m << " " << sign_name(s);
        ASSERT_EQ(v.is_known_exception, f == Family::Suzuki && (m == 3 || m == 5));
        // direct: gcd of the stripped primitive part with Psi
        const Nat k = oracle::primitive_part_by_stripping(n_of(f) * m, Nat(field_base(f)));
        Nat g;
        const Nat psi = oracle::psi_closed_form(n_of(f), eps_int(s), m);
        mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), psi.get_mpz_t());
        ASSERT_EQ(v.gcd, g);
      }
    }
  }
  EXPECT_THROW(verify_theorem2(Family::Suzuki, 4, Sign::Plus), DomainError);
  EXPECT_THROW(verify_theorem2(Family::Suzuki, 1, Sign::Plus), DomainError);
}

TEST(Theorem2, Witnesses) {
  const Verdict plus = verify_theorem2(Family::ReeF4, 3, Sign::Plus, true);
  const Verdict minus = verify_theorem2(Family::ReeF4, 3, Sign::Minus, true);
  ASSERT_TRUE(plus.witness && minus.witness);
  EXPECT_EQ(*plus.witness, Nat(109));
  EXPECT_EQ(*minus.witness, Nat(37));
  EXPECT_EQ(oracle::order_by_stepping(2, 109), 36u);
  EXPECT_EQ(oracle::order_by_stepping(2, 37), 36u);
  const Verdict sz7 = verify_theorem2(Family::Suzuki, 7, Sign::Plus, true);
  EXPECT_EQ(*sz7.witness, Nat(29));
  EXPECT_FALSE(verify_theorem2(Family::Suzuki, 3, Sign::Minus, true).witness);
}
