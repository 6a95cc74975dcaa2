#pragma once

// Exact integer utilities: primality, factorization, multiplicative order and
// the small arithmetic functions used by the cyclotomic code.
//
// Primality is deterministic below 2^64 (Miller-Rabin with the first twelve
// prime bases). Above 2^64 it is a Baillie-PSW test (strong base-2 test plus a
// strong Lucas test with Selfridge parameters); no BPSW pseudoprime is known
// but the verdict is probabilistic in principle. PrimalityOptions::extra_rounds
// appends further Miller-Rabin rounds with fixed prime bases.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "suzree/errors.hpp"

namespace suzree {

using Nat = mpz_class;  // nonnegative by convention
using Int = mpz_class;

static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long (LP64) required");

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Starting point of every Brent cycle; the polynomial constant c runs 1, 2, 3, ...
inline constexpr unsigned long kRhoSeed = 2;

struct PrimalityOptions {
  unsigned extra_rounds = 0;
};

struct PrimePower {
  Nat prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

/// Sorted ascending by prime; primes pairwise distinct.
using FactorMultiset = std::vector<PrimePower>;

/// Result of a factorization that may stop short on hard cofactors.
struct Factorization {
  FactorMultiset factors;
  std::vector<Nat> unfactored;  // composite cofactors left after budget exhaustion

  bool complete() const { return unfactored.empty(); }
};

inline Nat pow(const Nat& base, unsigned long exponent) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline Nat powm(const Nat& base, const Nat& exponent, const Nat& modulus) {
  Nat r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

inline Nat gcd(const Nat& a, const Nat& b) {
  Nat r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool fits_u64(const Nat& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

/// Removes every factor p from n.
inline Nat strip_factor(Nat n, unsigned long p) {
  if (sgn(n) == 0) return n;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
  return n;
}

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline constexpr std::array<std::uint64_t, 12> kDeterministicBases = {2,  3,  5,  7,  11, 13,
                                                                       17, 19, 23, 29, 31, 37};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kDeterministicBases) {
    if (n % p == 0) return n == p;
  }
  for (std::uint64_t a : kDeterministicBases) {
    if (!strong_probable_prime_u64(n, a)) return false;
  }
  return true;
}

inline bool strong_probable_prime(const Nat& n, const Nat& base) {
  Nat d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Nat x = powm(base, d, n);
  const Nat n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

inline Nat mod(const Nat& a, const Nat& n) {
  Nat r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Nat half_mod(Nat a, const Nat& n) {
  if (mpz_odd_p(a.get_mpz_t())) a += n;
  mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), 1);
  return a;
}

// Strong Lucas test with Selfridge's method A parameters. n odd, n > 3.
inline bool strong_lucas_probable_prime(const Nat& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  long d_value = 5;
  for (;;) {
    const Nat d(d_value);
    int j = mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0) {
      Nat g = gcd(abs(d), n);
      if (g != n) return false;
    }
    d_value = d_value > 0 ? -(d_value + 2) : -d_value + 2;
  }
  const Nat D(d_value);
  const Nat P(1);
  const Nat Q = mod(Nat((1 - d_value) / 4), n);

  Nat k = n + 1;
  unsigned long s = mpz_scan1(k.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(k.get_mpz_t(), k.get_mpz_t(), s);

  Nat U = 1, V = P, Qk = Q;
  const long top = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1;
  for (long bit = top - 1; bit >= 0; --bit) {
    U = mod(U * V, n);
    V = mod(V * V - 2 * Qk, n);
    Qk = mod(Qk * Qk, n);
    if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      Nat u_next = half_mod(mod(P * U + V, n), n);
      Nat v_next = half_mod(mod(D * U + P * V, n), n);
      U = std::move(u_next);
      V = std::move(v_next);
      Qk = mod(Qk * Q, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = mod(V * V - 2 * Qk, n);
    if (V == 0) return true;
    Qk = mod(Qk * Qk, n);
  }
  return false;
}

inline const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 1 << 12;
    std::vector<bool> composite(limit, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace detail

/// True iff n is prime. Deterministic for n < 2^64.
inline bool is_prime(const Nat& n, PrimalityOptions options = {}) {
  if (sgn(n) <= 0) return false;
  if (fits_u64(n)) return detail::is_prime_u64(mpz_get_ui(n.get_mpz_t()));
  for (unsigned long p : detail::small_primes()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (!detail::strong_probable_prime(n, Nat(2))) return false;
  if (!detail::strong_lucas_probable_prime(n)) return false;
  // Extra rounds use the primes after the deterministic set: 41, 43, 47, ...
  const auto& primes = detail::small_primes();
  for (unsigned i = 0; i < options.extra_rounds; ++i) {
    if (!detail::strong_probable_prime(n, Nat(primes[12 + i % (primes.size() - 12)]))) return false;
  }
  return true;
}

/// True when is_prime(n) is a proof rather than a probable-prime verdict.
inline bool primality_is_certain(const Nat& n) { return fits_u64(n); }

namespace detail {

struct RhoExhausted {};

// One Brent cycle search for f(x) = x^2 + c mod n. Returns a proper factor, or
// nullopt when the cycle closed on n itself. Throws RhoExhausted when the
// iteration counter reaches zero.
inline std::optional<Nat> brent_split(const Nat& n, unsigned long c, std::uint64_t& remaining) {
  constexpr std::uint64_t kBatch = 128;
  auto step = [&](Nat& x) {
    if (remaining == 0) throw RhoExhausted{};
    --remaining;
    mpz_mul(x.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
    mpz_add_ui(x.get_mpz_t(), x.get_mpz_t(), c);
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  };
  Nat y = kRhoSeed, x, ys, q = 1, g = 1, diff;
  std::uint64_t r = 1;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t lim = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        step(y);
        diff = x - y;
        mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
        q = q * diff % n;
      }
      g = gcd(q, n);
      k += kBatch;
    }
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      step(ys);
      diff = x - ys;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      g = gcd(diff, n);
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

inline std::optional<std::pair<Nat, unsigned long>> perfect_power_root(const Nat& n) {
  if (!mpz_perfect_power_p(n.get_mpz_t())) return std::nullopt;
  const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = bits; k >= 2; --k) {
    Nat root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0 && root > 1) return std::pair{root, k};
  }
  return std::nullopt;
}

// Splits n completely into primes, appending them (with multiplicity) to
// `primes`; cofactors that exhaust the budget go to `unfactored`, or raise
// BudgetExceeded when `strict`.
inline void split_into(const Nat& n, std::uint64_t budget, bool strict, std::map<Nat, unsigned>& primes,
                       std::vector<Nat>& unfactored) {
  Nat rest = n;
  for (unsigned long p : small_primes()) {
    if (rest == 1) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e) primes[Nat(p)] += e;
  }
  std::vector<std::pair<Nat, unsigned>> stack;
  if (rest > 1) stack.emplace_back(rest, 1);
  while (!stack.empty()) {
    auto [m, mult] = std::move(stack.back());
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      primes[m] += mult;
      continue;
    }
    if (auto root = perfect_power_root(m)) {
      stack.emplace_back(root->first, mult * static_cast<unsigned>(root->second));
      continue;
    }
    std::uint64_t remaining = budget;
    std::optional<Nat> factor;
    try {
      for (unsigned long c = 1; !factor; ++c) factor = brent_split(m, c, remaining);
    } catch (const RhoExhausted&) {
      if (strict) throw BudgetExceeded(m, budget);
      for (unsigned i = 0; i < mult; ++i) unfactored.push_back(m);
      continue;
    }
    Nat other = m / *factor;
    stack.emplace_back(std::move(*factor), mult);
    stack.emplace_back(std::move(other), mult);
  }
}

inline FactorMultiset to_multiset(const std::map<Nat, unsigned>& primes) {
  FactorMultiset out;
  out.reserve(primes.size());
  for (const auto& [p, e] : primes) out.push_back({p, e});
  return out;
}

}  // namespace detail

/// Complete factorization of n >= 1. Throws BudgetExceeded when the Brent loop
/// needs more than `budget` iterations on some cofactor.
inline FactorMultiset factorize(const Nat& n, std::uint64_t budget = kDefaultBudget) {
  if (sgn(n) <= 0) throw DomainError("factorize: n must be positive");
  std::map<Nat, unsigned> primes;
  std::vector<Nat> unfactored;
  detail::split_into(n, budget, true, primes, unfactored);
  return detail::to_multiset(primes);
}

/// Like factorize, but hard cofactors are reported instead of raising.
inline Factorization factorize_partial(const Nat& n, std::uint64_t budget = kDefaultBudget) {
  if (sgn(n) <= 0) throw DomainError("factorize: n must be positive");
  std::map<Nat, unsigned> primes;
  Factorization out;
  detail::split_into(n, budget, false, primes, out.unfactored);
  out.factors = detail::to_multiset(primes);
  std::sort(out.unfactored.begin(), out.unfactored.end());
  out.unfactored.erase(std::unique(out.unfactored.begin(), out.unfactored.end()), out.unfactored.end());
  return out;
}

inline Nat largest_prime_divisor(const Nat& n, std::uint64_t budget = kDefaultBudget) {
  if (n < 2) throw DomainError("largest_prime_divisor: n must be at least 2");
  return factorize(n, budget).back().prime;
}

/// Least e >= 1 with q^e = 1 (mod r), for prime r not dividing q.
inline Nat multiplicative_order(const Nat& q, const Nat& r, std::uint64_t budget = kDefaultBudget) {
  if (!is_prime(r)) throw DomainError("multiplicative_order: modulus " + r.get_str() + " is not prime");
  const Nat base = detail::mod(q, r);
  if (base == 0) throw DomainError("multiplicative_order: " + r.get_str() + " divides " + q.get_str());
  Nat order = r - 1;
  for (const auto& [p, e] : factorize(order, budget)) {
    for (unsigned i = 0; i < e; ++i) {
      Nat candidate = order / p;
      if (powm(base, candidate, r) != 1) break;
      order = std::move(candidate);
    }
  }
  return order;
}

/// Prime factorization of a machine-size positive integer by trial division.
inline std::vector<std::pair<std::uint64_t, unsigned>> small_factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("divisors: n must be positive");
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : small_factorize(n)) {
    const std::size_t count = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int mobius(std::uint64_t n) {
  if (n == 0) throw DomainError("mobius: n must be positive");
  int sign = 1;
  for (const auto& [p, e] : small_factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi: n must be positive");
  std::uint64_t phi = n;
  for (const auto& [p, e] : small_factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

inline std::uint64_t largest_prime_divisor(std::uint64_t n) {
  if (n < 2) throw DomainError("largest_prime_divisor: n must be at least 2");
  return small_factorize(n).back().first;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace suzree
