#pragma once

// Cyclotomic polynomials and values, primitive parts k_m(q) and primitive
// prime divisors.

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "suzree/arith.hpp"
#include "suzree/poly.hpp"

namespace suzree {

using IntPoly = Poly<Int>;

namespace detail {

inline IntPoly build_cyclotomic(std::uint64_t n, std::map<std::uint64_t, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  IntPoly quotient = IntPoly::monomial(Int(1), n) - IntPoly::constant(Int(1));
  for (std::uint64_t d : divisors(n)) {
    if (d == n) break;
    auto [q, r] = divmod_monic(quotient, build_cyclotomic(d, memo));
    if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    quotient = std::move(q);
  }
  memo.emplace(n, quotient);
  return quotient;
}

}  // namespace detail

/// Phi_n as a dense integer polynomial. Results are memoized process-wide.
inline IntPoly cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic_poly: n must be positive");
  static std::mutex mutex;
  static std::map<std::uint64_t, IntPoly> memo;
  std::lock_guard lock(mutex);
  return detail::build_cyclotomic(n, memo);
}

/// Phi_n(q) by the Moebius product over d | n of (q^(n/d) - 1)^mu(d).
inline Nat eval_cyclotomic(std::uint64_t n, const Nat& q) {
  if (n == 0) throw DomainError("eval_cyclotomic: n must be positive");
  if (q < 2) throw DomainError("eval_cyclotomic: q must be at least 2");
  Nat numerator = 1, denominator = 1;
  for (std::uint64_t d : divisors(n)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    Nat term = pow(q, n / d) - 1;
    (mu > 0 ? numerator : denominator) *= term;
  }
  Nat out;
  mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return out;
}

/// k_m(q): the largest divisor of q^m - 1 coprime to every q^i - 1 with i < m.
/// Computed as Phi_m(q) / (Phi_m(q), r) for r the largest prime divisor of m.
inline Nat primitive_part(std::uint64_t m, const Nat& q) {
  if (m < 3) throw DomainError("primitive_part: m must be at least 3");
  if (q < 2) throw DomainError("primitive_part: q must be at least 2");
  Nat phi = eval_cyclotomic(m, q);
  const unsigned long r = largest_prime_divisor(m);
  if (mpz_divisible_ui_p(phi.get_mpz_t(), r)) mpz_divexact_ui(phi.get_mpz_t(), phi.get_mpz_t(), r);
  return phi;
}

inline bool is_power_of_two(const Nat& x) { return sgn(x) > 0 && mpz_popcount(x.get_mpz_t()) == 1; }

/// Bang-Zsigmondy: q^m - 1 has a primitive prime divisor unless
/// m = 2 and q + 1 is a power of two, or (m, q) = (6, 2).
inline bool zsigmondy_exists(std::uint64_t m, const Nat& q) {
  if (m < 2) throw DomainError("zsigmondy_exists: m must be at least 2");
  if (q < 2) throw DomainError("zsigmondy_exists: q must be at least 2");
  if (m == 2 && is_power_of_two(q + 1)) return false;
  if (m == 6 && q == 2) return false;
  return true;
}

/// Prime support of k_m(q), ascending.
inline std::vector<Nat> primitive_prime_divisors(std::uint64_t m, const Nat& q,
                                                 std::uint64_t budget = kDefaultBudget) {
  std::vector<Nat> out;
  const Nat k = primitive_part(m, q);
  if (k == 1) return out;
  for (auto& pp : factorize(k, budget)) out.push_back(std::move(pp.prime));
  return out;
}

/// True iff the multiplicative order of q modulo the prime r equals m.
inline bool is_ppd(const Nat& r, std::uint64_t m, const Nat& q, std::uint64_t budget = kDefaultBudget) {
  if (m < 2) throw DomainError("is_ppd: m must be at least 2");
  return multiplicative_order(q, r, budget) == m;
}

}  // namespace suzree
