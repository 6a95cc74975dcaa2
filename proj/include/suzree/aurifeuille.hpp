#pragma once

// Torus-order polynomials Psi_n of the Suzuki-Ree groups, the factors
// f_m(x) = Phi_m(x/xi) Phi_m(x/conj(xi)) of Phi_nm(x^2), and the checks built on
// them: the gcd identity, the lower bound on |f_m|, and the verifier for
// primitive prime divisors of Psi_n(±sqrt(v^m)).
//
// Family constants:
//   SUZUKI  2B2(2^m)  v = 2  n = 4   xi a primitive 8th root of unity
//   REE_G2  2G2(3^m)  v = 3  n = 6   xi a primitive 12th root of unity
//   REE_F4  2F4(2^m)  v = 2  n = 12  xi a primitive 8th root, building block f_3m

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <type_traits>
#include <vector>

#include "suzree/arith.hpp"
#include "suzree/cyclotomic.hpp"
#include "suzree/poly.hpp"
#include "suzree/quadratic.hpp"

namespace suzree {

enum class Family { Suzuki, ReeG2, ReeF4 };
enum class Sign { Plus, Minus };

inline constexpr std::array<Family, 3> kAllFamilies = {Family::Suzuki, Family::ReeG2, Family::ReeF4};
inline constexpr std::array<Sign, 2> kBothSigns = {Sign::Plus, Sign::Minus};

template <Family F>
struct FamilyTraits;

template <>
struct FamilyTraits<Family::Suzuki> {
  static constexpr int v = 2, n = 4, root_order = 8, index_multiplier = 1, trace_orientation = -1;
};
template <>
struct FamilyTraits<Family::ReeG2> {
  static constexpr int v = 3, n = 6, root_order = 12, index_multiplier = 1, trace_orientation = -1;
};
template <>
struct FamilyTraits<Family::ReeF4> {
  static constexpr int v = 2, n = 12, root_order = 8, index_multiplier = 3, trace_orientation = 1;
};

/// Calls fn(std::integral_constant<Family, F>{}) for the runtime family f.
template <class Fn>
decltype(auto) with_family(Family f, Fn&& fn) {
  switch (f) {
    case Family::Suzuki:
      return fn(std::integral_constant<Family, Family::Suzuki>{});
    case Family::ReeG2:
      return fn(std::integral_constant<Family, Family::ReeG2>{});
    case Family::ReeF4:
      return fn(std::integral_constant<Family, Family::ReeF4>{});
  }
  throw std::logic_error("unknown family");
}

inline constexpr int field_base(Family f) { return f == Family::ReeG2 ? 3 : 2; }
inline constexpr int torus_index(Family f) {
  return f == Family::Suzuki ? 4 : f == Family::ReeG2 ? 6 : 12;
}

inline constexpr std::string_view family_name(Family f) {
  switch (f) {
    case Family::Suzuki:
      return "SUZUKI";
    case Family::ReeG2:
      return "REE_G2";
    case Family::ReeF4:
      return "REE_F4";
  }
  return "?";
}

inline constexpr std::string_view sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }
inline constexpr Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

template <Family F>
using QuadOf = QuadInt<FamilyTraits<F>::v>;
template <Family F>
using QuadPolyOf = Poly<QuadOf<F>>;
template <Family F>
using CycOf = CycInt<FamilyTraits<F>::root_order>;

/// xi = ζ^exponent for ζ = exp(2πi / order). Each family admits two choices up
/// to conjugation and sign: ζ, ζ³ for order 8 and ζ, ζ⁵ for order 12.
struct RootChoice {
  int order = 8;
  int exponent = 1;

  friend bool operator==(const RootChoice&, const RootChoice&) = default;
};

inline std::array<RootChoice, 2> root_choices(Family f) {
  if (f == Family::ReeG2) return {RootChoice{12, 1}, RootChoice{12, 5}};
  return {RootChoice{8, 1}, RootChoice{8, 3}};
}

inline std::string root_name(const RootChoice& xi) {
  return "zeta" + std::to_string(xi.order) + "^" + std::to_string(xi.exponent);
}

namespace detail {

template <Family F>
void check_root(const RootChoice& xi) {
  constexpr int order = FamilyTraits<F>::root_order;
  if (xi.order != order || gcd(static_cast<std::uint64_t>(xi.exponent), std::uint64_t{order}) != 1)
    throw DomainError("root choice " + root_name(xi) + " is not a primitive root for " +
                      std::string(family_name(F)));
}

template <Family F>
void check_coprime(std::uint64_t m) {
  if (m == 0 || gcd(m, std::uint64_t{FamilyTraits<F>::n}) != 1)
    throw DomainError("m = " + std::to_string(m) + " must be positive and coprime to " +
                      std::to_string(FamilyTraits<F>::n));
}

}  // namespace detail

/// Psi_4 = x² + √2 x + 1, Psi_6 = x² + √3 x + 1, Psi_12 = x⁴ + √2 x³ + x² + √2 x + 1.
template <Family F>
QuadPolyOf<F> psi_poly() {
  using Q = QuadOf<F>;
  const Q s = Q::sqrt_radicand();
  if constexpr (F == Family::ReeF4) {
    return QuadPolyOf<F>({Q(1), s, Q(1), s, Q(1)});
  } else {
    return QuadPolyOf<F>({Q(1), s, Q(1)});
  }
}

/// Psi_n(ε sqrt(v^e)) for odd e, exactly. Always >= 1.
inline Nat psi_eval(Family f, Sign eps, std::uint64_t e) {
  if (e == 0 || e % 2 == 0) throw DomainError("psi_eval: exponent must be odd and positive");
  return with_family(f, [&](auto tag) -> Nat {
    constexpr Family F = decltype(tag)::value;
    constexpr int V = FamilyTraits<F>::v;
    const QuadInt<V> x = signed_sqrt_power<V>(eps == Sign::Minus, e);
    const QuadInt<V> value = psi_poly<F>().evaluate(x);
    if (!value.is_integer()) throw std::logic_error("psi_eval: nonzero irrational component");
    if (value.rational() < 1) throw std::logic_error("psi_eval: value below 1");
    return value.rational();
  });
}

struct PsiPair {
  Nat plus, minus;
  bool product_ok = false;  // plus * minus == Phi_n(v^e)
  bool coprime_ok = false;  // gcd(plus, minus) == 1
};

inline PsiPair psi_pair_check(Family f, std::uint64_t e) {
  PsiPair out;
  out.plus = psi_eval(f, Sign::Plus, e);
  out.minus = psi_eval(f, Sign::Minus, e);
  out.product_ok = out.plus * out.minus == eval_cyclotomic(torus_index(f), pow(Nat(field_base(f)), e));
  out.coprime_ok = gcd(out.plus, out.minus) == 1;
  return out;
}

/// The ε with prod_{d | m} f_d(x) = Psi_n(ε x^m), read off the trace
/// xi^m + conj(xi)^m = -ε sqrt(v) (n = 4, 6) or +ε sqrt(2) (n = 12, where the
/// building block Phi_3 contributes + xi^m x^m).
template <Family F>
Sign induced_sign(std::uint64_t m, const RootChoice& xi) {
  detail::check_root<F>(xi);
  using C = CycOf<F>;
  const long k = static_cast<long>(m % FamilyTraits<F>::root_order) * xi.exponent;
  const auto trace = (C::zeta_pow(k) + C::zeta_pow(-k)).project();
  if (trace.rational() != 0 || abs(trace.irrational()) != 1)
    throw DomainError("xi^m + conj(xi)^m is not ±sqrt(v); m must be coprime to 2n");
  return trace.irrational() * FamilyTraits<F>::trace_orientation > 0 ? Sign::Plus : Sign::Minus;
}

inline Sign induced_sign(Family f, std::uint64_t m, const RootChoice& xi) {
  return with_family(f, [&](auto tag) { return induced_sign<decltype(tag)::value>(m, xi); });
}

/// f(x) = Phi_d(x/xi) Phi_d(x/conj xi) with d = m (SUZUKI, REE_G2) or d = 3m
/// (REE_F4), as a monic polynomial over Z[sqrt v] of degree 2 phi(d).
template <Family F>
QuadPolyOf<F> build_f(std::uint64_t m, const RootChoice& xi) {
  detail::check_coprime<F>(m);
  detail::check_root<F>(xi);
  using C = CycOf<F>;
  const std::uint64_t index = m * FamilyTraits<F>::index_multiplier;
  const IntPoly phi = cyclotomic_poly(index);
  const auto degree = static_cast<std::size_t>(phi.degree());

  // xi^deg * Phi_d(x/xi) = sum_k c_k xi^(deg-k) x^k; the unit prefactors cancel
  // in the product because xi * conj(xi) = 1.
  std::vector<C> lhs(degree + 1), rhs(degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) {
    const long shift = static_cast<long>(degree - k) * xi.exponent;
    const C c(phi.coeff(k));
    lhs[k] = c * C::zeta_pow(shift);
    rhs[k] = c * C::zeta_pow(-shift);
  }
  const Poly<C> product = Poly<C>(std::move(lhs)) * Poly<C>(std::move(rhs));
  return product.map([](const C& c) { return c.project(); });
}

/// The integer f(sqrt(v^s)) for odd s.
template <int V>
Int eval_f(const Poly<QuadInt<V>>& p, std::uint64_t s) {
  const QuadInt<V> value = p.evaluate(signed_sqrt_power<V>(false, s));
  if (!value.is_integer()) throw std::logic_error("eval_f: nonzero irrational component");
  return value.rational();
}

/// gcd(Phi_nm(v^s), Psi_n(ε sqrt(v^(sm)))) by the Euclidean algorithm.
inline Nat gcd_phi_psi(Family f, std::uint64_t m, std::uint64_t s, Sign eps) {
  with_family(f, [&](auto tag) { detail::check_coprime<decltype(tag)::value>(m); });
  if (s % 2 == 0) throw DomainError("gcd_phi_psi: s must be odd");
  const Nat q = pow(Nat(field_base(f)), s);
  return gcd(eval_cyclotomic(torus_index(f) * m, q), psi_eval(f, eps, s * m));
}

struct Lemma1Entry {
  RootChoice root;
  Sign induced;  // ε matched to this root
  Nat gcd;       // gcd_phi_psi(f, m, s, induced)
  Nat f_abs;     // |f(sqrt(v^s))|
  bool equal = false;
};

struct Lemma1Result {
  bool holds = false;  // every ε is matched by a root with equal values
  std::vector<Lemma1Entry> entries;
};

inline Lemma1Result lemma1_evaluate(Family f, std::uint64_t m, std::uint64_t s) {
  return with_family(f, [&](auto tag) {
    constexpr Family F = decltype(tag)::value;
    Lemma1Result out;
    bool seen_plus = false, seen_minus = false;
    for (const RootChoice& xi : root_choices(F)) {
      Lemma1Entry e;
      e.root = xi;
      e.induced = induced_sign<F>(m, xi);
      e.gcd = gcd_phi_psi(F, m, s, e.induced);
      e.f_abs = abs(eval_f(build_f<F>(m, xi), s));
      e.equal = e.gcd == e.f_abs;
      if (e.equal) (e.induced == Sign::Plus ? seen_plus : seen_minus) = true;
      out.entries.push_back(std::move(e));
    }
    out.holds = seen_plus && seen_minus;
    return out;
  });
}

inline bool lemma1_check(Family f, std::uint64_t m, std::uint64_t s) { return lemma1_evaluate(f, m, s).holds; }

enum class Lemma2Status { Pass, NotApplicable, Fail };

inline constexpr std::string_view lemma2_status_name(Lemma2Status s) {
  switch (s) {
    case Lemma2Status::Pass:
      return "PASS";
    case Lemma2Status::NotApplicable:
      return "NOT_APPLICABLE";
    case Lemma2Status::Fail:
      return "FAIL";
  }
  return "?";
}

struct Lemma2Result {
  Lemma2Status status = Lemma2Status::NotApplicable;
  std::uint64_t largest_prime = 0;  // 0 when m = 1
  std::vector<Nat> values;          // |f_m(sqrt v)| for each root choice
};

/// |f_m(sqrt v)| > r for r the largest prime divisor of m, whenever
/// x = sqrt 2 and m > 5, or x = sqrt 3 and m > 3. Only for n = 4, 6.
inline Lemma2Result lemma2_evaluate(Family f, std::uint64_t m) {
  if (f == Family::ReeF4) throw DomainError("lemma2: only SUZUKI and REE_G2 qualify");
  return with_family(f, [&](auto tag) {
    constexpr Family F = decltype(tag)::value;
    detail::check_coprime<F>(m);
    Lemma2Result out;
    for (const RootChoice& xi : root_choices(F)) out.values.push_back(abs(eval_f(build_f<F>(m, xi), 1)));
    const bool applicable = FamilyTraits<F>::v == 2 ? m > 5 : m > 3;
    if (m >= 2) out.largest_prime = largest_prime_divisor(m);
    if (!applicable) return out;
    out.status = Lemma2Status::Pass;
    for (const Nat& value : out.values) {
      if (value <= out.largest_prime) out.status = Lemma2Status::Fail;
    }
    return out;
  });
}

inline Lemma2Status lemma2_check(Family f, std::uint64_t m) { return lemma2_evaluate(f, m).status; }

struct Verdict {
  bool holds = false;
  Nat gcd;                                 // gcd(k_nm(v), Psi_n(ε sqrt(v^m)))
  std::optional<Nat> witness;              // smallest prime of gcd, order nm
  bool is_known_exception = false;         // SUZUKI with m in {3, 5}
};

/// Decides whether Psi_n(ε sqrt(v^m)) is divisible by a primitive prime
/// divisor of v^nm - 1, via gcd(k_nm(v), Psi_n(ε sqrt(v^m))) > 1.
/// Factoring happens only when want_witness.
inline Verdict verify_theorem2(Family f, std::uint64_t m, Sign eps, bool want_witness = false,
                               std::uint64_t budget = kDefaultBudget) {
  if (m <= 1 || m % 2 == 0) throw DomainError("verify_theorem2: m must be odd and greater than 1");
  const std::uint64_t nm = torus_index(f) * m;
  const Nat v(field_base(f));
  Verdict out;
  out.gcd = gcd(primitive_part(nm, v), psi_eval(f, eps, m));
  out.holds = out.gcd > 1;
  out.is_known_exception = f == Family::Suzuki && (m == 3 || m == 5);
  if (want_witness && out.holds) {
    for (const auto& pp : factorize(out.gcd, budget)) {
      if (multiplicative_order(v, pp.prime, budget) == nm) {
        out.witness = pp.prime;
        break;
      }
    }
    if (!out.witness) throw std::logic_error("verify_theorem2: gcd has no prime of order nm");
  }
  return out;
}

/// Phi_nm(x²) == f(x) f(-x) over Z[sqrt v], compared coefficient-wise
/// (nm replaced by 12m = 4·3m for REE_F4).
template <Family F>
bool factor_identity_holds(std::uint64_t m, const RootChoice& xi) {
  using Q = QuadOf<F>;
  const auto f = build_f<F>(m, xi);
  const auto lhs = cyclotomic_poly(FamilyTraits<F>::n * m).inflate(2).map([](const Int& c) { return Q(c); });
  return lhs == f * f.reflect();
}

/// prod_{d | m} f_d(x) == Psi_n(ε x^m) with ε = induced_sign(m, xi)
/// (f_3d and Psi_12 for REE_F4).
template <Family F>
bool divisor_product_identity_holds(std::uint64_t m, const RootChoice& xi) {
  using Q = QuadOf<F>;
  QuadPolyOf<F> product = QuadPolyOf<F>::constant(Q(1));
  for (std::uint64_t d : divisors(m)) product *= build_f<F>(d, xi);
  const Q inner_sign = induced_sign<F>(m, xi) == Sign::Plus ? Q(1) : Q(-1);
  // Psi_n(ε x^m): coefficient c_k moves to degree k·m and picks up ε^k.
  const QuadPolyOf<F> psi_n = psi_poly<F>();
  const auto& psi = psi_n.coefficients();
  std::vector<Q> rhs(psi.size() == 0 ? 0 : (psi.size() - 1) * m + 1, Q(0));
  Q sign_power(1);
  for (std::size_t k = 0; k < psi.size(); ++k) {
    rhs[k * m] = psi[k] * sign_power;
    sign_power = sign_power * inner_sign;
  }
  return product == QuadPolyOf<F>(std::move(rhs));
}

}  // namespace suzree
