#pragma once

// Exact arithmetic in Z[sqrt(v)] and in the cyclotomic rings Z[zeta_8] and
// Z[zeta_12], plus the projection from the real subring of the latter onto
// Z[sqrt(2)] resp. Z[sqrt(3)].

#include <array>
#include <ostream>
#include <string>

#include "suzree/arith.hpp"
#include "suzree/errors.hpp"

namespace suzree {

/// a + b*sqrt(V).
template <int V>
class QuadInt {
  static_assert(V == 2 || V == 3, "only Z[sqrt 2] and Z[sqrt 3] are used");

 public:
  static constexpr int radicand = V;

  QuadInt(Int a = 0, Int b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadInt sqrt_radicand() { return QuadInt(0, 1); }

  const Int& rational() const noexcept { return a_; }
  const Int& irrational() const noexcept { return b_; }
  bool is_integer() const { return b_ == 0; }

  QuadInt conj() const { return QuadInt(a_, -b_); }
  Int norm() const { return a_ * a_ - V * b_ * b_; }

  QuadInt operator-() const { return QuadInt(-a_, -b_); }
  friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return QuadInt(x.a_ + y.a_, x.b_ + y.b_); }
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return QuadInt(x.a_ - y.a_, x.b_ - y.b_); }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    return QuadInt(x.a_ * y.a_ + V * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string s = a_ == 0 ? std::string() : a_.get_str() + (b_ > 0 ? "+" : "");
    return s + b_.get_str() + "*sqrt" + std::to_string(V);
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << x.to_string(); }

 private:
  Int a_, b_;
};

/// ε·sqrt(V^e) for odd e, i.e. ε·V^((e-1)/2)·sqrt(V).
template <int V>
QuadInt<V> signed_sqrt_power(bool negative, std::uint64_t e) {
  if (e % 2 == 0) throw DomainError("signed_sqrt_power: exponent must be odd");
  Int b = pow(Nat(V), (e - 1) / 2);
  return QuadInt<V>(0, negative ? Int(-b) : b);
}

/// Element c0 + c1 ζ + c2 ζ² + c3 ζ³ of Z[ζ], ζ = exp(2πi/Order), reduced
/// modulo Φ_8 = x⁴ + 1 or Φ_12 = x⁴ - x² + 1.
template <int Order>
class CycInt {
  static_assert(Order == 8 || Order == 12, "only Z[zeta_8] and Z[zeta_12] are used");

 public:
  static constexpr int radicand = Order == 8 ? 2 : 3;
  using Real = QuadInt<radicand>;

  CycInt(Int c0 = 0) : c_{std::move(c0), 0, 0, 0} {}
  explicit CycInt(std::array<Int, 4> c) : c_(std::move(c)) {}

  static CycInt zeta() { return CycInt({0, 1, 0, 0}); }

  /// ζ^k for any integer k.
  static CycInt zeta_pow(long k) {
    long e = ((k % Order) + Order) % Order;
    CycInt out(1);
    const CycInt z = zeta();
    for (long i = 0; i < e; ++i) out = out * z;
    return out;
  }

  const std::array<Int, 4>& coeffs() const noexcept { return c_; }

  /// Complex conjugation, ζ -> ζ^-1.
  CycInt conj() const {
    CycInt out;
    for (int i = 0; i < 4; ++i) {
      if (c_[i] != 0) out = out + CycInt(c_[i]) * zeta_pow(-i);
    }
    return out;
  }

  /// sqrt(radicand) = ζ + ζ^-1.
  static CycInt sqrt_radicand() { return zeta() + zeta_pow(-1); }

  static CycInt embed(const Real& x) { return CycInt(x.rational()) + CycInt(x.irrational()) * sqrt_radicand(); }

  /// Writes a real element as a + b sqrt(radicand); throws ProjectionError otherwise.
  Real project() const {
    const std::array<Int, 4>& s = sqrt_radicand().c_;  // (0, e1, 0, -1) for both orders
    const Int b = c_[3] * s[3];
    if (c_[2] != 0 || c_[1] != b * s[1]) throw ProjectionError("element of Z[zeta] is not in Z[sqrt v]");
    return Real(c_[0], b);
  }

  friend CycInt operator+(const CycInt& x, const CycInt& y) {
    return CycInt({x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3]});
  }
  friend CycInt operator-(const CycInt& x, const CycInt& y) {
    return CycInt({x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2], x.c_[3] - y.c_[3]});
  }
  CycInt operator-() const { return CycInt() - *this; }

  friend CycInt operator*(const CycInt& x, const CycInt& y) {
    std::array<Int, 7> p;
    for (auto& v : p) v = 0;
    for (int i = 0; i < 4; ++i) {
      if (x.c_[i] == 0) continue;
      for (int j = 0; j < 4; ++j) p[i + j] += x.c_[i] * y.c_[j];
    }
    for (int d = 6; d >= 4; --d) {
      if (p[d] == 0) continue;
      const Int t = p[d];
      p[d] = 0;
      for (int i = 0; i < 4; ++i) {
        if (kTail[i] != 0) p[d - 4 + i] += t * kTail[i];
      }
    }
    return CycInt({p[0], p[1], p[2], p[3]});
  }

  friend bool operator==(const CycInt& x, const CycInt& y) { return x.c_ == y.c_; }

 private:
  // ζ⁴ expressed in the basis 1, ζ, ζ², ζ³.
  static constexpr std::array<int, 4> kTail = Order == 8 ? std::array<int, 4>{-1, 0, 0, 0}
                                                         : std::array<int, 4>{-1, 0, 1, 0};
  std::array<Int, 4> c_;
};

}  // namespace suzree
