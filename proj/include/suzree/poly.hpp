#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace suzree {

/// Dense univariate polynomial over a commutative ring R, coefficients in
/// ascending degree. R must be constructible from an int (0 and 1 at least)
/// and provide +, -, * and ==. The zero polynomial has no coefficients.
template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(R c) { return Poly(std::vector<R>{std::move(c)}); }

  static Poly monomial(R c, std::size_t degree) {
    std::vector<R> v(degree + 1, R(0));
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }

  const std::vector<R>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }

  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }

  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == R(1); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = R(0) - c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    normalize();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == R(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Horner evaluation in any ring X that R converts into.
  template <class X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  /// p(-x).
  Poly reflect() const {
    Poly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = R(0) - r.c_[i];
    return r;
  }

  /// p(x^k), k >= 1.
  Poly inflate(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> out((c_.size() - 1) * k + 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
    return Poly(std::move(out));
  }

  /// Coefficient-wise ring change.
  template <class F>
  auto map(F&& f) const -> Poly<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Poly<S>(std::move(out));
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
  }

  std::vector<R> c_;
};

/// Quotient and remainder of a by a monic divisor b.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod_monic(const Poly<R>& a, const Poly<R>& b) {
  if (!b.is_monic()) throw std::domain_error("divmod_monic: divisor must be monic");
  if (a.degree() < b.degree()) return {Poly<R>{}, a};
  std::vector<R> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<R> quot(rem.size() - db, R(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const R q = rem[k + db];
    quot[k] = q;
    if (q == R(0)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - q * bc[j];
  }
  rem.resize(db);
  return {Poly<R>(std::move(quot)), Poly<R>(std::move(rem))};
}

}  // namespace suzree
