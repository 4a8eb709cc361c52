#pragma once

#include "homotopes/concepts.hpp"
#include "homotopes/errors.hpp"

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

namespace homotopes {

/// Dense univariate polynomial over a field, coefficients in ascending
/// degree. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
template <Field F> class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(const F &constant) {
    if (!constant.is_zero()) c_.push_back(constant);
  }

  static UPoly monomial(const F &c, std::size_t degree) {
    std::vector<F> v(degree + 1, F(0));
    v[degree] = c;
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(F(1), 1); }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] const F &lead() const { return c_.back(); }
  [[nodiscard]] F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  [[nodiscard]] const std::vector<F> &coeffs() const { return c_; }

  /// Number of leading zero coefficients at the low end (x-adic valuation).
  [[nodiscard]] std::size_t valuation() const {
    std::size_t v = 0;
    while (v < c_.size() && c_[v].is_zero()) ++v;
    return v;
  }

  [[nodiscard]] UPoly monic() const {
    if (is_zero()) return *this;
    F inv = lead().inv();
    std::vector<F> v = c_;
    for (auto &a : v) a = a * inv;
    return UPoly(std::move(v));
  }

  /// Drops a factor x^valuation.
  [[nodiscard]] UPoly strip_x() const {
    std::size_t v = valuation();
    return UPoly(std::vector<F>(c_.begin() + static_cast<long>(v), c_.end()));
  }

  template <typename T> [[nodiscard]] T eval(const T &at) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + T(c_[i]);
    return acc;
  }

  friend UPoly operator+(const UPoly &a, const UPoly &b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly &a) {
    std::vector<F> v = a.c_;
    for (auto &x : v) x = -x;
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly &a, const UPoly &b) { return a + (-b); }
  friend UPoly operator*(const UPoly &a, const UPoly &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  friend bool operator==(const UPoly &a, const UPoly &b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<F> r = a.c_;
    std::vector<F> q(a.c_.size() - b.c_.size() + 1, F(0));
    F inv = b.lead().inv();
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
      const F &top = r[static_cast<std::size_t>(k) + b.c_.size() - 1];
      if (top.is_zero()) continue;
      F f = top * inv;
      q[static_cast<std::size_t>(k)] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[static_cast<std::size_t>(k) + j] = r[static_cast<std::size_t>(k) + j] - f * b.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }
  friend UPoly operator%(const UPoly &a, const UPoly &b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly &a, const UPoly &b) { return divmod(a, b).first; }

  /// Monic gcd (zero when both inputs are zero).
  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Returns (g, s, t) with s*a + t*b = g, g monic.
  friend std::tuple<UPoly, UPoly, UPoly> xgcd(const UPoly &a, const UPoly &b) {
    UPoly r0 = a, r1 = b, s0(F(1)), s1, t0, t1(F(1));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
      s0 = std::move(s1); s1 = std::move(s2);
      t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = r0.lead().inv();
    return {r0 * UPoly(inv), s0 * UPoly(inv), t0 * UPoly(inv)};
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

} // namespace homotopes
