#pragma once

#include "homotopes/errors.hpp"
#include "homotopes/rational.hpp"

#include <string>

namespace homotopes {

/// Element a + b*sqrt(D) of Q(sqrt(D)), D a non-square rational.
/// Elements with b = 0 are compatible with any radicand; mixing two
/// different radicands with nonzero irrational parts is an error.
class QuadraticNumber {
public:
  QuadraticNumber() = default;
  QuadraticNumber(int v) : a_(v) {}
  QuadraticNumber(const Rational &a) : a_(a) {}
  QuadraticNumber(const Rational &a, const Rational &b, const Rational &radicand)
      : a_(a), b_(b), d_(radicand) {
    if (!b_.is_zero() && d_.is_square())
      throw DomainError("radicand " + d_.str() + " is a rational square");
    if (b_.is_zero()) d_ = Rational(0);
  }

  [[nodiscard]] const Rational &rational_part() const { return a_; }
  [[nodiscard]] const Rational &irrational_part() const { return b_; }
  [[nodiscard]] const Rational &radicand() const { return d_; }
  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  [[nodiscard]] QuadraticNumber conj() const { return {a_, -b_, d_}; }
  [[nodiscard]] Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
  [[nodiscard]] QuadraticNumber inv() const {
    if (is_zero()) throw DomainError("division by zero");
    Rational n = norm();
    return {a_ / n, -b_ / n, d_};
  }

  [[nodiscard]] std::string str() const {
    if (b_.is_zero()) return a_.str();
    return a_.str() + " + " + b_.str() + "*sqrt(" + d_.str() + ")";
  }

  friend QuadraticNumber operator+(const QuadraticNumber &x, const QuadraticNumber &y) {
    return {x.a_ + y.a_, x.b_ + y.b_, common(x, y)};
  }
  friend QuadraticNumber operator-(const QuadraticNumber &x) { return {-x.a_, -x.b_, x.d_}; }
  friend QuadraticNumber operator-(const QuadraticNumber &x, const QuadraticNumber &y) {
    return x + (-y);
  }
  friend QuadraticNumber operator*(const QuadraticNumber &x, const QuadraticNumber &y) {
    Rational d = common(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
  }
  friend QuadraticNumber operator/(const QuadraticNumber &x, const QuadraticNumber &y) {
    return x * y.inv();
  }
  friend bool operator==(const QuadraticNumber &x, const QuadraticNumber &y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }

private:
  static Rational common(const QuadraticNumber &x, const QuadraticNumber &y) {
    if (x.b_.is_zero()) return y.d_;
    if (y.b_.is_zero()) return x.d_;
    if (x.d_ != y.d_) throw DomainError("mixing different quadratic fields");
    return x.d_;
  }

  Rational a_{0}, b_{0}, d_{0};
};

} // namespace homotopes
