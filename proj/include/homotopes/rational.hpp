#pragma once

#include "homotopes/errors.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace homotopes {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(static_cast<long>(v)) {}
  Rational(unsigned v) : q_(v) {}
  Rational(unsigned long v) : q_(v) {}
  explicit Rational(const mpz_class &num) : q_(num) {}
  Rational(const mpz_class &num, const mpz_class &den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q" (whitespace around tokens tolerated).
  static Rational parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    auto is_int = [](const std::string &t) {
      std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    auto to_mpz = [](std::string t) {
      if (!t.empty() && t[0] == '+') t.erase(0, 1);
      return mpz_class(t, 10);
    };
    if (slash == std::string::npos) {
      if (!is_int(s)) throw ParseError("bad rational literal '" + s + "'");
      return Rational(to_mpz(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
      throw ParseError("bad rational literal '" + s + "'");
    mpz_class d = to_mpz(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(to_mpz(num), d);
  }

  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_one() const { return q_ == 1; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] mpz_class num() const { return q_.get_num(); }
  [[nodiscard]] mpz_class den() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class &raw() const { return q_; }

  [[nodiscard]] Rational inv() const {
    if (is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(1) / q_);
  }
  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  [[nodiscard]] double to_double() const { return q_.get_d(); }

  /// Integer power, negative exponents allowed for nonzero values.
  [[nodiscard]] Rational pow(long e) const {
    if (e < 0) return inv().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
  }

  /// Exact square root when this is the square of a rational.
  [[nodiscard]] bool is_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(q_.get_num_mpz_t()) &&
           mpz_perfect_square_p(q_.get_den_mpz_t());
  }
  [[nodiscard]] Rational sqrt() const {
    if (!is_square()) throw DomainError("not a rational square: " + str());
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q_.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q_.get_den_mpz_t());
    return Rational(n, d);
  }

  [[nodiscard]] std::string str() const { return q_.get_str(10); }

  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
  }

private:
  mpq_class q_{0};
};

inline Rational gcd_integers(const Rational &a, const Rational &b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  return Rational(g);
}

} // namespace homotopes

template <> struct std::hash<homotopes::Rational> {
  std::size_t operator()(const homotopes::Rational &r) const noexcept {
    std::size_t h1 = mpz_get_ui(r.raw().get_num_mpz_t());
    std::size_t h2 = mpz_get_ui(r.raw().get_den_mpz_t());
    return h1 * 1000003u ^ h2 ^ static_cast<std::size_t>(r.sign() + 1);
  }
};
