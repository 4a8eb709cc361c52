#pragma once

#include "homotopes/errors.hpp"
#include "homotopes/literal.hpp"
#include "homotopes/rational.hpp"
#include "homotopes/upoly.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

namespace homotopes {

namespace detail {

/// Per-conductor data: the cyclotomic polynomial and the reduced power
/// basis image of every zeta^k, 0 <= k < m.
struct CycloTable {
  unsigned m = 1;
  std::size_t phi = 1;
  UPoly<Rational> poly;
  std::vector<std::vector<Rational>> powers;
};

inline UPoly<Rational> cyclotomic_polynomial(unsigned m);

inline std::shared_ptr<const CycloTable> cyclo_table(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CycloTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  auto t = std::make_shared<CycloTable>();
  t->m = m;
  t->poly = cyclotomic_polynomial(m);
  t->phi = static_cast<std::size_t>(t->poly.degree());
  t->powers.resize(m);
  for (unsigned k = 0; k < m; ++k) {
    auto r = UPoly<Rational>::monomial(Rational(1), k) % t->poly;
    std::vector<Rational> v(t->phi, Rational(0));
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) v[i] = r.coeffs()[i];
    t->powers[k] = std::move(v);
  }
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(t)).first->second;
}

inline UPoly<Rational> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw DomainError("conductor must be positive");
  // x^m - 1 divided by Phi_d for every proper divisor d.
  auto p = UPoly<Rational>::monomial(Rational(1), m) - UPoly<Rational>(Rational(1));
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) p = p / cyclo_table(d)->poly;
  return p;
}

} // namespace detail

/// Element of the cyclotomic field Q(zeta_m) in the power basis
/// 1, zeta, ..., zeta^(phi(m)-1), reduced modulo the m-th cyclotomic
/// polynomial. Operands with different conductors are lifted to the lcm.
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(0) {}
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(const Rational &r) : m_(1), table_(detail::cyclo_table(1)) {
    if (!r.is_zero()) c_.push_back(r);
  }

  /// zeta_m^k.
  static Cyclotomic zeta(unsigned m, long k = 1) {
    Cyclotomic z(0);
    z.set_conductor(m);
    long mm = static_cast<long>(m);
    z.c_ = z.table_->powers[static_cast<std::size_t>(((k % mm) + mm) % mm)];
    z.trim();
    return z;
  }

  /// Builds from power-basis coordinates, reducing any high powers.
  static Cyclotomic from_powers(unsigned m, const std::vector<Rational> &coeffs) {
    Cyclotomic z(0);
    z.set_conductor(m);
    std::vector<Rational> acc(z.table_->phi, Rational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      const auto &pw = z.table_->powers[k % m];
      for (std::size_t i = 0; i < acc.size(); ++i)
        if (!pw[i].is_zero()) acc[i] += coeffs[k] * pw[i];
    }
    z.c_ = std::move(acc);
    z.trim();
    return z;
  }

  /// Parses sums "c*z^k" (any integer k) in Q(zeta_m).
  static Cyclotomic parse(std::string_view text, unsigned m) {
    std::vector<Rational> coeffs(m, Rational(0));
    long mm = static_cast<long>(m);
    for (const auto &t : literal::parse_sum(text)) {
      long e = 0;
      for (const auto &[name, pw] : t.powers) {
        if (name != "z") throw ParseError("unknown symbol '" + name + "' in cyclotomic literal");
        e += pw;
      }
      coeffs[static_cast<std::size_t>(((e % mm) + mm) % mm)] += t.coeff;
    }
    return from_powers(m, coeffs);
  }

  [[nodiscard]] unsigned conductor() const { return m_; }
  [[nodiscard]] std::size_t degree() const { return table_->phi; }
  /// Power-basis coordinate of zeta^k, 0 <= k < phi(m).
  [[nodiscard]] Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_rational() const { return c_.size() <= 1; }
  [[nodiscard]] Rational rational_value() const {
    if (!is_rational()) throw DomainError("cyclotomic value is not rational: " + str());
    return coeff(0);
  }

  /// Re-expresses this element in Q(zeta_L); L must be a multiple of m.
  [[nodiscard]] Cyclotomic lift(unsigned L) const {
    if (L == m_) return *this;
    if (L % m_ != 0) throw DomainError("cannot lift conductor " + std::to_string(m_) +
                                       " to " + std::to_string(L));
    std::vector<Rational> coeffs(L, Rational(0));
    unsigned step = L / m_;
    for (std::size_t k = 0; k < c_.size(); ++k) coeffs[k * step] = c_[k];
    return from_powers(L, coeffs);
  }

  /// Complex conjugation zeta -> zeta^-1.
  [[nodiscard]] Cyclotomic conj() const {
    std::vector<Rational> coeffs(m_, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) coeffs[(m_ - k % m_) % m_] = c_[k];
    return from_powers(m_, coeffs);
  }

  [[nodiscard]] Cyclotomic inv() const {
    if (is_zero()) throw DomainError("division by zero");
    auto [g, s, t] = xgcd(UPoly<Rational>(c_), table_->poly);
    (void)t;
    if (g.degree() != 0) throw DomainError("non-invertible cyclotomic element");
    Cyclotomic r(0);
    r.set_conductor(m_);
    r.c_ = (s % table_->poly).coeffs();
    r.trim();
    return r;
  }

  [[nodiscard]] std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    for (std::size_t k = 0; k < c_.size(); ++k)
      z += c_[k].to_double() *
           std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / m_);
    return z;
  }

  /// Literal in ascending powers of z, e.g. "1 + z - 1/2*z^2".
  [[nodiscard]] std::string str() const {
    std::vector<std::pair<Rational, std::string>> terms;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
      terms.emplace_back(c_[k], mono);
    }
    return literal::join_terms(terms);
  }

  friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.m_ != b.m_) return binary_lifted(a, b, [](auto &x, auto &y) { return x + y; });
    Cyclotomic r = a;
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), Rational(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic &a) {
    Cyclotomic r = a;
    for (auto &x : r.c_) x = -x;
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b) { return a + (-b); }
  friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.m_ != b.m_) return binary_lifted(a, b, [](auto &x, auto &y) { return x * y; });
    if (a.is_zero() || b.is_zero()) return Cyclotomic(0);
    if (a.c_.size() == 1 && b.c_.size() == 1) {
      Cyclotomic r = a;
      r.c_[0] *= b.c_[0];
      return r;
    }
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return from_powers(a.m_, prod);
  }
  friend Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b) { return a * b.inv(); }
  Cyclotomic &operator+=(const Cyclotomic &o) { return *this = *this + o; }
  Cyclotomic &operator-=(const Cyclotomic &o) { return *this = *this - o; }
  Cyclotomic &operator*=(const Cyclotomic &o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    unsigned L = std::lcm(a.m_, b.m_);
    return a.lift(L).c_ == b.lift(L).c_;
  }

private:
  void set_conductor(unsigned m) {
    m_ = m;
    table_ = detail::cyclo_table(m);
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  template <typename Op>
  static Cyclotomic binary_lifted(const Cyclotomic &a, const Cyclotomic &b, Op op) {
    unsigned L = std::lcm(a.m_, b.m_);
    Cyclotomic x = a.lift(L), y = b.lift(L);
    return op(x, y);
  }

  unsigned m_ = 1;
  std::shared_ptr<const detail::CycloTable> table_;
  std::vector<Rational> c_;
};

inline std::ostream &operator<<(std::ostream &os, const Cyclotomic &c) { return os << c.str(); }

} // namespace homotopes
