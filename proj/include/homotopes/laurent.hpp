#pragma once

#include "homotopes/concepts.hpp"
#include "homotopes/errors.hpp"
#include "homotopes/literal.hpp"
#include "homotopes/rational.hpp"
#include "homotopes/upoly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace homotopes {

/// Multivariate Laurent polynomial with coefficients in R. Variables are
/// kept sorted and only variables that actually occur are listed, so two
/// equal polynomials have identical representations.
template <Ring R> class LaurentPoly {
public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, R>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(R(c)) {}
  LaurentPoly(const R &c) {
    if (!c.is_zero()) terms_.emplace(Exponent{}, c);
  }

  static LaurentPoly variable(const std::string &name, int power = 1) {
    return monomial(R(1), {{name, power}});
  }
  static LaurentPoly monomial(const R &c, const std::map<std::string, int> &powers) {
    LaurentPoly p;
    if (c.is_zero()) return p;
    Exponent e;
    for (const auto &[v, k] : powers) {
      p.vars_.push_back(v);
      e.push_back(k);
    }
    p.terms_.emplace(std::move(e), c);
    p.normalize();
    return p;
  }

  /// Parses literals such as "1 - s_1_2^2 + 3/2*x*y^-1".
  static LaurentPoly parse(std::string_view text)
    requires std::is_same_v<R, Rational>
  {
    LaurentPoly acc;
    for (const auto &t : literal::parse_sum(text)) {
      std::map<std::string, int> pw;
      for (const auto &[name, k] : t.powers) pw[name] += static_cast<int>(k);
      acc = acc + monomial(t.coeff, pw);
    }
    return acc;
  }

  [[nodiscard]] const std::vector<std::string> &variables() const { return vars_; }
  [[nodiscard]] const TermMap &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const { return vars_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  [[nodiscard]] R constant_value() const {
    if (!is_constant()) throw DomainError("Laurent polynomial is not constant: " + str());
    return terms_.empty() ? R(0) : terms_.begin()->second;
  }
  /// Coefficient of the monomial with the given powers (absent variables = 0).
  [[nodiscard]] R coefficient(const std::map<std::string, int> &powers) const {
    for (const auto &[v, k] : powers)
      if (k != 0 && !std::binary_search(vars_.begin(), vars_.end(), v)) return R(0);
    Exponent e(vars_.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (auto it = powers.find(vars_[i]); it != powers.end()) e[i] = it->second;
    auto it = terms_.find(e);
    return it == terms_.end() ? R(0) : it->second;
  }

  /// Units of a Laurent ring over a field are the nonzero monomials.
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }

  [[nodiscard]] LaurentPoly pow(int e) const {
    if (e < 0) {
      if (!is_monomial()) throw DomainError("negative power of a non-unit: " + str());
      return monomial_inverse().pow(-e);
    }
    LaurentPoly acc(R(1)), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  [[nodiscard]] LaurentPoly monomial_inverse() const
    requires Field<R>
  {
    if (!is_monomial()) throw DomainError("not a unit: " + str());
    LaurentPoly r;
    r.vars_ = vars_;
    Exponent e = terms_.begin()->first;
    for (auto &k : e) k = -k;
    r.terms_.emplace(std::move(e), terms_.begin()->second.inv());
    return r;
  }

  /// Substitutes values for all variables.
  template <typename T>
  [[nodiscard]] T eval(const std::map<std::string, T> &point) const {
    std::vector<T> vals, invs;
    for (const auto &v : vars_) {
      auto it = point.find(v);
      if (it == point.end()) throw DomainError("no value assigned to variable '" + v + "'");
      if (it->second.is_zero()) throw DomainError("zero value assigned to variable '" + v + "'");
      vals.push_back(it->second);
      invs.push_back(it->second.inv());
    }
    T acc(0);
    for (const auto &[e, c] : terms_) {
      T t = T(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        const T &b = e[i] >= 0 ? vals[i] : invs[i];
        for (int k = 0; k < std::abs(e[i]); ++k) t = t * b;
      }
      acc = acc + t;
    }
    return acc;
  }

  /// Substitutes Laurent polynomials for some variables; others are kept.
  [[nodiscard]] LaurentPoly substitute(const std::map<std::string, LaurentPoly> &subs) const {
    LaurentPoly acc;
    for (const auto &[e, c] : terms_) {
      LaurentPoly t(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = subs.find(vars_[i]);
        t = t * (it == subs.end() ? variable(vars_[i]) : it->second).pow(e[i]);
      }
      acc = acc + t;
    }
    return acc;
  }

  [[nodiscard]] bool is_univariate() const { return vars_.size() <= 1; }

  /// Writes a univariate polynomial as x^shift * p(x) with p(0) != 0.
  [[nodiscard]] std::pair<int, UPoly<R>> to_upoly() const
    requires Field<R>
  {
    if (!is_univariate()) throw UnsupportedOperation("multivariate Laurent polynomial: " + str());
    if (is_zero()) return {0, UPoly<R>()};
    if (is_constant()) return {0, UPoly<R>(terms_.begin()->second)};
    int lo = terms_.begin()->first[0], hi = terms_.rbegin()->first[0];
    std::vector<R> c(static_cast<std::size_t>(hi - lo + 1), R(0));
    for (const auto &[e, v] : terms_) c[static_cast<std::size_t>(e[0] - lo)] = v;
    return {lo, UPoly<R>(std::move(c))};
  }
  static LaurentPoly from_upoly(const UPoly<R> &p, const std::string &var, int shift = 0) {
    LaurentPoly r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      if (!p.coeffs()[i].is_zero())
        r = r + monomial(p.coeffs()[i], {{var, static_cast<int>(i) + shift}});
    return r;
  }

  /// Lowest and highest exponent of one variable.
  [[nodiscard]] std::pair<int, int> degree_range(std::size_t var_index) const {
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto &[e, c] : terms_) {
      if (first) { lo = hi = e[var_index]; first = false; }
      lo = std::min(lo, e[var_index]);
      hi = std::max(hi, e[var_index]);
    }
    return {lo, hi};
  }

  /// Representative of the associate class {c*x^k * p}: for a univariate
  /// polynomial, monic with nonzero constant term; zero stays zero.
  [[nodiscard]] LaurentPoly canonical_associate() const
    requires Field<R>
  {
    if (is_zero()) return *this;
    if (is_constant()) return LaurentPoly(R(1));
    auto [shift, p] = to_upoly();
    (void)shift;
    return from_upoly(p.monic(), vars_[0]);
  }

  [[nodiscard]] std::string str() const {
    std::vector<std::pair<Rational, std::string>> parts;
    std::string generic;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        int k = it->first[i];
        if (k == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (k != 1) mono += "^" + std::to_string(k);
      }
      if constexpr (std::is_same_v<R, Rational>) {
        parts.emplace_back(it->second, mono);
      } else {
        if (!generic.empty()) generic += " + ";
        generic += "(" + it->second.str() + ")" + (mono.empty() ? "" : "*" + mono);
      }
    }
    if constexpr (std::is_same_v<R, Rational>) return literal::join_terms(parts);
    else return generic.empty() ? "0" : generic;
  }

  friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.vars_ == b.vars_) {
      LaurentPoly r = a;
      for (const auto &[e, c] : b.terms_) r.add_term(e, c);
      r.normalize();
      return r;
    }
    auto vars = merged(a.vars_, b.vars_);
    LaurentPoly r = a.reindexed(vars);
    LaurentPoly bb = b.reindexed(vars);
    for (const auto &[e, c] : bb.terms_) r.add_term(e, c);
    r.normalize();
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly &a) {
    LaurentPoly r = a;
    for (auto &[e, c] : r.terms_) c = -c;
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) return a.scaled(b.terms_.begin()->second);
    if (a.is_constant()) return b.scaled_left(a.terms_.begin()->second);
    auto vars = a.vars_ == b.vars_ ? a.vars_ : merged(a.vars_, b.vars_);
    LaurentPoly x = a.reindexed(vars), y = b.reindexed(vars), r;
    r.vars_ = vars;
    for (const auto &[e1, c1] : x.terms_)
      for (const auto &[e2, c2] : y.terms_) {
        Exponent e(vars.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    r.normalize();
    return r;
  }
  LaurentPoly &operator+=(const LaurentPoly &o) { return *this = *this + o; }
  LaurentPoly &operator-=(const LaurentPoly &o) { return *this = *this - o; }
  LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const auto &x, const auto &y) {
          if (x.first != y.first) return x.first < y.first;
          return x.second < y.second;
        });
  }

  /// Exact quotient a / b in the Laurent ring; throws when b does not
  /// divide a. Quotient exponents are confined to the box allowed by the
  /// per-variable degree ranges, which bounds the loop.
  friend LaurentPoly divide_exact(const LaurentPoly &a, const LaurentPoly &b)
    requires Field<R>
  {
    if (b.is_zero()) throw DomainError("division by zero");
    if (a.is_zero()) return {};
    if (b.is_monomial()) return a * b.monomial_inverse();
    auto vars = merged(a.vars_, b.vars_);
    LaurentPoly rem = a.reindexed(vars), d = b.reindexed(vars), q;
    q.vars_ = vars;
    std::vector<int> lo(vars.size()), hi(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      auto [alo, ahi] = rem.degree_range(i);
      auto [blo, bhi] = d.degree_range(i);
      lo[i] = alo - blo;
      hi[i] = ahi - bhi;
      if (lo[i] > hi[i]) throw DomainError("inexact Laurent division");
    }
    const auto &[blead_e, blead_c] = *d.terms_.rbegin();
    R binv = blead_c.inv();
    while (!rem.is_zero()) {
      const auto &[re, rc] = *rem.terms_.rbegin();
      Exponent e(vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = re[i] - blead_e[i];
        if (e[i] < lo[i] || e[i] > hi[i]) throw DomainError("inexact Laurent division");
      }
      R c = rc * binv;
      q.add_term(e, c);
      LaurentPoly t;
      t.vars_ = vars;
      t.terms_.emplace(e, c);
      rem = rem - t * d;
      rem = rem.reindexed(vars);
    }
    q.normalize();
    return q;
  }

  /// Monic univariate gcd with nonzero constant term.
  friend LaurentPoly laurent_gcd(const LaurentPoly &a, const LaurentPoly &b)
    requires Field<R>
  {
    if (!a.is_univariate() || !b.is_univariate() ||
        (!a.vars_.empty() && !b.vars_.empty() && a.vars_ != b.vars_))
      throw UnsupportedOperation("laurent_gcd needs univariate inputs in one variable");
    std::string var = !a.vars_.empty() ? a.vars_[0] : (!b.vars_.empty() ? b.vars_[0] : "x");
    auto pa = a.to_upoly().second.strip_x();
    auto pb = b.to_upoly().second.strip_x();
    return from_upoly(gcd(pa, pb).strip_x(), var);
  }

private:
  static std::vector<std::string> merged(const std::vector<std::string> &a,
                                         const std::vector<std::string> &b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  [[nodiscard]] LaurentPoly reindexed(const std::vector<std::string> &vars) const {
    if (vars == vars_) return *this;
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      where[i] = static_cast<std::size_t>(
          std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin());
    LaurentPoly r;
    r.vars_ = vars;
    for (const auto &[e, c] : terms_) {
      Exponent ne(vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }
  void add_term(const Exponent &e, const R &c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  [[nodiscard]] LaurentPoly scaled(const R &c) const {
    LaurentPoly r = *this;
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
      it->second = it->second * c;
      it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
    }
    return r;
  }
  [[nodiscard]] LaurentPoly scaled_left(const R &c) const {
    LaurentPoly r = *this;
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
      it->second = c * it->second;
      it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
    }
    return r;
  }
  /// Drops variables that no term uses.
  void normalize() {
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto &[e, c] : terms_)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto &[e, c] : terms_) {
      Exponent ne;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (used[i]) ne.push_back(e[i]);
      nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

using Laurent = LaurentPoly<Rational>;

template <Ring R> std::ostream &operator<<(std::ostream &os, const LaurentPoly<R> &p) {
  return os << p.str();
}

} // namespace homotopes
