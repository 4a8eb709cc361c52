#pragma once

#include "homotopes/errors.hpp"
#include "homotopes/laurent.hpp"
#include "homotopes/matrix.hpp"
#include "homotopes/quadratic.hpp"
#include "homotopes/rational.hpp"
#include "homotopes/upoly.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace homotopes {

using LaurentMatrix = Matrix<Laurent>;

/// Exact determinant: subset expansion up to 6x6, fraction-free Bareiss
/// elimination with exact Laurent division beyond.
inline Laurent det(const LaurentMatrix &m) {
  if (!m.is_square()) throw DomainError("determinant of non-square matrix " + m.shape());
  if (m.rows() <= 6) return det_expansion(m);
  return det_bareiss(m, [](const Laurent &a, const Laurent &b) { return divide_exact(a, b); });
}

/// The single variable of a matrix over k[x, x^-1]; `fallback` when all
/// entries are constant.
inline std::string matrix_variable(const LaurentMatrix &m, const std::string &fallback = "x") {
  std::set<std::string> vars;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto &v : m(i, j).variables()) vars.insert(v);
  if (vars.size() > 1)
    throw UnsupportedOperation("matrix entries are not univariate (" + std::to_string(vars.size()) +
                               " variables)");
  return vars.empty() ? fallback : *vars.begin();
}

namespace detail {

inline void next_combination_init(std::vector<std::size_t> &c, std::size_t k) {
  c.resize(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
}
inline bool next_combination(std::vector<std::size_t> &c, std::size_t n) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

} // namespace detail

/// Determinantal divisors d_1, ..., d_min(r,c): canonical gcd of all k x k
/// minors (d_0 = 1 is implicit). Zero when all minors of that size vanish.
inline std::vector<Laurent> minor_gcds(const LaurentMatrix &m) {
  matrix_variable(m);
  std::vector<Laurent> out;
  std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= top; ++k) {
    Laurent g;
    std::vector<std::size_t> rows, cols;
    detail::next_combination_init(rows, k);
    do {
      detail::next_combination_init(cols, k);
      do {
        Laurent d = det(m.submatrix(rows, cols));
        g = g.is_zero() ? d.canonical_associate() : laurent_gcd(g, d);
      } while (detail::next_combination(cols, m.cols()));
    } while (detail::next_combination(rows, m.rows()));
    out.push_back(g.is_zero() ? g : g.canonical_associate());
  }
  return out;
}

/// Evaluation point for a univariate matrix: a rational number or an
/// element of a real quadratic extension.
using EvalPoint = std::variant<Rational, QuadraticNumber>;

namespace detail {
template <typename T> T eval_at(const Laurent &p, const std::string &var, const T &x0) {
  return p.eval(std::map<std::string, T>{{var, x0}});
}
template <typename T>
std::size_t corank_by_minors(const LaurentMatrix &m, const std::string &var, const T &x0) {
  if (x0.is_zero()) throw DomainError("evaluation point must be nonzero");
  auto d = minor_gcds(m);
  std::size_t r = 0;
  for (std::size_t k = 1; k <= d.size(); ++k)
    if (!eval_at(d[k - 1], var, x0).is_zero()) r = k;
  return m.rows() - r;
}
template <typename T>
std::size_t corank_by_evaluation(const LaurentMatrix &m, const std::string &var, const T &x0) {
  if (x0.is_zero()) throw DomainError("evaluation point must be nonzero");
  Matrix<T> e = m.map([&](const Laurent &p) { return eval_at(p, var, x0); });
  return m.rows() - rank(e);
}
} // namespace detail

/// Corank n - max{k : d_k(x0) != 0} via the determinantal divisors.
inline std::size_t corank_at(const LaurentMatrix &m, const EvalPoint &x0) {
  std::string var = matrix_variable(m);
  return std::visit([&](const auto &v) { return detail::corank_by_minors(m, var, v); }, x0);
}

/// Corank of the scalar matrix obtained by substituting x0 (second route).
inline std::size_t evaluated_corank(const LaurentMatrix &m, const EvalPoint &x0) {
  std::string var = matrix_variable(m);
  return std::visit([&](const auto &v) { return detail::corank_by_evaluation(m, var, v); }, x0);
}

inline std::string point_str(const EvalPoint &p) {
  return std::visit([](const auto &v) { return v.str(); }, p);
}

/// Laplacian matrix of the cycle 1-2-...-n-1: ones on the diagonal,
/// s_{i,i+1} beside it, s_{n,1} x^-1 at (1,n) and s_{n,1} x at (n,1).
inline LaurentMatrix cyclic_laplacian(std::size_t n, const std::vector<Laurent> &s,
                                      const std::string &var = "x") {
  if (n < 3) throw DomainError("cyclic graph needs n >= 3");
  if (s.size() != n) throw DomainError("expected " + std::to_string(n) + " edge parameters");
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Laurent(1);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = s[i];
  m(0, n - 1) = s[n - 1] * Laurent::variable(var, -1);
  m(n - 1, 0) = s[n - 1] * Laurent::variable(var, 1);
  return m;
}

/// Point of the character variety where the cyclic Laplacian degenerates.
struct StrataRoot {
  EvalPoint value;
  std::size_t corank = 0;          // via determinantal divisors
  std::size_t evaluated_corank = 0; // via direct rank
  bool rational = true;
};

struct StrataReport {
  std::size_t n = 0;
  Laurent determinant;
  Rational A, B;
  Rational discriminant; // B^2 - 4A^2
  bool double_root = false;
  std::vector<StrataRoot> roots;
  std::vector<std::size_t> strata_dims; // descending
};

/// Stratification of the rank-1 character variety of the n-cycle by the
/// rank of its Laplacian. det = A(x + x^-1) + B with A = +-prod s.
inline StrataReport cyclic_strata(std::size_t n, const std::vector<Rational> &s) {
  if (n < 3) throw DomainError("cyclic strata need n >= 3");
  if (s.size() != n) throw DomainError("expected " + std::to_string(n) + " edge parameters");
  Rational prod(1);
  std::vector<Laurent> ls;
  for (const auto &v : s) {
    if (v.is_zero()) throw DomainError("edge parameters must be nonzero");
    prod *= v;
    ls.emplace_back(v);
  }
  auto m = cyclic_laplacian(n, ls);
  StrataReport r;
  r.n = n;
  r.determinant = det(m);
  for (const auto &[e, c] : r.determinant.terms())
    if (e.size() > 1 || (!e.empty() && std::abs(e[0]) > 1))
      throw std::logic_error("cyclic determinant outside span{x^-1, 1, x}: " + r.determinant.str());
  Rational a_plus = r.determinant.coefficient({{"x", 1}});
  Rational a_minus = r.determinant.coefficient({{"x", -1}});
  r.B = r.determinant.coefficient({});
  if (!(a_plus == a_minus)) throw std::logic_error("cyclic determinant is not reciprocal");
  r.A = a_plus;
  if (!(r.A == prod) && !(r.A == -prod))
    throw std::logic_error("leading coefficient " + r.A.str() + " is not +-" + prod.str());

  // A x^2 + B x + A = 0
  r.discriminant = r.B * r.B - Rational(4) * r.A * r.A;
  Rational two_a = Rational(2) * r.A;
  std::vector<std::pair<EvalPoint, bool>> pts;
  if (r.discriminant.is_zero()) {
    r.double_root = true;
    pts.emplace_back(-r.B / two_a, true);
  } else if (r.discriminant.is_square()) {
    Rational sq = r.discriminant.sqrt();
    pts.emplace_back((-r.B - sq) / two_a, true);
    pts.emplace_back((-r.B + sq) / two_a, true);
  } else {
    Rational c = -r.B / two_a, b = two_a.inv();
    pts.emplace_back(QuadraticNumber(c, -b, r.discriminant), false);
    pts.emplace_back(QuadraticNumber(c, b, r.discriminant), false);
  }
  std::set<std::size_t, std::greater<>> dims{n};
  for (auto &[p, rational] : pts) {
    StrataRoot root{p, corank_at(m, p), evaluated_corank(m, p), rational};
    if (root.corank != root.evaluated_corank)
      throw std::logic_error("corank routes disagree at x = " + point_str(p));
    if (root.corank > 2) throw std::logic_error("corank exceeds 2 at x = " + point_str(p));
    dims.insert(n - root.corank);
    r.roots.push_back(std::move(root));
  }
  r.strata_dims.assign(dims.begin(), dims.end());
  return r;
}

/// Smith form U * M * V = diag(d_1, ..., d_r, 0...) over k[x, x^-1] with
/// canonical invariant factors (monic, nonzero constant term; 0 allowed).
struct SNFResult {
  std::string variable = "x";
  std::vector<Laurent> factors; // length min(rows, cols)
  LaurentMatrix U, V;

  /// Number of zero invariant factors plus surplus rows: rank of the free
  /// part of the cokernel.
  [[nodiscard]] std::size_t free_rank() const {
    std::size_t z = 0;
    for (const auto &f : factors)
      if (f.is_zero()) ++z;
    return z + (U.rows() - factors.size());
  }
  /// Invariant factors that are not units.
  [[nodiscard]] std::vector<Laurent> torsion_factors() const {
    std::vector<Laurent> out;
    for (const auto &f : factors)
      if (!f.is_zero() && !f.is_constant()) out.push_back(f);
    return out;
  }
  [[nodiscard]] LaurentMatrix diagonal() const {
    LaurentMatrix d(U.rows(), V.cols());
    for (std::size_t i = 0; i < factors.size(); ++i) d(i, i) = factors[i];
    return d;
  }
};

namespace detail {

using QPoly = UPoly<Rational>;

inline std::size_t poly_size(const QPoly &p) { return p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) + 1; }

template <typename M> void swap_rows(M &m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
template <typename M> void swap_cols(M &m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_a -= q * row_b
template <typename M, typename T> void row_sub(M &m, std::size_t a, std::size_t b, const T &q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(b, j).is_zero()) m(a, j) = m(a, j) - q * m(b, j);
}
template <typename M, typename T> void col_sub(M &m, std::size_t a, std::size_t b, const T &q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, b).is_zero()) m(i, a) = m(i, a) - m(i, b) * q;
}

/// Euclidean Smith reduction over Q[x]: returns (S, U, V) with U P V = S.
inline void smith_qx(Matrix<QPoly> &a, Matrix<QPoly> &u, Matrix<QPoly> &v) {
  std::size_t r = a.rows(), c = a.cols();
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // smallest-degree nonzero pivot in the trailing block
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (!a(i, j).is_zero() &&
              (!best || a(i, j).degree() < a(best->first, best->second).degree()))
            best = std::make_pair(i, j);
      if (!best) return;
      swap_rows(a, t, best->first);
      swap_rows(u, t, best->first);
      swap_cols(a, t, best->second);
      swap_cols(v, t, best->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t).is_zero()) continue;
        QPoly q = a(i, t) / a(t, t);
        row_sub(a, i, t, q);
        row_sub(u, i, t, q);
        if (!a(i, t).is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j).is_zero()) continue;
        QPoly q = a(t, j) / a(t, t);
        col_sub(a, j, t, q);
        col_sub(v, j, t, q);
        if (!a(t, j).is_zero()) dirty = true;
      }
      if (dirty) continue;
      // divisibility: fold a row with an entry not divisible by the pivot
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < r && !bad; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!(a(i, j) % a(t, t)).is_zero()) {
            bad = i;
            break;
          }
      if (!bad) break;
      for (std::size_t j = 0; j < c; ++j) a(t, j) = a(t, j) + a(*bad, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(t, j) = u(t, j) + u(*bad, j);
    }
  }
}

} // namespace detail

inline SNFResult smith_normal_form(const LaurentMatrix &m) {
  using detail::QPoly;
  SNFResult res;
  res.variable = matrix_variable(m);
  const std::string &var = res.variable;
  std::size_t r = m.rows(), c = m.cols();

  // Clear denominators row by row: P = D M with D = diag(x^k_i).
  std::vector<int> shift(r, 0);
  Matrix<QPoly> p(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    std::optional<int> lo;
    for (std::size_t j = 0; j < c; ++j)
      if (!m(i, j).is_zero()) {
        int e = m(i, j).to_upoly().first;
        lo = lo ? std::min(*lo, e) : e;
      }
    shift[i] = lo ? -*lo : 0;
    for (std::size_t j = 0; j < c; ++j) {
      if (m(i, j).is_zero()) continue;
      auto [sh, poly] = m(i, j).to_upoly();
      p(i, j) = poly * QPoly::monomial(Rational(1), static_cast<std::size_t>(sh + shift[i]));
    }
  }

  Matrix<QPoly> u = Matrix<QPoly>::identity(r), v = Matrix<QPoly>::identity(c);
  detail::smith_qx(p, u, v);

  auto to_l = [&](const QPoly &q) { return Laurent::from_upoly(q, var); };
  res.U = u.map(to_l);
  res.V = v.map(to_l);
  for (std::size_t i = 0; i < r; ++i) {
    Laurent xi = Laurent::variable(var, shift[i]);
    for (std::size_t k = 0; k < r; ++k) res.U(k, i) = res.U(k, i) * xi;
  }
  // Normalize each diagonal entry to its canonical associate; the unit
  // c x^a is absorbed into the corresponding row of U.
  for (std::size_t i = 0; i < std::min(r, c); ++i) {
    Laurent d = to_l(p(i, i));
    if (d.is_zero()) {
      res.factors.push_back(d);
      continue;
    }
    Laurent canon = d.canonical_associate();
    Laurent unit = divide_exact(d, canon);
    Laurent unit_inv = unit.monomial_inverse();
    for (std::size_t j = 0; j < r; ++j) res.U(i, j) = unit_inv * res.U(i, j);
    res.factors.push_back(canon);
  }
  return res;
}

/// Cokernels agree as k[x, x^-1]-modules: equal free rank and equal
/// non-unit invariant factors.
inline bool cokernel_iso(const SNFResult &a, const SNFResult &b) {
  auto fa = a.torsion_factors(), fb = b.torsion_factors();
  if (fa.size() != fb.size() || a.free_rank() != b.free_rank()) return false;
  auto key = [](const Laurent &p) { return p.str(); };
  std::vector<std::string> ka, kb;
  for (const auto &f : fa) ka.push_back(key(f));
  for (const auto &f : fb) kb.push_back(key(f));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

/// Checks a divisibility chain d_1 | d_2 | ... (zero divisible by anything).
inline bool is_divisibility_chain(const std::vector<Laurent> &f) {
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (f[i].is_zero()) {
      if (!f[i + 1].is_zero()) return false;
      continue;
    }
    if (f[i + 1].is_zero()) continue;
    if (!(laurent_gcd(f[i], f[i + 1]) == f[i].canonical_associate())) return false;
  }
  return true;
}

} // namespace homotopes
