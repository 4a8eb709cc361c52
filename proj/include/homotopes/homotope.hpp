#pragma once

#include "homotopes/concepts.hpp"
#include "homotopes/errors.hpp"
#include "homotopes/graph.hpp"
#include "homotopes/matrix.hpp"
#include "homotopes/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace homotopes {

/// Finite-dimensional unital associative algebra given by structure
/// constants: e_i e_j = sum_k c[i][j][k] e_k. Associativity and the unit
/// axioms are verified on construction.
template <Field F> class FinDimAlgebra {
public:
  using Vec = std::vector<F>;

  FinDimAlgebra(std::size_t dim, std::vector<std::vector<Vec>> constants, Vec unit)
      : d_(dim), c_(std::move(constants)), unit_(std::move(unit)) {
    if (c_.size() != d_ || unit_.size() != d_) throw DomainError("structure constant shape mismatch");
    for (const auto &row : c_) {
      if (row.size() != d_) throw DomainError("structure constant shape mismatch");
      for (const auto &v : row)
        if (v.size() != d_) throw DomainError("structure constant shape mismatch");
    }
    verify();
  }

  /// Mat_n with basis E_ij at index i*n + j.
  static FinDimAlgebra matrix_algebra(std::size_t n) {
    std::size_t d = n * n;
    std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, Vec(d, F(0))));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) c[i * n + j][j * n + k][i * n + k] = F(1);
    Vec unit(d, F(0));
    for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = F(1);
    return FinDimAlgebra(d, std::move(c), std::move(unit));
  }
  /// K^k with componentwise product.
  static FinDimAlgebra diagonal_algebra(std::size_t k) {
    std::vector<std::vector<Vec>> c(k, std::vector<Vec>(k, Vec(k, F(0))));
    for (std::size_t i = 0; i < k; ++i) c[i][i][i] = F(1);
    return FinDimAlgebra(k, std::move(c), Vec(k, F(1)));
  }

  [[nodiscard]] std::size_t dim() const { return d_; }
  [[nodiscard]] const Vec &unit() const { return unit_; }
  [[nodiscard]] const std::vector<std::vector<Vec>> &constants() const { return c_; }
  [[nodiscard]] Vec basis(std::size_t i) const {
    Vec v(d_, F(0));
    v.at(i) = F(1);
    return v;
  }

  [[nodiscard]] Vec mul(const Vec &a, const Vec &b) const {
    check(a);
    check(b);
    Vec out(d_, F(0));
    for (std::size_t i = 0; i < d_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < d_; ++j) {
        if (b[j].is_zero()) continue;
        F ab = a[i] * b[j];
        const Vec &cij = c_[i][j];
        for (std::size_t k = 0; k < d_; ++k)
          if (!cij[k].is_zero()) out[k] = out[k] + ab * cij[k];
      }
    }
    return out;
  }
  [[nodiscard]] Vec mul(const Vec &a, const Vec &b, const Vec &c) const { return mul(mul(a, b), c); }

  /// Matrix of x -> a x (columns indexed by the basis).
  [[nodiscard]] Matrix<F> left_mult(const Vec &a) const {
    Matrix<F> m(d_, d_);
    for (std::size_t j = 0; j < d_; ++j) {
      auto col = mul(a, basis(j));
      for (std::size_t i = 0; i < d_; ++i) m(i, j) = col[i];
    }
    return m;
  }
  [[nodiscard]] Matrix<F> right_mult(const Vec &a) const {
    Matrix<F> m(d_, d_);
    for (std::size_t j = 0; j < d_; ++j) {
      auto col = mul(basis(j), a);
      for (std::size_t i = 0; i < d_; ++i) m(i, j) = col[i];
    }
    return m;
  }

  [[nodiscard]] bool is_commutative() const {
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = i + 1; j < d_; ++j)
        if (!(c_[i][j] == c_[j][i])) return false;
    return true;
  }
  [[nodiscard]] bool is_invertible(const Vec &a) const { return rank(left_mult(a)) == d_; }
  [[nodiscard]] Vec inverse(const Vec &a) const {
    if (!is_invertible(a)) throw DomainError("element is not invertible");
    Vec x = solve(left_mult(a), unit_);
    if (!(mul(x, a) == unit_)) throw DomainError("element has no two-sided inverse");
    return x;
  }

  void check(const Vec &a) const {
    if (a.size() != d_)
      throw DomainError("element has " + std::to_string(a.size()) + " coordinates, algebra dimension is " +
                        std::to_string(d_));
  }

private:
  void verify() const {
    for (std::size_t i = 0; i < d_; ++i) {
      auto ei = basis(i);
      if (!(mul(unit_, ei) == ei) || !(mul(ei, unit_) == ei)) throw DomainError("unit axiom fails");
      for (std::size_t j = 0; j < d_; ++j)
        for (std::size_t k = 0; k < d_; ++k) {
          auto ej = basis(j), ek = basis(k);
          if (!(mul(mul(ei, ej), ek) == mul(ei, mul(ej, ek))))
            throw DomainError("structure constants are not associative at (" + std::to_string(i) +
                              "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }
    }
  }

  std::size_t d_;
  std::vector<std::vector<Vec>> c_;
  Vec unit_;
};

/// The homotope B = K 1 (+) B+ of A at delta, B+ = A with product a delta b.
/// Index 0 of B is the adjoined unit, index 1 + i is the basis vector e_i of A.
template <Field F> class Homotope {
public:
  using Vec = std::vector<F>;

  Homotope(FinDimAlgebra<F> base, Vec delta)
      : a_(std::move(base)), delta_(std::move(delta)), b_(build(a_, delta_)) {}

  [[nodiscard]] const FinDimAlgebra<F> &base() const { return a_; }
  [[nodiscard]] const Vec &delta() const { return delta_; }
  [[nodiscard]] const FinDimAlgebra<F> &algebra() const { return b_; }

  /// a -> (0, a) in B.
  [[nodiscard]] Vec embed(const Vec &a) const {
    a_.check(a);
    Vec v(a.size() + 1, F(0));
    for (std::size_t i = 0; i < a.size(); ++i) v[i + 1] = a[i];
    return v;
  }
  /// Product a delta b on B+.
  [[nodiscard]] Vec homotope_mul(const Vec &a, const Vec &b) const { return a_.mul(a, delta_, b); }

  /// psi_1(lambda, a) = lambda 1 + a delta; psi_2(lambda, a) = lambda 1 + delta a.
  [[nodiscard]] Vec psi(int which, const Vec &b) const {
    b_.check(b);
    Vec a(b.begin() + 1, b.end());
    Vec img = which == 1 ? a_.mul(a, delta_) : a_.mul(delta_, a);
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = img[i] + b[0] * a_.unit()[i];
    return img;
  }
  [[nodiscard]] Matrix<F> psi_matrix(int which) const {
    Matrix<F> m(a_.dim(), b_.dim());
    for (std::size_t j = 0; j < b_.dim(); ++j) {
      auto col = psi(which, b_.basis(j));
      for (std::size_t i = 0; i < a_.dim(); ++i) m(i, j) = col[i];
    }
    return m;
  }

private:
  static FinDimAlgebra<F> build(const FinDimAlgebra<F> &a, const Vec &delta) {
    a.check(delta);
    std::size_t d = a.dim() + 1;
    std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, Vec(d, F(0))));
    for (std::size_t k = 0; k < d; ++k) {
      c[0][k][k] = F(1);
      c[k][0][k] = F(1);
    }
    for (std::size_t i = 1; i < d; ++i)
      for (std::size_t j = 1; j < d; ++j) {
        auto p = a.mul(a.basis(i - 1), delta, a.basis(j - 1));
        for (std::size_t k = 0; k < p.size(); ++k) c[i][j][k + 1] = p[k];
      }
    Vec unit(d, F(0));
    unit[0] = F(1);
    return FinDimAlgebra<F>(d, std::move(c), std::move(unit));
  }

  FinDimAlgebra<F> a_;
  Vec delta_;
  FinDimAlgebra<F> b_;
};

template <Field F>
Homotope<F> build_homotope(const FinDimAlgebra<F> &a, const std::vector<F> &delta) {
  return Homotope<F>(a, delta);
}

/// Span of {e_i delta e_j} equals A.
template <Field F> bool is_well_tempered_findim(const Homotope<F> &h) {
  const auto &a = h.base();
  std::size_t d = a.dim();
  Matrix<F> m(d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto v = h.homotope_mul(a.basis(i), a.basis(j));
      for (std::size_t k = 0; k < d; ++k) m(k, i * d + j) = v[k];
    }
  return rank(m) == d;
}

/// Quiver of the homotope of a (possibly rectangular) operator delta:
/// s arrows one way (kernel), t arrows back (cokernel), relations b_j a_i = 0.
struct QuiverClass {
  std::size_t s = 0, t = 0;
  std::string relations = "beta_j alpha_i = 0 for all i, j";
};

/// delta is a target x source matrix.
template <Field F> QuiverClass quiver_class(const Matrix<F> &delta) {
  if (delta.is_zero()) throw DomainError("zero operator is not well-tempered");
  std::size_t r = rank(delta);
  return {delta.cols() - r, delta.rows() - r};
}

/// Element (lambda, a) of a generalized homotope; a is a d0 x d1 matrix.
template <Ring R> struct GenElement {
  R lambda;
  Matrix<R> a;
  friend bool operator==(const GenElement &x, const GenElement &y) {
    return x.lambda == y.lambda && x.a == y.a;
  }
};

/// (l1, a1)(l2, a2) = (l1 l2, l1 a2 + l2 a1 + a1 delta a2), delta: d1 x d0.
template <Ring R>
GenElement<R> generalized_homotope_mul(const GenElement<R> &x, const GenElement<R> &y,
                                       const Matrix<R> &delta) {
  if (x.a.rows() != y.a.rows() || x.a.cols() != y.a.cols() || delta.rows() != x.a.cols() ||
      delta.cols() != x.a.rows())
    throw DomainError("shape mismatch: elements " + x.a.shape() + ", " + y.a.shape() + ", operator " +
                      delta.shape());
  return {x.lambda * y.lambda, x.lambda * y.a + y.lambda * x.a + x.a * delta * y.a};
}

/// Representation of a finite-dimensional algebra: one matrix per basis
/// vector, validated against the structure constants and unit.
template <Field F> class Representation {
public:
  Representation(const FinDimAlgebra<F> &alg, std::vector<Matrix<F>> mats, std::size_t dim)
      : dim_(dim), mats_(std::move(mats)) {
    if (mats_.size() != alg.dim()) throw DomainError("need one matrix per basis vector");
    for (const auto &m : mats_)
      if (m.rows() != dim_ || m.cols() != dim_) throw DomainError("representation matrix has wrong size");
    if (!(act(alg.unit()) == Matrix<F>::identity(dim_))) throw DomainError("unit does not act as identity");
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j)
        if (!(mats_[i] * mats_[j] == act(alg.constants()[i][j])))
          throw DomainError("representation violates the product of basis vectors " + std::to_string(i) +
                            ", " + std::to_string(j));
  }

  /// Left regular-style action of Mat_n on K^n.
  static Representation standard(std::size_t n) {
    auto alg = FinDimAlgebra<F>::matrix_algebra(n);
    std::vector<Matrix<F>> mats;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mats.push_back(Matrix<F>::unit(n, n, i, j));
    return Representation(alg, std::move(mats), n);
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Matrix<F>> &matrices() const { return mats_; }
  [[nodiscard]] Matrix<F> act(const std::vector<F> &a) const {
    Matrix<F> m(dim_, dim_);
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!a[k].is_zero()) m = m + a[k] * mats_[k];
    return m;
  }

private:
  std::size_t dim_;
  std::vector<Matrix<F>> mats_;
};

/// lambda_W = rho(delta): the map from psi_1^* W to psi_2^* W.
template <Field F> Matrix<F> lambda_map(const Representation<F> &rep, const std::vector<F> &delta) {
  return rep.act(delta);
}

/// W_min = Im rho(delta) as a module over the homotope, where (lambda, a)
/// acts by lambda + rho(delta a).
template <Field F>
Representation<F> minimal_shadow(const Homotope<F> &h, const Representation<F> &rep) {
  Matrix<F> img = column_space_basis(lambda_map(rep, h.delta()));
  std::size_t r = img.cols();
  std::vector<Matrix<F>> mats{Matrix<F>::identity(r)};
  for (std::size_t k = 0; k < h.base().dim(); ++k) {
    Matrix<F> act = rep.act(h.base().mul(h.delta(), h.base().basis(k))) * img;
    Matrix<F> coords(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      auto x = solve(img, act.col(j));
      for (std::size_t i = 0; i < r; ++i) coords(i, j) = x[i];
    }
    mats.push_back(std::move(coords));
  }
  return Representation<F>(h.algebra(), std::move(mats), r);
}

/// Dimensions of the B+-invariants {w : B+ w = 0} and of the coinvariants
/// W / B+ W of a representation of a homotope (index 0 = unit).
template <Field F> std::pair<std::size_t, std::size_t> augmentation_defects(const Representation<F> &rep) {
  std::size_t n = rep.dim(), k = rep.matrices().size() - 1;
  Matrix<F> stacked(n * k, n), joined(n, n * k);
  for (std::size_t b = 0; b < k; ++b) {
    const auto &m = rep.matrices()[b + 1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        stacked(b * n + i, j) = m(i, j);
        joined(i, b * n + j) = m(i, j);
      }
  }
  std::size_t inv = k == 0 ? n : n - rank(stacked);
  std::size_t coinv = k == 0 ? n : n - rank(joined);
  return {inv, coinv};
}

namespace detail {

/// Basis (as columns of d^2-vectors, column-major vec) of the space of
/// d x d matrices f with f M = M f for every M in `ops`, computed by
/// restricting the solution space one operator at a time.
template <Field F> Matrix<F> commutant_basis(const std::vector<Matrix<F>> &ops, std::size_t d) {
  std::size_t dd = d * d;
  Matrix<F> basis = Matrix<F>::identity(dd); // columns span the current solution space
  for (const auto &m : ops) {
    if (basis.cols() == 0) break;
    // constraint image: for each basis column f, vec(f m - m f)
    Matrix<F> c(dd, basis.cols());
    for (std::size_t col = 0; col < basis.cols(); ++col) {
      Matrix<F> f(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) f(i, j) = basis(j * d + i, col);
      Matrix<F> comm = f * m - m * f;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) c(j * d + i, col) = comm(i, j);
    }
    auto ns = nullspace(c);
    Matrix<F> next(dd, ns.size());
    for (std::size_t k = 0; k < ns.size(); ++k) {
      auto v = basis * ns[k];
      for (std::size_t i = 0; i < dd; ++i) next(i, k) = v[i];
    }
    basis = std::move(next);
  }
  return basis;
}

} // namespace detail

/// Both sides of Ext^1_B(K, B+) = A / delta A. The left side is computed from
/// 0 -> B+ -> B -> K -> 0 as dim Hom_B(B+, B+) minus the dimension of the
/// restrictions of Hom_B(B, B+) (the maps x -> x delta y).
template <Field F> std::pair<std::size_t, std::size_t> ext1_dim_check(const Homotope<F> &h) {
  const auto &a = h.base();
  std::size_t d = a.dim();
  std::vector<Matrix<F>> ops;
  for (std::size_t k = 0; k < d; ++k) ops.push_back(a.left_mult(a.mul(a.basis(k), h.delta())));
  std::size_t hom = detail::commutant_basis(ops, d).cols();

  Matrix<F> restr(d * d, d);
  for (std::size_t y = 0; y < d; ++y) {
    Matrix<F> r = a.right_mult(a.mul(h.delta(), a.basis(y)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) restr(j * d + i, y) = r(i, j);
  }
  std::size_t lhs = hom - rank(restr);
  std::size_t rhs = d - rank(a.left_mult(h.delta()));
  if (is_well_tempered_findim(h) && lhs != rhs)
    throw std::logic_error("Ext^1 dimensions disagree: " + std::to_string(lhs) + " vs " +
                           std::to_string(rhs));
  return {lhs, rhs};
}

/// For invertible delta: the element 1_B - delta^-1 of B, a central
/// idempotent killing B+ (so B splits as A x K).
template <Field F> std::vector<F> split_idempotent(const Homotope<F> &h) {
  auto inv = h.base().inverse(h.delta());
  std::vector<F> e = h.embed(inv);
  for (auto &c : e) c = -c;
  e[0] = e[0] + F(1);
  return e;
}

/// Transports the homotope at delta along b -> d^-1 b c^-1 and compares
/// structure constants with the homotope at c delta d.
template <Field F>
bool check_double_coset(const FinDimAlgebra<F> &a, const std::vector<F> &delta, const std::vector<F> &c,
                        const std::vector<F> &d) {
  auto ci = a.inverse(c), di = a.inverse(d);
  auto moved = a.mul(c, delta, d);
  auto phi = [&](const std::vector<F> &b) { return a.mul(di, b, ci); };
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto ei = a.basis(i), ej = a.basis(j);
      if (!(phi(a.mul(ei, delta, ej)) == a.mul(phi(ei), moved, phi(ej)))) return false;
    }
  return true;
}

/// V_i = {v : rho(x_i) v = v} for a representation of B(Gamma) given by the
/// images of the generators x_i, after checking the defining relations.
template <Field F>
std::vector<std::vector<std::vector<F>>> rank_spaces(const Graph &g, const std::vector<Matrix<F>> &rho) {
  if (rho.size() != g.vertex_count()) throw DomainError("need one matrix per vertex");
  std::size_t n = rho.empty() ? 0 : rho[0].rows();
  for (const auto &m : rho)
    if (m.rows() != n || m.cols() != n) throw DomainError("generator matrices must be square of equal size");
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] * rho[i] == rho[i])) throw DomainError("x_" + g.name(static_cast<int>(i)) + " is not idempotent");
    for (std::size_t j = 0; j < rho.size(); ++j) {
      if (i == j) continue;
      int a = static_cast<int>(i), b = static_cast<int>(j);
      if (g.adjacent(a, b)) {
        F s = param_as<F>(g.s(a, b));
        if (!(rho[i] * rho[j] * rho[i] == (s * s) * rho[i]))
          throw DomainError("relation x_i x_j x_i = s^2 x_i fails on edge {" + g.name(a) + "," + g.name(b) + "}");
      } else if (!(rho[i] * rho[j]).is_zero()) {
        throw DomainError("x_" + g.name(a) + " x_" + g.name(b) + " must vanish (no edge)");
      }
    }
  }
  std::vector<std::vector<std::vector<F>>> out;
  for (const auto &m : rho) out.push_back(nullspace(m - Matrix<F>::identity(n)));
  return out;
}

} // namespace homotopes
