#pragma once

#include "homotopes/errors.hpp"
#include "homotopes/graph.hpp"
#include "homotopes/groupoid.hpp"
#include "homotopes/homotope.hpp"
#include "homotopes/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homotopes {

template <Ring T> T pairing(const std::vector<T> &x, const std::vector<T> &e) {
  if (x.size() != e.size()) throw DomainError("pairing of vectors of different length");
  T acc(0);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero() && !e[k].is_zero()) acc = acc + x[k] * e[k];
  return acc;
}

/// Rank-1 projector p = e (x) x with (x, e) = 1, acting by v -> (x, v) e.
template <Field F> class Projector {
public:
  /// Rejects pairs with (x, e) != 1.
  Projector(std::vector<F> e, std::vector<F> x) : e_(std::move(e)), x_(std::move(x)) {
    F c = pairing(x_, e_);
    if (!(c == F(1))) throw DomainError("projector pairing (x, e) = " + c.str() + ", expected 1");
  }
  /// Scales x so that (x, e) = 1.
  static Projector normalized(std::vector<F> e, std::vector<F> x) {
    F c = pairing(x, e);
    if (c.is_zero()) throw DomainError("projector with (x, e) = 0 cannot be normalized");
    F inv = c.inv();
    for (auto &v : x) v = v * inv;
    return Projector(std::move(e), std::move(x));
  }

  [[nodiscard]] const std::vector<F> &e() const { return e_; }
  [[nodiscard]] const std::vector<F> &x() const { return x_; }
  [[nodiscard]] std::size_t dim() const { return e_.size(); }
  [[nodiscard]] Matrix<F> matrix() const { return Matrix<F>::column(e_) * Matrix<F>::row_vector(x_); }
  [[nodiscard]] Projector transposed() const { return Projector(x_, e_); }

  friend bool operator==(const Projector &a, const Projector &b) { return a.e_ == b.e_ && a.x_ == b.x_; }

private:
  std::vector<F> e_, x_;
};

struct ConfigReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Rank-1 projectors indexed by the vertices of a graph. Edge targets r_e
/// default to s_e^2 (the square roots s_e are then also available for the
/// S-invariants); they may instead be given explicitly.
template <Field F> class ProjectorConfig {
public:
  ProjectorConfig(GraphPtr g, std::vector<Projector<F>> ps) : g_(std::move(g)), p_(std::move(ps)) {
    validate_shape();
    std::vector<F> s;
    for (const auto &e : g_->edges()) {
      F v = param_as<F>(e.s);
      r_.push_back(v * v);
      s.push_back(v);
    }
    s_ = std::move(s);
  }
  ProjectorConfig(GraphPtr g, std::vector<Projector<F>> ps, std::vector<F> r)
      : g_(std::move(g)), p_(std::move(ps)), r_(std::move(r)) {
    validate_shape();
    if (r_.size() != g_->edge_count()) throw DomainError("need one target r per edge");
  }

  [[nodiscard]] const GraphPtr &graph() const { return g_; }
  [[nodiscard]] const std::vector<Projector<F>> &projectors() const { return p_; }
  [[nodiscard]] const Projector<F> &projector(int v) const { return p_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const std::vector<F> &r() const { return r_; }
  [[nodiscard]] bool has_square_roots() const { return s_.has_value(); }
  [[nodiscard]] const F &s(int edge) const {
    if (!s_) throw DomainError("edge square roots s_e are not available for this configuration");
    return (*s_)[static_cast<std::size_t>(edge)];
  }
  [[nodiscard]] const std::optional<std::vector<F>> &square_roots() const { return s_; }

  /// Same graph and targets, new projectors.
  [[nodiscard]] ProjectorConfig with_projectors(std::vector<Projector<F>> ps) const {
    ProjectorConfig c = *this;
    c.p_ = std::move(ps);
    c.validate_shape();
    return c;
  }

private:
  void validate_shape() {
    if (p_.size() != g_->vertex_count()) throw DomainError("need one projector per vertex");
    n_ = p_.empty() ? 0 : p_[0].dim();
    for (const auto &p : p_)
      if (p.dim() != n_) throw DomainError("projectors live in different dimensions");
  }

  GraphPtr g_;
  std::vector<Projector<F>> p_;
  std::vector<F> r_;
  std::optional<std::vector<F>> s_;
  std::size_t n_ = 0;
};

/// Edge relations (x_i, e_j)(x_j, e_i) = r_ij and non-edge orthogonality
/// (x_i, e_j) = (x_j, e_i) = 0, each failure listed.
template <Field F> ConfigReport check_config(const ProjectorConfig<F> &c) {
  ConfigReport rep;
  const Graph &g = *c.graph();
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
      int a = static_cast<int>(i), b = static_cast<int>(j);
      const auto &pa = c.projector(a), &pb = c.projector(b);
      F ab = pairing(pa.x(), pb.e()), ba = pairing(pb.x(), pa.e());
      std::string where = "{" + g.name(a) + "," + g.name(b) + "}";
      if (int e = g.edge_id(a, b); e >= 0) {
        F prod = ab * ba;
        const F &target = c.r()[static_cast<std::size_t>(e)];
        if (!(prod == target))
          rep.failures.push_back("edge " + where + ": pairing product " + prod.str() + " != " + target.str());
      } else if (!ab.is_zero() || !ba.is_zero()) {
        rep.failures.push_back("non-edge " + where + ": projectors not orthogonal");
      }
    }
  rep.ok = rep.failures.empty();
  return rep;
}

inline void require_closed(const Graph &g, const Path &p) {
  g.require_path(p);
  if (p.empty() || p.front() != p.back()) throw DomainError("path " + g.path_str(p) + " is not closed");
}

/// T_gamma: trace of the ordered product of the projectors along a closed
/// path, i.e. the cyclic product of the pairings (x_{i_l}, e_{i_{l+1}}).
template <Field F> F trace_cycle(const ProjectorConfig<F> &c, const Path &gamma) {
  require_closed(*c.graph(), gamma);
  F t(1);
  for (std::size_t l = 0; l + 1 < gamma.size(); ++l)
    t = t * pairing(c.projector(gamma[l]).x(), c.projector(gamma[l + 1]).e());
  return t;
}

/// S_gamma = T_gamma / prod over the steps of gamma of s_e.
template <Field F> F s_invariant(const ProjectorConfig<F> &c, const Path &gamma) {
  F t = trace_cycle(c, gamma);
  for (std::size_t l = 0; l + 1 < gamma.size(); ++l) {
    if (gamma[l] == gamma[l + 1]) continue;
    t = t / c.s(c.graph()->edge_id(gamma[l], gamma[l + 1]));
  }
  return t;
}

template <Field F> bool is_minimal(const ProjectorConfig<F> &c) {
  std::size_t n = c.dim(), k = c.projectors().size();
  Matrix<F> e(n, k), x(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      e(j, i) = c.projectors()[i].e()[j];
      x(i, j) = c.projectors()[i].x()[j];
    }
  return rank(e) == n && rank(x) == n;
}

/// Restricts to the span of the images, then divides out the common kernel
/// of the covectors. All pairings (x_i, e_j) are unchanged.
template <Field F> ProjectorConfig<F> minimalize(const ProjectorConfig<F> &c) {
  std::size_t n = c.dim(), k = c.projectors().size();
  Matrix<F> e(n, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) e(j, i) = c.projectors()[i].e()[j];
  Matrix<F> basis = column_space_basis(e); // n x m
  std::size_t m = basis.cols();
  std::vector<std::vector<F>> e1, x1;
  Matrix<F> xr(k, m);
  for (std::size_t i = 0; i < k; ++i) {
    e1.push_back(solve(basis, c.projectors()[i].e()));
    auto xi = basis.transpose() * c.projectors()[i].x();
    for (std::size_t j = 0; j < m; ++j) xr(i, j) = xi[j];
    x1.push_back(std::move(xi));
  }
  Matrix<F> rows = row_space_basis(xr); // m' x m, kernel = common kernel
  Matrix<F> rows_t = rows.transpose();
  std::vector<Projector<F>> ps;
  for (std::size_t i = 0; i < k; ++i) ps.emplace_back(rows * e1[i], solve(rows_t, x1[i]));
  return c.with_projectors(std::move(ps));
}

/// Appends `extra` zero coordinates to every vector and covector.
template <Field F> ProjectorConfig<F> pad_with_zero_block(const ProjectorConfig<F> &c, std::size_t extra) {
  std::vector<Projector<F>> ps;
  for (const auto &p : c.projectors()) {
    auto e = p.e(), x = p.x();
    e.resize(e.size() + extra, F(0));
    x.resize(x.size() + extra, F(0));
    ps.emplace_back(std::move(e), std::move(x));
  }
  return c.with_projectors(std::move(ps));
}

/// Swaps the roles of vectors and covectors (transposed projectors).
template <Field F> ProjectorConfig<F> dualize(const ProjectorConfig<F> &c) {
  std::vector<Projector<F>> ps;
  for (const auto &p : c.projectors()) ps.push_back(p.transposed());
  return c.with_projectors(std::move(ps));
}

/// Values of a rank-1 character on the cycle-basis generators, in order.
template <Field F> using Character = std::vector<F>;

/// Matrix of the Laplacian in the cycle-basis gauge, evaluated at a character.
template <Field F>
Matrix<F> evaluated_laplacian(const GraphPtr &g, const CycleBasis &cb, const Character<F> &chi) {
  if (chi.size() != cb.rank())
    throw DomainError("character has " + std::to_string(chi.size()) + " values, cycle rank is " +
                      std::to_string(cb.rank()));
  std::map<std::string, F> point;
  for (std::size_t k = 0; k < chi.size(); ++k) {
    if (chi[k].is_zero()) throw DomainError("character values must be nonzero");
    point.emplace(cb.generators[k].variable, chi[k]);
  }
  // constant edge parameters are required here
  for (const auto &e : g->edges())
    if (!e.s.is_constant()) throw DomainError("edge parameter " + e.s.str() + " is not a number");
  auto sym = to_matrix(laplacian<Laurent>(g), cb);
  return sym.map([&](const Laurent &p) { return p.template eval<F>(point); });
}

/// Minimal rank-1 configuration attached to a character: on W = F^V with the
/// matrix model L of the Laplacian, W_min = Im L and p_i = L E_ii restricted,
/// so e_i = L eps_i and x_i = eps_i on W_min.
template <Field F> ProjectorConfig<F> from_character(const Graph &graph, const Character<F> &chi) {
  if (!graph.is_connected()) throw DomainError("from_character needs a connected graph");
  auto g = share(graph);
  auto cb = cycle_basis(*g);
  Matrix<F> l = evaluated_laplacian(g, cb, chi);
  Matrix<F> basis = column_space_basis(l);
  std::vector<Projector<F>> ps;
  for (std::size_t i = 0; i < g->vertex_count(); ++i)
    ps.emplace_back(solve(basis, l.col(i)), basis.row(i));
  return ProjectorConfig<F>(g, std::move(ps));
}

/// Dimension of {M : M p = p M for all p in ops} (square matrices of size d).
template <Field F> std::size_t commutant_dimension(const std::vector<Matrix<F>> &ops, std::size_t d) {
  return detail::commutant_basis(ops, d).cols();
}

/// Endomorphisms commuting with every projector are scalars.
template <Field F> FilteredCheck commutant_is_scalar(const ProjectorConfig<F> &c) {
  FilteredCheck r;
  if (!c.graph()->is_connected()) r.warnings.push_back("graph is not connected");
  if (!is_minimal(c)) r.warnings.push_back("configuration is not minimal");
  std::vector<Matrix<F>> ops;
  for (const auto &p : c.projectors()) ops.push_back(p.matrix());
  r.holds = commutant_dimension(ops, c.dim()) == 1;
  return r;
}

/// S-invariants of the fundamental cycles, in cycle-basis order.
template <Field F> std::vector<F> s_class(const ProjectorConfig<F> &c) {
  std::vector<F> out;
  for (const auto &gen : cycle_basis(*c.graph()).generators) out.push_back(s_invariant(c, gen.cycle));
  return out;
}

} // namespace homotopes
