#pragma once

#include "homotopes/graph.hpp"
#include "homotopes/laurent.hpp"
#include "homotopes/matrix.hpp"
#include "homotopes/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <vector>

namespace homotopes {

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

inline void require_same_graph(const GraphPtr &a, const GraphPtr &b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw DomainError("elements live over different graphs");
}

/// Reduced form of a path in the groupoid: stay steps dropped, backtracks cancelled.
inline Path reduce_path(const Graph &g, const Path &p) { return contract(g, p).path; }

/// Prints a coefficient so that it can sit in front of " * [path]".
template <typename R> std::string coeff_str(const R &c) {
  std::string s = c.str();
  if constexpr (std::is_same_v<R, Rational>) return s;
  else return s.find_first_of(" ") == std::string::npos ? s : "(" + s + ")";
}

template <typename R>
std::string linear_combination_str(const Graph &g, const std::map<Path, R> &terms,
                                   const std::string &prefix) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto &[p, c] : terms) {
    if (!out.empty()) out += " + ";
    out += coeff_str(c) + " * " + prefix + g.path_str(p);
  }
  return out;
}

/// Element of the path groupoid algebra: a combination of reduced paths
/// (trivial paths are the vertex idempotents e_i).
template <Ring R> class GroupoidElement {
public:
  using Terms = std::map<Path, R>;

  explicit GroupoidElement(GraphPtr g) : g_(std::move(g)) {}
  GroupoidElement(GraphPtr g, Terms terms) : g_(std::move(g)) {
    for (auto &[p, c] : terms) add(p, c);
  }

  static GroupoidElement unit(const GraphPtr &g) {
    GroupoidElement z(g);
    for (std::size_t i = 0; i < g->vertex_count(); ++i) z.terms_.emplace(Path{static_cast<int>(i)}, R(1));
    return z;
  }
  static GroupoidElement idempotent(const GraphPtr &g, int i) { return path(g, {i}); }
  static GroupoidElement arrow(const GraphPtr &g, int i, int j) {
    if (!g->adjacent(i, j)) throw DomainError("no edge {" + g->name(i) + "," + g->name(j) + "}");
    return path(g, {i, j});
  }
  /// l_gamma for any valid path (reduced first).
  static GroupoidElement path(const GraphPtr &g, const Path &p, const R &c = R(1)) {
    if (p.empty()) throw DomainError("the groupoid has no empty path");
    GroupoidElement z(g);
    z.add(reduce_path(*g, p), c);
    return z;
  }

  [[nodiscard]] const GraphPtr &graph() const { return g_; }
  [[nodiscard]] const Terms &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] R coefficient(const Path &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? R(0) : it->second;
  }
  /// Longest basis path length occurring.
  [[nodiscard]] std::size_t max_length() const {
    std::size_t m = 0;
    for (const auto &[p, c] : terms_) m = std::max(m, path_length(p));
    return m;
  }

  /// Anti-involution l_gamma -> l_gamma-reversed.
  [[nodiscard]] GroupoidElement sigma() const {
    GroupoidElement z(g_);
    for (const auto &[p, c] : terms_) z.add(reversed(p), c);
    return z;
  }

  [[nodiscard]] std::string str() const { return linear_combination_str(*g_, terms_, ""); }

  friend GroupoidElement operator+(const GroupoidElement &a, const GroupoidElement &b) {
    require_same_graph(a.g_, b.g_);
    GroupoidElement z = a;
    for (const auto &[p, c] : b.terms_) z.add(p, c);
    return z;
  }
  friend GroupoidElement operator-(const GroupoidElement &a) {
    GroupoidElement z = a;
    for (auto &[p, c] : z.terms_) c = -c;
    return z;
  }
  friend GroupoidElement operator-(const GroupoidElement &a, const GroupoidElement &b) {
    return a + (-b);
  }
  friend GroupoidElement operator*(const R &s, const GroupoidElement &a) {
    GroupoidElement z(a.g_);
    for (const auto &[p, c] : a.terms_) z.add(p, s * c);
    return z;
  }
  friend GroupoidElement operator*(const GroupoidElement &a, const GroupoidElement &b) {
    require_same_graph(a.g_, b.g_);
    GroupoidElement z(a.g_);
    for (const auto &[p, c] : a.terms_)
      for (const auto &[q, d] : b.terms_) {
        if (p.back() != q.front()) continue;
        Path cat = p;
        cat.insert(cat.end(), q.begin() + 1, q.end());
        z.add(reduce_path(*a.g_, cat), c * d);
      }
    return z;
  }
  friend bool operator==(const GroupoidElement &a, const GroupoidElement &b) {
    return a.terms_ == b.terms_;
  }

  void add(const Path &p, const R &c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(p, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

private:
  GraphPtr g_;
  Terms terms_;
};

/// The generalized Laplace operator 1 + sum over oriented edges of s_ij l_ij.
template <Ring R> GroupoidElement<R> laplacian(const GraphPtr &g) {
  auto d = GroupoidElement<R>::unit(g);
  for (const auto &e : g->edges()) {
    R s = param_as<R>(e.s);
    d.add({e.u, e.v}, s);
    d.add({e.v, e.u}, s);
  }
  return d;
}

/// Laurent monomial attached to a reduced path by the cycle basis: tree
/// edges contribute nothing, generator edges x^(+1) along their
/// orientation and x^(-1) against it.
inline Laurent path_monomial(const Graph &g, const CycleBasis &cb, const Path &p) {
  std::map<std::string, int> pw;
  for (std::size_t l = 0; l + 1 < p.size(); ++l) {
    int e = g.edge_id(p[l], p[l + 1]);
    for (const auto &gen : cb.generators)
      if (gen.edge == e) pw[gen.variable] += (p[l] == gen.from) ? 1 : -1;
  }
  return Laurent::monomial(Rational(1), pw);
}

template <typename R> Laurent to_laurent(const R &c) {
  if constexpr (std::is_same_v<R, Laurent>) return c;
  else if constexpr (std::is_same_v<R, Rational>) return Laurent(c);
  else {
    static_assert(std::is_same_v<R, Laurent> || std::is_same_v<R, Rational>,
                  "matrix model needs rational or Laurent coefficients");
    return {};
  }
}

/// Matrix model of the groupoid algebra over the Laurent ring of the cycle
/// basis: a reduced path from i to j maps to its monomial times E_ij.
template <Ring R>
Matrix<Laurent> to_matrix(const GroupoidElement<R> &z, const CycleBasis &cb) {
  const Graph &g = *z.graph();
  if (!g.is_connected()) throw DomainError("matrix model needs a connected graph");
  std::size_t n = g.vertex_count();
  Matrix<Laurent> m(n, n);
  for (const auto &[p, c] : z.terms()) {
    auto i = static_cast<std::size_t>(p.front()), j = static_cast<std::size_t>(p.back());
    m(i, j) = m(i, j) + to_laurent(c) * path_monomial(g, cb, p);
  }
  return m;
}

/// Outcome of a truncated check of a statement about an infinite-dimensional
/// algebra, with notes about violated hypotheses or specializations used.
struct FilteredCheck {
  bool holds = false;
  std::vector<std::string> warnings;
};

namespace detail {

/// Rational parameters for a graph: constant parameters as given, symbolic
/// ones replaced by fixed pseudo-random rationals (a rank found at one
/// specialization is a lower bound for the generic rank).
inline Graph rational_specialization(const Graph &g, std::vector<std::string> &warnings) {
  std::vector<Laurent> params;
  bool symbolic = false;
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (const auto &e : g.edges()) {
    if (e.s.is_constant()) {
      params.push_back(e.s);
      continue;
    }
    symbolic = true;
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    long num = static_cast<long>((state >> 33) % 89) + 2;
    long den = static_cast<long>((state >> 17) % 13) + 1;
    params.emplace_back(Rational(num, den));
  }
  if (symbolic)
    warnings.push_back("symbolic edge parameters specialized to fixed rationals");
  return g.with_params(params);
}

inline void note_hypotheses(const Graph &g, std::vector<std::string> &warnings) {
  if (!g.is_connected()) warnings.push_back("graph is not connected");
  if (has_tail(g)) warnings.push_back("graph has a tail (vertex of degree 1)");
}

/// Rank of the linear map sending each basis path to `image(path)`.
template <typename F>
std::size_t filtered_rank(const std::vector<Path> &basis, F image) {
  std::map<Path, std::size_t> row_of;
  std::vector<std::vector<std::pair<Path, Rational>>> cols;
  for (const auto &p : basis) {
    std::vector<std::pair<Path, Rational>> col;
    auto img = image(p);
    for (const auto &[q, c] : img.terms()) {
      row_of.try_emplace(q, row_of.size());
      col.emplace_back(q, c);
    }
    cols.push_back(std::move(col));
  }
  Matrix<Rational> m(row_of.size(), basis.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto &[q, c] : cols[j]) m(row_of[q], j) = c;
  return rank(m);
}

} // namespace detail

/// Checks that z -> z*Delta and z -> Delta*z are injective on combinations
/// of reduced paths of length <= max_len.
inline FilteredCheck delta_no_zero_divisor_filtered(const Graph &graph, std::size_t max_len) {
  FilteredCheck r;
  detail::note_hypotheses(graph, r.warnings);
  auto g = share(detail::rational_specialization(graph, r.warnings));
  auto delta = laplacian<Rational>(g);
  auto all = enumerate_contracted_paths(*g, max_len);
  std::vector<Path> basis(all.begin() + 1, all.end());
  auto left = detail::filtered_rank(basis, [&](const Path &p) {
    return GroupoidElement<Rational>::path(g, p) * delta;
  });
  auto right = detail::filtered_rank(basis, [&](const Path &p) {
    return delta * GroupoidElement<Rational>::path(g, p);
  });
  r.holds = left == basis.size() && right == basis.size();
  return r;
}

} // namespace homotopes
