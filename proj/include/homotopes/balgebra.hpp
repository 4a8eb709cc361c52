#pragma once

#include "homotopes/graph.hpp"
#include "homotopes/groupoid.hpp"

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace homotopes {

/// Product of two basis paths of B(Gamma) before scalars: the contracted
/// concatenation and its backtrack exponents, or nullopt for zero. The empty
/// path is the unit.
inline std::optional<Contraction> basis_product(const Graph &g, const Path &a, const Path &b) {
  if (a.empty()) return Contraction{b, std::vector<int>(g.edge_count(), 0)};
  if (b.empty()) return Contraction{a, std::vector<int>(g.edge_count(), 0)};
  if (a.back() != b.front() && !g.adjacent(a.back(), b.front())) return std::nullopt;
  Path cat = a;
  cat.insert(cat.end(), b.begin(), b.end());
  return contract(g, cat);
}

/// prod_e s_e^(2 q_e).
template <Ring R> R backtrack_weight(const Graph &g, const std::vector<int> &q) {
  R w(1);
  for (std::size_t e = 0; e < q.size(); ++e) {
    if (q[e] == 0) continue;
    R s = param_as<R>(g.edges()[e].s);
    R s2 = s * s;
    for (int k = 0; k < q[e]; ++k) w = w * s2;
  }
  return w;
}

/// Element of B(Gamma): a combination of contracted paths; the empty path
/// is the unit 1_B.
template <Ring R> class BElement {
public:
  using Terms = std::map<Path, R>;

  explicit BElement(GraphPtr g) : g_(std::move(g)) {}

  static BElement one(const GraphPtr &g) { return basis(g, {}); }
  /// x_i.
  static BElement generator(const GraphPtr &g, int i) { return basis(g, {i}); }
  /// x_gamma for a valid path (contracted first, with its scalar).
  static BElement path(const GraphPtr &g, const Path &p, const R &c = R(1)) {
    BElement z(g);
    if (p.empty()) {
      z.add({}, c);
      return z;
    }
    auto ct = contract(*g, p);
    z.add(ct.path, c * backtrack_weight<R>(*g, ct.q));
    return z;
  }

  [[nodiscard]] const GraphPtr &graph() const { return g_; }
  [[nodiscard]] const Terms &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] R coefficient(const Path &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? R(0) : it->second;
  }
  /// True when the element lies in the augmentation ideal B+.
  [[nodiscard]] bool in_augmentation_ideal() const { return coefficient({}).is_zero(); }

  /// Anti-automorphism fixing every x_i: x_gamma -> x_gamma-reversed.
  [[nodiscard]] BElement sigma() const {
    BElement z(g_);
    for (const auto &[p, c] : terms_) z.add(reversed(p), c);
    return z;
  }

  [[nodiscard]] std::string str() const { return linear_combination_str(*g_, terms_, "x"); }

  friend BElement operator+(const BElement &a, const BElement &b) {
    require_same_graph(a.g_, b.g_);
    BElement z = a;
    for (const auto &[p, c] : b.terms_) z.add(p, c);
    return z;
  }
  friend BElement operator-(const BElement &a) {
    BElement z = a;
    for (auto &[p, c] : z.terms_) c = -c;
    return z;
  }
  friend BElement operator-(const BElement &a, const BElement &b) { return a + (-b); }
  friend BElement operator*(const R &s, const BElement &a) {
    BElement z(a.g_);
    for (const auto &[p, c] : a.terms_) z.add(p, s * c);
    return z;
  }
  friend BElement operator*(const BElement &a, const BElement &b) { return b_mul(a, b); }
  friend bool operator==(const BElement &a, const BElement &b) { return a.terms_ == b.terms_; }

  friend BElement b_mul(const BElement &a, const BElement &b) {
    require_same_graph(a.g_, b.g_);
    BElement z(a.g_);
    for (const auto &[p, c] : a.terms_)
      for (const auto &[q, d] : b.terms_) {
        auto pr = basis_product(*a.g_, p, q);
        if (!pr) continue;
        z.add(pr->path, c * d * backtrack_weight<R>(*a.g_, pr->q));
      }
    return z;
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
  static BElement basis(const GraphPtr &g, const Path &p) {
    BElement z(g);
    z.terms_.emplace(p, R(1));
    return z;
  }

  GraphPtr g_;
  Terms terms_;
};

/// psi_1(x_i) = e_i + sum_j s_ij l_ij, psi_2(x_i) = e_i + sum_j s_ji l_ji,
/// extended multiplicatively along each basis path; psi(1_B) = 1.
template <Ring R> GroupoidElement<R> psi(int which, const BElement<R> &b) {
  if (which != 1 && which != 2) throw DomainError("psi index must be 1 or 2");
  const GraphPtr &g = b.graph();
  std::vector<GroupoidElement<R>> gens;
  for (std::size_t i = 0; i < g->vertex_count(); ++i) {
    int v = static_cast<int>(i);
    auto z = GroupoidElement<R>::idempotent(g, v);
    for (int j : g->neighbors(v)) {
      R s = param_as<R>(g->s(v, j));
      z.add(which == 1 ? Path{v, j} : Path{j, v}, s);
    }
    gens.push_back(std::move(z));
  }
  GroupoidElement<R> out(g);
  for (const auto &[p, c] : b.terms()) {
    auto t = GroupoidElement<R>::unit(g);
    for (int v : p) t = t * gens[static_cast<std::size_t>(v)];
    out = out + c * t;
  }
  return out;
}

/// Identification of B+ with the groupoid algebra: x_gamma maps to
/// (prod of s over the edges of gamma) l_gamma.
template <Ring R> GroupoidElement<R> theta(const BElement<R> &b) {
  const GraphPtr &g = b.graph();
  GroupoidElement<R> out(g);
  for (const auto &[p, c] : b.terms()) {
    if (p.empty()) throw DomainError("the unit of B lies outside the augmentation ideal");
    R w = c;
    for (std::size_t l = 0; l + 1 < p.size(); ++l) w = w * param_as<R>(g->s(p[l], p[l + 1]));
    out.add(p, w);
  }
  return out;
}

/// Checks theta(x_gamma x_delta) = theta(x_gamma) Delta theta(x_delta) for
/// all nonempty basis paths of length <= max_len.
template <Ring R> bool check_homotope_iso(const Graph &graph, std::size_t max_len) {
  auto g = share(graph);
  auto delta = laplacian<R>(g);
  auto paths = enumerate_contracted_paths(*g, max_len);
  std::vector<GroupoidElement<R>> th, th_delta;
  for (std::size_t k = 1; k < paths.size(); ++k) {
    th.push_back(theta(BElement<R>::path(g, paths[k])));
    th_delta.push_back(th.back() * delta);
  }
  for (std::size_t a = 1; a < paths.size(); ++a)
    for (std::size_t b = 1; b < paths.size(); ++b) {
      auto lhs = theta(b_mul(BElement<R>::path(g, paths[a]), BElement<R>::path(g, paths[b])));
      if (!(lhs == th_delta[a - 1] * th[b - 1])) return false;
    }
  return true;
}

/// Associativity of the contracted-path product on all triples of basis
/// paths (empty path included) of length <= max_len. Paths are interned and
/// pairwise products memoized, so each triple costs two table lookups.
template <Ring R> bool check_associativity(const Graph &g, std::size_t max_len) {
  struct Hash {
    std::size_t operator()(const Path &p) const {
      std::size_t h = p.size();
      for (int v : p) h = h * 1000003u ^ static_cast<std::size_t>(v);
      return h;
    }
  };
  std::vector<Path> paths;
  std::unordered_map<Path, int, Hash> ids;
  auto intern = [&](const Path &p) {
    auto [it, fresh] = ids.try_emplace(p, static_cast<int>(paths.size()));
    if (fresh) paths.push_back(p);
    return it->second;
  };
  auto basis = enumerate_contracted_paths(g, max_len);
  for (const auto &p : basis) intern(p);

  struct Prod {
    int id;
    R coeff;
  };
  std::unordered_map<std::uint64_t, std::optional<Prod>> memo;
  auto mul = [&](int a, int b) -> const std::optional<Prod> & {
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::optional<Prod> r;
    if (auto pr = basis_product(g, paths[static_cast<std::size_t>(a)],
                                paths[static_cast<std::size_t>(b)])) {
      Path res = pr->path;
      r = Prod{intern(res), backtrack_weight<R>(g, pr->q)};
    }
    return memo.emplace(key, std::move(r)).first->second;
  };

  int n = static_cast<int>(basis.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto ab = mul(a, b);
      for (int c = 0; c < n; ++c) {
        auto bc = mul(b, c);
        std::optional<Prod> left, right;
        if (ab) {
          const auto &t = mul(ab->id, c);
          if (t) left = Prod{t->id, ab->coeff * t->coeff};
        }
        if (bc) {
          const auto &t = mul(a, bc->id);
          if (t) right = Prod{t->id, bc->coeff * t->coeff};
        }
        if (left.has_value() != right.has_value()) return false;
        if (left && (left->id != right->id || !(left->coeff == right->coeff))) return false;
      }
    }
  return true;
}

/// Checks that psi_1 and psi_2 are injective on the span of contracted
/// paths of length <= max_len (exact rank over the rationals).
inline FilteredCheck psi_injectivity_filtered(const Graph &graph, std::size_t max_len) {
  FilteredCheck r;
  detail::note_hypotheses(graph, r.warnings);
  auto g = share(detail::rational_specialization(graph, r.warnings));
  auto basis = enumerate_contracted_paths(*g, max_len);
  bool ok = true;
  for (int which : {1, 2}) {
    auto rk = detail::filtered_rank(basis, [&](const Path &p) {
      return psi(which, BElement<Rational>::path(g, p));
    });
    ok = ok && rk == basis.size();
  }
  r.holds = ok;
  return r;
}

} // namespace homotopes
