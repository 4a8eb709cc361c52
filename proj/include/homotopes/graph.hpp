#pragma once

#include "homotopes/cyclotomic.hpp"
#include "homotopes/errors.hpp"
#include "homotopes/laurent.hpp"
#include "homotopes/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

namespace homotopes {

/// Orders vertex identifiers: integers numerically, otherwise as strings,
/// integers before non-integers.
inline bool vertex_id_less(const std::string &a, const std::string &b) {
  auto is_int = [](const std::string &s) {
    if (s.empty() || s.size() > 18) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  bool ia = is_int(a), ib = is_int(b);
  if (ia && ib) return std::stoll(a) < std::stoll(b);
  if (ia != ib) return ia;
  return a < b;
}

/// Converts an edge parameter to the requested coefficient ring.
template <typename R> R param_as(const Laurent &p) {
  if constexpr (std::is_same_v<R, Laurent>) return p;
  else if constexpr (std::is_same_v<R, Rational>) return p.constant_value();
  else return R(p.constant_value());
}

/// A vertex sequence given by dense vertex indices.
using Path = std::vector<int>;

inline Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}
/// Edge count |p| (stay steps included).
inline std::size_t path_length(const Path &p) { return p.empty() ? 0 : p.size() - 1; }

/// Simply-laced graph whose edges carry nonzero parameters s_ij = s_ji.
class Graph {
public:
  struct Edge {
    int u, v;
    Laurent s;
  };

  Graph() = default;
  Graph(std::vector<std::string> vertices, const std::vector<Edge> &edges)
      : names_(std::move(vertices)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], static_cast<int>(i)).second)
        throw DomainError("duplicate vertex '" + names_[i] + "'");
    }
    adj_.assign(names_.size(), std::vector<int>(names_.size(), -1));
    nbrs_.assign(names_.size(), {});
    for (const auto &e : edges) add_edge(e.u, e.v, e.s);
    for (auto &n : nbrs_) std::sort(n.begin(), n.end());
  }

  /// Builds from vertex names and (u, v, s) triples given by name.
  static Graph from_names(std::vector<std::string> vertices,
                          const std::vector<std::tuple<std::string, std::string, Laurent>> &edges) {
    Graph g(std::move(vertices), {});
    for (const auto &[u, v, s] : edges) g.add_edge(g.index_of(u), g.index_of(v), s);
    for (auto &n : g.nbrs_) std::sort(n.begin(), n.end());
    return g;
  }

  /// Builds from an ordered parameter table s(u,v); rejects s(u,v) != s(v,u).
  static Graph from_directed_params(std::vector<std::string> vertices,
                                    const std::map<std::pair<std::string, std::string>, Laurent> &s) {
    std::vector<std::tuple<std::string, std::string, Laurent>> edges;
    for (const auto &[uv, val] : s) {
      const auto &[u, v] = uv;
      auto back = s.find({v, u});
      if (back != s.end() && !(back->second == val))
        throw DomainError("edge parameter not symmetric on {" + u + "," + v + "}: " + val.str() +
                          " vs " + back->second.str());
      if (back != s.end() && vertex_id_less(v, u)) continue;
      edges.emplace_back(u, v, val);
    }
    return from_names(std::move(vertices), edges);
  }

  [[nodiscard]] std::size_t vertex_count() const { return names_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<std::string> &vertex_names() const { return names_; }
  [[nodiscard]] const std::string &name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] int index_of(const std::string &name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw DomainError("unknown vertex '" + name + "'");
    return it->second;
  }
  [[nodiscard]] const std::vector<Edge> &edges() const { return edges_; }
  [[nodiscard]] const std::vector<int> &neighbors(int v) const {
    return nbrs_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] std::size_t degree(int v) const { return neighbors(v).size(); }
  /// Edge index of {u,v}, or -1.
  [[nodiscard]] int edge_id(int u, int v) const {
    return adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  }
  [[nodiscard]] bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }
  [[nodiscard]] const Laurent &s(int u, int v) const {
    int e = edge_id(u, v);
    if (e < 0) throw DomainError("no edge {" + name(u) + "," + name(v) + "}");
    return edges_[static_cast<std::size_t>(e)].s;
  }
  /// Vertex indices sorted by identifier order.
  [[nodiscard]] std::vector<int> sorted_vertices() const {
    std::vector<int> order(names_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vertex_id_less(name(a), name(b)); });
    return order;
  }
  [[nodiscard]] bool id_less(int a, int b) const { return vertex_id_less(name(a), name(b)); }

  /// Copy with new parameters, one per edge in edge order.
  [[nodiscard]] Graph with_params(const std::vector<Laurent> &params) const {
    if (params.size() != edges_.size())
      throw DomainError("expected " + std::to_string(edges_.size()) + " edge parameters, got " +
                        std::to_string(params.size()));
    Graph g = *this;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i].is_zero()) throw DomainError("edge parameter must be nonzero");
      g.edges_[i].s = params[i];
    }
    return g;
  }

  [[nodiscard]] bool is_valid_path(const Path &p) const {
    for (int v : p)
      if (v < 0 || static_cast<std::size_t>(v) >= names_.size()) return false;
    for (std::size_t l = 0; l + 1 < p.size(); ++l)
      if (p[l] != p[l + 1] && !adjacent(p[l], p[l + 1])) return false;
    return true;
  }
  void require_path(const Path &p) const {
    if (!is_valid_path(p)) throw DomainError("invalid path " + path_str(p));
  }

  [[nodiscard]] Path path_from_names(const std::vector<std::string> &ids) const {
    Path p;
    for (const auto &id : ids) p.push_back(index_of(id));
    return p;
  }
  [[nodiscard]] std::string path_str(const Path &p) const {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s += ",";
      s += (p[i] >= 0 && static_cast<std::size_t>(p[i]) < names_.size()) ? name(p[i])
                                                                       : std::to_string(p[i]);
    }
    return s + "]";
  }

  /// Connected components, each listed in identifier order; components
  /// ordered by their smallest vertex.
  [[nodiscard]] std::vector<std::vector<int>> components() const {
    std::vector<int> comp(names_.size(), -1);
    std::vector<std::vector<int>> out;
    for (int start : sorted_vertices()) {
      if (comp[static_cast<std::size_t>(start)] >= 0) continue;
      std::vector<int> members;
      std::vector<int> stack{start};
      comp[static_cast<std::size_t>(start)] = static_cast<int>(out.size());
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        members.push_back(v);
        for (int w : neighbors(v))
          if (comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
            stack.push_back(w);
          }
      }
      std::sort(members.begin(), members.end(), [&](int a, int b) { return id_less(a, b); });
      out.push_back(std::move(members));
    }
    return out;
  }
  [[nodiscard]] bool is_connected() const { return components().size() <= 1; }

  friend bool operator==(const Graph &a, const Graph &b) {
    if (a.names_ != b.names_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const auto &x = a.edges_[i], &y = b.edges_[i];
      if (x.u != y.u || x.v != y.v || !(x.s == y.s)) return false;
    }
    return true;
  }

private:
  void add_edge(int u, int v, const Laurent &s) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= names_.size() ||
        static_cast<std::size_t>(v) >= names_.size())
      throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("loop at vertex '" + name(u) + "'");
    if (adjacent(u, v)) throw DomainError("multi-edge {" + name(u) + "," + name(v) + "}");
    if (s.is_zero()) throw DomainError("zero parameter on edge {" + name(u) + "," + name(v) + "}");
    int id = static_cast<int>(edges_.size());
    edges_.push_back({u, v, s});
    adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = id;
    adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = id;
    nbrs_[static_cast<std::size_t>(u)].push_back(v);
    nbrs_[static_cast<std::size_t>(v)].push_back(u);
  }

  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> nbrs_;
};

/// Default symbolic parameter name of edge {u,v}.
inline std::string default_param_name(const std::string &u, const std::string &v) {
  return "s_" + u + "_" + v;
}

namespace graphs {

inline std::vector<std::string> numbered(std::size_t n, std::size_t first = 1) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(first + i));
  return v;
}

/// Builds a graph on vertices "1".."n" from index pairs; parameters are
/// symbolic when `params` is empty.
inline Graph from_pairs(std::size_t n, const std::vector<std::pair<int, int>> &pairs,
                        const std::vector<Laurent> &params = {}) {
  auto names = numbered(n);
  std::vector<Graph::Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [u, v] = pairs[k];
    Laurent s = params.empty()
                    ? Laurent::variable(default_param_name(names[static_cast<std::size_t>(u)],
                                                           names[static_cast<std::size_t>(v)]))
                    : params.at(k);
    edges.push_back({u, v, s});
  }
  return Graph(names, edges);
}

/// Cycle 1-2-...-n-1 with edges (i, i+1) and (n, 1) in that order.
inline Graph cycle(std::size_t n, const std::vector<Laurent> &params = {}) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  pairs.emplace_back(static_cast<int>(n - 1), 0);
  return from_pairs(n, pairs, params);
}

/// Path graph 1-2-...-n.
inline Graph path(std::size_t n, const std::vector<Laurent> &params = {}) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return from_pairs(n, pairs, params);
}

inline Graph edgeless(std::size_t n) { return from_pairs(n, {}); }

/// Complete m-partite graph with parts of size n; part k holds vertices
/// named "k.i" (1-based), and vertices in different parts are adjacent.
inline Graph complete_multipartite(std::size_t m, std::size_t n,
                                   const std::optional<Laurent> &param = std::nullopt) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(k) + "." + std::to_string(i));
  std::vector<Graph::Edge> edges;
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b)
      if (a / n != b / n)
        edges.push_back({static_cast<int>(a), static_cast<int>(b),
                         param ? *param : Laurent::variable(default_param_name(names[a], names[b]))});
  return Graph(names, edges);
}

template <typename Rng> Graph random_tree(std::size_t n, Rng &rng) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    pairs.emplace_back(static_cast<int>(pick(rng)), static_cast<int>(v));
  }
  return from_pairs(n, pairs);
}

/// Nonzero rational p/q with |p| <= 5, 1 <= q <= 4.
template <typename Rng> Rational random_nonzero_rational(Rng &rng) {
  std::uniform_int_distribution<long> num(1, 5), den(1, 4), sign(0, 1);
  long p = num(rng);
  return Rational(sign(rng) ? -p : p, den(rng));
}

/// n vertices, m distinct edges chosen uniformly, random rational parameters.
template <typename Rng> Graph random_graph(std::size_t n, std::size_t m, Rng &rng) {
  std::vector<std::pair<int, int>> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(static_cast<int>(i), static_cast<int>(j));
  if (m > all.size()) throw DomainError("too many edges for " + std::to_string(n) + " vertices");
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(m);
  std::sort(all.begin(), all.end());
  std::vector<Laurent> params;
  for (std::size_t k = 0; k < m; ++k) params.emplace_back(random_nonzero_rational(rng));
  return from_pairs(n, all, params);
}

} // namespace graphs

/// Result of contracting a path: the contracted representative and, per
/// edge index, the number of backtracks i-j-i removed over that edge.
struct Contraction {
  Path path;
  std::vector<int> q;
};

/// Contracted form of a valid path. Stay steps are dropped and backtracks
/// cancelled by a single stack pass (free reduction), which yields the
/// unique contracted representative.
inline Contraction contract(const Graph &g, const Path &p) {
  g.require_path(p);
  Contraction c{{}, std::vector<int>(g.edge_count(), 0)};
  auto &st = c.path;
  for (int v : p) {
    if (!st.empty() && st.back() == v) continue;
    if (st.size() >= 2 && st[st.size() - 2] == v) {
      ++c.q[static_cast<std::size_t>(g.edge_id(st.back(), v))];
      st.pop_back();
      continue;
    }
    st.push_back(v);
  }
  return c;
}

inline bool is_contracted(const Path &p) {
  for (std::size_t l = 0; l + 1 < p.size(); ++l) {
    if (p[l] == p[l + 1]) return false;
    if (l + 2 < p.size() && p[l] == p[l + 2]) return false;
  }
  return true;
}

/// All contracted paths of length <= max_len: the empty path, then by
/// length, lexicographically in vertex index within each length.
inline std::vector<Path> enumerate_contracted_paths(const Graph &g, std::size_t max_len) {
  std::vector<Path> out{Path{}};
  std::vector<Path> level;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) level.push_back({static_cast<int>(v)});
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::vector<Path> next;
    for (const auto &p : level)
      for (int w : g.neighbors(p.back())) {
        if (p.size() >= 2 && p[p.size() - 2] == w) continue;
        Path q = p;
        q.push_back(w);
        next.push_back(std::move(q));
      }
    if (next.empty()) break;
    level = std::move(next);
  }
  return out;
}

inline bool has_tail(const Graph &g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<int>(v)) == 1) return true;
  return false;
}

/// Spanning forest plus a basis of H_1 given by the non-tree edges.
struct CycleBasis {
  struct Generator {
    int from, to;        // oriented non-tree edge, from < to in identifier order
    int edge;            // edge index
    std::string variable;
    Path cycle;          // closed path from -> to -> (tree) -> from
  };
  std::vector<int> tree_edges;
  std::vector<int> parent; // parent vertex in the forest, -1 at roots
  std::vector<int> root;
  std::vector<Generator> generators;

  [[nodiscard]] std::size_t rank() const { return generators.size(); }
  [[nodiscard]] std::vector<std::string> variables() const {
    std::vector<std::string> v;
    for (const auto &g : generators) v.push_back(g.variable);
    return v;
  }
};

/// Variable names for k cycle generators: "x" when k = 1, else x1..xk.
inline std::vector<std::string> generator_names(std::size_t k) {
  if (k == 1) return {"x"};
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= k; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

/// Breadth-first spanning forest from the smallest vertex of each component,
/// neighbors visited in identifier order.
inline CycleBasis cycle_basis(const Graph &g) {
  CycleBasis cb;
  std::size_t n = g.vertex_count();
  cb.parent.assign(n, -1);
  cb.root.assign(n, -1);
  std::vector<bool> in_tree(g.edge_count(), false);
  for (const auto &comp : g.components()) {
    int r = comp.front();
    cb.root[static_cast<std::size_t>(r)] = r;
    std::queue<int> qu;
    qu.push(r);
    while (!qu.empty()) {
      int v = qu.front();
      qu.pop();
      std::vector<int> nb = g.neighbors(v);
      std::sort(nb.begin(), nb.end(), [&](int a, int b) { return g.id_less(a, b); });
      for (int w : nb) {
        if (cb.root[static_cast<std::size_t>(w)] >= 0) continue;
        cb.root[static_cast<std::size_t>(w)] = r;
        cb.parent[static_cast<std::size_t>(w)] = v;
        int e = g.edge_id(v, w);
        in_tree[static_cast<std::size_t>(e)] = true;
        cb.tree_edges.push_back(e);
        qu.push(w);
      }
    }
  }
  auto to_root = [&](int v) {
    Path p{v};
    while (cb.parent[static_cast<std::size_t>(v)] >= 0) {
      v = cb.parent[static_cast<std::size_t>(v)];
      p.push_back(v);
    }
    return p;
  };
  std::vector<int> non_tree;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!in_tree[e]) non_tree.push_back(static_cast<int>(e));
  auto names = generator_names(non_tree.size());
  for (std::size_t k = 0; k < non_tree.size(); ++k) {
    const auto &ed = g.edges()[static_cast<std::size_t>(non_tree[k])];
    int a = ed.u, b = ed.v;
    if (g.id_less(b, a)) std::swap(a, b);
    // a -> b, then b up to the root and back down to a; contraction removes
    // the shared part of the two tree paths.
    Path up_b = to_root(b), up_a = to_root(a);
    Path cyc{a};
    cyc.insert(cyc.end(), up_b.begin(), up_b.end());
    cyc.insert(cyc.end(), up_a.rbegin() + 1, up_a.rend());
    cb.generators.push_back({a, b, non_tree[k], names[k], contract(g, cyc).path});
  }
  return cb;
}

} // namespace homotopes
