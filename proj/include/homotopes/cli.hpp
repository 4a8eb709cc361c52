#pragma once

// Command-line front end. run() parses argv-style arguments, executes one
// subcommand and writes a JSON report to `out`.

#include "homotopes/homotopes.hpp"
#include "homotopes/io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace homotopes::cli {

using json = nlohmann::json;

inline constexpr const char *kVersion = "0.1.0";

struct Options {
  std::string graph, matrix, config, s, chi, at, a, b, delta;
  std::string algebra = "mat";
  std::string mode = "exact";
  std::string eps = "1/10000000000";
  long n = -1, p = -1, max_len = -1, n_disc = -1, n_cyc = -1, edges = -1;
  long long seed = 0;
  bool seed_given = false;
  bool pretty = false;
};

/// 64-bit FNV-1a.
class Digest {
public:
  void add(std::string_view s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001b3ull;
    }
    h_ ^= 0xff;
    h_ *= 0x100000001b3ull;
  }
  [[nodiscard]] std::string hex() const {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << h_;
    return ss.str();
  }

private:
  std::uint64_t h_ = 0xcbf29ce484222325ull;
};

struct Context {
  Options o;
  Digest digest;

  json read_json(const std::string &path) {
    std::string text = io::read_text_file(path);
    digest.add(text);
    try {
      return json::parse(text);
    } catch (const json::parse_error &e) {
      throw ParseError("'" + path + "': " + e.what());
    }
  }
};

namespace detail {

inline std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

inline const std::string &need(const std::string &v, const char *flag) {
  if (v.empty()) throw ParseError(std::string("missing required flag ") + flag);
  return v;
}

inline long need(long v, const char *flag) {
  if (v < 0) throw ParseError(std::string("missing required flag ") + flag);
  return v;
}

inline std::size_t max_len(const Options &o, std::size_t fallback) {
  return o.max_len < 0 ? fallback : static_cast<std::size_t>(o.max_len);
}

inline json rows_json(const Matrix<Laurent> &m) { return io::laurent_matrix_to_json(m).at("rows"); }

inline json rows_json(const Matrix<Rational> &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

template <typename T> json str_list(const std::vector<T> &v) {
  json a = json::array();
  for (const auto &x : v) a.push_back(x.str());
  return a;
}

inline Graph load_graph(Context &ctx) {
  Graph g = io::graph_from_json(ctx.read_json(need(ctx.o.graph, "--graph")));
  if (!ctx.o.s.empty()) {
    auto s = io::parse_laurent_list(ctx.o.s);
    if (s.size() != g.edge_count())
      throw DomainError("--s has " + std::to_string(s.size()) + " values, graph has " +
                        std::to_string(g.edge_count()) + " edges");
    g = g.with_params(s);
  }
  return g;
}

/// "1,2,1" -> path by vertex names; "" or "[]" -> empty path.
inline Path parse_path(const Graph &g, std::string text) {
  if (!text.empty() && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  if (text.empty()) return {};
  return g.path_from_names(split(text, ','));
}

/// Vertices of a cycle graph in traversal order from the smallest vertex
/// towards its smaller neighbour, with the edge parameters met on the way.
inline std::pair<std::vector<int>, std::vector<Laurent>> cycle_order(const Graph &g) {
  std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() != n || !g.is_connected())
    throw DomainError("graph is not a cycle");
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(static_cast<int>(v)) != 2) throw DomainError("graph is not a cycle");
  auto sorted = g.sorted_vertices();
  int start = sorted.front();
  auto nb = g.neighbors(start);
  int next = g.id_less(nb[0], nb[1]) ? nb[0] : nb[1];
  std::vector<int> order{start};
  std::vector<Laurent> s;
  int prev = start, cur = next;
  while (cur != start) {
    s.push_back(g.s(prev, cur));
    order.push_back(cur);
    auto ns = g.neighbors(cur);
    int nxt = ns[0] == prev ? ns[1] : ns[0];
    prev = cur;
    cur = nxt;
  }
  s.push_back(g.s(prev, start));
  return {order, s};
}

inline std::vector<Rational> numeric(const std::vector<Laurent> &s, const char *what) {
  std::vector<Rational> out;
  for (const auto &p : s) {
    if (!p.is_constant()) throw DomainError(std::string(what) + " must be numbers; got " + p.str() + " (use --s)");
    out.push_back(p.constant_value());
  }
  return out;
}

inline json snf_json(const SNFResult &r) {
  return {{"variable", r.variable},
          {"factors", str_list(r.factors)},
          {"free_rank", r.free_rank()},
          {"torsion", str_list(r.torsion_factors())},
          {"U", rows_json(r.U)},
          {"V", rows_json(r.V)}};
}

// ---- graph -------------------------------------------------------------

inline json graph_basis(Context &ctx) {
  Graph g = load_graph(ctx);
  std::size_t len = max_len(ctx.o, 3);
  auto paths = enumerate_contracted_paths(g, len);
  json ps = json::array();
  for (const auto &p : paths) ps.push_back(g.path_str(p));
  return {{"max_len", len}, {"count", paths.size()}, {"paths", ps}};
}

inline json graph_mul(Context &ctx) {
  auto g = share(load_graph(ctx));
  using B = BElement<Laurent>;
  if (!ctx.o.a.empty() || !ctx.o.b.empty()) {
    auto x = B::path(g, parse_path(*g, need(ctx.o.a, "--a")));
    auto y = B::path(g, parse_path(*g, need(ctx.o.b, "--b")));
    return {{"a", x.str()}, {"b", y.str()}, {"product", (x * y).str()}};
  }
  std::size_t len = max_len(ctx.o, 1);
  auto paths = enumerate_contracted_paths(*g, len);
  json basis = json::array(), table = json::array();
  for (const auto &p : paths) basis.push_back("x" + g->path_str(p));
  for (const auto &p : paths) {
    json row = json::array();
    for (const auto &q : paths) row.push_back((B::path(g, p) * B::path(g, q)).str());
    table.push_back(row);
  }
  return {{"max_len", len}, {"basis", basis}, {"table", table}};
}

inline json graph_psi(Context &ctx) {
  auto g = share(load_graph(ctx));
  using B = BElement<Laurent>;
  auto delta = laplacian<Laurent>(g);
  std::vector<Path> paths;
  if (!ctx.o.a.empty()) {
    paths.push_back(parse_path(*g, ctx.o.a));
  } else {
    auto all = enumerate_contracted_paths(*g, max_len(ctx.o, 2));
    paths.assign(all.begin() + 1, all.end());
  }
  json rows = json::array();
  for (const auto &p : paths) {
    auto x = B::path(g, p);
    json row{{"element", x.str()}, {"psi1", psi(1, x).str()}, {"psi2", psi(2, x).str()}};
    if (!p.empty()) row["theta"] = theta(x).str();
    rows.push_back(row);
  }
  return {{"laplacian", delta.str()}, {"images", rows}};
}

inline json graph_random(Context &ctx) {
  if (!ctx.o.seed_given) throw ParseError("graph random needs an explicit --seed");
  std::size_t n = static_cast<std::size_t>(need(ctx.o.n, "--n"));
  if (n < 1) throw DomainError("need at least one vertex");
  std::mt19937_64 rng(static_cast<std::uint64_t>(ctx.o.seed));
  std::size_t most = n * (n - 1) / 2;
  std::size_t m = ctx.o.edges >= 0 ? static_cast<std::size_t>(ctx.o.edges)
                                   : std::uniform_int_distribution<std::size_t>(0, most)(rng);
  Graph g = graphs::random_graph(n, m, rng);
  return {{"seed", ctx.o.seed}, {"graph", io::graph_to_json(g)}};
}

// ---- laplacian ---------------------------------------------------------

inline json laplacian_det(Context &ctx) {
  auto g = share(load_graph(ctx));
  auto cb = cycle_basis(*g);
  auto m = to_matrix(laplacian<Laurent>(g), cb);
  return {{"variables", cb.variables()}, {"matrix", rows_json(m)}, {"determinant", det(m).str()}};
}

inline json laplacian_strata(Context &ctx) {
  Graph g = io::graph_from_json(ctx.read_json(need(ctx.o.graph, "--graph")));
  auto [order, params] = cycle_order(g);
  std::vector<Rational> s = ctx.o.s.empty() ? numeric(params, "edge parameters")
                                            : numeric(io::parse_laurent_list(ctx.o.s), "--s values");
  auto r = cyclic_strata(g.vertex_count(), s);
  json roots = json::array();
  for (const auto &root : r.roots)
    roots.push_back({{"x", point_str(root.value)},
                     {"rational", root.rational},
                     {"corank", root.corank},
                     {"evaluated_corank", root.evaluated_corank}});
  json ord = json::array();
  for (int v : order) ord.push_back(g.name(v));
  return {{"n", r.n},
          {"cycle", ord},
          {"s", str_list(s)},
          {"determinant", r.determinant.str()},
          {"A", r.A.str()},
          {"B", r.B.str()},
          {"discriminant", r.discriminant.str()},
          {"double_root", r.double_root},
          {"roots", roots},
          {"strata_dims", r.strata_dims}};
}

inline json laplacian_corank(Context &ctx) {
  auto g = share(load_graph(ctx));
  numeric([&] {
    std::vector<Laurent> v;
    for (const auto &e : g->edges()) v.push_back(e.s);
    return v;
  }(), "edge parameters");
  auto cb = cycle_basis(*g);
  auto m = to_matrix(laplacian<Laurent>(g), cb);
  auto vars = cb.variables();
  std::vector<Rational> at = ctx.o.at.empty() ? std::vector<Rational>{} : io::parse_rational_list(ctx.o.at);
  if (at.size() != vars.size())
    throw DomainError("--at needs " + std::to_string(vars.size()) + " values (one per cycle generator)");
  std::map<std::string, Rational> point;
  json pt = json::object();
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (at[k].is_zero()) throw DomainError("evaluation point must be nonzero");
    point.emplace(vars[k], at[k]);
    pt[vars[k]] = at[k].str();
  }
  auto e = m.map([&](const Laurent &p) { return p.eval<Rational>(point); });
  json r{{"at", pt}, {"size", m.rows()}, {"corank", m.rows() - rank(e)}};
  if (vars.size() == 1) r["corank_by_minors"] = corank_at(m, at[0]);
  return r;
}

// ---- snf ---------------------------------------------------------------

inline json snf(Context &ctx) {
  auto m = io::laurent_matrix_from_json(ctx.read_json(need(ctx.o.matrix, "--matrix")));
  auto r = smith_normal_form(m);
  json j = snf_json(r);
  j["matrix"] = rows_json(m);
  return j;
}

// ---- config ------------------------------------------------------------

template <typename F> json cycles_json(const Graph &g) {
  json a = json::array();
  for (const auto &gen : cycle_basis(g).generators) a.push_back(g.path_str(gen.cycle));
  return a;
}

template <typename F> json config_verb(Context &ctx, const std::string &verb, const json &file) {
  unsigned m = file.contains("conductor") ? io::conductor_of(file) : 1;
  auto c = io::config_from_json<F>(file);
  if (verb == "check") {
    auto r = check_config(c);
    return {{"ok", r.ok}, {"failures", r.failures}, {"minimal", is_minimal(c)}};
  }
  if (verb == "sclass")
    return {{"cycles", cycles_json<F>(*c.graph())}, {"s", str_list([&] {
               std::vector<F> v = s_class(c);
               if constexpr (std::is_same_v<F, Cyclotomic>)
                 for (auto &x : v) x = x.lift(m);
               return v;
             }())}};
  if (verb == "minimalize") return {{"config", io::config_to_json(minimalize(c), m)}};
  if (verb == "dualize") return {{"config", io::config_to_json(dualize(c), m)}};
  throw ParseError("unknown config verb '" + verb + "'");
}

inline json config(Context &ctx, const std::string &verb) {
  if (verb == "from-character") {
    Graph g = load_graph(ctx);
    auto chi = ctx.o.chi.empty() ? std::vector<Rational>{} : io::parse_rational_list(ctx.o.chi);
    auto c = from_character<Rational>(g, chi);
    auto r = check_config(c);
    return {{"config", io::config_to_json(c)},
            {"ok", r.ok},
            {"failures", r.failures},
            {"cycles", cycles_json<Rational>(g)},
            {"s", str_list(s_class(c))}};
  }
  json file = ctx.read_json(need(ctx.o.config, "--config"));
  if (file.contains("conductor")) return config_verb<Cyclotomic>(ctx, verb, file);
  return config_verb<Rational>(ctx, verb, file);
}

// ---- hadamard ----------------------------------------------------------

inline bool approx_mode(const Options &o) {
  if (o.mode == "exact") return false;
  if (o.mode == "approx") return true;
  throw ParseError("--mode must be exact or approx");
}

inline double eps_value(const Options &o) {
  Rational e = Rational::parse(o.eps);
  if (e.sign() <= 0) throw DomainError("--eps must be positive");
  return e.to_double();
}

/// Approximate entries: [re, im], a plain number, or a cyclotomic literal
/// (which needs a conductor).
inline approx::CMatrix complex_matrix_from_json(const json &j) {
  if (!j.contains("rows")) throw ParseError("matrix needs a \"rows\" array");
  unsigned m = j.contains("conductor") ? io::conductor_of(j) : 0;
  approx::CMatrix out;
  for (const auto &r : j.at("rows")) {
    std::vector<std::complex<double>> row;
    for (const auto &v : r) {
      if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        row.emplace_back(v[0].get<double>(), v[1].get<double>());
      else if (v.is_number())
        row.emplace_back(v.get<double>(), 0.0);
      else if (v.is_string() && m > 0)
        row.push_back(Cyclotomic::parse(v.get<std::string>(), m).to_complex());
      else
        throw ParseError("bad approximate entry " + v.dump());
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline json complex_rows_json(const approx::CMatrix &m) {
  json rows = json::array();
  for (const auto &r : m) {
    json row = json::array();
    for (const auto &z : r) row.push_back({z.real(), z.imag()});
    rows.push_back(row);
  }
  return rows;
}

inline json hadamard(Context &ctx, const std::string &verb) {
  json file = ctx.read_json(need(ctx.o.matrix, "--matrix"));
  if (approx_mode(ctx.o)) {
    auto a = complex_matrix_from_json(file);
    double eps = eps_value(ctx.o);
    if (verb == "check")
      return {{"convention", kHadamardConvention},
              {"generalized_hadamard", approx::is_generalized_hadamard(a, eps)},
              {"complex_hadamard", approx::is_complex_hadamard(a, eps)}};
    if (verb == "involution") return {{"rows", complex_rows_json(approx::hadamard_involution(a))}};
    if (verb == "dephase") return {{"rows", complex_rows_json(approx::dephase(a))}};
    throw UnsupportedOperation("hadamard " + verb + " has no approximate mode");
  }
  auto a = io::cyclo_matrix_from_json(file);
  unsigned m = io::conductor_of(file);
  if (verb == "check")
    return {{"convention", kHadamardConvention},
            {"generalized_hadamard", is_generalized_hadamard(a)},
            {"involution_inverts", involution_inverts(a)},
            {"complex_hadamard", is_complex_hadamard(a)}};
  if (verb == "involution") {
    auto h = hadamard_involution(a);
    return {{"matrix", io::cyclo_matrix_to_json(h, std::lcm(m, io::common_conductor(h)))}};
  }
  if (verb == "dephase") {
    auto d = dephase(a);
    return {{"matrix", io::cyclo_matrix_to_json(d, std::lcm(m, io::common_conductor(d)))}};
  }
  if (verb == "cartan")
    return {{"cartan_pair", cartan_pair_check(a)}, {"generalized_hadamard", is_generalized_hadamard(a)}};
  throw ParseError("unknown hadamard verb '" + verb + "'");
}

// ---- mub ---------------------------------------------------------------

inline json mub_summary(const BasisFamily &f) {
  bool ok = mub_check(f);
  json j{{"n", f.n}, {"bases", f.bases.size()}, {"mub_check", ok ? "pass" : "fail"}};
  auto c = check_config(mub_projector_config(f));
  j["projector_config"] = c.ok ? "pass" : "fail";
  return j;
}

inline json mub(Context &ctx, const std::string &verb) {
  if (verb == "check") return mub_summary(io::basis_family_from_json(ctx.read_json(need(ctx.o.matrix, "--matrix"))));
  long p = need(ctx.o.p, "--p");
  auto f = prime_mub_family(static_cast<unsigned>(p));
  json j = mub_summary(f);
  j["family"] = io::basis_family_to_json(f);
  return j;
}

// ---- homotope ----------------------------------------------------------

struct HomotopeInput {
  FinDimAlgebra<Rational> algebra;
  std::vector<Rational> delta;
  std::optional<Matrix<Rational>> delta_matrix;
};

inline HomotopeInput homotope_input(Context &ctx) {
  if (ctx.o.algebra == "mat") {
    Matrix<Rational> d;
    if (!ctx.o.matrix.empty()) {
      auto m = io::laurent_matrix_from_json(ctx.read_json(ctx.o.matrix));
      d = m.map([](const Laurent &p) { return p.constant_value(); });
    } else {
      std::size_t n = static_cast<std::size_t>(need(ctx.o.n, "--n"));
      auto v = io::parse_rational_list(need(ctx.o.delta, "--delta or --matrix"));
      if (v.size() != n * n) throw DomainError("--delta needs n*n row-major entries");
      d = Matrix<Rational>(n, n);
      for (std::size_t k = 0; k < v.size(); ++k) d(k / n, k % n) = v[k];
    }
    if (!d.is_square() || d.rows() == 0) throw DomainError("delta must be a nonempty square matrix");
    std::size_t n = d.rows();
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) coords.push_back(d(i, j));
    return {FinDimAlgebra<Rational>::matrix_algebra(n), coords, d};
  }
  if (ctx.o.algebra == "diag") {
    auto v = io::parse_rational_list(need(ctx.o.delta, "--delta"));
    return {FinDimAlgebra<Rational>::diagonal_algebra(v.size()), v, std::nullopt};
  }
  throw ParseError("--algebra must be mat or diag");
}

inline json homotope(Context &ctx, const std::string &verb) {
  auto in = homotope_input(ctx);
  if (verb == "quiver") {
    if (!in.delta_matrix) throw DomainError("quiver class needs a matrix algebra");
    auto q = quiver_class(*in.delta_matrix);
    return {{"s", q.s}, {"t", q.t}, {"relations", q.relations}};
  }
  auto h = build_homotope(in.algebra, in.delta);
  if (verb == "build") {
    json c = json::array();
    for (const auto &row : h.algebra().constants()) {
      json r = json::array();
      for (const auto &v : row) r.push_back(str_list(v));
      c.push_back(r);
    }
    return {{"dim", h.algebra().dim()}, {"unit_index", 0}, {"structure_constants", c}};
  }
  if (verb == "well-tempered") {
    json j{{"well_tempered", is_well_tempered_findim(h)}, {"invertible", in.algebra.is_invertible(in.delta)}};
    if (in.algebra.is_invertible(in.delta)) j["split_idempotent"] = str_list(split_idempotent(h));
    return j;
  }
  if (verb == "ext1") {
    auto [lhs, rhs] = ext1_dim_check(h);
    return {{"lhs", lhs}, {"rhs", rhs}, {"well_tempered", is_well_tempered_findim(h)}};
  }
  throw ParseError("unknown homotope verb '" + verb + "'");
}

// ---- perverse ----------------------------------------------------------

inline json perverse(Context &ctx, const std::string &verb) {
  if (verb == "disc") {
    std::size_t n = static_cast<std::size_t>(need(ctx.o.n, "--n"));
    auto m = disc_operator(n);
    json j = snf_json(smith_normal_form(m));
    j["matrix"] = rows_json(m);
    return j;
  }
  if (verb == "z-check") {
    std::size_t n = static_cast<std::size_t>(need(ctx.o.n, "--n"));
    if (n < 2) throw DomainError("z-check needs n >= 2");
    return {{"n", n}, {"z_relations", z_relations_check(n) ? "pass" : "fail"}};
  }
  if (verb == "sphere") {
    auto nd = static_cast<std::size_t>(need(ctx.o.n_disc, "--n-disc"));
    auto nc = static_cast<std::size_t>(need(ctx.o.n_cyc, "--n-cyc"));
    auto s = io::parse_rational_list(need(ctx.o.s, "--s"));
    auto r = sphere_comparison(nd, nc, s);
    return {{"equivalent", r.equivalent},
            {"disc_factors", str_list(r.disc.factors)},
            {"cyclic_factors", str_list(r.cyclic.factors)}};
  }
  throw ParseError("unknown perverse verb '" + verb + "'");
}

inline void pretty_print(std::ostream &out, const json &j, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json &v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      pretty_print(out, v, indent + 2);
    } else if (v.is_array() && !v.empty() && v[0].is_array()) {
      out << pad << it.key() << ":\n";
      for (const auto &row : v) {
        out << pad << "  ";
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " | " : "") << scalar(row[k]);
        out << "\n";
      }
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      out << pad << it.key() << ":\n";
      for (const auto &item : v) {
        out << pad << "  -\n";
        pretty_print(out, item, indent + 4);
      }
    } else if (v.is_array()) {
      out << pad << it.key() << ": ";
      for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << scalar(v[k]);
      out << "\n";
    } else {
      out << pad << it.key() << ": " << scalar(v) << "\n";
    }
  }
}

} // namespace detail

using Handler = std::function<json(Context &)>;

inline const std::map<std::string, std::map<std::string, Handler>> &commands() {
  using namespace detail;
  auto verb = [](json (*f)(Context &, const std::string &), std::string v) {
    return Handler([f, v](Context &c) { return f(c, v); });
  };
  static const std::map<std::string, std::map<std::string, Handler>> table{
      {"graph", {{"basis", graph_basis}, {"mul", graph_mul}, {"psi", graph_psi}, {"random", graph_random}}},
      {"laplacian", {{"det", laplacian_det}, {"strata", laplacian_strata}, {"corank", laplacian_corank}}},
      {"snf", {{"", snf}}},
      {"config",
       {{"check", verb(config, "check")},
        {"sclass", verb(config, "sclass")},
        {"minimalize", verb(config, "minimalize")},
        {"from-character", verb(config, "from-character")},
        {"dualize", verb(config, "dualize")}}},
      {"hadamard",
       {{"check", verb(hadamard, "check")},
        {"involution", verb(hadamard, "involution")},
        {"dephase", verb(hadamard, "dephase")},
        {"cartan", verb(hadamard, "cartan")}}},
      {"mub", {{"check", verb(mub, "check")}, {"family", verb(mub, "family")}}},
      {"homotope",
       {{"build", verb(homotope, "build")},
        {"well-tempered", verb(homotope, "well-tempered")},
        {"quiver", verb(homotope, "quiver")},
        {"ext1", verb(homotope, "ext1")}}},
      {"perverse",
       {{"disc", verb(perverse, "disc")}, {"z-check", verb(perverse, "z-check")}, {"sphere", verb(perverse, "sphere")}}},
  };
  return table;
}

/// Single-word aliases for the two-word forms.
inline const std::map<std::string, std::pair<std::string, std::string>> &aliases() {
  static const std::map<std::string, std::pair<std::string, std::string>> table{
      {"hadamard-check", {"hadamard", "check"}}, {"h-involution", {"hadamard", "involution"}},
      {"cartan-check", {"hadamard", "cartan"}},  {"mub-check", {"mub", "check"}},
      {"mub-family", {"mub", "family"}},         {"dephase", {"hadamard", "dephase"}},
  };
  return table;
}

inline std::string usage() {
  std::string u = "usage: graphalg <command> [verb] [flags]\n\ncommands:\n";
  for (const auto &[group, verbs] : commands()) {
    u += "  " + group;
    if (!(verbs.size() == 1 && verbs.begin()->first.empty())) {
      u += " ";
      bool first = true;
      for (const auto &[v, h] : verbs) {
        u += (first ? "" : "|") + v;
        first = false;
      }
    }
    u += "\n";
  }
  u += "\naliases:";
  for (const auto &[a, target] : aliases()) u += " " + a;
  u += "\n\nflags: --graph FILE --matrix FILE --config FILE --s LIST --chi LIST --at LIST --n INT --p INT\n"
       "       --max-len INT --mode exact|approx --eps RATIONAL --pretty --seed INT --edges INT\n"
       "       --n-disc INT --n-cyc INT --a PATH --b PATH --algebra mat|diag --delta LIST\n";
  return u;
}

/// Runs one command. Exit codes: 0 success, 1 domain error (reported), 2
/// parse error or unknown command (usage on `err`).
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
  if (!args.empty()) {
    auto it = aliases().find(args[0]);
    if (it != aliases().end()) {
      args[0] = it->second.second;
      args.insert(args.begin(), it->second.first);
    }
  }
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    (args.empty() ? err : out) << usage();
    return args.empty() ? 2 : 0;
  }
  if (args[0] == "--version") {
    out << kVersion << "\n";
    return 0;
  }
  auto group = commands().find(args[0]);
  if (group == commands().end()) {
    err << "unknown command '" << args[0] << "'\n" << usage();
    return 2;
  }
  std::string verb;
  std::size_t first_flag = 1;
  bool bare = group->second.size() == 1 && group->second.begin()->first.empty();
  if (!bare) {
    if (args.size() < 2 || group->second.find(args[1]) == group->second.end()) {
      err << "unknown or missing verb for '" << args[0] << "'\n" << usage();
      return 2;
    }
    verb = args[1];
    first_flag = 2;
  }
  std::string command = args[0] + (verb.empty() ? "" : " " + verb);

  Context ctx;
  CLI::App app{"graphalg " + command};
  auto &o = ctx.o;
  app.add_option("--graph", o.graph);
  app.add_option("--matrix", o.matrix);
  app.add_option("--config", o.config);
  app.add_option("--s", o.s);
  app.add_option("--chi", o.chi);
  app.add_option("--at", o.at);
  app.add_option("--a", o.a);
  app.add_option("--b", o.b);
  app.add_option("--delta", o.delta);
  app.add_option("--algebra", o.algebra);
  app.add_option("--mode", o.mode);
  app.add_option("--eps", o.eps);
  app.add_option("--n", o.n);
  app.add_option("--p", o.p);
  app.add_option("--max-len", o.max_len);
  app.add_option("--n-disc", o.n_disc);
  app.add_option("--n-cyc", o.n_cyc);
  app.add_option("--edges", o.edges);
  auto *seed = app.add_option("--seed", o.seed);
  app.add_flag("--pretty", o.pretty);
  std::vector<std::string> rest(args.begin() + static_cast<long>(first_flag), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp &) {
    out << usage();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n" << usage();
    return 2;
  }
  o.seed_given = seed->count() > 0;

  for (const auto &a : args) ctx.digest.add(a);
  json report;
  report["command"] = command;
  report["mode"] = o.mode;
  report["version"] = kVersion;
  int code = 0;
  try {
    if (detail::approx_mode(o) && group->first != "hadamard")
      throw UnsupportedOperation(command + " has no approximate mode");
    json result = group->second.at(verb)(ctx);
    report["result"] = std::move(result);
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception &e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    report["error"] = e.what();
    report["result"] = nullptr;
    code = 1;
  }
  report["input_digest"] = ctx.digest.hex();
  if (o.pretty)
    detail::pretty_print(out, report, 0);
  else
    out << report.dump(2) << "\n";
  return code;
}

inline int run(int argc, char **argv, std::ostream &out, std::ostream &err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace homotopes::cli
