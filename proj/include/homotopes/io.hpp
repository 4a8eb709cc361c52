#pragma once

// JSON readers and writers for graphs, matrices, basis families and
// projector configurations. Requires nlohmann's json.hpp on the include path.

#include "homotopes/configurations.hpp"
#include "homotopes/cyclotomic.hpp"
#include "homotopes/errors.hpp"
#include "homotopes/graph.hpp"
#include "homotopes/hadamard.hpp"
#include "homotopes/laurent.hpp"
#include "homotopes/laurent_linalg.hpp"
#include "homotopes/rational.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace homotopes::io {

using json = nlohmann::json;

inline json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

inline std::string read_text_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Scalar literal carried either as a JSON string or an integer.
inline std::string literal_of(const json &v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("expected a scalar literal (string or integer), got " + v.dump());
}

inline std::string id_of(const json &v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("vertex identifiers must be strings or integers, got " + v.dump());
}

/// Comma separated rationals, e.g. "1,1/2,-3".
inline std::vector<Rational> parse_rational_list(const std::string &text) {
  std::vector<Rational> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

/// Comma separated Laurent literals.
inline std::vector<Laurent> parse_laurent_list(const std::string &text) {
  std::vector<Laurent> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) out.push_back(Laurent::parse(item));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

inline Graph graph_from_json(const json &j) {
  if (!j.is_object() || !j.contains("vertices")) throw ParseError("graph needs a \"vertices\" array");
  std::vector<std::string> vs;
  for (const auto &v : j.at("vertices")) vs.push_back(id_of(v));
  std::vector<std::tuple<std::string, std::string, Laurent>> es;
  if (j.contains("edges"))
    for (const auto &e : j.at("edges")) {
      if (!e.contains("u") || !e.contains("v")) throw ParseError("edge needs \"u\" and \"v\": " + e.dump());
      std::string u = id_of(e.at("u")), v = id_of(e.at("v"));
      Laurent s = e.contains("s") ? Laurent::parse(literal_of(e.at("s")))
                                  : Laurent::variable(default_param_name(u, v));
      es.emplace_back(u, v, s);
    }
  return Graph::from_names(std::move(vs), es);
}

inline json graph_to_json(const Graph &g) {
  json j;
  j["vertices"] = g.vertex_names();
  j["edges"] = json::array();
  for (const auto &e : g.edges())
    j["edges"].push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"s", e.s.str()}});
  return j;
}

inline LaurentMatrix laurent_matrix_from_json(const json &j) {
  if (!j.contains("rows") || !j.at("rows").is_array()) throw ParseError("matrix needs a \"rows\" array");
  std::vector<std::vector<Laurent>> rows;
  for (const auto &r : j.at("rows")) {
    std::vector<Laurent> row;
    for (const auto &v : r) row.push_back(Laurent::parse(literal_of(v)));
    rows.push_back(std::move(row));
  }
  return LaurentMatrix(rows);
}

inline json laurent_matrix_to_json(const LaurentMatrix &m, const std::vector<std::string> &vars = {"x"}) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return {{"variables", vars}, {"rows", rows}};
}

inline unsigned conductor_of(const json &j) {
  if (!j.contains("conductor")) throw ParseError("missing \"conductor\"");
  long long m = j.at("conductor").get<long long>();
  if (m <= 0) throw ParseError("conductor must be positive");
  return static_cast<unsigned>(m);
}

inline CycloMatrix cyclo_rows_from_json(const json &rows, unsigned m) {
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto &r : rows) {
    std::vector<Cyclotomic> row;
    for (const auto &v : r) row.push_back(Cyclotomic::parse(literal_of(v), m));
    out.push_back(std::move(row));
  }
  return CycloMatrix(out);
}

inline CycloMatrix cyclo_matrix_from_json(const json &j) {
  if (!j.contains("rows")) throw ParseError("matrix needs a \"rows\" array");
  return cyclo_rows_from_json(j.at("rows"), conductor_of(j));
}

inline json cyclo_rows_to_json(const CycloMatrix &m, unsigned conductor) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).lift(conductor).str());
    rows.push_back(row);
  }
  return rows;
}

/// Least common conductor of all entries.
inline unsigned common_conductor(const CycloMatrix &m) {
  unsigned c = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c = std::lcm(c, m(i, j).conductor());
  return c;
}

inline json cyclo_matrix_to_json(const CycloMatrix &m, unsigned conductor) {
  return {{"conductor", conductor}, {"rows", cyclo_rows_to_json(m, conductor)}};
}

inline BasisFamily basis_family_from_json(const json &j) {
  unsigned m = conductor_of(j);
  if (!j.contains("bases")) throw ParseError("basis family needs a \"bases\" array");
  BasisFamily f;
  for (const auto &b : j.at("bases")) f.bases.push_back(cyclo_rows_from_json(b, m));
  if (f.bases.empty()) throw ParseError("basis family is empty");
  f.n = static_cast<unsigned>(f.bases[0].rows());
  return f;
}

inline json basis_family_to_json(const BasisFamily &f) {
  unsigned c = 1;
  for (const auto &b : f.bases) c = std::lcm(c, common_conductor(b));
  json bases = json::array();
  for (const auto &b : f.bases) bases.push_back(cyclo_rows_to_json(b, c));
  return {{"conductor", c}, {"n", f.n}, {"bases", bases}};
}

/// Scalar parsing for configuration files: rationals, or cyclotomics when a
/// conductor is declared.
template <typename F> F scalar_from_literal(const std::string &s, unsigned conductor) {
  if constexpr (std::is_same_v<F, Rational>) {
    (void)conductor;
    Laurent p = Laurent::parse(s);
    return p.constant_value();
  } else {
    return Cyclotomic::parse(s, conductor);
  }
}

/// {"graph": {...}, "dim": n, "conductor": m (optional),
///  "projectors": [{"vertex": id, "e": [...], "x": [...]}, ...],
///  "r": [...] (optional, one per edge), "normalize": bool (optional)}
template <typename F> ProjectorConfig<F> config_from_json(const json &j) {
  if (!j.contains("graph") || !j.contains("projectors")) throw ParseError("config needs \"graph\" and \"projectors\"");
  auto g = share(graph_from_json(j.at("graph")));
  unsigned m = j.contains("conductor") ? conductor_of(j) : 1;
  bool normalize = j.value("normalize", false);
  std::vector<std::optional<Projector<F>>> slots(g->vertex_count());
  auto vec = [&](const json &a) {
    std::vector<F> v;
    for (const auto &x : a) v.push_back(scalar_from_literal<F>(literal_of(x), m));
    return v;
  };
  for (const auto &p : j.at("projectors")) {
    int v = g->index_of(id_of(p.at("vertex")));
    auto e = vec(p.at("e")), x = vec(p.at("x"));
    slots[static_cast<std::size_t>(v)] =
        normalize ? Projector<F>::normalized(std::move(e), std::move(x)) : Projector<F>(std::move(e), std::move(x));
  }
  std::vector<Projector<F>> ps;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw ParseError("no projector for vertex '" + g->name(static_cast<int>(i)) + "'");
    ps.push_back(*slots[i]);
  }
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != (ps.empty() ? 0 : ps[0].dim()))
    throw ParseError("declared dim does not match the projector vectors");
  if (j.contains("r")) return ProjectorConfig<F>(g, std::move(ps), vec(j.at("r")));
  return ProjectorConfig<F>(g, std::move(ps));
}

template <typename F> json config_to_json(const ProjectorConfig<F> &c, unsigned conductor = 1) {
  auto str = [&](const F &v) {
    if constexpr (std::is_same_v<F, Rational>) return v.str();
    else return v.lift(conductor).str();
  };
  json ps = json::array();
  const Graph &g = *c.graph();
  for (std::size_t i = 0; i < c.projectors().size(); ++i) {
    json e = json::array(), x = json::array();
    for (const auto &v : c.projectors()[i].e()) e.push_back(str(v));
    for (const auto &v : c.projectors()[i].x()) x.push_back(str(v));
    ps.push_back({{"vertex", g.name(static_cast<int>(i))}, {"e", e}, {"x", x}});
  }
  json j{{"graph", graph_to_json(g)}, {"dim", c.dim()}, {"projectors", ps}};
  if constexpr (!std::is_same_v<F, Rational>) j["conductor"] = conductor;
  if (!c.has_square_roots()) {
    json r = json::array();
    for (const auto &v : c.r()) r.push_back(str(v));
    j["r"] = r;
  }
  return j;
}

} // namespace homotopes::io
