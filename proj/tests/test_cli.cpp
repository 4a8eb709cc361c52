#include "catch_amalgamated.hpp"

#include "homotopes/cli.hpp"
#include "homotopes/io.hpp"
#include "homotopes/perverse.hpp"

#include <sstream>

using namespace homotopes;
using io::json;

namespace {

std::string data(const std::string &name) { return std::string(SAMPLES_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Outcome run(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_float(const json &j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto &v : j)
      if (has_float(v)) return true;
  return false;
}

} // namespace

TEST_CASE("strata of the unit triangle") {
  auto o = run({"laplacian", "strata", "--graph", data("c3.json"), "--s", "1,1,1"});
  REQUIRE(o.code == 0);
  auto r = o.report().at("result");
  CHECK(r.at("A") == "1");
  CHECK(r.at("B") == "-2");
  REQUIRE(r.at("roots").size() == 1);
  CHECK(r.at("roots")[0].at("x") == "1");
  CHECK(r.at("roots")[0].at("corank") == 2);
  // same numbers straight from the library
  auto direct = cyclic_strata(3, {Rational(1), Rational(1), Rational(1)});
  CHECK(r.at("B") == direct.B.str());
}

TEST_CASE("prime family of bases") {
  auto o = run({"mub", "family", "--p", "3"});
  REQUIRE(o.code == 0);
  auto r = o.report().at("result");
  CHECK(r.at("bases") == 4);
  CHECK(r.at("mub_check") == "pass");
  auto fam = io::basis_family_from_json(r.at("family"));
  CHECK(fam.bases.size() == 4);
  CHECK(mub_check(fam));
}

TEST_CASE("Smith form of the disc operator") {
  auto o = run({"snf", "--matrix", data("disc3.json")});
  REQUIRE(o.code == 0);
  auto r = o.report().at("result");
  CHECK(r.at("factors") == json::array({"1", "1", "x - 1"}));
  // printed U and V re-parse to matrices with U M V = D
  auto m = io::laurent_matrix_from_json({{"rows", r.at("matrix")}});
  auto u = io::laurent_matrix_from_json({{"rows", r.at("U")}});
  auto v = io::laurent_matrix_from_json({{"rows", r.at("V")}});
  CHECK(m == disc_operator(3));
  auto d = smith_normal_form(m);
  CHECK(u * m * v == d.diagonal());
}

TEST_CASE("report shape and determinism") {
  std::vector<std::vector<std::string>> cases{
      {"graph", "basis", "--graph", data("path3.json"), "--max-len", "2"},
      {"graph", "mul", "--graph", data("c3_half.json"), "--a", "1,2", "--b", "2,1"},
      {"graph", "psi", "--graph", data("path3.json"), "--max-len", "1"},
      {"laplacian", "det", "--graph", data("c3.json")},
      {"laplacian", "corank", "--graph", data("c3_unit.json"), "--at", "1"},
      {"config", "check", "--config", data("c3_config.json")},
      {"config", "sclass", "--config", data("c3_config.json")},
      {"config", "minimalize", "--config", data("path3_config.json")},
      {"config", "from-character", "--graph", data("c3_half.json"), "--chi", "3"},
      {"hadamard", "check", "--matrix", data("fourier4.json")},
      {"hadamard", "cartan", "--matrix", data("fourier4.json")},
      {"mub", "check", "--matrix", data("mub2.json")},
      {"homotope", "quiver", "--algebra", "mat", "--n", "2", "--delta", "1,0,0,0"},
      {"homotope", "ext1", "--algebra", "mat", "--n", "3", "--delta", "1,0,0,0,1,0,0,0,0"},
      {"homotope", "well-tempered", "--algebra", "diag", "--delta", "2,3"},
      {"homotope", "build", "--algebra", "diag", "--delta", "1,0"},
      {"perverse", "disc", "--n", "4"},
      {"perverse", "z-check", "--n", "5"},
      {"perverse", "sphere", "--n-disc", "3", "--n-cyc", "3", "--s", "1,1,1"},
  };
  for (const auto &args : cases) {
    INFO(args[0] << " " << args[1]);
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto rep = a.report();
    for (const char *key : {"command", "input_digest", "mode", "version", "result"}) CHECK(rep.contains(key));
    CHECK(rep.at("mode") == "exact");
    CHECK_FALSE(has_float(rep));
  }
}

TEST_CASE("input digest covers file contents and flags") {
  auto a = run({"laplacian", "det", "--graph", data("c3.json")});
  auto b = run({"laplacian", "det", "--graph", data("c3_unit.json")});
  auto c = run({"laplacian", "det", "--graph", data("c3.json"), "--s", "1,1,1"});
  CHECK(a.report().at("input_digest") != b.report().at("input_digest"));
  CHECK(a.report().at("input_digest") != c.report().at("input_digest"));
}

TEST_CASE("exit codes") {
  auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("usage") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"graph"}).code == 2);
  CHECK(run({"graph", "basis", "--bogus", "1"}).code == 2);
  CHECK(run({"graph", "basis", "--graph", data("missing.json")}).code == 2);
  auto dom = run({"perverse", "sphere", "--n-disc", "3", "--n-cyc", "3", "--s", "1,2,1"});
  CHECK(dom.code == 1);
  CHECK(dom.report().at("result").is_null());
  CHECK(dom.report().contains("error"));
  CHECK(run({"perverse", "disc", "--n", "4", "--mode", "approx"}).code == 1);
  CHECK(run({"graph", "random", "--n", "4"}).code == 2); // --seed is a required flag
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("printed values re-parse") {
  auto inv = run({"hadamard", "involution", "--matrix", data("fourier4.json")});
  REQUIRE(inv.code == 0);
  auto h = io::cyclo_matrix_from_json(inv.report().at("result").at("matrix"));
  auto f = io::cyclo_matrix_from_json(io::read_json_file(data("fourier4.json")));
  CHECK(h * f == CycloMatrix::identity(4));

  auto dual = run({"config", "dualize", "--config", data("c3_config.json")});
  REQUIRE(dual.code == 0);
  auto d = io::config_from_json<Rational>(dual.report().at("result").at("config"));
  auto c = io::config_from_json<Rational>(io::read_json_file(data("c3_config.json")));
  CHECK(dualize(d).projectors() == c.projectors());

  auto fc = run({"config", "from-character", "--graph", data("c3_half.json"), "--chi", "3"});
  REQUIRE(fc.code == 0);
  auto built = io::config_from_json<Rational>(fc.report().at("result").at("config"));
  CHECK(s_class(built) == std::vector<Rational>{Rational(3)});

  auto rnd = run({"graph", "random", "--n", "5", "--edges", "6", "--seed", "9"});
  REQUIRE(rnd.code == 0);
  auto g = io::graph_from_json(rnd.report().at("result").at("graph"));
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 6);
}

TEST_CASE("approximate mode and aliases") {
  auto o = run({"hadamard-check", "--matrix", data("fourier4.json"), "--mode", "approx", "--eps", "1/1000000"});
  REQUIRE(o.code == 0);
  CHECK(o.report().at("command") == "hadamard check");
  CHECK(o.report().at("mode") == "approx");
  CHECK(run({"mub-family", "--p", "2"}).report().at("result").at("mub_check") == "pass");
}

TEST_CASE("pretty output") {
  auto o = run({"perverse", "z-check", "--n", "3", "--pretty"});
  CHECK(o.code == 0);
  CHECK(o.out.find("command: perverse z-check") != std::string::npos);
  CHECK_THROWS(json::parse(o.out));
}
