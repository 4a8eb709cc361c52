#include "catch_amalgamated.hpp"

#include "homotopes/configurations.hpp"
#include "homotopes/io.hpp"

#include <random>

using namespace homotopes;
using Cfg = ProjectorConfig<Rational>;
using P = Projector<Rational>;
using Vec = std::vector<Rational>;
using Q = Matrix<Rational>;

namespace {

Rational random_nonzero(std::mt19937 &rng) { return graphs::random_nonzero_rational(rng); }

std::vector<Laurent> random_params(std::mt19937 &rng, std::size_t m) {
  std::vector<Laurent> s;
  for (std::size_t k = 0; k < m; ++k) s.emplace_back(random_nonzero(rng));
  return s;
}

// e_i -> (e_i, random), x_i -> (x_i, 0): pairings unchanged, no longer minimal.
Cfg extend_randomly(const Cfg &c, std::size_t extra, std::mt19937 &rng) {
  std::vector<P> ps;
  for (const auto &p : c.projectors()) {
    auto e = p.e(), x = p.x();
    for (std::size_t k = 0; k < extra; ++k) {
      e.push_back(Rational(static_cast<long>(rng() % 5) - 2));
      x.push_back(Rational(0));
    }
    ps.emplace_back(std::move(e), std::move(x));
  }
  return c.with_projectors(std::move(ps));
}

// Graphs with one cycle generator at least, and constant parameters.
std::vector<Graph> corpus(std::mt19937 &rng) {
  std::vector<Graph> gs;
  for (std::size_t n = 3; n <= 6; ++n) gs.push_back(graphs::cycle(n, random_params(rng, n)));
  auto k22 = graphs::complete_multipartite(2, 2, Laurent(Rational(1, 2)));
  gs.push_back(k22);
  gs.push_back(graphs::from_pairs(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 0}}, random_params(rng, 5)));
  return gs;
}

} // namespace

TEST_CASE("unbiased pair in dimension two") {
  auto g = share(graphs::path(2));
  P p({Rational(1), Rational(0)}, {Rational(1), Rational(0)});
  P q({Rational(1), Rational(1)}, {Rational(1, 2), Rational(1, 2)});
  Cfg c(g, {p, q}, {Rational(1, 2)});
  CHECK(check_config(c).ok);
  // operator products: p q p = (1/2) p and q p q = (1/2) q
  CHECK(p.matrix() * q.matrix() * p.matrix() == Rational(1, 2) * p.matrix());
  CHECK(q.matrix() * p.matrix() * q.matrix() == Rational(1, 2) * q.matrix());
  CHECK(trace_cycle(c, {0, 1, 0}) == Rational(1, 2));
  CHECK(trace_cycle(c, {0}) == Rational(1));
  CHECK((p.matrix() * q.matrix()).trace() == Rational(1, 2));
  CHECK_THROWS_AS(trace_cycle(c, {0, 1}), DomainError);
  // s_e is unavailable when only r is given
  CHECK_THROWS_AS(s_invariant(c, {0, 1, 0}), DomainError);

  Cfg wrong(g, {p, q}, {Rational(1, 3)});
  auto rep = check_config(wrong);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failures.size() == 1);
}

TEST_CASE("orthogonality and projector validation") {
  auto g = share(graphs::edgeless(2));
  P a({Rational(1), Rational(0)}, {Rational(1), Rational(0)});
  P b({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
  CHECK(check_config(Cfg(g, {a, b})).ok);
  CHECK_FALSE(check_config(Cfg(g, {a, a})).ok);
  CHECK_THROWS_AS(P({Rational(1)}, {Rational(2)}), DomainError);
  auto n = P::normalized({Rational(1)}, {Rational(2)});
  CHECK(n.x()[0] == Rational(1));
  CHECK(n.matrix() * n.matrix() == n.matrix());
  CHECK_THROWS_AS(Cfg(g, {a}), DomainError);
  CHECK_THROWS_AS(Cfg(g, {a, P({Rational(1)}, {Rational(1)})}), DomainError);
}

TEST_CASE("round trip from characters") {
  std::mt19937 rng(71);
  for (const auto &graph : corpus(rng)) {
    auto cb = cycle_basis(graph);
    for (int t = 0; t < 5; ++t) {
      Character<Rational> chi;
      for (std::size_t k = 0; k < cb.rank(); ++k) chi.push_back(random_nonzero(rng));
      auto c = from_character(graph, chi);
      CHECK(check_config(c).ok);
      CHECK(is_minimal(c));
      CHECK(s_class(c) == chi);
      // minimal dimension is the rank of the evaluated Laplacian
      CHECK(c.dim() == rank(evaluated_laplacian(c.graph(), cb, chi)));
    }
  }
}

TEST_CASE("triangle at unit parameters") {
  auto tri = graphs::cycle(3, {Laurent(1), Laurent(1), Laurent(1)});
  auto c1 = from_character(tri, Character<Rational>{Rational(1)});
  CHECK(c1.dim() == 1);
  CHECK(s_class(c1) == Vec{Rational(1)});
  auto c = from_character(tri, Character<Rational>{Rational(5, 3)});
  CHECK(c.dim() == 3);
  CHECK(s_class(c) == Vec{Rational(5, 3)});
  CHECK_THROWS_AS(from_character(tri, Character<Rational>{}), DomainError);
  CHECK_THROWS_AS(from_character(tri, Character<Rational>{Rational(0)}), DomainError);
  CHECK_THROWS_AS(from_character(graphs::edgeless(2), Character<Rational>{}), DomainError);
}

TEST_CASE("trees") {
  std::mt19937 rng(72);
  auto tree = graphs::path(4, random_params(rng, 3));
  auto c = from_character(tree, Character<Rational>{});
  auto cb = cycle_basis(tree);
  CHECK(c.dim() == rank(evaluated_laplacian(share(tree), cb, Character<Rational>{})));
  CHECK(check_config(c).ok);
}

TEST_CASE("cancellation laws") {
  std::mt19937 rng(73);
  for (const auto &graph : corpus(rng)) {
    auto cb = cycle_basis(graph);
    Character<Rational> chi;
    for (std::size_t k = 0; k < cb.rank(); ++k) chi.push_back(random_nonzero(rng));
    auto c = from_character(graph, chi);
    for (const auto &gen : cb.generators) {
      const auto &gamma = gen.cycle;
      auto hat = reversed(gamma);
      CHECK(s_invariant(c, gamma) * s_invariant(c, hat) == Rational(1));
      Rational prod_r(1);
      for (std::size_t l = 0; l + 1 < gamma.size(); ++l)
        prod_r = prod_r * c.r()[static_cast<std::size_t>(graph.edge_id(gamma[l], gamma[l + 1]))];
      CHECK(trace_cycle(c, gamma) * trace_cycle(c, hat) == prod_r);
      // rotating the base point leaves T unchanged
      Path rot(gamma.begin() + 1, gamma.end());
      rot.push_back(gamma[1]);
      CHECK(trace_cycle(c, rot) == trace_cycle(c, gamma));
      // loops at a common base point multiply
      Path twice = gamma;
      twice.insert(twice.end(), gamma.begin() + 1, gamma.end());
      CHECK(s_invariant(c, twice) == s_invariant(c, gamma) * s_invariant(c, gamma));
    }
    // contractible loops
    for (int v = 0; v < static_cast<int>(graph.vertex_count()); ++v) {
      CHECK(s_invariant(c, {v}) == Rational(1));
      for (int w : graph.neighbors(v)) {
        CHECK(s_invariant(c, {v, w, v}) == Rational(1));
        for (int u : graph.neighbors(w)) CHECK(s_invariant(c, {v, w, u, w, v}) == Rational(1));
      }
    }
  }
}

TEST_CASE("minimalization") {
  std::mt19937 rng(74);
  for (const auto &graph : corpus(rng)) {
    auto cb = cycle_basis(graph);
    Character<Rational> chi;
    for (std::size_t k = 0; k < cb.rank(); ++k) chi.push_back(random_nonzero(rng));
    auto c = from_character(graph, chi);
    auto m = minimalize(c);
    CHECK(m.dim() == c.dim());
    auto padded = pad_with_zero_block(c, 2);
    CHECK_FALSE(is_minimal(padded));
    auto back = minimalize(padded);
    CHECK(back.dim() == c.dim());
    CHECK(s_class(back) == chi);
    auto ext = extend_randomly(c, 2, rng);
    CHECK(check_config(ext).ok);
    auto mext = minimalize(ext);
    CHECK(is_minimal(mext));
    CHECK(mext.dim() == c.dim());
    CHECK(s_class(mext) == chi);
    CHECK(minimalize(mext).dim() == mext.dim());
  }
}

TEST_CASE("duality") {
  std::mt19937 rng(75);
  for (const auto &graph : corpus(rng)) {
    auto cb = cycle_basis(graph);
    Character<Rational> chi;
    for (std::size_t k = 0; k < cb.rank(); ++k) chi.push_back(random_nonzero(rng));
    auto c = from_character(graph, chi);
    auto d = dualize(c);
    CHECK(check_config(d).ok);
    CHECK(dualize(d).projectors() == c.projectors());
    for (const auto &gen : cb.generators) {
      CHECK(s_invariant(d, gen.cycle) == s_invariant(c, reversed(gen.cycle)));
      // the same through transposed operator products
      Q prod = Q::identity(c.dim());
      for (std::size_t l = 0; l + 1 < gen.cycle.size(); ++l) prod = prod * d.projector(gen.cycle[l]).matrix();
      CHECK(prod.trace() == trace_cycle(d, gen.cycle));
    }
  }
}

TEST_CASE("commutant of a minimal configuration") {
  auto tri = graphs::cycle(3, {Laurent(2), Laurent(Rational(1, 3)), Laurent(-1)});
  auto c = from_character(tri, Character<Rational>{Rational(3)});
  auto r = commutant_is_scalar(c);
  CHECK(r.holds);
  CHECK(r.warnings.empty());
  auto padded = commutant_is_scalar(pad_with_zero_block(c, 1));
  CHECK_FALSE(padded.holds);
  CHECK_FALSE(padded.warnings.empty());
  auto one = share(graphs::edgeless(1));
  CHECK(commutant_is_scalar(Cfg(one, {P({Rational(1)}, {Rational(1)})})).holds);
}

TEST_CASE("configuration files round trip") {
  auto c = from_character(graphs::cycle(3, {Laurent(1), Laurent(2), Laurent(3)}), Character<Rational>{Rational(7)});
  auto j = io::config_to_json(c);
  auto back = io::config_from_json<Rational>(io::json::parse(j.dump()));
  CHECK(back.projectors() == c.projectors());
  CHECK(*back.graph() == *c.graph());
  CHECK(s_class(back) == s_class(c));
  j["dim"] = 99;
  CHECK_THROWS_AS(io::config_from_json<Rational>(j), ParseError);
}
