#include "homotopes/homotopes.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace homotopes;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string name;
  double limit_s; // 0 = untimed
  std::function<bool(std::string &)> body;
};

Rational rnd(std::mt19937 &rng) { return graphs::random_nonzero_rational(rng); }

std::vector<Graph> random_corpus() {
  std::mt19937 rng(2024);
  std::vector<Graph> gs;
  while (gs.size() < 50) {
    std::size_t n = 2 + rng() % 5; // 2..6
    std::size_t max_m = std::min<std::size_t>(9, n * (n - 1) / 2);
    std::size_t m = 1 + rng() % max_m;
    gs.push_back(graphs::random_graph(n, m, rng));
  }
  return gs;
}

Matrix<Rational> with_corank(std::size_t n, std::size_t corank, std::mt19937 &rng) {
  // P diag(1..1,0..0) Q with random invertible P, Q
  auto invertible = [&] {
    while (true) {
      Matrix<Rational> m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
      if (rank(m) == n) return m;
    }
  };
  Matrix<Rational> d(n, n);
  for (std::size_t i = 0; i + corank < n; ++i) d(i, i) = Rational(1);
  return invertible() * d * invertible();
}

std::vector<Rational> flatten(const Matrix<Rational> &m) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Rational cofactor_det(const Matrix<Rational> &m) {
  std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<Rational> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Rational t = m(0, j) * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

bool normal_form_soundness(std::string &note) {
  std::size_t edges = 0;
  for (const auto &g : random_corpus()) {
    edges += g.edge_count();
    if (!check_associativity<Rational>(g, 3)) {
      note = "associativity fails on a graph with " + std::to_string(g.edge_count()) + " edges";
      return false;
    }
  }
  note = "50 graphs, " + std::to_string(edges) + " edges";
  return true;
}

bool homotope_equivalence(std::string &note) {
  for (const auto &g : random_corpus())
    if (!check_homotope_iso<Rational>(g, 3)) {
      note = "b_mul differs from the transported homotope product";
      return false;
    }
  note = "50 graphs";
  return true;
}

bool tree_count(std::string &note) {
  std::mt19937 rng(7);
  int trees = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (int t = 0; t < 10; ++t, ++trees) {
      auto g = graphs::random_tree(n, rng);
      if (enumerate_contracted_paths(g, n).size() != n * n + 1) return false;
    }
  note = std::to_string(trees) + " trees";
  return true;
}

bool s_invariant_laws(std::string &note) {
  std::mt19937 rng(11);
  std::vector<Graph> gs;
  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<Laurent> s;
    for (std::size_t k = 0; k < n; ++k) s.emplace_back(rnd(rng));
    gs.push_back(graphs::cycle(n, s));
  }
  gs.push_back(graphs::complete_multipartite(2, 2, Laurent(rnd(rng))));
  int chars = 0;
  for (const auto &g : gs) {
    auto cb = cycle_basis(g);
    for (int t = 0; t < 20; ++t, ++chars) {
      Character<Rational> chi;
      for (std::size_t k = 0; k < cb.rank(); ++k) chi.push_back(rnd(rng));
      auto c = from_character(g, chi);
      if (!check_config(c).ok || s_class(c) != chi) return false;
      auto m = minimalize(pad_with_zero_block(c, 1));
      if (s_class(m) != chi) return false;
      for (const auto &gen : cb.generators) {
        Path hat(gen.cycle.rbegin(), gen.cycle.rend());
        if (!(s_invariant(c, gen.cycle) * s_invariant(c, hat) == Rational(1))) return false;
      }
      for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v)
        for (int w : g.neighbors(v))
          if (!(s_invariant(c, {v, w, v}) == Rational(1))) return false;
    }
  }
  note = std::to_string(chars) + " characters on 5 graphs";
  return true;
}

bool cyclic_strata_check(std::string &note) {
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 3 + static_cast<std::size_t>(t % 4);
    std::vector<Rational> s;
    Rational prod(1);
    for (std::size_t k = 0; k < n; ++k) {
      s.push_back(rnd(rng));
      prod = prod * s.back();
    }
    auto r = cyclic_strata(n, s);
    if (!(r.A == prod || r.A == -prod)) return false;
    // second route: cofactor expansion at rational points
    std::vector<Laurent> ls(s.begin(), s.end());
    auto lap = cyclic_laplacian(n, ls);
    for (long p : {2L, -3L, 5L}) {
      Rational x(p, 7);
      auto at = lap.map([&](const Laurent &v) { return v.eval<Rational>({{"x", x}}); });
      if (!(cofactor_det(at) == r.A * (x + x.inv()) + r.B)) return false;
    }
    for (const auto &root : r.roots)
      if (root.corank > 2) return false;
  }
  auto unit = cyclic_strata(3, {Rational(1), Rational(1), Rational(1)});
  if (unit.roots.size() != 1 || point_str(unit.roots[0].value) != "1" || unit.roots[0].corank != 2) return false;
  auto c = from_character(graphs::cycle(3, {Laurent(1), Laurent(1), Laurent(1)}), Character<Rational>{Rational(1)});
  if (c.dim() != 1) return false;
  note = "100 parameter sets; unit triangle corank 2, minimal dim 1";
  return true;
}

bool hadamard_mub(std::string &note) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    auto f = fourier_matrix(p);
    if (!is_generalized_hadamard(f) || !(hadamard_involution(f) == inverse(f))) return false;
  }
  double worst = 0;
  for (unsigned p : {3u, 5u, 7u}) {
    auto t0 = Clock::now();
    auto fam = prime_mub_family(p);
    bool ok = fam.bases.size() == p + 1 && mub_check(fam);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    worst = std::max(worst, secs);
    if (!ok || secs >= 10) return false;
  }
  for (unsigned p : {2u, 3u, 5u})
    if (!check_config(mub_projector_config(prime_mub_family(p))).ok) return false;
  std::mt19937 rng(17);
  int hadamard = 0;
  for (int t = 0; t < 50; ++t) {
    CycloMatrix a;
    if (t % 2 == 0) {
      // D1 F_3 D2 with random diagonal units
      a = fourier_matrix(3);
      std::vector<Cyclotomic> d1, d2;
      for (int k = 0; k < 3; ++k) {
        d1.push_back(Cyclotomic::zeta(6, static_cast<long>(rng() % 6)));
        d2.push_back(Cyclotomic(rnd(rng)));
      }
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = d1[i] * a(i, j) * d2[j];
    } else {
      a = CycloMatrix(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          a(i, j) = Cyclotomic(Rational(static_cast<long>(rng() % 5) - 2)) +
                    Cyclotomic::zeta(3, static_cast<long>(rng() % 3));
    }
    if (rank(a) != 3) {
      if (is_generalized_hadamard(a)) return false; // Hadamard matrices are invertible
      continue;
    }
    bool h = is_generalized_hadamard(a);
    hadamard += h;
    if (h != cartan_pair_check(a)) return false;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "slowest family %.2fs, %d Hadamard of 50 samples", worst, hadamard);
  note = buf;
  return true;
}

bool homotope_identities(std::string &note) {
  std::mt19937 rng(19);
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t s = 0; s < n; ++s) {
      auto delta = with_corank(n, s, rng);
      auto q = quiver_class(delta);
      if (q.s != s || q.t != s) return false;
      auto h = build_homotope(FinDimAlgebra<Rational>::matrix_algebra(n), flatten(delta));
      auto [lhs, rhs] = ext1_dim_check(h);
      if (lhs != n * s || rhs != n * s) return false;
      if (s == 0) {
        auto e = split_idempotent(h);
        const auto &b = h.algebra();
        if (!(b.mul(e, e) == e)) return false;
        std::vector<Rational> zero(b.dim(), Rational(0));
        for (std::size_t k = 1; k < b.dim(); ++k)
          if (!(b.mul(e, b.basis(k)) == zero) || !(b.mul(b.basis(k), e) == zero)) return false;
      }
    }
  auto kk = FinDimAlgebra<Rational>::diagonal_algebra(2);
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      bool wt = is_well_tempered_findim(build_homotope(kk, {Rational(a), Rational(b)}));
      if (wt != (a != 0 && b != 0)) return false;
    }
  note = "Mat_2..Mat_4 at every corank below n; 25 elements of KxK";
  return true;
}

bool perverse_checks(std::string &note) {
  Laurent xm1 = Laurent::variable("x") - Laurent(1);
  for (std::size_t n = 2; n <= 6; ++n) {
    auto r = disc_cokernel(n);
    std::vector<Laurent> torsion;
    for (const auto &f : r.factors)
      if (!f.is_monomial()) torsion.push_back(f);
    if (torsion != std::vector<Laurent>{xm1} || r.free_rank() != 0) return false;
  }
  for (std::size_t n = 2; n <= 8; ++n)
    if (!z_relations_check(n)) return false;
  if (!sphere_comparison(3, 3, {Rational(1), Rational(1), Rational(1)}).equivalent) return false;
  note = "cokernels n=2..6, z-relations n=2..8, sphere(3,3)";
  return true;
}

bool filtered_checks(std::string &note) {
  for (std::size_t n = 3; n <= 5; ++n) {
    auto g = graphs::cycle(n);
    if (!psi_injectivity_filtered(g, 3).holds) return false;
    if (!delta_no_zero_divisor_filtered(g, 3).holds) return false;
  }
  note = "C_3..C_5 up to length 3";
  return true;
}

} // namespace

int main() {
  std::vector<Criterion> all{
      {1, "normal-form associativity", 60, normal_form_soundness},
      {2, "b_mul equals transported homotope product", 0, homotope_equivalence},
      {3, "trees have n^2+1 contracted paths", 0, tree_count},
      {4, "S-invariant laws", 0, s_invariant_laws},
      {5, "cyclic strata", 0, cyclic_strata_check},
      {6, "Hadamard matrices and MUB families", 0, hadamard_mub},
      {7, "homotope identities", 0, homotope_identities},
      {8, "perverse computations", 30, perverse_checks},
      {9, "filtered injectivity and zero divisors", 0, filtered_checks},
  };
  int failed = 0;
  for (const auto &c : all) {
    std::string note;
    auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = c.body(note);
    } catch (const std::exception &e) {
      note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && c.limit_s > 0 && secs >= c.limit_s) {
      ok = false;
      note += " (over the time limit)";
    }
    std::printf("criterion %d: %s  %s [%.2fs] %s\n", c.id, ok ? "pass" : "FAIL", c.name.c_str(), secs, note.c_str());
    failed += !ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
