#pragma once

#include "homotopes/errors.hpp"
#include "homotopes/homotope.hpp"
#include "homotopes/laurent.hpp"
#include "homotopes/laurent_linalg.hpp"

#include <string>
#include <vector>

namespace homotopes {

/// n x n operator over k[x, x^-1]: 1 on the diagonal, -1 on the
/// superdiagonal, -x in the bottom-left corner.
inline LaurentMatrix disc_operator(std::size_t n, const std::string &var = "x") {
  if (n < 2) throw DomainError("disc operator needs n >= 2");
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Laurent(1);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = Laurent(-1);
  m(n - 1, 0) = m(n - 1, 0) - Laurent::variable(var);
  return m;
}

inline SNFResult disc_cokernel(std::size_t n) { return smith_normal_form(disc_operator(n)); }

inline LaurentMatrix doubled_disc_operator(std::size_t n) {
  auto d = disc_operator(n);
  return direct_sum(d, d);
}

/// Checks, in the homotope of the disc operator, that z_i = E_ii satisfy
/// z_i z_i = z_i, z_i z_j = 0 for j outside {i-1, i, i+1} (mod n), and
/// z_i z_{i+1} ... z_{i+n} = (-1)^n x z_i.
inline bool z_relations_check(std::size_t n) {
  auto delta = disc_operator(n);
  auto z = [&](std::size_t i) {
    return GenElement<Laurent>{Laurent(0), LaurentMatrix::unit(n, n, i % n, i % n)};
  };
  auto mul = [&](const GenElement<Laurent> &a, const GenElement<Laurent> &b) {
    return generalized_homotope_mul(a, b, delta);
  };
  Laurent sign_x = (n % 2 == 0 ? Laurent(1) : Laurent(-1)) * Laurent::variable("x");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mul(z(i), z(i)) == z(i))) return false;
    for (std::size_t j = 0; j < n; ++j) {
      bool neighbor = j == i || j == (i + 1) % n || (j + 1) % n == i;
      if (!neighbor) {
        auto p = mul(z(i), z(j));
        if (!p.lambda.is_zero() || !p.a.is_zero()) return false;
      }
    }
    auto prod = z(i);
    for (std::size_t k = 1; k <= n; ++k) prod = mul(prod, z(i + k));
    GenElement<Laurent> expected{Laurent(0), sign_x * z(i).a};
    if (!(prod == expected)) return false;
  }
  return true;
}

struct SphereComparison {
  bool equivalent = false;
  SNFResult disc, cyclic;
};

/// Compares the doubled disc operator with the cyclic-graph Laplacian for
/// parameters s giving corank 2 at x = 1, via their Smith forms.
inline SphereComparison sphere_comparison(std::size_t n_disc, std::size_t n_cyc, const std::vector<Rational> &s) {
  if (s.size() != n_cyc)
    throw DomainError("expected " + std::to_string(n_cyc) + " edge parameters, got " + std::to_string(s.size()));
  std::vector<Laurent> ls(s.begin(), s.end());
  auto lap = cyclic_laplacian(n_cyc, ls);
  std::size_t c = corank_at(lap, Rational(1));
  if (c != 2)
    throw DomainError("cyclic Laplacian has corank " + std::to_string(c) +
                      " at x = 1; the comparison needs parameters with corank 2 there");
  SphereComparison r;
  r.disc = smith_normal_form(doubled_disc_operator(n_disc));
  r.cyclic = smith_normal_form(lap);
  r.equivalent = cokernel_iso(r.disc, r.cyclic);
  return r;
}

} // namespace homotopes
