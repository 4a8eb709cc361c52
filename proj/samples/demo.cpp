// Walk through the main objects on the triangle graph.
#include "homotopes/homotopes.hpp"

#include <iostream>

using namespace homotopes;

int main() {
  auto tri = share(graphs::cycle(3, {Laurent(1), Laurent(1), Laurent(1)}));

  std::cout << "contracted paths of length <= 2:";
  for (const auto &p : enumerate_contracted_paths(*tri, 2)) std::cout << " " << tri->path_str(p);
  std::cout << "\n";

  using B = BElement<Rational>;
  auto x12 = B::path(tri, {0, 1}), x21 = B::path(tri, {1, 0});
  std::cout << "x_12 * x_21 = " << (x12 * x21).str() << "\n";

  auto strata = cyclic_strata(3, {Rational(1), Rational(1), Rational(1)});
  std::cout << "det of the Laplacian = " << strata.determinant.str() << "\n";
  for (const auto &r : strata.roots) std::cout << "  corank " << r.corank << " at x = " << point_str(r.value) << "\n";

  for (const Rational chi : {Rational(1), Rational(2)}) {
    auto c = from_character(*tri, Character<Rational>{chi});
    std::cout << "character " << chi.str() << ": minimal configuration of dim " << c.dim() << ", S = "
              << s_class(c)[0].str() << "\n";
  }

  auto snf = disc_cokernel(4);
  std::cout << "disc operator n=4, invariant factors:";
  for (const auto &f : snf.factors) std::cout << " " << f.str();
  std::cout << "\n";

  auto fam = prime_mub_family(5);
  std::cout << fam.bases.size() << " mutually unbiased bases in dimension 5: "
            << (mub_check(fam) ? "verified" : "check failed") << "\n";
}
