#include "catch_amalgamated.hpp"

#include "homotopes/perverse.hpp"

using namespace homotopes;
using LM = LaurentMatrix;

namespace {

Laurent x() { return Laurent::variable("x"); }

// E_ii d E_jj d ... E_kk as plain matrix products.
LM chain(const LM &d, const std::vector<std::size_t> &idx) {
  std::size_t n = d.rows();
  LM acc = LM::unit(n, n, idx[0] % n, idx[0] % n);
  for (std::size_t k = 1; k < idx.size(); ++k) acc = acc * d * LM::unit(n, n, idx[k] % n, idx[k] % n);
  return acc;
}

std::vector<Laurent> torsion(const SNFResult &r) {
  std::vector<Laurent> out;
  for (const auto &f : r.factors)
    if (!f.is_zero() && !f.is_monomial()) out.push_back(f);
  return out;
}

} // namespace

TEST_CASE("disc operator") {
  CHECK(disc_operator(2) == LM({{Laurent(1), Laurent(-1)}, {-x(), Laurent(1)}}));
  CHECK(det(disc_operator(3)) == Laurent(1) - x());
  CHECK_THROWS_AS(disc_operator(1), DomainError);
}

TEST_CASE("cokernel of the disc operator is k[x]/(x-1)") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto r = disc_cokernel(n);
    CHECK(torsion(r) == std::vector<Laurent>{x() - Laurent(1)});
    CHECK(r.free_rank() == 0);
    CHECK(r.U * disc_operator(n) * r.V == r.diagonal());
  }
  auto doubled = smith_normal_form(doubled_disc_operator(3));
  CHECK(torsion(doubled) == std::vector<Laurent>{x() - Laurent(1), x() - Laurent(1)});
}

TEST_CASE("z relations") {
  for (std::size_t n = 2; n <= 8; ++n) CHECK(z_relations_check(n));
  // the same relations through plain matrix products
  for (std::size_t n = 2; n <= 6; ++n) {
    auto d = disc_operator(n);
    Laurent sign = n % 2 == 0 ? Laurent(1) : Laurent(-1);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k <= n; ++k) idx.push_back(i + k);
      CHECK(chain(d, idx) == (sign * x()) * LM::unit(n, n, i, i));
      CHECK(chain(d, {i, i}) == LM::unit(n, n, i, i));
    }
  }
  auto d4 = disc_operator(4);
  CHECK(chain(d4, {0, 2}).is_zero());
  CHECK(chain(d4, {1, 3}).is_zero());
  CHECK_FALSE(chain(d4, {0, 1}).is_zero());
  // n = 3: 2 and 0 are neighbors through the corner entry -x
  auto d3 = disc_operator(3);
  CHECK(chain(d3, {2, 0}) == (-x()) * LM::unit(3, 3, 2, 0));
}

TEST_CASE("sphere with a double point") {
  auto r = sphere_comparison(3, 3, {Rational(1), Rational(1), Rational(1)});
  CHECK(r.equivalent);
  CHECK(torsion(r.cyclic) == torsion(r.disc));
  CHECK(sphere_comparison(2, 3, {Rational(1), Rational(1), Rational(1)}).equivalent);
  CHECK_THROWS_AS(sphere_comparison(3, 3, {Rational(1), Rational(2), Rational(1)}), DomainError);
  CHECK_THROWS_AS(sphere_comparison(3, 3, {Rational(1), Rational(1)}), DomainError);
}
