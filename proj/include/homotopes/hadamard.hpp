#pragma once

#include "homotopes/configurations.hpp"
#include "homotopes/cyclotomic.hpp"
#include "homotopes/errors.hpp"
#include "homotopes/graph.hpp"
#include "homotopes/matrix.hpp"

#include <complex>
#include <string>
#include <vector>

namespace homotopes {

using CycloMatrix = Matrix<Cyclotomic>;

/// Entries are stored with modulus 1 (Butson convention); the unitary
/// picture is recovered by the scalar 1/sqrt(n).
inline constexpr const char *kHadamardConvention = "modulus-1 entries (Butson); unitary form is A/sqrt(n)";

/// Fourier matrix F_n with entries zeta_n^(ij).
inline CycloMatrix fourier_matrix(unsigned n) {
  CycloMatrix f(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) f(i, j) = Cyclotomic::zeta(n, static_cast<long>(i * j));
  return f;
}

inline bool all_entries_nonzero(const CycloMatrix &a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_zero()) return false;
  return true;
}

/// sum_j a_ij / a_sj = 0 for all rows i != s; entries must be nonzero.
inline bool is_generalized_hadamard(const CycloMatrix &a) {
  if (!a.is_square() || !all_entries_nonzero(a)) return false;
  std::size_t n = a.rows();
  std::vector<std::vector<Cyclotomic>> inv(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < n; ++j) inv[s].push_back(a(s, j).inv());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s) {
      if (i == s) continue;
      Cyclotomic acc(0);
      for (std::size_t j = 0; j < n; ++j) acc = acc + a(i, j) * inv[s][j];
      if (!acc.is_zero()) return false;
    }
  return true;
}

/// h(A)_ij = 1 / (n a_ji).
inline CycloMatrix hadamard_involution(const CycloMatrix &a) {
  if (!a.is_square()) throw DomainError("Hadamard involution needs a square matrix");
  if (!all_entries_nonzero(a)) throw DomainError("Hadamard involution needs nonzero entries");
  std::size_t n = a.rows();
  CycloMatrix h(n, n);
  Cyclotomic nn(Rational(static_cast<long>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = (nn * a(j, i)).inv();
  return h;
}

/// A invertible and h(A) = A^-1 (the second characterization of generalized
/// Hadamard matrices).
inline bool involution_inverts(const CycloMatrix &a) {
  if (!a.is_square() || !all_entries_nonzero(a)) return false;
  if (rank(a) != a.rows()) return false;
  return hadamard_involution(a) == inverse(a);
}

/// Generalized Hadamard with unimodular entries a conj(a) = 1.
inline bool is_complex_hadamard(const CycloMatrix &a) {
  if (!is_generalized_hadamard(a)) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) * a(i, j).conj() == Cyclotomic(1))) return false;
  return true;
}

/// a'_ij = a_ij a_11 / (a_i1 a_1j): first row and column become 1.
inline CycloMatrix dephase(const CycloMatrix &a) {
  if (!a.is_square() || !all_entries_nonzero(a)) throw DomainError("dephasing needs a square matrix with nonzero entries");
  std::size_t n = a.rows();
  CycloMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = a(i, j) * a(0, 0) / (a(i, 0) * a(0, j));
  return d;
}

/// Checks tr((E_ii - 1/n)(A E_jj A^-1 - 1/n)) = 0 for all i, j: the diagonal
/// Cartan subalgebra and its conjugate by A are orthogonal.
inline bool cartan_pair_check(const CycloMatrix &a) {
  if (!a.is_square()) throw DomainError("Cartan pair check needs a square matrix");
  std::size_t n = a.rows();
  if (rank(a) != n) throw DomainError("matrix is singular");
  CycloMatrix ainv = inverse(a);
  Cyclotomic inv_n(Rational(1, static_cast<long>(n)));
  CycloMatrix scalar = inv_n * CycloMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    CycloMatrix q = a * CycloMatrix::unit(n, n, j, j) * ainv - scalar;
    for (std::size_t i = 0; i < n; ++i) {
      CycloMatrix p = CycloMatrix::unit(n, n, i, i) - scalar;
      if (!(p * q).trace().is_zero()) return false;
    }
  }
  return true;
}

/// Bases of C^n given by the rows of square matrices.
struct BasisFamily {
  unsigned n = 0;
  std::vector<CycloMatrix> bases;
};

inline Cyclotomic hermitian(const std::vector<Cyclotomic> &u, const std::vector<Cyclotomic> &v) {
  Cyclotomic acc(0);
  for (std::size_t k = 0; k < u.size(); ++k) acc = acc + u[k] * v[k].conj();
  return acc;
}

/// Projective unbiasedness n <e,f> conj<e,f> = <e,e><f,f> for every pair of
/// rows from different bases. Throws when a basis is not orthogonal.
inline bool mub_check(const BasisFamily &f) {
  Cyclotomic n(Rational(static_cast<long>(f.n)));
  for (std::size_t b = 0; b < f.bases.size(); ++b) {
    const auto &m = f.bases[b];
    if (m.rows() != f.n || m.cols() != f.n)
      throw DomainError("basis " + std::to_string(b) + " is not " + std::to_string(f.n) + "x" + std::to_string(f.n));
    for (std::size_t i = 0; i < f.n; ++i) {
      if (hermitian(m.row(i), m.row(i)).is_zero())
        throw DomainError("basis " + std::to_string(b) + " contains a null vector");
      for (std::size_t j = i + 1; j < f.n; ++j)
        if (!hermitian(m.row(i), m.row(j)).is_zero())
          throw DomainError("basis " + std::to_string(b) + " is not orthogonal (rows " + std::to_string(i) +
                            ", " + std::to_string(j) + ")");
    }
  }
  for (std::size_t b = 0; b < f.bases.size(); ++b)
    for (std::size_t c = b + 1; c < f.bases.size(); ++c)
      for (std::size_t i = 0; i < f.n; ++i)
        for (std::size_t j = 0; j < f.n; ++j) {
          auto u = f.bases[b].row(i), v = f.bases[c].row(j);
          Cyclotomic h = hermitian(u, v);
          if (!(n * h * h.conj() == hermitian(u, u) * hermitian(v, v))) return false;
        }
  return true;
}

inline bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// p + 1 mutually unbiased bases of C^p: the standard basis and, for
/// t = 0..p-1, the vectors (zeta_p^(t j^2 + k j))_j. For p = 2 the three
/// Pauli eigenbases over Q(i).
inline BasisFamily prime_mub_family(unsigned p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  BasisFamily f;
  f.n = p;
  f.bases.push_back(CycloMatrix::identity(p));
  if (p == 2) {
    Cyclotomic one(1), i = Cyclotomic::zeta(4, 1);
    f.bases.push_back(CycloMatrix({{one, one}, {one, -one}}));
    f.bases.push_back(CycloMatrix({{one, i}, {one, -i}}));
    return f;
  }
  for (unsigned t = 0; t < p; ++t) {
    CycloMatrix b(p, p);
    for (unsigned k = 0; k < p; ++k)
      for (unsigned j = 0; j < p; ++j) b(k, j) = Cyclotomic::zeta(p, static_cast<long>((t * j * j + k * j) % p));
    f.bases.push_back(std::move(b));
  }
  return f;
}

/// Projector configuration on the complete multipartite graph with one part
/// per basis: vertex (b, i) gets v (x) conj(v)/<v,v> for row i of basis b,
/// with targets r = 1/n on every edge.
inline ProjectorConfig<Cyclotomic> mub_projector_config(const BasisFamily &f) {
  auto g = share(graphs::complete_multipartite(f.bases.size(), f.n));
  std::vector<Projector<Cyclotomic>> ps;
  for (const auto &b : f.bases)
    for (std::size_t i = 0; i < f.n; ++i) {
      auto v = b.row(i);
      std::vector<Cyclotomic> x;
      for (const auto &c : v) x.push_back(c.conj());
      ps.push_back(Projector<Cyclotomic>::normalized(v, x));
    }
  std::vector<Cyclotomic> r(g->edge_count(), Cyclotomic(Rational(1, static_cast<long>(f.n))));
  return ProjectorConfig<Cyclotomic>(g, std::move(ps), std::move(r));
}

/// Floating-point counterparts for externally supplied numerical candidates,
/// with absolute tolerance eps.
namespace approx {

using CMatrix = std::vector<std::vector<std::complex<double>>>;

inline void require_square(const CMatrix &a) {
  for (const auto &row : a)
    if (row.size() != a.size()) throw DomainError("matrix is not square");
}

inline bool is_generalized_hadamard(const CMatrix &a, double eps = 1e-10) {
  require_square(a);
  std::size_t n = a.size();
  for (const auto &row : a)
    for (const auto &z : row)
      if (std::abs(z) <= eps) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s) {
      if (i == s) continue;
      std::complex<double> acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += a[i][j] / a[s][j];
      if (std::abs(acc) > eps) return false;
    }
  return true;
}

inline bool is_complex_hadamard(const CMatrix &a, double eps = 1e-10) {
  if (!is_generalized_hadamard(a, eps)) return false;
  for (const auto &row : a)
    for (const auto &z : row)
      if (std::abs(std::norm(z) - 1.0) > eps) return false;
  return true;
}

inline CMatrix hadamard_involution(const CMatrix &a) {
  require_square(a);
  std::size_t n = a.size();
  CMatrix h(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = 1.0 / (static_cast<double>(n) * a[j][i]);
  return h;
}

inline CMatrix dephase(const CMatrix &a) {
  require_square(a);
  std::size_t n = a.size();
  CMatrix d(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = a[i][j] * a[0][0] / (a[i][0] * a[0][j]);
  return d;
}

} // namespace approx

} // namespace homotopes
