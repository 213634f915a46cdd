#pragma once

// Seeded generators shared by the property tests and the acceptance binary.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "liepoisson/catalog.hpp"
#include "liepoisson/dissipation.hpp"
#include "liepoisson/extensions.hpp"

namespace liepoisson::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // p/q with |p| <= num and 1 <= q <= den.
  Scalar rational(int num = 3, int den = 3) {
    Scalar x(integer(-num, num), integer(1, den));
    x.canonicalize();
    return x;
  }
  Scalar nonzero_rational(int num = 3, int den = 3) {
    Scalar x;
    do x = rational(num, den);
    while (x == 0);
    return x;
  }

  ExactVec exact_state(int n, int num = 5, int den = 4) {
    ExactVec v(n);
    for (auto& x : v) x = rational(num, den);
    return v;
  }
  Vec state(int n, double scale = 1.0) {
    Vec v(n);
    for (auto& x : v) x = uniform(-scale, scale);
    return v;
  }

  // Random polynomial with rational coefficients, total degree at most max_degree.
  Polynomial polynomial(int n, int max_degree = 3, int terms = 6) {
    std::vector<Monomial> ms;
    for (int t = 0; t < terms; ++t) {
      std::vector<int> p(n, 0);
      int deg = integer(1, max_degree);
      for (int d = 0; d < deg; ++d) ++p[integer(0, n - 1)];
      ms.push_back({nonzero_rational(), p});
    }
    return Polynomial(n, ms);
  }

  // Symmetric positive semidefinite rational matrix B^T B.
  Matrix psd_matrix(int n) {
    Matrix b(n, ExactVec(n)), out(n, ExactVec(n));
    for (auto& row : b)
      for (auto& x : row) x = rational(2, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out[i][j] += b[k][i] * b[k][j];
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline LieAlgebra algebra(int n, const std::vector<Triple>& t) { return LieAlgebra(n, {}, t); }

inline std::vector<LieAlgebra> small_lie_algebras() {
  return {
      LieAlgebra::abelian(1),
      LieAlgebra::abelian(2),
      algebra(2, {{1, 2, 1, 1}}),                                         // affine line
      algebra(3, {{1, 2, 3, 1}}),                                         // Heisenberg
      algebra(3, {{1, 2, 3, 1}, {3, 1, 2, 1}, {2, 3, 1, 1}}),             // so3
      algebra(3, {{1, 3, 1, 1}, {2, 3, 2, 1}}),                           // r3k
      algebra(3, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}}),            // sl2
      algebra(3, {{1, 2, 2, 1}, {1, 3, 3, Scalar(1, 2)}}),                // solvable, diagonal action
  };
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<Triple> t = a.upper_triples();
  for (auto e : b.upper_triples()) t.push_back({e.i + a.dim(), e.j + a.dim(), e.k + a.dim(), e.v});
  return algebra(a.dim() + b.dim(), t);
}

// new e'_p = sum_q a[p][q] e_q with a invertible; inverse supplied by the caller.
inline LieAlgebra change_basis(const LieAlgebra& alg, const Matrix& a, const Matrix& a_inv) {
  const int n = alg.dim();
  Tensor3 out(n, n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      ExactVec img(n);
      for (const auto& e : alg.entries())
        if (a[p][e.i] != 0 && a[q][e.j] != 0) img[e.k] += a[p][e.i] * a[q][e.j] * e.v;
      for (int u = 0; u < n; ++u)
        if (img[u] != 0)
          for (int r = 0; r < n; ++r) out(p, q, r) += img[u] * a_inv[u][r];
    }
  return LieAlgebra::from_tensor(out);
}

// Unit lower-triangular matrix and its inverse by forward substitution.
inline std::pair<Matrix, Matrix> unit_lower(Gen& gen, int n, double density = 0.4) {
  Matrix a(n, ExactVec(n));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 1;
    for (int j = 0; j < i; ++j)
      if (gen.chance(density)) a[i][j] = gen.rational(2, 2);
  }
  Matrix inv(n, ExactVec(n));
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i) {
      Scalar s = i == c ? 1 : 0;
      for (int j = 0; j < i; ++j) s -= a[i][j] * inv[j][c];
      inv[i][c] = s;
    }
  return {a, inv};
}

inline bool closes(const LieAlgebra& alg, const std::vector<int>& idx) {
  std::vector<bool> in(alg.dim(), false);
  for (int i : idx) in[i] = true;
  for (const auto& e : alg.entries())
    if (in[e.i] && in[e.j] && !in[e.k]) return false;
  return true;
}

// A valid extended structure of shape (dim g, dim h) <= (3, 3): a Lie algebra with a known subalgebra,
// moved to the front, mixed by a unit lower-triangular change of basis, then decomposed.
inline ExtendedStructure valid_extended_structure(Gen& gen) {
  auto bases = small_lie_algebras();
  for (;;) {
    LieAlgebra total = bases[gen.integer(0, static_cast<int>(bases.size()) - 1)];
    if (gen.chance(0.7)) {
      LieAlgebra other = bases[gen.integer(0, static_cast<int>(bases.size()) - 1)];
      if (total.dim() + other.dim() <= 6) total = direct_sum(total, other);
    }
    const int t = total.dim();
    if (t < 2) continue;
    const int k = gen.integer(std::max(1, t - 3), std::min(3, t - 1));
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> chosen;
    for (int attempt = 0; attempt < 30 && chosen.empty(); ++attempt) {
      std::shuffle(perm.begin(), perm.end(), gen.engine());
      std::vector<int> idx(perm.begin(), perm.begin() + k);
      if (closes(total, idx)) chosen = perm;
    }
    if (chosen.empty()) continue;
    LieAlgebra ordered = permute_basis(total, chosen);
    auto [a, a_inv] = unit_lower(gen, t);
    LieAlgebra mixed = change_basis(ordered, a, a_inv);
    std::vector<int> g_idx(k);
    std::iota(g_idx.begin(), g_idx.end(), 0);
    return decompose_along_subalgebra(mixed, g_idx);
  }
}

// Adds a nonzero rational to one entry of one tensor; alternating tensors keep their alternation.
inline ExtendedStructure mutate(Gen& gen, ExtendedStructure s) {
  const int n = s.g.dim(), m = s.dimH;
  const Scalar d = gen.nonzero_rational();
  for (;;) {
    switch (gen.integer(0, 4)) {
      case 0: {
        if (n < 2) break;
        int i = gen.integer(0, n - 1), j = gen.integer(0, n - 1), k = gen.integer(0, n - 1);
        if (i == j) break;
        Tensor3 c = s.g.tensor();
        c(i, j, k) += d;
        c(j, i, k) -= d;
        s.g = LieAlgebra::from_tensor(c, s.g.labels());
        return s;
      }
      case 1: {
        if (m < 2) break;
        int a = gen.integer(0, m - 1), b = gen.integer(0, m - 1);
        if (a == b) break;
        int k = gen.integer(0, n - 1);
        s.phi(a, b, k) += d;
        s.phi(b, a, k) -= d;
        return s;
      }
      case 2: {
        if (m < 2) break;
        int a = gen.integer(0, m - 1), b = gen.integer(0, m - 1);
        if (a == b) break;
        int k = gen.integer(0, m - 1);
        s.kappa(a, b, k) += d;
        s.kappa(b, a, k) -= d;
        return s;
      }
      case 3:
        s.actions.L(gen.integer(0, m - 1), gen.integer(0, n - 1), gen.integer(0, n - 1)) += d;
        return s;
      default:
        s.actions.R(gen.integer(0, m - 1), gen.integer(0, n - 1), gen.integer(0, m - 1)) += d;
        return s;
    }
  }
}

// Sparse random data with no structure imposed.
inline ExtendedStructure random_extended_structure(Gen& gen) {
  const int n = gen.integer(1, 3), m = gen.integer(1, 3);
  std::vector<Triple> gc;
  for (int t = 0; t < gen.integer(0, 2); ++t) {
    int i = gen.integer(1, n), j = gen.integer(1, n);
    if (i < j) gc.push_back({i, j, gen.integer(1, n), gen.nonzero_rational()});
  }
  ExtendedStructure s{LieAlgebra(n, {}, gc), m, Tensor3(m, m, n), Tensor3(m, m, m), ActionTensors::zero(n, m), {}};
  auto sprinkle_alt = [&](Tensor3& t) {
    for (int r = 0; r < gen.integer(0, 2); ++r) {
      int a = gen.integer(0, t.dim0() - 1), b = gen.integer(0, t.dim1() - 1), k = gen.integer(0, t.dim2() - 1);
      if (a == b) continue;
      Scalar v = gen.nonzero_rational();
      t(a, b, k) += v;
      t(b, a, k) -= v;
    }
  };
  auto sprinkle = [&](Tensor3& t) {
    for (int r = 0; r < gen.integer(0, 2); ++r)
      t(gen.integer(0, t.dim0() - 1), gen.integer(0, t.dim1() - 1), gen.integer(0, t.dim2() - 1)) +=
          gen.nonzero_rational();
  };
  sprinkle_alt(s.phi);
  sprinkle_alt(s.kappa);
  sprinkle(s.actions.L);
  sprinkle(s.actions.R);
  return s;
}

// Cycles through valid, single-mutation and unstructured specs.
inline ExtendedStructure mixed_extended_structure(Gen& gen, int i) {
  switch (i % 3) {
    case 0: return valid_extended_structure(gen);
    case 1: return mutate(gen, valid_extended_structure(gen));
    default: return random_extended_structure(gen);
  }
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Scalar dot(const ExactVec& a, const ExactVec& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace liepoisson::testing
