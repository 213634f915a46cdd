#pragma once

#include <string>
#include <vector>

#include "liepoisson/errors.hpp"
#include "liepoisson/scalar.hpp"

namespace liepoisson {

enum class Sign { plus, minus };

inline int sigma(Sign s) { return s == Sign::plus ? 1 : -1; }
Sign parse_sign(const std::string& text);
const char* to_string(Sign s);

// Finite-dimensional Lie algebra given by structure constants, [e_i, e_j] = sum_k c[i][j][k] e_k.
// Only i<j is stored; the lower half is its reflection, so the tensor is antisymmetric by construction.
// Accessors are 0-based; Triple input and output is 1-based.
class LieAlgebra {
 public:
  struct Entry {
    int i, j, k;
    Scalar v;
    double vd;
  };

  LieAlgebra() = default;
  LieAlgebra(int dim, std::vector<std::string> labels, const std::vector<Triple>& entries);

  // Requires an antisymmetric tensor; raises AntisymmetryViolation otherwise.
  static LieAlgebra from_tensor(const Tensor3& c, std::vector<std::string> labels = {});
  static LieAlgebra abelian(int dim, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Scalar& c(int i, int j, int k) const { return c_(i, j, k); }
  const Tensor3& tensor() const { return c_; }

  // Every nonzero constant, both orderings of (i, j).
  const std::vector<Entry>& entries() const { return entries_; }
  // Nonzero constants with i < j, 1-based.
  std::vector<Triple> upper_triples() const;

  bool operator==(const LieAlgebra& other) const { return c_ == other.c_; }

 private:
  void index_entries();

  int dim_ = 0;
  std::vector<std::string> labels_;
  Tensor3 c_;
  std::vector<Entry> entries_;
};

std::vector<std::string> default_labels(const std::string& stem, int n);

// Max-abs cyclic sum over (i,j,k,m); antisymmetry is checked first.
Scalar jacobi_residual(const Tensor3& c);
Scalar jacobi_residual(const LieAlgebra& alg);

template <class T>
const T& entry_value(const LieAlgebra::Entry& e);
template <>
inline const Scalar& entry_value<Scalar>(const LieAlgebra::Entry& e) { return e.v; }
template <>
inline const double& entry_value<double>(const LieAlgebra::Entry& e) { return e.vd; }

inline void require_dim(std::size_t expected, std::size_t got) {
  if (expected != got) throw DimensionMismatch(expected, got);
}

template <class T>
std::vector<T> bracket_eval(const LieAlgebra& alg, const std::vector<T>& x, const std::vector<T>& y) {
  require_dim(alg.dim(), x.size());
  require_dim(alg.dim(), y.size());
  std::vector<T> out(alg.dim(), T(0));
  for (const auto& e : alg.entries()) out[e.k] += entry_value<T>(e) * x[e.i] * y[e.j];
  return out;
}

// w_j = sigma * sum_{i,n} c[i][j][n] mu_n xi_i. For so3 with the minus sign this is mu x xi.
template <class T>
std::vector<T> coadjoint_apply(const LieAlgebra& alg, const std::vector<T>& xi, const std::vector<T>& mu, Sign sign) {
  require_dim(alg.dim(), xi.size());
  require_dim(alg.dim(), mu.size());
  std::vector<T> out(alg.dim(), T(0));
  for (const auto& e : alg.entries()) out[e.j] += entry_value<T>(e) * mu[e.k] * xi[e.i];
  if (sign == Sign::minus)
    for (auto& x : out) x = -x;
  return out;
}

// G[i][j] = sum_{m,n} c[i][m][n] c[j][n][m].
Matrix cartan_killing_metric(const LieAlgebra& alg);

}  // namespace liepoisson
