#include "liepoisson/algebra.hpp"

#include <sstream>

namespace liepoisson {

AntisymmetryViolation::AntisymmetryViolation(int i_, int j_, int k_)
    : Error([&] {
        std::ostringstream m;
        m << "antisymmetry violated at c[" << i_ << "][" << j_ << "][" << k_ << "]";
        return m.str();
      }()),
      i(i_), j(j_), k(k_) {}

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t got)
    : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(got)) {}

NotASubalgebra::NotASubalgebra(int i_, int j_)
    : Error("[e" + std::to_string(i_) + ", e" + std::to_string(j_) + "] leaves the subalgebra"), i(i_), j(j_) {}

NonFiniteState::NonFiniteState(long step_)
    : Error("non-finite state at step " + std::to_string(step_)), step(step_) {}

Sign parse_sign(const std::string& text) {
  if (text == "plus" || text == "+") return Sign::plus;
  if (text == "minus" || text == "-") return Sign::minus;
  throw SchemaError("sign must be plus or minus, got " + text);
}

const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

std::vector<std::string> default_labels(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels, const std::vector<Triple>& entries)
    : dim_(dim), labels_(std::move(labels)), c_(dim, dim, dim) {
  if (dim <= 0) throw ShapeError("algebra dimension must be positive");
  if (labels_.empty()) labels_ = default_labels("e", dim);
  if (static_cast<int>(labels_.size()) != dim) throw ShapeError("label count differs from dimension");
  std::vector<bool> seen(static_cast<std::size_t>(dim) * dim * dim, false);
  for (const auto& e : entries) {
    if (e.i < 1 || e.i > dim || e.j < 1 || e.j > dim || e.k < 1 || e.k > dim)
      throw ShapeError("structure constant index out of range");
    if (e.i == e.j) {
      if (e.v != 0) throw AntisymmetryViolation(e.i, e.j, e.k);
      continue;
    }
    int lo = std::min(e.i, e.j) - 1, hi = std::max(e.i, e.j) - 1, k = e.k - 1;
    Scalar v = e.i < e.j ? e.v : Scalar(-e.v);
    auto slot = (static_cast<std::size_t>(lo) * dim + hi) * dim + k;
    if (seen[slot] && c_(lo, hi, k) != v) throw AntisymmetryViolation(e.i, e.j, e.k);
    seen[slot] = true;
    c_(lo, hi, k) = v;
  }
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = 0; k < dim; ++k) c_(j, i, k) = -c_(i, j, k);
  index_entries();
}

LieAlgebra LieAlgebra::from_tensor(const Tensor3& c, std::vector<std::string> labels) {
  int n = c.dim0();
  if (c.dim1() != n || c.dim2() != n) throw ShapeError("structure tensor must be cubic");
  std::vector<Triple> upper;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (c(i, j, k) != -c(j, i, k)) throw AntisymmetryViolation(i + 1, j + 1, k + 1);
        if (i < j && c(i, j, k) != 0) upper.push_back({i + 1, j + 1, k + 1, c(i, j, k)});
      }
  return LieAlgebra(n, std::move(labels), upper);
}

LieAlgebra LieAlgebra::abelian(int dim, std::vector<std::string> labels) {
  return LieAlgebra(dim, std::move(labels), {});
}

void LieAlgebra::index_entries() {
  entries_.clear();
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c_(i, j, k) != 0) entries_.push_back({i, j, k, c_(i, j, k), c_(i, j, k).get_d()});
}

std::vector<Triple> LieAlgebra::upper_triples() const {
  std::vector<Triple> out;
  for (const auto& e : entries_)
    if (e.i < e.j) out.push_back({e.i + 1, e.j + 1, e.k + 1, e.v});
  return out;
}

Scalar jacobi_residual(const Tensor3& c) {
  int n = c.dim0();
  if (c.dim1() != n || c.dim2() != n) throw ShapeError("structure tensor must be cubic");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (c(i, j, k) != -c(j, i, k)) throw AntisymmetryViolation(i + 1, j + 1, k + 1);

  // With antisymmetry the cyclic sum is alternating in (i,j,k), so i<j<k covers every magnitude.
  Scalar worst = 0;
  ExactVec acc(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        for (auto& x : acc) x = 0;
        for (int p = 0; p < n; ++p) {
          const Scalar& a = c(i, j, p);
          const Scalar& b = c(j, k, p);
          const Scalar& d = c(k, i, p);
          for (int m = 0; m < n; ++m) {
            if (a != 0) acc[m] += a * c(p, k, m);
            if (b != 0) acc[m] += b * c(p, i, m);
            if (d != 0) acc[m] += d * c(p, j, m);
          }
        }
        for (const auto& x : acc)
          if (abs(x) > worst) worst = abs(x);
      }
  return worst;
}

Scalar jacobi_residual(const LieAlgebra& alg) { return jacobi_residual(alg.tensor()); }

Matrix cartan_killing_metric(const LieAlgebra& alg) {
  int n = alg.dim();
  Matrix g(n, ExactVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar s = 0;
      for (int m = 0; m < n; ++m)
        for (int p = 0; p < n; ++p)
          if (alg.c(i, m, p) != 0) s += alg.c(i, m, p) * alg.c(j, p, m);
      g[i][j] = s;
      g[j][i] = s;
    }
  return g;
}

}  // namespace liepoisson
