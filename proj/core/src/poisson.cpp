#include "liepoisson/poisson.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace liepoisson {

Polynomial::Polynomial(int arity, std::vector<Monomial> terms) : arity_(arity) {
  if (arity <= 0) throw ShapeError("polynomial arity must be positive");
  // Merge equal exponent vectors so equality and printing are canonical.
  std::map<std::vector<int>, Scalar> merged;
  for (auto& m : terms) {
    if (static_cast<int>(m.powers.size()) != arity) throw ShapeError("monomial powers length differs from arity");
    for (int p : m.powers)
      if (p < 0) throw ShapeError("negative exponent");
    merged[m.powers] += m.coeff;
  }
  for (auto& [powers, coeff] : merged)
    if (coeff != 0) terms_.push_back({coeff, powers});
}

Polynomial Polynomial::linear(const ExactVec& coeffs) {
  std::vector<Monomial> t;
  const int n = static_cast<int>(coeffs.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> p(n, 0);
    p[i] = 1;
    t.push_back({coeffs[i], p});
  }
  return Polynomial(n, t);
}

Polynomial Polynomial::half_weighted_squares(const ExactVec& weights) {
  std::vector<Monomial> t;
  const int n = static_cast<int>(weights.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> p(n, 0);
    p[i] = 2;
    t.push_back({weights[i] / 2, p});
  }
  return Polynomial(n, t);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (arity_ != other.arity_) throw DimensionMismatch(arity_, other.arity_);
  auto t = terms_;
  t.insert(t.end(), other.terms_.begin(), other.terms_.end());
  return Polynomial(arity_, t);
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  auto t = terms_;
  for (auto& m : t) m.coeff *= s;
  return Polynomial(arity_, t);
}

Polynomial Polynomial::embedded(int new_arity, int offset) const {
  if (offset < 0 || offset + arity_ > new_arity) throw ShapeError("embedding does not fit");
  std::vector<Monomial> t;
  for (const auto& m : terms_) {
    std::vector<int> p(new_arity, 0);
    for (int i = 0; i < arity_; ++i) p[offset + i] = m.powers[i];
    t.push_back({m.coeff, p});
  }
  return Polynomial(new_arity, t);
}

Observable::Observable(Polynomial p) : arity_(p.arity()), poly_(std::move(p)) {}

Observable::Observable(int arity, Fn value, GradFn gradient)
    : arity_(arity), value_(std::move(value)), grad_(std::move(gradient)) {}

double Observable::value(const Vec& z) const {
  require_dim(arity_, z.size());
  if (poly_) return poly_->eval(z);
  if (!value_) throw GradientUnavailable();
  return value_(z);
}

Vec Observable::gradient(const Vec& z) const {
  require_dim(arity_, z.size());
  if (poly_) return poly_->gradient(z);
  if (grad_) return grad_(z);
  return finite_difference_gradient(z);
}

Vec Observable::finite_difference_gradient(const Vec& z) const {
  if (!poly_ && !value_) throw GradientUnavailable();
  static const double base = std::cbrt(std::numeric_limits<double>::epsilon());
  Vec g(z.size());
  Vec w = z;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double h = base * std::max(1.0, std::fabs(z[i]));
    w[i] = z[i] + h;
    double up = value(w);
    w[i] = z[i] - h;
    double down = value(w);
    w[i] = z[i];
    g[i] = (up - down) / (2 * h);
  }
  return g;
}

Vec lp_vector_field(const PoissonBivector& biv, const Observable& H, const Vec& z) {
  require_dim(biv.dim(), H.arity());
  return lp_field_from_gradient(biv, H.gradient(z), z);
}

ExactVec lp_vector_field(const PoissonBivector& biv, const Polynomial& H, const ExactVec& z) {
  require_dim(biv.dim(), H.arity());
  return lp_field_from_gradient(biv, H.gradient(z), z);
}

double poisson_bracket_eval(const PoissonBivector& biv, const Observable& F, const Observable& H, const Vec& z) {
  return poisson_bracket_from_gradients(biv, F.gradient(z), H.gradient(z), z);
}

Scalar poisson_bracket_eval(const PoissonBivector& biv, const Polynomial& F, const Polynomial& H, const ExactVec& z) {
  return poisson_bracket_from_gradients(biv, F.gradient(z), H.gradient(z), z);
}

std::vector<ExactVec> nullspace(const Matrix& a, int cols) {
  Matrix m = a;
  std::vector<int> pivot_col;
  int row = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Scalar inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Scalar factor = m[r][col];
      for (int c = 0; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<ExactVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ExactVec v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(v);
  }
  return basis;
}

std::vector<ExactVec> linear_casimir_basis(const LieAlgebra& alg) {
  const int n = alg.dim();
  Matrix rows;
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < n; ++m) {
      ExactVec r(n);
      bool any = false;
      for (int i = 0; i < n; ++i) {
        r[i] = alg.c(i, j, m);
        any = any || r[i] != 0;
      }
      if (any) rows.push_back(r);
    }
  return nullspace(rows, n);
}

double casimir_residual(const PoissonBivector& biv, const Observable& C, const std::vector<Vec>& samples) {
  double worst = 0;
  for (const auto& z : samples) {
    auto lam = biv.matrix(z);
    auto g = C.gradient(z);
    for (int i = 0; i < biv.dim(); ++i) {
      double s = 0;
      for (int j = 0; j < biv.dim(); ++j) s += lam[i][j] * g[j];
      worst = std::max(worst, std::fabs(s));
    }
  }
  return worst;
}

}  // namespace liepoisson
