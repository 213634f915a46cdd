#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "liepoisson/algebra.hpp"

namespace liepoisson {

struct Monomial {
  Scalar coeff;
  std::vector<int> powers;
};

// Polynomial with rational coefficients; evaluates exactly over Scalar or in double precision.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int arity, std::vector<Monomial> terms);

  static Polynomial linear(const ExactVec& coeffs);
  // sum_i w_i z_i^2 / 2
  static Polynomial half_weighted_squares(const ExactVec& weights);

  int arity() const { return arity_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  template <class T>
  T eval(const std::vector<T>& z) const;
  template <class T>
  std::vector<T> gradient(const std::vector<T>& z) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial scaled(const Scalar& s) const;
  // Embeds into a larger coordinate space; variable i becomes variable offset + i.
  Polynomial embedded(int new_arity, int offset) const;

 private:
  int arity_ = 0;
  std::vector<Monomial> terms_;
};

template <class T>
T int_power(const T& x, int p) {
  T r(1);
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

template <class T>
T Polynomial::eval(const std::vector<T>& z) const {
  require_dim(arity_, z.size());
  T sum(0);
  for (const auto& m : terms_) {
    T t = convert<T>(m.coeff);
    for (int i = 0; i < arity_; ++i)
      if (m.powers[i] > 0) t *= int_power(z[i], m.powers[i]);
    sum += t;
  }
  return sum;
}

template <class T>
std::vector<T> Polynomial::gradient(const std::vector<T>& z) const {
  require_dim(arity_, z.size());
  std::vector<T> g(arity_, T(0));
  for (const auto& m : terms_)
    for (int d = 0; d < arity_; ++d) {
      if (m.powers[d] == 0) continue;
      T t = convert<T>(m.coeff) * T(m.powers[d]);
      for (int i = 0; i < arity_; ++i) {
        int p = i == d ? m.powers[i] - 1 : m.powers[i];
        if (p > 0) t *= int_power(z[i], p);
      }
      g[d] += t;
    }
  return g;
}

// Scalar function on the dual space. Gradients are analytic when available (polynomial form or a
// supplied gradient), otherwise central differences with h_i = cbrt(eps) * max(1, |z_i|).
class Observable {
 public:
  using Fn = std::function<double(const Vec&)>;
  using GradFn = std::function<Vec(const Vec&)>;

  Observable() = default;
  Observable(Polynomial p);  // NOLINT(google-explicit-constructor)
  Observable(int arity, Fn value, GradFn gradient = {});

  int arity() const { return arity_; }
  const std::optional<Polynomial>& polynomial() const { return poly_; }
  bool has_analytic_gradient() const { return poly_.has_value() || static_cast<bool>(grad_); }

  double value(const Vec& z) const;
  Vec gradient(const Vec& z) const;
  Vec finite_difference_gradient(const Vec& z) const;

 private:
  int arity_ = 0;
  std::optional<Polynomial> poly_;
  Fn value_;
  GradFn grad_;
};

// Lambda_ij(z) = sigma * sum_n c[i][j][n] z_n
class PoissonBivector {
 public:
  PoissonBivector(LieAlgebra alg, Sign sign) : alg_(std::move(alg)), sign_(sign) {}

  const LieAlgebra& algebra() const { return alg_; }
  Sign sign() const { return sign_; }
  int dim() const { return alg_.dim(); }

  template <class T>
  std::vector<std::vector<T>> matrix(const std::vector<T>& z) const {
    require_dim(dim(), z.size());
    std::vector<std::vector<T>> lam(dim(), std::vector<T>(dim(), T(0)));
    for (const auto& e : alg_.entries()) lam[e.i][e.j] += entry_value<T>(e) * z[e.k];
    if (sign_ == Sign::minus)
      for (auto& row : lam)
        for (auto& x : row) x = -x;
    return lam;
  }

 private:
  LieAlgebra alg_;
  Sign sign_;
};

// zdot_j = sigma * sum_{i,n} c[i][j][n] z_n dH/dz_i, i.e. coadjoint_apply(grad H, z).
template <class T>
std::vector<T> lp_field_from_gradient(const PoissonBivector& biv, const std::vector<T>& grad, const std::vector<T>& z) {
  return coadjoint_apply(biv.algebra(), grad, z, biv.sign());
}

Vec lp_vector_field(const PoissonBivector& biv, const Observable& H, const Vec& z);
ExactVec lp_vector_field(const PoissonBivector& biv, const Polynomial& H, const ExactVec& z);

// {F,H}(z) = sigma * sum c[i][j][n] z_n dF/dz_i dH/dz_j
template <class T>
T poisson_bracket_from_gradients(const PoissonBivector& biv, const std::vector<T>& dF, const std::vector<T>& dH,
                                 const std::vector<T>& z) {
  require_dim(biv.dim(), dF.size());
  require_dim(biv.dim(), dH.size());
  require_dim(biv.dim(), z.size());
  T s(0);
  for (const auto& e : biv.algebra().entries()) s += entry_value<T>(e) * z[e.k] * dF[e.i] * dH[e.j];
  return biv.sign() == Sign::minus ? T(-s) : s;
}

double poisson_bracket_eval(const PoissonBivector& biv, const Observable& F, const Observable& H, const Vec& z);
Scalar poisson_bracket_eval(const PoissonBivector& biv, const Polynomial& F, const Polynomial& H, const ExactVec& z);

// Basis of {c : sum_i c_i c[i][j][m] = 0 for all j, m}, by exact row reduction.
std::vector<ExactVec> linear_casimir_basis(const LieAlgebra& alg);

// max over samples of ||Lambda(z) grad C(z)||_inf
double casimir_residual(const PoissonBivector& biv, const Observable& C, const std::vector<Vec>& samples);

// Exact nullspace of a rational matrix (rows x cols), returned as basis vectors of length cols.
std::vector<ExactVec> nullspace(const Matrix& a, int cols);

}  // namespace liepoisson
