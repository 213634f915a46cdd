#pragma once

#include <optional>
#include <string>
#include <type_traits>

#include "liepoisson/poisson.hpp"

namespace liepoisson {

enum class Variant { Double, CartanKilling, CasimirDissipation, HamiltonDissipation, Rayleigh };

Variant parse_variant(const std::string& text);
const char* to_string(Variant v);

struct SymmetricBracketSpec {
  Variant variant = Variant::Double;
  std::optional<Matrix> psi;         // Casimir and Hamilton variants; identity when absent
  std::optional<Observable> casimir;  // Casimir and Hamilton variants
  std::optional<Matrix> upsilon;     // Rayleigh: dual -> algebra
  std::optional<Scalar> a;           // unset: +1 with an entropy, -1 without

  void validate(int dim) const;
};

// G_ij(z) = sum_l Lambda_il(z) Lambda_jl(z)
template <class T>
std::vector<std::vector<T>> double_bracket_metric(const PoissonBivector& biv, const std::vector<T>& z) {
  auto lam = biv.matrix(z);
  const int n = biv.dim();
  std::vector<std::vector<T>> g(n, std::vector<T>(n, T(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      T s(0);
      for (int l = 0; l < n; ++l) s += lam[i][l] * lam[j][l];
      g[i][j] = s;
      g[j][i] = s;
    }
  return g;
}

// (ad^T_x u)_j = sum_{i,n} c[i][j][n] x_i u_n, the transpose of y -> [x, y].
template <class T>
std::vector<T> ad_transpose(const LieAlgebra& alg, const std::vector<T>& x, const std::vector<T>& u) {
  std::vector<T> out(alg.dim(), T(0));
  for (const auto& e : alg.entries()) out[e.j] += entry_value<T>(e) * x[e.i] * u[e.k];
  return out;
}

// Matrix entries may be exact while the vector is double.
template <class U, class T>
std::vector<T> mat_vec(const std::vector<std::vector<U>>& m, const std::vector<T>& v) {
  std::vector<T> out(m.size(), T(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m[i][j] == 0) continue;
      if constexpr (std::is_same_v<U, T>)
        out[i] += m[i][j] * v[j];
      else
        out[i] += convert<T>(m[i][j]) * v[j];
    }
  return out;
}

// Irreversible field generated by S, written so that grad F . zdot = (F, S) for every F.
//   Double:        G(z) grad S
//   CartanKilling: G_CK grad S
//   Casimir:       ad^T_{grad S}(psi [grad C, grad S])
//   Hamilton:      ad^T_{grad C}(psi [grad S, grad C])
//   Rayleigh:      sigma * coadjoint_apply(Upsilon z, z)
// grad_c is required for the Casimir and Hamilton variants.
template <class T>
std::vector<T> dissipative_field_from_gradients(const PoissonBivector& biv, const SymmetricBracketSpec& sym,
                                                const std::vector<T>& grad_s, const std::vector<T>* grad_c,
                                                const std::vector<T>& z) {
  const auto& alg = biv.algebra();
  require_dim(biv.dim(), z.size());
  switch (sym.variant) {
    case Variant::Double:
      require_dim(biv.dim(), grad_s.size());
      return mat_vec(double_bracket_metric(biv, z), grad_s);
    case Variant::CartanKilling:
      require_dim(biv.dim(), grad_s.size());
      return mat_vec(cartan_killing_metric(alg), grad_s);
    case Variant::CasimirDissipation:
    case Variant::HamiltonDissipation: {
      if (!grad_c) throw MissingCasimir();
      const Matrix psi = sym.psi ? *sym.psi : identity_matrix(biv.dim());
      if (sym.variant == Variant::CasimirDissipation)
        return ad_transpose(alg, grad_s, mat_vec(psi, bracket_eval(alg, *grad_c, grad_s)));
      return ad_transpose(alg, *grad_c, mat_vec(psi, bracket_eval(alg, grad_s, *grad_c)));
    }
    case Variant::Rayleigh: {
      if (!sym.upsilon) throw ShapeError("rayleigh dissipation needs upsilon");
      auto w = coadjoint_apply(alg, mat_vec(*sym.upsilon, z), z, biv.sign());
      if (biv.sign() == Sign::minus)
        for (auto& x : w) x = -x;
      return w;
    }
  }
  throw ShapeError("unknown variant");
}

Vec dissipative_field(const PoissonBivector& biv, const SymmetricBracketSpec& sym, const Observable& S, const Vec& z);
// Exact field; the Casimir, when needed, must be polynomial.
ExactVec dissipative_field(const PoissonBivector& biv, const SymmetricBracketSpec& sym, const Polynomial& S,
                           const ExactVec& z);

// (F, S) for the selected variant. For Rayleigh this is grad F . dissipative_field.
double symmetric_bracket_eval(const PoissonBivector& biv, const SymmetricBracketSpec& sym, const Observable& F,
                              const Observable& S, const Vec& z);

struct MetriplecticSystem {
  PoissonBivector biv;
  SymmetricBracketSpec sym;
  Observable hamiltonian;
  std::optional<Observable> entropy;

  Scalar coupling() const;
  const Observable& generator() const { return entropy ? *entropy : hamiltonian; }
};

Vec metriplectic_field(const MetriplecticSystem& sys, const Vec& z);
ExactVec metriplectic_field(const MetriplecticSystem& sys, const Polynomial& H, const std::optional<Polynomial>& S,
                            const ExactVec& z);

struct CompatibilityReport {
  double poisson = 0;    // max |{S, H}|
  double symmetric = 0;  // max |(H, S)|
  bool pass(double tol) const { return poisson <= tol && symmetric <= tol; }
};

CompatibilityReport generation_compatibility_check(const MetriplecticSystem& sys, const std::vector<Vec>& samples);

// Rayleigh field on a coupled total with block-diagonal Upsilon = Ug (+) Uh.
Vec coupled_rayleigh_field(const PoissonBivector& total, const Matrix& upsilon_g, const Matrix& upsilon_h, const Vec& z);
ExactVec coupled_rayleigh_field(const PoissonBivector& total, const Matrix& upsilon_g, const Matrix& upsilon_h,
                                const ExactVec& z);

Matrix block_diagonal(const Matrix& a, const Matrix& b);

}  // namespace liepoisson
