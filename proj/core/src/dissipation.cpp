#include "liepoisson/dissipation.hpp"

#include <cmath>

namespace liepoisson {

Variant parse_variant(const std::string& text) {
  if (text == "double") return Variant::Double;
  if (text == "ck" || text == "cartan-killing") return Variant::CartanKilling;
  if (text == "casimir") return Variant::CasimirDissipation;
  if (text == "hamilton") return Variant::HamiltonDissipation;
  if (text == "rayleigh") return Variant::Rayleigh;
  throw SchemaError("unknown dissipation variant: " + text);
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::Double: return "double";
    case Variant::CartanKilling: return "ck";
    case Variant::CasimirDissipation: return "casimir";
    case Variant::HamiltonDissipation: return "hamilton";
    case Variant::Rayleigh: return "rayleigh";
  }
  return "?";
}

namespace {

void require_square(const Matrix& m, int n, const char* name) {
  if (static_cast<int>(m.size()) != n) throw ShapeError(std::string(name) + " has the wrong number of rows");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw ShapeError(std::string(name) + " has the wrong number of columns");
}

}  // namespace

void SymmetricBracketSpec::validate(int dim) const {
  if (psi) {
    require_square(*psi, dim, "psi");
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        if ((*psi)[i][j] != (*psi)[j][i]) throw ShapeError("psi is not symmetric");
  }
  if (upsilon) require_square(*upsilon, dim, "upsilon");
  if (casimir && casimir->arity() != dim) throw DimensionMismatch(dim, casimir->arity());
  if ((variant == Variant::CasimirDissipation || variant == Variant::HamiltonDissipation) && !casimir)
    throw MissingCasimir();
  if (variant == Variant::Rayleigh && !upsilon) throw ShapeError("rayleigh dissipation needs upsilon");
}

Vec dissipative_field(const PoissonBivector& biv, const SymmetricBracketSpec& sym, const Observable& S, const Vec& z) {
  Vec grad_s = sym.variant == Variant::Rayleigh ? Vec(biv.dim()) : S.gradient(z);
  if (sym.variant == Variant::CasimirDissipation || sym.variant == Variant::HamiltonDissipation) {
    if (!sym.casimir) throw MissingCasimir();
    Vec grad_c = sym.casimir->gradient(z);
    return dissipative_field_from_gradients(biv, sym, grad_s, &grad_c, z);
  }
  return dissipative_field_from_gradients<double>(biv, sym, grad_s, nullptr, z);
}

ExactVec dissipative_field(const PoissonBivector& biv, const SymmetricBracketSpec& sym, const Polynomial& S,
                           const ExactVec& z) {
  ExactVec grad_s = S.gradient(z);
  if (sym.variant == Variant::CasimirDissipation || sym.variant == Variant::HamiltonDissipation) {
    if (!sym.casimir) throw MissingCasimir();
    if (!sym.casimir->polynomial()) throw ShapeError("exact evaluation needs a polynomial casimir");
    ExactVec grad_c = sym.casimir->polynomial()->gradient(z);
    return dissipative_field_from_gradients(biv, sym, grad_s, &grad_c, z);
  }
  return dissipative_field_from_gradients<Scalar>(biv, sym, grad_s, nullptr, z);
}

double symmetric_bracket_eval(const PoissonBivector& biv, const SymmetricBracketSpec& sym, const Observable& F,
                              const Observable& S, const Vec& z) {
  const auto& alg = biv.algebra();
  Vec df = F.gradient(z);
  Vec ds = S.gradient(z);
  auto dot = [](const Vec& a, const Vec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  switch (sym.variant) {
    case Variant::Double: return dot(df, mat_vec(double_bracket_metric(biv, z), ds));
    case Variant::CartanKilling: return dot(df, mat_vec(cartan_killing_metric(alg), ds));
    case Variant::CasimirDissipation:
    case Variant::HamiltonDissipation: {
      if (!sym.casimir) throw MissingCasimir();
      Vec dc = sym.casimir->gradient(z);
      const Matrix psi = sym.psi ? *sym.psi : identity_matrix(biv.dim());
      if (sym.variant == Variant::CasimirDissipation)
        return -dot(bracket_eval(alg, df, ds), mat_vec(psi, bracket_eval(alg, dc, ds)));
      return -dot(bracket_eval(alg, df, dc), mat_vec(psi, bracket_eval(alg, ds, dc)));
    }
    case Variant::Rayleigh: return dot(df, dissipative_field(biv, sym, S, z));
  }
  throw ShapeError("unknown variant");
}

Scalar MetriplecticSystem::coupling() const {
  if (sym.a) return *sym.a;
  return entropy ? Scalar(1) : Scalar(-1);
}

Vec metriplectic_field(const MetriplecticSystem& sys, const Vec& z) {
  Vec out = lp_vector_field(sys.biv, sys.hamiltonian, z);
  const double a = sys.coupling().get_d();
  if (a == 0) return out;
  Vec d = dissipative_field(sys.biv, sys.sym, sys.generator(), z);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * d[i];
  return out;
}

ExactVec metriplectic_field(const MetriplecticSystem& sys, const Polynomial& H, const std::optional<Polynomial>& S,
                            const ExactVec& z) {
  ExactVec out = lp_vector_field(sys.biv, H, z);
  const Scalar a = sys.coupling();
  if (a == 0) return out;
  ExactVec d = dissipative_field(sys.biv, sys.sym, S ? *S : H, z);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * d[i];
  return out;
}

CompatibilityReport generation_compatibility_check(const MetriplecticSystem& sys, const std::vector<Vec>& samples) {
  if (!sys.entropy) throw MissingEntropy();
  CompatibilityReport r;
  for (const auto& z : samples) {
    r.poisson = std::max(r.poisson, std::fabs(poisson_bracket_eval(sys.biv, *sys.entropy, sys.hamiltonian, z)));
    r.symmetric =
        std::max(r.symmetric, std::fabs(symmetric_bracket_eval(sys.biv, sys.sym, sys.hamiltonian, *sys.entropy, z)));
  }
  return r;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), m = b.size(), t = n + m;
  Matrix out(t, ExactVec(t));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw ShapeError("block is not square");
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i].size() != m) throw ShapeError("block is not square");
    for (std::size_t j = 0; j < m; ++j) out[n + i][n + j] = b[i][j];
  }
  return out;
}

namespace {

SymmetricBracketSpec rayleigh_spec(const PoissonBivector& total, const Matrix& ug, const Matrix& uh) {
  SymmetricBracketSpec sym;
  sym.variant = Variant::Rayleigh;
  sym.upsilon = block_diagonal(ug, uh);
  sym.validate(total.dim());
  return sym;
}

}  // namespace

Vec coupled_rayleigh_field(const PoissonBivector& total, const Matrix& ug, const Matrix& uh, const Vec& z) {
  auto sym = rayleigh_spec(total, ug, uh);
  return dissipative_field_from_gradients<double>(total, sym, Vec(total.dim()), nullptr, z);
}

ExactVec coupled_rayleigh_field(const PoissonBivector& total, const Matrix& ug, const Matrix& uh, const ExactVec& z) {
  auto sym = rayleigh_spec(total, ug, uh);
  return dissipative_field_from_gradients<Scalar>(total, sym, ExactVec(total.dim()), nullptr, z);
}

}  // namespace liepoisson
