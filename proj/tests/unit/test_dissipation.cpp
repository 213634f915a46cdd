#include <gtest/gtest.h>

#include <cmath>

#include "liepoisson/catalog.hpp"
#include "support.hpp"

using namespace liepoisson;
using liepoisson::testing::algebra;
using liepoisson::testing::dot;
using liepoisson::testing::Gen;

namespace {

LieAlgebra so3() { return algebra(3, {{1, 2, 3, 1}, {3, 1, 2, 1}, {2, 3, 1, 1}}); }
LieAlgebra heis() { return algebra(3, {{1, 2, 3, 1}}); }

ExactVec cross(const ExactVec& a, const ExactVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ExactVec scale(const Scalar& s, ExactVec v) {
  for (auto& x : v) x *= s;
  return v;
}

ExactVec operator+(ExactVec a, const ExactVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

ExactVec operator-(ExactVec a, const ExactVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Polynomial coord(int n, int i) {
  ExactVec c(n);
  c[i] = 1;
  return Polynomial::linear(c);
}

SymmetricBracketSpec variant(Variant v) {
  SymmetricBracketSpec s;
  s.variant = v;
  return s;
}

// trace(ad_x ad_y) through bracket evaluation, independent of the contraction formula.
Matrix killing_by_trace(const LieAlgebra& alg) {
  const int n = alg.dim();
  auto unit = [n](int i) {
    ExactVec e(n);
    e[i] = 1;
    return e;
  };
  Matrix out(n, ExactVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int b = 0; b < n; ++b) out[i][j] += bracket_eval(alg, unit(i), bracket_eval(alg, unit(j), unit(b)))[b];
  return out;
}

}  // namespace

TEST(Variant, ParsesNames) {
  EXPECT_EQ(parse_variant("ck"), Variant::CartanKilling);
  EXPECT_EQ(parse_variant("cartan-killing"), Variant::CartanKilling);
  EXPECT_EQ(parse_variant("hamilton"), Variant::HamiltonDissipation);
  EXPECT_THROW(parse_variant("viscous"), SchemaError);
  EXPECT_STREQ(to_string(Variant::Rayleigh), "rayleigh");
}

TEST(Validate, PayloadRequirements) {
  auto s = variant(Variant::CasimirDissipation);
  EXPECT_THROW(s.validate(3), MissingCasimir);
  s.casimir = Observable(coord(2, 0));
  EXPECT_THROW(s.validate(3), DimensionMismatch);
  s.casimir = Observable(coord(3, 0));
  EXPECT_NO_THROW(s.validate(3));
  s.psi = Matrix{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_THROW(s.validate(3), ShapeError);
  EXPECT_THROW(variant(Variant::Rayleigh).validate(3), ShapeError);
}

TEST(DoubleMetric, HeisenbergIsDiagonalInCentre) {
  PoissonBivector biv(heis(), Sign::minus);
  Scalar m(-7, 3);
  auto g = double_bracket_metric(biv, ExactVec{Scalar(4), Scalar(-1), m});
  EXPECT_EQ(g, (Matrix{{m * m, 0, 0}, {0, m * m, 0}, {0, 0, 0}}));
}

TEST(DoubleMetric, AbelianIsZero) {
  PoissonBivector biv(LieAlgebra::abelian(3), Sign::plus);
  EXPECT_EQ(double_bracket_metric(biv, ExactVec{1, 2, 3}), Matrix(3, ExactVec(3)));
}

TEST(CartanKilling, ContractionAgreesWithTraceForm) {
  for (const auto& alg : liepoisson::testing::small_lie_algebras())
    EXPECT_EQ(cartan_killing_metric(alg), killing_by_trace(alg));
  auto rb = get("rigid_body_pair").total();
  EXPECT_EQ(cartan_killing_metric(rb), killing_by_trace(rb));
}

TEST(CartanKilling, RigidBodyPairMatrix) {
  auto g = cartan_killing_metric(get("rigid_body_pair").total());
  Matrix expected{{-4, 0, 0, 0, 4, 0}, {0, -4, 0, -4, 0, 0}, {0, 0, -4, 0, 0, 0},
                  {0, -4, 0, 0, 0, 0}, {4, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 0, 4}};
  EXPECT_EQ(g, killing_by_trace(get("rigid_body_pair").total()));
  EXPECT_EQ(g, expected);
}

TEST(DissipativeField, HeisenbergDoubleAtUnitCentre) {
  Gen gen(21);
  PoissonBivector biv(heis(), Sign::minus);
  for (int s = 0; s < 10; ++s) {
    auto S = gen.polynomial(3);
    auto z = gen.exact_state(3);
    z[2] = 1;
    auto g = S.gradient(z);
    EXPECT_EQ(dissipative_field(biv, variant(Variant::Double), S, z), (ExactVec{g[0], g[1], 0}));
  }
}

TEST(DissipativeField, SoThreeRayleighWithIdentityVanishes) {
  auto s = variant(Variant::Rayleigh);
  s.upsilon = identity_matrix(3);
  PoissonBivector biv(so3(), Sign::minus);
  EXPECT_EQ(dissipative_field(biv, s, coord(3, 0), ExactVec{1, Scalar(2, 3), -5}), ExactVec(3));
}

TEST(DissipativeField, SoThreeHamiltonDissipation) {
  Gen gen(22);
  auto s = variant(Variant::HamiltonDissipation);
  s.casimir = Observable(Polynomial::half_weighted_squares({1, 1, 1}));
  PoissonBivector biv(so3(), Sign::minus);
  for (int k = 0; k < 100; ++k) {
    auto S = gen.polynomial(3);
    auto mu = gen.exact_state(3);
    auto zdot = dissipative_field(biv, s, S, mu);
    // -(mu x grad S) x mu
    auto expected = scale(-1, cross(cross(mu, S.gradient(mu)), mu));
    EXPECT_EQ(zdot, expected);
    EXPECT_EQ(dot(zdot, mu), 0);
  }
}

TEST(DissipativeField, CasimirVariantNeedsCasimir) {
  PoissonBivector biv(so3(), Sign::minus);
  EXPECT_THROW(dissipative_field(biv, variant(Variant::CasimirDissipation), coord(3, 0), ExactVec{1, 2, 3}),
               MissingCasimir);
}

TEST(DissipativeField, MatchesSymmetricBracketForEveryVariant) {
  Gen gen(23);
  PoissonBivector biv(algebra(3, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}}), Sign::minus);
  std::vector<SymmetricBracketSpec> specs;
  for (Variant v : {Variant::Double, Variant::CartanKilling, Variant::CasimirDissipation,
                    Variant::HamiltonDissipation, Variant::Rayleigh}) {
    auto s = variant(v);
    s.casimir = Observable(gen.polynomial(3, 2));
    s.psi = gen.psd_matrix(3);
    s.upsilon = gen.psd_matrix(3);
    specs.push_back(s);
  }
  for (const auto& s : specs)
    for (int k = 0; k < 20; ++k) {
      Observable F(gen.polynomial(3)), S(gen.polynomial(3));
      Vec z = gen.state(3);
      double lhs = symmetric_bracket_eval(biv, s, F, S, z);
      double rhs = dot(F.gradient(z), dissipative_field(biv, s, S, z));
      EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::fabs(lhs))) << to_string(s.variant);
    }
}

TEST(SymmetricBracket, CasimirVariantOnItsCasimirIsMinusNormSquared) {
  Gen gen(24);
  auto s = variant(Variant::CasimirDissipation);
  auto C = Polynomial::half_weighted_squares({1, 1, 1});
  s.casimir = Observable(C);
  PoissonBivector biv(so3(), Sign::minus);
  for (int k = 0; k < 20; ++k) {
    auto S = gen.polynomial(3);
    Vec z = gen.state(3);
    Vec b = bracket_eval(so3(), C.gradient(z), S.gradient(z));
    EXPECT_NEAR(symmetric_bracket_eval(biv, s, Observable(C), Observable(S), z), -dot(b, b), 1e-10);
  }
}

TEST(SymmetricBracket, HamiltonVariantAnnihilatesItsCasimir) {
  Gen gen(25);
  auto s = variant(Variant::HamiltonDissipation);
  auto C = Polynomial::half_weighted_squares({1, 2, 3});
  s.casimir = Observable(C);
  PoissonBivector biv(so3(), Sign::minus);
  for (int k = 0; k < 20; ++k)
    EXPECT_EQ(symmetric_bracket_eval(biv, s, Observable(C), Observable(gen.polynomial(3)), gen.state(3)), 0);
}

TEST(Metriplectic, HeisenbergDoubleBracketSystem) {
  Gen gen(26);
  MetriplecticSystem sys{PoissonBivector(heis(), Sign::minus), variant(Variant::Double), Observable(coord(3, 0)),
                         Observable(coord(3, 0))};
  EXPECT_EQ(sys.coupling(), 1);
  for (int k = 0; k < 20; ++k) {
    auto H = gen.polynomial(3), S = gen.polynomial(3);
    auto z = gen.exact_state(3);
    auto h = H.gradient(z), s = S.gradient(z);
    auto m = z[2];
    ExactVec expected{m * h[1] + m * m * s[0], -m * h[0] + m * m * s[1], 0};
    EXPECT_EQ(metriplectic_field(sys, H, S, z), expected);
  }
}

TEST(Metriplectic, ZeroCouplingIsPureLiePoisson) {
  Gen gen(27);
  auto s = variant(Variant::Double);
  s.a = Scalar(0);
  auto H = gen.polynomial(3);
  MetriplecticSystem sys{PoissonBivector(so3(), Sign::minus), s, Observable(H), std::nullopt};
  Vec z = gen.state(3);
  EXPECT_EQ(metriplectic_field(sys, z), lp_vector_field(sys.biv, sys.hamiltonian, z));
}

TEST(Metriplectic, DefaultCouplingWithoutEntropyIsMinusOne) {
  MetriplecticSystem sys{PoissonBivector(so3(), Sign::minus), variant(Variant::Double), Observable(coord(3, 0)),
                         std::nullopt};
  EXPECT_EQ(sys.coupling(), -1);
  sys.sym.a = Scalar(3, 2);
  EXPECT_EQ(sys.coupling(), Scalar(3, 2));
}

TEST(Metriplectic, FieldSplitsIntoReversibleAndDissipativeParts) {
  Gen gen(28);
  auto s = variant(Variant::CasimirDissipation);
  s.casimir = Observable(Polynomial::half_weighted_squares({1, 1, 1}));
  s.a = Scalar(2, 5);
  auto H = gen.polynomial(3), S = gen.polynomial(3);
  MetriplecticSystem sys{PoissonBivector(so3(), Sign::minus), s, Observable(H), Observable(S)};
  for (int k = 0; k < 10; ++k) {
    auto z = gen.exact_state(3);
    auto lp = lp_vector_field(sys.biv, H, z);
    auto d = dissipative_field(sys.biv, s, S, z);
    EXPECT_EQ(metriplectic_field(sys, H, S, z), lp + scale(Scalar(2, 5), d));
  }
}

TEST(Compatibility, CasimirEntropyOnSoThree) {
  Gen gen(29);
  auto C = Polynomial::half_weighted_squares({1, 1, 1});
  auto s = variant(Variant::CasimirDissipation);
  s.casimir = Observable(C);
  MetriplecticSystem sys{PoissonBivector(so3(), Sign::minus), s, Observable(Polynomial::half_weighted_squares({1, 2, 3})),
                         Observable(C)};
  std::vector<Vec> samples;
  for (int k = 0; k < 50; ++k) samples.push_back(gen.state(3));
  auto r = generation_compatibility_check(sys, samples);
  EXPECT_LE(r.poisson, 1e-12);
  EXPECT_LE(r.symmetric, 1e-12);
  EXPECT_TRUE(r.pass(1e-12));
}

TEST(Compatibility, ConstantEntropyIsCompatible) {
  Gen gen(30);
  MetriplecticSystem sys{PoissonBivector(heis(), Sign::minus), variant(Variant::Double),
                         Observable(gen.polynomial(3)), Observable(Polynomial(3, {{Scalar(5), {0, 0, 0}}}))};
  std::vector<Vec> samples{gen.state(3), gen.state(3), gen.state(3)};
  auto r = generation_compatibility_check(sys, samples);
  EXPECT_EQ(r.poisson, 0);
  EXPECT_EQ(r.symmetric, 0);
}

TEST(Compatibility, HeisenbergCoordinatesFailPoissonPart) {
  MetriplecticSystem sys{PoissonBivector(heis(), Sign::minus), variant(Variant::Double), Observable(coord(3, 1)),
                         Observable(coord(3, 0))};
  auto r = generation_compatibility_check(sys, {Vec{0.5, -1, 2}});
  EXPECT_EQ(r.symmetric, 0);
  EXPECT_DOUBLE_EQ(r.poisson, 2);
  EXPECT_FALSE(r.pass(1e-12));
}

TEST(Compatibility, RequiresEntropy) {
  MetriplecticSystem sys{PoissonBivector(heis(), Sign::minus), variant(Variant::Double), Observable(coord(3, 1)),
                         std::nullopt};
  EXPECT_THROW(generation_compatibility_check(sys, {}), MissingEntropy);
}

TEST(CoupledRayleigh, ZeroBlocksGiveZeroField) {
  PoissonBivector total(get("rigid_body_pair").total(), Sign::minus);
  Matrix zero(3, ExactVec(3));
  EXPECT_EQ(coupled_rayleigh_field(total, zero, zero, ExactVec{1, 2, 3, 4, 5, 6}), ExactVec(6));
}

TEST(CoupledRayleigh, IsReversedLiePoissonFieldOfUpsilon) {
  Gen gen(31);
  PoissonBivector total(get("coupled_heisenberg").total(), Sign::minus);
  for (int k = 0; k < 20; ++k) {
    Matrix ug = gen.psd_matrix(3), uh = gen.psd_matrix(3);
    auto z = gen.exact_state(6);
    auto u = mat_vec(block_diagonal(ug, uh), z);
    EXPECT_EQ(coupled_rayleigh_field(total, ug, uh, z), scale(-1, lp_field_from_gradient(total, u, z)));
  }
}

TEST(CoupledRayleigh, CoupledHeisenbergComponents) {
  Gen gen(32);
  PoissonBivector total(get("coupled_heisenberg").total(), Sign::minus);
  for (int k = 0; k < 20; ++k) {
    Matrix ug = gen.psd_matrix(3), uh = gen.psd_matrix(3);
    auto z = gen.exact_state(6);
    ExactVec mu(z.begin(), z.begin() + 3), nu(z.begin() + 3, z.end());
    auto g = mat_vec(ug, mu), h = mat_vec(uh, nu);
    const auto &m3 = mu[2], &n3 = nu[2];
    ExactVec expected{-m3 * g[1] - n3 * h[1], m3 * g[0] - m3 * h[0], 0, m3 * g[1] - n3 * h[1],
                      n3 * h[0] + n3 * g[0], 0};
    EXPECT_EQ(coupled_rayleigh_field(total, ug, uh, z), expected);
  }
}

TEST(CoupledRayleigh, RigidBodyPairVectorForm) {
  Gen gen(33);
  PoissonBivector total(get("rigid_body_pair").total(), Sign::minus);
  const ExactVec kv{0, 0, 1};
  for (int k = 0; k < 20; ++k) {
    Matrix ug = gen.psd_matrix(3), uh = gen.psd_matrix(3);
    auto z = gen.exact_state(6);
    ExactVec mu(z.begin(), z.begin() + 3), nu(z.begin() + 3, z.end());
    auto g = mat_vec(ug, mu), h = mat_vec(uh, nu);
    ExactVec mdot = cross(mu, g) + scale(dot(h, kv), mu) - scale(dot(mu, kv), h) + cross(nu, h);
    ExactVec ndot = scale(dot(nu, h), kv) - scale(dot(kv, h), nu) - cross(g, nu) + scale(dot(mu, kv), g) -
                    scale(dot(mu, g), kv);
    ExactVec expected = mdot;
    expected.insert(expected.end(), ndot.begin(), ndot.end());
    EXPECT_EQ(coupled_rayleigh_field(total, ug, uh, z), expected);
  }
}

TEST(BlockDiagonal, RejectsNonSquareBlocks) {
  EXPECT_THROW(block_diagonal(Matrix{{1, 2}}, Matrix{{1}}), ShapeError);
  EXPECT_EQ(block_diagonal(Matrix{{1}}, Matrix{{2}}), (Matrix{{1, 0}, {0, 2}}));
}
