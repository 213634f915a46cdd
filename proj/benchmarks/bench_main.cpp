#include <benchmark/benchmark.h>

#include "liepoisson/catalog.hpp"
#include "liepoisson/dissipation.hpp"
#include "liepoisson/simulate.hpp"

using namespace liepoisson;

namespace {

void BM_JacobiResidual(benchmark::State& state) {
  auto total = get("rigid_body_pair").total();
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_residual(total));
}
BENCHMARK(BM_JacobiResidual);

void BM_VerifyExtendedStructure(benchmark::State& state) {
  auto spec = std::get<ExtendedStructure>(get("rigid_body_pair").spec);
  for (auto _ : state) benchmark::DoNotOptimize(verify_extended_structure(spec).pass());
}
BENCHMARK(BM_VerifyExtendedStructure);

void BM_CoupleCocycleExtensions(benchmark::State& state) {
  auto spec = std::get<CocycleCoupling>(get("coupled_heisenberg_as_cocycle").spec);
  for (auto _ : state) benchmark::DoNotOptimize(couple_cocycle_extensions(spec).total.dim());
}
BENCHMARK(BM_CoupleCocycleExtensions);

void BM_LiePoissonField(benchmark::State& state) {
  PoissonBivector biv(get("rigid_body_pair").total(), Sign::minus);
  Observable H(Polynomial::half_weighted_squares({1, 2, 3, 1, 2, 3}));
  Vec z{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  for (auto _ : state) benchmark::DoNotOptimize(lp_vector_field(biv, H, z));
}
BENCHMARK(BM_LiePoissonField);

void BM_ExactLiePoissonField(benchmark::State& state) {
  PoissonBivector biv(get("rigid_body_pair").total(), Sign::minus);
  auto H = Polynomial::half_weighted_squares({1, 2, 3, 1, 2, 3});
  ExactVec z{1, 2, 3, 4, 5, 6};
  for (auto _ : state) benchmark::DoNotOptimize(lp_vector_field(biv, H, z));
}
BENCHMARK(BM_ExactLiePoissonField);

void BM_DoubleBracketField(benchmark::State& state) {
  PoissonBivector biv(get("coupled_heisenberg").total(), Sign::minus);
  SymmetricBracketSpec sym;
  Observable S(Polynomial::half_weighted_squares({1, 1, 1, 1, 1, 1}));
  Vec z{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  for (auto _ : state) benchmark::DoNotOptimize(dissipative_field(biv, sym, S, z));
}
BENCHMARK(BM_DoubleBracketField);

void BM_Rk4RigidBody(benchmark::State& state) {
  PoissonBivector biv(get("so3").total(), Sign::minus);
  Observable H(Polynomial::half_weighted_squares({1, Scalar(1, 2), Scalar(1, 3)}));
  IntegratorConfig cfg;
  cfg.steps = state.range(0);
  cfg.stride = cfg.steps;
  Field f = [&](const Vec& z) { return lp_vector_field(biv, H, z); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate(f, {1, 1, 1}, cfg).states.back());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Rk4RigidBody)->Arg(1000)->Arg(10000);

}  // namespace
BENCHMARK_MAIN();
