#include <benchmark/benchmark.h>

#include "liecoh/cohomology.hpp"
#include "liecoh/family.hpp"

using namespace liecoh;

namespace {

FamilyParams params_for(int p) {
  std::vector<Rational> phi;
  const long seeds[] = {2, 7, 31, 43, 47};
  for (int i = 0; i < p - 1; ++i) phi.emplace_back(seeds[i]);
  return FamilyParams(p, phi);
}

} // namespace

static void BuildFamilyMember(benchmark::State& state) {
  const FamilyParams params = params_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto f = build_F(params);
    benchmark::DoNotOptimize(f.dim());
  }
}
BENCHMARK(BuildFamilyMember)->Arg(3)->Arg(6);

static void Derivations(benchmark::State& state) {
  const LieAlgebra f = build_F(params_for(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto d = derivations(f);
    benchmark::DoNotOptimize(d.dim());
  }
}
BENCHMARK(Derivations)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void GradedDimsDegree2(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const LieAlgebra f = build_F(params_for(p));
  const Grading gr = family_grading(f, p);
  for (auto _ : state) {
    auto dims = graded_dims(f, gr, 2);
    benchmark::DoNotOptimize(dims.size());
  }
}
BENCHMARK(GradedDimsDegree2)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void H2Dimension(benchmark::State& state) {
  const LieAlgebra f = build_F(params_for(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto h = h_dim(f, 2);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(H2Dimension)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void FullSuite(benchmark::State& state) {
  const FamilyParams params = params_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = model_verification_suite(params);
    benchmark::DoNotOptimize(rep.failed());
  }
}
BENCHMARK(FullSuite)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
