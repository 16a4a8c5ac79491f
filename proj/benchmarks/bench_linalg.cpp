#include <benchmark/benchmark.h>

#include "liecoh/cochain.hpp"
#include "liecoh/family.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/subspace.hpp"

using namespace liecoh;

namespace {

FamilyParams params_for(int p) {
  std::vector<Rational> phi;
  const long seeds[] = {2, 7, 31, 43, 47};
  for (int i = 0; i < p - 1; ++i) phi.emplace_back(seeds[i]);
  return FamilyParams(p, phi);
}

Matrix delta_matrix(int p, int q) { return ce_matrix(build_F(params_for(p)), q); }

} // namespace

static void RrefDelta1(benchmark::State& state) {
  const Matrix m = delta_matrix(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    auto rr = rref(m);
    benchmark::DoNotOptimize(rr.rank);
  }
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}
BENCHMARK(RrefDelta1)->Arg(2)->Arg(3)->Arg(4);

static void RrefDelta2(benchmark::State& state) {
  const Matrix m = delta_matrix(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto rr = rref(m);
    benchmark::DoNotOptimize(rr.rank);
  }
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}
BENCHMARK(RrefDelta2)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BareissDelta1(benchmark::State& state) {
  const Matrix m = delta_matrix(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    auto r = rank_fraction_free(m);
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}
BENCHMARK(BareissDelta1)->Arg(2)->Arg(3)->Arg(4);

static void KernelDelta2(benchmark::State& state) {
  const Matrix m = delta_matrix(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto k = kernel_basis(m);
    benchmark::DoNotOptimize(k.dim());
  }
}
BENCHMARK(KernelDelta2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void SubspaceSumIntersect(benchmark::State& state) {
  const Matrix m = delta_matrix(3, 1);
  const Subspace z = kernel_basis(m);
  const Subspace b = Subspace::from_spanning(m.transposed());
  for (auto _ : state) {
    auto s = sum(z, z);
    auto i = intersect(z, z);
    benchmark::DoNotOptimize(s.dim());
    benchmark::DoNotOptimize(i.dim());
    benchmark::DoNotOptimize(b.dim());
  }
}
BENCHMARK(SubspaceSumIntersect);
