#include "benchmark/benchmark.h"
#include "factoriad/algcorr.hpp"
#include "factoriad/arrowmonad.hpp"
#include "factoriad/factsys.hpp"
#include "factoriad/fincat.hpp"
#include "factoriad/fixtures.hpp"
#include "factoriad/freyd.hpp"
#include "factoriad/monad.hpp"

namespace {

using namespace factoriad;

void BM_ArrowCategory(benchmark::State& state) {
  CatPtr base = fixtures::split();
  for (auto _ : state) {
    ArrowCat a = arrow_category(base);
    benchmark::DoNotOptimize(a.cat->morphism_count());
  }
}
BENCHMARK(BM_ArrowCategory);

void BM_ArrowCategorySquared(benchmark::State& state) {
  ArrowCat a = arrow_category(fixtures::split());
  for (auto _ : state) {
    ArrowCat aa = arrow_category(a.cat);
    benchmark::DoNotOptimize(aa.cat->morphism_count());
  }
}
BENCHMARK(BM_ArrowCategorySquared);

void BM_FreydCompletion(benchmark::State& state) {
  CatPtr base = fixtures::split();
  for (auto _ : state) {
    FreydCat f = freyd_completion(base);
    benchmark::DoNotOptimize(f.cat->morphism_count());
  }
}
BENCHMARK(BM_FreydCompletion);

void BM_MonadLawsSplit(benchmark::State& state) {
  CatPtr base = fixtures::split();
  for (auto _ : state) {
    CheckReport report = check_monad_laws(MonadKind::P, base);
    benchmark::DoNotOptimize(report.ok());
  }
}
BENCHMARK(BM_MonadLawsSplit)->Unit(benchmark::kMillisecond);

void BM_CubicalEquations(benchmark::State& state) {
  CatPtr base = fixtures::split();
  for (auto _ : state) {
    CheckReport report = check_cubical_equations(base);
    benchmark::DoNotOptimize(report.ok());
  }
}
BENCHMARK(BM_CubicalEquations)->Unit(benchmark::kMillisecond);

void BM_OrthogonalityScan(benchmark::State& state) {
  CatPtr base = fixtures::split();
  for (auto _ : state) {
    int count = 0;
    for (int e = 0; e < base->morphism_count(); ++e)
      for (int m = 0; m < base->morphism_count(); ++m)
        if (orthogonal(*base, e, m)) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_OrthogonalityScan);

void BM_EnumerateFs(benchmark::State& state) {
  CatPtr base = fixtures::split();
  for (auto _ : state) {
    auto systems = enumerate_fs(base);
    benchmark::DoNotOptimize(systems.size());
  }
}
BENCHMARK(BM_EnumerateFs);

void BM_EnumerateStrictAlgebras(benchmark::State& state) {
  CatPtr base = fixtures::idem();
  for (auto _ : state) {
    auto algebras = enumerate_strict_algebras(MonadKind::P, base);
    benchmark::DoNotOptimize(algebras.size());
  }
}
BENCHMARK(BM_EnumerateStrictAlgebras)->Unit(benchmark::kMillisecond);

void BM_ProperCorrespondence(benchmark::State& state) {
  CatPtr base = fixtures::split();
  for (auto _ : state) {
    CheckReport report = proper_correspondence_check(base);
    benchmark::DoNotOptimize(report.ok());
  }
}
BENCHMARK(BM_ProperCorrespondence)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
