#include <benchmark/benchmark.h>

#include "hecke/cfrac.hpp"
#include "hecke/characters.hpp"
#include "hecke/linearity.hpp"
#include "hecke/quadfield.hpp"
#include "hecke/shintani.hpp"

using namespace hecke;

namespace {

// Yokoi field at n: d = n^2 + 4, delta = (n + 2 + sqrt d) / 2.
struct LInput {
  FieldData F;
  QuadSurd delta;
  IdealLattice b;
};

LInput yokoi_input(long n) {
  Integer d = Integer(n) * n + 4;
  FieldData F = make_field(d);
  QuadSurd delta(Integer(n + 2), 1, 2, F.d);
  IdealLattice lattice = IdealLattice::from_basis(F, QuadSurd::rational(1, F.d), delta);
  return {F, delta, ideal_inverse(F, lattice)};
}

void BM_PartialLValue(benchmark::State& state) {
  const std::int64_t q = state.range(0);
  LInput in = yokoi_input(5);
  DirichletCharacter chi = enumerate_characters(q).back();
  for (auto _ : state) benchmark::DoNotOptimize(partial_hecke_L_zero(in.F, in.delta, in.b, chi));
}
BENCHMARK(BM_PartialLValue)->Arg(3)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  const std::int64_t q = state.range(0);
  FamilySpec spec = yokoi_family();
  DirichletCharacter chi = enumerate_characters(q).back();
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_chi(spec, q, chi, 1));
}
BENCHMARK(BM_ClosedForm)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ClassNumbers(benchmark::State& state) {
  const Integer d = Integer(state.range(0)) * state.range(0) + 4;
  for (auto _ : state) benchmark::DoNotOptimize(class_numbers(d));
}
BENCHMARK(BM_ClassNumbers)->Arg(5)->Arg(17)->Arg(101)->Arg(997);

void BM_MinusExpand(benchmark::State& state) {
  LInput in = yokoi_input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minus_expand(in.delta));
}
BENCHMARK(BM_MinusExpand)->Arg(5)->Arg(101)->Arg(10001);

}  // namespace
BENCHMARK_MAIN();
