// Copyright 2026 The holomap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "holomap/circuit.hpp"
#include "holomap/gaussian.hpp"
#include "holomap/holography.hpp"
#include "holomap/lattice.hpp"
#include "holomap/overlaps.hpp"
#include "holomap/wavelets.hpp"

namespace {

using namespace holomap;

void BM_OverlapTables(benchmark::State &state) {
  const int K = static_cast<int>(state.range(0));
  const auto f = daubechies_filters(K);
  const int L = 4 * K - 2;
  for (auto _ : state) benchmark::DoNotOptimize(compute_overlap_tables(f, L, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_OverlapTables)->Args({3, 3})->Args({3, 5})->Args({5, 3});

void BM_BulkCoupling(benchmark::State &state) {
  const auto spec = LatticeSpec::make(3, 10, static_cast<int>(state.range(0)), 0.0);
  const auto tables = compute_overlap_tables(spec.family, spec.L, spec.n);
  for (auto _ : state) benchmark::DoNotOptimize(bulk_coupling(spec, tables));
}
BENCHMARK(BM_BulkCoupling)->Arg(3)->Arg(5);

void BM_BoundaryCorrelators(benchmark::State &state) {
  const auto spec = LatticeSpec::make(3, 10, static_cast<int>(state.range(0)), 0.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(boundary_correlators(spec, ZeroModePolicy::deflated(), std::nullopt));
}
BENCHMARK(BM_BoundaryCorrelators)->Arg(8)->Arg(12);

void BM_GroundCovariance(benchmark::State &state) {
  const auto spec = LatticeSpec::make(3, 10, static_cast<int>(state.range(0)), 0.0);
  const auto K = boundary_coupling(spec);
  for (auto _ : state) benchmark::DoNotOptimize(ground_covariance(K, ZeroModePolicy::deflated()));
}
BENCHMARK(BM_GroundCovariance)->Arg(3)->Arg(5);

void BM_SameScaleRow(benchmark::State &state) {
  const auto spec = LatticeSpec::make(3, 10, 12, 0.0);
  const auto bc = boundary_correlators(spec, ZeroModePolicy::deflated(), std::nullopt);
  for (auto _ : state) benchmark::DoNotOptimize(same_scale_row(bc, Field::Phi, 6, 40));
}
BENCHMARK(BM_SameScaleRow);

void BM_EmitProgramGivens(benchmark::State &state) {
  const auto spec = LatticeSpec::make(3, 10, static_cast<int>(state.range(0)), 0.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(emit_program(spec, Target::Bulk, StateKind::Ground, std::nullopt, true));
}
BENCHMARK(BM_EmitProgramGivens)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
