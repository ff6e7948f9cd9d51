// uavnoma: aerial-terrestrial uplink NOMA rate-coverage analysis
// Copyright (C) 2026 The uavnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// OpenMP kernels against their serial references.

#include "uavnoma/montecarlo.hpp"
#include "uavnoma/planner.hpp"
#include "uavnoma/trajectory.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace uavnoma;

const channel::SystemParams params = channel::SystemParams::reference();
const channel::LosModel urban = channel::ItuLos{channel::environment_presets().at("urban")};
const auto point = trajectory::TrajectoryPoint::make(5, 353.6, 0.0, 60.0);

void mc_args(benchmark::internal::Benchmark* b)
{
    b->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
}

void BM_McParallel(benchmark::State& state)
{
    const montecarlo::McConfig mc{state.range(0), 7, 64};
    const auto th = analysis::DecodingThresholds::from_db(10.0, 0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(montecarlo::estimate(params, urban, point, th, mc));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McParallel)->Apply(mc_args);

void BM_McSerial(benchmark::State& state)
{
    const montecarlo::McConfig mc{state.range(0), 7, 64};
    const auto th = analysis::DecodingThresholds::from_db(10.0, 0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(montecarlo::estimate_serial(params, urban, point, th, mc));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McSerial)->Apply(mc_args);

// theta_A = 0 dB uses the quadrature branch of p3, the slow path.
void sweep_args(benchmark::internal::Benchmark* b)
{
    b->Arg(0)->Arg(20)->Unit(benchmark::kMillisecond);
}

void BM_SweepParallel(benchmark::State& state)
{
    const auto th = analysis::DecodingThresholds::from_db(static_cast<double>(state.range(0)), 0.0);
    const auto heights = planner::height_grid({});
    for (auto _ : state)
        benchmark::DoNotOptimize(planner::sweep_p_tot(params, urban, point, th, heights));
}
BENCHMARK(BM_SweepParallel)->Apply(sweep_args);

void BM_SweepSerial(benchmark::State& state)
{
    const auto th = analysis::DecodingThresholds::from_db(static_cast<double>(state.range(0)), 0.0);
    const auto heights = planner::height_grid({});
    for (auto _ : state)
        benchmark::DoNotOptimize(planner::sweep_p_tot_serial(params, urban, point, th, heights));
}
BENCHMARK(BM_SweepSerial)->Apply(sweep_args);

} // namespace

BENCHMARK_MAIN();
