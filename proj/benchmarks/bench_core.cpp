#include "heun/dche_model.hpp"
#include "heun/ode_oracle.hpp"
#include "heun/resummation.hpp"
#include "heun/special_functions.hpp"
#include "heun/unfold_model.hpp"

#include <benchmark/benchmark.h>

using namespace heun;

static void BM_log_gamma(benchmark::State& state)
{
    Complex z{-7.3, 4.1};
    for (auto _ : state) benchmark::DoNotOptimize(log_gamma(z));
}
BENCHMARK(BM_log_gamma);

static void BM_q_sum(benchmark::State& state)
{
    const UnfoldParams u(DcheParams(double(state.range(0)), 0.0, {0.7, 0.3}), 1e-3);
    for (auto _ : state) benchmark::DoNotOptimize(q_sum(u));
}
BENCHMARK(BM_q_sum)->Arg(2)->Arg(6)->Arg(8);

static void BM_d_L(benchmark::State& state)
{
    const DcheParams p(0.5, 1.0, 0.4);
    const auto pt = resonant_eps_sequence(p, state.range(0), state.range(0));
    const UnfoldParams u(p, pt.at(0).sqrt_eps);
    for (auto _ : state) benchmark::DoNotOptimize(d_L(u));
}
BENCHMARK(BM_d_L)->Arg(10)->Arg(200);

static void BM_stokes_mu(benchmark::State& state)
{
    const DcheParams p(0.5, 1.0, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(stokes_multiplier_mu(p));
}
BENCHMARK(BM_stokes_mu);

static void BM_stokes_jump(benchmark::State& state)
{
    const DcheParams p(0.5, 1.0, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(stokes_jump(p, Complex{-0.4, 0.0}));
}
BENCHMARK(BM_stokes_jump)->Unit(benchmark::kMillisecond);

static void BM_residue_contour(benchmark::State& state)
{
    const UnfoldParams u(DcheParams(4.0, 0.0, {0.7, 0.3}), 0.1);
    const auto f = unfolded_integrand(u);
    for (auto _ : state) benchmark::DoNotOptimize(residue_via_contour(f, 0.1, 0.1));
}
BENCHMARK(BM_residue_contour)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
