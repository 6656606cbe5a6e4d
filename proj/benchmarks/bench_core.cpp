#include <vwm/charfun.hpp>
#include <vwm/price_moments.hpp>
#include <vwm/price_volatility.hpp>
#include <vwm/returns.hpp>
#include <vwm/simulate.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace vwm;

namespace {

TradeSeries sample(std::size_t n)
{
    SimConfig cfg;
    cfg.n_trades = n;
    cfg.seed = 9;
    return simulate_trades(cfg);
}

WindowSpec covering(TradeSeries const& s)
{
    double const a = s.trades().front().timestamp;
    double const b = s.trades().back().timestamp;
    return {0.5 * (a + b), b - a + 1.0};
}

} // namespace

static void BM_AggregateDegree(benchmark::State& state)
{
    auto const s = sample(static_cast<std::size_t>(state.range(0)));
    auto const view = select_window(s, covering(s));
    for (auto _ : state)
        benchmark::DoNotOptimize(aggregate_degree(view, 2));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AggregateDegree)->RangeMultiplier(10)->Range(100, 1000000);

static void BM_PriceVolatilityReport(benchmark::State& state)
{
    auto const s = sample(static_cast<std::size_t>(state.range(0)));
    auto const view = select_window(s, covering(s));
    for (auto _ : state)
        benchmark::DoNotOptimize(price_volatility_report(view));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PriceVolatilityReport)->RangeMultiplier(10)->Range(100, 1000000);

static void BM_ReturnsVolatilityReport(benchmark::State& state)
{
    auto const s = sample(static_cast<std::size_t>(state.range(0)));
    auto const recs = build_returns(s, 1);
    auto const w = covering(s);
    for (auto _ : state)
        benchmark::DoNotOptimize(returns_volatility_report(recs, w, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReturnsVolatilityReport)->RangeMultiplier(10)->Range(100, 1000000);

static void BM_RollingMoments(benchmark::State& state)
{
    auto const s = sample(100000);
    int const degrees[] = {1, 2, 3, 4};
    double const width = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(rolling_moments(s, width, width / 2, degrees));
}
BENCHMARK(BM_RollingMoments)->Arg(10)->Arg(100)->Arg(1000);

static void BM_CharFun(benchmark::State& state)
{
    auto const s = sample(10000);
    auto const ps = PairSeries::from_trades(s);
    TimeGrid const grid{50.0, 100.0, static_cast<std::size_t>(state.range(0))};
    std::vector<double> const x(grid.count, 0.01);
    for (auto _ : state)
        benchmark::DoNotOptimize(charfun_truncated(ps, 50.0, grid, x, 4));
}
BENCHMARK(BM_CharFun)->Arg(3)->Arg(10)->Arg(30);

BENCHMARK_MAIN();
