// Microbenchmarks for the hot evaluation paths. Grouped by the cost driver:
// series length scales like 1/(1-q), so each family is probed at a cheap
// and an expensive q.

#include <benchmark/benchmark.h>

#include <qgamma/checks.hpp>
#include <qgamma/quadrature.hpp>
#include <qgamma/special.hpp>

#include <cmath>

namespace {

void BM_log_qgamma_product(benchmark::State& state) {
    const qg::QParam q(state.range(0) / 100.0);
    double x = 0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qg::log_qgamma(x, q));
        x = x < 40.0 ? x + 0.1 : 0.7; // defeat value caching, stay in range
    }
}
BENCHMARK(BM_log_qgamma_product)->Arg(50)->Arg(99);

void BM_log_qgamma_integral(benchmark::State& state) {
    const qg::QParam q(state.range(0) / 100.0);
    double x = 0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qg::log_qgamma(
            x, q, {}, qg::QGammaBackend::JacksonIntegral));
        x = x < 10.0 ? x + 0.1 : 0.7;
    }
}
BENCHMARK(BM_log_qgamma_integral)->Arg(50)->Arg(90);

void BM_qpsi_direct(benchmark::State& state) {
    const qg::QParam q(state.range(0) / 100.0);
    double x = 0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qg::qpsi(x, q, {}, qg::QPsiBackend::DirectSeries));
        x = x < 40.0 ? x + 0.1 : 0.7;
    }
}
BENCHMARK(BM_qpsi_direct)->Arg(50)->Arg(99);

void BM_qpsi_lambert(benchmark::State& state) {
    const qg::QParam q(state.range(0) / 100.0);
    double x = 0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qg::qpsi(x, q, {}, qg::QPsiBackend::LambertSeries));
        x = x < 40.0 ? x + 0.1 : 0.7;
    }
}
BENCHMARK(BM_qpsi_lambert)->Arg(50)->Arg(99);

void BM_log_ratio_kernel(benchmark::State& state) {
    const qg::QParam q(state.range(0) / 100.0);
    double x = 0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qg::qgamma_log_ratio_series(x + 0.5, x, q, {}));
        x = x < 40.0 ? x + 0.1 : 0.7;
    }
}
BENCHMARK(BM_log_ratio_kernel)->Arg(50)->Arg(99);

void BM_jackson_0a(benchmark::State& state) {
    const qg::QParam q(state.range(0) / 100.0);
    const auto f = [](double t) { return std::sqrt(t); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(qg::jackson_integral_0a(f, 1.0, q, {}));
    }
}
BENCHMARK(BM_jackson_0a)->Arg(50)->Arg(99);

void BM_check_q_sandor(benchmark::State& state) {
    const qg::QParam q(state.range(0) / 100.0);
    const auto grid = qg::defaults::x_grid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qg::check_q_sandor(q, grid));
    }
}
BENCHMARK(BM_check_q_sandor)->Arg(50)->Arg(99);

} // namespace

BENCHMARK_MAIN();
