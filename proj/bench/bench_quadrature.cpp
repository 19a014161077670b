// Serial reference against the OpenMP sphere quadrature.
#include <benchmark/benchmark.h>

#include <cmath>

#include "numfun/quadrature.hpp"

namespace {

using numfun::QuadConfig;

const std::vector<std::complex<double>> kSingular{{2, 0}, {0, 1}, {0, -1}, {-0.5, 0.25}};

double integrand(std::complex<double> z)
{
    double s = 0;
    for (auto q : kSingular)
        s += std::log(std::abs(z - q));
    return s - 2 * std::log1p(std::norm(z));
}

void BM_SphereSerial(benchmark::State& state)
{
    auto cfg = numfun::quad_config_from_resolution(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(numfun::integrate_sphere_once_serial(integrand, kSingular, cfg));
}

void BM_SphereParallel(benchmark::State& state)
{
    auto cfg = numfun::quad_config_from_resolution(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(numfun::integrate_sphere_once(integrand, kSingular, cfg));
}

}  // namespace

BENCHMARK(BM_SphereSerial)->Arg(8)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SphereParallel)->Arg(8)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
