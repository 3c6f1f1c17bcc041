#include <benchmark/benchmark.h>

#include "inforatio/certificate.hpp"
#include "inforatio/entropy_lp.hpp"
#include "inforatio/gfq.hpp"
#include "inforatio/scheme.hpp"

using namespace inforatio;

namespace {

void BM_shannon_bound_path4(benchmark::State& state) {
    LabeledGraph g = build_cube_star(1);
    for (auto _ : state) benchmark::DoNotOptimize(shannon_bound(g, LpMode::Worst));
}
BENCHMARK(BM_shannon_bound_path4);

void BM_shannon_bound_sixcycle_average(benchmark::State& state) {
    LabeledGraph g = build_delta(1);
    for (auto _ : state) benchmark::DoNotOptimize(shannon_bound(g, LpMode::Average));
}
BENCHMARK(BM_shannon_bound_sixcycle_average);

void BM_certificate_build_and_check(benchmark::State& state) {
    int d = int(state.range(0));
    LabeledGraph g = build_cube_star(d);
    for (auto _ : state) {
        Certificate cert = build_cube_sum_bound(d, g);
        benchmark::DoNotOptimize(check(cert).valid);
    }
}
BENCHMARK(BM_certificate_build_and_check)->DenseRange(2, 8, 2);

void BM_average_certificate(benchmark::State& state) {
    int d = int(state.range(0));
    LabeledGraph g = build_delta(d);
    for (auto _ : state) {
        RatioBoundCertificate rb = build_average_case_bound(d, g);
        benchmark::DoNotOptimize(check(rb.certificate).valid);
    }
}
BENCHMARK(BM_average_certificate)->DenseRange(2, 6, 2);

void BM_star_scheme_build(benchmark::State& state) {
    int d = int(state.range(0));
    LabeledGraph g = build_cube_star(d);
    std::uint64_t q = 2;
    while (!is_prime(q) || q < std::uint64_t(g.vertex_count)) ++q;
    for (auto _ : state) benchmark::DoNotOptimize(build_star_scheme(g, q).rows.size());
}
BENCHMARK(BM_star_scheme_build)->DenseRange(2, 8, 2);

void BM_scheme_ratios_cube_star_6(benchmark::State& state) {
    LabeledGraph g = build_cube_star(6);
    LinearScheme s = build_star_scheme(g, 131);
    for (auto _ : state) benchmark::DoNotOptimize(information_ratios(s).max);
}
BENCHMARK(BM_scheme_ratios_cube_star_6);

void BM_maximal_independent_sets(benchmark::State& state) {
    LabeledGraph g = build_cube_star(3);
    for (auto _ : state) benchmark::DoNotOptimize(maximal_independent_sets(g).size());
}
BENCHMARK(BM_maximal_independent_sets);

} // namespace

BENCHMARK_MAIN();
