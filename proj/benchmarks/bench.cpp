#include <benchmark/benchmark.h>

#include "rigcert/chain.hpp"
#include "rigcert/hypotheses.hpp"
#include "rigcert/synth.hpp"
#include "rigcert/treeexec.hpp"

using namespace rigcert;

namespace {

NatPoly np(const char* text) { return parse_nat_poly(text); }

void BM_PolyMul(benchmark::State& state) {
    NatPoly a = np("(1+x)^9");
    NatPoly b = np("3 + 2x^3 + 4x^5");
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul);

void BM_DivRem(benchmark::State& state) {
    RatPoly a = to_rat(parse_int_poly("x^13 - x"));
    RatPoly d = to_rat(parse_int_poly("1 + x^2 + x^3 + x^5"));
    for (auto _ : state) benchmark::DoNotOptimize(divrem(a, d));
}
BENCHMARK(BM_DivRem);

void BM_CheckRing(benchmark::State& state) {
    IntPoly x = IntPoly::variable();
    IntPoly p = parse_int_poly("3 + 2x^3 + 4x^5");
    IntPoly q1 = parse_int_poly("6x + 10x^2 + x^3 + 3x^4 + 2x^5 + 7x^6 + 12x^7");
    IntPoly q2 = parse_int_poly("3 + 2x + 2x^2 + 9x^3 + 5x^6 + 4x^8");
    for (auto _ : state) benchmark::DoNotOptimize(check_ring_implication(x, p, q1, q2));
}
BENCHMARK(BM_CheckRing);

void BM_SynthesizeSevenTrees(benchmark::State& state) {
    NatPoly p = np("1 + x^2");
    NatPoly q1 = np("x^7");
    NatPoly q2 = np("x");
    for (auto _ : state) benchmark::DoNotOptimize(synthesize(p, q1, q2));
}
BENCHMARK(BM_SynthesizeSevenTrees);

void BM_VerifySevenTrees(benchmark::State& state) {
    Certificate cert = synthesize(np("1 + x^2"), np("x^7"), np("x"));
    for (auto _ : state) benchmark::DoNotOptimize(verify(cert));
}
BENCHMARK(BM_VerifySevenTrees);

void BM_SerializeParse(benchmark::State& state) {
    Certificate cert = synthesize(np("1 + x^2"), np("x^7"), np("x"));
    for (auto _ : state) benchmark::DoNotOptimize(parse_certificate(serialize(cert)));
}
BENCHMARK(BM_SerializeParse);

void BM_BijectionRoundtrip(benchmark::State& state) {
    BijectionExecutor exec(synthesize(np("1 + x^2"), np("x^7"), np("x")));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        PolyValue v = random_value(exec.certificate().start, exec.certificate().p, 50, seed++);
        benchmark::DoNotOptimize(exec.apply(exec.apply(v, Direction::forward),
                                            Direction::backward));
    }
}
BENCHMARK(BM_BijectionRoundtrip);

void BM_BfsSevenTrees(benchmark::State& state) {
    NatPoly p = np("1 + x^2");
    NatPoly q1 = np("x^7");
    NatPoly q2 = np("x");
    for (auto _ : state) benchmark::DoNotOptimize(bfs_search(p, q1, q2, {18, 8, 64}));
}
BENCHMARK(BM_BfsSevenTrees);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
