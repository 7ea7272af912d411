#include <tekum/codec.hpp>
#include <tekum/oracle.hpp>
#include <tekum/trit_string.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

std::vector<tekum::TritString> random_strings(std::size_t width, std::size_t count) {
    std::mt19937_64 engine(42);
    const tekum::BigInt top = tekum::max_trit_integer(width);
    std::uniform_int_distribution<long> dist(1 - static_cast<long>(top.get_ui()),
                                             static_cast<long>(top.get_ui()) - 1);
    std::vector<tekum::TritString> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(tekum::TritString::from_integer(tekum::BigInt(dist(engine)), width));
    }
    return out;
}

void BM_Decode(benchmark::State& state) {
    const auto inputs = random_strings(static_cast<std::size_t>(state.range(0)), 512);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tekum::decode(inputs[i++ % inputs.size()]));
    }
}
BENCHMARK(BM_Decode)->Arg(4)->Arg(8)->Arg(12);

void BM_Encode(benchmark::State& state) {
    const std::size_t width = static_cast<std::size_t>(state.range(0));
    std::vector<tekum::Value> values;
    for (const auto& t : random_strings(width, 512)) values.push_back(tekum::decode(t));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tekum::encode(values[i++ % values.size()], width));
    }
}
BENCHMARK(BM_Encode)->Arg(4)->Arg(8);

void BM_Anchor(benchmark::State& state) {
    const auto inputs = random_strings(static_cast<std::size_t>(state.range(0)), 512);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tekum::anchor(inputs[i++ % inputs.size()]));
    }
}
BENCHMARK(BM_Anchor)->Arg(8)->Arg(12);

void BM_TruncateRound(benchmark::State& state) {
    const auto inputs = random_strings(8, 512);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tekum::truncate_round(inputs[i++ % inputs.size()], 4));
    }
}
BENCHMARK(BM_TruncateRound);

void BM_NearestScan(benchmark::State& state) {
    const tekum::NearestScanner scanner(static_cast<std::size_t>(state.range(0)));
    std::vector<tekum::Rational> queries;
    for (const auto& t : random_strings(8, 64)) queries.push_back(tekum::decode(t).rational());
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scanner.nearest(queries[i++ % queries.size()]));
    }
}
BENCHMARK(BM_NearestScan)->Arg(4)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
