#include "nalg/bases.hpp"
#include "nalg/derived.hpp"
#include "nalg/parser.hpp"
#include "nalg/rewrite.hpp"
#include "nalg/variety.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace nalg;

namespace {

// Components are cached per engine, so each iteration builds a fresh one.
void BM_component_binary_perm(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Engine eng(1);
        auto comp = eng.consequences(Variety::builtin("binary-perm"),
                                     MultiDegree::multilinear(degree));
        benchmark::DoNotOptimize(comp->rank());
    }
}
BENCHMARK(BM_component_binary_perm)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_component_nap(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Engine eng(1);
        auto comp =
            eng.consequences(Variety::builtin("nap"), MultiDegree::multilinear(degree));
        benchmark::DoNotOptimize(comp->rank());
    }
}
BENCHMARK(BM_component_nap)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_rref_random_sparse(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(12345);
    std::vector<IntRow> rows;
    for (int i = 0; i < 2 * n; ++i) {
        IntRow r;
        for (int j = 0; j < n; ++j)
            if (rng() % 8 == 0)
                r.emplace_back(j, Int(static_cast<long>(rng() % 7) - 3));
        std::erase_if(r, [](const auto& e) { return e.second == 0; });
        if (!r.empty())
            rows.push_back(std::move(r));
    }
    for (auto _ : state) {
        auto copy = rows;
        benchmark::DoNotOptimize(rref_rows(std::move(copy), n).rank());
    }
}
BENCHMARK(BM_rref_random_sparse)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_rewrite_degree5(benchmark::State& state)
{
    Variety bp = Variety::builtin("binary-perm");
    auto monomials = enumerate_monomials(MultiDegree::parse("2,2,1"));
    for (auto _ : state)
        for (const auto& m : *monomials)
            benchmark::DoNotOptimize(rewrite_nf(bp, m).term_count());
}
BENCHMARK(BM_rewrite_degree5)->Unit(benchmark::kMillisecond);

void BM_expand_bracket(benchmark::State& state)
{
    auto monomials = enumerate_monomials(MultiDegree::multilinear(5));
    for (auto _ : state) {
        std::size_t total = 0;
        for (const auto& m : *monomials)
            total += expand_bracket(m, Sign::minus).term_count();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_expand_bracket)->Unit(benchmark::kMillisecond);

void BM_good_words(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(good_words(MultiDegree::multilinear(degree)).size());
}
BENCHMARK(BM_good_words)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
