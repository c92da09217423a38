#include <hgw/family.hh>
#include <hgw/minimality.hh>
#include <hgw/orbit_relation.hh>
#include <hgw/random_instances.hh>
#include <hgw/solver.hh>

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace hgw;

using std::nullopt;
using std::vector;

namespace
{
    auto family_at(int index) -> GraphFamily
    {
        switch (index) {
        case 0: return GraphFamily::random();
        case 1: return GraphFamily::henson(3);
        case 2: return GraphFamily::henson(4);
        case 3: return GraphFamily::cliques(nullopt, 2);
        case 4: return GraphFamily::cliques(2, nullopt);
        default: return GraphFamily::cliques(nullopt, nullopt);
        }
    }

    auto seeded_corpus(const GraphFamily & family, unsigned count) -> vector<Instance>
    {
        std::mt19937_64 rng{ 42 };
        vector<Instance> result;
        for (unsigned i = 0; i < count; ++i)
            result.push_back(random_instance(family, rng));
        return result;
    }

    auto establish_scaling(benchmark::State & state) -> void
    {
        auto variables = unsigned(state.range(0));
        std::mt19937_64 rng{ 7 };
        auto inst = random_binary_instance(GraphFamily::random(), rng, variables, 3 * variables);
        for (auto _ : state)
            benchmark::DoNotOptimize(establish_minimality(inst, 2, 3));
        state.SetComplexityN(state.range(0));
    }

    auto oracle_corpus(benchmark::State & state) -> void
    {
        auto corpus = seeded_corpus(family_at(int(state.range(0))), 50);
        for (auto _ : state)
            for (auto & inst : corpus)
                benchmark::DoNotOptimize(oracle(inst));
        state.SetLabel(family_at(int(state.range(0))).name());
    }

    auto search_corpus(benchmark::State & state) -> void
    {
        auto corpus = seeded_corpus(family_at(int(state.range(0))), 50);
        for (auto _ : state)
            for (auto & inst : corpus)
                benchmark::DoNotOptimize(solve_search(inst));
        state.SetLabel(family_at(int(state.range(0))).name());
    }

    auto types_by_arity(benchmark::State & state) -> void
    {
        auto family = family_at(int(state.range(0)));
        auto arity = unsigned(state.range(1));
        for (auto _ : state)
            benchmark::DoNotOptimize(enumerate_types(family, arity));
        state.SetLabel(family.name());
    }
}

BENCHMARK(establish_scaling)->DenseRange(10, 60, 10)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(oracle_corpus)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(search_corpus)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(types_by_arity)->ArgsProduct({ { 0, 1, 3 }, { 3, 4, 5 } })->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
