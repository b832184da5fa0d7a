#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "qblock/blockers.hpp"
#include "qblock/family.hpp"
#include "qblock/ramsey.hpp"
#include "qblock/spnfree.hpp"

using namespace qblock;

namespace {

const GroundSet& ground4() {
  static const GroundSet g({"1", "2", "x1", "x2"});
  return g;
}

InducedSubposet five_vertex_core() {
  std::vector<VertexMask> vs;
  for (uint32_t m : {0u, 5u, 7u, 10u, 11u}) vs.push_back(VertexMask(m));
  return InducedSubposet(ground4(), vs);
}

void verify_homomorphism(benchmark::State& state) {
  const InducedSubposet f = five_vertex_core();
  const VertexMask y = VertexMask::of({0, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_blocker(f, y, BlockerStrategy::kHomomorphism).blocker);
  }
}
BENCHMARK(verify_homomorphism);

void verify_enumeration(benchmark::State& state) {
  const InducedSubposet f = five_vertex_core();
  const VertexMask y = VertexMask::of({0, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_blocker(f, y, BlockerStrategy::kEnumeration).blocker);
  }
}
BENCHMARK(verify_enumeration);

void reduce_full_cube(benchmark::State& state) {
  const GroundSet g = GroundSet::numbered(static_cast<int>(state.range(0)));
  const InducedSubposet full(g, submasks_of(g.all()));
  const VertexMask y = VertexMask::of({0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(criticalize(full, y).size());
  }
}
BENCHMARK(reduce_full_cube)->Arg(3)->Arg(4);

void decompose_diamond(benchmark::State& state) {
  // The 2-cube exercises both split kinds: series at the extremes, parallel
  // across the middle antichain.
  const AbstractPoset p = AbstractPoset::boolean(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sp_decompose(p).has_value());
  }
}
BENCHMARK(decompose_diamond);

void build_recursive_family(benchmark::State& state) {
  const InducedSubposet f = five_vertex_core();
  const VertexMask y = VertexMask::of({0, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_family(f, y).entries().size());
  }
}
BENCHMARK(build_recursive_family);

void decide_colorings(benchmark::State& state) {
  const AbstractPoset pattern = AbstractPoset::n_shape();
  RamseyOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ramsey_decision(pattern, 1, 3, options).holds);
  }
}
BENCHMARK(decide_colorings)->Arg(1)->Arg(4);

void decide_colorings_symmetry(benchmark::State& state) {
  const AbstractPoset pattern = AbstractPoset::n_shape();
  RamseyOptions options;
  options.symmetry = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ramsey_decision(pattern, 1, 3, options).holds);
  }
}
BENCHMARK(decide_colorings_symmetry);

void antichain_capacity_inverse(benchmark::State& state) {
  uint64_t t = 1;
  for (auto _ : state) {
    t = (t * 2862933555777941757ull + 3037000493ull) % ((1ull << 62) - 1) + 1;
    benchmark::DoNotOptimize(sperner_number(t));
  }
}
BENCHMARK(antichain_capacity_inverse);

}  // namespace

BENCHMARK_MAIN();
