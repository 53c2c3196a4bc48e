#include "polysym/oracle.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <string>

using namespace polysym;

namespace {

const char* const kNames[] = {"hexagon", "cube", "simplex4", "cyclic_6_4", "octahedron"};

Polytope fixture(int index) {
  return load_polytope_file(std::string(POLYSYM_FIXTURES_DIR) + "/" + kNames[index] + ".json");
}

void label(benchmark::State& state, int index) {
  state.SetLabel(std::string(kNames[index]) + " threads=" + std::to_string(omp_get_max_threads()));
}

void oracle_serial(benchmark::State& state) {
  const auto p = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_group_serial(p.vertices, Flavor::Linear));
  label(state, static_cast<int>(state.range(0)));
}

void oracle_parallel(benchmark::State& state) {
  const auto p = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_group(p.vertices, Flavor::Linear));
  label(state, static_cast<int>(state.range(0)));
}

void hessian_serial(benchmark::State& state) {
  const auto p = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(central_differences_serial(p, 1e-3));
  label(state, static_cast<int>(state.range(0)));
}

void hessian_parallel(benchmark::State& state) {
  const auto p = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(central_differences(p, 1e-3));
  label(state, static_cast<int>(state.range(0)));
}

void fd_matrix_serial(benchmark::State& state) {
  const auto p = fixture(static_cast<int>(state.range(0)));
  const auto g = edge_graph(p, enumerate_facets(p));
  for (auto _ : state) benchmark::DoNotOptimize(izmestiev_matrix_fd_serial(p, g, 1e-3));
  label(state, static_cast<int>(state.range(0)));
}

void fd_matrix_parallel(benchmark::State& state) {
  const auto p = fixture(static_cast<int>(state.range(0)));
  const auto g = edge_graph(p, enumerate_facets(p));
  for (auto _ : state) benchmark::DoNotOptimize(izmestiev_matrix_fd(p, g, 1e-3));
  label(state, static_cast<int>(state.range(0)));
}

}  // namespace

BENCHMARK(oracle_serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_parallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(hessian_serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(hessian_parallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(fd_matrix_serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(fd_matrix_parallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
