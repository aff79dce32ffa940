// Microbenchmarks for the exact-arithmetic hot paths: root solving, full
// instance verdicts, adapted-basis construction, Pell orbits and the greedy
// floor. Run the binary directly; it takes the usual google-benchmark flags.

#include "degcrit/criterion.hpp"
#include "degcrit/deskmodel.hpp"
#include "degcrit/filtration.hpp"
#include "degcrit/pellpoints.hpp"
#include "degcrit/quadnum.hpp"
#include "degcrit/surface.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

using namespace degcrit;

namespace {

std::int64_t rand_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

void bm_quad_roots_irrational(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad_roots(1, -14, 28));
  }
}
BENCHMARK(bm_quad_roots_irrational);

void bm_quadnum_sign_near_zero(benchmark::State& state) {
  const QuadNum tight(Rational(114243), Rational(-80782), Integer(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tight.sign());
  }
}
BENCHMARK(bm_quadnum_sign_near_zero);

void bm_check_degeneracy(benchmark::State& state) {
  const auto inst = build_product_curve_instance(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_degeneracy(inst));
  }
}
BENCHMARK(bm_check_degeneracy)->Arg(2)->Arg(5)->Arg(12);

void bm_lambda_window_irrational(benchmark::State& state) {
  const auto inst = make_surface_instance(
      {}, {1, 1, 1, 1},
      {{1, 2, 2, 2}, {2, 1, 2, 2}, {2, 2, 1, 2}, {2, 2, 2, 1}}, true, true);
  const auto derived = derive(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_window(inst, derived, 0));
  }
}
BENCHMARK(bm_lambda_window_irrational);

void bm_common_adapted_basis(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  const auto rand_vec = [&] {
    Vec v(d);
    for (auto& e : v) e = Rational(rand_range(rng, -4, 4));
    return v;
  };
  const auto make_chain = [&] {
    std::vector<Vec> pool;
    for (std::size_t i = 0; i < d; ++i) pool.push_back(rand_vec());
    std::vector<Subspace> levels;
    for (std::size_t keep = pool.size(); keep > 0; --keep) {
      levels.push_back(Subspace::span(
          d, std::vector<Vec>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(keep))));
    }
    return Filtration::from_levels(d, levels);
  };
  const auto fa = make_chain();
  const auto fb = make_chain();
  for (auto _ : state) {
    benchmark::DoNotOptimize(common_adapted_basis(fa, fb));
  }
}
BENCHMARK(bm_common_adapted_basis)->Arg(4)->Arg(8)->Arg(12);

void bm_desk_filtration_dims(benchmark::State& state) {
  const auto inst = desk::DeskInstance::make(state.range(0), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(desk::filtration_dims(inst));
  }
}
BENCHMARK(bm_desk_filtration_dims)->Arg(3)->Arg(5);

void bm_pell_orbit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pell::pell_solutions(61, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(bm_pell_orbit)->Arg(5)->Arg(20);

void bm_min_weighted_sum(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::vector<Integer> caps(64);
  Integer total = 0;
  for (auto& c : caps) {
    c = rand_range(rng, 0, 9);
    total += c;
  }
  const Integer demand = total / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_weighted_sum(caps, demand));
  }
}
BENCHMARK(bm_min_weighted_sum);

}  // namespace

BENCHMARK_MAIN();
