// Copyright 2026 The kgeodetic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "kgeodetic/geometry.hpp"
#include "kgeodetic/graph.hpp"
#include "kgeodetic/group.hpp"
#include "kgeodetic/lang.hpp"

namespace {

using namespace kgeodetic;

void BM_CayleyBallFree2(benchmark::State& state) {
  GroupSpec f2 = GroupSpec::plain(2, {});
  GenSet s = standard_generators(f2);
  for (auto _ : state) {
    CayleyBall ball = cayley_ball(f2, s, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(ball.size());
  }
}
BENCHMARK(BM_CayleyBallFree2)->DenseRange(4, 8, 2);

void BM_MinGeodeticK(benchmark::State& state) {
  GroupSpec p = GroupSpec::product({GroupSpec::cyclic(0), GroupSpec::cyclic(0)});
  CayleyBall ball = cayley_ball(p, standard_generators(p), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_geodetic_k(ball.graph(), ball.trusted_filter()).k);
  }
  state.counters["vertices"] = static_cast<double>(ball.size());
}
BENCHMARK(BM_MinGeodeticK)->Arg(4)->Arg(8)->Arg(12);

void BM_FindLadders(benchmark::State& state) {
  GroupSpec d = GroupSpec::plain(0, {2, 3});
  CayleyBall ball = cayley_ball(d, standard_generators(d), 6);
  PairScope scope;
  scope.max_pairs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_ladders(ball, 2, 1, scope).candidates);
  }
}
BENCHMARK(BM_FindLadders)->Arg(200)->Arg(2000);

void BM_FactorAutomaton(benchmark::State& state) {
  GroupSpec g = GroupSpec::plain(1, {2, 3});
  CayleyBall ball = cayley_ball(g, standard_generators(g), 6);
  ForbiddenSet f = minimal_forbidden_factors(ball, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_factor_automaton(f, ball.gens().size()).states);
  }
  state.counters["forbidden"] = static_cast<double>(f.words.size());
}
BENCHMARK(BM_FactorAutomaton)->Arg(2)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
