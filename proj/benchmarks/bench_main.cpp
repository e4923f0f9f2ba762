// Copyright 2026 The carent Authors
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


#include <vector>

#include <benchmark/benchmark.h>

#include "carent/fock_oracle.hpp"
#include "carent/pfaffian.hpp"
#include "carent/relent.hpp"
#include "corpus.hpp"

namespace {

using namespace carent;

void BM_Pfaffian(benchmark::State& state) {
  testing::Corpus corpus(1);
  const AntisymmetricMatrix a(corpus.antisymmetric(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Pfaffian)->RangeMultiplier(2)->Range(4, 256)->Complexity(benchmark::oNCubed);

void BM_PfaffianReference(benchmark::State& state) {
  testing::Corpus corpus(2);
  const AntisymmetricMatrix a(corpus.antisymmetric(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian_reference(a));
}
BENCHMARK(BM_PfaffianReference)->DenseRange(4, 12, 4);

void BM_RelentMulti(benchmark::State& state) {
  testing::Corpus corpus(3);
  const auto h = corpus.model(8);
  const auto kms = QuasifreeState::kms(h, 1.0);
  const auto fs = corpus.admissible_list(h.space(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(relent_multi(kms, fs).value());
}
BENCHMARK(BM_RelentMulti)->DenseRange(1, 16, 5);

void BM_FockRep(benchmark::State& state) {
  testing::Corpus corpus(4);
  const auto h = corpus.model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_fock_rep(h).dim());
}
BENCHMARK(BM_FockRep)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_OracleEntropy(benchmark::State& state) {
  testing::Corpus corpus(5);
  const auto h = corpus.model(static_cast<int>(state.range(0)));
  const auto rep = build_fock_rep(h);
  const auto rho = gibbs_density(rep, 1.0);
  const std::vector<ExcitationVector> fs{corpus.admissible(h.space())};
  for (auto _ : state) benchmark::DoNotOptimize(umegaki(rho, excited_density(rep, rho, fs)));
}
BENCHMARK(BM_OracleEntropy)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
