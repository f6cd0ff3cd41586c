// Copyright 2026 The QADS Authors.
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

// Serial reference vs OpenMP for the two hot loops: candidate generation and
// scoring. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "qads/dataset/squad.h"
#include "qads/eval/scorer.h"
#include "qads/generator/generator.h"
#include "qads/wsd/lesk.h"

namespace {

using namespace qads;

struct Fixture {
  wordnet::LexicalStore store =
      wordnet::LexicalStore::load(std::string(QADS_DATA_DIR) + "/wordnet-3.0");
  text::WordLists lists =
      text::WordLists::load(std::string(QADS_DATA_DIR) + "/stopwords.txt",
                            std::string(QADS_DATA_DIR) + "/phrases.txt");
  dataset::Dataset corpus = dataset::read_squad(
      std::string(QADS_TEST_DATA_DIR) + "/surrogate_squad.json");
  eval::PredictionSet predictions;

  Fixture() {
    // Every third answer wrong so both branches of the matcher run.
    std::size_t i = 0;
    for (const auto &item : corpus.items()) {
      predictions[item.id] = (i++ % 3 == 0 || item.is_impossible)
                                 ? "the wrong answer"
                                 : item.answers.front().text;
    }
  }
};

Fixture &Shared() {
  static Fixture f;
  return f;
}

// A fresh disambiguator per iteration so the signature cache starts cold.
void BM_GenerateSerial(benchmark::State &state) {
  Fixture &f = Shared();
  for (auto _ : state) {
    const wsd::Disambiguator wsd(f.store, f.lists);
    benchmark::DoNotOptimize(generator::build_qads_serial(f.corpus, wsd, f.lists, {}));
  }
  state.SetItemsProcessed(state.iterations() * f.corpus.size());
}

void BM_GenerateParallel(benchmark::State &state) {
  Fixture &f = Shared();
  for (auto _ : state) {
    const wsd::Disambiguator wsd(f.store, f.lists);
    benchmark::DoNotOptimize(generator::build_qads(f.corpus, wsd, f.lists, {}));
  }
  state.SetItemsProcessed(state.iterations() * f.corpus.size());
  state.counters["threads"] = omp_get_max_threads();
}

void BM_ScoreSerial(benchmark::State &state) {
  Fixture &f = Shared();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval::score_serial(f.corpus, f.predictions));
  }
  state.SetItemsProcessed(state.iterations() * f.corpus.size());
}

void BM_ScoreParallel(benchmark::State &state) {
  Fixture &f = Shared();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval::score(f.corpus, f.predictions));
  }
  state.SetItemsProcessed(state.iterations() * f.corpus.size());
  state.counters["threads"] = omp_get_max_threads();
}

BENCHMARK(BM_GenerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScoreSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
