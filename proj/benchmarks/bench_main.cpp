#include <benchmark/benchmark.h>

#include <chrono>

#include "illtp/focused.hpp"
#include "illtp/il_prover.hpp"
#include "illtp/kleene.hpp"
#include "illtp/petri.hpp"
#include "illtp/problem.hpp"
#include "illtp/translate.hpp"

using namespace illtp;

namespace {

void BM_ProveKleene(benchmark::State& state) {
  auto kind = static_cast<TranslationKind>(state.range(0));
  std::vector<Sequent> sequents;
  for (const KleeneEntry& e : kleene_corpus()) sequents.push_back(trans_sequent(e.sequent, kind));
  for (auto _ : state) {
    for (const Sequent& s : sequents) benchmark::DoNotOptimize(prove(s).verdict);
  }
  state.SetLabel(std::string(tag(kind)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sequents.size()));
}
BENCHMARK(BM_ProveKleene)
    ->Arg(static_cast<int>(TranslationKind::Mult))
    ->Arg(static_cast<int>(TranslationKind::CallByName))
    ->Arg(static_cast<int>(TranslationKind::CallByValue))
    ->Arg(static_cast<int>(TranslationKind::ZeroOne))
    ->Unit(benchmark::kMillisecond);

void BM_ProveIL(benchmark::State& state) {
  for (auto _ : state) {
    for (const KleeneEntry& e : kleene_corpus()) benchmark::DoNotOptimize(prove_il(e.sequent).provable);
  }
}
BENCHMARK(BM_ProveIL)->Unit(benchmark::kMillisecond);

void BM_GenerateLibrary(benchmark::State& state) {
  for (auto _ : state) {
    auto lib = generate_library(kleene_corpus(), kAllTranslations);
    benchmark::DoNotOptimize(lib.size());
  }
}
BENCHMARK(BM_GenerateLibrary)->Unit(benchmark::kMillisecond);

void BM_ParseSerialize(benchmark::State& state) {
  std::string text;
  for (const Problem& p : generate_library(kleene_corpus(), kAllTranslations))
    text += serialize_problem(p) + "\x1f";
  std::vector<std::string> chunks;
  for (std::size_t pos = 0, next; (next = text.find('\x1f', pos)) != std::string::npos; pos = next + 1)
    chunks.push_back(text.substr(pos, next - pos));
  for (auto _ : state) {
    for (const std::string& c : chunks) benchmark::DoNotOptimize(serialize_problem(parse_problem(c)));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseSerialize)->Unit(benchmark::kMillisecond);

PetriNet ring(int places) {
  PetriNet net;
  net.name = "ring";
  for (int i = 0; i < places; ++i) net.places.push_back("s" + std::to_string(i));
  for (int i = 0; i < places; ++i)
    net.transitions.push_back(
        {"t" + std::to_string(i), {{net.places[i], 1}}, {{net.places[(i + 1) % places], 1}}});
  return net;
}

void BM_PetriReach(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  PetriNet net = ring(6);
  Marking m0{{"s0", 1}};
  SimulationResult sim = simulate(net, m0, steps, 0);
  Sequent s = to_sequent(encode_reachability({net, m0, sim.marking}));
  SearchLimits limits;
  limits.decide_bound = 32;
  limits.timeout = std::chrono::milliseconds(0);
  for (auto _ : state) benchmark::DoNotOptimize(prove(s, limits).verdict);
}
BENCHMARK(BM_PetriReach)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
