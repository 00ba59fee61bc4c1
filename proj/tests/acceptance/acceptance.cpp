// Acceptance gate: runs criteria 1-11 and prints one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "illtp/bench.hpp"
#include "illtp/focused.hpp"
#include "illtp/il_prover.hpp"
#include "illtp/kleene.hpp"
#include "illtp/latex.hpp"
#include "illtp/petri.hpp"
#include "illtp/problem.hpp"
#include "illtp/translate.hpp"
#include "oracles.hpp"

#ifdef ILLTP_HAVE_CLI
#include "cli.hpp"
#endif

using namespace illtp;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      if (pass) detail = why;
      pass = false;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// 1 -------------------------------------------------------------------------
Outcome corpus_generation() {
  Outcome o;
  auto t0 = Clock::now();
  illtp::testing::TempDir dir;
#ifdef ILLTP_HAVE_CLI
  std::ostringstream out, err;
  int code = cli::run({"corpus", "kleene", "-o", dir.path().string()}, out, err);
  o.require(code == 0, "corpus command failed: " + err.str());
#else
  for (const Problem& p : generate_library(kleene_corpus(), kAllTranslations))
    std::ofstream(dir.path() / (p.name + ".p")) << serialize_problem(p);
#endif
  std::size_t translated = 0, alternatives = 0;
  for (const auto& e : fs::directory_iterator(dir.path())) {
    if (e.path().extension() != ".p") continue;
    Problem p = parse_problem(illtp::testing::slurp(e.path()));
    (p.header.value("Translation") == "alt" ? alternatives : translated)++;
  }
  double secs = seconds_since(t0);
  o.require(translated == 244, fmt("%zu translated problems, expected 244", translated));
  o.require(alternatives == 27, fmt("%zu alternatives, expected 27", alternatives));
  o.require(secs < 5, fmt("took %.2f s", secs));
  if (o.pass) o.detail = fmt("%zu files (244 + 27) in %.3f s", translated + alternatives, secs);
  return o;
}

// 2 -------------------------------------------------------------------------
Outcome il_oracle() {
  Outcome o;
  auto t0 = Clock::now();
  int proved = 0;
  for (const KleeneEntry& e : kleene_corpus()) {
    ILProofResult r = prove_il(e.sequent);
    bool ok = r.provable && r.proof && check_il_proof(*r.proof, e.sequent);
    o.require(ok, fmt("entry %d not proved", e.index));
    proved += ok;
  }
  double secs = seconds_since(t0);
  o.require(secs < 30, fmt("took %.2f s", secs));
  if (o.pass) o.detail = fmt("%d/61 provable with checked proofs in %.3f s", proved, secs);
  return o;
}

// 3 -------------------------------------------------------------------------
Outcome mult_statuses() {
  Outcome o;
  auto t0 = Clock::now();
  int provable = 0, not_provable = 0, unknown = 0;
  for (const KleeneEntry& e : kleene_corpus()) {
    Sequent s = trans_sequent(e.sequent, TranslationKind::Mult);
    ProveResult r = prove(s);
    switch (r.verdict) {
      case Verdict::Provable:
        ++provable;
        o.require(check_proof(*r.proof, s), fmt("entry %d: proof rejected", e.index));
        break;
      case Verdict::NotProvable:
        ++not_provable;
        break;
      case Verdict::Unknown:
        ++unknown;
        break;
    }
    bool expected = e.mult_status == ProblemStatus::Theorem;
    o.require(r.verdict != Verdict::Unknown && r.provable() == expected,
              fmt("entry %d: %s", e.index, std::string(to_string(r.verdict)).c_str()));
  }
  double secs = seconds_since(t0);
  o.require(provable == 39 && not_provable == 22 && unknown == 0,
            fmt("%d/%d/%d", provable, not_provable, unknown));
  o.require(secs < 120, fmt("took %.2f s", secs));
  if (o.pass)
    o.detail = fmt("%d Provable / %d NotProvable / %d Unknown in %.3f s", provable, not_provable,
                   unknown, secs);
  return o;
}

// 4 -------------------------------------------------------------------------
Outcome preservation() {
  Outcome o;
  auto t0 = Clock::now();
  SearchLimits limits;
  limits.timeout = std::chrono::milliseconds(60'000);
  int ok = 0;
  double worst = 0;
  for (TranslationKind k :
       {TranslationKind::CallByName, TranslationKind::CallByValue, TranslationKind::ZeroOne}) {
    for (const KleeneEntry& e : kleene_corpus()) {
      Sequent s = trans_sequent(e.sequent, k);
      ProveResult r = prove(s, limits);
      worst = std::max(worst, r.elapsed_ms);
      bool good = r.provable() && check_proof(*r.proof, s);
      o.require(good, fmt("entry %d under %s: %s %s", e.index, std::string(tag(k)).c_str(),
                          std::string(to_string(r.verdict)).c_str(),
                          std::string(to_string(r.reason)).c_str()));
      ok += good;
    }
  }
  if (o.pass)
    o.detail = fmt("%d/183 Provable and checked, slowest %.1f ms, total %.2f s", ok, worst,
                   seconds_since(t0));
  return o;
}

// 5 -------------------------------------------------------------------------
Outcome alternatives() {
  Outcome o;
  int ok = 0;
  for (const KleeneEntry& e : kleene_corpus()) {
    for (const AlternativeSequent& alt : e.alternatives) {
      ProveResult r = prove(alt.sequent);
      bool good = r.provable() && check_proof(*r.proof, alt.sequent);
      o.require(good, fmt("alternative %d%s not proved", e.index, alt.part.c_str()));
      ok += good;
    }
  }
  o.require(ok == 27, fmt("%d/27", ok));
  if (o.pass) o.detail = fmt("%d/27 Provable with checked proofs", ok);
  return o;
}

// 6 -------------------------------------------------------------------------
Outcome transitivity_example() {
  Outcome o;
  ILSequent s{{parse_il_formula("A => B"), parse_il_formula("B => C")}, parse_il_formula("A => C")};
  for (TranslationKind k : kAllTranslations) {
    Sequent t = trans_sequent(s, k);
    ProveResult r = prove(t);
    o.require(r.provable() && check_proof(*r.proof, t), "not provable under " + std::string(tag(k)));
    if (k != TranslationKind::Mult || !r.proof) continue;
    bool theta_empty = true;
    illtp::testing::for_each_node(*r.proof, [&](const ProofTree& n) {
      theta_empty = theta_empty && n.conclusion.theta.empty();
    });
    o.require(theta_empty, "classical context not empty in the multiplicative proof");
    std::string tex = render_latex_proof(*r.proof);
    o.require(tex.find("\\star") != std::string::npos, "no condensed negative phase");
    o.require(tex.find("\\multimap_R") == std::string::npos, "negative rule shown uncondensed");
  }
  if (o.pass) o.detail = "Provable under mult, cbn, cbv, 01; empty classical context; star-condensed";
  return o;
}

// 7 -------------------------------------------------------------------------
Outcome focusing_invariants() {
  Outcome o;
  std::mt19937_64 rng(7);
  // Without exponentials the search space is finite, so those sequents get a
  // wall-clock limit instead of a decide budget.
  SearchLimits with_bangs;
  with_bangs.timeout = std::chrono::milliseconds(0);
  with_bangs.node_budget = 50'000;
  SearchLimits without_bangs;
  without_bangs.timeout = std::chrono::milliseconds(120'000);
  int proofs = 0, decide_nodes = 0, bang_free = 0, compared = 0, agree = 0;
  for (int i = 0; i < 500; ++i) {
    illtp::testing::FormulaShape shape{6, 3, i % 2 == 0, true};
    Sequent s = illtp::testing::random_sequent(rng, shape);
    bool has_bang = false;
    for (Formula g : s.antecedent) has_bang = has_bang || bang_count(g) > 0;
    if (s.succedent) has_bang = has_bang || bang_count(*s.succedent) > 0;
    ProveResult r = prove(s, has_bang ? with_bangs : without_bangs);
    if (r.proof) {
      ++proofs;
      o.require(check_proof(*r.proof, s), "proof rejected: " + to_unicode(s));
      illtp::testing::for_each_node(*r.proof, [&](const ProofTree& n) {
        if (n.rule != Rule::DL1 && n.rule != Rule::DL2 && n.rule != Rule::DR) return;
        ++decide_nodes;
        o.require(is_normal(n.conclusion), "non-normal decide: " + to_unicode(n.conclusion));
      });
    }
    if (has_bang) continue;
    ++bang_free;
    auto naive = illtp::testing::naive_provable(s);
    if (!naive) continue;
    ++compared;
    bool same = r.verdict != Verdict::Unknown && r.provable() == *naive;
    o.require(same, "disagreement on " + to_unicode(s));
    agree += same;
  }
  o.require(compared == bang_free, fmt("naive search gave up on %d sequents", bang_free - compared));
  o.detail = fmt("%d proofs, %d decide nodes all normal; %d/%d bang-free verdicts agree", proofs,
                 decide_nodes, agree, compared);
  return o;
}

// 8 -------------------------------------------------------------------------
Outcome bang_equivalence() {
  Outcome o;
  std::mt19937_64 rng(8);
  illtp::testing::FormulaShape shape{3, 3, true, true};
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    Formula F = illtp::testing::random_formula(rng, shape);
    Formula G = illtp::testing::random_formula(rng, shape);
    Formula lhs = Formula::bang(Formula::with(F, G));
    Formula rhs = Formula::tensor(Formula::bang(F), Formula::bang(G));
    bool both = true;
    for (const Sequent& s : {Sequent{{lhs}, rhs}, Sequent{{rhs}, lhs}}) {
      ProveResult r = prove(s);
      bool good = r.provable() && check_proof(*r.proof, s);
      o.require(good, "not provable: " + to_unicode(s));
      both = both && good;
    }
    ok += both;
  }
  if (o.pass) o.detail = fmt("%d/100 pairs provable in both directions", ok);
  return o;
}

// 9 -------------------------------------------------------------------------
Outcome petri_soundness() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937_64 rng(9);
  SearchLimits limits;
  limits.decide_bound = 16;
  limits.node_budget = 2'000'000;
  limits.timeout = std::chrono::milliseconds(0);
  int instances = 0, provable = 0, both = 0;
  for (int i = 0; i < 100; ++i) {
    PnmlModel m = illtp::testing::random_net(rng);
    for (std::size_t steps : {1u, 5u, 10u}) {
      SimulationResult sim = simulate(m.net, m.initial, steps, static_cast<std::uint64_t>(i));
      ReachProblem p{m.net, m.initial, sim.marking};
      Sequent s = to_sequent(encode_reachability(p));
      ProveResult r = prove(s, limits);
      Reachability bfs = reachable_bfs(p, 200'000);
      ++instances;
      bool good = r.provable() && check_proof(*r.proof, s);
      o.require(good, fmt("net %d, %zu steps: %s %s", i, steps,
                          std::string(to_string(r.verdict)).c_str(),
                          std::string(to_string(r.reason)).c_str()));
      provable += good;
      if (r.verdict != Verdict::Unknown && bfs != Reachability::Unknown) {
        ++both;
        o.require(r.provable() == (bfs == Reachability::Reachable),
                  fmt("net %d, %zu steps: prover and BFS disagree", i, steps));
      }
    }
  }
  double secs = seconds_since(t0);
  o.require(secs < 600, fmt("took %.1f s", secs));
  if (o.pass)
    o.detail = fmt("%d/%d Provable; %d definitive comparisons agree; %.1f s", provable, instances,
                   both, secs);
  return o;
}

// 10 ------------------------------------------------------------------------
Outcome format_round_trip() {
  Outcome o;
  auto lib = generate_library(kleene_corpus(), kAllTranslations);
  int ok = 0;
  for (const Problem& p : lib) {
    bool same = same_problem(parse_problem(serialize_problem(p)), p);
    o.require(same, "round trip changed " + p.name);
    ok += same;
  }
  std::mt19937_64 rng(10);
  int random_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    Formula g = illtp::testing::random_any_formula(rng, 8);
    Problem p{"", {{"h", g}}, {"c", g}, {}};
    bool same = parse_formula(to_string(g)) == g &&
                same_problem(parse_problem(serialize_problem(p)), p);
    o.require(same, "round trip changed " + to_string(g));
    random_ok += same;
  }
  if (o.pass) o.detail = fmt("%d/%zu library problems, %d/1000 random formulas", ok, lib.size(), random_ok);
  return o;
}

// 11 ------------------------------------------------------------------------
Outcome harness() {
  Outcome o;
  auto suite = load_suite(illtp::testing::data_path("smoke"));
  auto records = run_suite(suite, SearchLimits{}, 2);
  std::string csv;
  for (GroupBy by : {GroupBy::None, GroupBy::Category, GroupBy::Translation, GroupBy::Both}) {
    auto stats = summarize(records, by);
    for (const SuiteStats& s : stats)
      o.require(s.num_problems == s.unsolved + s.solved_theorems + s.non_theorems,
                "partition broken in group " + s.group);
    if (by == GroupBy::Category) csv = emit_report(stats, ReportFormat::Csv);
  }
  o.require(csv.rfind("group,num_problems,unsolved,solved_theorems,non_theorems,min_ms,avg_ms,max_ms\n",
                      0) == 0,
            "unexpected CSV header");

  std::vector<BenchProblem> hard{make_bench_problem(
      "HARD-1",
      "fof(h1, axiom, !(!a -o b)). fof(h2, axiom, !(!a -o c)). fof(h3, axiom, !a). "
      "fof(c, conjecture, 0).")};
  SearchLimits one_ms;
  one_ms.timeout = std::chrono::milliseconds(1);
  one_ms.decide_bound = 1'000'000;
  one_ms.loop_check = false;
  auto timed = run_suite(hard, one_ms, 1);
  o.require(timed[0].verdict == Verdict::Unknown && timed[0].reason == UnknownReason::Timeout,
            "1 ms run was not a timeout");
  auto stats = summarize(timed, GroupBy::None);
  o.require(stats[0].unsolved == 1 && !stats[0].avg_ms, "timeout not counted as unsolved");
  if (o.pass)
    o.detail = fmt("%zu smoke problems, partition holds; 1 ms run Unknown(Timeout) after %.2f ms",
                   suite.size(), timed[0].elapsed_ms);
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"corpus generation", corpus_generation},
      {"IL oracle", il_oracle},
      {"multiplicative statuses", mult_statuses},
      {"preservation", preservation},
      {"alternatives", alternatives},
      {"transitivity example", transitivity_example},
      {"focusing invariants", focusing_invariants},
      {"bang equivalence", bang_equivalence},
      {"Petri soundness", petri_soundness},
      {"format round-trip", format_round_trip},
      {"harness", harness},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
