#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "illtp/bench.hpp"
#include "illtp/focused.hpp"
#include "illtp/il_prover.hpp"
#include "illtp/kleene.hpp"
#include "illtp/latex.hpp"
#include "illtp/petri.hpp"
#include "illtp/problem.hpp"
#include "illtp/proof_io.hpp"
#include "illtp/translate.hpp"

namespace illtp::cli {
namespace {

namespace fs = std::filesystem;

struct Failure {
  int code;
  std::string message;
};

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kNoInput, "cannot read " + path.string()};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size())))
    throw Failure{kCantCreate, "cannot write " + path.string()};
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Failure{kCantCreate, "cannot create " + dir.string() + ": " + ec.message()};
}

template <class F>
auto parse_or_fail(const fs::path& path, F&& parse) {
  try {
    return parse(read_text(path));
  } catch (const FormatError& e) {
    throw Failure{kDataError, path.string() + ": " + e.what()};
  }
}

std::string format_ms(double ms) {
  std::ostringstream ss;
  ss.precision(ms < 10 ? 3 : 1);
  ss << std::fixed << ms << " ms";
  return ss.str();
}

struct LimitOptions {
  std::int64_t timeout_ms = 300'000;
  std::uint32_t decide_bound = SearchLimits{}.decide_bound;
  std::uint32_t max_depth = SearchLimits{}.max_depth;
  std::uint64_t node_budget = 0;
  bool no_saturate = false;
  bool no_loop_check = false;
  std::string order = "linear";

  void attach(CLI::App* app) {
    app->add_option("--timeout-ms", timeout_ms, "wall-clock limit per problem, 0 for none")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app->add_option("--decide-bound", decide_bound, "DL1 uses per classical formula and branch")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app->add_option("--max-depth", max_depth, "decide steps per branch")->capture_default_str();
    app->add_option("--node-budget", node_budget,
                    "total decide steps before giving up, 0 for none (deterministic limit)")
        ->capture_default_str();
    app->add_flag("--no-saturate", no_saturate, "disable classical-context saturation");
    app->add_flag("--no-loop-check", no_loop_check, "disable the ancestor loop check");
    app->add_option("--order", order, "decide order")
        ->check(CLI::IsMember({"linear", "right", "classical"}))
        ->capture_default_str();
  }

  SearchLimits limits() const {
    SearchLimits l;
    l.timeout = std::chrono::milliseconds(timeout_ms);
    l.decide_bound = decide_bound;
    l.max_depth = max_depth;
    l.node_budget = node_budget;
    l.saturate = !no_saturate;
    l.loop_check = !no_loop_check;
    l.order = order == "right"       ? DecideOrder::RightFirst
              : order == "classical" ? DecideOrder::ClassicalFirst
                                     : DecideOrder::LinearFirst;
    return l;
  }
};

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Provable:
      return kOk;
    case Verdict::NotProvable:
      return kNotProvable;
    case Verdict::Unknown:
      return kUnknown;
  }
  return kUnknown;
}

// ---------------------------------------------------------------------------

struct TranslateCmd {
  std::string kind;
  std::string input;
  std::string output;

  int run(std::ostream& out, std::ostream& err) const {
    TranslationKind k = *parse_translation_kind(kind);
    ILProblem src = parse_or_fail(input, parse_il_problem);
    Sequent s = trans_sequent(to_sequent(src), k);
    std::string base = src.name.empty() ? fs::path(input).stem().string() : src.name;
    Problem p{base + "-" + std::string(tag(k)), {}, {src.conjecture.label, *s.succedent},
              src.header};
    p.header.set("Problem", p.name);
    p.header.set("Translation", tag(k));
    // Only the translations that preserve provability keep a Theorem status.
    if (src.header.status() != ProblemStatus::Theorem || k == TranslationKind::Mult)
      p.header.set_status(ProblemStatus::Unknown);
    for (std::size_t i = 0; i < s.antecedent.size(); ++i)
      p.axioms.push_back({src.axioms[i].label, s.antecedent[i]});

    bool admissible = std::all_of(s.antecedent.begin(), s.antecedent.end(), is_ill_admissible) &&
                      is_ill_admissible(*s.succedent);
    if (!admissible) err << "warning: " << p.name << " uses ⅋ and is outside ILL\n";

    std::string text = serialize_problem(p);
    if (output.empty())
      out << text;
    else
      write_text(output, text);
    return kOk;
  }
};

struct ProveCmd {
  std::string logic = "ill";
  std::string file;
  LimitOptions limits;
  std::string proof_out;
  std::string latex_out;

  int run(std::ostream&, std::ostream& err) const {
    if (logic == "il") return run_il(err);
    Problem p = parse_or_fail(file, parse_problem);
    Sequent s = to_sequent(p);
    std::string name = p.name.empty() ? fs::path(file).stem().string() : p.name;

    ProveResult r;
    try {
      r = prove(s, limits.limits());
    } catch (const NonAdmissibleFormula& e) {
      err << name << ": Unknown (" << e.what() << ")\n";
      return kUnknown;
    }
    err << name << ": " << to_string(r.verdict);
    if (r.verdict == Verdict::Unknown) err << " (" << to_string(r.reason) << ")";
    if (r.proof) err << ", proof size " << proof_size(*r.proof);
    err << ", " << r.decides << " decides, " << format_ms(r.elapsed_ms) << "\n";

    if (r.proof && !proof_out.empty())
      write_text(proof_out, write_proof_json({name, s, *r.proof}));
    if (r.proof && !latex_out.empty())
      write_text(latex_out, latex_document(render_latex_proof(*r.proof)));
    return exit_code(r.verdict);
  }

  int run_il(std::ostream& err) const {
    if (!proof_out.empty() || !latex_out.empty())
      throw Failure{kUsage, "--proof-out and --latex need --logic ill"};
    ILProblem p = parse_or_fail(file, parse_il_problem);
    std::string name = p.name.empty() ? fs::path(file).stem().string() : p.name;
    ILLimits il;
    if (limits.node_budget > 0) il.node_budget = limits.node_budget;
    try {
      ILProofResult r = prove_il(to_sequent(p), il);
      err << name << ": " << (r.provable ? "Provable" : "NotProvable") << ", " << r.nodes
          << " nodes\n";
      return r.provable ? kOk : kNotProvable;
    } catch (const ResourceExceeded& e) {
      err << name << ": Unknown (" << e.what() << ")\n";
      return kUnknown;
    }
  }
};

struct CheckCmd {
  std::string proof_file;
  std::string problem_file;

  int run(std::ostream&, std::ostream& err) const {
    ProofDocument doc = parse_or_fail(proof_file, read_proof_json);
    Problem p = parse_or_fail(problem_file, parse_problem);
    Sequent s = to_sequent(p);
    if (!(doc.sequent == s)) {
      err << "invalid: the proof is about " << to_unicode(doc.sequent) << ", not "
          << to_unicode(s) << "\n";
      return kNotProvable;
    }
    if (!check_proof(doc.proof, s)) {
      err << "invalid: some inference does not match its rule\n";
      return kNotProvable;
    }
    err << "valid (" << proof_size(doc.proof) << " nodes)\n";
    return kOk;
  }
};

PnmlModel load_net(const std::string& file) {
  std::string text = read_text(file);
  try {
    return parse_pnml(text);
  } catch (const PetriError& e) {
    throw Failure{kDataError, file + ": " + e.what()};
  }
}

Problem encode(const PnmlModel& m, const Marking& to, const std::string& name) {
  try {
    return encode_reachability({m.net, m.initial, to}, name);
  } catch (const PetriError& e) {
    throw Failure{kDataError, name + ": " + e.what()};
  }
}

struct PetriSimCmd {
  std::string pnml;
  std::size_t steps = 0;
  std::uint64_t seed = 0;

  int run(std::ostream& out, std::ostream& err) const {
    PnmlModel m = load_net(pnml);
    SimulationResult r = simulate(m.net, m.initial, steps, seed);
    out << to_string(r.marking) << "\n";
    err << r.steps_taken << " of " << steps << " steps";
    if (r.deadlocked) err << ", deadlocked";
    err << "\n";
    return kOk;
  }
};

struct PetriEncodeCmd {
  std::string pnml;
  std::vector<std::size_t> steps{1, 5, 10, 20, 50, 100};
  std::uint64_t seed = 0;
  std::string outdir;

  int run(std::ostream&, std::ostream& err) const {
    PnmlModel m = load_net(pnml);
    std::string stem = fs::path(pnml).stem().string();
    ensure_dir(outdir);
    auto snapshots = simulate_snapshots(m.net, m.initial, steps, seed);
    for (const SimulationResult& snap : snapshots) {
      std::string name = stem + "-" + std::to_string(snap.steps_taken) + "-" + std::to_string(seed);
      Problem p = encode(m, snap.marking, name);
      p.header.set("Problem", name);
      p.header.set("Steps", std::to_string(snap.steps_taken));
      p.header.set("Seed", std::to_string(seed));
      p.header.set("Marking", to_string(snap.marking));
      if (snap.deadlocked) p.header.set("Deadlock", "yes");
      p.header.set_status(ProblemStatus::Theorem);
      write_text(fs::path(outdir) / (name + ".p"), serialize_problem(p));
      err << "wrote " << name << ".p";
      if (snap.deadlocked) err << " (deadlock after " << snap.steps_taken << " steps)";
      err << "\n";
    }
    return kOk;
  }
};

struct CorpusCmd {
  std::string which;
  std::string outdir;
  bool with_il = false;

  int run(std::ostream&, std::ostream& err) const {
    ensure_dir(outdir);
    const auto& corpus = kleene_corpus();
    auto problems = generate_library(corpus, kAllTranslations);
    for (const Problem& p : problems) {
      Problem named = p;
      named.header.set("Problem", p.name);
      write_text(fs::path(outdir) / (p.name + ".p"), serialize_problem(named));
    }
    err << "wrote " << problems.size() << " problems to " << outdir << "\n";
    if (with_il) {
      fs::path il_dir = fs::path(outdir) / "il";
      ensure_dir(il_dir);
      auto il = kleene_il_problems(corpus);
      for (const ILProblem& p : il) {
        ILProblem named = p;
        named.header.set("Problem", p.name);
        write_text(il_dir / (p.name + ".p"), serialize_il_problem(named));
      }
      err << "wrote " << il.size() << " intuitionistic problems to " << il_dir.string() << "\n";
    }
    return kOk;
  }
};

struct BenchCmd {
  std::string dir;
  LimitOptions limits;
  unsigned workers = 1;
  std::string group_by = "both";
  std::string report = "csv";
  std::string output;
  std::string records_out;

  int run(std::ostream& out, std::ostream& err) const {
    if (!fs::is_directory(dir)) throw Failure{kNoInput, dir + " is not a directory"};
    auto problems = load_suite(dir);
    auto records = run_suite(problems, limits.limits(), workers);
    for (const RunRecord& r : records) {
      if (r.verdict == Verdict::Unknown && !r.error.empty())
        err << r.name << ": " << to_string(r.reason) << ": " << r.error << "\n";
      else if (r.expected == ProblemStatus::Theorem && r.verdict == Verdict::NotProvable)
        err << r.name << ": NotProvable but marked Theorem\n";
      else if (r.expected == ProblemStatus::NonTheorem && r.verdict == Verdict::Provable)
        err << r.name << ": Provable but marked Non-Theorem\n";
    }
    auto stats = summarize(records, *parse_group_by(group_by));
    std::string text = emit_report(stats, *parse_report_format(report));
    if (output.empty())
      out << text;
    else
      write_text(output, text);
    if (!records_out.empty()) write_text(records_out, emit_records_csv(records));
    err << records.size() << " problems\n";
    return kOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intuitionistic linear logic prover and benchmark toolkit", "illtp"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a TOML/INI file");

  TranslateCmd translate;
  auto* t = app.add_subcommand("translate", "translate an intuitionistic problem into ILL");
  t->add_option("--kind,-k", translate.kind, "mult, cbn, cbv or 01")
      ->required()
      ->check(CLI::IsMember({"mult", "cbn", "cbv", "01"}));
  t->add_option("input", translate.input, "ILTP-syntax problem file")->required();
  t->add_option("-o,--output", translate.output, "output file (default: standard output)");

  ProveCmd prove_cmd;
  auto* p = app.add_subcommand("prove", "decide a problem file");
  p->add_option("--logic", prove_cmd.logic, "ill (focused prover) or il (G4ip)")
      ->check(CLI::IsMember({"ill", "il"}))
      ->capture_default_str();
  p->add_option("file", prove_cmd.file, "problem file")->required();
  prove_cmd.limits.attach(p);
  p->add_option("--proof-out", prove_cmd.proof_out, "write the proof as JSON");
  p->add_option("--latex", prove_cmd.latex_out, "write the proof as a LaTeX document");

  CheckCmd check;
  auto* c = app.add_subcommand("check", "check a JSON proof against a problem");
  c->add_option("proof", check.proof_file, "proof file")->required();
  c->add_option("problem", check.problem_file, "problem file")->required();

  PetriSimCmd sim;
  auto* ps = app.add_subcommand("petri-sim", "play the token game on a PNML net");
  ps->add_option("pnml", sim.pnml, "P/T net in PNML")->required();
  ps->add_option("--steps", sim.steps, "transitions to fire")->required();
  ps->add_option("--seed", sim.seed, "random seed")->capture_default_str();

  PetriEncodeCmd enc;
  auto* pe = app.add_subcommand("petri-encode", "emit reachability problems from simulated runs");
  pe->add_option("pnml", enc.pnml, "P/T net in PNML")->required();
  pe->add_option("--steps", enc.steps, "comma-separated step counts")
      ->delimiter(',')
      ->capture_default_str();
  pe->add_option("--seed", enc.seed, "random seed")->capture_default_str();
  pe->add_option("-o,--output", enc.outdir, "output directory")->required();

  CorpusCmd corpus;
  auto* co = app.add_subcommand("corpus", "generate a problem library");
  co->add_option("which", corpus.which, "library to generate")
      ->required()
      ->check(CLI::IsMember({"kleene"}));
  co->add_option("-o,--output", corpus.outdir, "output directory")->required();
  co->add_flag("--il", corpus.with_il, "also write the intuitionistic sources to <dir>/il");

  BenchCmd bench;
  auto* b = app.add_subcommand("bench", "run the prover over a directory of problems");
  b->add_option("dir", bench.dir, "directory of .p files")->required();
  bench.limits.attach(b);
  b->add_option("--workers,-j", bench.workers, "parallel workers")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  b->add_option("--group-by", bench.group_by, "none, category, translation or both")
      ->check(CLI::IsMember({"none", "category", "translation", "both"}))
      ->capture_default_str();
  b->add_option("--report", bench.report, "csv or latex")
      ->check(CLI::IsMember({"csv", "latex"}))
      ->capture_default_str();
  b->add_option("-o,--output", bench.output, "report file (default: standard output)");
  b->add_option("--records", bench.records_out, "per-problem CSV file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, err, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, err, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  try {
    if (*t) return translate.run(out, err);
    if (*p) return prove_cmd.run(out, err);
    if (*c) return check.run(out, err);
    if (*ps) return sim.run(out, err);
    if (*pe) return enc.run(out, err);
    if (*co) return corpus.run(out, err);
    if (*b) return bench.run(out, err);
  } catch (const Failure& f) {
    err << "illtp: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    err << "illtp: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace illtp::cli
