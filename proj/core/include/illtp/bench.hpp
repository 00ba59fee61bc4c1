#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "illtp/focused.hpp"
#include "illtp/problem.hpp"

namespace illtp {

/// A problem file queued for a benchmark run. `problem` is empty when the
/// file failed to parse; `error` then holds the message.
struct BenchProblem {
  std::string name;
  std::string category;     // e.g. KLE, LCL, SYJ
  std::string translation;  // "Translation" header, "-" if absent
  std::optional<Problem> problem;
  std::string error;
};

/// Category of a problem name: its leading run of letters ("KLE-3-cbn" → "KLE").
std::string category_of(std::string_view name);

BenchProblem make_bench_problem(std::string name, std::string_view text);

/// Every *.p file in `dir` (non-recursive), sorted by file name.
std::vector<BenchProblem> load_suite(const std::filesystem::path& dir);

struct RunRecord {
  std::string name;
  std::string category;
  std::string translation;
  Verdict verdict = Verdict::Unknown;
  UnknownReason reason = UnknownReason::None;
  double elapsed_ms = 0;
  std::size_t proof_size = 0;  // set when Provable
  ProblemStatus expected = ProblemStatus::Unknown;
  std::string error;
};

/// Runs the focused prover on every problem with `workers` threads. Records
/// come back in input order. Parse errors and ⅋/? formulas are recorded as
/// Unknown instead of aborting the run.
std::vector<RunRecord> run_suite(std::span<const BenchProblem> problems,
                                 const SearchLimits& limits, unsigned workers = 1);

enum class GroupBy { None, Category, Translation, Both };
std::optional<GroupBy> parse_group_by(std::string_view text);

struct SuiteStats {
  std::string group;
  std::size_t num_problems = 0;
  std::size_t unsolved = 0;
  std::size_t solved_theorems = 0;
  std::size_t non_theorems = 0;
  // Over decided runs only; absent when nothing was decided.
  std::optional<double> min_ms;
  std::optional<double> avg_ms;
  std::optional<double> max_ms;
};

/// One row per group, groups sorted by name. GroupBy::None gives a single
/// "all" row; Both uses "<category>/<translation>".
std::vector<SuiteStats> summarize(std::span<const RunRecord> records, GroupBy by);

enum class ReportFormat { Csv, Latex };
std::optional<ReportFormat> parse_report_format(std::string_view text);

/// CSV: header group,num_problems,unsolved,solved_theorems,non_theorems,
/// min_ms,avg_ms,max_ms and one row per group. LaTeX: a tabular with one
/// column per group and the statistics as rows. Missing times print as "-".
std::string emit_report(std::span<const SuiteStats> stats, ReportFormat format);

/// Per-problem CSV: name,category,translation,verdict,reason,elapsed_ms,proof_size,expected.
std::string emit_records_csv(std::span<const RunRecord> records);

}  // namespace illtp
