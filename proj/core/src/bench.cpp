#include "illtp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace illtp {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunRecord run_one(const BenchProblem& bp, const SearchLimits& limits) {
  RunRecord r;
  r.name = bp.name;
  r.category = bp.category;
  r.translation = bp.translation;
  if (!bp.problem) {
    r.reason = UnknownReason::ParseError;
    r.error = bp.error;
    return r;
  }
  r.expected = bp.problem->status();
  try {
    ProveResult res = prove(to_sequent(*bp.problem), limits);
    r.verdict = res.verdict;
    r.reason = res.reason;
    r.elapsed_ms = res.elapsed_ms;
    if (res.proof) r.proof_size = proof_size(*res.proof);
  } catch (const NonAdmissibleFormula& e) {
    r.reason = UnknownReason::Unsupported;
    r.error = e.what();
  }
  return r;
}

std::string format_ms(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0f", *v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string latex_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string category_of(std::string_view name) {
  std::size_t n = 0;
  while (n < name.size() && std::isalpha(static_cast<unsigned char>(name[n]))) ++n;
  return n == 0 ? std::string("-") : std::string(name.substr(0, n));
}

BenchProblem make_bench_problem(std::string name, std::string_view text) {
  BenchProblem bp;
  bp.name = std::move(name);
  bp.category = category_of(bp.name);
  bp.translation = "-";
  try {
    Problem p = parse_problem(text);
    if (auto c = p.header.value("Category")) bp.category = *c;
    if (auto t = p.header.value("Translation")) bp.translation = *t;
    bp.problem = std::move(p);
  } catch (const FormatError& e) {
    bp.error = e.what();
  }
  return bp;
}

std::vector<BenchProblem> load_suite(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".p") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<BenchProblem> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(make_bench_problem(f.stem().string(), read_file(f)));
  return out;
}

std::vector<RunRecord> run_suite(std::span<const BenchProblem> problems,
                                 const SearchLimits& limits, unsigned workers) {
  std::vector<RunRecord> records(problems.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(problems.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < problems.size(); ++i) records[i] = run_one(problems[i], limits);
    return records;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < problems.size(); i = next++)
          records[i] = run_one(problems[i], limits);
      });
  }
  return records;
}

std::optional<GroupBy> parse_group_by(std::string_view text) {
  if (text == "none") return GroupBy::None;
  if (text == "category") return GroupBy::Category;
  if (text == "translation") return GroupBy::Translation;
  if (text == "both") return GroupBy::Both;
  return std::nullopt;
}

std::vector<SuiteStats> summarize(std::span<const RunRecord> records, GroupBy by) {
  auto key = [by](const RunRecord& r) -> std::string {
    switch (by) {
      case GroupBy::None:
        return "all";
      case GroupBy::Category:
        return r.category;
      case GroupBy::Translation:
        return r.translation;
      case GroupBy::Both:
        return r.category + "/" + r.translation;
    }
    return "all";
  };
  std::map<std::string, SuiteStats> groups;
  std::map<std::string, double> totals;
  for (const RunRecord& r : records) {
    std::string k = key(r);
    SuiteStats& s = groups[k];
    s.group = k;
    ++s.num_problems;
    switch (r.verdict) {
      case Verdict::Provable:
        ++s.solved_theorems;
        break;
      case Verdict::NotProvable:
        ++s.non_theorems;
        break;
      case Verdict::Unknown:
        ++s.unsolved;
        continue;
    }
    s.min_ms = s.min_ms ? std::min(*s.min_ms, r.elapsed_ms) : r.elapsed_ms;
    s.max_ms = s.max_ms ? std::max(*s.max_ms, r.elapsed_ms) : r.elapsed_ms;
    totals[k] += r.elapsed_ms;
  }
  std::vector<SuiteStats> out;
  for (auto& [k, s] : groups) {
    std::size_t decided = s.solved_theorems + s.non_theorems;
    if (decided > 0) s.avg_ms = totals[k] / static_cast<double>(decided);
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "latex") return ReportFormat::Latex;
  return std::nullopt;
}

std::string emit_report(std::span<const SuiteStats> stats, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    out << "group,num_problems,unsolved,solved_theorems,non_theorems,min_ms,avg_ms,max_ms\n";
    for (const SuiteStats& s : stats)
      out << csv_field(s.group) << ',' << s.num_problems << ',' << s.unsolved << ','
          << s.solved_theorems << ',' << s.non_theorems << ',' << format_ms(s.min_ms) << ','
          << format_ms(s.avg_ms) << ',' << format_ms(s.max_ms) << '\n';
    return out.str();
  }

  out << "\\begin{tabular}{l" << std::string(stats.size(), 'r') << "}\n\\hline\n";
  auto row = [&](std::string_view label, auto&& cell) {
    out << label;
    for (const SuiteStats& s : stats) out << " & " << cell(s);
    out << " \\\\\n";
  };
  row("", [](const SuiteStats& s) { return latex_escape(s.group); });
  out << "\\hline\n";
  row("Num. of Problems", [](const SuiteStats& s) { return std::to_string(s.num_problems); });
  row("Unsolved (timeouts)", [](const SuiteStats& s) { return std::to_string(s.unsolved); });
  row("Solved (Theorems)", [](const SuiteStats& s) { return std::to_string(s.solved_theorems); });
  row("Non-Theorems", [](const SuiteStats& s) { return std::to_string(s.non_theorems); });
  row("Min Time", [](const SuiteStats& s) { return format_ms(s.min_ms); });
  row("Avg Time", [](const SuiteStats& s) { return format_ms(s.avg_ms); });
  row("Max Time", [](const SuiteStats& s) { return format_ms(s.max_ms); });
  out << "\\hline\n\\end{tabular}\n";
  return out.str();
}

std::string emit_records_csv(std::span<const RunRecord> records) {
  std::ostringstream out;
  out << "name,category,translation,verdict,reason,elapsed_ms,proof_size,expected\n";
  for (const RunRecord& r : records) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.elapsed_ms);
    out << csv_field(r.name) << ',' << csv_field(r.category) << ',' << csv_field(r.translation)
        << ',' << to_string(r.verdict) << ',' << to_string(r.reason) << ',' << ms << ','
        << r.proof_size << ',' << to_string(r.expected) << '\n';
  }
  return out.str();
}

}  // namespace illtp
