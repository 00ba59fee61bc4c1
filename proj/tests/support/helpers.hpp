#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>

#include "illtp/focused.hpp"
#include "illtp/problem.hpp"

namespace illtp::testing {

inline Formula f(const char* text) { return parse_formula(text); }

/// Γ ⊢ Δ from problem-syntax strings; a null succedent means Δ is empty.
inline Sequent seq(std::initializer_list<const char*> lhs, const char* rhs) {
  Sequent s;
  for (const char* a : lhs) s.antecedent.push_back(parse_formula(a));
  if (rhs) s.succedent = parse_formula(rhs);
  return s;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Calls `fn` on every node of the tree.
template <class Fn>
void for_each_node(const ProofTree& pt, Fn&& fn) {
  fn(pt);
  for (const auto& p : pt.premises) for_each_node(p, fn);
}

/// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("illtp-test-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string data_path(const std::string& name) {
  return std::string(ILLTP_TEST_DATA_DIR) + "/" + name;
}

}  // namespace illtp::testing
