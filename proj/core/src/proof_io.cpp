#include "illtp/proof_io.hpp"

#include <nlohmann/json.hpp>

namespace illtp {
namespace {

using nlohmann::json;

std::string_view mode_name(GoalMode m) {
  switch (m) {
    case GoalMode::Neg:
      return "neg";
    case GoalMode::RightFocus:
      return "right";
    case GoalMode::LeftFocus:
      return "left";
  }
  return "?";
}

GoalMode parse_mode(const std::string& s) {
  if (s == "neg") return GoalMode::Neg;
  if (s == "right") return GoalMode::RightFocus;
  if (s == "left") return GoalMode::LeftFocus;
  throw FormatError("unknown goal mode '" + s + "'");
}

json formulas(const std::vector<Formula>& fs) {
  json out = json::array();
  for (Formula f : fs) out.push_back(to_string(f));
  return out;
}

std::vector<Formula> parse_formulas(const json& j) {
  std::vector<Formula> out;
  for (const auto& item : j) out.push_back(parse_formula(item.get<std::string>()));
  return out;
}

json state_json(const FocusedState& st) {
  json j{{"theta", formulas(st.theta)},
         {"gamma", formulas(st.gamma)},
         {"mode", mode_name(st.mode)}};
  if (st.focus) j["focus"] = to_string(*st.focus);
  if (st.delta) j["delta"] = to_string(*st.delta);
  return j;
}

FocusedState parse_state(const json& j) {
  FocusedState st;
  st.theta = parse_formulas(j.at("theta"));
  st.gamma = parse_formulas(j.at("gamma"));
  st.mode = parse_mode(j.at("mode").get<std::string>());
  if (j.contains("focus")) st.focus = parse_formula(j["focus"].get<std::string>());
  if (j.contains("delta")) st.delta = parse_formula(j["delta"].get<std::string>());
  st.canonicalize();
  return st;
}

json tree_json(const ProofTree& pt) {
  json premises = json::array();
  for (const auto& p : pt.premises) premises.push_back(tree_json(p));
  return json{{"rule", rule_name(pt.rule)},
              {"state", state_json(pt.conclusion)},
              {"premises", std::move(premises)}};
}

ProofTree parse_tree(const json& j) {
  ProofTree pt;
  auto name = j.at("rule").get<std::string>();
  auto rule = parse_rule(name);
  if (!rule) throw FormatError("unknown rule '" + name + "'");
  pt.rule = *rule;
  pt.conclusion = parse_state(j.at("state"));
  for (const auto& p : j.at("premises")) pt.premises.push_back(parse_tree(p));
  return pt;
}

}  // namespace

std::string write_proof_json(const ProofDocument& doc) {
  json sequent{{"antecedent", formulas(doc.sequent.antecedent)}};
  if (doc.sequent.succedent) sequent["succedent"] = to_string(*doc.sequent.succedent);
  json j{{"format", "illtp-proof"},
         {"version", 1},
         {"problem", doc.problem},
         {"sequent", std::move(sequent)},
         {"proof", tree_json(doc.proof)}};
  return j.dump(1) + "\n";
}

ProofDocument read_proof_json(std::string_view text) {
  try {
    json j = json::parse(text);
    if (j.value("format", "") != "illtp-proof") throw FormatError("not an illtp-proof document");
    ProofDocument doc;
    doc.problem = j.value("problem", "");
    const json& s = j.at("sequent");
    doc.sequent.antecedent = parse_formulas(s.at("antecedent"));
    if (s.contains("succedent")) doc.sequent.succedent = parse_formula(s["succedent"].get<std::string>());
    doc.proof = parse_tree(j.at("proof"));
    return doc;
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid proof file: ") + e.what());
  }
}

}  // namespace illtp
