#include "illtp/latex.hpp"

#include <vector>

namespace illtp {
namespace {

bool transparent(Rule r) {
  return r == Rule::DL2 || r == Rule::DR || r == Rule::RL || r == Rule::RR;
}

bool in_segment(Rule r) { return is_negative_rule(r) || r == Rule::Sat; }

std::string_view label(Rule r) {
  switch (r) {
    case Rule::TensorL:
      return "\\otimes_L";
    case Rule::LimpR:
      return "\\multimap_R";
    case Rule::OneL:
      return "\\mathbf{1}_L";
    case Rule::BotR:
      return "\\bot_R";
    case Rule::TopR:
      return "\\top_R";
    case Rule::ZeroL:
      return "\\mathbf{0}_L";
    case Rule::BangL:
      return "!_L";
    case Rule::WithR:
      return "\\with_R";
    case Rule::PlusL:
      return "\\oplus_L";
    case Rule::TensorR:
      return "\\otimes_R";
    case Rule::LimpL:
      return "\\multimap_L";
    case Rule::PlusR1:
      return "\\oplus_{R_1}";
    case Rule::PlusR2:
      return "\\oplus_{R_2}";
    case Rule::WithL1:
      return "\\with_{L_1}";
    case Rule::WithL2:
      return "\\with_{L_2}";
    case Rule::OneR:
      return "\\mathbf{1}_R";
    case Rule::BotL:
      return "\\bot_L";
    case Rule::BangR:
      return "!_R";
    case Rule::IR:
      return "I_R";
    case Rule::DL1:
      return "D_{L1}";
    case Rule::DL2:
      return "D_{L2}";
    case Rule::DR:
      return "D_R";
    case Rule::RL:
      return "R_L";
    case Rule::RR:
      return "R_R";
    case Rule::Sat:
      return "\\mathit{sat}";
  }
  return "?";
}

std::string formula_list(const std::vector<Formula>& fs) {
  if (fs.empty()) return "\\cdot";
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += to_latex(fs[i]);
  }
  return out;
}

// Nodes where a negative segment starting at `n` hands over to another phase.
void segment_frontier(const ProofTree& n, std::vector<const ProofTree*>& out) {
  for (const auto& p : n.premises) {
    if (in_segment(p.rule))
      segment_frontier(p, out);
    else
      out.push_back(&p);
  }
}

void render(const ProofTree& start, std::string& out) {
  const ProofTree* n = &start;
  while (transparent(n->rule)) n = &n->premises.at(0);

  std::vector<const ProofTree*> premises;
  std::string_view rule = label(n->rule);
  if (in_segment(n->rule)) {
    bool lone_leaf = n->premises.empty();
    if (!lone_leaf) {
      rule = "\\star";
      segment_frontier(*n, premises);
    }
  } else {
    for (const auto& p : n->premises) premises.push_back(&p);
  }

  out += "\\infer[\\mbox{$";
  out += rule;
  out += "$}]{";
  out += render_latex_state(start.conclusion);
  out += "}{";
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (i) out += " & ";
    render(*premises[i], out);
  }
  out += "}";
}

}  // namespace

std::string render_latex_state(const FocusedState& st) {
  std::vector<Formula> gamma = st.gamma;
  std::optional<Formula> succedent = st.delta;
  if (st.mode == GoalMode::LeftFocus) gamma.push_back(*st.focus);
  if (st.mode == GoalMode::RightFocus) succedent = st.focus;
  std::string out = "\\textcolor{blue}{" + formula_list(st.theta) + "} ; " +
                    formula_list(gamma) + " \\vdash ";
  if (succedent) out += to_latex(*succedent);
  return out;
}

std::string render_latex_proof(const ProofTree& pt) {
  std::string out;
  render(pt, out);
  return out;
}

std::string latex_document(std::string_view body) {
  std::string out =
      "\\documentclass{article}\n"
      "\\usepackage{amssymb}\n"
      "\\usepackage{graphicx}\n"
      "\\usepackage{proof}\n"
      "\\usepackage{xcolor}\n"
      "\\providecommand{\\with}{\\mathbin{\\&}}\n"
      "\\providecommand{\\parr}{\\mathbin{\\rotatebox[origin=c]{180}{\\&}}}\n"
      "\\begin{document}\n"
      "\\[\n";
  out += body;
  out +=
      "\n\\]\n"
      "\\end{document}\n";
  return out;
}

}  // namespace illtp
