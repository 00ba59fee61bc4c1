#include "illtp/petri.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace illtp {
namespace {

using boost::property_tree::ptree;

std::string attr(const ptree& node, const char* name) {
  return node.get<std::string>(std::string("<xmlattr>.") + name, "");
}

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

unsigned parse_count(const ptree& node, const std::string& what) {
  std::string text = trim(node.get<std::string>("text", node.get<std::string>("value", "")));
  if (text.empty()) return 0;
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument(text);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw XmlError("bad " + what + " '" + text + "'");
  }
}

// Elements only found in symmetric or high-level nets.
constexpr const char* kHighLevelTags[] = {"declaration", "hlinitialMarking", "hlinscription",
                                          "condition", "type", "declarations"};

struct Arc {
  std::string source;
  std::string target;
  unsigned weight;
};

struct Collected {
  std::vector<std::string> places;
  Marking initial;
  std::vector<std::string> transitions;
  std::vector<Arc> arcs;
};

void collect(const ptree& parent, Collected& out) {
  for (const auto& [tag, child] : parent) {
    if (std::find(std::begin(kHighLevelTags), std::end(kHighLevelTags), tag) !=
        std::end(kHighLevelTags))
      throw UnsupportedNet("element <" + tag + "> belongs to a colored or high-level net");
    if (tag == "page") {
      collect(child, out);
    } else if (tag == "place") {
      std::string id = attr(child, "id");
      if (id.empty()) throw XmlError("place without id");
      for (const auto& [t, _] : child)
        if (t == "type" || t == "hlinitialMarking")
          throw UnsupportedNet("place '" + id + "' is typed");
      out.places.push_back(id);
      if (auto m = child.get_child_optional("initialMarking")) {
        unsigned n = parse_count(*m, "initial marking of '" + id + "'");
        if (n > 0) out.initial[id] += n;
      }
    } else if (tag == "transition") {
      std::string id = attr(child, "id");
      if (id.empty()) throw XmlError("transition without id");
      out.transitions.push_back(id);
    } else if (tag == "arc") {
      Arc a{attr(child, "source"), attr(child, "target"), 1};
      if (a.source.empty() || a.target.empty()) throw XmlError("arc without source or target");
      if (auto w = child.get_child_optional("inscription")) {
        a.weight = parse_count(*w, "arc weight");
        if (a.weight == 0) throw XmlError("arc weight must be positive");
      }
      out.arcs.push_back(std::move(a));
    }
  }
}

}  // namespace

std::size_t token_count(const Marking& m) {
  std::size_t n = 0;
  for (const auto& [_, k] : m) n += k;
  return n;
}

std::string to_string(const Marking& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [p, k] : m) {
    for (unsigned i = 0; i < k; ++i) {
      if (!first) out += ", ";
      out += p;
      first = false;
    }
  }
  return out + "}";
}

PnmlModel parse_pnml(std::string_view xml) {
  ptree doc;
  try {
    std::istringstream in{std::string(xml)};
    boost::property_tree::read_xml(in, doc);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw XmlError(e.what());
  }
  auto root = doc.get_child_optional("pnml");
  if (!root) throw XmlError("missing <pnml> root element");
  auto net_node = root->get_child_optional("net");
  if (!net_node) throw XmlError("no <net> element");

  std::string type = attr(*net_node, "type");
  if (!type.empty() && type.find("ptnet") == std::string::npos)
    throw UnsupportedNet("net type '" + type + "' is not a P/T net");

  Collected c;
  collect(*net_node, c);

  PnmlModel model;
  model.net.name = attr(*net_node, "id");
  model.net.places = c.places;
  model.initial = c.initial;

  std::set<std::string> places(c.places.begin(), c.places.end());
  if (places.size() != c.places.size()) throw XmlError("duplicate place id");
  std::unordered_map<std::string, std::size_t> index;
  for (const std::string& t : c.transitions) {
    if (places.contains(t) || index.contains(t)) throw XmlError("duplicate node id '" + t + "'");
    index.emplace(t, model.net.transitions.size());
    model.net.transitions.push_back(Transition{t, {}, {}});
  }
  for (const Arc& a : c.arcs) {
    bool src_place = places.contains(a.source);
    bool dst_place = places.contains(a.target);
    auto src_trans = index.find(a.source);
    auto dst_trans = index.find(a.target);
    if (!src_place && src_trans == index.end())
      throw DanglingArc("arc source '" + a.source + "' is not a declared node");
    if (!dst_place && dst_trans == index.end())
      throw DanglingArc("arc target '" + a.target + "' is not a declared node");
    if (src_place == dst_place)
      throw XmlError("arc " + a.source + " -> " + a.target + " must join a place and a transition");
    if (src_place)
      model.net.transitions[dst_trans->second].preset[a.source] += a.weight;
    else
      model.net.transitions[src_trans->second].postset[a.target] += a.weight;
  }
  return model;
}

void validate(const PetriNet& net) {
  std::set<std::string> places(net.places.begin(), net.places.end());
  for (const Transition& t : net.transitions) {
    for (const Marking* side : {&t.preset, &t.postset})
      for (const auto& [p, k] : *side)
        if (!places.contains(p) || k == 0)
          throw DanglingArc("transition '" + t.id + "' refers to unknown place '" + p + "'");
  }
}

bool is_enabled(const Transition& t, const Marking& m) {
  return std::all_of(t.preset.begin(), t.preset.end(), [&](const auto& entry) {
    auto it = m.find(entry.first);
    return it != m.end() && it->second >= entry.second;
  });
}

std::vector<Transition> enabled(const PetriNet& net, const Marking& m) {
  std::vector<Transition> out;
  for (const Transition& t : net.transitions)
    if (is_enabled(t, m)) out.push_back(t);
  return out;
}

Marking fire(const Marking& m, const Transition& t) {
  if (!is_enabled(t, m)) throw NotEnabled("transition '" + t.id + "' is not enabled");
  Marking out = m;
  for (const auto& [p, k] : t.preset)
    if ((out[p] -= k) == 0) out.erase(p);
  for (const auto& [p, k] : t.postset) out[p] += k;
  return out;
}

std::vector<SimulationResult> simulate_snapshots(const PetriNet& net, const Marking& m0,
                                                 std::vector<std::size_t> steps,
                                                 std::uint64_t seed) {
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  std::mt19937_64 gen(seed);
  std::vector<SimulationResult> out;
  SimulationResult cur{m0, 0, false};
  std::vector<std::size_t> choices;
  for (std::size_t target : steps) {
    while (cur.steps_taken < target) {
      choices.clear();
      for (std::size_t i = 0; i < net.transitions.size(); ++i)
        if (is_enabled(net.transitions[i], cur.marking)) choices.push_back(i);
      if (choices.empty()) {
        cur.deadlocked = true;
        out.push_back(cur);
        return out;
      }
      cur.marking = fire(cur.marking, net.transitions[choices[gen() % choices.size()]]);
      ++cur.steps_taken;
    }
    out.push_back(cur);
  }
  return out;
}

SimulationResult simulate(const PetriNet& net, const Marking& m0, std::size_t steps,
                          std::uint64_t seed) {
  return simulate_snapshots(net, m0, {steps}, seed).back();
}

std::string_view to_string(Reachability r) {
  switch (r) {
    case Reachability::Reachable:
      return "reachable";
    case Reachability::Unreachable:
      return "unreachable";
    case Reachability::Unknown:
      return "unknown";
  }
  return "?";
}

Reachability reachable_bfs(const ReachProblem& p, std::size_t state_budget) {
  if (p.from == p.to) return Reachability::Reachable;
  std::set<Marking> seen{p.from};
  std::deque<Marking> queue{p.from};
  while (!queue.empty()) {
    Marking m = std::move(queue.front());
    queue.pop_front();
    for (const Transition& t : p.net.transitions) {
      if (!is_enabled(t, m)) continue;
      Marking next = fire(m, t);
      if (next == p.to) return Reachability::Reachable;
      if (!seen.insert(next).second) continue;
      if (seen.size() > state_budget) return Reachability::Unknown;
      queue.push_back(std::move(next));
    }
  }
  return Reachability::Unreachable;
}

std::string place_atom(std::string_view place) {
  std::string out;
  for (char c : place) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    out += ok ? c : '_';
  }
  if (out.empty() || !is_valid_atom_name(out)) out = "p_" + out;
  return out;
}

Formula marking_formula(const Marking& m) {
  std::vector<Formula> atoms;
  for (const auto& [p, k] : m)
    for (unsigned i = 0; i < k; ++i) atoms.push_back(Formula::atom(place_atom(p)));
  if (atoms.empty()) return Formula::one();
  Formula acc = atoms.back();
  for (std::size_t i = atoms.size() - 1; i-- > 0;) acc = Formula::tensor(atoms[i], acc);
  return acc;
}

Problem encode_reachability(const ReachProblem& p, std::string name) {
  std::map<std::string, std::string> atoms;
  for (const std::string& place : p.net.places) {
    auto [it, fresh] = atoms.emplace(place_atom(place), place);
    if (!fresh && it->second != place)
      throw PetriError("places '" + it->second + "' and '" + place + "' map to the same atom");
  }

  std::vector<Formula> rules;
  for (const Transition& t : p.net.transitions)
    rules.push_back(Formula::bang(Formula::limp(marking_formula(t.preset), marking_formula(t.postset))));
  Formula axiom = Formula::one();
  if (!rules.empty()) {
    axiom = rules.back();
    for (std::size_t i = rules.size() - 1; i-- > 0;) axiom = Formula::tensor(rules[i], axiom);
  }

  Problem out{std::move(name),
              {{"net", axiom}},
              {"reach", Formula::limp(marking_formula(p.from), marking_formula(p.to))},
              {}};
  if (!p.net.name.empty()) out.header.set("Net", p.net.name);
  out.header.set("From", to_string(p.from));
  out.header.set("To", to_string(p.to));
  return out;
}

}  // namespace illtp
