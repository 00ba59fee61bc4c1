#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "illtp/formula.hpp"
#include "illtp/problem.hpp"

namespace illtp {

/// Place → token count. Places with no tokens are not stored.
using Marking = std::map<std::string, unsigned>;

std::size_t token_count(const Marking& m);
/// "{s1, s2, s2}"
std::string to_string(const Marking& m);

struct Transition {
  std::string id;
  Marking preset;
  Marking postset;
};

struct PetriNet {
  std::string name;
  std::vector<std::string> places;  // declaration order
  std::vector<Transition> transitions;
};

struct PnmlModel {
  PetriNet net;
  Marking initial;
};

class PetriError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class XmlError : public PetriError {
 public:
  using PetriError::PetriError;
};
class UnsupportedNet : public PetriError {
 public:
  using PetriError::PetriError;
};
class DanglingArc : public PetriError {
 public:
  using PetriError::PetriError;
};
class NotEnabled : public PetriError {
 public:
  using PetriError::PetriError;
};

/// Reads the first net of a P/T-net PNML document. Places, transitions and
/// arcs may sit directly in the net or in (nested) pages. Arc weights come
/// from <inscription><text>, defaulting to 1.
PnmlModel parse_pnml(std::string_view xml);

/// Checks that every transition only mentions declared places.
void validate(const PetriNet& net);

bool is_enabled(const Transition& t, const Marking& m);
/// Transitions enabled in `m`, in declaration order.
std::vector<Transition> enabled(const PetriNet& net, const Marking& m);
/// M ∖ •t ⊎ t•. Throws NotEnabled.
Marking fire(const Marking& m, const Transition& t);

struct SimulationResult {
  Marking marking;
  std::size_t steps_taken = 0;
  bool deadlocked = false;  // stopped early because nothing was enabled
};

/// Fires up to `steps` transitions, each chosen uniformly among the enabled
/// ones with a 64-bit Mersenne Twister seeded by `seed`.
SimulationResult simulate(const PetriNet& net, const Marking& m0, std::size_t steps,
                          std::uint64_t seed);

/// One run of the simulation above, recording the marking after each of the
/// given step counts (ascending). On a deadlock the run stops and the
/// remaining step counts are not reported.
std::vector<SimulationResult> simulate_snapshots(const PetriNet& net, const Marking& m0,
                                                 std::vector<std::size_t> steps,
                                                 std::uint64_t seed);

struct ReachProblem {
  PetriNet net;
  Marking from;
  Marking to;
};

enum class Reachability { Reachable, Unreachable, Unknown };
std::string_view to_string(Reachability r);

/// Breadth-first search of the marking graph. Unknown once more than
/// `state_budget` distinct markings have been discovered.
Reachability reachable_bfs(const ReachProblem& p, std::size_t state_budget);

/// Atom name for a place identifier: characters outside [a-zA-Z0-9_] become
/// '_', and a leading non-letter or a reserved word gets a "p_" prefix.
std::string place_atom(std::string_view place);

/// s1 ⊗ (s2 ⊗ ...) in place order with multiplicities; 1 when empty.
Formula marking_formula(const Marking& m);

/// Axiom: !(•t ⊸ t•) for every transition, ⊗-folded to the right in
/// declaration order (1 without transitions). Conjecture: M ⊸ M′.
Problem encode_reachability(const ReachProblem& p, std::string name = "petri");

}  // namespace illtp
