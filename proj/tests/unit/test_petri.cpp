#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "illtp/focused.hpp"
#include "illtp/petri.hpp"
#include "oracles.hpp"

using namespace illtp;
using illtp::testing::data_path;
using illtp::testing::f;
using illtp::testing::slurp;

namespace {

PetriNet chain() {
  return PetriNet{"chain", {"s1", "s2", "s3"}, {{"t1", {{"s1", 1}}, {{"s2", 1}}}, {"t2", {{"s2", 1}}, {{"s3", 1}}}}};
}

SearchLimits petri_limits() {
  SearchLimits l;
  l.decide_bound = 16;
  l.node_budget = 200'000;
  l.timeout = std::chrono::milliseconds(0);
  return l;
}

TEST(Pnml, MinimalNet) {
  PnmlModel m = parse_pnml(slurp(data_path("chain.pnml")));
  EXPECT_EQ(m.net.name, "chain");
  EXPECT_EQ(m.net.places, (std::vector<std::string>{"s1", "s2", "s3"}));
  ASSERT_EQ(m.net.transitions.size(), 2u);
  EXPECT_EQ(m.net.transitions[0].preset, (Marking{{"s1", 1}}));
  EXPECT_EQ(m.net.transitions[0].postset, (Marking{{"s2", 1}}));
  EXPECT_EQ(m.initial, (Marking{{"s1", 1}}));
  EXPECT_NO_THROW(validate(m.net));
}

TEST(Pnml, ArcWeight) {
  PnmlModel m = parse_pnml(slurp(data_path("weighted.pnml")));
  ASSERT_EQ(m.net.transitions.size(), 1u);
  EXPECT_EQ(m.net.transitions[0].postset, (Marking{{"s2", 2}}));
  Marking after = fire(m.initial, m.net.transitions[0]);
  EXPECT_EQ(token_count(after), 2u);
  EXPECT_EQ(after, (Marking{{"s2", 2}}));
}

TEST(Pnml, NestedPages) {
  PnmlModel m = parse_pnml(slurp(data_path("cyclic.pnml")));
  EXPECT_EQ(m.net.places.size(), 5u);
  EXPECT_EQ(m.net.transitions.size(), 4u);
  EXPECT_EQ(token_count(m.initial), 3u);
}

TEST(Pnml, Errors) {
  EXPECT_THROW(parse_pnml(slurp(data_path("colored.pnml"))), UnsupportedNet);
  EXPECT_THROW(parse_pnml(slurp(data_path("dangling.pnml"))), DanglingArc);
  EXPECT_THROW(parse_pnml("<pnml><net id='x'><place id='a'></net></pnml>"), XmlError);
  EXPECT_THROW(parse_pnml("<other/>"), XmlError);
  EXPECT_THROW(parse_pnml("<pnml><net id='n'><place id='a'/><place id='b'/>"
                          "<arc id='x' source='a' target='b'/></net></pnml>"),
               XmlError);
}

TEST(Enabled, Examples) {
  Transition t{"t", {{"s1", 1}}, {{"s2", 1}}};
  PetriNet net{"", {"s1", "s2"}, {t}};
  EXPECT_EQ(enabled(net, {{"s1", 1}}).size(), 1u);
  PetriNet twice{"", {"s1", "s2"}, {{"t", {{"s1", 2}}, {}}}};
  EXPECT_TRUE(enabled(twice, {{"s1", 1}}).empty());
  EXPECT_TRUE(enabled(net, {}).empty());
}

TEST(Fire, Examples) {
  Transition t{"t", {{"s1", 1}}, {{"s2", 1}}};
  EXPECT_EQ(fire({{"s1", 1}}, t), (Marking{{"s2", 1}}));
  EXPECT_EQ(fire({{"s1", 1}, {"s3", 1}}, t), (Marking{{"s2", 1}, {"s3", 1}}));
  Transition w{"w", {{"s1", 1}}, {{"s2", 2}}};
  EXPECT_EQ(token_count(fire({{"s1", 1}}, w)), 2u);
  EXPECT_THROW(fire({}, t), NotEnabled);
}

TEST(Simulate, Examples) {
  PetriNet net = chain();
  Marking m0{{"s1", 1}};
  EXPECT_EQ(simulate(net, m0, 0, 1).marking, m0);
  SimulationResult r = simulate(net, m0, 2, 1);
  EXPECT_EQ(r.marking, (Marking{{"s3", 1}}));
  EXPECT_FALSE(r.deadlocked);
  SimulationResult d = simulate(net, m0, 5, 1);
  EXPECT_TRUE(d.deadlocked);
  EXPECT_EQ(d.steps_taken, 2u);
  EXPECT_EQ(d.marking, (Marking{{"s3", 1}}));
}

TEST(Simulate, Reproducible) {
  PnmlModel m = parse_pnml(slurp(data_path("cyclic.pnml")));
  for (std::uint64_t seed : {0u, 7u, 123u}) {
    EXPECT_EQ(simulate(m.net, m.initial, 100, seed).marking,
              simulate(m.net, m.initial, 100, seed).marking);
    auto snaps = simulate_snapshots(m.net, m.initial, {1, 5, 10}, seed);
    ASSERT_EQ(snaps.size(), 3u);
    EXPECT_EQ(snaps[2].marking, simulate(m.net, m.initial, 10, seed).marking);
  }
}

TEST(Simulate, SnapshotsStopAtDeadlock) {
  auto snaps = simulate_snapshots(chain(), {{"s1", 1}}, {1, 5, 10}, 3);
  ASSERT_EQ(snaps.size(), 2u);
  EXPECT_EQ(snaps[0].steps_taken, 1u);
  EXPECT_TRUE(snaps[1].deadlocked);
  EXPECT_EQ(snaps[1].steps_taken, 2u);
}

TEST(Bfs, Examples) {
  EXPECT_EQ(reachable_bfs({chain(), {{"s1", 1}}, {{"s3", 1}}}, 100), Reachability::Reachable);
  EXPECT_EQ(reachable_bfs({chain(), {{"s3", 1}}, {{"s1", 1}}}, 100), Reachability::Unreachable);
  PetriNet producer{"", {"s"}, {{"grow", {{"s", 1}}, {{"s", 2}}}}};
  EXPECT_EQ(reachable_bfs({producer, {{"s", 1}}, {}}, 50), Reachability::Unknown);
}

TEST(Encode, Examples) {
  EXPECT_EQ(marking_formula({}), Formula::one());
  EXPECT_EQ(marking_formula({{"s1", 1}, {"s2", 2}}), f("s1 * (s2 * s2)"));
  PetriNet w{"", {"s1", "s2"}, {{"t", {{"s1", 1}}, {{"s2", 2}}}}};
  Problem pw = encode_reachability({w, {{"s1", 1}}, {{"s2", 2}}});
  ASSERT_EQ(pw.axioms.size(), 1u);
  EXPECT_EQ(pw.axioms[0].formula, f("!(s1 -o s2 * s2)"));

  Problem p = encode_reachability({chain(), {{"s1", 1}}, {{"s2", 1}}});
  EXPECT_EQ(p.axioms[0].formula, f("!(s1 -o s2) * !(s2 -o s3)"));
  EXPECT_EQ(p.conjecture.formula, f("s1 -o s2"));
  ProveResult r = prove(to_sequent(p), petri_limits());
  EXPECT_EQ(r.verdict, Verdict::Provable);
  EXPECT_TRUE(check_proof(*r.proof, to_sequent(p)));
  EXPECT_EQ(reachable_bfs({chain(), {{"s1", 1}}, {{"s2", 1}}}, 100), Reachability::Reachable);
}

TEST(Encode, ExactReachabilityNotCoverability) {
  // s3 alone is reachable, s3 with a leftover s1 token is not.
  ReachProblem p{chain(), {{"s1", 2}}, {{"s1", 1}, {"s3", 1}}};
  EXPECT_EQ(reachable_bfs(p, 100), Reachability::Reachable);
  EXPECT_EQ(prove(to_sequent(encode_reachability(p)), petri_limits()).verdict, Verdict::Provable);
  ReachProblem q{chain(), {{"s1", 2}}, {{"s3", 1}}};
  EXPECT_EQ(reachable_bfs(q, 100), Reachability::Unreachable);
  EXPECT_NE(prove(to_sequent(encode_reachability(q)), petri_limits()).verdict, Verdict::Provable);
}

TEST(Encode, PlaceNamesBecomeAtoms) {
  EXPECT_EQ(place_atom("idle-1"), "idle_1");
  EXPECT_EQ(place_atom("3x"), "p_3x");
  EXPECT_EQ(place_atom("top"), "p_top");
  PetriNet clash{"", {"a-b", "a_b"}, {}};
  EXPECT_THROW(encode_reachability({clash, {}, {}}), PetriError);
  PnmlModel m = parse_pnml(slurp(data_path("cyclic.pnml")));
  Problem p = encode_reachability({m.net, m.initial, simulate(m.net, m.initial, 4, 1).marking});
  EXPECT_NO_THROW(parse_problem(serialize_problem(p)));
}

TEST(Properties, TokenConservation) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    PnmlModel m = illtp::testing::random_net(rng);
    Marking cur = m.initial;
    for (int step = 0; step < 10; ++step) {
      auto ts = enabled(m.net, cur);
      if (ts.empty()) break;
      const Transition& t = ts[rng() % ts.size()];
      Marking next = fire(cur, t);
      EXPECT_EQ(token_count(next) + token_count(t.preset), token_count(cur) + token_count(t.postset));
      cur = next;
    }
  }
}

TEST(Properties, SimulatedMarkingsAreProvableAndReachable) {
  std::mt19937_64 rng(20);
  int definitive = 0;
  for (int i = 0; i < 30; ++i) {
    PnmlModel m = illtp::testing::random_net(rng);
    for (const SimulationResult& snap : simulate_snapshots(m.net, m.initial, {1, 5}, i)) {
      ReachProblem p{m.net, m.initial, snap.marking};
      EXPECT_NE(reachable_bfs(p, 100'000), Reachability::Unreachable);
      ProveResult r = prove(to_sequent(encode_reachability(p)), petri_limits());
      EXPECT_EQ(r.verdict, Verdict::Provable) << to_string(snap.marking);
      if (r.proof) {
        ++definitive;
        EXPECT_TRUE(check_proof(*r.proof, to_sequent(encode_reachability(p))));
      }
    }
  }
  EXPECT_GT(definitive, 30);
}

TEST(Properties, ProverAgreesWithBfsOnRandomTargets) {
  std::mt19937_64 rng(30);
  int compared = 0;
  for (int i = 0; i < 40; ++i) {
    PnmlModel m = illtp::testing::random_net(rng);
    Marking target;
    for (int k = static_cast<int>(rng() % 3); k >= 0; --k)
      ++target[m.net.places[rng() % m.net.places.size()]];
    ReachProblem p{m.net, m.initial, target};
    Reachability bfs = reachable_bfs(p, 100'000);
    ProveResult r = prove(to_sequent(encode_reachability(p)), petri_limits());
    if (bfs == Reachability::Unknown || r.verdict == Verdict::Unknown) continue;
    ++compared;
    EXPECT_EQ(r.provable(), bfs == Reachability::Reachable)
        << to_string(m.initial) << " -> " << to_string(target);
  }
  EXPECT_GT(compared, 0);
}

}  // namespace
