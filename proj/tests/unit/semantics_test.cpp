// Operational semantics: closed-term steps, configuration transitions,
// transition-system exploration, and the push-through of configuration
// transitions to closed instances. All expected step sets and state/edge
// counts are frozen outputs of the independent reference implementation in
// tests/oracle/.
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ccslc/equiv.hpp"
#include "ccslc/family.hpp"
#include "ccslc/parser.hpp"
#include "ccslc/semantics.hpp"
#include "doctest.h"

using namespace ccslc;

namespace {

// "act -> target" lines, sorted, for easy literal comparison.
std::vector<std::string> step_lines(const char* term) {
  std::vector<std::string> out;
  for (const auto& [act, tgt] : step_term(parse_term(term)))
    out.push_back(act.str() + " -> " + pretty(tgt));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ── closed-term steps ───────────────────────────────────────────────────────

TEST_CASE("parallel composition interleaves and synchronizes") {
  CHECK(step_lines("a.0 || ~a.0") ==
        std::vector<std::string>{"a -> 0 || ~a.0", "tau -> 0 || 0",
                                 "~a -> 0 || a.0"});
}

TEST_CASE("communication merge only synchronizes") {
  CHECK(step_lines("a.0 | b.0").empty());
  CHECK(step_lines("a.0 | ~a.0") == std::vector<std::string>{"tau -> 0 || 0"});
  CHECK(step_lines("a.0 | a.0").empty());
  CHECK(step_lines("tau.0 | ~a.0").empty());  // tau never synchronizes
}

TEST_CASE("left merge fires only its left argument first") {
  CHECK(step_lines("a.0 |> b.0") == std::vector<std::string>{"a -> 0 || b.0"});
  CHECK(step_lines("(a.0 + b.0) |> tau.0") ==
        std::vector<std::string>{"a -> 0 || tau.0", "b -> 0 || tau.0"});
  CHECK(step_lines("0 |> a.0").empty());
}

TEST_CASE("choice propagates, variables have no plain steps") {
  CHECK(step_lines("a.0 + tau.b.0") ==
        std::vector<std::string>{"a -> 0", "tau -> b.0"});
  CHECK(step_lines("x").empty());
  CHECK(step_lines("x + a.0") == std::vector<std::string>{"a -> 0"});
}

TEST_CASE("step targets are canonical and deduplicated") {
  auto steps = step_term(parse_term("a.0 + a.0"));
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].second->is_nil());
}

// ── configuration transitions ───────────────────────────────────────────────

TEST_CASE("a variable left of a left merge triggers every action") {
  CanonConfig c = config_of_term(parse_term("x |> b.0"));
  auto trs = step_config(c, Alphabet{"a", "b"});
  REQUIRE(trs.size() == 5);  // tau, a, ~a, b, ~b
  std::set<std::string> labels, targets;
  for (const auto& tr : trs) {
    CHECK(tr.label.kind == TransitionLabel::Kind::TrigPlain);
    CHECK(tr.label.x == "x");
    labels.insert(tr.label.str());
    targets.insert(pretty(tr.target));
  }
  CHECK(labels == std::set<std::string>{"(x):tau", "(x):a", "(x):~a", "(x):b",
                                        "(x):~b"});
  // each target is x@mu || b.0
  CHECK(targets == std::set<std::string>{"x@tau || b.0", "x@a || b.0",
                                         "x@~a || b.0", "x@b || b.0",
                                         "x@~b || b.0"});
}

TEST_CASE("variables synchronize with the context and with each other") {
  CanonConfig c = config_of_term(parse_term("x || ~a.0"));
  bool saw_synch = false;
  for (const auto& tr : step_config(c, Alphabet{"a"})) {
    if (tr.label.kind == TransitionLabel::Kind::TrigSynch) {
      saw_synch = true;
      CHECK(tr.label.x == "x");
      CHECK(tr.label.act == Action::name("a"));  // x contributes a
      CHECK(pretty(tr.target) == "x@a || 0");
    }
  }
  CHECK(saw_synch);

  CanonConfig two = config_of_term(parse_term("x || y"));
  bool saw_comm = false;
  for (const auto& tr : step_config(two, Alphabet{"a"})) {
    if (tr.label.kind == TransitionLabel::Kind::Comm) {
      saw_comm = true;
      CHECK(tr.label.str() == "(x,y):tau");
    }
  }
  CHECK(saw_comm);
}

TEST_CASE("indexed variables have observable self-loops") {
  CanonConfig c = canonize(parse_config("x@a || 0"));
  auto trs = step_config(c, Alphabet{"a"});
  REQUIRE(trs.size() == 1);
  CHECK(trs[0].label.kind == TransitionLabel::Kind::IVar);
  CHECK(trs[0].label.str() == "x@a");
  CHECK(trs[0].target == c);
  CHECK_FALSE(trs[0].label.is_silent());
}

TEST_CASE("only the plain silent action is silent") {
  CHECK(TransitionLabel::action(Action::tau()).is_silent());
  CHECK_FALSE(TransitionLabel::action(Action::name("a")).is_silent());
  CHECK_FALSE(TransitionLabel::trig_plain("x", Action::tau()).is_silent());
  CHECK_FALSE(TransitionLabel::comm("x", "y").is_silent());
}

// ── transition systems ──────────────────────────────────────────────────────

TEST_CASE("LTS exploration matches frozen state and edge counts") {
  Alphabet ab{"a"};
  struct Row {
    const char* term;
    int states, edges;
  };
  for (const Row& row : {Row{"a.0 || ~a.0", 4, 5}}) {
    Lts lts = build_lts(parse_term(row.term), ab);
    CHECK(lts.num_states() == row.states);
    CHECK(lts.num_edges() == row.edges);
  }
  CHECK(build_lts(build_p_n(2), ab).num_states() == 4);
  CHECK(build_lts(build_p_n(2), ab).num_edges() == 4);
  CHECK(build_lts(build_p_n(3), ab).num_states() == 6);
  CHECK(build_lts(build_p_n(3), ab).num_edges() == 9);
  TermPtr lhs2 = Term::parallel(parse_term("a.0"), build_p_n(2));
  CHECK(build_lts(lhs2, ab).num_states() == 7);
  CHECK(build_lts(lhs2, ab).num_edges() == 10);
  TermPtr lhs3 = Term::parallel(parse_term("a.0"), build_p_n(3));
  CHECK(build_lts(lhs3, ab).num_states() == 11);
  CHECK(build_lts(lhs3, ab).num_edges() == 22);
}

TEST_CASE("the state cap is enforced") {
  CHECK_THROWS_AS(build_lts(parse_term("a.0 || a.0 || a.0"), Alphabet{"a"}, 3),
                  std::runtime_error);
}

TEST_CASE("epsilon closure follows plain tau steps only") {
  Lts lts = build_lts(parse_term("tau.tau.a.0"), Alphabet{"a"});
  CHECK(epsilon_closure(lts, lts.root).size() == 3);  // t, tau.a.0, a.0

  // the root of a bare variable's configuration closes to itself: (x):tau
  // is a trigger label, not a silent step
  Lts open = build_lts(config_of_term(parse_term("x")), Alphabet{"a"});
  CHECK(epsilon_closure(open, open.root) == std::vector<int>{open.root});
}

TEST_CASE("build_lts_pair shares the state space") {
  LtsPair pair = build_lts_pair(config_of_term(parse_term("a.0 || ~a.0")),
                                config_of_term(parse_term("a.~a.0")),
                                Alphabet{"a"});
  CHECK(pair.root1 != pair.root2);
  CHECK(pair.lts.num_states() == 7);  // 4 + 3, no shared states besides none
}

// ── instantiating configuration transitions ─────────────────────────────────

TEST_CASE("derived instance steps match direct stepping exactly") {
  struct Case {
    const char* term;
    const char* image;  // for x
  };
  Alphabet ab{"a", "b"};
  for (const Case& c : {Case{"x |> a.0", "a.0 + tau.b.0"},
                        Case{"x || ~a.0", "a.0"},
                        Case{"x | a.0", "~a.b.0"},
                        Case{"x + b.0", "tau.0"},
                        Case{"x || x", "a.0 + ~a.0"}}) {
    TermPtr t = parse_term(c.term);
    Substitution sigma;
    sigma.plain["x"] = parse_term(c.image);
    TermPtr closed = apply_substitution(t, sigma);

    std::set<std::string> direct, derived;
    for (const auto& [act, tgt] : step_term(closed))
      direct.insert(act.str() + " -> " + pretty(tgt));
    for (const auto& e : derive_instance_steps(t, sigma, ab))
      derived.insert(e.action.str() + " -> " + pretty(e.target));
    CHECK(direct == derived);
  }
}

TEST_CASE("explain_transition covers each closed step with a mechanism") {
  Alphabet ab{"a"};
  TermPtr t = parse_term("x || ~a.0");
  Substitution sigma;
  sigma.plain["x"] = parse_term("a.0");
  TermPtr closed = apply_substitution(t, sigma);

  std::set<ExplainMechanism> seen;
  for (const auto& [act, tgt] : step_term(closed)) {
    auto ex = explain_transition(t, sigma, act, tgt, ab);
    REQUIRE(!ex.empty());
    for (const auto& e : ex) {
      CHECK(e.action == act);
      CHECK(structural_equal(e.target, tgt));
      seen.insert(e.mechanism);
    }
  }
  // the a/~a interleavings come from TermStep + VarTrigger, the tau from a
  // variable-context synchronization
  CHECK(seen.count(ExplainMechanism::TermStep) == 1);
  CHECK(seen.count(ExplainMechanism::VarTrigger) == 1);
  CHECK(seen.count(ExplainMechanism::SynchTrigger) == 1);
}

TEST_CASE("pair triggers explain cross-variable synchronization") {
  Alphabet ab{"a"};
  TermPtr t = parse_term("x || y");
  Substitution sigma;
  sigma.plain["x"] = parse_term("a.0");
  sigma.plain["y"] = parse_term("~a.0");
  bool saw_pair = false;
  for (const auto& e : derive_instance_steps(t, sigma, ab))
    if (e.mechanism == ExplainMechanism::PairTrigger) {
      saw_pair = true;
      CHECK(e.action == Action::tau());
      CHECK(e.via.kind == TransitionLabel::Kind::Comm);
    }
  CHECK(saw_pair);
}

TEST_CASE("explanations carry the indexed extension of the substitution") {
  Alphabet ab{"a"};
  TermPtr t = parse_term("x |> 0");
  Substitution sigma;
  sigma.plain["x"] = parse_term("a.b.0");
  auto ex = derive_instance_steps(t, sigma, Alphabet{"a", "b"});
  REQUIRE(!ex.empty());
  for (const auto& e : ex) {
    CHECK(e.mechanism == ExplainMechanism::VarTrigger);
    CHECK(e.extension.indexed.size() == 1);  // x@a := derivative of sigma(x)
  }
}
