// Operational semantics: closed-term steps, configuration steps, labelled
// transition systems, and the push-through of configuration transitions to
// transitions of closed instances.
//
// Design notes.
//  * Closed (and open) terms step by the usual rules: prefixes fire, choice
//    propagates, parallel interleaves and synchronizes complementary visible
//    actions into tau, left merge fires only its left argument's first step
//    and then continues in parallel, communication merge only synchronizes.
//  * Configurations additionally step on behalf of their free variables:
//      - a bare variable x can start any action mu, leaving the indexed
//        variable x@mu (label "(x):mu");
//      - a variable can synchronize with a complementary step of its context
//        (label "(x):alpha,tau" — x contributes alpha, the instance steps tau);
//      - two variables can synchronize with each other (label "(x,y):tau");
//      - an indexed variable x@mu has a self-loop labelled "x@mu".
//    Only the plain silent action `tau` is ever treated as silent; the
//    decorated labels are observable as such.
//  * Configuration transitions carry, internally, which action the first
//    variable of a pair label performed; that orientation is needed to map a
//    configuration transition to the closed transitions of its instances.
//  * Targets are always canonical (terms modulo AC of + and ||,
//    configurations as CanonConfig), and transition lists are sorted, so all
//    downstream computations are deterministic.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccslc/action.hpp"
#include "ccslc/config.hpp"
#include "ccslc/term.hpp"

namespace ccslc {

// ── labels ────────────────────────────────────────────────────────────────

struct TransitionLabel {
  enum class Kind : std::uint8_t {
    Act,        // mu                      rendered  a, ~a, tau
    TrigPlain,  // (x):mu                  variable x starts mu
    TrigSynch,  // (x):alpha,tau           x contributes alpha to a synch
    Comm,       // (x,y):tau               x and y synchronize
    IVar,       // x@mu                    indexed-variable self-loop
  };

  Kind kind = Kind::Act;
  Action act;         // Act/TrigPlain: mu; TrigSynch: alpha; IVar: mu
  std::string x, y;   // variable(s); for Comm, sorted so the label is canonical

  static TransitionLabel action(Action mu);
  static TransitionLabel trig_plain(std::string x, Action mu);
  static TransitionLabel trig_synch(std::string x, Action alpha);
  static TransitionLabel comm(std::string x, std::string y);
  static TransitionLabel ivar(std::string x, Action mu);

  bool is_silent() const { return kind == Kind::Act && act.is_tau(); }

  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const TransitionLabel& a, const TransitionLabel& b);
  friend bool operator<(const TransitionLabel& a, const TransitionLabel& b);
};

// ── steps ─────────────────────────────────────────────────────────────────

// One step of a term by the plain rules (open terms allowed: their variables
// simply have no plain steps). Targets canonical; sorted and deduplicated.
std::vector<std::pair<Action, TermPtr>> step_term(const TermPtr& t);

// A configuration transition. `first_var_act` records, for Comm labels, the
// action performed by the first variable of the (sorted) label; it is not
// part of the transition's identity in the transition system.
struct ConfigTransition {
  TransitionLabel label;
  CanonConfig target;
  Action first_var_act;
};

// All configuration transitions over the given alphabet's actions.
std::vector<ConfigTransition> step_config(const CanonConfig& c, const Alphabet& alphabet);

// ── transition systems ────────────────────────────────────────────────────

struct LtsTransition {
  TransitionLabel label;
  int target = -1;
};

struct Lts {
  std::vector<CanonConfig> states;
  std::vector<std::vector<LtsTransition>> out;  // indexed by state, sorted
  int root = 0;

  int num_states() const { return static_cast<int>(states.size()); }
  int num_edges() const;
};

inline constexpr std::size_t kDefaultMaxStates = 1u << 20;

// Breadth-first exploration from the root; throws std::runtime_error when
// the state cap is exceeded.
Lts build_lts(const CanonConfig& root, const Alphabet& alphabet,
              std::size_t max_states = kDefaultMaxStates);
Lts build_lts(const TermPtr& term, const Alphabet& alphabet,
              std::size_t max_states = kDefaultMaxStates);

// One transition system exploring both configurations (shared state space).
struct LtsPair {
  Lts lts;
  int root1 = 0, root2 = 0;
};
LtsPair build_lts_pair(const CanonConfig& c1, const CanonConfig& c2,
                       const Alphabet& alphabet,
                       std::size_t max_states = kDefaultMaxStates);

// States reachable from s via zero or more plain tau steps (sorted).
std::vector<int> epsilon_closure(const Lts& lts, int s);

// ── instantiating configuration transitions ───────────────────────────────

enum class ExplainMechanism : std::uint8_t {
  TermStep,      // a step of the term itself, pushed through sigma
  VarTrigger,    // a (x):mu transition plus a mu-step of sigma(x)
  SynchTrigger,  // a (x):alpha,tau transition plus an alpha-step of sigma(x)
  PairTrigger,   // a (x,y):tau transition plus complementary steps
};

std::string to_string(ExplainMechanism m);

struct Explanation {
  ExplainMechanism mechanism;
  TransitionLabel via;     // the configuration-level label that was used
  Substitution extension;  // added indexed bindings (empty for TermStep)
  Action action;           // action of the resulting closed step
  TermPtr target;          // canonical closed target
};

// All transitions of sigma(t) derived from t's configuration transitions by
// the four mechanisms. Precondition: sigma closes t (every free variable is
// mapped to a closed term).
std::vector<Explanation> derive_instance_steps(const TermPtr& t, const Substitution& sigma,
                                               const Alphabet& alphabet);

// The explanations that produce precisely the step  sigma(t) --mu--> target.
std::vector<Explanation> explain_transition(const TermPtr& t, const Substitution& sigma,
                                            const Action& mu, const TermPtr& target,
                                            const Alphabet& alphabet);

}  // namespace ccslc
