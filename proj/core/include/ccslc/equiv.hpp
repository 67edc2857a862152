// Behavioural equivalences: strong, branching, and rooted branching
// bisimilarity, on closed terms and on configurations, plus the depth
// measures they preserve.
//
// Design notes.
//  * Closed-term transition systems are acyclic (every step consumes at
//    least one prefix, so the term size strictly decreases). EquivChecker
//    exploits this: relations are decided by memoized well-founded recursion
//    over pairs of canonical terms, so repeated queries share work. On
//    acyclic systems the recursive definition coincides with the greatest
//    fixpoint (references through a strict tau step or a proper derivative
//    decrease the combined size; the one self-reference in the stuttering
//    clause is granted, which is exactly the coinductive reading).
//  * Configurations can have self-loops (indexed variables), so they are
//    decided on an explored transition system by the naive greatest-fixpoint
//    sweep over the full relation matrix. This is the plain textbook
//    algorithm, deliberately simple; inputs here are small.
//  * Only the plain silent label tau is silent; every decorated label,
//    including "(x):a,tau" and "(x,y):tau", is treated as observable. Rooted
//    variants additionally require the first steps to match exactly (also
//    for tau) and continue branching-bisimilarly.
//  * `closed_instances_equivalent` decides whether all closed instances of
//    two configurations are equivalent without enumerating substitutions: a
//    single witness substitution maps every variable to a chain a.a...a.0
//    longer than the number of reachable configurations (so chains cannot be
//    confused with anything already present), with pairwise distinct lengths
//    (so variables cannot be confused with each other); that one instance
//    decides the quantified question.

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccslc/config.hpp"
#include "ccslc/semantics.hpp"
#include "ccslc/term.hpp"

namespace ccslc {

enum class Relation : std::uint8_t { Strong, Branching, RootedBranching };

std::string to_string(Relation r);
std::optional<Relation> relation_from_string(std::string_view s);  // strong|bb|rbb

// ── closed terms ──────────────────────────────────────────────────────────

class EquivChecker {
 public:
  bool strong(const TermPtr& p, const TermPtr& q);
  bool branching(const TermPtr& p, const TermPtr& q);
  bool rooted_branching(const TermPtr& p, const TermPtr& q);
  bool equivalent(Relation r, const TermPtr& p, const TermPtr& q);

  int depth(const TermPtr& p);   // longest number of visible actions on a run
  int rdepth(const TermPtr& p);  // 0 if no steps, else 1 + depth of a deepest derivative

  // Memoized canonical steps of a closed term.
  const std::vector<std::pair<Action, TermPtr>>& steps(const TermPtr& p);

 private:
  struct TermHash {
    std::size_t operator()(const TermPtr& t) const { return t->hash(); }
  };
  struct TermEq {
    bool operator()(const TermPtr& a, const TermPtr& b) const { return structural_equal(a, b); }
  };
  struct PairHash {
    std::size_t operator()(const std::pair<TermPtr, TermPtr>& p) const {
      return p.first->hash() * 1099511628211ull ^ p.second->hash();
    }
  };
  struct PairEq {
    bool operator()(const std::pair<TermPtr, TermPtr>& a,
                    const std::pair<TermPtr, TermPtr>& b) const {
      return structural_equal(a.first, b.first) && structural_equal(a.second, b.second);
    }
  };

  const std::vector<TermPtr>& eps(const TermPtr& p);  // tau-reachable terms, p included
  bool bb_transfer(const TermPtr& p, const TermPtr& q);
  bool strong_transfer(const TermPtr& p, const TermPtr& q);

  // The mu-successors of a step list, ordered cheapest first relative to the
  // target they should match (see the definition for why order matters).
  std::vector<TermPtr> candidates(const Action& mu, const TermPtr& target,
                                  const std::vector<std::pair<Action, TermPtr>>& qs);
  std::size_t stripped_hash(const TermPtr& t);

  std::unordered_map<TermPtr, std::vector<std::pair<Action, TermPtr>>, TermHash, TermEq> steps_;
  std::unordered_map<TermPtr, std::vector<TermPtr>, TermHash, TermEq> eps_;
  std::unordered_map<TermPtr, int, TermHash, TermEq> depth_;
  std::unordered_map<TermPtr, std::size_t, TermHash, TermEq> stripped_;
  std::unordered_map<std::pair<TermPtr, TermPtr>, bool, PairHash, PairEq> strong_, bb_;
};

// One-shot conveniences (a fresh checker each call).
bool equivalent(Relation r, const TermPtr& p, const TermPtr& q);
int depth(const TermPtr& p);
int rdepth(const TermPtr& p);

// Initial actions of a term's plain steps.
std::vector<Action> initials(const TermPtr& t);

// ── configurations ────────────────────────────────────────────────────────

bool equivalent(Relation r, const CanonConfig& c1, const CanonConfig& c2,
                const Alphabet& alphabet);

struct Decision {
  bool related = false;
  std::string witness;  // distinguishing first step, when not related
};

Decision decide_with_witness(Relation r, const CanonConfig& c1, const CanonConfig& c2,
                             const Alphabet& alphabet);

// Symmetric relation matrix (n*n, row-major) over the system's states.
// Relation::RootedBranching is not a state-wise relation; pass Strong or
// Branching here.
std::vector<char> relation_matrix(const Lts& lts, Relation r);

// ── derived notions ───────────────────────────────────────────────────────

// Whether some argument of some parallel composition, left merge or
// communication merge inside t is (as a configuration) rooted-branching
// equivalent to 0 — i.e. has no transitions at all.
bool has_zero_factor(const TermPtr& t);

// Decide "sigma(c1) ~ sigma(c2) for every closed substitution sigma" by one
// witness substitution of pairwise distinct distinguishing chains.
bool closed_instances_equivalent(Relation r, CanonConfig c1, CanonConfig c2,
                                 const Alphabet& alphabet);

}  // namespace ccslc
