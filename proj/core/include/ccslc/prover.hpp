// Constructive completeness: equational proofs for rooted branching
// bisimilarity, built by recursion over normal forms.
//
// The two entry points mirror the completeness argument:
//
//  * prove_prefixed_bb(t, u, mu): t and u branching bisimilar (as
//    configurations, so open terms are fine) yields a proof of
//    mu.t = mu.u. Both sides are first normalized; the recursion then
//    eliminates "absorbing" tau-summands — summands tau.N' with N'
//    branching bisimilar to the whole sum — with the branching law TB,
//    descending to absorbing-free forms whose summands can be matched
//    one-to-one (equal root action or equal merge head, branching bisimilar
//    bodies) and absorbed into each other by idempotence.
//  * prove_equal(t, u): t and u rooted branching bisimilar yields a proof
//    of t = u. Rootedness makes the top-level matching exact, so no TB is
//    needed at the outermost layer; the bodies recurse through
//    prove_prefixed_bb.
//
// Both throw ProveError (with a distinguishing observation) when the
// semantic precondition fails, so the prover never fabricates a proof. The
// axiom system must be the rooted branching system (or an extension) over
// an alphabet containing every action of the inputs and at least one name.

#pragma once

#include <stdexcept>
#include <string>

#include "ccslc/axioms.hpp"
#include "ccslc/proof.hpp"
#include "ccslc/term.hpp"

namespace ccslc {

struct ProveError : std::runtime_error {
  explicit ProveError(const std::string& what, std::string witness_ = {})
      : std::runtime_error(what), witness(std::move(witness_)) {}
  std::string witness;  // first distinguishing step, when the inputs differ
};

// Proof of mu.t = mu.u, provided t and u are branching bisimilar.
Pf prove_prefixed_bb(const TermPtr& t, const TermPtr& u, Action mu,
                     const AxiomSystem& system);

// Proof of t = u, provided t and u are rooted branching bisimilar.
Pf prove_equal(const TermPtr& t, const TermPtr& u, const AxiomSystem& system);

}  // namespace ccslc
