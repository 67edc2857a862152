// Rewriting to normal form, with a checkable proof trace.
//
// Normal forms are sums of simple terms:
//
//   S ::= mu.N | x |> N | (x | alpha.0) |> N | (x | y) |> N
//   N ::= 0 | S | S + N                      (alpha visible)
//
// Every term is provably equal to a normal form using the ground axioms
// alone: the merge expansion law P unfolds parallel compositions, the L and
// C laws push left and communication merges towards the leaves, and the
// choice laws clean up. Bare variables become x |> 0. The procedure below
// returns a proof whose left side is the input and whose right side is the
// normal form; the proof composes axiom instances only through the
// congruence and transitivity primitives, so the independent checker can
// replay every step.
//
// The alphabet of the axiom system must contain every action name of the
// term and at least one name: eliminating a tau-headed communication merge
// (tau.p | q = 0) goes through the synchronization law for a visible pair.

#pragma once

#include "ccslc/axioms.hpp"
#include "ccslc/proof.hpp"
#include "ccslc/term.hpp"

namespace ccslc {

// Whether t is literally a normal form (no rewriting performed).
bool is_normal_form(const TermPtr& t);

struct NormalizeResult {
  TermPtr normal_form;
  Pf proof;  // input = normal_form
};

NormalizeResult normalize(const TermPtr& t, const AxiomSystem& system);

}  // namespace ccslc
