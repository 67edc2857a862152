// The witness family behind the negative result: no finite sound extension
// of the ground axioms is complete for rooted branching bisimilarity of
// open terms, because the valid equations
//
//   e_n :  a.0 || p_n  =  a.p_n + sum_{i=2..n} a.(a.0 || a^{<=i})
//
// where a^{<=i} = sum_{j=1..i} a^j and p_n = sum_{i=2..n} a.a^{<=i},
// separate the sides by a property no bounded derivation preserves: having
// a summand rooted-branching equivalent to a.0 || p_n. The experiment
// builds the family at a given n, verifies soundness and the depth
// bookkeeping, and reports which side has the separating summand.

#pragma once

#include <string>

#include "ccslc/term.hpp"

namespace ccslc {

TermPtr build_a_leq(int i, const std::string& name = "a");  // sum_{j=1..i} a^j
TermPtr build_p_n(int n, const std::string& name = "a");    // sum_{i=2..n} a.a^{<=i}
Equation build_e_n(int n, const std::string& name = "a");

// Whether some summand of t is rooted-branching equivalent to target.
bool has_summand_equivalent(const TermPtr& t, const TermPtr& target);

struct FamilyReport {
  int n = 0;
  TermPtr lhs, rhs;  // the two sides of e_n
  bool e_n_rbb = false;
  int depth_lhs = 0;      // expected n + 2
  int rdepth_p_n = 0;     // expected n + 1
  int depth_a_leq_n = 0;  // expected n
  bool formulas_hold = false;
  bool lhs_has_property = false;  // expected true
  bool rhs_has_property = false;  // expected false
  int rhs_summands = 0;           // expected n
};

FamilyReport run_family_experiment(int n, const std::string& name = "a");

std::string to_json(const FamilyReport& report);

}  // namespace ccslc
