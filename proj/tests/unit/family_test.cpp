// Tests for the witness family: exact shapes at small n, the frozen depth
// bookkeeping, the separating summand property, and the JSON report.

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ccslc/equiv.hpp"
#include "ccslc/family.hpp"
#include "ccslc/parser.hpp"
#include "ccslc/term.hpp"
#include "doctest.h"

using namespace ccslc;

TEST_CASE("the building blocks have their textbook shapes") {
  CHECK(ac_equal(build_a_leq(1), parse_term("a.0")));
  CHECK(ac_equal(build_a_leq(2), parse_term("a.0 + a.a.0")));
  CHECK(ac_equal(build_a_leq(3), parse_term("a.0 + a.a.0 + a.a.a.0")));
  CHECK(ac_equal(build_p_n(2), parse_term("a.(a.0 + a.a.0)")));
  CHECK(ac_equal(build_p_n(3),
                 parse_term("a.(a.0 + a.a.0) + a.(a.0 + a.a.0 + a.a.a.0)")));

  Equation e2 = build_e_n(2);
  CHECK(ac_equal(e2.lhs, parse_term("a.0 || a.(a.0 + a.a.0)")));
  CHECK(ac_equal(e2.rhs,
                 parse_term("a.a.(a.0 + a.a.0) + a.(a.0 || (a.0 + a.a.0))")));

  // A different action name propagates everywhere.
  CHECK(ac_equal(build_a_leq(2, "b"), parse_term("b.0 + b.b.0")));
}

TEST_CASE("degenerate indices are rejected") {
  CHECK_THROWS_AS(build_a_leq(0), std::invalid_argument);
  CHECK_THROWS_AS(build_a_leq(-3), std::invalid_argument);
  CHECK_THROWS_AS(build_p_n(1), std::invalid_argument);
  CHECK_THROWS_AS(build_e_n(1), std::invalid_argument);
}

TEST_CASE("the family equations are sound and the bookkeeping is frozen") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    FamilyReport r = run_family_experiment(n);
    CHECK(r.n == n);
    CHECK(r.e_n_rbb);
    CHECK(r.depth_lhs == n + 2);
    CHECK(r.rdepth_p_n == n + 1);
    CHECK(r.depth_a_leq_n == n);
    CHECK(r.formulas_hold);
    CHECK(r.lhs_has_property);
    CHECK_FALSE(r.rhs_has_property);
    CHECK(r.rhs_summands == n);
  }
}

TEST_CASE("the separating property is detected by summand inspection") {
  Equation e3 = build_e_n(3);
  // The left side is itself a summand equivalent to the left side.
  CHECK(has_summand_equivalent(e3.lhs, e3.lhs));
  // No summand of the right side is rooted-branching equivalent to it.
  CHECK_FALSE(has_summand_equivalent(e3.rhs, e3.lhs));
  // Sanity: the property is genuinely about summands, not whole terms.
  CHECK(has_summand_equivalent(parse_term("b.0 + a.tau.0"), parse_term("a.0")));
  CHECK_FALSE(has_summand_equivalent(parse_term("b.0"), parse_term("a.0")));
}

TEST_CASE("the JSON report carries the full record") {
  FamilyReport r = run_family_experiment(3);
  nlohmann::json j = nlohmann::json::parse(to_json(r));
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 3);
  CHECK(j["e_n_rbb"] == true);
  CHECK(j["depth_lhs"] == 5);
  CHECK(j["rdepth_p_n"] == 4);
  CHECK(j["depth_a_leq_n"] == 3);
  CHECK(j["formulas_hold"] == true);
  CHECK(j["lhs_has_property"] == true);
  CHECK(j["rhs_has_property"] == false);
  CHECK(j["rhs_summands"] == 3);
  CHECK(j["lhs"].is_string());
  CHECK(parse_term(j["lhs"].get<std::string>()) != nullptr);
}

TEST_CASE("the equation holds but each right summand differs from the left side") {
  // e_n is rooted-branching valid, yet no single right summand can stand in
  // for the whole left side: that asymmetry is the point of the family.
  Equation e4 = build_e_n(4);
  EquivChecker chk;
  CHECK(chk.equivalent(Relation::RootedBranching, e4.lhs, e4.rhs));
  for (const TermPtr& s : summands(e4.rhs)) {
    CHECK_FALSE(chk.equivalent(Relation::RootedBranching, s, e4.lhs));
  }
}
