// Terms: parsing, printing, canonical AC form, sizes, structural helpers,
// substitution. Expected values are hand-derived and cross-checked against
// the independent reference implementation in tests/oracle/.
#include <set>
#include <string>
#include <vector>

#include "ccslc/parser.hpp"
#include "ccslc/term.hpp"
#include "doctest.h"

using namespace ccslc;

// ── parsing and printing ────────────────────────────────────────────────────

TEST_CASE("parser honors precedence: . > | > |> > || > +") {
  TermPtr t = parse_term("a.x + y || z |> w | v");
  REQUIRE(t->kind() == TermKind::Choice);
  CHECK(t->left()->kind() == TermKind::Prefix);
  const TermPtr& par = t->right();
  REQUIRE(par->kind() == TermKind::Parallel);
  CHECK(par->left()->var_name() == "y");
  const TermPtr& lm = par->right();
  REQUIRE(lm->kind() == TermKind::LeftMerge);
  CHECK(lm->left()->var_name() == "z");
  REQUIRE(lm->right()->kind() == TermKind::CommMerge);
}

TEST_CASE("binary operators are left associative") {
  TermPtr t = parse_term("x |> y |> z");
  REQUIRE(t->kind() == TermKind::LeftMerge);
  CHECK(t->left()->kind() == TermKind::LeftMerge);
  CHECK(t->right()->var_name() == "z");
}

TEST_CASE("prefix chains and conames parse") {
  TermPtr t = parse_term("~a.tau.b.0");
  REQUIRE(t->kind() == TermKind::Prefix);
  CHECK(t->act() == Action::coname("a"));
  CHECK(t->body()->act() == Action::tau());
  CHECK(t->body()->body()->act() == Action::name("b"));
  CHECK(t->body()->body()->body()->is_nil());
}

TEST_CASE("pretty-printing round-trips structurally") {
  for (const char* s :
       {"0", "x", "a.0", "~a.(x + y)", "a.x + y || z |> w | v",
        "(x + y) |> (z | w)", "tau.(a.0 || b.0)", "x | y | z",
        "(a.0 + b.0) | ~a.0", "x || (y + z)"}) {
    TermPtr t = parse_term(s);
    CHECK(structural_equal(parse_term(pretty(t)), t));
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_term("a."), ParseError);
  CHECK_THROWS_AS(parse_term("x +"), ParseError);
  CHECK_THROWS_AS(parse_term("(a.0"), ParseError);
  CHECK_THROWS_AS(parse_term("x@a"), ParseError);  // indexed vars are configs
  try {
    parse_term("a.0 +\n  + b.0");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
    CHECK(describe(e).find("line 2") != std::string::npos);
  }
}

TEST_CASE("indexed variables only sit under parallel in configurations") {
  CHECK_NOTHROW(parse_config("x@a || y@tau || a.0"));
  CHECK_THROWS_AS(parse_config("a.(x@b)"), ParseError);
  CHECK_THROWS_AS(parse_config("x@a + y"), ParseError);
  CHECK_THROWS_AS(parse_config("x@a |> 0"), ParseError);
}

// ── size ────────────────────────────────────────────────────────────────────

TEST_CASE("size counts nil and operators, variables are free") {
  CHECK(parse_term("0")->size() == 1);
  CHECK(parse_term("x")->size() == 0);
  CHECK(parse_term("a.0")->size() == 2);
  CHECK(parse_term("a.x")->size() == 1);
  CHECK(parse_term("a.0 + a.0")->size() == 5);
  CHECK(parse_term("x || y")->size() == 1);
  CHECK(parse_term("a.0 |> (x | 0)")->size() == 5);
}

// ── canonical form and AC equality ──────────────────────────────────────────

TEST_CASE("choice and parallel are compared modulo AC") {
  CHECK(ac_equal(parse_term("a.0 + b.0"), parse_term("b.0 + a.0")));
  CHECK(ac_equal(parse_term("(a.0 + b.0) + tau.0"),
                 parse_term("a.0 + (tau.0 + b.0)")));
  CHECK(ac_equal(parse_term("x || y || z"), parse_term("z || (y || x)")));
  CHECK_FALSE(ac_equal(parse_term("a.0 + b.0"), parse_term("a.0")));
}

TEST_CASE("left and communication merge are not AC-identified") {
  CHECK_FALSE(ac_equal(parse_term("x |> y"), parse_term("y |> x")));
  CHECK_FALSE(ac_equal(parse_term("x | y"), parse_term("y | x")));
  // ... but AC inside their arguments still counts.
  CHECK(ac_equal(parse_term("(a.0 + b.0) | x"), parse_term("(b.0 + a.0) | x")));
}

TEST_CASE("canonical is idempotent and order-insensitive") {
  TermPtr t = parse_term("b.0 + (a.0 + b.0) + tau.(y || x)");
  TermPtr u = parse_term("tau.(x || y) + b.0 + b.0 + a.0");
  CHECK(structural_equal(canonical(t), canonical(u)));
  CHECK(structural_equal(canonical(canonical(t)), canonical(t)));
  CHECK(canonical(t)->is_canonical());
}

TEST_CASE("canonical form does not collapse duplicate summands") {
  TermPtr t = canonical(parse_term("a.0 + a.0"));
  CHECK(summands(t).size() == 2);  // idempotence is an axiom, not a reading
}

TEST_CASE("structural_compare is a total order consistent with equality") {
  std::vector<TermPtr> ts = {parse_term("0"),      parse_term("x"),
                             parse_term("a.0"),    parse_term("~a.0"),
                             parse_term("tau.0"),  parse_term("a.0 + b.0"),
                             parse_term("x || y"), parse_term("x |> y")};
  for (const auto& a : ts)
    for (const auto& b : ts) {
      int ab = structural_compare(a, b), ba = structural_compare(b, a);
      CHECK(((ab == 0) == (ba == 0)));
      if (ab != 0) CHECK(((ab < 0) == (ba > 0)));
      CHECK((structural_equal(a, b) == (ab == 0)));
    }
}

// ── structural helpers ──────────────────────────────────────────────────────

TEST_CASE("summands and parallel factors") {
  CHECK(summands(parse_term("a.0 + b.0 + c.0")).size() == 3);
  CHECK(summands(parse_term("a.0")).size() == 1);
  CHECK(summands(parse_term("0")).size() == 1);
  CHECK(parallel_factors(parse_term("x || y || a.0")).size() == 3);
  // choice under parallel does not split
  CHECK(parallel_factors(parse_term("(x + y) || z")).size() == 2);
}

TEST_CASE("make_choice and make_parallel fold and handle the empty list") {
  CHECK(make_choice({})->is_nil());
  CHECK(make_parallel({})->is_nil());
  std::vector<TermPtr> parts = {parse_term("a.0"), parse_term("b.0")};
  CHECK(ac_equal(make_choice(parts), parse_term("a.0 + b.0")));
  CHECK(ac_equal(make_parallel(parts), parse_term("a.0 || b.0")));
  // folding preserves the element nodes (relied on by the prover's scans)
  TermPtr folded = make_choice(parts);
  CHECK(folded->left().get() == parts[0].get());
  CHECK(folded->right().get() == parts[1].get());
}

TEST_CASE("strip_zeros removes redundant 0 summands and factors") {
  CHECK(structural_equal(strip_zeros(parse_term("a.0 + 0")), parse_term("a.0")));
  CHECK(structural_equal(strip_zeros(parse_term("0 || x || 0")), parse_term("x")));
  CHECK(strip_zeros(parse_term("0 + 0"))->is_nil());
  // merge shapes are left alone
  CHECK(structural_equal(strip_zeros(parse_term("x |> 0")), parse_term("x |> 0")));
}

TEST_CASE("free variables and action names") {
  TermPtr t = parse_term("a.x + ~b.(y |> x) + tau.0");
  CHECK(free_vars(t) == std::set<std::string>{"x", "y"});
  CHECK(action_names(t) == std::set<std::string>{"a", "b"});  // tau excluded
  CHECK(free_vars(parse_term("a.0")).empty());
}

// ── substitution ────────────────────────────────────────────────────────────

TEST_CASE("substitution replaces free variables, leaves the rest") {
  Substitution sigma;
  sigma.plain["x"] = parse_term("a.0");
  TermPtr t = apply_substitution(parse_term("x + b.y"), sigma);
  CHECK(ac_equal(t, parse_term("a.0 + b.y")));
  CHECK(sigma.closed());
  sigma.plain["y"] = parse_term("z");
  CHECK_FALSE(sigma.closed());
}

TEST_CASE("substitution composes under every operator") {
  Substitution sigma;
  sigma.plain["x"] = parse_term("tau.0");
  TermPtr t = parse_term("x || (x |> a.x) + x | x");
  TermPtr r = apply_substitution(t, sigma);
  CHECK(free_vars(r).empty());
  CHECK(ac_equal(r, parse_term("tau.0 || (tau.0 |> a.tau.0) + tau.0 | tau.0")));
}
