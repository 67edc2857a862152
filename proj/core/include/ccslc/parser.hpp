// Concrete syntax for terms, configurations and axiom files.
//
//   term     := sum
//   sum      := par ('+' par)*
//   par      := lm ('||' lm)*
//   lm       := cm ('|>' cm)*
//   cm       := pre ('|' pre)*
//   pre      := action '.' pre | atom
//   atom     := '0' | var | '(' sum ')'
//   action   := 'tau' | name | '~' name
//   name     := [a-z][a-zA-Z0-9_]*
//   var      := [a-zA-Z][a-zA-Z0-9_]* ('@' action)?   (the '@' form only in
//                                                      configurations)
//
// Binding, tightest first: '.', '|', '|>', '||', '+'; binary operators are
// left associative. `tau` is reserved for the silent action. An identifier
// followed by '.' is an action; otherwise it is a variable.
//
// Indexed variables x@mu may only sit under parallel composition (that is
// the configuration grammar); the parser enforces this, so `a.(x@b)` or
// `x@a + y` are rejected with a position-carrying error.
//
// Axiom files:
//   file   := ('alphabet' name (',' name)* ';')? decl*
//   decl   := axname ':' term '=' term ';'
//   axname := [A-Za-z_][A-Za-z0-9_]* ('[' action (',' action)* ']')?
// '#' starts a comment that runs to the end of the line.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccslc/config.hpp"
#include "ccslc/term.hpp"

namespace ccslc {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, SourceSpan span)
      : std::runtime_error(std::move(message)), span_(span) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// Parse a closed or open term; rejects indexed variables.
TermPtr parse_term(std::string_view text);

// Parse a configuration; plain terms are configurations too.
ConfigPtr parse_config(std::string_view text);

// Parse a single action: `tau`, `a` or `~a`.
Action parse_action(std::string_view text);

struct AxiomDecl {
  std::string name;
  TermPtr lhs, rhs;
};

struct AxiomFileContents {
  std::optional<Alphabet> alphabet;
  std::vector<AxiomDecl> decls;
};

AxiomFileContents parse_axiom_file(std::string_view text);

// ── printing ──────────────────────────────────────────────────────────────
// Minimal-parenthesis printers; parse(pretty(t)) is structurally equal to t.

std::string pretty(const TermPtr& t);
std::string pretty(const ConfigPtr& c);
std::string pretty(const CanonConfig& c);

// Error rendering: "line L, column C: message".
std::string describe(const ParseError& e);

}  // namespace ccslc
