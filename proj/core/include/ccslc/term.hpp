// Process terms.
//
//   t ::= 0 | x | mu.t | t + t | t || t | t |> t | t | t
//
// with `mu` an action, `x` a process variable, `+` choice, `||` parallel
// composition (merge), `|>` left merge, and `|` communication merge.
//
// Design notes.
//  * Term is an immutable node shared through TermPtr; every node caches its
//    size, hash, closedness and whether it is already in canonical form, so
//    the hot predicates are O(1).
//  * Terms are compared and stored *modulo associativity and commutativity of
//    `+` and `||`*: `canonical` flattens and sorts those two operators (and
//    only those; left merge is not commutative, and the corresponding laws
//    for communication merge are proper axioms, not reading conventions).
//  * `size` counts operator and nil nodes: size(0) = 1, size(x) = 0, and each
//    prefix or binary operator adds 1. Variables are placeholders for terms
//    and carry no size of their own.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ccslc/action.hpp"

namespace ccslc {

enum class TermKind : std::uint8_t {
  Nil,        // 0, the deadlocked process
  Var,        // a process variable
  Prefix,     // mu.t
  Choice,     // t + u
  Parallel,   // t || u
  LeftMerge,  // t |> u
  CommMerge,  // t | u
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
 public:
  // ── factories ─────────────────────────────────────────────────────────
  static TermPtr nil();
  static TermPtr var(std::string name);
  static TermPtr prefix(Action act, TermPtr body);
  static TermPtr choice(TermPtr l, TermPtr r);
  static TermPtr parallel(TermPtr l, TermPtr r);
  static TermPtr left_merge(TermPtr l, TermPtr r);
  static TermPtr comm_merge(TermPtr l, TermPtr r);

  // ── accessors ─────────────────────────────────────────────────────────
  TermKind kind() const { return kind_; }
  const Action& act() const { return act_; }        // Prefix only
  const std::string& var_name() const { return var_; }  // Var only
  const TermPtr& left() const { return left_; }     // binary ops; Prefix body
  const TermPtr& right() const { return right_; }   // binary ops
  const TermPtr& body() const { return left_; }     // Prefix body, by name

  int size() const { return size_; }
  std::size_t hash() const { return hash_; }
  bool closed() const { return closed_; }
  bool is_canonical() const { return canonical_; }

  bool is_nil() const { return kind_ == TermKind::Nil; }

 private:
  Term(TermKind k, Action a, std::string v, TermPtr l, TermPtr r);

  TermKind kind_;
  Action act_;
  std::string var_;
  TermPtr left_, right_;
  int size_ = 0;
  std::size_t hash_ = 0;
  bool closed_ = true;
  bool canonical_ = true;
};

// ── ordering and equality ─────────────────────────────────────────────────

// Total structural order used for canonical sorting: by size, then by kind,
// then lexicographically on the components.
int structural_compare(const TermPtr& a, const TermPtr& b);
bool structural_equal(const TermPtr& a, const TermPtr& b);

// Canonical representative modulo associativity/commutativity of + and ||:
// those operators are flattened, sorted and rebuilt left-nested.
TermPtr canonical(const TermPtr& t);

// Equal modulo associativity/commutativity of + and ||.
bool ac_equal(const TermPtr& a, const TermPtr& b);

// ── structural helpers ────────────────────────────────────────────────────

// Maximal non-Choice subterms of t, in syntactic order (t itself if not a +).
std::vector<TermPtr> summands(const TermPtr& t);

// Maximal non-Parallel subterms of t, in syntactic order.
std::vector<TermPtr> parallel_factors(const TermPtr& t);

// Fold a list into a left-nested + (empty list yields 0).
TermPtr make_choice(const std::vector<TermPtr>& ts);

// Fold a list into a left-nested || (empty list yields 0).
TermPtr make_parallel(const std::vector<TermPtr>& ts);

// Remove syntactically redundant 0 summands and 0 parallel factors,
// recursively. Does not touch left/communication merge shapes.
TermPtr strip_zeros(const TermPtr& t);

// Free (plain) process variables.
std::set<std::string> free_vars(const TermPtr& t);

// Names of all actions occurring in t (tau excluded).
std::set<std::string> action_names(const TermPtr& t);

// ── substitution ──────────────────────────────────────────────────────────

// A finite map from variables to terms; unmapped variables are left alone.
// The `indexed` part only matters for configurations (see config.hpp), where
// an indexed variable x@mu may be mapped independently of plain x.
struct Substitution {
  std::map<std::string, TermPtr> plain;
  std::map<std::pair<std::string, Action>, TermPtr> indexed;

  bool empty() const { return plain.empty() && indexed.empty(); }

  // True when every image is a closed term.
  bool closed() const;
};

TermPtr apply_substitution(const TermPtr& t, const Substitution& sigma);

// ── equations ─────────────────────────────────────────────────────────────

struct Equation {
  TermPtr lhs, rhs;
};

}  // namespace ccslc
