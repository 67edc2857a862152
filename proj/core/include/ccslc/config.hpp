// Configurations: the open-term states of the operational semantics.
//
//   c ::= x@mu | t | c || c
//
// An indexed variable x@mu is the residue of a variable x that has been
// observed to start a mu-step; a term leaf is an ordinary (possibly open)
// term; configurations compose in parallel.
//
// Design notes.
//  * Config is the syntax tree (what the parser produces and the printer
//    consumes). The semantics works on CanonConfig, the representative of a
//    configuration modulo associativity/commutativity of || at both levels:
//    a sorted multiset of indexed variables plus at most one term component,
//    with all term leaves merged into one parallel term. Reading
//    configurations modulo AC is the standing convention; merging term
//    leaves is sound because the merged term's steps subsume those of any
//    particular parse.
//  * A term component `0` is kept distinct from having no term component:
//    `x@a || 0` and `x@a` are different configurations (they happen to be
//    bisimilar, but not equal as states).

#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ccslc/action.hpp"
#include "ccslc/term.hpp"

namespace ccslc {

enum class ConfigKind : std::uint8_t {
  IndexedVar,  // x@mu
  TermLeaf,    // an ordinary term
  Par,         // c || c
};

class Config;
using ConfigPtr = std::shared_ptr<const Config>;

class Config {
 public:
  static ConfigPtr indexed(std::string var, Action act);
  static ConfigPtr leaf(TermPtr term);
  static ConfigPtr par(ConfigPtr l, ConfigPtr r);

  ConfigKind kind() const { return kind_; }
  const std::string& var_name() const { return var_; }  // IndexedVar
  const Action& act() const { return act_; }            // IndexedVar
  const TermPtr& term() const { return term_; }         // TermLeaf
  const ConfigPtr& left() const { return left_; }       // Par
  const ConfigPtr& right() const { return right_; }     // Par

 private:
  Config(ConfigKind k, std::string v, Action a, TermPtr t, ConfigPtr l, ConfigPtr r)
      : kind_(k), var_(std::move(v)), act_(std::move(a)),
        term_(std::move(t)), left_(std::move(l)), right_(std::move(r)) {}

  ConfigKind kind_;
  std::string var_;
  Action act_;
  TermPtr term_;
  ConfigPtr left_, right_;
};

// An indexed variable occurrence.
using IndexedVar = std::pair<std::string, Action>;

// Canonical representative of a configuration: a sorted multiset of indexed
// variables plus an optional single (canonical) term component.
struct CanonConfig {
  std::vector<IndexedVar> ivars;
  TermPtr term;  // null when the configuration has no term component

  bool has_term() const { return term != nullptr; }
  bool pure_term() const { return ivars.empty() && term != nullptr; }

  // Closed configurations are exactly the closed terms.
  bool closed() const { return ivars.empty() && term && term->closed(); }

  std::size_t hash() const;

  friend bool operator==(const CanonConfig& a, const CanonConfig& b);
};

// Total order (for deterministic containers and output).
int compare(const CanonConfig& a, const CanonConfig& b);

// Canonicalization and embedding.
CanonConfig canonize(const ConfigPtr& c);
CanonConfig config_of_term(const TermPtr& t);

// Parallel composition of canonical configurations.
CanonConfig config_par(const CanonConfig& a, const CanonConfig& b);
CanonConfig config_par(const CanonConfig& a, const TermPtr& t);

// Back to a syntax tree (indexed variables first, then the term component).
ConfigPtr to_config_tree(const CanonConfig& c);

// Free plain variables of the term component.
std::set<std::string> config_free_vars(const CanonConfig& c);

// Action names occurring in c, including the indices of indexed variables.
std::set<std::string> config_action_names(const CanonConfig& c);

// Apply a substitution: plain entries act on the term component, indexed
// entries replace matching indexed variables (their images join the term
// component in parallel). Unmapped variables stay.
CanonConfig apply_substitution(const CanonConfig& c, const Substitution& sigma);

}  // namespace ccslc

template <>
struct std::hash<ccslc::CanonConfig> {
  std::size_t operator()(const ccslc::CanonConfig& c) const { return c.hash(); }
};
