// Shared test scaffolding: structural first-order matching against axiom
// patterns and a seeded "sound rewriter" that mutates a term by applying a
// random axiom instance (either orientation) at a random position. Every
// rewrite step is sound for the system's equivalence, so a chain of rewrites
// yields a pair of provably equal terms with a known derivation distance.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccslc/axioms.hpp"
#include "ccslc/gen.hpp"
#include "ccslc/term.hpp"

namespace ccslc::testing {

using Bindings = std::map<std::string, TermPtr>;

// Plain structural matching of an axiom side against a term: pattern
// variables bind subterms (consistently; patterns may be non-linear), other
// nodes must coincide. No AC matching — the commutativity and associativity
// axioms themselves provide the permutations.
inline bool match_pattern(const TermPtr& pattern, const TermPtr& term, Bindings& out) {
  if (pattern->kind() == TermKind::Var) {
    auto [it, inserted] = out.emplace(pattern->var_name(), term);
    return inserted || structural_equal(it->second, term);
  }
  if (pattern->kind() != term->kind()) return false;
  switch (pattern->kind()) {
    case TermKind::Nil:
      return true;
    case TermKind::Prefix:
      return pattern->act() == term->act() &&
             match_pattern(pattern->body(), term->body(), out);
    case TermKind::Choice:
    case TermKind::Parallel:
    case TermKind::LeftMerge:
    case TermKind::CommMerge:
      return match_pattern(pattern->left(), term->left(), out) &&
             match_pattern(pattern->right(), term->right(), out);
    case TermKind::Var:
      break;  // handled above
  }
  return false;
}

// All subterm positions of t, as paths of 0 (left/body) / 1 (right) choices.
inline void collect_positions(const TermPtr& t, std::vector<int>& path,
                              std::vector<std::vector<int>>& out) {
  out.push_back(path);
  switch (t->kind()) {
    case TermKind::Prefix:
      path.push_back(0);
      collect_positions(t->body(), path, out);
      path.pop_back();
      break;
    case TermKind::Choice:
    case TermKind::Parallel:
    case TermKind::LeftMerge:
    case TermKind::CommMerge:
      path.push_back(0);
      collect_positions(t->left(), path, out);
      path.pop_back();
      path.push_back(1);
      collect_positions(t->right(), path, out);
      path.pop_back();
      break;
    default:
      break;
  }
}

inline TermPtr subterm_at(const TermPtr& t, const std::vector<int>& path, std::size_t i = 0) {
  if (i == path.size()) return t;
  const TermPtr& next = path[i] == 0
                            ? (t->kind() == TermKind::Prefix ? t->body() : t->left())
                            : t->right();
  return subterm_at(next, path, i + 1);
}

inline TermPtr replace_at(const TermPtr& t, const std::vector<int>& path,
                          const TermPtr& replacement, std::size_t i = 0) {
  if (i == path.size()) return replacement;
  if (t->kind() == TermKind::Prefix)
    return Term::prefix(t->act(), replace_at(t->body(), path, replacement, i + 1));
  TermPtr l = t->left(), r = t->right();
  if (path[i] == 0)
    l = replace_at(l, path, replacement, i + 1);
  else
    r = replace_at(r, path, replacement, i + 1);
  switch (t->kind()) {
    case TermKind::Choice: return Term::choice(l, r);
    case TermKind::Parallel: return Term::parallel(l, r);
    case TermKind::LeftMerge: return Term::left_merge(l, r);
    case TermKind::CommMerge: return Term::comm_merge(l, r);
    default: return replacement;  // unreachable
  }
}

// One random sound rewrite of t: a uniformly chosen (position, axiom,
// orientation) whose pattern matches and binds every variable of the
// replacement side. Returns nothing when no rewrite applies anywhere
// (cannot happen for systems containing A0, whose mirrored left side is a
// bare variable).
inline std::optional<TermPtr> rewrite_once(Rng& rng, const TermPtr& t,
                                           const AxiomSystem& system) {
  std::vector<std::vector<int>> positions;
  std::vector<int> path;
  collect_positions(t, path, positions);

  struct Hit {
    std::vector<int> path;
    TermPtr result;
  };
  std::vector<Hit> hits;
  for (const auto& pos : positions) {
    TermPtr sub = subterm_at(t, pos);
    for (const Axiom& ax : system.axioms()) {
      for (bool mirrored : {false, true}) {
        const TermPtr& from = mirrored ? ax.rhs : ax.lhs;
        const TermPtr& to = mirrored ? ax.lhs : ax.rhs;
        Bindings b;
        if (!match_pattern(from, sub, b)) continue;
        Substitution sigma;
        bool complete = true;
        for (const std::string& v : free_vars(to)) {
          auto it = b.find(v);
          if (it != b.end()) {
            sigma.plain[v] = it->second;
          } else {
            complete = false;
          }
        }
        if (!complete) continue;  // keep rewrites deterministic in t
        hits.push_back({pos, replace_at(t, pos, apply_substitution(to, sigma))});
      }
    }
  }
  if (hits.empty()) return std::nullopt;
  const Hit& pick = hits[rng() % hits.size()];
  return pick.result;
}

// A chain of `steps` sound rewrites (stopping early if nothing fires).
inline TermPtr rewrite_chain(Rng& rng, TermPtr t, const AxiomSystem& system,
                             int steps) {
  for (int i = 0; i < steps; ++i) {
    auto next = rewrite_once(rng, t, system);
    if (!next) break;
    t = *next;
  }
  return t;
}

}  // namespace ccslc::testing
