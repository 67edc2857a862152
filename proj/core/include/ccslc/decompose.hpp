// Bounded unique parallel decomposition.
//
// The candidate universe is the interleaving fragment — 0, prefixes, sums
// and parallel compositions — in canonical AC form with no redundant 0
// arguments, bounded by size and depth, and enumerated in a fixed order
// (size first, then the structural order). Searching it decides, within the
// bound, whether a closed term is parallel prime and what its factors are.
//
// Factor searches are pruned before any bisimilarity check: branching
// bisimilarity preserves the depth (which is additive under the merge), the
// rooted depth, and the set of reachable visible actions, and a factor
// equivalent to 0 never counts. A term all of whose reachable actions are
// silent is branching bisimilar to 0 and is treated as trivially prime.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ccslc/equiv.hpp"
#include "ccslc/term.hpp"

namespace ccslc {

struct UniverseParams {
  Alphabet alphabet{"a"};
  int max_size = 6;
  int max_depth = 99;
};

class DecompositionLab {
 public:
  explicit DecompositionLab(UniverseParams params) : params_(std::move(params)) {}

  const UniverseParams& params() const { return params_; }
  const std::vector<TermPtr>& universe();

  // The first (q, r) from the universe with q || r branching bisimilar to p
  // and neither factor equivalent to 0.
  std::optional<std::pair<TermPtr, TermPtr>> find_split(const TermPtr& p);

  bool is_indecomposable(const TermPtr& p);

  // Parallel factors of p within the bound: syntactic factors are split
  // further along find_split witnesses until every piece is prime. Factors
  // equivalent to 0 are dropped; the empty vector is 0's decomposition.
  std::vector<TermPtr> decompose(const TermPtr& p);

  EquivChecker& checker() { return chk_; }

 private:
  UniverseParams params_;
  std::vector<TermPtr> universe_;
  std::vector<char> nonzero_;  // parallel with universe_: not ~BB 0
  bool built_ = false;
  EquivChecker chk_;

  void build();
};

std::vector<TermPtr> enumerate_universe(const UniverseParams& params);
bool is_indecomposable_bounded(const TermPtr& p, const UniverseParams& params);
std::vector<TermPtr> decompose_bounded(const TermPtr& p, const UniverseParams& params);

// Whether cancellation holds for this triple: if p || r and q || r are
// branching bisimilar then so are p and q.
bool check_cancellation(const TermPtr& p, const TermPtr& q, const TermPtr& r);

// Whether two factor lists match up to branching bisimilarity (as multisets).
bool factors_match(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b);

}  // namespace ccslc
