#include "ccslc/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ccslc {

namespace {

struct StructuralLess {
  bool operator()(const TermPtr& a, const TermPtr& b) const {
    return structural_compare(a, b) < 0;
  }
};

// Visible actions occurring in the term. In the interleaving fragment every
// prefix is reachable, so this is exactly the set of reachable visible
// actions.
void syntactic_visibles(const TermPtr& t, std::set<Action>& out) {
  switch (t->kind()) {
    case TermKind::Nil:
    case TermKind::Var:
      return;
    case TermKind::Prefix:
      if (t->act().is_visible()) out.insert(t->act());
      syntactic_visibles(t->body(), out);
      return;
    default:
      syntactic_visibles(t->left(), out);
      syntactic_visibles(t->right(), out);
      return;
  }
}

// Visible actions reachable in the transition system of a closed term; this
// is invariant under branching bisimilarity.
std::set<Action> reachable_visibles(EquivChecker& chk, const TermPtr& p) {
  std::set<Action> out;
  std::set<TermPtr, StructuralLess> seen;
  std::vector<TermPtr> stack{canonical(p)};
  while (!stack.empty()) {
    TermPtr t = stack.back();
    stack.pop_back();
    if (!seen.insert(t).second) continue;
    for (const auto& [act, target] : chk.steps(t)) {
      if (act.is_visible()) out.insert(act);
      stack.push_back(target);
    }
  }
  return out;
}

}  // namespace

void DecompositionLab::build() {
  if (built_) return;
  built_ = true;
  std::vector<Action> acts = all_actions(params_.alphabet);
  std::vector<std::vector<TermPtr>> by_size(
      static_cast<std::size_t>(std::max(params_.max_size, 0)) + 1);
  if (params_.max_size >= 1) by_size[1] = {Term::nil()};
  for (int s = 2; s <= params_.max_size; ++s) {
    std::set<TermPtr, StructuralLess> bucket;
    auto admit = [&](TermPtr t) {
      if (chk_.depth(t) <= params_.max_depth) bucket.insert(std::move(t));
    };
    for (const TermPtr& body : by_size[static_cast<std::size_t>(s - 1)])
      for (const Action& act : acts) admit(Term::prefix(act, body));
    for (int s1 = 2; s1 <= s - 3; ++s1) {
      int s2 = s - 1 - s1;
      for (const TermPtr& l : by_size[static_cast<std::size_t>(s1)])
        for (const TermPtr& r : by_size[static_cast<std::size_t>(s2)]) {
          admit(canonical(Term::choice(l, r)));
          admit(canonical(Term::parallel(l, r)));
        }
    }
    by_size[static_cast<std::size_t>(s)] = {bucket.begin(), bucket.end()};
  }
  for (const std::vector<TermPtr>& bucket : by_size)
    universe_.insert(universe_.end(), bucket.begin(), bucket.end());
  nonzero_.reserve(universe_.size());
  for (const TermPtr& u : universe_)
    nonzero_.push_back(chk_.branching(u, Term::nil()) ? 0 : 1);
}

const std::vector<TermPtr>& DecompositionLab::universe() {
  build();
  return universe_;
}

std::optional<std::pair<TermPtr, TermPtr>> DecompositionLab::find_split(
    const TermPtr& p) {
  build();
  TermPtr cp = canonical(p);
  int dp = chk_.depth(cp);
  if (dp <= 1) return std::nullopt;  // one visible action cannot split
  std::set<Action> visp = reachable_visibles(chk_, cp);

  // Per-candidate measures, and depth buckets for the partner scan.
  std::size_t n = universe_.size();
  std::vector<int> dep(n, 0);
  std::vector<std::set<Action>> vis(n);
  std::map<int, std::vector<std::size_t>> by_depth;
  for (std::size_t i = 0; i < n; ++i) {
    if (!nonzero_[i]) continue;
    dep[i] = chk_.depth(universe_[i]);
    syntactic_visibles(universe_[i], vis[i]);
    if (dep[i] >= 1 && dep[i] <= dp - 1) by_depth[dep[i]].push_back(i);
  }
  for (std::size_t qi = 0; qi < n; ++qi) {
    if (!nonzero_[qi] || dep[qi] < 1 || dep[qi] > dp - 1) continue;
    if (!std::includes(visp.begin(), visp.end(), vis[qi].begin(), vis[qi].end()))
      continue;
    auto bucket = by_depth.find(dp - dep[qi]);
    if (bucket == by_depth.end()) continue;
    for (std::size_t ri : bucket->second) {
      if (ri < qi) continue;
      // The factors must jointly realize p's visible actions.
      std::set<Action> joint = vis[qi];
      joint.insert(vis[ri].begin(), vis[ri].end());
      if (joint != visp) continue;
      TermPtr cand = canonical(Term::parallel(universe_[qi], universe_[ri]));
      if (chk_.branching(cand, cp))
        return std::make_pair(universe_[qi], universe_[ri]);
    }
  }
  return std::nullopt;
}

bool DecompositionLab::is_indecomposable(const TermPtr& p) {
  return !find_split(p).has_value();
}

std::vector<TermPtr> DecompositionLab::decompose(const TermPtr& p) {
  std::vector<TermPtr> out;
  std::vector<TermPtr> work = parallel_factors(strip_zeros(canonical(p)));
  while (!work.empty()) {
    TermPtr t = canonical(work.back());
    work.pop_back();
    if (chk_.branching(t, Term::nil())) continue;  // a unit factor
    if (auto split = find_split(t)) {
      work.push_back(split->first);
      work.push_back(split->second);
    } else {
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end(), StructuralLess{});
  return out;
}

std::vector<TermPtr> enumerate_universe(const UniverseParams& params) {
  return DecompositionLab(params).universe();
}

bool is_indecomposable_bounded(const TermPtr& p, const UniverseParams& params) {
  return DecompositionLab(params).is_indecomposable(p);
}

std::vector<TermPtr> decompose_bounded(const TermPtr& p,
                                       const UniverseParams& params) {
  return DecompositionLab(params).decompose(p);
}

bool check_cancellation(const TermPtr& p, const TermPtr& q, const TermPtr& r) {
  EquivChecker chk;
  bool merged = chk.branching(canonical(Term::parallel(p, r)),
                              canonical(Term::parallel(q, r)));
  return !merged || chk.branching(canonical(p), canonical(q));
}

bool factors_match(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b) {
  if (a.size() != b.size()) return false;
  EquivChecker chk;
  std::vector<char> used(b.size(), 0);
  for (const TermPtr& x : a) {
    bool found = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (used[i]) continue;
      if (chk.branching(canonical(x), canonical(b[i]))) {
        used[i] = 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace ccslc
