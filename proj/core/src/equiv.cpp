#include "ccslc/equiv.hpp"

#include <pthread.h>

#include <algorithm>
#include <cassert>
#include <exception>
#include <set>
#include <stdexcept>

#include "ccslc/parser.hpp"

namespace ccslc {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Strong: return "strong";
    case Relation::Branching: return "bb";
    case Relation::RootedBranching: return "rbb";
  }
  return {};
}

std::optional<Relation> relation_from_string(std::string_view s) {
  if (s == "strong") return Relation::Strong;
  if (s == "bb" || s == "branching") return Relation::Branching;
  if (s == "rbb" || s == "rooted-branching") return Relation::RootedBranching;
  return std::nullopt;
}

// ── closed terms ──────────────────────────────────────────────────────────

const std::vector<std::pair<Action, TermPtr>>& EquivChecker::steps(const TermPtr& p) {
  TermPtr c = canonical(p);
  auto it = steps_.find(c);
  if (it != steps_.end()) return it->second;
  return steps_.emplace(c, step_term(c)).first->second;
}

const std::vector<TermPtr>& EquivChecker::eps(const TermPtr& p) {
  TermPtr c = canonical(p);
  auto it = eps_.find(c);
  if (it != eps_.end()) return it->second;
  // p first, then every term reachable through one or more tau steps.
  std::vector<TermPtr> out{c};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& [mu, t2] : steps(out[i])) {
      if (!mu.is_tau()) continue;
      bool seen = false;
      for (const auto& s : out)
        if (structural_equal(s, t2)) {
          seen = true;
          break;
        }
      if (!seen) out.push_back(t2);
    }
  }
  return eps_.emplace(c, std::move(out)).first->second;
}

// Successors of the step list with action mu, cheapest first relative to the
// target they should match: syntactic twins, then terms equal after dropping
// redundant 0 arguments, then the rest. This is pure search order — every
// candidate is still tried on failure — but it matters enormously: refuting
// relatedness of two nearly identical parallel compositions explores a pair
// space quadratic in their size, so likely matches must be tried before
// likely mismatches. The middle tier is keyed by a memoized hash, which can
// collide; a collision only perturbs the order, never the verdict.
std::vector<TermPtr> EquivChecker::candidates(
    const Action& mu, const TermPtr& target,
    const std::vector<std::pair<Action, TermPtr>>& qs) {
  std::vector<TermPtr> out;
  for (const auto& [nu, q2] : qs)
    if (nu == mu) out.push_back(q2);
  if (out.size() > 1) {
    const std::size_t want = stripped_hash(target);
    std::stable_partition(out.begin(), out.end(),
                          [&](const TermPtr& q2) { return stripped_hash(q2) == want; });
    std::stable_partition(out.begin(), out.end(),
                          [&](const TermPtr& q2) { return structural_equal(q2, target); });
  }
  return out;
}

std::size_t EquivChecker::stripped_hash(const TermPtr& t) {
  auto it = stripped_.find(t);
  if (it != stripped_.end()) return it->second;
  std::size_t h = canonical(strip_zeros(t))->hash();
  return stripped_.emplace(t, h).first->second;
}

bool EquivChecker::strong_transfer(const TermPtr& p, const TermPtr& q) {
  for (const auto& [mu, p2] : steps(p)) {
    bool matched = false;
    for (const auto& q2 : candidates(mu, p2, steps(q))) {
      if (strong(p2, q2)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool EquivChecker::strong(const TermPtr& p0, const TermPtr& q0) {
  TermPtr p = canonical(p0), q = canonical(q0);
  if (!p->closed() || !q->closed())
    throw std::invalid_argument("strong bisimilarity on terms requires closed terms");
  if (structural_equal(p, q)) return true;
  if (structural_compare(q, p) < 0) std::swap(p, q);
  auto key = std::make_pair(p, q);
  if (auto it = strong_.find(key); it != strong_.end()) return it->second;
  bool ok = strong_transfer(p, q) && strong_transfer(q, p);
  strong_.emplace(key, ok);
  return ok;
}

bool EquivChecker::bb_transfer(const TermPtr& p, const TermPtr& q) {
  for (const auto& [mu, p2] : steps(p)) {
    if (mu.is_tau() && branching(p2, q)) continue;
    bool matched = false;
    for (const auto& q1 : eps(q)) {
      // Intermediate stuttering states must remain related to p; the first
      // element of eps(q) is q itself, which is granted.
      if (!structural_equal(q1, q) && !branching(p, q1)) continue;
      for (const auto& q2 : candidates(mu, p2, steps(q1))) {
        if (branching(p2, q2)) {
          matched = true;
          break;
        }
      }
      if (matched) break;
    }
    if (!matched) return false;
  }
  return true;
}

bool EquivChecker::branching(const TermPtr& p0, const TermPtr& q0) {
  TermPtr p = canonical(p0), q = canonical(q0);
  if (!p->closed() || !q->closed())
    throw std::invalid_argument("branching bisimilarity on terms requires closed terms");
  if (structural_equal(p, q)) return true;
  if (structural_compare(q, p) < 0) std::swap(p, q);
  auto key = std::make_pair(p, q);
  if (auto it = bb_.find(key); it != bb_.end()) return it->second;
  bool ok = bb_transfer(p, q) && bb_transfer(q, p);
  bb_.emplace(key, ok);
  return ok;
}

bool EquivChecker::rooted_branching(const TermPtr& p0, const TermPtr& q0) {
  // First steps must match exactly (tau included); derivatives continue
  // branching-bisimilarly.
  TermPtr p = canonical(p0), q = canonical(q0);
  if (!p->closed() || !q->closed())
    throw std::invalid_argument(
        "rooted branching bisimilarity on terms requires closed terms");
  if (structural_equal(p, q)) return true;
  auto root = [&](const TermPtr& a, const TermPtr& b) {
    for (const auto& [mu, a2] : steps(a)) {
      bool matched = false;
      for (const auto& b2 : candidates(mu, a2, steps(b))) {
        if (branching(a2, b2)) {
          matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
    return true;
  };
  return root(p, q) && root(q, p);
}

bool EquivChecker::equivalent(Relation r, const TermPtr& p, const TermPtr& q) {
  switch (r) {
    case Relation::Strong: return strong(p, q);
    case Relation::Branching: return branching(p, q);
    case Relation::RootedBranching: return rooted_branching(p, q);
  }
  return false;
}

int EquivChecker::depth(const TermPtr& p0) {
  TermPtr p = canonical(p0);
  if (auto it = depth_.find(p); it != depth_.end()) return it->second;
  int d = 0;
  for (const auto& [mu, p2] : steps(p))
    d = std::max(d, (mu.is_visible() ? 1 : 0) + depth(p2));
  depth_.emplace(p, d);
  return d;
}

int EquivChecker::rdepth(const TermPtr& p) {
  int d = 0;
  for (const auto& [mu, p2] : steps(p)) d = std::max(d, 1 + depth(p2));
  return d;
}

bool equivalent(Relation r, const TermPtr& p, const TermPtr& q) {
  EquivChecker ck;
  return ck.equivalent(r, p, q);
}

int depth(const TermPtr& p) {
  EquivChecker ck;
  return ck.depth(p);
}

int rdepth(const TermPtr& p) {
  EquivChecker ck;
  return ck.rdepth(p);
}

std::vector<Action> initials(const TermPtr& t) {
  std::vector<Action> out;
  for (const auto& [mu, _] : step_term(t))
    if (out.empty() || !(out.back() == mu)) out.push_back(mu);
  return out;
}

// ── configurations ────────────────────────────────────────────────────────

namespace {

struct MatrixCtx {
  const Lts& lts;
  Relation rel;  // Strong or Branching
  std::vector<char>& R;
  const std::vector<std::vector<int>>& eps;

  bool related(int a, int b) const { return R[a * lts.num_states() + b] != 0; }

  bool transfer(int p, int q) const {
    for (const auto& e : lts.out[p]) {
      if (rel == Relation::Branching && e.label.is_silent() && related(e.target, q)) continue;
      bool matched = false;
      if (rel == Relation::Strong) {
        for (const auto& f : lts.out[q]) {
          if (f.label == e.label && related(e.target, f.target)) {
            matched = true;
            break;
          }
        }
      } else {
        for (int q1 : eps[q]) {
          if (q1 != q && !related(p, q1)) continue;
          for (const auto& f : lts.out[q1]) {
            if (f.label == e.label && related(e.target, f.target)) {
              matched = true;
              break;
            }
          }
          if (matched) break;
        }
      }
      if (!matched) return false;
    }
    return true;
  }

  // The first edge of p that q cannot match, for witness reporting.
  const LtsTransition* failing_edge(int p, int q) const {
    for (const auto& e : lts.out[p]) {
      if (rel == Relation::Branching && e.label.is_silent() && related(e.target, q)) continue;
      bool matched = false;
      if (rel == Relation::Strong) {
        for (const auto& f : lts.out[q])
          if (f.label == e.label && related(e.target, f.target)) matched = true;
      } else {
        for (int q1 : eps[q]) {
          if (q1 != q && !related(p, q1)) continue;
          for (const auto& f : lts.out[q1])
            if (f.label == e.label && related(e.target, f.target)) matched = true;
        }
      }
      if (!matched) return &e;
    }
    return nullptr;
  }
};

std::vector<std::vector<int>> all_eps(const Lts& lts) {
  std::vector<std::vector<int>> out(lts.num_states());
  for (int s = 0; s < lts.num_states(); ++s) out[s] = epsilon_closure(lts, s);
  return out;
}

}  // namespace

std::vector<char> relation_matrix(const Lts& lts, Relation r) {
  assert(r != Relation::RootedBranching);
  const int n = lts.num_states();
  std::vector<char> R(static_cast<std::size_t>(n) * n, 1);
  auto eps = r == Relation::Branching ? all_eps(lts) : std::vector<std::vector<int>>(n);
  MatrixCtx ctx{lts, r, R, eps};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!R[i * n + j]) continue;
        if (!ctx.transfer(i, j) || !ctx.transfer(j, i)) {
          R[i * n + j] = R[j * n + i] = 0;
          changed = true;
        }
      }
    }
  }
  return R;
}

namespace {

// Exact root matching on top of a branching matrix (the rooted condition).
const LtsTransition* root_mismatch(const Lts& lts, const std::vector<char>& bb,
                                   int p, int q) {
  const int n = lts.num_states();
  for (const auto& e : lts.out[p]) {
    bool matched = false;
    for (const auto& f : lts.out[q])
      if (f.label == e.label && bb[e.target * n + f.target]) {
        matched = true;
        break;
      }
    if (!matched) return &e;
  }
  return nullptr;
}

}  // namespace

bool equivalent(Relation r, const CanonConfig& c1, const CanonConfig& c2,
                const Alphabet& alphabet) {
  if (c1.closed() && c2.closed()) {
    EquivChecker ck;
    return ck.equivalent(r, c1.term, c2.term);
  }
  auto pair = build_lts_pair(c1, c2, alphabet);
  const int n = pair.lts.num_states();
  if (r == Relation::RootedBranching) {
    auto bb = relation_matrix(pair.lts, Relation::Branching);
    return root_mismatch(pair.lts, bb, pair.root1, pair.root2) == nullptr &&
           root_mismatch(pair.lts, bb, pair.root2, pair.root1) == nullptr;
  }
  auto R = relation_matrix(pair.lts, r);
  return R[pair.root1 * n + pair.root2] != 0;
}

Decision decide_with_witness(Relation r, const CanonConfig& c1, const CanonConfig& c2,
                             const Alphabet& alphabet) {
  auto pair = build_lts_pair(c1, c2, alphabet);
  const Lts& lts = pair.lts;
  const int n = lts.num_states();
  const Relation base = r == Relation::Strong ? Relation::Strong : Relation::Branching;
  auto R = relation_matrix(lts, base);

  auto edge_witness = [&](const char* side, const LtsTransition& e) {
    return std::string(side) + " can step  " + e.label.str() + " -> " +
           pretty(lts.states[e.target]) + "  which the other side cannot match";
  };

  if (r == Relation::RootedBranching) {
    if (const auto* e = root_mismatch(lts, R, pair.root1, pair.root2))
      return {false, edge_witness("left", *e)};
    if (const auto* e = root_mismatch(lts, R, pair.root2, pair.root1))
      return {false, edge_witness("right", *e)};
    return {true, {}};
  }

  if (R[pair.root1 * n + pair.root2]) return {true, {}};

  auto eps = base == Relation::Branching ? all_eps(lts) : std::vector<std::vector<int>>(n);
  MatrixCtx ctx{lts, base, R, eps};
  if (const auto* e = ctx.failing_edge(pair.root1, pair.root2))
    return {false, edge_witness("left", *e)};
  if (const auto* e = ctx.failing_edge(pair.root2, pair.root1))
    return {false, edge_witness("right", *e)};
  return {false, "the configurations are distinguished below their first steps"};
}

// ── derived notions ───────────────────────────────────────────────────────

namespace {

// As a configuration, a term is rooted-branching equivalent to 0 exactly
// when it has no transitions at all.
bool config_zero(const TermPtr& u) {
  Alphabet a = action_names(u);
  if (a.empty()) a.insert("a");  // two bare variables can still synchronize
  return step_config(config_of_term(u), a).empty();
}

}  // namespace

bool has_zero_factor(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Nil:
    case TermKind::Var:
      return false;
    case TermKind::Prefix:
      return has_zero_factor(t->body());
    case TermKind::Choice:
      return has_zero_factor(t->left()) || has_zero_factor(t->right());
    case TermKind::Parallel:
    case TermKind::LeftMerge:
    case TermKind::CommMerge:
      return config_zero(t->left()) || config_zero(t->right()) ||
             has_zero_factor(t->left()) || has_zero_factor(t->right());
  }
  return false;
}

namespace {

TermPtr chain(const std::string& name, std::size_t n) {
  TermPtr t = Term::nil();
  for (std::size_t i = 0; i < n; ++i) t = Term::prefix(Action::name(name), t);
  return t;
}

// The witness instances built below contain chains whose length grows with
// the size of the configurations' transition systems, and EquivChecker
// descends recursively with depth linear in term size, so the closed-term
// decision runs on a thread with a generous stack.
struct SpareStackTask {
  Relation r;
  const TermPtr* t1;
  const TermPtr* t2;
  bool result = false;
  std::exception_ptr error;
};

void* run_spare_stack_task(void* arg) {
  auto* task = static_cast<SpareStackTask*>(arg);
  try {
    EquivChecker ck;
    task->result = ck.equivalent(task->r, *task->t1, *task->t2);
  } catch (...) {
    task->error = std::current_exception();
  }
  return nullptr;
}

bool equivalent_on_spare_stack(Relation r, const TermPtr& t1, const TermPtr& t2) {
  SpareStackTask task{r, &t1, &t2, false, nullptr};
  pthread_attr_t attr;
  pthread_t thread;
  bool spawned = pthread_attr_init(&attr) == 0;
  if (spawned) {
    spawned = pthread_attr_setstacksize(&attr, std::size_t{512} << 20) == 0 &&
              pthread_create(&thread, &attr, run_spare_stack_task, &task) == 0;
    pthread_attr_destroy(&attr);
  }
  if (!spawned) {  // fall back to the calling thread's stack
    EquivChecker ck;
    return ck.equivalent(r, t1, t2);
  }
  pthread_join(thread, nullptr);
  if (task.error) std::rethrow_exception(task.error);
  return task.result;
}

}  // namespace

bool closed_instances_equivalent(Relation r, CanonConfig c1, CanonConfig c2,
                                 const Alphabet& alphabet) {
  Alphabet a = alphabet;
  if (a.empty()) a.insert("a");
  const std::string base = *a.begin();
  std::set<std::string> vars = config_free_vars(c1);
  for (const auto& v : config_free_vars(c2)) vars.insert(v);
  std::set<IndexedVar> ivs(c1.ivars.begin(), c1.ivars.end());
  ivs.insert(c2.ivars.begin(), c2.ivars.end());
  if (!vars.empty() || !ivs.empty()) {
    // One simultaneous witness substitution decides the quantified question:
    // every variable receives a chain of the base name longer than the
    // number of reachable configurations, so no chain can be confused with
    // anything already present, and the lengths are pairwise distinct, so no
    // two variables can be confused with each other. Indexed variables take
    // the shorter lengths, starting at k + 1, plain variables follow.
    const std::size_t k =
        build_lts(c1, a).states.size() + build_lts(c2, a).states.size();
    Substitution sigma;
    std::size_t len = k + 1;
    for (const auto& iv : ivs) sigma.indexed[iv] = chain(base, len++);
    for (const auto& v : vars) sigma.plain[v] = chain(base, len++);
    c1 = apply_substitution(c1, sigma);
    c2 = apply_substitution(c2, sigma);
  }
  TermPtr t1 = c1.term ? c1.term : Term::nil();
  TermPtr t2 = c2.term ? c2.term : Term::nil();
  return equivalent_on_spare_stack(r, t1, t2);
}

}  // namespace ccslc
