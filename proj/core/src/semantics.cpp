#include "ccslc/semantics.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace ccslc {

// ── labels ────────────────────────────────────────────────────────────────

TransitionLabel TransitionLabel::action(Action mu) {
  TransitionLabel l;
  l.kind = Kind::Act;
  l.act = std::move(mu);
  return l;
}

TransitionLabel TransitionLabel::trig_plain(std::string x, Action mu) {
  TransitionLabel l;
  l.kind = Kind::TrigPlain;
  l.x = std::move(x);
  l.act = std::move(mu);
  return l;
}

TransitionLabel TransitionLabel::trig_synch(std::string x, Action alpha) {
  assert(alpha.is_visible());
  TransitionLabel l;
  l.kind = Kind::TrigSynch;
  l.x = std::move(x);
  l.act = std::move(alpha);
  return l;
}

TransitionLabel TransitionLabel::comm(std::string x, std::string y) {
  TransitionLabel l;
  l.kind = Kind::Comm;
  if (y < x) std::swap(x, y);
  l.x = std::move(x);
  l.y = std::move(y);
  l.act = Action::tau();
  return l;
}

TransitionLabel TransitionLabel::ivar(std::string x, Action mu) {
  TransitionLabel l;
  l.kind = Kind::IVar;
  l.x = std::move(x);
  l.act = std::move(mu);
  return l;
}

std::string TransitionLabel::str() const {
  switch (kind) {
    case Kind::Act: return act.str();
    case Kind::TrigPlain: return "(" + x + "):" + act.str();
    case Kind::TrigSynch: return "(" + x + "):" + act.str() + ",tau";
    case Kind::Comm: return "(" + x + "," + y + "):tau";
    case Kind::IVar: return x + "@" + act.str();
  }
  return {};
}

std::size_t TransitionLabel::hash() const {
  std::size_t h = static_cast<std::size_t>(kind) * 0x9e3779b97f4a7c15ull;
  h = (h ^ act.hash()) * 1099511628211ull;
  h = (h ^ std::hash<std::string>{}(x)) * 1099511628211ull;
  h = (h ^ std::hash<std::string>{}(y)) * 1099511628211ull;
  return h;
}

bool operator==(const TransitionLabel& a, const TransitionLabel& b) {
  return a.kind == b.kind && a.act == b.act && a.x == b.x && a.y == b.y;
}

bool operator<(const TransitionLabel& a, const TransitionLabel& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.act != b.act) return a.act < b.act;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// ── term steps ────────────────────────────────────────────────────────────

namespace {

using RawStep = std::pair<Action, TermPtr>;

std::vector<RawStep> raw_steps(const TermPtr& t) {
  std::vector<RawStep> out;
  switch (t->kind()) {
    case TermKind::Nil:
    case TermKind::Var:
      break;
    case TermKind::Prefix:
      out.emplace_back(t->act(), t->body());
      break;
    case TermKind::Choice: {
      out = raw_steps(t->left());
      auto r = raw_steps(t->right());
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case TermKind::Parallel: {
      auto ls = raw_steps(t->left());
      auto rs = raw_steps(t->right());
      for (const auto& [mu, l2] : ls)
        out.emplace_back(mu, Term::parallel(l2, t->right()));
      for (const auto& [mu, r2] : rs)
        out.emplace_back(mu, Term::parallel(t->left(), r2));
      for (const auto& [alpha, l2] : ls) {
        if (!alpha.is_visible()) continue;
        const Action bar = alpha.complement();
        for (const auto& [beta, r2] : rs)
          if (beta == bar) out.emplace_back(Action::tau(), Term::parallel(l2, r2));
      }
      break;
    }
    case TermKind::LeftMerge: {
      for (const auto& [mu, l2] : raw_steps(t->left()))
        out.emplace_back(mu, Term::parallel(l2, t->right()));
      break;
    }
    case TermKind::CommMerge: {
      auto ls = raw_steps(t->left());
      auto rs = raw_steps(t->right());
      for (const auto& [alpha, l2] : ls) {
        if (!alpha.is_visible()) continue;
        const Action bar = alpha.complement();
        for (const auto& [beta, r2] : rs)
          if (beta == bar) out.emplace_back(Action::tau(), Term::parallel(l2, r2));
      }
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<Action, TermPtr>> step_term(const TermPtr& t) {
  auto raw = raw_steps(t);
  std::vector<std::pair<Action, TermPtr>> out;
  out.reserve(raw.size());
  for (auto& [mu, target] : raw) out.emplace_back(mu, canonical(target));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return structural_compare(a.second, b.second) < 0;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) {
                          return a.first == b.first && structural_equal(a.second, b.second);
                        }),
            out.end());
  return out;
}

// ── configuration steps ───────────────────────────────────────────────────

namespace {

struct RhoStep {
  TransitionLabel label;
  CanonConfig target;
  Action first_var_act;  // for Comm labels: what label.x performs
};

CanonConfig ivar_config(const std::string& x, const Action& mu) {
  CanonConfig c;
  c.ivars.emplace_back(x, mu);
  return c;
}

RhoStep make_comm(const std::string& x, const Action& alpha, const std::string& y,
                  CanonConfig target) {
  RhoStep s;
  s.label = TransitionLabel::comm(x, y);
  s.target = std::move(target);
  // The label is sorted; record the action its first variable performs.
  s.first_var_act = (s.label.x == x) ? alpha : alpha.complement();
  return s;
}

// Transitions of a term on behalf of its variables (the decorated labels).
std::vector<RhoStep> rho_steps(const TermPtr& t, const std::vector<Action>& actions) {
  std::vector<RhoStep> out;
  switch (t->kind()) {
    case TermKind::Nil:
    case TermKind::Prefix:
      break;
    case TermKind::Var: {
      for (const Action& mu : actions)
        out.push_back({TransitionLabel::trig_plain(t->var_name(), mu),
                       ivar_config(t->var_name(), mu), mu});
      break;
    }
    case TermKind::Choice: {
      out = rho_steps(t->left(), actions);
      auto r = rho_steps(t->right(), actions);
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case TermKind::Parallel: {
      auto ls = rho_steps(t->left(), actions);
      auto rs = rho_steps(t->right(), actions);
      auto lsteps = raw_steps(t->left());
      auto rsteps = raw_steps(t->right());
      // A variable move on one side; the other side rides along unchanged.
      for (const auto& e : ls)
        out.push_back({e.label, config_par(e.target, t->right()), e.first_var_act});
      for (const auto& e : rs)
        out.push_back({e.label, config_par(e.target, t->left()), e.first_var_act});
      // Two variables synchronize across the composition.
      for (const auto& e : ls) {
        if (e.label.kind != TransitionLabel::Kind::TrigPlain || !e.label.act.is_visible())
          continue;
        const Action bar = e.label.act.complement();
        for (const auto& f : rs) {
          if (f.label.kind != TransitionLabel::Kind::TrigPlain || !(f.label.act == bar))
            continue;
          out.push_back(make_comm(e.label.x, e.label.act, f.label.x,
                                  config_par(e.target, f.target)));
        }
      }
      // A variable synchronizes with a complementary step of the other side.
      for (const auto& e : ls) {
        if (e.label.kind != TransitionLabel::Kind::TrigPlain || !e.label.act.is_visible())
          continue;
        const Action bar = e.label.act.complement();
        for (const auto& [beta, r2] : rsteps)
          if (beta == bar)
            out.push_back({TransitionLabel::trig_synch(e.label.x, e.label.act),
                           config_par(e.target, r2), e.label.act});
      }
      for (const auto& f : rs) {
        if (f.label.kind != TransitionLabel::Kind::TrigPlain || !f.label.act.is_visible())
          continue;
        const Action bar = f.label.act.complement();
        for (const auto& [beta, l2] : lsteps)
          if (beta == bar)
            out.push_back({TransitionLabel::trig_synch(f.label.x, f.label.act),
                           config_par(f.target, l2), f.label.act});
      }
      break;
    }
    case TermKind::LeftMerge: {
      // Only the left argument may move first; the right rides along.
      for (const auto& e : rho_steps(t->left(), actions))
        out.push_back({e.label, config_par(e.target, t->right()), e.first_var_act});
      break;
    }
    case TermKind::CommMerge: {
      auto ls = rho_steps(t->left(), actions);
      auto rs = rho_steps(t->right(), actions);
      auto lsteps = raw_steps(t->left());
      auto rsteps = raw_steps(t->right());
      for (const auto& e : ls) {
        if (e.label.kind != TransitionLabel::Kind::TrigPlain || !e.label.act.is_visible())
          continue;
        const Action bar = e.label.act.complement();
        for (const auto& f : rs) {
          if (f.label.kind != TransitionLabel::Kind::TrigPlain || !(f.label.act == bar))
            continue;
          out.push_back(make_comm(e.label.x, e.label.act, f.label.x,
                                  config_par(e.target, f.target)));
        }
        for (const auto& [beta, r2] : rsteps)
          if (beta == bar)
            out.push_back({TransitionLabel::trig_synch(e.label.x, e.label.act),
                           config_par(e.target, r2), e.label.act});
      }
      for (const auto& f : rs) {
        if (f.label.kind != TransitionLabel::Kind::TrigPlain || !f.label.act.is_visible())
          continue;
        const Action bar = f.label.act.complement();
        for (const auto& [beta, l2] : lsteps)
          if (beta == bar)
            out.push_back({TransitionLabel::trig_synch(f.label.x, f.label.act),
                           config_par(f.target, l2), f.label.act});
      }
      break;
    }
  }
  return out;
}

bool transition_less(const ConfigTransition& a, const ConfigTransition& b) {
  if (!(a.label == b.label)) return a.label < b.label;
  if (int c = compare(a.target, b.target); c != 0) return c < 0;
  return a.first_var_act < b.first_var_act;
}

bool transition_eq(const ConfigTransition& a, const ConfigTransition& b) {
  return a.label == b.label && a.target == b.target && a.first_var_act == b.first_var_act;
}

}  // namespace

std::vector<ConfigTransition> step_config(const CanonConfig& c, const Alphabet& alphabet) {
  std::vector<ConfigTransition> out;
  // Indexed-variable self-loops.
  for (std::size_t i = 0; i < c.ivars.size(); ++i) {
    if (i > 0 && c.ivars[i] == c.ivars[i - 1]) continue;
    out.push_back({TransitionLabel::ivar(c.ivars[i].first, c.ivars[i].second),
                   c, c.ivars[i].second});
  }
  if (c.term) {
    CanonConfig rest;
    rest.ivars = c.ivars;
    // Plain steps of the term component.
    for (const auto& [mu, t2] : step_term(c.term)) {
      CanonConfig target = rest;
      target.term = t2;
      out.push_back({TransitionLabel::action(mu), std::move(target), mu});
    }
    // Variable-decorated steps of the term component.
    for (const auto& e : rho_steps(c.term, all_actions(alphabet)))
      out.push_back({e.label, config_par(rest, e.target), e.first_var_act});
  }
  std::sort(out.begin(), out.end(), transition_less);
  out.erase(std::unique(out.begin(), out.end(), transition_eq), out.end());
  return out;
}

// ── transition systems ────────────────────────────────────────────────────

int Lts::num_edges() const {
  int n = 0;
  for (const auto& v : out) n += static_cast<int>(v.size());
  return n;
}

namespace {

struct Builder {
  const Alphabet& alphabet;
  std::size_t max_states;
  std::unordered_map<CanonConfig, int> index;
  Lts lts;

  int intern(const CanonConfig& c) {
    auto it = index.find(c);
    if (it != index.end()) return it->second;
    if (lts.states.size() >= max_states)
      throw std::runtime_error("transition system exceeds the state limit (" +
                               std::to_string(max_states) + " states)");
    int id = static_cast<int>(lts.states.size());
    index.emplace(c, id);
    lts.states.push_back(c);
    lts.out.emplace_back();
    return id;
  }

  void explore(int from) {
    for (std::size_t s = from; s < lts.states.size(); ++s) {
      // states grows during the loop; index s stays valid. intern() may
      // reallocate lts.out, so collect edges locally first.
      auto transitions = step_config(lts.states[s], alphabet);
      std::vector<LtsTransition> edges;
      edges.reserve(transitions.size());
      for (const auto& tr : transitions) {
        int to = intern(tr.target);
        edges.push_back({tr.label, to});
      }
      std::sort(edges.begin(), edges.end(), [](const LtsTransition& a, const LtsTransition& b) {
        if (!(a.label == b.label)) return a.label < b.label;
        return a.target < b.target;
      });
      edges.erase(std::unique(edges.begin(), edges.end(),
                              [](const LtsTransition& a, const LtsTransition& b) {
                                return a.label == b.label && a.target == b.target;
                              }),
                  edges.end());
      lts.out[s] = std::move(edges);
    }
  }
};

}  // namespace

Lts build_lts(const CanonConfig& root, const Alphabet& alphabet, std::size_t max_states) {
  Builder b{alphabet, max_states, {}, {}};
  b.lts.root = b.intern(root);
  b.explore(0);
  return std::move(b.lts);
}

Lts build_lts(const TermPtr& term, const Alphabet& alphabet, std::size_t max_states) {
  return build_lts(config_of_term(term), alphabet, max_states);
}

LtsPair build_lts_pair(const CanonConfig& c1, const CanonConfig& c2,
                       const Alphabet& alphabet, std::size_t max_states) {
  Builder b{alphabet, max_states, {}, {}};
  LtsPair out;
  out.root1 = b.intern(c1);
  out.root2 = b.intern(c2);
  b.explore(0);
  out.lts = std::move(b.lts);
  out.lts.root = out.root1;
  return out;
}

std::vector<int> epsilon_closure(const Lts& lts, int s) {
  std::vector<int> seen;
  std::vector<char> mark(lts.states.size(), 0);
  std::deque<int> work{s};
  mark[s] = 1;
  while (!work.empty()) {
    int cur = work.front();
    work.pop_front();
    seen.push_back(cur);
    for (const auto& tr : lts.out[cur]) {
      if (tr.label.is_silent() && !mark[tr.target]) {
        mark[tr.target] = 1;
        work.push_back(tr.target);
      }
    }
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

// ── instantiating configuration transitions ───────────────────────────────

std::string to_string(ExplainMechanism m) {
  switch (m) {
    case ExplainMechanism::TermStep: return "term-step";
    case ExplainMechanism::VarTrigger: return "variable-trigger";
    case ExplainMechanism::SynchTrigger: return "synch-trigger";
    case ExplainMechanism::PairTrigger: return "pair-trigger";
  }
  return {};
}

namespace {

int compare_substitution(const Substitution& a, const Substitution& b) {
  if (a.indexed.size() != b.indexed.size())
    return a.indexed.size() < b.indexed.size() ? -1 : 1;
  auto ia = a.indexed.begin(), ib = b.indexed.begin();
  for (; ia != a.indexed.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (int c = structural_compare(ia->second, ib->second); c != 0) return c;
  }
  return 0;
}

bool explanation_less(const Explanation& a, const Explanation& b) {
  if (a.mechanism != b.mechanism)
    return static_cast<int>(a.mechanism) < static_cast<int>(b.mechanism);
  if (!(a.via == b.via)) return a.via < b.via;
  if (a.action != b.action) return a.action < b.action;
  if (int c = structural_compare(a.target, b.target); c != 0) return c < 0;
  return compare_substitution(a.extension, b.extension) < 0;
}

bool explanation_eq(const Explanation& a, const Explanation& b) {
  return !explanation_less(a, b) && !explanation_less(b, a);
}

TermPtr closed_instance(const CanonConfig& cfg, const Substitution& sigma) {
  CanonConfig inst = apply_substitution(cfg, sigma);
  if (!inst.closed())
    throw std::invalid_argument("substitution does not close the configuration");
  return inst.term;
}

}  // namespace

std::vector<Explanation> derive_instance_steps(const TermPtr& t, const Substitution& sigma,
                                               const Alphabet& alphabet) {
  for (const auto& v : free_vars(t)) {
    auto it = sigma.plain.find(v);
    if (it == sigma.plain.end() || !it->second->closed())
      throw std::invalid_argument("substitution does not close the term (variable " + v + ")");
  }

  std::vector<Explanation> out;

  // Mechanism 1: a step of the term itself, pushed through sigma.
  for (const auto& [mu, t2] : step_term(t)) {
    Explanation e;
    e.mechanism = ExplainMechanism::TermStep;
    e.via = TransitionLabel::action(mu);
    e.action = mu;
    e.target = canonical(apply_substitution(t2, sigma));
    out.push_back(std::move(e));
  }

  // Mechanisms 2-4: variable-decorated configuration transitions instantiated
  // with actual steps of the variables' images.
  for (const auto& ct : step_config(config_of_term(t), alphabet)) {
    switch (ct.label.kind) {
      case TransitionLabel::Kind::Act:
      case TransitionLabel::Kind::IVar:
        break;  // Act is mechanism 1; IVar cannot occur for a pure term
      case TransitionLabel::Kind::TrigPlain: {
        const auto& image = sigma.plain.at(ct.label.x);
        for (const auto& [nu, p] : step_term(image)) {
          if (!(nu == ct.label.act)) continue;
          Explanation e;
          e.mechanism = ExplainMechanism::VarTrigger;
          e.via = ct.label;
          e.extension.indexed[{ct.label.x, ct.label.act}] = p;
          Substitution full = sigma;
          full.indexed = e.extension.indexed;
          e.action = ct.label.act;
          e.target = closed_instance(ct.target, full);
          out.push_back(std::move(e));
        }
        break;
      }
      case TransitionLabel::Kind::TrigSynch: {
        const auto& image = sigma.plain.at(ct.label.x);
        for (const auto& [nu, p] : step_term(image)) {
          if (!(nu == ct.label.act)) continue;
          Explanation e;
          e.mechanism = ExplainMechanism::SynchTrigger;
          e.via = ct.label;
          e.extension.indexed[{ct.label.x, ct.label.act}] = p;
          Substitution full = sigma;
          full.indexed = e.extension.indexed;
          e.action = Action::tau();
          e.target = closed_instance(ct.target, full);
          out.push_back(std::move(e));
        }
        break;
      }
      case TransitionLabel::Kind::Comm: {
        const Action ax = ct.first_var_act;
        const Action ay = ax.complement();
        const auto& ix = sigma.plain.at(ct.label.x);
        const auto& iy = sigma.plain.at(ct.label.y);
        for (const auto& [nux, p] : step_term(ix)) {
          if (!(nux == ax)) continue;
          for (const auto& [nuy, q] : step_term(iy)) {
            if (!(nuy == ay)) continue;
            Explanation e;
            e.mechanism = ExplainMechanism::PairTrigger;
            e.via = ct.label;
            e.extension.indexed[{ct.label.x, ax}] = p;
            e.extension.indexed[{ct.label.y, ay}] = q;
            Substitution full = sigma;
            full.indexed = e.extension.indexed;
            e.action = Action::tau();
            e.target = closed_instance(ct.target, full);
            out.push_back(std::move(e));
          }
        }
        break;
      }
    }
  }

  std::sort(out.begin(), out.end(), explanation_less);
  out.erase(std::unique(out.begin(), out.end(), explanation_eq), out.end());
  return out;
}

std::vector<Explanation> explain_transition(const TermPtr& t, const Substitution& sigma,
                                            const Action& mu, const TermPtr& target,
                                            const Alphabet& alphabet) {
  const TermPtr want = canonical(target);
  std::vector<Explanation> out;
  for (auto& e : derive_instance_steps(t, sigma, alphabet)) {
    if (e.action == mu && structural_equal(e.target, want)) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace ccslc
