#include "ccslc/prover.hpp"

#include <cassert>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ccslc/equiv.hpp"
#include "ccslc/normalize.hpp"

namespace ccslc {

namespace {

struct TermPairLess {
  bool operator()(const std::pair<TermPtr, TermPtr>& a,
                  const std::pair<TermPtr, TermPtr>& b) const {
    int c = structural_compare(a.first, b.first);
    if (c != 0) return c < 0;
    return structural_compare(a.second, b.second) < 0;
  }
};

class Prover {
 public:
  explicit Prover(const AxiomSystem& system) : sys_(system) {}

  Pf prefixed(const TermPtr& t, const TermPtr& u, Action mu) {
    require_bb(t, u);
    NormalizeResult nt = normalize(t, sys_);
    NormalizeResult nu = normalize(u, sys_);
    Pf core = ppb(nt.normal_form, nu.normal_form, mu);
    return Pf::cong_prefix(mu, nt.proof)
        .then(core)
        .then(Pf::cong_prefix(mu, nu.proof.reversed()));
  }

  Pf equal(const TermPtr& t, const TermPtr& u) {
    Decision d = decide_with_witness(Relation::RootedBranching,
                                     config_of_term(t), config_of_term(u),
                                     sys_.alphabet());
    if (!d.related)
      throw ProveError("not rooted branching bisimilar: " + pretty(t) +
                           "  vs  " + pretty(u),
                       d.witness);
    NormalizeResult nt = normalize(t, sys_);
    NormalizeResult nu = normalize(u, sys_);
    const TermPtr& n = nt.normal_form;
    const TermPtr& m = nu.normal_form;
    if (ac_equal(n, m)) return nt.proof.then(nu.proof.reversed());
    // Rootedness gives exact top-level matching, so the two normal forms
    // absorb each other summand by summand: n = n+m = m+n = m.
    Pf e1 = absorb_all(n, m);
    Pf e2 = absorb_all(m, n);
    return nt.proof.then(e1).then(e2.reversed()).then(nu.proof.reversed());
  }

 private:
  using Sub = std::vector<std::pair<std::string, TermPtr>>;

  Pf ax(const std::string& name, Sub subst) {
    return Pf::axiom(sys_, name, std::move(subst));
  }

  // ── semantic side conditions (cached) ─────────────────────────────────

  bool bb(const TermPtr& a, const TermPtr& b) {
    TermPtr ca = canonical(a), cb = canonical(b);
    if (structural_compare(cb, ca) < 0) std::swap(ca, cb);
    auto key = std::make_pair(ca, cb);
    auto it = bb_cache_.find(key);
    if (it != bb_cache_.end()) return it->second;
    bool r = equivalent(Relation::Branching, config_of_term(ca),
                        config_of_term(cb), sys_.alphabet());
    bb_cache_.emplace(std::move(key), r);
    return r;
  }

  void require_bb(const TermPtr& t, const TermPtr& u) {
    if (bb(t, u)) return;
    Decision d = decide_with_witness(Relation::Branching, config_of_term(t),
                                     config_of_term(u), sys_.alphabet());
    throw ProveError("not branching bisimilar: " + pretty(t) + "  vs  " +
                         pretty(u),
                     d.witness);
  }

  // ── absorbing tau-summands ────────────────────────────────────────────

  // Whether summand s of a normal form equivalent to `whole` is absorbing:
  // a tau prefix whose body is branching bisimilar to the whole sum.
  bool absorbing(const TermPtr& s, const TermPtr& whole) {
    return s->kind() == TermKind::Prefix && s->act().is_tau() &&
           bb(s->body(), whole);
  }

  // Follow first absorbing summands down to an absorbing-free normal form
  // (every step keeps the branching bisimilarity class, sizes shrink).
  TermPtr absorbing_free_descendant(TermPtr n) {
  restart:
    for (const TermPtr& s : summands(n)) {
      if (n->is_nil()) break;
      if (absorbing(s, n)) {
        n = s->body();
        goto restart;
      }
    }
    return n;
  }

  // ── the recursion of the completeness proof ───────────────────────────

  // Proof of mu.n = mu.m for branching bisimilar normal forms n, m.
  Pf ppb(const TermPtr& n, const TermPtr& m, Action mu) {
    if (ac_equal(n, m)) return Pf::cong_prefix(mu, Pf::refl(n));
    TermPtr nstar = absorbing_free_descendant(n);
    TermPtr mstar = absorbing_free_descendant(m);
    Pf core = root_exact(nstar, mstar, mu);
    if (!structural_equal(nstar, n))
      core = collapse_absorbing(n, nstar, mu).then(core);
    if (!structural_equal(mstar, m))
      core = core.then(collapse_absorbing(m, mstar, mu).reversed());
    return core;
  }

  // Proof of mu.n = mu.nstar where nstar is n's absorbing-free descendant:
  // rewrite every absorbing summand to tau.nstar, fuse the copies, and fire
  // the branching law TB once.
  Pf collapse_absorbing(const TermPtr& n, const TermPtr& nstar, Action mu) {
    TermPtr tstar = Term::prefix(Action::tau(), nstar);
    Pf body = Pf::refl(n);
    // Rewrite pass: any absorbing summand not already tau.nstar.
    for (;;) {
      std::vector<TermPtr> parts = summands(body.rhs());
      std::optional<std::size_t> at;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (ac_equal(parts[i], tstar)) continue;
        if (absorbing(parts[i], nstar)) {
          at = i;
          break;
        }
      }
      if (!at) break;
      Pf rw = ppb(parts[*at]->body(), nstar, Action::tau());
      std::vector<TermPtr> rest = parts;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*at));
      body = body.then(rest.empty()
                           ? rw
                           : Pf::cong(TermKind::Choice,
                                      Pf::refl(make_choice(rest)), rw));
    }
    // Fuse duplicate tau.nstar copies with idempotence.
    for (;;) {
      std::vector<TermPtr> parts = summands(body.rhs());
      std::vector<TermPtr> rest;
      int copies = 0;
      for (const TermPtr& p : parts) {
        if (copies < 2 && ac_equal(p, tstar))
          ++copies;
        else
          rest.push_back(p);
      }
      if (copies < 2) break;
      Pf fuse = ax("A3", {{"x", tstar}});
      body = body.then(rest.empty() ? fuse
                                    : Pf::cong(TermKind::Choice,
                                               Pf::refl(make_choice(rest)),
                                               fuse));
    }
    // Now body: n = tau.nstar + n0 with n0 absorbing-free (possibly absent).
    std::vector<TermPtr> parts = summands(body.rhs());
    std::vector<TermPtr> others;
    bool seen = false;
    for (const TermPtr& p : parts) {
      if (!seen && ac_equal(p, tstar)) {
        seen = true;
        continue;
      }
      others.push_back(p);
    }
    assert(seen);
    TermPtr n0;
    if (others.empty()) {
      n0 = Term::nil();
      body = body.then(ax("A0_sym", {{"x", tstar}}));  // force a literal +0
    } else {
      n0 = make_choice(others);
    }
    // nstar = nstar + n0, the key absorption.
    Pf grow = n0->is_nil() ? ax("A0_sym", {{"x", nstar}})
                           : absorb_all(nstar, n0);
    Pf whole = Pf::cong_prefix(mu, body);
    whole = whole.then(Pf::cong_prefix(
        mu, Pf::cong(TermKind::Choice, Pf::cong_prefix(Action::tau(), grow),
                     Pf::refl(n0))));
    whole = whole.then(ax("TB[" + mu.str() + "]", {{"x", nstar}, {"y", n0}}));
    return whole.then(Pf::cong_prefix(mu, grow.reversed()));
  }

  // Proof of mu.n = mu.m for absorbing-free branching bisimilar normal
  // forms: absorb each side into the other and cancel.
  Pf root_exact(const TermPtr& n, const TermPtr& m, Action mu) {
    if (ac_equal(n, m)) return Pf::cong_prefix(mu, Pf::refl(n));
    Pf e1 = absorb_all(n, m);
    Pf e2 = absorb_all(m, n);
    return Pf::cong_prefix(mu, e1.then(e2.reversed()));
  }

  // Proof of base = base + add, one absorbed summand of add at a time.
  Pf absorb_all(const TermPtr& base, const TermPtr& add) {
    if (add->is_nil()) return ax("A0_sym", {{"x", base}});
    Pf pf = Pf::refl(base);
    for (const TermPtr& v : summands(add)) {
      auto [w, weq] = find_match(base, v);
      std::vector<TermPtr> parts = summands(pf.rhs());
      std::vector<TermPtr> rest;
      bool dropped = false;
      for (const TermPtr& p : parts) {
        if (!dropped && structural_equal(p, w)) {
          dropped = true;
          continue;
        }
        rest.push_back(p);
      }
      assert(dropped);
      Pf dup = ax("A3_sym", {{"x", w}});
      pf = pf.then(rest.empty() ? dup
                                : Pf::cong(TermKind::Choice,
                                           Pf::refl(make_choice(rest)), dup));
      rest.push_back(w);
      pf = pf.then(
          Pf::cong(TermKind::Choice, Pf::refl(make_choice(rest)), weq));
    }
    return pf;
  }

  // A summand w of base with a proof of w = v. Exists whenever base and v's
  // sum are related tightly enough (exact rooted matching, or matching of
  // absorbing-free forms), which the callers guarantee.
  std::pair<TermPtr, Pf> find_match(const TermPtr& base, const TermPtr& v) {
    // Cheap pass: a summand that is already v modulo AC.
    for (const TermPtr& w : summands(base))
      if (ac_equal(w, v)) return {w, Pf::refl(w)};
    for (const TermPtr& w : summands(base)) {
      if (w->kind() != v->kind()) continue;
      if (v->kind() == TermKind::Prefix) {
        if (!(w->act() == v->act())) continue;
        if (!bb(w->body(), v->body())) continue;
        return {w, ppb(w->body(), v->body(), v->act())};
      }
      assert(v->kind() == TermKind::LeftMerge);
      const TermPtr& hv = v->left();
      const TermPtr& hw = w->left();
      bool same = structural_equal(hw, hv);
      bool swapped = !same && hw->kind() == TermKind::CommMerge &&
                     hv->kind() == TermKind::CommMerge &&
                     structural_equal(hw->left(), hv->right()) &&
                     structural_equal(hw->right(), hv->left());
      if (!same && !swapped) continue;
      if (!bb(w->right(), v->right())) continue;
      Pf pf = Pf::refl(w);
      if (swapped)
        pf = pf.then(Pf::cong(
            TermKind::LeftMerge,
            ax("C1", {{"x", hw->left()}, {"y", hw->right()}}),
            Pf::refl(w->right())));
      // hv |> B1 = hv |> tau.B1 = hv |> tau.B2 = hv |> B2.
      pf = pf.then(ax("TL_sym", {{"x", hv}, {"y", w->right()}}));
      pf = pf.then(Pf::cong(TermKind::LeftMerge, Pf::refl(hv),
                            ppb(w->right(), v->right(), Action::tau())));
      pf = pf.then(ax("TL", {{"x", hv}, {"y", v->right()}}));
      return {w, pf};
    }
    throw ProveError(
        "prover invariant violated: no summand of " + pretty(base) +
        " matches " + pretty(v));
  }

  const AxiomSystem& sys_;
  std::map<std::pair<TermPtr, TermPtr>, bool, TermPairLess> bb_cache_;
};

}  // namespace

Pf prove_prefixed_bb(const TermPtr& t, const TermPtr& u, Action mu,
                     const AxiomSystem& system) {
  return Prover(system).prefixed(t, u, mu);
}

Pf prove_equal(const TermPtr& t, const TermPtr& u, const AxiomSystem& system) {
  return Prover(system).equal(t, u);
}

}  // namespace ccslc
