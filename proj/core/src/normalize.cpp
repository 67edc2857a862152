#include "ccslc/normalize.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ccslc {

namespace {

// ── grammar check ──────────────────────────────────────────────────────────

bool head_ok(const TermPtr& h) {
  if (h->kind() == TermKind::Var) return true;
  if (h->kind() != TermKind::CommMerge) return false;
  if (h->left()->kind() != TermKind::Var) return false;
  const TermPtr& r = h->right();
  if (r->kind() == TermKind::Var) return true;
  return r->kind() == TermKind::Prefix && r->act().is_visible() &&
         r->body()->is_nil();
}

bool is_nf(const TermPtr& t);

bool is_simple_nf(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Prefix:
      return is_nf(t->body());
    case TermKind::LeftMerge:
      return head_ok(t->left()) && is_nf(t->right());
    default:
      return false;
  }
}

bool is_nf(const TermPtr& t) {
  if (t->is_nil()) return true;
  for (const TermPtr& s : summands(t))
    if (!is_simple_nf(s)) return false;
  return true;
}

// ── proof-producing rewriter ───────────────────────────────────────────────
//
// Every helper returns a proof whose right side has the promised shape; the
// left side is always AC-equal to the term named in the comment, which is
// all `Pf::then` needs to chain steps. Helpers marked [normal args] require
// their term arguments to be normal forms already.

class Normalizer {
 public:
  explicit Normalizer(const AxiomSystem& system) : sys_(system) {
    if (sys_.alphabet().empty())
      throw std::invalid_argument(
          "normalize: the axiom system's alphabet is empty; at least one "
          "name is needed to eliminate tau-headed communication merges");
    base_ = *sys_.alphabet().begin();
  }

  Pf run(const TermPtr& t) { return nf(t); }

 private:
  using Sub = std::vector<std::pair<std::string, TermPtr>>;

  Pf ax(const std::string& name, Sub subst) {
    return Pf::axiom(sys_, name, std::move(subst));
  }

  // Drop literal 0 summands from the right side of `pf` until none remain
  // (or the whole term is 0).
  Pf cleanup(Pf pf) {
    for (;;) {
      std::vector<TermPtr> parts = summands(canonical(pf.rhs()));
      if (parts.size() <= 1) return pf;
      std::vector<TermPtr> rest;
      bool dropped = false;
      for (const TermPtr& p : parts) {
        if (!dropped && p->is_nil()) {
          dropped = true;
          continue;
        }
        rest.push_back(p);
      }
      if (!dropped) return pf;
      pf = pf.then(ax("A0", {{"x", make_choice(rest)}}));
    }
  }

  // N || 0 = N for arbitrary N.
  Pf zero_par_elim(const TermPtr& n) {
    Pf pf = ax("P", {{"x", n}, {"y", Term::nil()}});
    Pf comm_zero = ax("C1", {{"x", n}, {"y", Term::nil()}})
                       .then(ax("C0", {{"x", n}}));
    pf = pf.then(Pf::cong(
        TermKind::Choice,
        Pf::cong(TermKind::Choice, ax("L3", {{"x", n}}), ax("L0", {{"x", n}})),
        comm_zero));
    return cleanup(pf);
  }

  // tau.B | M = 0: dress tau.B up as a synchronization a.B | ~a.0 and kill
  // the resulting nested communication merge with C7.
  Pf dt3(const TermPtr& b, const TermPtr& m) {
    Action a = Action::name(base_);
    Action abar = Action::coname(base_);
    std::string c4 = "C4[" + a.str() + "," + abar.str() + "]_sym";
    Pf intro = Pf::cong_prefix(Action::tau(), zero_par_elim(b).reversed())
                   .then(ax(c4, {{"x", b}, {"y", Term::nil()}}));
    TermPtr left = Term::prefix(a, b);
    TermPtr right = Term::prefix(abar, Term::nil());
    return Pf::cong(TermKind::CommMerge, intro, Pf::refl(m))
        .then(ax("C7", {{"x", left}, {"y", right}, {"z", m}}));
  }

  // A simple term viewed as head |> body, with a proof rewriting it there.
  struct HeadForm {
    TermPtr head, body;
    Pf pf;
  };

  // [normal arg] simple s (prefix or merge shape) → head |> body.
  HeadForm to_head_form(const TermPtr& s) {
    if (s->kind() == TermKind::LeftMerge)
      return {s->left(), s->right(), Pf::refl(s)};
    assert(s->kind() == TermKind::Prefix);
    Action mu = s->act();
    TermPtr b = s->body();
    std::string l1 = "L1[" + mu.str() + "]_sym";
    Pf pf = Pf::cong_prefix(mu, zero_par_elim(b).reversed())
                .then(ax(l1, {{"x", Term::nil()}, {"y", b}}));
    return {Term::prefix(mu, Term::nil()), b, pf};
  }

  // Heads are nil-prefixes, variables, or two-element communication merges
  // of those; rewrite g | h to 0, x | alpha.0, or x | y.
  Pf head_nf(const TermPtr& g, const TermPtr& h) {
    if (g->kind() == TermKind::CommMerge)
      return ax("C7", {{"x", g->left()}, {"y", g->right()}, {"z", h}});
    if (h->kind() == TermKind::CommMerge)
      return ax("C1", {{"x", g}, {"y", h}})
          .then(ax("C7", {{"x", h->left()}, {"y", h->right()}, {"z", g}}));
    if (g->kind() == TermKind::Var) {
      if (h->kind() == TermKind::Var) return Pf::refl(Term::comm_merge(g, h));
      assert(h->kind() == TermKind::Prefix);
      if (h->act().is_visible()) return Pf::refl(Term::comm_merge(g, h));
      return ax("C1", {{"x", g}, {"y", h}}).then(dt3(h->body(), g));
    }
    assert(g->kind() == TermKind::Prefix);
    if (g->act().is_tau()) return dt3(g->body(), h);
    // Visible prefix on the left of a variable: swap and retry.
    assert(h->kind() == TermKind::Var);
    return ax("C1", {{"x", g}, {"y", h}}).then(head_nf(h, g));
  }

  // [normal args] N || M = normal form.
  Pf par_nf(const TermPtr& n, const TermPtr& m) {
    Pf pf = ax("P", {{"x", n}, {"y", m}});
    pf = pf.then(Pf::cong(
        TermKind::Choice,
        Pf::cong(TermKind::Choice, lmerge_nf(n, m), lmerge_nf(m, n)),
        cmerge_nf(n, m)));
    return cleanup(pf);
  }

  // [normal args] N |> M = normal form.
  Pf lmerge_nf(const TermPtr& n, const TermPtr& m) {
    if (n->is_nil()) return ax("L0", {{"x", m}});
    // A body that is a single tau-prefixed summand is dropped to its
    // continuation (left merge ignores what the right side does first).
    // Only systems that have TL can take this shortcut.
    if (m->kind() == TermKind::Prefix && m->act().is_tau() &&
        sys_.find("TL") != nullptr) {
      Pf pf = ax("TL", {{"x", n}, {"y", m->body()}});
      return pf.then(lmerge_nf(n, m->body()));
    }
    std::vector<TermPtr> parts = summands(n);
    if (parts.size() >= 2) {
      TermPtr first = parts.front();
      parts.erase(parts.begin());
      TermPtr rest = make_choice(parts);
      Pf pf = ax("L4", {{"x", first}, {"y", rest}, {"z", m}});
      pf = pf.then(Pf::cong(TermKind::Choice, lmerge_nf(first, m),
                            lmerge_nf(rest, m)));
      return cleanup(pf);
    }
    if (n->kind() == TermKind::Prefix) {
      Action mu = n->act();
      Pf pf = ax("L1[" + mu.str() + "]", {{"x", n->body()}, {"y", m}});
      return pf.then(Pf::cong_prefix(mu, par_nf(n->body(), m)));
    }
    assert(n->kind() == TermKind::LeftMerge);
    Pf pf = ax("L2", {{"x", n->left()}, {"y", n->right()}, {"z", m}});
    return pf.then(Pf::cong(TermKind::LeftMerge, Pf::refl(n->left()),
                            par_nf(n->right(), m)));
  }

  // [normal args] N | M = normal form.
  Pf cmerge_nf(const TermPtr& n, const TermPtr& m) {
    if (n->is_nil()) return ax("C0", {{"x", m}});
    if (m->is_nil())
      return ax("C1", {{"x", n}, {"y", m}}).then(ax("C0", {{"x", n}}));
    std::vector<TermPtr> nparts = summands(n);
    if (nparts.size() >= 2) {
      TermPtr first = nparts.front();
      nparts.erase(nparts.begin());
      TermPtr rest = make_choice(nparts);
      Pf pf = ax("C3", {{"x", first}, {"y", rest}, {"z", m}});
      pf = pf.then(Pf::cong(TermKind::Choice, cmerge_nf(first, m),
                            cmerge_nf(rest, m)));
      return cleanup(pf);
    }
    if (summands(m).size() >= 2)
      return ax("C1", {{"x", n}, {"y", m}}).then(cmerge_nf(m, n));
    // Two simples. Prefix-prefix pairs synchronize (or die); anything
    // involving a merge shape is funneled through head |> body form.
    if (n->kind() == TermKind::Prefix && m->kind() == TermKind::Prefix) {
      Action mu = n->act(), nu = m->act();
      if (mu.is_tau()) return dt3(n->body(), m);
      if (nu.is_tau())
        return ax("C1", {{"x", n}, {"y", m}}).then(dt3(m->body(), n));
      if (nu == mu.complement()) {
        std::string c4 = "C4[" + mu.str() + "," + nu.str() + "]";
        Pf pf = ax(c4, {{"x", n->body()}, {"y", m->body()}});
        return pf.then(
            Pf::cong_prefix(Action::tau(), par_nf(n->body(), m->body())));
      }
      std::string c5 = "C5[" + mu.str() + "," + nu.str() + "]";
      return ax(c5, {{"x", n->body()}, {"y", m->body()}});
    }
    HeadForm a = to_head_form(n);
    HeadForm b = to_head_form(m);
    Pf pf = Pf::cong(TermKind::CommMerge, a.pf, b.pf);
    // (G |> B1) | (H |> B2) = (G | H) |> (B2 || B1)
    TermPtr hb2 = Term::left_merge(b.head, b.body);
    pf = pf.then(ax("C6", {{"x", a.head}, {"y", a.body}, {"z", hb2}}));
    Pf inner = ax("C1", {{"x", a.head}, {"y", hb2}})
                   .then(ax("C6", {{"x", b.head}, {"y", b.body}, {"z", a.head}}))
                   .then(Pf::cong(TermKind::LeftMerge,
                                  ax("C1", {{"x", b.head}, {"y", a.head}}),
                                  Pf::refl(b.body)));
    pf = pf.then(Pf::cong(TermKind::LeftMerge, inner, Pf::refl(a.body)));
    TermPtr heads = Term::comm_merge(a.head, b.head);
    pf = pf.then(ax("L2", {{"x", heads}, {"y", b.body}, {"z", a.body}}));
    Pf hpf = head_nf(a.head, b.head);
    Pf bpf = par_nf(b.body, a.body);
    pf = pf.then(Pf::cong(TermKind::LeftMerge, hpf, bpf));
    if (hpf.rhs()->is_nil()) pf = pf.then(ax("L0", {{"x", bpf.rhs()}}));
    return pf;
  }

  Pf nf(const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::Nil:
        return Pf::refl(t);
      case TermKind::Var:
        return ax("L3_sym", {{"x", t}});
      case TermKind::Prefix:
        return Pf::cong_prefix(t->act(), nf(t->body()));
      case TermKind::Choice:
        return cleanup(
            Pf::cong(TermKind::Choice, nf(t->left()), nf(t->right())));
      case TermKind::Parallel: {
        Pf l = nf(t->left()), r = nf(t->right());
        TermPtr nl = l.rhs(), nr = r.rhs();
        return Pf::cong(TermKind::Parallel, l, r).then(par_nf(nl, nr));
      }
      case TermKind::LeftMerge: {
        Pf l = nf(t->left()), r = nf(t->right());
        TermPtr nl = l.rhs(), nr = r.rhs();
        return Pf::cong(TermKind::LeftMerge, l, r).then(lmerge_nf(nl, nr));
      }
      case TermKind::CommMerge: {
        Pf l = nf(t->left()), r = nf(t->right());
        TermPtr nl = l.rhs(), nr = r.rhs();
        return Pf::cong(TermKind::CommMerge, l, r).then(cmerge_nf(nl, nr));
      }
    }
    throw std::logic_error("normalize: unreachable term kind");
  }

  const AxiomSystem& sys_;
  std::string base_;
};

}  // namespace

bool is_normal_form(const TermPtr& t) { return is_nf(t); }

NormalizeResult normalize(const TermPtr& t, const AxiomSystem& system) {
  for (const std::string& name : action_names(t))
    if (!system.alphabet().count(name))
      throw std::invalid_argument(
          "normalize: action name '" + name +
          "' is not in the axiom system's alphabet");
  Normalizer n(system);
  Pf pf = n.run(t);
  if (!is_nf(pf.rhs()))
    throw std::logic_error("normalize: result is not in normal form: " +
                           pretty(pf.rhs()));
  return {pf.rhs(), std::move(pf)};
}

}  // namespace ccslc
