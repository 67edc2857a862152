#!/usr/bin/env python3
"""Independent oracle for the C++ workbench's frozen test values.

This is a deliberately naive, self-contained implementation of the closed-term
operational semantics, the three equivalences, depth/rdepth, and the bounded
term universe.  It shares no code (and no structure) with the C++ library; its
outputs were computed once and frozen into the C++ test sources.  Re-run it to
regenerate the expected values:

    python3 tests/oracle/oracle.py

Term encoding: nested tuples
    ('0',)                      inaction
    ('pre', act, t)             action prefix
    ('+', t, u) ('par', t, u)   choice / parallel
    ('lm', t, u) ('cm', t, u)   left merge / communication merge
Actions are strings: 'a', '~a', 'tau'.
"""

import itertools
import json
import sys
from functools import lru_cache

TAU = 'tau'


def is_vis(act):
    return act != TAU


def comp(act):
    assert act != TAU
    return act[1:] if act.startswith('~') else '~' + act


# ---------------------------------------------------------------------------
# SOS (closed terms): prefix, choice, parallel interleaving + synchronisation,
# left merge fires the left argument, communication merge synchronises only.
# ---------------------------------------------------------------------------

def step(t):
    """Set of (action, target) pairs, targets NOT canonicalised."""
    k = t[0]
    out = set()
    if k == '0':
        return out
    if k == 'pre':
        out.add((t[1], t[2]))
        return out
    if k == '+':
        return step(t[1]) | step(t[2])
    if k == 'par':
        l, r = t[1], t[2]
        for a, l2 in step(l):
            out.add((a, ('par', l2, r)))
        for a, r2 in step(r):
            out.add((a, ('par', l, r2)))
        for a, l2 in step(l):
            if is_vis(a):
                for b, r2 in step(r):
                    if b == comp(a):
                        out.add((TAU, ('par', l2, r2)))
        return out
    if k == 'lm':
        l, r = t[1], t[2]
        for a, l2 in step(l):
            out.add((a, ('par', l2, r)))
        return out
    if k == 'cm':
        l, r = t[1], t[2]
        for a, l2 in step(l):
            if is_vis(a):
                for b, r2 in step(r):
                    if b == comp(a):
                        out.add((TAU, ('par', l2, r2)))
        return out
    raise ValueError(k)


# ---------------------------------------------------------------------------
# AC-canonical form: flatten + and par into sorted tuples (a total order on
# the tuple encoding is Python's own tuple ordering after kind tagging).
# ---------------------------------------------------------------------------

KIND_RANK = {'0': 0, 'pre': 2, '+': 3, 'par': 4, 'lm': 5, 'cm': 6}


def rank_key(t):
    k = t[0]
    if k == '0':
        return (0,)
    if k == 'pre':
        act = t[1]
        acode = (0,) if act == TAU else (1, act.lstrip('~'), act.startswith('~'))
        return (2, acode, rank_key(t[2]))
    if k in ('+', 'par'):
        return (KIND_RANK[k], tuple(rank_key(c) for c in t[1:]))
    return (KIND_RANK[k], rank_key(t[1]), rank_key(t[2]))


def flatten(kind, t):
    if t[0] == kind:
        return flatten(kind, t[1]) + flatten(kind, t[2])
    return [canon(t)]


@lru_cache(maxsize=None)
def canon(t):
    k = t[0]
    if k == '0':
        return t
    if k == 'pre':
        return ('pre', t[1], canon(t[2]))
    if k in ('+', 'par'):
        kids = sorted(flatten(k, t[1]) + flatten(k, t[2]), key=rank_key)
        out = kids[0]
        for kid in kids[1:]:
            out = (k, out, kid)   # left-nested, sorted
        return out
    return (k, canon(t[1]), canon(t[2]))


# ---------------------------------------------------------------------------
# LTS over canonical states
# ---------------------------------------------------------------------------

def lts(t):
    root = canon(t)
    states = {root: 0}
    order = [root]
    edges = []
    work = [root]
    while work:
        s = work.pop()
        for a, tgt in sorted(step(s), key=lambda e: (e[0], rank_key(e[1]))):
            c = canon(tgt)
            if c not in states:
                states[c] = len(order)
                order.append(c)
                work.append(c)
            edges.append((states[s], a, states[c]))
    return order, sorted(set(edges))


def depth(t):
    """Longest number of visible actions along any path."""
    order, edges = lts(t)
    adj = {}
    for s, a, d in edges:
        adj.setdefault(s, []).append((a, d))
    memo = {}

    def go(i):
        if i in memo:
            return memo[i]
        best = 0
        for a, j in adj.get(i, []):
            best = max(best, (1 if is_vis(a) else 0) + go(j))
        memo[i] = best
        return best

    return go(0)


def rdepth(t):
    order, edges = lts(t)
    best = 0
    for s, a, d in edges:
        if s == 0:
            sub = depth(order[d])
            best = max(best, 1 + sub)
    return best


# ---------------------------------------------------------------------------
# Equivalences on the disjoint union of two LTSs (naive fixpoints)
# ---------------------------------------------------------------------------

def combined(t, u):
    o1, e1 = lts(t)
    o2, e2 = lts(u)
    n1 = len(o1)
    adj = {i: [] for i in range(n1 + len(o2))}
    for s, a, d in e1:
        adj[s].append((a, d))
    for s, a, d in e2:
        adj[s + n1].append((a, d + n1))
    return adj, n1, n1 + len(o2), 0, n1


def strong_eq(t, u):
    adj, n1, n, r1, r2 = combined(t, u)
    rel = [[True] * n for _ in range(n)]
    changed = True
    while changed:
        changed = False
        for p in range(n):
            for q in range(n):
                if not rel[p][q]:
                    continue
                ok = all(any(a == b and rel[p2][q2] for b, q2 in adj[q])
                         for a, p2 in adj[p]) and \
                     all(any(a == b and rel[p2][q2] for b, p2 in adj[p])
                         for a, q2 in adj[q])
                if not ok:
                    rel[p][q] = False
                    changed = True
    return rel, r1, r2, adj, n


def eps_closure(adj, n):
    clos = [set([i]) for i in range(n)]
    for i in range(n):
        work = [i]
        while work:
            s = work.pop()
            for a, d in adj[s]:
                if a == TAU and d not in clos[i]:
                    clos[i].add(d)
                    work.append(d)
    return clos


def bb_rel(t, u):
    adj, n1, n, r1, r2 = combined(t, u)
    clos = eps_closure(adj, n)
    rel = [[True] * n for _ in range(n)]

    def matched(p, q, a, p2):
        if a == TAU and rel[p2][q]:
            return True
        for q1 in clos[q]:
            if not rel[p][q1]:
                continue
            for b, q2 in adj[q1]:
                if b == a and rel[p2][q2]:
                    return True
        return False

    changed = True
    while changed:
        changed = False
        for p in range(n):
            for q in range(n):
                if not rel[p][q]:
                    continue
                ok = all(matched(p, q, a, p2) for a, p2 in adj[p]) and \
                     all(matched(q, p, a, q2) for a, q2 in adj[q])
                if not ok:
                    rel[p][q] = False
                    changed = True
    return rel, r1, r2, adj, n


def bb_eq(t, u):
    rel, r1, r2, _, _ = bb_rel(t, u)
    return rel[r1][r2]


def rbb_eq(t, u):
    rel, r1, r2, adj, n = bb_rel(t, u)

    def rooted(p, q):
        for a, p2 in adj[p]:
            if not any(b == a and rel[p2][q2] for b, q2 in adj[q]):
                return False
        return True

    return rooted(r1, r2) and rooted(r2, r1)


def strong_root(t, u):
    rel, r1, r2, _, _ = strong_eq(t, u)
    return rel[r1][r2]


# ---------------------------------------------------------------------------
# Bounded universe (interleaving fragment, AC-canonical, 0-stripped)
# ---------------------------------------------------------------------------

def size(t):
    k = t[0]
    if k == '0':
        return 1
    if k == 'pre':
        return 1 + size(t[2])
    return 1 + size(t[1]) + size(t[2])


def universe(names, max_size, max_depth):
    acts = [TAU] + [x for n in sorted(names) for x in (n, comp(n))]
    by_size = {1: [('0',)]}
    for s in range(2, max_size + 1):
        terms = []
        for a in acts:
            for t in by_size.get(s - 1, []):
                terms.append(('pre', a, t))
        for kind in ('+', 'par'):
            # k parts, sizes sum to s-(k-1), parts non-nil and not `kind`-rooted
            for k in range(2, s):
                budget = s - (k - 1)
                pool = [t for sz in range(2, budget + 1)
                        for t in by_size.get(sz, []) if t[0] != kind]
                for combo in itertools.combinations_with_replacement(pool, k):
                    if sum(size(c) for c in combo) != budget:
                        continue
                    kids = sorted(combo, key=rank_key)
                    out = kids[0]
                    for kid in kids[1:]:
                        out = (kind, out, kid)
                    terms.append(out)
        by_size[s] = sorted(set(terms), key=rank_key)
    all_terms = [t for s in sorted(by_size) for t in by_size[s]
                 if depth(t) <= max_depth]
    return all_terms


# ---------------------------------------------------------------------------
# Family processes
# ---------------------------------------------------------------------------

def chain(i):
    t = ('0',)
    for _ in range(i):
        t = ('pre', 'a', t)
    return t


def a_leq(i):
    t = chain(1)
    for j in range(2, i + 1):
        t = ('+', t, chain(j))
    return t


def p_n(n):
    t = ('pre', 'a', a_leq(2))
    for i in range(3, n + 1):
        t = ('+', t, ('pre', 'a', a_leq(i)))
    return t


def e_n(n):
    lhs = ('par', ('pre', 'a', ('0',)), p_n(n))
    rhs = ('pre', 'a', p_n(n))
    for i in range(2, n + 1):
        rhs = ('+', rhs, ('pre', 'a', ('par', ('pre', 'a', ('0',)), a_leq(i))))
    return lhs, rhs


def summands(t):
    if t[0] == '+':
        return summands(t[1]) + summands(t[2])
    return [t]


# ---------------------------------------------------------------------------
# Axiom instance counts (combinatorial; the schemata are L1, TB over A_tau,
# C4 over complementary visible pairs, C5 over non-complementary pairs)
# ---------------------------------------------------------------------------

def instance_counts(num_names):
    vis = 2 * num_names
    atau = vis + 1
    plain_b = 15          # A0-A3 L0 L2 L3 L4 C0 C1 C2 C3 C6 C7 P
    e_b = plain_b + atau + vis + vis * (vis - 1)          # + L1 C4 C5
    e_rbb = e_b + atau + 1                                # + TB TL
    e0_tb = 4 + atau                                      # A0-A3 + TB
    return {'E_B': e_b, 'E_RBB': e_rbb, 'E0_TB': e0_tb}


def fmt(t):
    k = t[0]
    if k == '0':
        return '0'
    if k == 'pre':
        return f"{t[1]}.{fmt(t[2])}"
    op = {'+': '+', 'par': '||', 'lm': '|>', 'cm': '|'}[k]
    return f"({fmt(t[1])} {op} {fmt(t[2])})"


def main():
    out = {}
    nil = ('0',)
    a0 = ('pre', 'a', nil)
    ca0 = ('pre', '~a', nil)
    b0 = ('pre', 'b', nil)

    # 1. step sets
    t = ('par', a0, ca0)
    out['step par a0 ~a0'] = sorted((a, fmt(canon(d))) for a, d in step(t))
    out['step cm a0 b0'] = sorted((a, fmt(canon(d))) for a, d in step(('cm', a0, b0)))
    out['step cm a0 ~a0'] = sorted((a, fmt(canon(d))) for a, d in step(('cm', a0, ca0)))
    out['step lm a0 b0'] = sorted((a, fmt(canon(d))) for a, d in step(('lm', a0, b0)))
    out['step lm (a0+b0) tau0'] = sorted(
        (a, fmt(canon(d)))
        for a, d in step(('lm', ('+', a0, b0), ('pre', TAU, nil))))

    # 2. LTS sizes
    for name, term in [('a0 || ~a0', t), ('p_2', p_n(2)), ('p_3', p_n(3)),
                       ('a0 || p_2', ('par', a0, p_n(2))),
                       ('a0 || p_3', ('par', a0, p_n(3)))]:
        o, e = lts(term)
        out[f'lts {name}'] = {'states': len(o), 'edges': len(e)}

    # 3. Remark pairs (alpha := b)
    r1l = ('+', ('+', ('+', ('pre', TAU, a0),
                       ('pre', 'b', ('pre', 'a', ('pre', '~b', nil)))),
                 ('pre', '~b', ('pre', 'b', a0))),
           ('pre', 'b', ('pre', '~b', a0)))
    r1r = ('par', ('pre', 'b', a0), ('pre', '~b', nil))
    r2l = ('+', ('+', ('pre', TAU, nil), ('pre', '~b', b0)), ('pre', 'b', ('pre', '~b', nil)))
    r2r = ('par', b0, ('pre', '~b', nil))
    out['remark1 bb'] = bb_eq(r1l, r1r)
    out['remark2 bb'] = bb_eq(r2l, r2r)
    out['remark1 strong'] = strong_root(r1l, r1r)

    # 4. elementary verdicts
    out['tau.a0 vs a0'] = {'bb': bb_eq(('pre', TAU, a0), a0),
                           'rbb': rbb_eq(('pre', TAU, a0), a0)}
    tb_l = ('pre', 'a', ('+', ('pre', TAU, ('+', b0, ca0)), ca0))
    tb_r = ('pre', 'a', ('+', b0, ca0))
    out['TB closed instance'] = {'bb': bb_eq(tb_l, tb_r), 'rbb': rbb_eq(tb_l, tb_r),
                                 'strong': strong_root(tb_l, tb_r)}

    # 5. family identities
    fam = {}
    for n in (2, 3, 4, 5):
        lhs, rhs = e_n(n)
        fam[n] = {
            'depth lhs': depth(lhs), 'rdepth p_n': rdepth(p_n(n)),
            'depth a_leq_n': depth(a_leq(n)),
            'e_n rbb': rbb_eq(lhs, rhs) if n <= 3 else None,  # n>3 slow here
            'rhs summand count': len(summands(rhs)),
            'rhs has P_n': any(rbb_eq(s, lhs) for s in summands(rhs)) if n <= 3 else None,
        }
    out['family'] = fam

    # 6. universe counts
    u = universe(['a'], 5, 99)
    out['universe a size5'] = len(u)
    out['universe a size5 sample'] = [fmt(x) for x in u[:8]]
    out['universe a size2 depth1'] = [fmt(x) for x in universe(['a'], 2, 1)]
    out['a0+a0 in size5'] = ('+', a0, a0) in [canon(x) for x in u]

    # 7. decomposition ground truths (oracle-level: existence of a split)
    def decomposable(p, terms):
        dp = depth(p)
        cands = [c for c in terms if 1 <= depth(c) < dp]
        for q in cands:
            for r in cands:
                if depth(q) + depth(r) == dp and bb_eq(('par', q, r), p):
                    return True, (fmt(q), fmt(r))
        return False, None

    small = universe(['a'], 6, 4)
    dec = {}
    for i in (2, 3):
        got, wit = decomposable(a_leq(i), small)
        dec[f'a_leq_{i} decomposable (size6 universe)'] = got
    got, wit = decomposable(p_n(2), small)
    dec['p_2 decomposable (size6 universe)'] = got
    # remark 2 decomposes: tau.0 + ~b.b.0 + b.~b.0 ~ b.0 || ~b.0
    bu = universe(['b'], 4, 4)
    got, wit = decomposable(r2l, bu)
    dec['remark2 decomposable'] = (got, wit)
    out['decomposition'] = dec

    # 8. axiom instance counts
    out['instances |A|=1'] = instance_counts(1)
    out['instances |A|=2'] = instance_counts(2)

    json.dump(out, sys.stdout, indent=1, default=str)
    print()


if __name__ == '__main__':
    main()
