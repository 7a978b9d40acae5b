"""Multivariate division and a Buchberger S-pair checker.

The engine is sized for the four-camera base case: a few hundred small
multilinear generators over a 62-bit prime field.  Pairs are pruned with the
coprimality (product) criterion and Gebauer-Moeller chain elimination before
their S-polynomials are reduced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orders import TermOrder, initial_monomial
from .poly import MultiPoly, guard_mask, mono_lcm, mono_support


class _Reducers:
    """Divisor table prepared once per (G, order)."""

    def __init__(self, G, order: TermOrder):
        if any(g.is_zero() for g in G):
            raise ValueError("reducers must be nonzero")
        self.order = order
        space = G[0].space
        self.nvars = space.nvars
        self.guard = guard_mask(self.nvars)
        field = G[0].field
        self.field = field
        self.entries = []
        for g in G:
            lm = initial_monomial(g, order)
            inv_lc = field.inv(g.terms[lm])
            tail = [(m, c) for m, c in g.terms.items() if m != lm]
            self.entries.append((lm, mono_support(lm, self.nvars), inv_lc, tail))
        self._supp_cache = {}

    def support(self, mono: int) -> int:
        s = self._supp_cache.get(mono)
        if s is None:
            s = mono_support(mono, self.nvars)
            self._supp_cache[mono] = s
        return s


def reduce(f: MultiPoly, G, order: TermOrder, _prepared=None) -> MultiPoly:
    """Normal form of f modulo G: no remainder term is divisible by any
    initial monomial of G, and f minus the result lies in the ideal of G."""
    red = _prepared if _prepared is not None else _Reducers(list(G), order)
    field = f.field
    guard = red.guard
    key = order.key
    is_zero = field.is_zero
    sub, mul = field.sub, field.mul

    work = dict(f.terms)
    remainder = {}
    while work:
        t = max(work, key=key)
        c = work.pop(t)
        tsupp = red.support(t)
        hit = None
        for lm, lsupp, inv_lc, tail in red.entries:
            if lsupp & ~tsupp:
                continue
            if ((t | guard) - lm) & guard == guard:
                hit = (lm, inv_lc, tail)
                break
        if hit is None:
            remainder[t] = c
            continue
        lm, inv_lc, tail = hit
        factor = mul(c, inv_lc)
        shift = t - lm
        for gm, gc in tail:
            m = gm + shift
            prev = work.get(m)
            val = sub(prev, mul(factor, gc)) if prev is not None \
                else field.neg(mul(factor, gc))
            if is_zero(val):
                work.pop(m, None)
            else:
                work[m] = val
    return MultiPoly(f.space, field, remainder)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: TermOrder) -> MultiPoly:
    """S-polynomial with both leading terms scaled to the lcm monomial."""
    field = f.field
    nvars = f.space.nvars
    lmf = initial_monomial(f, order)
    lmg = initial_monomial(g, order)
    lcm = mono_lcm(lmf, lmg, nvars)
    sf = f.term_times(lcm - lmf, field.inv(f.terms[lmf]))
    sg = g.term_times(lcm - lmg, field.inv(g.terms[lmg]))
    return sf - sg


def _gm_pairs(lms, supports, order: TermOrder, nvars: int):
    """Gebauer-Moeller pair set for a fixed generator list.

    Simulates adding the generators one at a time; pairs removed by the
    product criterion or chain criterion are guaranteed to reduce to zero
    once all surviving pairs do.
    """
    pairs = set()
    for k in range(len(lms)):
        lmk = lms[k]
        lcm_k = {i: mono_lcm(lms[i], lmk, nvars) for i in range(k)}
        guard = guard_mask(nvars)

        def divides(d, t):
            return ((t | guard) - d) & guard == guard

        kept = set()
        for (i, j) in pairs:
            lcm_ij = mono_lcm(lms[i], lms[j], nvars)
            if not divides(lmk, lcm_ij) or lcm_k[i] == lcm_ij or lcm_k[j] == lcm_ij:
                kept.add((i, j))
        pairs = kept
        groups = {}
        for i in range(k):
            groups.setdefault(lcm_k[i], []).append(i)
        minimal = []
        for lcm in sorted(groups, key=order.key):
            if all(not divides(prev, lcm) for prev in minimal):
                minimal.append(lcm)
        for lcm in minimal:
            members = groups[lcm]
            if any(supports[i] & supports[k] == 0 for i in members):
                continue  # product criterion: some pair is coprime
            pairs.add((min(members), k))
    return pairs


@dataclass
class PairFailure:
    i: int
    j: int
    remainder: MultiPoly


def buchberger_check(G, order: TermOrder, collect_failures=False,
                     prune: str = "coprime"):
    """True iff every S-pair of G reduces to zero modulo G under the order.

    ``prune`` selects the pair-elimination level: "coprime" skips only pairs
    with coprime leading monomials (their S-polynomials reduce to zero by
    Buchberger's product criterion), "gm" additionally applies
    Gebauer-Moeller chain elimination, "none" reduces every pair.  With
    ``collect_failures`` returns (ok, [PairFailure, ...]) instead, stopping
    at the first failure.
    """
    G = [g for g in G]
    if any(g.is_zero() for g in G):
        raise ValueError("generators must be nonzero")
    nvars = G[0].space.nvars
    red = _Reducers(G, order)
    lms = [e[0] for e in red.entries]
    supports = [e[1] for e in red.entries]
    if prune == "gm":
        pairs = _gm_pairs(lms, supports, order, nvars)
    elif prune == "coprime":
        pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))
                 if supports[i] & supports[j]]
    elif prune == "none":
        pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    else:
        raise ValueError(f"unknown pruning level {prune!r}")
    failures = []
    for (i, j) in sorted(pairs):
        s = s_polynomial(G[i], G[j], order)
        if s.is_zero():
            continue
        r = reduce(s, G, order, _prepared=red)
        if not r.is_zero():
            failures.append(PairFailure(i, j, r))
            break
    if collect_failures:
        return not failures, failures
    return not failures
