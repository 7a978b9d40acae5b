"""Monomial orders: weighted-degree with lexicographic tie-break.

An order is a strictly positive integer weight vector plus a tie-break
permutation of the variables.  Monomials compare by weighted degree first,
then lexicographically along the permutation.  Orders flagged
``product_extension`` live on a doubled space and compare the affine part of
a monomial before its partner part, which forces every partner variable
below every affine variable; restricted to affine monomials they coincide
with the order given by the same affine weights.
"""

from __future__ import annotations

from .poly import MultiPoly, mono_exponents
from .varspace import VarSpace

WEIGHT_RANGE = 10**6


class TermOrder:
    def __init__(self, space: VarSpace, weights, tiebreak, product_extension=False):
        weights = tuple(weights)
        tiebreak = tuple(tiebreak)
        if len(weights) != space.nvars or any(w <= 0 for w in weights):
            raise ValueError("need a strictly positive weight per variable")
        if sorted(tiebreak) != list(range(space.nvars)):
            raise ValueError("tie-break must be a permutation of the variables")
        if product_extension and not space.doubled:
            raise ValueError("product extension requires a doubled space")
        self.space = space
        self.weights = weights
        self.tiebreak = tiebreak
        self.product_extension = product_extension
        self._cache = {}

    def key(self, mono: int):
        """Sort key; larger key means larger monomial."""
        k = self._cache.get(mono)
        if k is None:
            exps = mono_exponents(mono, self.space.nvars)
            lex = tuple(exps[v] for v in self.tiebreak)
            if self.product_extension:
                N = self.space.affine_count
                w_aff = sum(self.weights[v] * exps[v] for v in range(N) if exps[v])
                w_par = sum(self.weights[v] * exps[v]
                            for v in range(N, 2 * N) if exps[v])
                k = (w_aff, w_par, lex)
            else:
                k = (sum(w * e for w, e in zip(self.weights, exps) if e), lex)
            self._cache[mono] = k
        return k

    def max_monomial(self, monos):
        return max(monos, key=self.key)

    def greater(self, m1: int, m2: int) -> bool:
        return self.key(m1) > self.key(m2)

    def affine_restriction(self) -> "TermOrder":
        """The induced order on the affine subring of a doubled space."""
        if not self.space.doubled:
            raise ValueError("order does not live on a doubled space")
        N = self.space.affine_count
        return TermOrder(self.space.affine(), self.weights[:N],
                         tuple(v for v in self.tiebreak if v < N))

    def describe(self) -> dict:
        return {
            "weights": list(self.weights),
            "tiebreak": list(self.tiebreak),
            "product_extension": self.product_extension,
        }


def lex_order(space: VarSpace, product_extension=False) -> TermOrder:
    """Pure lex with variable 0 heaviest (weights all 1, graded first)."""
    return TermOrder(space, (1,) * space.nvars, range(space.nvars),
                     product_extension)


def sample_order(space: VarSpace, rng, product_extension=False) -> TermOrder:
    """Random weights in [1, 10^6] with a fresh tie-break permutation."""
    weights = tuple(rng.randint(1, WEIGHT_RANGE) for _ in range(space.nvars))
    perm = list(range(space.nvars))
    rng.shuffle(perm)
    return TermOrder(space, weights, perm, product_extension)


def initial_monomial(f: MultiPoly, order: TermOrder) -> int:
    """The order-maximal monomial of a nonzero polynomial (packed form)."""
    if f.is_zero():
        raise ValueError("zero polynomial has no initial monomial")
    return max(f.terms, key=order.key)


def initial_term(f: MultiPoly, order: TermOrder) -> MultiPoly:
    m = initial_monomial(f, order)
    return MultiPoly(f.space, f.field, {m: f.terms[m]})
