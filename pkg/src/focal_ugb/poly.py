"""Sparse multivariate polynomials over an exact field.

Monomials are packed into a single int, 8 bits of exponent per variable
(exponents capped at 127), so monomial product/quotient are int add/sub and
divisibility is one masked subtraction.  Polynomials are dicts mapping packed
monomials to nonzero coefficients.
"""

from __future__ import annotations

from .varspace import VarSpace

_W = 8
EXP_MAX = 127


def guard_mask(nvars: int) -> int:
    """Top bit of every exponent field; reserved for borrow detection."""
    return int.from_bytes(bytes([0x80]) * nvars, "little")


def mono_pack(pairs, nvars: int) -> int:
    """Pack {var: exp} items or (var, exp) pairs into a monomial int."""
    if hasattr(pairs, "items"):
        pairs = pairs.items()
    m = 0
    for v, e in pairs:
        if not 0 <= v < nvars:
            raise ValueError(f"variable index {v} out of range")
        if not 0 <= e <= EXP_MAX:
            raise ValueError(f"exponent {e} out of range 0..{EXP_MAX}")
        m += e << (_W * v)
    return m


def mono_exponents(m: int, nvars: int) -> tuple:
    return tuple(m.to_bytes(nvars, "little"))


def mono_items(m: int, nvars: int):
    """Sorted (var, exp) pairs with positive exponents."""
    return [(v, e) for v, e in enumerate(m.to_bytes(nvars, "little")) if e]


def mono_degree(m: int, nvars: int) -> int:
    return sum(m.to_bytes(nvars, "little"))


def mono_divides(d: int, t: int, guard: int) -> bool:
    """Componentwise d <= t via a borrow-free masked subtraction."""
    return ((t | guard) - d) & guard == guard


def mono_lcm(a: int, b: int, nvars: int) -> int:
    ba = a.to_bytes(nvars, "little")
    bb = b.to_bytes(nvars, "little")
    return int.from_bytes(bytes(x if x > y else y for x, y in zip(ba, bb)),
                          "little")


def mono_support(m: int, nvars: int) -> int:
    """Bitmask of variables with positive exponent."""
    s = 0
    for v, e in enumerate(m.to_bytes(nvars, "little")):
        if e:
            s |= 1 << v
    return s


def mono_is_squarefree(m: int, nvars: int) -> bool:
    return all(e <= 1 for e in m.to_bytes(nvars, "little"))


class MultiPoly:
    """Sparse polynomial over a :mod:`focal_ugb.fields` field."""

    __slots__ = ("space", "field", "terms")

    def __init__(self, space: VarSpace, field, terms=None):
        self.space = space
        self.field = field
        self.terms = {} if terms is None else terms

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, space, field):
        return cls(space, field)

    @classmethod
    def constant(cls, space, field, c):
        c = field(c)
        return cls(space, field, {} if field.is_zero(c) else {0: c})

    @classmethod
    def variable(cls, space, field, v):
        return cls(space, field, {mono_pack([(v, 1)], space.nvars): field.one()})

    @classmethod
    def from_terms(cls, space, field, term_list):
        """Build from an iterable of (exponent map or pairs, coefficient)."""
        terms = {}
        for exps, c in term_list:
            m = mono_pack(exps, space.nvars)
            c = field.add(terms.get(m, field.zero()), field(c))
            if field.is_zero(c):
                terms.pop(m, None)
            else:
                terms[m] = c
        return cls(space, field, terms)

    # -- predicates / views -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def spread(self) -> frozenset:
        """Set of variable indices appearing in the support."""
        s = 0
        for m in self.terms:
            s |= m
        nv = self.space.nvars
        return frozenset(v for v, e in enumerate(s.to_bytes(nv + 8, "little"))
                         if e and v < nv)

    def degree_in(self, v: int) -> int:
        shift = _W * v
        return max(((m >> shift) & 0xFF for m in self.terms), default=0)

    def total_degree(self) -> int:
        nv = self.space.nvars
        return max((mono_degree(m, nv) for m in self.terms), default=0)

    # -- arithmetic ----------------------------------------------------------

    def _combine(self, other, sign: int):
        F = self.field
        terms = dict(self.terms)
        if sign > 0:
            for m, c in other.terms.items():
                s = F.add(terms.get(m, 0), c) if m in terms else c
                if m in terms and F.is_zero(s):
                    del terms[m]
                else:
                    terms[m] = s
        else:
            for m, c in other.terms.items():
                s = F.sub(terms.get(m, F.zero()), c)
                if F.is_zero(s):
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return MultiPoly(self.space, F, terms)

    def __add__(self, other):
        other = self._coerce(other)
        return self._combine(other, +1)

    def __sub__(self, other):
        other = self._coerce(other)
        return self._combine(other, -1)

    def __neg__(self):
        F = self.field
        return MultiPoly(self.space, F, {m: F.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        F = self.field
        if not isinstance(other, MultiPoly):
            c = F(other)
            if F.is_zero(c):
                return MultiPoly(self.space, F)
            return MultiPoly(self.space, F,
                             {m: F.mul(cc, c) for m, cc in self.terms.items()})
        if len(self.terms) > len(other.terms):
            self, other = other, self
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                c = F.mul(c1, c2)
                if m in terms:
                    c = F.add(terms[m], c)
                if F.is_zero(c):
                    terms.pop(m, None)
                else:
                    terms[m] = c
        return MultiPoly(self.space, F, terms)

    __rmul__ = __mul__

    def term_times(self, mono: int, coeff):
        """self * (coeff * x^mono), coefficient assumed nonzero."""
        F = self.field
        return MultiPoly(self.space, F,
                         {m + mono: F.mul(c, coeff) for m, c in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.constant(self.space, self.field, other)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.space.nvars, tuple(sorted(self.terms.items()))))

    # -- evaluation / conversion --------------------------------------------

    def evaluate(self, values):
        """Evaluate at a full vector of field values, exactly."""
        F = self.field
        total = F.zero()
        nv = self.space.nvars
        for m, c in self.terms.items():
            t = c
            for v, e in mono_items(m, nv):
                x = values[v]
                for _ in range(e):
                    t = F.mul(t, x)
            total = F.add(total, t)
        return total

    def change_field(self, field):
        terms = {}
        for m, c in self.terms.items():
            c2 = field(c)
            if not field.is_zero(c2):
                terms[m] = c2
        return MultiPoly(self.space, field, terms)

    def map_space(self, space, var_map):
        """Reindex variables through ``var_map`` into another space."""
        nv = self.space.nvars
        terms = {}
        for m, c in self.terms.items():
            m2 = mono_pack([(var_map[v], e) for v, e in mono_items(m, nv)],
                           space.nvars)
            terms[m2] = c
        return MultiPoly(space, self.field, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        nv = self.space.nvars
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                self.space.name(v) + (f"^{e}" if e > 1 else "")
                for v, e in mono_items(m, nv))
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def multihomogenize(f: MultiPoly) -> MultiPoly:
    """Homogenize each variable pair (x_i, x_{N+i}) separately.

    Every term picks up partner exponents that raise its degree in pair i to
    deg_{x_i}(f); substituting 1 for all partners recovers ``f``.  The zero
    polynomial maps to zero.
    """
    if f.space.doubled:
        raise ValueError("polynomial already lives in a doubled space")
    dspace = f.space.double()
    if f.is_zero():
        return MultiPoly(dspace, f.field)
    N = f.space.affine_count
    nv = f.space.nvars
    degs = [f.degree_in(v) for v in range(nv)]
    terms = {}
    for m, c in f.terms.items():
        exps = m.to_bytes(nv, "little")
        m2 = m
        for v, d in enumerate(degs):
            gap = d - exps[v]
            if gap:
                m2 += gap << (_W * (v + N))
        terms[m2] = c
    return MultiPoly(dspace, f.field, terms)


def dehomogenize(f: MultiPoly) -> MultiPoly:
    """Set every partner variable to 1."""
    if not f.space.doubled:
        return f
    aspace = f.space.affine()
    N = aspace.affine_count
    mask = (1 << (_W * N)) - 1
    F = f.field
    terms = {}
    for m, c in f.terms.items():
        m2 = m & mask
        c2 = F.add(terms.get(m2, F.zero()), c)
        if F.is_zero(c2):
            terms.pop(m2, None)
        else:
            terms[m2] = c2
    return MultiPoly(aspace, F, terms)
