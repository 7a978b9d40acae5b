"""Exact coefficient fields: arbitrary-precision rationals and 62-bit prime fields.

All algebra in this package is exact.  Rational arithmetic is backed by
``fractions.Fraction`` (canonical form, positive denominator); prime-field
arithmetic works on plain int residues in ``[0, p)``.  A field object carries
the operations so polynomials, matrices and pipelines can run over either
field without branching.
"""

from __future__ import annotations

from fractions import Fraction

# Default 62-bit prime for F_p computations (largest prime below 2^62) and a
# distinct 62-bit prime for cross-check reruns.
DEFAULT_PRIME = 4611686018427387847
ALT_PRIME = 4611686018427387817


class RationalField:
    """The field of rationals, elements are ``fractions.Fraction``."""

    name = "QQ"

    def __call__(self, x):
        return Fraction(x)

    def from_int(self, x: int) -> Fraction:
        return Fraction(x)

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def random(self, rng, lo: int = -1000, hi: int = 1000):
        return Fraction(rng.randint(lo, hi))

    def random_nonzero(self, rng, lo: int = -1000, hi: int = 1000):
        while True:
            x = rng.randint(lo, hi)
            if x:
                return Fraction(x)

    def coeff_str(self, a) -> str:
        return str(Fraction(a))

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """The field F_p for a prime p > 2^50, elements are ints in [0, p)."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if p <= 2**50:
            raise ValueError(f"prime must exceed 2^50, got {p}")
        self.p = p
        self.name = f"GF({p})"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def from_int(self, x: int) -> int:
        return x % self.p

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in prime field")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def random(self, rng, lo=None, hi=None):
        return rng.randrange(self.p)

    def random_nonzero(self, rng, lo=None, hi=None):
        return rng.randrange(1, self.p)

    def coeff_str(self, a) -> str:
        return str(a % self.p)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()
GF_DEFAULT = PrimeField(DEFAULT_PRIME)
