"""Monomial orders: maximality, rescaling invariance, product extensions."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from focal_ugb.fields import QQ
from focal_ugb.orders import TermOrder, initial_monomial, sample_order
from focal_ugb.poly import MultiPoly, mono_exponents, multihomogenize
from focal_ugb.varspace import VarSpace

SP3 = VarSpace.generic(["x1", "x2", "x3"])


def test_initial_of_homogenized_example():
    # with x1 heaviest, init(x1*x2_h*x3_h + x1_h*x2*x3) = x1*x2_h*x3_h
    f = MultiPoly.from_terms(SP3, QQ, [({0: 1}, 1), ({1: 1, 2: 1}, 1)])
    fh = multihomogenize(f)
    dsp = fh.space
    order = TermOrder(dsp, (100, 1, 1, 1, 1, 1), range(6),
                      product_extension=True)
    m = initial_monomial(fh, order)
    assert mono_exponents(m, 6) == (1, 0, 0, 0, 1, 1)


def test_initial_of_monomial_is_itself():
    f = MultiPoly.from_terms(SP3, QQ, [({0: 2, 1: 1}, 7)])
    order = TermOrder(SP3, (1, 1, 1), (0, 1, 2))
    assert initial_monomial(f, order) == next(iter(f.terms))


def test_initial_of_zero_raises():
    order = TermOrder(SP3, (1, 1, 1), (0, 1, 2))
    with pytest.raises(ValueError):
        initial_monomial(MultiPoly.zero(SP3, QQ), order)


def test_tiebreak_changes_leader_and_leaders_are_maximal():
    # equal weights, different tie-break permutations
    f = MultiPoly.from_terms(SP3, QQ, [
        ({0: 1, 1: 1}, 1), ({1: 1, 2: 1}, 2), ({0: 1, 2: 1}, 3),
        ({0: 2}, 4), ({2: 2}, 5),
    ])
    o1 = TermOrder(SP3, (1, 1, 1), (0, 1, 2))
    o2 = TermOrder(SP3, (1, 1, 1), (2, 1, 0))
    m1 = initial_monomial(f, o1)
    m2 = initial_monomial(f, o2)
    assert m1 != m2
    for order, lead in ((o1, m1), (o2, m2)):
        for m in f.terms:
            assert not order.greater(m, lead)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 50))
def test_initial_invariant_under_weight_rescaling(seed, scale):
    rng = random.Random(seed)
    order = sample_order(SP3, rng)
    scaled = TermOrder(SP3, tuple(w * scale for w in order.weights),
                       order.tiebreak)
    f = MultiPoly.from_terms(SP3, QQ, [
        ({0: rng.randint(0, 4), 1: rng.randint(0, 4), 2: rng.randint(0, 4)},
         rng.randint(1, 9)) for _ in range(5)])
    if f.is_zero():
        return
    assert initial_monomial(f, order) == initial_monomial(f, scaled)


def test_product_extension_puts_partners_below_affine():
    dsp = SP3.double()
    rng = random.Random(1)
    order = sample_order(dsp, rng, product_extension=True)
    for aff in range(3):
        for par in range(3, 6):
            ma = MultiPoly.variable(dsp, QQ, aff)
            mp = MultiPoly.variable(dsp, QQ, par)
            assert order.greater(next(iter(ma.terms)), next(iter(mp.terms)))


def test_product_extension_requires_doubled_space():
    with pytest.raises(ValueError):
        TermOrder(SP3, (1, 1, 1), (0, 1, 2), product_extension=True)


def test_affine_restriction_consistency():
    """init of the homogenization under a product order has the same affine
    part as init of the original under the restricted order."""
    rng = random.Random(5)
    dsp = SP3.double()
    for _ in range(30):
        order = sample_order(dsp, rng, product_extension=True)
        aff = order.affine_restriction()
        f = MultiPoly.from_terms(SP3, QQ, [
            ({0: rng.randint(0, 3), 1: rng.randint(0, 3),
              2: rng.randint(0, 3)}, rng.randint(1, 9)) for _ in range(4)])
        if f.is_zero():
            continue
        mh = initial_monomial(multihomogenize(f), order)
        ma = initial_monomial(f, aff)
        assert mono_exponents(mh, 6)[:3] == mono_exponents(ma, 3)


def test_order_is_total_and_multiplicative():
    rng = random.Random(9)
    order = sample_order(SP3, rng)
    monos = [next(iter(MultiPoly.from_terms(SP3, QQ, [(e, 1)]).terms))
             for e in ({0: 1}, {1: 2}, {0: 1, 2: 1}, {2: 3}, {1: 1, 2: 1})]
    for m1, m2 in combinations(monos, 2):
        assert order.greater(m1, m2) != order.greater(m2, m1)
        # multiplicative: multiplying by a common monomial preserves order
        for m in monos:
            assert order.greater(m1 + m, m2 + m) == order.greater(m1, m2)
