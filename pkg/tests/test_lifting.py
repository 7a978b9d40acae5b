"""Constructive preimages: exactness, cone scaling, the entry update."""

import random
from fractions import Fraction

import pytest

from focal_ugb.cameras import enumerate_focals, sample_generic_cameras
from focal_ugb.fields import QQ, DEFAULT_PRIME, PrimeField
from focal_ugb.lifting import (DegenerateTargetError, lift_preimage_multiview,
                               lift_preimage_universal, lift_with_retries,
                               sample_target)
from focal_ugb.linalg import matvec
from focal_ugb.varspace import VarSpace
from focal_ugb.verify import (point_on_cone_checks, representative_facet,
                              representative_profiles)

FIELD = PrimeField(DEFAULT_PRIME)


def test_multiview_lift_n5_profile_32111():
    cams = sample_generic_cameras(5, seed=2)
    rng = random.Random(9)
    U = representative_facet((3, 2, 1, 1, 1), 5)
    focals = enumerate_focals(cams=cams, field=FIELD)
    for _ in range(5):
        target = sample_target(U, rng, FIELD)
        lift = lift_preimage_multiview(U, target, cams.matrices, FIELD)
        assert all(lift.coords[v] == target[v] for v in U)
        vals = list(lift.coords)
        for f in focals:
            assert f.poly.evaluate(vals) == 0


def test_multiview_lift_n4_direct_solve():
    cams = sample_generic_cameras(4, seed=5)
    rng = random.Random(1)
    for _, prof in representative_profiles(4):
        U = representative_facet(prof, 4)
        target = sample_target(U, rng, FIELD)
        lift = lift_preimage_multiview(U, target, cams.matrices, FIELD)
        assert all(lift.coords[v] == target[v] for v in U)
        assert point_on_cone_checks(cams.matrices, lift.coords, FIELD)


def test_multiview_lift_over_rationals():
    cams = sample_generic_cameras(4, seed=5)
    U = representative_facet((2, 2, 2, 1), 4)
    rng = random.Random(3)
    target = {v: Fraction(rng.randint(1, 50), rng.randint(1, 9)) for v in U}
    lift = lift_preimage_multiview(U, target, cams.matrices, QQ)
    assert all(lift.coords[v] == target[v] for v in U)


def test_multiview_cone_scaling_property():
    """Scaling the target in the factor of a single-coordinate camera
    rescales only that factor of the lifted point."""
    cams = sample_generic_cameras(5, seed=2)
    rng = random.Random(4)
    U = representative_facet((3, 2, 1, 1, 1), 5)
    sp = VarSpace.multiview(5)
    target = sample_target(U, rng, FIELD)
    scaled = dict(target)
    s = FIELD.random_nonzero(rng)
    v5 = sp.x_index(5, 1)
    scaled[v5] = FIELD.mul(s, target[v5])
    lift = lift_preimage_multiview(U, target, cams.matrices, FIELD)
    lift2 = lift_preimage_multiview(U, scaled, cams.matrices, FIELD)
    assert lift2.coords[:12] == lift.coords[:12]
    assert lift2.coords[12:] == tuple(FIELD.mul(s, c)
                                      for c in lift.coords[12:])


def test_multiview_lift_requires_full_camera_support():
    cams = sample_generic_cameras(4, seed=5)
    sp = VarSpace.multiview(4)
    U = {sp.x_index(1, 1), sp.x_index(1, 2)}
    with pytest.raises(ValueError):
        lift_preimage_multiview(U, {v: FIELD.one() for v in U},
                                cams.matrices, FIELD)


def test_multiview_lift_degenerate_kernel():
    # camera 1 contributing all three coordinates twice over (a 4-row system)
    # cannot happen for facets; an overdetermined non-facet raises
    cams = sample_generic_cameras(4, seed=5)
    sp = VarSpace.multiview(4)
    U = {sp.x_index(i, j) for i in (1, 2) for j in (1, 2, 3)} | \
        {sp.x_index(3, 1), sp.x_index(4, 1)}
    rng = random.Random(0)
    with pytest.raises(DegenerateTargetError):
        lift_preimage_multiview(U, sample_target(U, rng, FIELD),
                                cams.matrices, FIELD)


def test_universal_lift_base_form_n5():
    rng = random.Random(11)
    n = 5
    U = representative_facet((2, 2, 2, 1, 1), n, universal=True)
    sp = VarSpace.universal(n)
    target, lift = lift_with_retries(
        lambda t: lift_preimage_universal(U, t, n, FIELD, rng), U, rng, FIELD)
    coords = lift.coords(sp)
    assert all(coords[v] == target[v] for v in U)
    assert point_on_cone_checks(lift.matrices, lift.images, FIELD)
    # the cameras are exactly the target's cameras
    for i in range(1, n + 1):
        for j in range(1, 4):
            for k in range(1, 5):
                assert lift.matrices[i - 1][j - 1][k - 1] == \
                    target[sp.a_index(i, j, k)]


def test_universal_entry_update_formula():
    """One toggle step: the repaired entry reproduces the target coordinate
    and leaves the rest of the projection unchanged."""
    rng = random.Random(21)
    n = 4
    sp = VarSpace.universal(n)
    W = representative_facet((3, 2, 1, 1), n, universal=True)
    i, j, k = 3, 2, 4
    U = (W | {sp.x_index(i, j)}) - {sp.a_index(i, j, k)}
    target, lift = lift_with_retries(
        lambda t: lift_preimage_universal(U, t, n, FIELD, rng), U, rng, FIELD)
    coords = lift.coords(sp)
    assert coords[sp.x_index(i, j)] == target[sp.x_index(i, j)]
    assert all(coords[v] == target[v] for v in U)
    # witness identity A_i y = lam_i p_i holds at every row
    for ci in range(1, n + 1):
        img = matvec(lift.matrices[ci - 1], lift.y, FIELD)
        for cj in range(3):
            assert img[cj] == FIELD.mul(lift.lam[ci - 1],
                                        lift.images[3 * (ci - 1) + cj])
    assert point_on_cone_checks(lift.matrices, lift.images, FIELD)


def test_universal_lift_toggle_chain():
    rng = random.Random(31)
    n = 4
    sp = VarSpace.universal(n)
    U = representative_facet((2, 2, 2, 1), n, universal=True)
    for (i, j, k) in ((1, 3, 1), (2, 3, 3), (3, 3, 2), (4, 2, 4), (4, 3, 1)):
        U = (U | {sp.x_index(i, j)}) - {sp.a_index(i, j, k)}
    assert len(U) == 55
    target, lift = lift_with_retries(
        lambda t: lift_preimage_universal(U, t, n, FIELD, rng), U, rng, FIELD)
    coords = lift.coords(sp)
    assert all(coords[v] == target[v] for v in U)
    assert point_on_cone_checks(lift.matrices, lift.images, FIELD)


def test_universal_last_factor_scales():
    rng = random.Random(41)
    n = 5
    sp = VarSpace.universal(n)
    U = representative_facet((3, 2, 1, 1, 1), n, universal=True)
    target = sample_target(U, rng, FIELD)
    s = FIELD.random_nonzero(rng)
    scaled = dict(target)
    v5 = sp.x_index(5, 1)
    scaled[v5] = FIELD.mul(s, target[v5])
    lift = lift_preimage_universal(U, target, n, FIELD, random.Random(1))
    lift2 = lift_preimage_universal(U, scaled, n, FIELD, random.Random(1))
    assert lift2.matrices == lift.matrices
    assert lift2.images[:12] == lift.images[:12]
    assert lift2.images[12:] == tuple(FIELD.mul(s, c)
                                      for c in lift.images[12:])
