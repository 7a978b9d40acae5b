"""Dominance certificates, matroid agreement, pipeline, base case."""

import random
from itertools import combinations

import pytest

from focal_ugb.complexes import facets_bruteforce, mask_of
from focal_ugb.fields import ALT_PRIME, DEFAULT_PRIME, PrimeField
from focal_ugb.groebner import buchberger_check
from focal_ugb.matroids import delta_matroid
from focal_ugb.orders import initial_monomial, sample_order
from focal_ugb.parametrize import (MultiviewCone, UniversalCone,
                                   full_jacobian_rank, jacobian_dominance)
from focal_ugb.poly import (mono_degree, mono_is_squarefree, mono_support,
                            multihomogenize)
from focal_ugb.varspace import VarSpace
from focal_ugb.verify import (base_case_groebner, representative_facet,
                              representative_profiles, verify_hl)

FIELD = PrimeField(DEFAULT_PRIME)


def test_dominance_examples(cams4):
    rng = random.Random(3)
    cone = MultiviewCone(cams4.matrices, FIELD)
    sp = VarSpace.multiview(4)
    facet = representative_facet((3, 2, 1, 1), 4)
    cert = jacobian_dominance(cone, facet, rng)
    assert cert.verdict and cert.rank == 7 == cert.size
    # a nonface: the spread of a 2-focal forces a rank drop
    nonface = {sp.x_index(1, j) for j in (1, 2, 3)} | \
        {sp.x_index(2, j) for j in (1, 2, 3)}
    cert = jacobian_dominance(cone, nonface, rng)
    assert not cert.verdict and cert.rank == 5
    assert len(cert.attempts) == 2  # retried once at a fresh point
    # the empty projection is trivially dominant
    cert = jacobian_dominance(cone, set(), rng)
    assert cert.verdict and cert.rank == 0


def test_full_jacobian_ranks_match_matroid_ranks():
    rng = random.Random(6)
    for n in (4, 5, 6):
        cams = sample_and_cone(n, rng)
        assert full_jacobian_rank(cams, rng) == n + 3
        ucone = UniversalCone(n, FIELD)
        assert full_jacobian_rank(ucone, rng) == 13 * n + 3


def sample_and_cone(n, rng):
    from focal_ugb.cameras import sample_generic_cameras
    cams = sample_generic_cameras(n, seed=n)
    return MultiviewCone(cams.matrices, FIELD)


def test_cone_points_lie_on_the_variety(cams4, focals4_fp):
    """Parametrized points of both cones zero every focal."""
    from focal_ugb.cameras import focal_det_at
    from focal_ugb.verify import point_on_cone_checks
    rng = random.Random(8)
    cone = MultiviewCone(cams4.matrices, FIELD)
    for _ in range(10):
        coords = cone.point(cone.random_parameters(rng))
        for f in focals4_fp:
            assert f.poly.evaluate(coords) == 0
    ucone = UniversalCone(4, FIELD)
    for _ in range(5):
        params = ucone.random_parameters(rng)
        mats, q, lam = ucone.split(params)
        coords = ucone.point(params)
        images = [coords[ucone.space.x_index(i, j)]
                  for i in range(1, 5) for j in range(1, 4)]
        assert point_on_cone_checks(mats, images, FIELD)


def test_dominance_agrees_with_matroid_independence(cams4):
    """Jacobian-rank dominance = matroid independence on 500 random subsets
    of size <= 7 (the algebraic matroid instantiation)."""
    rng = random.Random(12)
    cone = MultiviewCone(cams4.matrices, FIELD)
    M = delta_matroid(4)
    elems = sorted(M.ground)
    for _ in range(500):
        X = frozenset(rng.sample(elems, rng.randint(0, 7)))
        cert = jacobian_dominance(cone, X, rng)
        assert cert.verdict == M.independent(X)


def test_verify_hl_multiview_and_universal():
    r = verify_hl(4, "multiview", seed=1)
    assert r.all_pass and len(r.representatives) == 2
    assert all(rep.certificate.rank == 7 for rep in r.representatives)
    d = r.to_json_dict()
    assert d["all_pass"] and d["prime"] == DEFAULT_PRIME

    r6 = verify_hl(6, "universal", seed=3)
    assert r6.all_pass
    assert all(rep.certificate.rank == 81 == rep.certificate.size
               for rep in r6.representatives)


def test_verify_hl_exhaustive_n4():
    r = verify_hl(4, "multiview", seed=1, exhaustive=True)
    assert r.exhaustive_total == 648 and r.exhaustive_passed == 648
    with pytest.raises(ValueError):
        verify_hl(4, "universal", seed=1, exhaustive=True)


def test_verify_hl_alt_prime_replay():
    r1 = verify_hl(4, "multiview", seed=9, prime=DEFAULT_PRIME)
    r2 = verify_hl(4, "multiview", seed=9, prime=ALT_PRIME)
    assert r1.all_pass and r2.all_pass
    assert r2.prime == ALT_PRIME


def test_base_case_small(cams4, focals4_fp):
    report = base_case_groebner(orders=2, seed=0, prune="gm",
                                focals=focals4_fp, cams=cams4)
    assert report.all_pass
    assert report.focal_count == 195
    for oc in report.orders:
        assert oc.squarefree_ok and oc.buchberger_ok
        assert oc.facet_count == 648 and oc.facet_sizes_ok
    d = report.to_json_dict()
    assert d["all_pass"] and len(d["orders"]) == 2
    with pytest.raises(ValueError):
        base_case_groebner(n=5)


def test_homogenized_initials_structure(focals4_fp):
    """Initial monomials of homogenized focals: square-free, degree |spread|,
    affine support inside the focal spread; doubled-complex facets have size
    N + n + 3 = 19."""
    rng = random.Random(77)
    homog = [(f, multihomogenize(f.poly)) for f in focals4_fp]
    dspace = homog[0][1].space
    nv2 = dspace.nvars
    for trial in range(3):
        order = sample_order(dspace, rng, product_extension=True)
        inits = []
        for f, fh in homog:
            m = initial_monomial(fh, order)
            assert mono_is_squarefree(m, nv2)
            assert mono_degree(m, nv2) == len(f.spread)
            affine_supp = {v for v in range(12)
                           if mono_support(m, nv2) & (1 << v)}
            assert affine_supp <= f.spread
            if f.k == 2:
                assert mono_degree(m, nv2) == 6
            inits.append(m)
        facets = facets_bruteforce([mono_support(m, nv2) for m in inits],
                                   range(nv2), _cap=nv2)
        assert len(facets) == 648
        assert all(f.bit_count() == 19 for f in facets)


def test_buchberger_under_restricted_order(focals4_fp):
    rng = random.Random(99)
    dspace = VarSpace.multiview(4).double()
    order = sample_order(dspace, rng, product_extension=True)
    polys = [f.poly for f in focals4_fp]
    assert buchberger_check(polys, order.affine_restriction(), prune="gm")
