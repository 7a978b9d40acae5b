"""Generic camera configurations and their focal polynomials.

A configuration of n pinhole cameras is generic when every 4x4 minor of the
4 x 3n matrix of stacked camera rows is nonzero.  For a camera subset sigma
of size k in {2,3,4}, the k-focal matrix is the 3k x (4+k) block matrix with
the cameras in the first four columns and one image-variable column per
camera; k-focals are its maximal minors.  Selections giving some camera
exactly one row are dropped (such minors are monomial multiples of smaller
focals), as are selections giving some camera no row (the minor is zero), so
every kept selection takes 2 or 3 rows from each camera.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .determinant import det_symbolic
from .fields import QQ
from .linalg import det_bareiss, matvec, rank_field
from .poly import MultiPoly, mono_items
from .varspace import IMAGE, VarSpace

ENTRY_BOUND = 1000
_ROW_SUBSETS = ((1, 2), (1, 3), (2, 3), (1, 2, 3))


@dataclass(frozen=True)
class CameraConfig:
    """n integer 3x4 camera matrices plus a genericity certificate."""

    n: int
    matrices: tuple
    seed: int
    generic: bool
    minors_checked: int
    zero_minors: tuple

    def matrix(self, i: int):
        """Rows of camera i (1-based)."""
        return self.matrices[i - 1]


def certify_cameras(matrices):
    """Check rank 3 per camera and all 4x4 stacked minors nonzero."""
    n = len(matrices)
    for cam in matrices:
        if rank_field([list(r) for r in cam], QQ) != 3:
            return False, 0, ()
    # columns of the 4 x 3n stacked matrix are the camera rows
    cols = [list(row) for cam in matrices for row in cam]
    zero = []
    checked = 0
    for sel in combinations(range(3 * n), 4):
        checked += 1
        m = [[cols[c][r] for c in sel] for r in range(4)]
        if det_bareiss(m) == 0:
            zero.append(sel)
    return not zero, checked, tuple(zero)


def camera_config(matrices, seed: int = -1) -> CameraConfig:
    """Wrap explicit matrices, computing the genericity certificate."""
    mats = tuple(tuple(tuple(row) for row in cam) for cam in matrices)
    generic, checked, zero = certify_cameras(mats)
    return CameraConfig(len(mats), mats, seed, generic, checked, zero)


def sample_generic_cameras(n: int, seed: int, retries: int = 32) -> CameraConfig:
    """Random integer cameras with entries in [-1000, 1000], resampled until
    the genericity certificate holds."""
    if n < 2:
        raise ValueError("need at least two cameras")
    rng = random.Random(seed)
    for _ in range(retries):
        mats = tuple(
            tuple(tuple(rng.randint(-ENTRY_BOUND, ENTRY_BOUND) for _ in range(4))
                  for _ in range(3))
            for _ in range(n))
        cfg = camera_config(mats, seed)
        if cfg.generic:
            return cfg
    raise RuntimeError(f"no generic configuration found in {retries} attempts")


@dataclass(frozen=True)
class Focal:
    """A k-focal: determinant of a row selection of the focal matrix."""

    sigma: tuple        # 1-based camera indices, increasing
    rows: tuple         # selected rows of the 3k x (4+k) matrix, 0-based
    poly: MultiPoly
    spread: frozenset   # variable indices in the support
    profile: tuple      # image-variable count per camera, length n

    @property
    def k(self) -> int:
        return len(self.sigma)


def focal_matrix(sigma, cams=None, n=None, mode="numeric", field=QQ):
    """The 3k x (4+k) focal matrix as MultiPoly entries.

    Returns (rows, space).  Numeric mode places the exact camera entries of
    ``cams`` in the first four columns; symbolic mode uses camera-entry
    variables instead.
    """
    sigma = tuple(sigma)
    k = len(sigma)
    if k not in (2, 3, 4):
        raise ValueError(f"focal matrices need 2 <= k <= 4 cameras, got {k}")
    if mode == "numeric":
        if cams is None:
            raise ValueError("numeric mode needs a camera configuration")
        n = cams.n
        space = VarSpace.multiview(n)
    elif mode == "symbolic":
        if n is None:
            raise ValueError("symbolic mode needs the camera count n")
        space = VarSpace.universal(n)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    zero = MultiPoly.zero(space, field)
    rows = []
    for t, i in enumerate(sigma):
        for j in range(1, 4):
            row = []
            for m in range(1, 5):
                if mode == "numeric":
                    row.append(MultiPoly.constant(space, field,
                                                  cams.matrix(i)[j - 1][m - 1]))
                else:
                    row.append(MultiPoly.variable(space, field,
                                                  space.a_index(i, j, m)))
            for s in range(k):
                if s == t:
                    row.append(MultiPoly.variable(space, field,
                                                  space.x_index(i, j)))
                else:
                    row.append(zero)
            rows.append(row)
    return rows, space


def row_selections(k: int):
    """Per-camera row subsets with 2 or 3 rows each, totalling 4+k,
    in lexicographic order of the flattened global row tuple."""
    out = []
    for combo in product(_ROW_SUBSETS, repeat=k):
        if sum(len(s) for s in combo) == 4 + k:
            rows = tuple(3 * t + j - 1 for t, s in enumerate(combo) for j in s)
            out.append((rows, combo))
    out.sort()
    return out


def spread_and_profile(f: MultiPoly, n: int):
    """Support variables and per-camera image-variable counts."""
    if f.is_zero():
        raise ValueError("zero polynomial has no spread")
    spread = f.spread()
    profile = [0] * n
    for v in spread:
        if f.space.kind(v) == IMAGE:
            profile[f.space.camera_of(v) - 1] += 1
    return spread, tuple(profile)


def enumerate_focals(cams=None, mode="numeric", n=None, field=QQ):
    """All 2-, 3- and 4-focals, deterministically ordered by (k, sigma, rows).

    Numeric mode requires a generic camera configuration; symbolic mode
    instantiates camera entries as variables.
    """
    if mode == "numeric":
        if cams is None:
            raise ValueError("numeric mode needs cameras")
        if not cams.generic:
            raise ValueError("camera configuration is not certified generic")
        n = cams.n
    elif n is None:
        raise ValueError("symbolic mode needs n")
    focals = []
    for k in (2, 3, 4):
        if k > n:
            break
        selections = row_selections(k)
        for sigma in combinations(range(1, n + 1), k):
            matrix, space = focal_matrix(sigma, cams=cams, n=n, mode=mode,
                                         field=field)
            for rows, _combo in selections:
                sub = [matrix[r] for r in rows]
                square = [[row[c] for c in range(4)] +
                          [row[4 + t] for t in range(k)] for row in sub]
                poly = det_symbolic(square)
                spread, profile = spread_and_profile(poly, n)
                focals.append(Focal(sigma, rows, poly, spread, profile))
    return focals


def focal_count(n: int) -> int:
    """C(n,2) + 27*C(n,3) + 81*C(n,4)."""
    from math import comb
    return comb(n, 2) + 27 * comb(n, 3) + 81 * comb(n, 4)


def random_image_point(cams: CameraConfig, rng, bound: int = ENTRY_BOUND):
    """A point of the multiview cone: integer (q, lambda) pushed through the
    cameras.  Returns (q, lam, coords) with coords indexed like the
    multiview variable space."""
    q = [rng.randint(-bound, bound) for _ in range(4)]
    lam = [rng.randint(-bound, bound) for _ in range(cams.n)]
    coords = []
    for i in range(1, cams.n + 1):
        img = matvec([list(r) for r in cams.matrix(i)], q, QQ)
        coords.extend(lam[i - 1] * Fraction(x) for x in img)
    coords = [int(c) for c in coords]
    return q, lam, coords


def evaluate_focals_batched(focals, points):
    """Evaluate focal polynomials at many coordinate vectors at once.

    ``points`` is a sequence of full coordinate vectors (exact ints or field
    elements).  Returns a list of numpy object arrays, one per focal, with
    the exact values.  Focal terms are multilinear with one variable per
    camera of sigma, so products of the first two variables of each term are
    shared across all focals of the same camera subset.
    """
    import numpy as np

    npts = len(points)
    if npts == 0:
        return []
    nvars = focals[0].poly.space.nvars
    cols = [np.array([pt[v] for pt in points], dtype=object)
            for v in range(nvars)]
    pair_cache = {}
    results = []
    last_sigma = None
    for f in focals:
        if f.sigma != last_sigma:
            pair_cache.clear()
            last_sigma = f.sigma
        acc = np.zeros(npts, dtype=object)
        for m, c in f.poly.terms.items():
            if isinstance(c, Fraction):
                c = int(c) if c.denominator == 1 else c
            vs = [v for v, e in mono_items(m, nvars) for _ in range(e)]
            if len(vs) >= 2:
                key = (vs[0], vs[1])
                term = pair_cache.get(key)
                if term is None:
                    term = cols[vs[0]] * cols[vs[1]]
                    pair_cache[key] = term
                for v in vs[2:]:
                    term = term * cols[v]
                term = term * c
            elif vs:
                term = cols[vs[0]] * c
            else:
                term = np.full(npts, c, object)
            acc = acc + term
        results.append(acc)
    return results


def focal_det_at(focal: Focal, matrices, images, field):
    """Exact value of a focal at a point, as the determinant of its selected
    submatrix instantiated with the given cameras and image coordinates
    (images indexed by 3*(i-1) + (j-1))."""
    from .linalg import det_field
    k = focal.k
    rows = []
    for r in focal.rows:
        t, j = divmod(r, 3)
        i = focal.sigma[t]
        row = [field(matrices[i - 1][j][m]) for m in range(4)]
        row += [field.zero()] * k
        row[4 + t] = field(images[3 * (i - 1) + j])
        rows.append(row)
    return det_field(rows, field)
