"""Constructive preimages for facet projections of the two cones.

Given a facet U and a generic target in the affine space indexed by U, these
routines produce an exact point of the cone projecting onto the target.  The
multiview lift peels cameras that contribute a single coordinate, using the
cone scaling in that factor, down to a four-camera instance solved linearly:
the coordinate ratios of every camera contributing c >= 2 coordinates impose
c - 1 linear conditions on the world point, leaving a one-dimensional kernel.
The universal lift reuses the target's cameras verbatim when all camera
variables are present; otherwise it restores a missing camera entry first
and repairs that entry afterwards with the update
    a_new = (a_old * y_k + lambda_i (q_ij - p_ij)) / y_k,
which moves only the lifted point's (i, j) image coordinate onto the target.

Non-generic targets (zero kernels, vanishing pivots) raise
DegenerateTargetError; callers resample the target.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import kernel_basis, matvec
from .varspace import VarSpace


class DegenerateTargetError(Exception):
    """The target hit a measure-zero degeneracy; resample and retry."""


@dataclass(frozen=True)
class MultiviewLift:
    """A point of the multiview cone with its parametrization witness."""

    coords: tuple   # length 3n, multiview variable order
    q: tuple        # world point
    lam: tuple      # per-camera scale


@dataclass(frozen=True)
class UniversalLift:
    """A point of the universal cone with its witness."""

    matrices: tuple  # n exact 3x4 camera matrices
    images: tuple    # length 3n image coordinates
    y: tuple         # world point with A_i y = lam_i p_i for all i
    lam: tuple

    def coords(self, space: VarSpace) -> tuple:
        out = [None] * space.nvars
        n = len(self.matrices)
        for i in range(1, n + 1):
            for j in range(1, 4):
                out[space.x_index(i, j)] = self.images[3 * (i - 1) + (j - 1)]
                for k in range(1, 5):
                    out[space.a_index(i, j, k)] = self.matrices[i - 1][j - 1][k - 1]
        return tuple(out)


def _camera_coords_in(U, space: VarSpace, n: int):
    per_cam = {i: [] for i in range(1, n + 1)}
    for v in U:
        i, j = space.image_coords(v)
        per_cam[i].append(j)
    for js in per_cam.values():
        js.sort()
    return per_cam


def lift_preimage_multiview(U, target, matrices, field) -> MultiviewLift:
    """Exact preimage of a generic target under pi_U on the multiview cone.

    U is a set of multiview variable indices forming a facet; target maps
    each index of U to a field value; matrices are the n exact cameras.
    """
    n = len(matrices)
    space = VarSpace.multiview(n)
    per_cam = _camera_coords_in(U, space, n)
    if any(not js for js in per_cam.values()):
        raise ValueError("every camera must contribute at least one coordinate")
    tgt = {space.image_coords(v): target[v] for v in U}
    active = list(range(1, n + 1))
    peeled = []
    while len(active) > 4:
        single = [i for i in active if len(per_cam[i]) == 1]
        if not single:
            raise ValueError("no camera contributes exactly one coordinate; "
                             "not a facet in canonical position")
        c = max(single)
        active.remove(c)
        peeled.append(c)

    q = _solve_world_point([(i, per_cam[i]) for i in active], tgt, matrices,
                           field)
    lam = {}
    for i in active + peeled:
        j0 = per_cam[i][0]
        img = matvec(matrices[i - 1], q, field)
        d = img[j0 - 1]
        if field.is_zero(d):
            raise DegenerateTargetError(
                f"projection of the world point vanishes at camera {i}")
        lam[i] = field.div(tgt[(i, j0)], d)

    coords = []
    lam_vec = []
    for i in range(1, n + 1):
        img = matvec(matrices[i - 1], q, field)
        coords.extend(field.mul(lam[i], x) for x in img)
        lam_vec.append(lam[i])
    return MultiviewLift(tuple(coords), tuple(q), tuple(lam_vec))


def _solve_world_point(cam_coords, tgt, matrices, field):
    """World point compatible with the coordinate ratios of every camera
    contributing two or more target coordinates."""
    rows = []
    for i, js in cam_coords:
        cam = matrices[i - 1]
        j0 = js[0]
        for j in js[1:]:
            t0 = tgt[(i, j0)]
            tj = tgt[(i, j)]
            rows.append([
                field.sub(field.mul(tj, field(cam[j0 - 1][m])),
                          field.mul(t0, field(cam[j - 1][m])))
                for m in range(4)
            ])
    kern = kernel_basis(rows, 4, field)
    if len(kern) != 1:
        raise DegenerateTargetError(
            f"world-point system has kernel dimension {len(kern)}, expected 1")
    return kern[0]


def lift_preimage_universal(U, target, n, field, rng) -> UniversalLift:
    """Exact preimage of a generic target under pi_U on the universal cone.

    When U contains every camera variable the target's cameras are reused
    exactly and the image part reduces to a multiview lift through them.
    Otherwise some image variable of U misses a camera-entry partner: that
    entry is restored (with a fresh generic value in the subtarget), the
    smaller instance is lifted, and the entry update repairs the remaining
    image coordinate.
    """
    space = VarSpace.universal(n)
    U = frozenset(U)
    missing = _missing_entry(U, space, n)
    if missing is None:
        mats = tuple(
            tuple(tuple(target[space.a_index(i, j, k)] for k in range(1, 5))
                  for j in range(1, 4))
            for i in range(1, n + 1))
        xtarget = {}
        mspace = VarSpace.multiview(n)
        for v in U:
            if space.kind(v) == "x":
                i, j = space.image_coords(v)
                xtarget[mspace.x_index(i, j)] = target[v]
        mlift = lift_preimage_multiview(set(xtarget), xtarget, mats, field)
        # multiview scales satisfy p_i = lam_i A_i q; the witness convention
        # here is A_i y = lam_i p_i, so invert the per-camera scales
        wit = tuple(field.inv(l) for l in mlift.lam)
        return UniversalLift(mats, mlift.coords, mlift.q, wit)

    i, j, k = missing
    xv = space.x_index(i, j)
    av = space.a_index(i, j, k)
    sub_target = dict(target)
    q_ij = sub_target.pop(xv)
    sub_target[av] = field.random_nonzero(rng)
    sub = lift_preimage_universal((U - {xv}) | {av}, sub_target, n, field, rng)

    yk = sub.y[k - 1]
    if field.is_zero(yk):
        raise DegenerateTargetError("world-point coordinate y_k vanishes")
    p_ij = sub.images[3 * (i - 1) + (j - 1)]
    a_old = sub.matrices[i - 1][j - 1][k - 1]
    lam_i = sub.lam[i - 1]
    a_new = field.div(
        field.add(field.mul(a_old, yk),
                  field.mul(lam_i, field.sub(q_ij, p_ij))), yk)

    mats = [[list(row) for row in cam] for cam in sub.matrices]
    mats[i - 1][j - 1][k - 1] = a_new
    images = list(sub.images)
    images[3 * (i - 1) + (j - 1)] = q_ij
    return UniversalLift(
        tuple(tuple(tuple(r) for r in cam) for cam in mats),
        tuple(images), sub.y, sub.lam)


def _missing_entry(U, space: VarSpace, n: int):
    """Largest image variable of U with an absent camera-entry partner,
    together with the largest absent entry index; None when every image
    variable of U has all four partners present."""
    for v in sorted(U, reverse=True):
        if space.kind(v) != "x":
            continue
        i, j = space.image_coords(v)
        for k in range(4, 0, -1):
            if space.a_index(i, j, k) not in U:
                return (i, j, k)
    return None


def sample_target(U, rng, field) -> dict:
    """Generic target: independent nonzero field values on U."""
    return {v: field.random_nonzero(rng) for v in sorted(U)}


def lift_with_retries(lift_fn, U, rng, field, attempts: int = 8):
    """Sample targets until the lift succeeds; returns (target, lift)."""
    last = None
    for _ in range(attempts):
        target = sample_target(U, rng, field)
        try:
            return target, lift_fn(target)
        except DegenerateTargetError as exc:
            last = exc
    raise DegenerateTargetError(
        f"no generic target found in {attempts} attempts: {last}")
