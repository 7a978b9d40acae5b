"""Parametrizations of the multiview and universal cones, with exact Jacobians.

The multiview cone is the image of (q, lambda) -> (lambda_i * A_i q)_i in the
3n image coordinates; the universal cone additionally carries the 12n camera
entries as free coordinates.  A coordinate projection pi_U is dominant iff
the Jacobian restricted to the rows of U has full rank |U| at a generic
point; evaluating at a random prime-field point certifies this up to the
usual vanishing probability, so a failed rank is retried once at a fresh
point before being reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .linalg import matvec, rank_field
from .varspace import VarSpace


class MultiviewCone:
    """(q, lambda) -> (lambda_i * A_i q)_i, coordinates in multiview order."""

    def __init__(self, matrices, field):
        self.matrices = tuple(tuple(tuple(r) for r in cam) for cam in matrices)
        self.n = len(matrices)
        self.field = field
        self.space = VarSpace.multiview(self.n)
        self.param_count = 4 + self.n
        self.expected_rank = self.n + 3

    def random_parameters(self, rng):
        F = self.field
        return tuple(F.random_nonzero(rng) for _ in range(self.param_count))

    def point(self, params):
        F = self.field
        q = params[:4]
        lam = params[4:]
        coords = []
        for i in range(self.n):
            img = matvec(self.matrices[i], q, F)
            coords.extend(F.mul(lam[i], x) for x in img)
        return tuple(coords)

    def jacobian(self, params):
        F = self.field
        q = params[:4]
        lam = params[4:]
        rows = []
        for i in range(self.n):
            img = matvec(self.matrices[i], q, F)
            for j in range(3):
                row = [F.zero()] * self.param_count
                for m in range(4):
                    row[m] = F.mul(lam[i], F(self.matrices[i][j][m]))
                row[4 + i] = img[j]
                rows.append(row)
        return rows


class UniversalCone:
    """(A, q, lambda) -> (A, (lambda_i * A_i q)_i), coordinates in universal
    variable order (three image coordinates then twelve entries per camera)."""

    def __init__(self, n, field):
        self.n = n
        self.field = field
        self.space = VarSpace.universal(n)
        self.param_count = 12 * n + 4 + n
        self.expected_rank = 13 * n + 3

    def _a_param(self, i, j, k):
        """Column of parameter a_i_j_k (all 1-based)."""
        return 12 * (i - 1) + 4 * (j - 1) + (k - 1)

    def random_parameters(self, rng):
        F = self.field
        return tuple(F.random_nonzero(rng) for _ in range(self.param_count))

    def split(self, params):
        n = self.n
        a = params[:12 * n]
        q = params[12 * n:12 * n + 4]
        lam = params[12 * n + 4:]
        mats = tuple(
            tuple(tuple(a[12 * (i - 1) + 4 * (j - 1) + k] for k in range(4))
                  for j in range(1, 4))
            for i in range(1, n + 1))
        return mats, q, lam

    def point(self, params):
        F = self.field
        mats, q, lam = self.split(params)
        coords = [F.zero()] * self.space.nvars
        for i in range(1, self.n + 1):
            img = matvec(mats[i - 1], q, F)
            for j in range(1, 4):
                coords[self.space.x_index(i, j)] = F.mul(lam[i - 1], img[j - 1])
                for k in range(1, 5):
                    coords[self.space.a_index(i, j, k)] = mats[i - 1][j - 1][k - 1]
        return tuple(coords)

    def jacobian(self, params):
        F = self.field
        n = self.n
        mats, q, lam = self.split(params)
        rows = [None] * self.space.nvars
        for i in range(1, n + 1):
            img = matvec(mats[i - 1], q, F)
            for j in range(1, 4):
                row = [F.zero()] * self.param_count
                for k in range(1, 5):
                    row[self._a_param(i, j, k)] = F.mul(lam[i - 1], q[k - 1])
                for m in range(4):
                    row[12 * n + m] = F.mul(lam[i - 1], F(mats[i - 1][j - 1][m]))
                row[12 * n + 4 + (i - 1)] = img[j - 1]
                rows[self.space.x_index(i, j)] = row
                for k in range(1, 5):
                    arow = [F.zero()] * self.param_count
                    arow[self._a_param(i, j, k)] = F.one()
                    rows[self.space.a_index(i, j, k)] = arow
        return rows


@dataclass
class DominanceCertificate:
    """Rank evidence that a coordinate projection is dominant."""

    facet: tuple                 # sorted variable names
    size: int
    rank: int
    verdict: bool
    prime: int
    attempts: list = dc_field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "facet": list(self.facet),
            "size": self.size,
            "rank": self.rank,
            "verdict": self.verdict,
            "prime": self.prime,
            "attempts": [
                {"rank": r, "parameters": [str(x) for x in pt]}
                for r, pt in self.attempts
            ],
        }


def jacobian_dominance(cone, U, rng, retries: int = 1) -> DominanceCertificate:
    """Restrict the Jacobian rows to the coordinates of U at a random point
    and compute the exact rank; rank |U| certifies dominance of pi_U."""
    F = cone.field
    idx = sorted(U)
    if any(v < 0 or v >= cone.space.nvars for v in idx):
        raise ValueError("coordinate subset outside the coordinate space")
    attempts = []
    rank = 0
    for _ in range(retries + 1):
        params = cone.random_parameters(rng)
        jac = cone.jacobian(params)
        rows = [jac[v] for v in idx]
        rank = rank_field(rows, F) if rows else 0
        attempts.append((rank, params))
        if rank == len(idx):
            break
    return DominanceCertificate(
        facet=tuple(cone.space.name(v) for v in idx),
        size=len(idx),
        rank=rank,
        verdict=rank == len(idx),
        prime=getattr(F, "p", 0),
        attempts=attempts,
    )


def full_jacobian_rank(cone, rng) -> int:
    params = cone.random_parameters(rng)
    return rank_field(cone.jacobian(params), cone.field)
