"""Small exact dense linear algebra over a coefficient field.

Matrices are lists of row lists.  Everything here is fraction-free or
division-exact; nothing is approximate.
"""

from __future__ import annotations

from fractions import Fraction


def det_bareiss(rows):
    """Fraction-free determinant of a square int/Fraction matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0 * prev
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                num = akk * row_i[j] - aik * row_k[j]
                if isinstance(num, int) and isinstance(prev, int):
                    row_i[j] = num // prev
                else:
                    row_i[j] = Fraction(num, prev) if prev != 1 else num
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def det_field(rows, field):
    """Determinant over an arbitrary field via Gaussian elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    a = [[field(x) for x in r] for r in rows]
    det = field.one()
    for k in range(n):
        piv = None
        for i in range(k, n):
            if not field.is_zero(a[i][k]):
                piv = i
                break
        if piv is None:
            return field.zero()
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = field.neg(det)
        akk = a[k][k]
        det = field.mul(det, akk)
        inv = field.inv(akk)
        for i in range(k + 1, n):
            if field.is_zero(a[i][k]):
                continue
            f = field.mul(a[i][k], inv)
            ri, rk = a[i], a[k]
            for j in range(k, n):
                ri[j] = field.sub(ri[j], field.mul(f, rk[j]))
    return det


def rank_field(rows, field) -> int:
    """Exact rank via row reduction."""
    if not rows:
        return 0
    a = [[field(x) for x in r] for r in rows]
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if not field.is_zero(a[i][c]):
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inv(a[r][c])
        row_r = a[r]
        for i in range(r + 1, m):
            if field.is_zero(a[i][c]):
                continue
            f = field.mul(a[i][c], inv)
            ri = a[i]
            for j in range(c, n):
                ri[j] = field.sub(ri[j], field.mul(f, row_r[j]))
        r += 1
        if r == m:
            break
    return r


def kernel_basis(rows, ncols, field):
    """Basis of the right kernel of a (possibly empty) matrix."""
    a = [[field(x) for x in r] for r in rows]
    m = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, m):
            if not field.is_zero(a[i][c]):
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(x, inv) for x in a[r]]
        for i in range(m):
            if i != r and not field.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero()] * ncols
        vec[fc] = field.one()
        for ri, pc in enumerate(pivots):
            vec[pc] = field.neg(a[ri][fc])
        basis.append(vec)
    return basis


def matvec(rows, vec, field):
    out = []
    for r in rows:
        s = field.zero()
        for x, y in zip(r, vec):
            s = field.add(s, field.mul(field(x), y))
        out.append(s)
    return out


def mat_rows_apply(matrix3x4, vec4, field):
    """A 3x4 camera matrix applied to a length-4 vector."""
    return matvec(matrix3x4, vec4, field)
