"""Symbolic determinants of small structured polynomial matrices.

The focal matrices pair dense constant camera columns with image columns
holding a single variable block each, so a memoized Laplace expansion over
row subsets prunes hard on the zero pattern.  Purely numeric matrices should
go through :func:`focal_ugb.linalg.det_bareiss` instead.
"""

from __future__ import annotations

from .poly import MultiPoly

MAX_DIM = 9


def det_symbolic(rows) -> MultiPoly:
    """Exact determinant of a square matrix of MultiPoly entries.

    Expands column by column, choosing a row for each column; partial results
    are memoized on the set of used rows.  Columns are visited sparsest first
    (the overall sign of that column permutation is applied at the end).
    """
    size = len(rows)
    if size == 0:
        raise ValueError("empty matrix")
    if any(len(r) != size for r in rows):
        raise ValueError("matrix must be square")
    if size > MAX_DIM:
        raise ValueError(f"symbolic determinant supports dimension <= {MAX_DIM}, "
                         f"got {size}")
    head = rows[0][0]
    space, field = head.space, head.field
    one = MultiPoly.constant(space, field, 1)
    zero = MultiPoly.zero(space, field)

    nonzero_counts = [sum(bool(rows[r][c]) for r in range(size))
                      for c in range(size)]
    col_order = sorted(range(size), key=lambda c: nonzero_counts[c])
    perm_sign = _permutation_sign(col_order)

    full = (1 << size) - 1
    memo = {}

    def expand(avail: int) -> MultiPoly:
        if avail == 0:
            return one
        got = memo.get(avail)
        if got is not None:
            return got
        ci = size - avail.bit_count()
        col = col_order[ci]
        acc = zero
        sign = 1
        rest = avail
        while rest:
            low = rest & -rest
            r = low.bit_length() - 1
            entry = rows[r][col]
            if entry:
                sub = expand(avail & ~low)
                if sub:
                    term = entry * sub
                    acc = acc + term if sign > 0 else acc - term
            sign = -sign
            rest &= rest - 1
        memo[avail] = acc
        return acc

    result = expand(full)
    if perm_sign < 0:
        result = -result
    return result


def _permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
