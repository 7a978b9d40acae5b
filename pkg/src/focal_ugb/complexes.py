"""The complexes generated by focal spreads, and their facets.

For n >= 4 cameras the complex on the 3n image variables whose nonfaces are
generated by the focal spreads is pure of dimension n+2; its facets are the
variable sets whose profile is a permutation of (3,2,1,...,1) or
(2,2,2,1,...,1), with free choices of image variables per camera.  The
universal analog on all 15n variables is pure of dimension 13n+2 and its
facets arise from multiview facets by a toggle process: start from a facet
union all camera variables, then repeatedly adjoin an absent image variable
while removing one of its four camera-entry partners.

Faces are bitmasks over the variable space; helpers convert to variable-name
sets for serialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .varspace import VarSpace

_PAIRS = ((1, 2), (1, 3), (2, 3))
_SINGLES = ((1,), (2,), (3,))
_TRIPLE = ((1, 2, 3),)


@dataclass(frozen=True)
class FacetSet:
    """Materialized facets of a complex, as sorted bitmasks."""

    space: VarSpace
    masks: tuple

    @property
    def count(self) -> int:
        return len(self.masks)

    def names(self, mask: int):
        return [self.space.name(v) for v in mask_vars(mask)]

    def __iter__(self):
        return iter(self.masks)


def mask_of(vars_iter) -> int:
    m = 0
    for v in vars_iter:
        m |= 1 << v
    return m


def mask_vars(mask: int):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def count_facets_delta(n: int) -> int:
    """n(n-1) 3^(n-1) facets of the (3,2,1,...) kind plus C(n,3) 3^n of the
    (2,2,2,1,...) kind."""
    if n < 4:
        raise ValueError("the complex is defined for n >= 4")
    return n * (n - 1) * 3 ** (n - 1) + comb(n, 3) * 3 ** n


def profile_of_mask(mask: int, n: int, space: VarSpace) -> tuple:
    prof = [0] * n
    for v in mask_vars(mask):
        if space.kind(v) == "x":
            prof[space.camera_of(v) - 1] += 1
    return tuple(prof)


def facets_delta_n(n: int) -> FacetSet:
    """All facets, generated from the two facet profiles directly."""
    if n < 4:
        raise ValueError("the complex is defined for n >= 4")
    space = VarSpace.multiview(n)
    choice_bits = []
    for i in range(1, n + 1):
        per_cam = {}
        for js in _TRIPLE + _PAIRS + _SINGLES:
            per_cam[js] = mask_of(space.x_index(i, j) for j in js)
        choice_bits.append(per_cam)

    masks = []
    cameras = list(range(1, n + 1))
    # profile (3,2,1,...,1): ordered pair (camera with 3, camera with 2)
    for i3 in cameras:
        for i2 in cameras:
            if i2 == i3:
                continue
            rest = [i for i in cameras if i not in (i3, i2)]
            base = choice_bits[i3 - 1][(1, 2, 3)]
            for pair in _PAIRS:
                m2 = base | choice_bits[i2 - 1][pair]
                for singles in product(_SINGLES, repeat=len(rest)):
                    m = m2
                    for cam, s in zip(rest, singles):
                        m |= choice_bits[cam - 1][s]
                    masks.append(m)
    # profile (2,2,2,1,...,1): unordered triple of cameras with 2
    for trip in combinations(cameras, 3):
        rest = [i for i in cameras if i not in trip]
        for pairs in product(_PAIRS, repeat=3):
            m3 = 0
            for cam, pr in zip(trip, pairs):
                m3 |= choice_bits[cam - 1][pr]
            for singles in product(_SINGLES, repeat=len(rest)):
                m = m3
                for cam, s in zip(rest, singles):
                    m |= choice_bits[cam - 1][s]
                masks.append(m)
    masks.sort()
    return FacetSet(space, tuple(masks))


def focal_spread_masks(n: int, universal: bool = False):
    """Spread masks of all nonredundant focals, combinatorially.

    Every kept row selection takes 2 or 3 rows per camera; its spread is the
    selected image variables, plus (universal mode) all four camera-entry
    partners of each selected row.
    """
    space = VarSpace.universal(n) if universal else VarSpace.multiview(n)
    masks = []
    for k in (2, 3, 4):
        if k > n:
            break
        per_cam_opts = _PAIRS + _TRIPLE
        for sigma in combinations(range(1, n + 1), k):
            for combo in product(per_cam_opts, repeat=k):
                if sum(len(s) for s in combo) != 4 + k:
                    continue
                m = 0
                for cam, js in zip(sigma, combo):
                    for j in js:
                        m |= 1 << space.x_index(cam, j)
                        if universal:
                            for kk in range(1, 5):
                                m |= 1 << space.a_index(cam, j, kk)
                masks.append(m)
    return space, masks


def facets_bruteforce(nonfaces, ground, max_ground: int = 21, _cap=None):
    """Maximal subsets of the ground set containing no nonface generator.

    Facets are computed as complements of the minimal transversals of the
    nonface hypergraph, enumerated by branching on the vertices of an
    uncovered edge with a forbidden-set discipline; results are filtered for
    minimality.  Serves as the independent oracle for the closed-form facet
    generators.
    """
    gmask = ground if isinstance(ground, int) else mask_of(ground)
    nverts = bin(gmask).count("1")
    cap = _cap if _cap is not None else max_ground
    if nverts > cap:
        raise ValueError(f"ground set of size {nverts} exceeds the supported "
                         f"limit of {cap}")
    edges = []
    for nf in nonfaces:
        em = nf if isinstance(nf, int) else mask_of(nf)
        if em & ~gmask:
            raise ValueError("nonface not contained in the ground set")
        if em == 0:
            return ()  # the empty set is a nonface: no faces at all
        edges.append(em)
    edges = sorted(set(edges), key=lambda e: (bin(e).count("1"), e))
    if not edges:
        return (gmask,)

    covers = set()

    def branch(cov: int, forbidden: int, remaining):
        if not remaining:
            covers.add(cov)
            return
        choices = remaining[0] & ~forbidden
        banned = forbidden
        while choices:
            low = choices & -choices
            rest = [e for e in remaining if not e & low]
            branch(cov | low, banned, rest)
            banned |= low
            choices &= choices - 1

    branch(0, 0, edges)

    facets = []
    for cov in covers:
        minimal = True
        for v in mask_vars(cov):
            bit = 1 << v
            if not any(e & cov == bit for e in edges):
                minimal = False
                break
        if minimal:
            facets.append(gmask & ~cov)
    facets.sort()
    return tuple(facets)


# -- the universal complex ---------------------------------------------------

def _universalize_x_mask(mask: int, n: int, uspace: VarSpace,
                         mspace: VarSpace) -> int:
    out = 0
    for v in mask_vars(mask):
        i, j = mspace.image_coords(v)
        out |= 1 << uspace.x_index(i, j)
    return out


def count_facets_delta_tilde(n: int) -> int:
    """Each multiview facet spawns 5^(2n-3) universal facets: every absent
    image variable is either left out or adjoined with one of four
    camera-entry removals."""
    return count_facets_delta(n) * 5 ** (2 * n - 3)


@dataclass(frozen=True)
class DeltaTildeFacets:
    """Lazy facet family of the universal complex."""

    n: int
    space: VarSpace
    count: int
    base: FacetSet

    def __iter__(self):
        n = self.n
        uspace = self.space
        mspace = self.base.space
        a_all = mask_of(uspace.camera_vars())
        all_x = [(i, j) for i in range(1, n + 1) for j in range(1, 4)]
        for base_mask in self.base.masks:
            u_x = _universalize_x_mask(base_mask, n, uspace, mspace)
            u0 = u_x | a_all
            toggles = []
            for (i, j) in all_x:
                xbit = 1 << uspace.x_index(i, j)
                if u_x & xbit:
                    continue
                toggles.append([0] + [xbit | (1 << uspace.a_index(i, j, k))
                                      for k in range(1, 5)])
            yield from self._walk(u0, toggles, 0)

    def _walk(self, mask, toggles, idx):
        if idx == len(toggles):
            yield mask
            return
        for d in toggles[idx]:
            yield from self._walk(mask ^ d, toggles, idx + 1)


def facets_delta_tilde(n: int, materialize: bool = False):
    """Lazy facets of the universal complex with the closed-form count.

    Materialization is refused for n > 4 (the family has
    count_facets_delta(n) * 5^(2n-3) members); at n = 4 it returns the
    2,025,000 facets as a FacetSet.
    """
    if n < 4:
        raise ValueError("the complex is defined for n >= 4")
    lazy = DeltaTildeFacets(n, VarSpace.universal(n),
                            count_facets_delta_tilde(n), facets_delta_n(n))
    if not materialize:
        return lazy
    if n > 4:
        raise ValueError("full materialization is only supported for n = 4; "
                         "use the lazy iterator or counts instead")
    return FacetSet(lazy.space, tuple(sorted(lazy)))


def census_delta_tilde(n: int = 4) -> dict:
    """Stream the recursive generation, verifying distinctness, facet size
    13n+3, and that the fully-covered image variables of every facet form a
    multiview facet."""
    lazy = facets_delta_tilde(n)
    uspace = lazy.space
    base_x_masks = {_universalize_x_mask(m, n, uspace, lazy.base.space)
                    for m in lazy.base.masks}
    checks = []
    for i in range(1, n + 1):
        for j in range(1, 4):
            xbit = 1 << uspace.x_index(i, j)
            amask = mask_of(uspace.a_index(i, j, k) for k in range(1, 5))
            checks.append((xbit, amask))
    want_size = 13 * n + 3
    want_cover = n + 3
    seen = set()
    size_bad = cover_bad = 0
    for mask in lazy:
        seen.add(mask)
        if mask.bit_count() != want_size:
            size_bad += 1
            continue
        covered = 0
        ncov = 0
        for xbit, amask in checks:
            if mask & xbit and mask & amask == amask:
                covered |= xbit
                ncov += 1
        if ncov != want_cover or covered not in base_x_masks:
            cover_bad += 1
    return {
        "n": n,
        "expected": lazy.count,
        "distinct": len(seen),
        "size_violations": size_bad,
        "cover_violations": cover_bad,
        "ok": (len(seen) == lazy.count and size_bad == 0 and cover_bad == 0),
    }


# -- symmetry reduction ------------------------------------------------------

def canonical_facet(U, n: int):
    """Canonical representative of a face under camera permutations.

    The symmetric group acts on the camera index only.  Camera blocks are
    ordered by size descending, then by their coordinate subsets
    lexicographically, and renumbered 1..n: the canonical form is the
    minimal image among those whose profile is sorted descending, so
    representatives read (3,2,1,...,1) / (2,2,2,1,...,1).  Two faces are
    equivalent iff their canonical forms coincide.
    """
    space = VarSpace.multiview(n)
    U = frozenset(U)
    blocks = {i: [] for i in range(1, n + 1)}
    for v in U:
        i, j = space.image_coords(v)
        blocks[i].append(j)
    keys = sorted((-len(js), tuple(sorted(js))) for js in blocks.values())
    out = []
    for new_i, (_, js) in enumerate(keys, start=1):
        for j in js:
            out.append(space.x_index(new_i, j))
    return frozenset(out)


def apply_camera_permutation(U, perm, n: int):
    """Image of a face under the camera relabeling i -> perm[i] (1-based)."""
    space = VarSpace.multiview(n)
    out = set()
    for v in U:
        i, j = space.image_coords(v)
        out.add(space.x_index(perm[i - 1], j))
    return frozenset(out)
