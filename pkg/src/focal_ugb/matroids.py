"""Matroid oracles: uniform, partition direct sums, transversal, unions, minors.

Every variant here is transversal, so unions are realized by gluing the
bipartite presentations along the shared left side (the class of transversal
matroids is closed under union); independence and rank then reduce to
bipartite matchings found with augmenting paths.  The union rank formula
  r(X) = min over Y subseteq X of  sum_i r_i(Y) + |X \\ Y|
is available separately as an exhaustive cross-check for small X.
"""

from __future__ import annotations

from itertools import combinations

from .varspace import VarSpace


def max_matching(adjacency, X) -> int:
    """Maximum bipartite matching covering elements of X, via augmenting
    paths.  ``adjacency`` maps each left element to its right neighbors."""
    match_right = {}
    match_left = {}

    def augment(u, seen):
        for t in adjacency[u]:
            if t in seen:
                continue
            seen.add(t)
            w = match_right.get(t)
            if w is None or augment(w, seen):
                match_right[t] = u
                match_left[u] = t
                return True
        return False

    size = 0
    for u in X:
        if augment(u, set()):
            size += 1
    return size


def matching_covers(adjacency, X) -> bool:
    match_right = {}

    def augment(u, seen):
        for t in adjacency[u]:
            if t in seen:
                continue
            seen.add(t)
            w = match_right.get(t)
            if w is None or augment(w, seen):
                match_right[t] = u
                return True
        return False

    for u in X:
        if not augment(u, set()):
            return False
    return True


class MatroidOracle:
    """Base class: a ground set plus independence / rank queries."""

    ground: frozenset

    def _check(self, X) -> frozenset:
        X = frozenset(X)
        if not X <= self.ground:
            raise ValueError("query set is not contained in the ground set")
        return X

    def independent(self, X) -> bool:
        X = self._check(X)
        return self.rank(X) == len(X)

    def rank(self, X) -> int:
        raise NotImplementedError

    def full_rank(self) -> int:
        return self.rank(self.ground)

    def adjacency(self) -> dict:
        """Bipartite presentation: element -> tuple of right-side labels."""
        raise NotImplementedError


class UniformMatroid(MatroidOracle):
    """All subsets of size at most k are independent."""

    def __init__(self, k: int, ground):
        self.k = k
        self.ground = frozenset(ground)

    def rank(self, X) -> int:
        X = self._check(X)
        return min(len(X), self.k)

    def independent(self, X) -> bool:
        return len(self._check(X)) <= self.k

    def adjacency(self) -> dict:
        labels = tuple(("u", t) for t in range(self.k))
        return {e: labels for e in self.ground}


class PartitionMatroid(MatroidOracle):
    """Direct sum of uniform matroids on pairwise disjoint blocks."""

    def __init__(self, blocks):
        """blocks: iterable of (elements, rank) with disjoint element sets."""
        self.blocks = [(frozenset(b), r) for b, r in blocks]
        ground = set()
        for b, _ in self.blocks:
            if ground & b:
                raise ValueError("partition blocks must be disjoint")
            ground |= b
        self.ground = frozenset(ground)

    def rank(self, X) -> int:
        X = self._check(X)
        return sum(min(len(X & b), r) for b, r in self.blocks)

    def adjacency(self) -> dict:
        adj = {}
        for bi, (b, r) in enumerate(self.blocks):
            labels = tuple(("p", bi, t) for t in range(r))
            for e in b:
                adj[e] = labels
        return adj


class TransversalMatroid(MatroidOracle):
    """Sets coverable by a matching in an explicit bipartite graph."""

    def __init__(self, adjacency):
        self._adj = {e: tuple(ts) for e, ts in adjacency.items()}
        self.ground = frozenset(self._adj)

    def rank(self, X) -> int:
        X = self._check(X)
        return max_matching(self._adj, sorted(X))

    def independent(self, X) -> bool:
        X = self._check(X)
        return matching_covers(self._adj, sorted(X))

    def adjacency(self) -> dict:
        return dict(self._adj)


class UnionMatroid(MatroidOracle):
    """Union of matroids, realized as one transversal matroid by gluing the
    summands' bipartite presentations (right sides made disjoint)."""

    def __init__(self, oracles):
        self.oracles = list(oracles)
        ground = set()
        adj = {}
        for idx, M in enumerate(self.oracles):
            ground |= M.ground
            for e, labels in M.adjacency().items():
                tagged = tuple((idx, lab) for lab in labels)
                adj[e] = adj.get(e, ()) + tagged
        self.ground = frozenset(ground)
        self._adj = adj

    def rank(self, X) -> int:
        X = self._check(X)
        return max_matching(self._adj, sorted(X))

    def independent(self, X) -> bool:
        X = self._check(X)
        return matching_covers(self._adj, sorted(X))

    def adjacency(self) -> dict:
        return dict(self._adj)


class MinorMatroid(MatroidOracle):
    """M \\ delete / contract via the rank identity
    r(X) = r_base(X + contract) - r_base(contract)."""

    def __init__(self, base: MatroidOracle, delete, contract):
        delete = frozenset(delete)
        contract = frozenset(contract)
        if delete & contract:
            raise ValueError("delete and contract sets must be disjoint")
        if not (delete | contract) <= base.ground:
            raise ValueError("delete/contract not contained in the ground set")
        if not base.independent(contract):
            raise ValueError("contracted set must be independent")
        self.base = base
        self.delete = delete
        self.contract = contract
        self._rc = base.rank(contract)
        self.ground = base.ground - delete - contract

    def rank(self, X) -> int:
        X = self._check(X)
        return self.base.rank(X | self.contract) - self._rc


# -- spec-level operation names ----------------------------------------------

def matroid_independent(M: MatroidOracle, X) -> bool:
    return M.independent(X)


def matroid_rank(M: MatroidOracle, X) -> int:
    return M.rank(X)


def matroid_minor(M: MatroidOracle, delete, contract) -> MatroidOracle:
    return MinorMatroid(M, delete, contract)


def union_rank_min_formula(oracles, X) -> int:
    """Exhaustive evaluation of the union rank formula; exponential in |X|,
    intended as an independent cross-check for |X| <= 12."""
    X = frozenset(X)
    best = None
    elems = sorted(X)
    for r in range(len(elems) + 1):
        for Y in combinations(elems, r):
            Y = frozenset(Y)
            total = sum(M.rank(Y & M.ground) for M in oracles) + len(X - Y)
            if best is None or total < best:
                best = total
    return best


# -- the two matroids of this package ----------------------------------------

def delta_matroid(n: int) -> UnionMatroid:
    """Rank n+3 transversal matroid of the multiview complex: the union of a
    rank-3 uniform matroid on all image variables and one rank-1 block per
    camera."""
    space = VarSpace.multiview(n)
    xvars = space.image_vars()
    blocks = [(frozenset(space.x_index(i, j) for j in range(1, 4)), 1)
              for i in range(1, n + 1)]
    return UnionMatroid([UniformMatroid(3, xvars), PartitionMatroid(blocks)])


def delta_tilde_matroid(n: int) -> UnionMatroid:
    """Rank 13n+3 union matroid on the 15n universal variables: a rank-3
    uniform matroid on everything plus one rank-13 block per camera (its 3
    image + 12 entry variables).

    Every face of the universal complex is independent here and every facet
    is a basis, but the containment is strict: this matroid only constrains
    per-camera block sizes, while 3-focal spreads impose per-row conditions.
    A 3-focal spread (35 variables, camera blocks of sizes 10/15/10) is
    independent in this matroid yet is a nonface of the complex; at n = 4
    the matroid has 3,402,000 bases against the complex's 2,025,000 facets.
    """
    space = VarSpace.universal(n)
    allvars = list(range(space.nvars))
    blocks = [(frozenset(space.camera_block(i)), 13) for i in range(1, n + 1)]
    return UnionMatroid([UniformMatroid(3, allvars), PartitionMatroid(blocks)])


def delta_transversal_graph(n: int) -> TransversalMatroid:
    """The explicit bipartite presentation of the multiview matroid: every
    image variable x_i_j is adjacent to three shared vertices a, b, c and to
    its camera vertex v_i."""
    space = VarSpace.multiview(n)
    adj = {}
    for i in range(1, n + 1):
        for j in range(1, 4):
            adj[space.x_index(i, j)] = ("a", "b", "c", ("v", i))
    return TransversalMatroid(adj)
