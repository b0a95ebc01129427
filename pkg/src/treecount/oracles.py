"""Independent brute-force ground truth for every closed-form counter.

Two unrelated oracles, so a bug in one cannot hide in the other:

* exhaustive Prüfer enumeration -- decode every sequence, filter, count;
* the Matrix-Tree determinant of the reduced Laplacian, computed with
  fraction-free (Bareiss) elimination over exact integers.

The enumeration sweeps are deliberately dumb: no formula from
``treecount.formulas`` is consulted anywhere here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Sequence

from .combinatorics import Count, SizeLimitError

PrueferSequence = Sequence[int]

# n**(n-2) sequences at n = 9 is ~4.8M decodes, the desk-scale ceiling.
BRUTE_FORCE_LIMIT = 9

DegreePredicate = Callable[[tuple[int, ...]], bool]
BipartiteDegreePredicate = Callable[[tuple[int, ...], tuple[int, ...]], bool]


@dataclass(frozen=True)
class Tree:
    """A labeled tree on vertices 1..vertex_count.

    Construction checks the three defining properties (edge count,
    connectivity, acyclicity) and rejects anything that is not a tree.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 1:
            raise ValueError(f"vertex_count must be >= 1, got {n}")
        if len(self.edges) != n - 1:
            raise ValueError(
                f"a tree on {n} vertices has {n - 1} edges, got {len(self.edges)}"
            )
        parent = list(range(n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError(f"edge ({u},{v}) closes a cycle")
            parent[ru] = rv
        root = find(1)
        if any(find(v) != root for v in range(2, n + 1)):
            raise ValueError("edges do not connect all vertices")

    def degrees(self) -> tuple[int, ...]:
        degs = [0] * (self.vertex_count + 1)
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs[1:])


class LabeledGraph:
    """A simple graph on vertices 1..vertex_count: no self-loops, no multi-edges."""

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 1:
            raise ValueError(f"vertex_count must be >= 1, got {vertex_count}")
        normalized = set()
        for u, v in edges:
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range 1..{vertex_count}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            normalized.add((u, v) if u < v else (v, u))
        self.vertex_count = vertex_count
        self.edges = frozenset(normalized)

    @classmethod
    def complete(cls, n: int) -> "LabeledGraph":
        return cls(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))

    @classmethod
    def complete_bipartite(cls, m: int, n: int) -> "LabeledGraph":
        return cls(
            m + n,
            ((u, v) for u in range(1, m + 1) for v in range(m + 1, m + n + 1)),
        )

    @classmethod
    def path(cls, n: int) -> "LabeledGraph":
        return cls(n, ((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "LabeledGraph":
        if n < 3:
            raise ValueError(f"a cycle needs >= 3 vertices, got {n}")
        return cls(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def _check_sequence(seq: PrueferSequence, n: int) -> None:
    if n < 2:
        raise ValueError(f"decoding requires n >= 2, got {n}")
    if len(seq) != n - 2:
        raise ValueError(f"sequence length {len(seq)} != n - 2 = {n - 2}")
    for entry in seq:
        if not 1 <= entry <= n:
            raise ValueError(f"sequence entry {entry} out of range 1..{n}")


def pruefer_decode(seq: PrueferSequence, n: int) -> Tree:
    """Decode a Prüfer sequence into its unique labeled tree on 1..n.

    Classical bijection: repeatedly attach the smallest-labeled current
    leaf to the head of the remaining sequence.  The pointer trick below
    keeps that linear: a vertex whose degree drops to 1 below the scan
    pointer becomes the next leaf immediately, anything else resumes the
    scan.  Vertex n is never consumed as a leaf, so it ends the final edge.
    """
    _check_sequence(seq, n)
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    ptr = 1
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for v in seq:
        edges.append((leaf, v) if leaf < v else (v, leaf))
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n))
    return Tree(n, tuple(edges))


def degrees_from_pruefer(seq: PrueferSequence, n: int) -> tuple[int, ...]:
    """Degree sequence of the decoded tree, without building it.

    The degree of vertex v is 1 plus the number of times v occurs in the
    sequence.
    """
    _check_sequence(seq, n)
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    return tuple(degree[1:])


@lru_cache(maxsize=None)
def _complete_degree_tally(n: int) -> dict[tuple[int, ...], int]:
    """Tally of degree profiles over all n**(n-2) Prüfer sequences."""
    tally: dict[tuple[int, ...], int] = {}
    labels = range(1, n + 1)
    for seq in product(labels, repeat=n - 2):
        degree = [1] * (n + 1)
        for v in seq:
            degree[v] += 1
        profile = tuple(degree[1:])
        tally[profile] = tally.get(profile, 0) + 1
    return tally


@lru_cache(maxsize=None)
def _bipartite_split_tally(total: int) -> dict[int, dict[tuple[int, ...], int]]:
    """Degree-profile tallies of split-respecting trees, for every split point.

    One pass over all total**(total-2) sequences.  Each sequence is decoded
    once; an edge (u, v) with u < v tolerates exactly the splits
    u <= m <= v - 1, so the splits a tree respects form one interval
    [lo, hi], maintained during the decode and abandoned early once empty.
    The decode is inlined (same pointer algorithm as pruefer_decode) since
    this loop runs millions of times.
    """
    tallies: dict[int, dict[tuple[int, ...], int]] = {
        m: {} for m in range(1, total)
    }
    labels = range(1, total + 1)
    last = total  # the largest label survives to the final edge
    for seq in product(labels, repeat=total - 2):
        counts = [1] * (total + 1)
        for v in seq:
            counts[v] += 1
        degree = counts.copy()
        ptr = 1
        while degree[ptr] != 1:
            ptr += 1
        leaf = ptr
        lo, hi = 1, total - 1
        alive = True
        for v in seq:
            if leaf < v:
                if leaf > lo:
                    lo = leaf
                if v - 1 < hi:
                    hi = v - 1
            else:
                if v > lo:
                    lo = v
                if leaf - 1 < hi:
                    hi = leaf - 1
            if lo > hi:
                alive = False
                break
            degree[v] -= 1
            if degree[v] == 1 and v < ptr:
                leaf = v
            else:
                ptr += 1
                while degree[ptr] != 1:
                    ptr += 1
                leaf = ptr
        if not alive:
            continue
        if leaf > lo:  # final edge (leaf, last); hi is already <= last - 1
            lo = leaf
        if lo > hi:
            continue
        profile = tuple(counts[1:])
        for m in range(lo, hi + 1):
            bucket = tallies[m]
            bucket[profile] = bucket.get(profile, 0) + 1
    return tallies


def count_trees_complete_brute(
    n: int, predicate: DegreePredicate | None = None
) -> Count:
    """Count labeled trees on 1..n whose degree profile satisfies `predicate`.

    Pure enumeration over all n**(n-2) Prüfer sequences; `None` accepts
    everything.  The predicate sees each distinct degree profile once, so
    it must depend only on the profile.  Bounded at n <= BRUTE_FORCE_LIMIT;
    n = 1 counts its single (empty) tree, whose profile is the lone
    degree 0.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(
            f"complete brute force is bounded at n <= {BRUTE_FORCE_LIMIT}, got {n}"
        )
    if n == 1:
        return 1 if predicate is None or predicate((0,)) else 0
    tally = _complete_degree_tally(n)
    if predicate is None:
        return sum(tally.values())
    return sum(count for profile, count in tally.items() if predicate(profile))


def count_trees_bipartite_brute(
    m: int, n: int, predicate: BipartiteDegreePredicate | None = None
) -> Count:
    """Count spanning trees of K_{m,n} whose degree profile satisfies `predicate`.

    Side A is vertices 1..m, side B is m+1..m+n.  Enumerates all labeled
    trees on m+n vertices via Prüfer sequences and discards any tree with
    an edge inside either side; the predicate receives the two per-side
    degree tuples and must depend only on them.  Bounded at
    m + n <= BRUTE_FORCE_LIMIT.
    """
    if m < 1 or n < 1:
        raise ValueError(f"side sizes must be >= 1, got m={m}, n={n}")
    total = m + n
    if total > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(
            f"bipartite brute force is bounded at m + n <= {BRUTE_FORCE_LIMIT},"
            f" got {total}"
        )
    tally = _bipartite_split_tally(total)[m]
    if predicate is None:
        return sum(tally.values())
    return sum(
        count
        for profile, count in tally.items()
        if predicate(profile[:m], profile[m:])
    )


def _bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination.

    Every division below is exact (it divides out the previous pivot), so
    the computation stays in the integers.  Mutates its argument.
    """
    size = len(matrix)
    if size == 0:
        return 1
    sign = 1
    prev_pivot = 1
    for k in range(size - 1):
        if matrix[k][k] == 0:
            for i in range(k + 1, size):
                if matrix[i][k] != 0:
                    matrix[k], matrix[i] = matrix[i], matrix[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = matrix[k][k]
        for i in range(k + 1, size):
            row = matrix[i]
            head = row[k]
            base = matrix[k]
            for j in range(k + 1, size):
                row[j] = (row[j] * pivot - head * base[j]) // prev_pivot
            row[k] = 0
        prev_pivot = pivot
    return sign * matrix[size - 1][size - 1]


def matrix_tree_count(graph: LabeledGraph) -> Count:
    """Count spanning trees of any simple graph via the Matrix-Tree theorem.

    Builds the Laplacian with the row and column of vertex 1 deleted and
    returns its determinant, computed exactly.  A single vertex has one
    spanning tree; a disconnected graph correctly yields 0.
    """
    n = graph.vertex_count
    if n == 1:
        return 1
    # Reduced Laplacian over vertices 2..n.
    lap = [[0] * (n - 1) for _ in range(n - 1)]
    for u, v in graph.edges:
        if u > 1:
            lap[u - 2][u - 2] += 1
        if v > 1:
            lap[v - 2][v - 2] += 1
        if u > 1 and v > 1:
            lap[u - 2][v - 2] -= 1
            lap[v - 2][u - 2] -= 1
    return _bareiss_determinant(lap)
