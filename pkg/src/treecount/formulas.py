"""Closed-form spanning-tree counts for complete and complete bipartite graphs.

Covers the total count, the count with a prescribed degree at every vertex,
and the count of odd spanning trees (spanning trees in which every vertex
has odd degree).  The odd counters come in two independent forms: a
binomial sum derived through the sign-hypercube identity, and the raw sum
over even compositions it collapses from.  Equality of the two forms is a
theorem, and the test suite treats it as one.

All counts are exact ints.  Degree sequences are plain sequences of ints,
validated at the operation: entries must be positive, and a sequence whose
sum cannot belong to any tree yields 0 rather than an error, so callers can
sweep composition spaces without tripping on infeasible profiles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .combinatorics import Count, even_compositions, exact_div, multinomial
from .signsum import binomial_power_sum

DegreeSequence = Sequence[int]


@dataclass(frozen=True)
class Complete:
    """The complete graph on n labeled vertices."""

    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    """The complete bipartite graph with side sizes m and n."""

    m: int
    n: int


GraphFamily = Union[Complete, CompleteBipartite]


def _check_size(value: int, name: str) -> None:
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


def _check_degrees(degrees: DegreeSequence, name: str) -> None:
    if len(degrees) < 1:
        raise ValueError(f"{name} must be nonempty")
    if min(degrees) < 1:
        raise ValueError(f"{name} entries must be positive, got {list(degrees)}")


def spanning_trees_complete(n: int) -> Count:
    """Number of labeled spanning trees of the complete graph: n**(n-2).

    n = 1 and n = 2 are special-cased to 1 so the exponent never goes
    negative; both values agree with direct enumeration.
    """
    _check_size(n, "n")
    if n <= 2:
        return 1
    return n ** (n - 2)


def spanning_trees_bipartite(m: int, n: int) -> Count:
    """Number of spanning trees of the complete bipartite graph: m**(n-1) * n**(m-1)."""
    _check_size(m, "m")
    _check_size(n, "n")
    return m ** (n - 1) * n ** (m - 1)


def trees_with_degrees_complete(degrees: DegreeSequence) -> Count:
    """Spanning trees of the complete graph where vertex i has degree degrees[i].

    Equals (n-2)! / prod((d_i - 1)!) when the degrees sum to 2n-2, and 0
    otherwise (no tree realizes such a profile).  Entries must be positive;
    a single vertex has degree 0 in its one spanning tree, so n = 1 is out
    of this formula's domain and returns 0.
    """
    _check_degrees(degrees, "degrees")
    n = len(degrees)
    if n < 2 or sum(degrees) != 2 * n - 2:
        return 0
    return multinomial(n - 2, [d - 1 for d in degrees])


def trees_with_degrees_bipartite(side_a: DegreeSequence, side_b: DegreeSequence) -> Count:
    """Spanning trees of K_{m,n} with prescribed degrees on both sides.

    Equals (m-1)!(n-1)! / (prod((a_i - 1)!) * prod((b_j - 1)!)) when each
    side's degrees sum to m + n - 1, and 0 otherwise.
    """
    _check_degrees(side_a, "side_a")
    _check_degrees(side_b, "side_b")
    m, n = len(side_a), len(side_b)
    total = m + n - 1
    if sum(side_a) != total or sum(side_b) != total:
        return 0
    # (m-1)!(n-1)!/(prod(a_i-1)! prod(b_j-1)!) factored into two multinomials:
    # the shifted a-degrees sum to n-1 and the shifted b-degrees to m-1.
    return multinomial(n - 1, [a - 1 for a in side_a]) * multinomial(
        m - 1, [b - 1 for b in side_b]
    )


def odd_spanning_trees_complete(n: int) -> Count:
    """Number of spanning trees of the complete graph with every degree odd.

    Evaluates sum_k C(n,k)(2k-n)**(n-2) / 2**n in exact integers; the
    division is checked and cannot fail for a correct sum.  For odd n the
    sum itself vanishes (the k and n-k terms cancel), giving 0.  n = 1 is
    special-cased to 0: the lone vertex has even degree 0.
    """
    _check_size(n, "n")
    if n == 1:
        return 0
    return exact_div(binomial_power_sum(n, n - 2), 1 << n)


def odd_spanning_trees_complete_by_sum(n: int) -> Count:
    """Odd spanning tree count of the complete graph, composition-sum form.

    Sums (n-2)!/(k1!...kn!) over all even compositions of n-2 into n
    parts -- each composition is the profile of degree excesses d_i - 1.
    Independent of the binomial form above, and much slower; useful as a
    cross-check and benchmark subject.
    """
    if n < 2:
        raise ValueError(f"composition-sum form requires n >= 2, got {n}")
    total = n - 2
    return sum(
        multinomial(total, composition)
        for composition in even_compositions(total, n)
    )


def odd_spanning_trees_bipartite(m: int, n: int) -> Count:
    """Number of spanning trees of K_{m,n} with every degree odd.

    Evaluates the product of the two one-sided binomial sums divided by
    2**(m+n), exactly.  Whenever m or n is even the count is 0, forced by
    the handshaking parity of the side degree sums.
    """
    _check_size(m, "m")
    _check_size(n, "n")
    bracket_a = binomial_power_sum(m, n - 1)
    bracket_b = binomial_power_sum(n, m - 1)
    return exact_div(bracket_a * bracket_b, 1 << (m + n))


def odd_spanning_trees_bipartite_by_sum(m: int, n: int) -> Count:
    """Odd spanning tree count of K_{m,n}, composition-sum form.

    The double sum over even compositions of n-1 (side a excesses) and of
    m-1 (side b excesses) factorizes exactly into two one-sided sums; an
    odd n-1 or m-1 leaves its index set empty, making the count 0.
    """
    _check_size(m, "m")
    _check_size(n, "n")
    side_a = sum(multinomial(n - 1, c) for c in even_compositions(n - 1, m))
    side_b = sum(multinomial(m - 1, c) for c in even_compositions(m - 1, n))
    return side_a * side_b


def tree_count(family: GraphFamily) -> Count:
    if isinstance(family, Complete):
        return spanning_trees_complete(family.n)
    return spanning_trees_bipartite(family.m, family.n)


def odd_tree_count(family: GraphFamily) -> Count:
    if isinstance(family, Complete):
        return odd_spanning_trees_complete(family.n)
    return odd_spanning_trees_bipartite(family.m, family.n)
