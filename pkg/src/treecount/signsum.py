"""Exact power sums of integer linear forms over the sign hypercube.

Three evaluation strategies for the same family of quantities:

* hypercube_power_sum   -- direct enumeration of all 2**n sign vectors,
* multinomial_power_sum -- the expansion into even-exponent multinomial
                           terms (odd exponents cancel pairwise),
* binomial_power_sum    -- the all-ones special case, with sign vectors
                           grouped by their number of +1 entries.

All three agree wherever their domains overlap; the test suite pins that
down exhaustively at small sizes.  Coefficients are restricted to integers
so every identity check is bit-exact.
"""

from __future__ import annotations

from typing import Sequence

from .combinatorics import (
    SignedSum,
    SizeLimitError,
    binomial,
    even_compositions,
    int_pow,
    multinomial,
)

CoefficientVector = Sequence[int]
SignVector = tuple[int, ...]  # entries in {-1, +1}

# 2**24 evaluations is the desk-scale ceiling for direct enumeration.
HYPERCUBE_LIMIT = 24


def hypercube_power_sum(coeffs: CoefficientVector, power: int) -> SignedSum:
    """Sum (a1*y1 + ... + an*yn)**power over all sign vectors y in {-1,+1}**n.

    Walks the hypercube in Gray-code order so each step updates the linear
    form in O(1); the result is identical to naive enumeration (integer
    addition commutes).  Bounded at n <= HYPERCUBE_LIMIT.
    """
    n = len(coeffs)
    if n < 1:
        raise ValueError("hypercube_power_sum() needs at least one coefficient")
    if n > HYPERCUBE_LIMIT:
        raise SizeLimitError(
            f"direct hypercube enumeration is bounded at n <= {HYPERCUBE_LIMIT}, got {n}"
        )
    if power < 0:
        raise ValueError(f"power must be >= 0, got {power}")
    signs = [1] * n
    form = sum(coeffs)
    total = form ** power
    for i in range(1, 1 << n):
        j = (i & -i).bit_length() - 1  # bit flipped by the Gray code at step i
        signs[j] = -signs[j]
        form += 2 * coeffs[j] * signs[j]
        total += form ** power
    return total


def multinomial_power_sum(coeffs: CoefficientVector, power: int) -> SignedSum:
    """Evaluate the hypercube power sum through its multinomial expansion.

    Equals 2**n times the sum, over all even compositions (k1, ..., kn) of
    `power`, of  power!/(k1!...kn!) * a1**k1 * ... * an**kn.  Terms with an
    odd exponent anywhere cancel between mirrored sign vectors, which is
    why only even compositions appear; an odd `power` therefore gives 0.
    """
    n = len(coeffs)
    if n < 1:
        raise ValueError("multinomial_power_sum() needs at least one coefficient")
    if power < 0:
        raise ValueError(f"power must be >= 0, got {power}")
    total = 0
    for composition in even_compositions(power, n):
        term = multinomial(power, composition)
        for a, k in zip(coeffs, composition):
            if k:
                term *= a ** k
        total += term
    return (1 << n) * total


def binomial_power_sum(n: int, power: int) -> SignedSum:
    """Sum C(n,k) * (2k - n)**power for k = 0..n.

    This is hypercube_power_sum with all-ones coefficients: a sign vector
    with k entries equal to +1 has linear form 2k - n, and there are
    C(n,k) such vectors.  Unlike the direct walk it has no size bound.
    """
    if n < 1:
        raise ValueError(f"binomial_power_sum() requires n >= 1, got {n}")
    if power < 0:
        raise ValueError(f"power must be >= 0, got {power}")
    return sum(binomial(n, k) * int_pow(2 * k - n, power) for k in range(n + 1))
