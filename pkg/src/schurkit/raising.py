"""Index calculus for raising operators.

A raising operator moves a unit from a later slot of an integer vector to an
earlier one.  Straightening rewrites an arbitrary index vector as zero or as
a signed partition via the staircase shift, and the determinant expansion
turns a signed partition index into an explicit alternating sum of
complete-homogeneous index monomials.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple, Optional, Sequence

from .partitions import Partition, normalize


class SignedPartition(NamedTuple):
    """A partition with a sign, or zero (sign 0, partition None)."""

    sign: int
    partition: Optional[Partition]

    @property
    def is_zero(self) -> bool:
        return self.sign == 0


ZERO = SignedPartition(0, None)


def staircase(length: int) -> tuple[int, ...]:
    """The vector (length-1, length-2, ..., 1, 0)."""
    return tuple(range(length - 1, -1, -1))


def perm_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given in one-line form over 0..n-1."""
    inversions = sum(
        1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def apply_raising(alpha: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    """Add 1 at slot i and subtract 1 at slot j (1-based, i < j).

    The result dominates the input: a unit always moves toward the front.
    """
    alpha = tuple(alpha)
    if not (1 <= i < j <= len(alpha)):
        raise IndexError(f"need 1 <= i < j <= {len(alpha)}, got i={i}, j={j}")
    out = list(alpha)
    out[i - 1] += 1
    out[j - 1] -= 1
    return tuple(out)


def straighten(alpha: Sequence[int]) -> SignedPartition:
    """Rewrite an index vector as 0 or as +/- a unique partition.

    Add the staircase, demand distinct entries (a tie means a determinant
    with two equal rows), sort descending while tracking the permutation
    parity, and subtract the staircase back off.  The length of alpha is the
    working length; trailing zeros do not change the outcome.
    """
    alpha = tuple(alpha)
    ell = len(alpha)
    shifted = [alpha[i] + (ell - 1 - i) for i in range(ell)]
    if len(set(shifted)) != ell:
        return ZERO
    if shifted and min(shifted) < 0:
        return ZERO
    inversions = sum(
        1 for a, b in itertools.combinations(shifted, 2) if a < b
    )
    ordered = sorted(shifted, reverse=True)
    mu = tuple(ordered[i] - (ell - 1 - i) for i in range(ell))
    return SignedPartition(-1 if inversions % 2 else 1, normalize(mu))


def adjacent_swap_identity_check(
    alpha: Sequence[int], r: int, s: int, beta: Sequence[int]
) -> bool:
    """Check that (alpha,r,s,beta) straightens to minus (alpha,s-1,r+1,beta)."""
    left = straighten(tuple(alpha) + (r, s) + tuple(beta))
    right = straighten(tuple(alpha) + (s - 1, r + 1) + tuple(beta))
    if left.sign == 0 and right.sign == 0:
        return True
    return left.sign == -right.sign and left.partition == right.partition


def jacobi_trudi_expand(alpha: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Alternating expansion of the index determinant into h-index monomials.

    Sums sign(w) * [index vector w(alpha + staircase) - staircase] over all
    permutations w of the working length.  Terms with a negative index vanish
    (generators of negative degree are zero), zero indices are deleted (the
    degree-zero generator is 1), and surviving index multisets are keyed as
    partitions sorted descending.
    """
    alpha = tuple(alpha)
    ell = len(alpha)
    rho = staircase(ell)
    shifted = tuple(alpha[i] + rho[i] for i in range(ell))
    terms: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(ell)):
        idx = [shifted[perm[i]] - rho[i] for i in range(ell)]
        if any(v < 0 for v in idx):
            continue
        key = tuple(sorted((v for v in idx if v), reverse=True))
        c = terms.get(key, 0) + perm_sign(perm)
        if c:
            terms[key] = c
        else:
            terms.pop(key, None)
    return terms
