"""Integer partitions, skew containment, strips, and enumeration primitives.

Partitions are canonical tuples of positive integers in weakly decreasing
order; the empty tuple is the unique partition of 0.  Integer vectors (inputs
to dominance and the straightening machinery) are arbitrary int sequences
whose length is significant.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterator, Optional, Sequence

Partition = tuple[int, ...]


def is_partition(seq: Sequence[int]) -> bool:
    """True if seq, after dropping trailing zeros, weakly decreases through positive values."""
    parts = tuple(seq)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def normalize(seq: Sequence[int]) -> Partition:
    """Canonical form of a partition: trailing zeros stripped; rejects non-partitions."""
    parts = tuple(seq)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        raise ValueError(f"not a partition: {tuple(seq)!r}")
    return parts


def pad(seq: Sequence[int], length: int) -> tuple[int, ...]:
    """Extend with zeros to the given length (never truncates nonzero entries)."""
    parts = tuple(seq)
    if len(parts) > length:
        if any(parts[i] for i in range(length, len(parts))):
            raise ValueError(f"cannot pad {parts!r} down to length {length}")
        return parts[:length]
    return parts + (0,) * (length - len(parts))


def term_key(lam: Sequence[int]):
    """Sort key for the canonical term order: by size, then parts descending."""
    lam = tuple(lam)
    return (sum(lam), tuple(-p for p in lam))


def conjugate(lam: Sequence[int]) -> Partition:
    """Transpose of the Young diagram: conjugate(lam)[i-1] = #{j : lam_j >= i}."""
    lam = normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def contains(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """Componentwise containment inner_i <= outer_i of Young diagrams."""
    inner, outer = tuple(inner), tuple(outer)
    width = max(len(inner), len(outer))
    for i in range(width):
        a = inner[i] if i < len(inner) else 0
        b = outer[i] if i < len(outer) else 0
        if a > b:
            return False
    return True


def dominates(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Dominance order on integer vectors of equal total: every prefix sum of
    alpha weakly exceeds the corresponding prefix sum of beta.

    Raises ValueError when the totals differ; dominance is only defined on
    vectors of equal size.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    if sum(alpha) != sum(beta):
        raise ValueError(
            f"dominance undefined: |{alpha!r}| = {sum(alpha)} != {sum(beta)} = |{beta!r}|"
        )
    a = b = 0
    for i in range(max(len(alpha), len(beta))):
        a += alpha[i] if i < len(alpha) else 0
        b += beta[i] if i < len(beta) else 0
        if a < b:
            return False
    return True


def is_horizontal_strip(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """True if outer/inner is a skew diagram with no two boxes in a column.

    Equivalent to the interleaving condition outer_{i+1} <= inner_i for all i.
    """
    inner, outer = normalize(inner), normalize(outer)
    if not contains(inner, outer):
        return False
    for i in range(1, len(outer)):
        if outer[i] > (inner[i - 1] if i - 1 < len(inner) else 0):
            return False
    return True


def is_vertical_strip(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """True if outer/inner is a skew diagram with no two boxes in a row."""
    inner, outer = normalize(inner), normalize(outer)
    if not contains(inner, outer):
        return False
    for i in range(len(outer)):
        if outer[i] - (inner[i] if i < len(inner) else 0) > 1:
            return False
    return True


def horizontal_strips_within(
    base: Sequence[int], bound: Sequence[int], size: Optional[int] = None
) -> list[Partition]:
    """All shapes sigma with base <= sigma <= bound such that sigma/base is a
    horizontal strip (of the given size, when fixed), in canonical term order.
    """
    base, bound = normalize(base), normalize(bound)
    if not contains(base, bound):
        return []
    rows = len(bound)
    out: list[Partition] = []
    # explicit stack; pushing values low..high makes the DFS emit larger
    # shapes first, which is already the canonical order
    stack: list[tuple[int, int, tuple[int, ...]]] = [(0, 0, ())]
    while stack:
        row, used, prefix = stack.pop()
        if row == rows:
            if size is None or used == size:
                out.append(normalize(prefix))
            continue
        low = base[row] if row < len(base) else 0
        high = bound[row]
        if row >= 1:
            high = min(high, base[row - 1] if row - 1 < len(base) else 0)
        if size is not None:
            high = min(high, low + size - used)
        for v in range(low, high + 1):
            stack.append((row + 1, used + v - low, prefix + (v,)))
    return sorted(out, key=term_key)


def horizontal_strip_extensions(
    lam: Sequence[int], p: int, max_len: Optional[int] = None
) -> list[Partition]:
    """All mu with lam <= mu and mu/lam a horizontal p-strip, canonical order.

    A horizontal strip over lam occupies at most one new row, so the bound
    shape is lam with p extra columns in row 1 and each later row capped by
    the row above it in lam.
    """
    lam = normalize(lam)
    if p < 0:
        raise ValueError("strip size must be nonnegative")
    bound = ((lam[0] + p,) if lam else (p,)) + lam
    if max_len is not None:
        if len(lam) > max_len:
            return []
        bound = bound[:max_len]
    return horizontal_strips_within(lam, bound, p)


def horizontal_strip_reductions(lam: Sequence[int], p: int) -> list[Partition]:
    """All mu <= lam with lam/mu a horizontal p-strip, canonical order."""
    lam = normalize(lam)
    if p < 0:
        raise ValueError("strip size must be nonnegative")
    if p > sum(lam):
        return []
    rows = len(lam)
    out: list[Partition] = []
    stack: list[tuple[int, int, tuple[int, ...]]] = [(0, 0, ())]
    while stack:
        row, removed, prefix = stack.pop()
        if row == rows:
            if removed == p:
                out.append(normalize(prefix))
            continue
        low = lam[row + 1] if row + 1 < rows else 0
        low = max(low, lam[row] - (p - removed))
        for v in range(low, lam[row] + 1):
            stack.append((row + 1, removed + lam[row] - v, prefix + (v,)))
    return sorted(out, key=term_key)


def vertical_strip_extensions(lam: Sequence[int], p: int) -> list[Partition]:
    """All mu with lam <= mu and mu/lam a vertical p-strip, canonical order."""
    return sorted(
        (conjugate(mu) for mu in horizontal_strip_extensions(conjugate(lam), p)),
        key=term_key,
    )


def partitions_of(
    k: int, max_len: Optional[int] = None, max_part: Optional[int] = None
) -> list[Partition]:
    """All partitions of k subject to the bounds, in canonical term order."""
    if k < 0:
        raise ValueError("cannot partition a negative integer")
    cap = k if max_part is None else min(k, max_part)
    limit = k if max_len is None else min(k, max_len)
    out: list[Partition] = []
    stack: list[tuple[tuple[int, ...], int, int]] = [((), k, cap)]
    while stack:
        prefix, rem, cap_next = stack.pop()
        if rem == 0:
            out.append(prefix)
            continue
        if len(prefix) == limit or cap_next == 0:
            continue
        for v in range(1, min(rem, cap_next) + 1):
            stack.append((prefix + (v,), rem - v, v))
    return out


def subpartitions(lam: Sequence[int]) -> list[Partition]:
    """All partitions contained in lam, in canonical term order."""
    lam = normalize(lam)
    out: list[Partition] = []
    stack: list[tuple[tuple[int, ...], int]] = [((), 0)]
    while stack:
        prefix, row = stack.pop()
        out.append(prefix)
        if row == len(lam):
            continue
        cap = lam[row] if row == 0 else min(lam[row], prefix[row - 1])
        for v in range(1, cap + 1):
            stack.append((prefix + (v,), row + 1))
    return sorted(out, key=term_key)


@lru_cache(maxsize=None)
def partition_count(k: int) -> int:
    """Number of partitions of k via Euler's pentagonal number recurrence.

    Kept independent of partitions_of so the two can check each other.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    total = 0
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        g2 = j * (3 * j + 1) // 2
        if g1 > k and g2 > k:
            break
        sign = 1 if j % 2 else -1
        total += sign * (partition_count(k - g1) + partition_count(k - g2))
        j += 1
    return total


def compositions_of(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """All vectors of `length` nonnegative integers summing to total."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions_of(total - first, length - 1):
            yield (first,) + rest


# whitespace may pad brackets and commas but never splits a number
_PARTITION_RE = re.compile(r"\s*\[\s*(\d+(\s*,\s*\d+)*)?\s*\]\s*")


def _parse_bracket_literal(text: str, what: str) -> tuple[int, ...]:
    m = _PARTITION_RE.fullmatch(text)
    if not m:
        raise ValueError(f"bad {what} literal: {text!r}")
    body = m.group(1)
    return tuple(int(x) for x in body.split(",")) if body else ()


def parse_partition(text: str) -> Partition:
    """Parse the bracket literal `[3,1]`; `[]` is the empty partition.

    The non-increasing check runs at parse time.
    """
    return normalize(_parse_bracket_literal(text, "partition"))


def parse_composition(text: str) -> tuple[int, ...]:
    """Parse a bracket literal as a composition (order kept, zeros allowed)."""
    return _parse_bracket_literal(text, "composition")


def format_partition(lam: Sequence[int]) -> str:
    """Inverse of parse_partition: `[3,1]`, with `[]` for the empty partition."""
    return "[" + ",".join(str(p) for p in lam) + "]"
