"""Semistandard tableaux on skew shapes, Kostka numbers, and the
Littlewood-Richardson rule with its sign-reversing involution.

Tableaux are enumerated as chains of horizontal strips: a filling with
entries at most m is the same thing as a chain of m nested shapes where the
i-th step adds the boxes holding entry i.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

from .partitions import (
    Partition,
    contains,
    horizontal_strips_within,
    normalize,
    pad,
)
from .raising import perm_sign, staircase


class Tableau:
    """A filling of the skew shape outer/inner, stored as per-row entry tuples.

    rows[i] lists the entries of row i left to right, covering columns
    inner_i+1 .. outer_i (1-based).  Construction checks box counts only;
    use is_semistandard() for the row/column conditions.
    """

    __slots__ = ("outer", "inner", "rows")

    def __init__(
        self,
        outer: Sequence[int],
        inner: Sequence[int],
        rows: Sequence[Sequence[int]],
    ):
        self.outer = normalize(outer)
        self.inner = normalize(inner)
        if not contains(self.inner, self.outer):
            raise ValueError(f"inner shape {self.inner} not contained in {self.outer}")
        self.rows = tuple(tuple(int(e) for e in row) for row in rows)
        if len(self.rows) != len(self.outer):
            raise ValueError("row count does not match the outer shape")
        for i, row in enumerate(self.rows):
            want = self.outer[i] - (self.inner[i] if i < len(self.inner) else 0)
            if len(row) != want:
                raise ValueError(f"row {i} has {len(row)} entries, expected {want}")
            if any(e < 1 for e in row):
                raise ValueError("entries must be positive integers")

    def cells(self):
        """Yield (row, column, entry) with 1-based column indices."""
        for i, row in enumerate(self.rows):
            offset = self.inner[i] if i < len(self.inner) else 0
            for k, e in enumerate(row):
                yield i, offset + k + 1, e

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def max_entry(self) -> int:
        return max((e for row in self.rows for e in row), default=0)

    def content(self, length: Optional[int] = None) -> tuple[int, ...]:
        """Occurrence counts of the entries 1, 2, ..., padded to `length`.

        Rejects a length that would drop entries; truncation here would let
        inconsistent pairs slip through downstream consistency checks.
        """
        m = self.max_entry()
        if length is None:
            length = m
        elif length < m:
            raise ValueError(f"tableau holds entries up to {m}, cannot cut at {length}")
        counts = [0] * length
        for row in self.rows:
            for e in row:
                counts[e - 1] += 1
        return tuple(counts)

    def content_from_column(self, col: int) -> tuple[int, ...]:
        """Content of the subtableau occupying columns >= col."""
        m = self.max_entry()
        counts = [0] * m
        for _, c, e in self.cells():
            if c >= col:
                counts[e - 1] += 1
        return tuple(counts)

    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(row[k] > row[k + 1] for k in range(len(row) - 1)):
                return False
        columns: dict[int, list[tuple[int, int]]] = {}
        for i, c, e in self.cells():
            columns.setdefault(c, []).append((i, e))
        for cells in columns.values():
            cells.sort()
            if any(cells[k][1] >= cells[k + 1][1] for k in range(len(cells) - 1)):
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "outer": list(self.outer),
            "inner": list(self.inner),
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Tableau":
        return cls(tuple(data["outer"]), tuple(data["inner"]), data["rows"])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return (
            self.outer == other.outer
            and self.inner == other.inner
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.outer, self.inner, self.rows))

    def __repr__(self) -> str:
        drawn = []
        for i, row in enumerate(self.rows):
            offset = self.inner[i] if i < len(self.inner) else 0
            drawn.append(" ".join(["."] * offset + [str(e) for e in row]))
        return "Tableau(" + " / ".join(drawn) + ")"


def _chain_to_tableau(
    outer: Partition, inner: Partition, chain: Sequence[Partition]
) -> Tableau:
    rows = []
    for i in range(len(outer)):
        row: list[int] = []
        for t in range(1, len(chain)):
            prev = chain[t - 1][i] if i < len(chain[t - 1]) else 0
            cur = chain[t][i] if i < len(chain[t]) else 0
            row.extend([t] * (cur - prev))
        rows.append(tuple(row))
    return Tableau(outer, inner, rows)


def enumerate_ssyt(
    outer: Sequence[int],
    inner: Sequence[int] = (),
    max_entry: int = 1,
    content: Optional[Sequence[int]] = None,
) -> list[Tableau]:
    """All semistandard fillings of outer/inner with entries <= max_entry,
    restricted to the given content when one is supplied.

    Enumerates chains of horizontal strips from inner up to outer, one step
    per entry value; the order of the output is deterministic.
    """
    outer, inner = normalize(outer), normalize(inner)
    if not contains(inner, outer):
        raise ValueError(f"inner shape {inner} not contained in {outer}")
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    sizes: list[Optional[int]]
    if content is not None:
        content = tuple(int(c) for c in content)
        if any(c < 0 for c in content):
            return []
        while content and content[-1] == 0:
            content = content[:-1]
        if len(content) > max_entry:
            return []
        if sum(content) != sum(outer) - sum(inner):
            return []
        sizes = list(content) + [0] * (max_entry - len(content))
    else:
        sizes = [None] * max_entry

    results: list[Tableau] = []
    stack: list[tuple[int, tuple[Partition, ...]]] = [(0, (inner,))]
    while stack:
        step, chain = stack.pop()
        shape = chain[-1]
        if step == max_entry:
            if shape == outer:
                results.append(_chain_to_tableau(outer, inner, chain))
            continue
        for nxt in reversed(horizontal_strips_within(shape, outer, sizes[step])):
            stack.append((step + 1, chain + (nxt,)))
    return results


@lru_cache(maxsize=None)
def _kostka_chains(outer: Partition, inner: Partition, content: tuple[int, ...]) -> int:
    if not content:
        return 1 if outer == inner else 0
    total = 0
    for shape in horizontal_strips_within(inner, outer, content[0]):
        total += _kostka_chains(outer, shape, content[1:])
    return total


def kostka(outer: Sequence[int], inner: Sequence[int], alpha: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape outer/inner with content alpha.

    Zero whenever alpha is not a composition of the right size, or the skew
    shape itself is empty of meaning (inner not contained in outer).
    """
    outer, inner = normalize(outer), normalize(inner)
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        return 0
    if not contains(inner, outer):
        return 0
    if sum(alpha) != sum(outer) - sum(inner):
        return 0
    while alpha and alpha[-1] == 0:
        alpha = alpha[:-1]
    return _kostka_chains(outer, inner, alpha)


def is_lr_tableau(tab: Tableau) -> bool:
    """True if every column-suffix content of the tableau is a partition."""
    return _max_bad_column(tab) is None


def _is_weakly_decreasing(counts: Sequence[int]) -> bool:
    return all(counts[i] >= counts[i + 1] for i in range(len(counts) - 1))


def _max_bad_column(tab: Tableau) -> Optional[int]:
    """Largest column r whose suffix content fails to be a partition."""
    width = tab.outer[0] if tab.outer else 0
    for r in range(width, 0, -1):
        if not _is_weakly_decreasing(tab.content_from_column(r)):
            return r
    return None


def lr_tableaux(
    lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]
) -> list[Tableau]:
    """The Littlewood-Richardson fillings of lam/mu with content nu."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if not contains(mu, lam) or sum(mu) + sum(nu) != sum(lam):
        return []
    cands = enumerate_ssyt(lam, mu, max_entry=max(len(nu), 1), content=nu)
    return [t for t in cands if is_lr_tableau(t)]


@lru_cache(maxsize=None)
def _lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    return len(lr_tableaux(lam, mu, nu))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Structure constant of the Schur product: the LR tableau count."""
    return _lr_coefficient(normalize(lam), normalize(mu), normalize(nu))


class SignedPair(NamedTuple):
    """A permutation (one-line form over 0..l-1) paired with a tableau."""

    w: tuple[int, ...]
    tableau: Tableau

    @property
    def sign(self) -> int:
        return perm_sign(self.w)


def _apply_perm(perm: Sequence[int], vec: Sequence[int]) -> tuple[int, ...]:
    return tuple(vec[perm[i]] for i in range(len(perm)))


def signed_lr_pairs(
    lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]
) -> list[SignedPair]:
    """All pairs (w, T): w permutes the staircase-shifted content of nu and T
    is a semistandard filling of lam/mu realizing that content."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    ell = len(nu)
    rho = staircase(ell)
    base = tuple(nu[i] + rho[i] for i in range(ell))
    pairs: list[SignedPair] = []
    for perm in itertools.permutations(range(ell)):
        forced = tuple(_apply_perm(perm, base)[i] - rho[i] for i in range(ell))
        if any(c < 0 for c in forced):
            continue
        for tab in enumerate_ssyt(lam, mu, max_entry=max(ell, 1), content=forced):
            pairs.append(SignedPair(perm, tab))
    return pairs


def signed_lr_sum(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """The alternating sum of tableau counts over permuted contents.

    No cancellation shortcut: every permutation with a nonnegative forced
    content contributes its full signed count.
    """
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    ell = len(nu)
    rho = staircase(ell)
    base = tuple(nu[i] + rho[i] for i in range(ell))
    total = 0
    for perm in itertools.permutations(range(ell)):
        forced = tuple(base[perm[i]] - rho[i] for i in range(ell))
        if any(c < 0 for c in forced):
            continue
        count = kostka(lam, mu, forced)
        if count:
            total += perm_sign(perm) * count
    return total


def bz_involution(pair: SignedPair, nu: Sequence[int]) -> SignedPair:
    """The sign-reversing involution on bad pairs.

    Takes r maximal with a non-partition column-suffix content and j minimal
    with c_j < c_{j+1} there; these tie-breaks are load-bearing and must not
    be altered.  Entries j (resp. j+1) are free when their column holds no
    j+1 (resp. j); all free entries strictly left of column r flip between j
    and j+1, rows are re-sorted, and the transposition (j, j+1) is composed
    onto w.  The output filling is revalidated rather than trusted.
    """
    w, tab = pair
    nu = normalize(nu)
    ell = len(w)
    rho = staircase(ell)
    base = pad(nu, ell)
    expected = tuple(base[w[i]] + rho[w[i]] - rho[i] for i in range(ell))
    if tab.content(ell) != expected:
        raise ValueError("pair is inconsistent: content does not match w")
    r = _max_bad_column(tab)
    if r is None:
        raise ValueError("pair is not bad: involution undefined")
    counts = tab.content_from_column(r)
    j = next(
        i + 1 for i in range(len(counts) - 1) if counts[i] < counts[i + 1]
    )
    column_entries: dict[int, set[int]] = {}
    for _, c, e in tab.cells():
        column_entries.setdefault(c, set()).add(e)
    new_rows = []
    for i, row in enumerate(tab.rows):
        offset = tab.inner[i] if i < len(tab.inner) else 0
        vals = list(row)
        for k, e in enumerate(vals):
            col = offset + k + 1
            if col >= r:
                continue
            if e == j and (j + 1) not in column_entries[col]:
                vals[k] = j + 1
            elif e == j + 1 and j not in column_entries[col]:
                vals[k] = j
        new_rows.append(tuple(sorted(vals)))
    flipped = Tableau(tab.outer, tab.inner, new_rows)
    if not flipped.is_semistandard():
        raise RuntimeError(
            f"involution produced a non-semistandard filling from {tab!r}"
        )
    w_new = list(w)
    w_new[j - 1], w_new[j] = w_new[j], w_new[j - 1]
    return SignedPair(tuple(w_new), flipped)


def is_bad_pair(pair: SignedPair) -> bool:
    """True if some column-suffix content of the tableau is not a partition."""
    return _max_bad_column(pair.tableau) is not None


def clear_caches() -> None:
    """Drop the memoized tableau counts (mainly for benchmarking)."""
    _kostka_chains.cache_clear()
    _lr_coefficient.cache_clear()
