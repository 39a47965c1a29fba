"""The graded ring of symmetric functions over the integers.

Elements are sparse integer combinations of partitions, tagged with one of
four bases: s (Schur), h (complete homogeneous), e (elementary), m
(monomial).  Products are computed natively in the Schur basis through
Littlewood-Richardson coefficients; the other bases route through s.  Basis
changes are exact integer transforms assembled degree by degree from the
Kostka matrix and its forward-substitution inverse, both cached.
"""

from __future__ import annotations

import itertools
import json
import threading
from typing import Iterable, Mapping, Optional, Sequence, Union

from .partitions import (
    Partition,
    compositions_of,
    conjugate,
    contains,
    format_partition,
    horizontal_strip_extensions,
    horizontal_strip_reductions,
    normalize,
    pad,
    partitions_of,
    term_key,
    vertical_strip_extensions,
)
from .raising import perm_sign, straighten
from .tableaux import kostka, lr_coefficient

BASES = ("s", "h", "e", "m")


class BasisMismatchError(ValueError):
    """Raised when an operation silently mixing bases is attempted."""


class SymFunc:
    """A sparse integer combination of partitions in a tagged basis.

    Immutable once built: arithmetic returns new objects, zero coefficients
    are never stored, and keys are canonical partitions.  Addition requires
    matching bases; convert explicitly instead of relying on coercion.
    """

    __slots__ = ("basis", "terms")

    def __init__(
        self,
        basis: str,
        terms: Union[Mapping[Sequence[int], int], Iterable[tuple[Sequence[int], int]]] = (),
    ):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        clean: dict[Partition, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lam, c in items:
            lam = normalize(lam)
            c = int(c)
            if not c:
                continue
            acc = clean.get(lam, 0) + c
            if acc:
                clean[lam] = acc
            else:
                del clean[lam]
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc values are immutable")

    @classmethod
    def zero(cls, basis: str = "s") -> "SymFunc":
        return cls(basis)

    @classmethod
    def one(cls, basis: str = "s") -> "SymFunc":
        return cls(basis, {(): 1})

    @classmethod
    def element(cls, basis: str, lam: Sequence[int], coeff: int = 1) -> "SymFunc":
        return cls(basis, {normalize(lam): coeff})

    def coefficient(self, lam: Sequence[int]) -> int:
        return self.terms.get(normalize(lam), 0)

    def degrees(self) -> list[int]:
        return sorted({sum(lam) for lam in self.terms})

    def graded_component(self, k: int) -> "SymFunc":
        return SymFunc(self.basis, {lam: c for lam, c in self.terms.items() if sum(lam) == k})

    def _require_same_basis(self, other: "SymFunc") -> None:
        if self.basis != other.basis:
            raise BasisMismatchError(
                f"cannot combine {self.basis}-basis with {other.basis}-basis; convert first"
            )

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._require_same_basis(other)
        acc = dict(self.terms)
        for lam, c in other.terms.items():
            v = acc.get(lam, 0) + c
            if v:
                acc[lam] = v
            else:
                acc.pop(lam, None)
        return SymFunc(self.basis, acc)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __rmul__(self, other: int) -> "SymFunc":
        if isinstance(other, int):
            return SymFunc(self.basis, {lam: other * c for lam, c in self.terms.items()})
        return NotImplemented

    def __mul__(self, other: Union["SymFunc", int]) -> "SymFunc":
        if isinstance(other, int):
            return self.__rmul__(other)
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits: list[str] = []
        for lam in sorted(self.terms, key=term_key):
            c = self.terms[lam]
            body = f"{self.basis}{format_partition(lam)}"
            piece = body if abs(c) == 1 else f"{abs(c)}*{body}"
            if not bits:
                bits.append(piece if c > 0 else f"-{piece}")
            else:
                bits.append(("+ " if c > 0 else "- ") + piece)
        return " ".join(bits)

    def __repr__(self) -> str:
        return f"SymFunc({self})"

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "coeff": str(self.terms[lam])}
                for lam in sorted(self.terms, key=term_key)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "SymFunc":
        return cls(
            data["basis"],
            [(tuple(t["partition"]), int(t["coeff"])) for t in data["terms"]],
        )

    @classmethod
    def from_json(cls, text: str) -> "SymFunc":
        return cls.from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# transition matrices, cached per degree
#
# The cache is shared state; the lock gives compute-once semantics under
# concurrent access.  It must be reentrant: building the inverse matrix
# recurses into the forward matrix under the same lock.

_cache_lock = threading.RLock()
_cache: dict = {}


def _memo(key, build):
    try:
        return _cache[key]
    except KeyError:
        pass
    with _cache_lock:
        if key not in _cache:
            _cache[key] = build()
        return _cache[key]


def kostka_matrix(k: int) -> dict[Partition, dict[Partition, int]]:
    """All Kostka numbers in degree k: matrix[lam][mu] counts tableaux of
    straight shape lam and content mu.  Nonzero only when lam dominates mu."""

    def build():
        parts = partitions_of(k)
        return {
            lam: {mu: v for mu in parts if (v := kostka(lam, (), mu))}
            for lam in parts
        }

    return _memo(("kostka", k), build)


def kostka_inverse(k: int) -> dict[Partition, dict[Partition, int]]:
    """Inverse Kostka matrix in degree k: row[mu][lam] gives the Schur
    expansion of the degree-k monomial function m_mu.

    Forward substitution along the canonical order, which refines dominance
    downward, so the system is unitriangular over the integers.
    """

    def build():
        parts = partitions_of(k)
        K = kostka_matrix(k)
        inverse: dict[Partition, dict[Partition, int]] = {}
        for mu in parts:
            row: dict[Partition, int] = {}
            for lam in parts:
                v = (1 if lam == mu else 0) - sum(
                    row.get(kappa, 0) * K[kappa].get(lam, 0) for kappa in row
                )
                if v:
                    row[lam] = v
            inverse[mu] = row
        return inverse

    return _memo(("kostka-inv", k), build)


def _to_s(f: SymFunc) -> SymFunc:
    if f.basis == "s":
        return f
    acc: dict[Partition, int] = {}

    def add(lam: Partition, c: int) -> None:
        v = acc.get(lam, 0) + c
        if v:
            acc[lam] = v
        else:
            acc.pop(lam, None)

    for lam, c in f.terms.items():
        k = sum(lam)
        if f.basis == "h":
            for mu in partitions_of(k):
                v = kostka_matrix(k)[mu].get(lam, 0)
                if v:
                    add(mu, c * v)
        elif f.basis == "e":
            for mu in partitions_of(k):
                v = kostka_matrix(k)[mu].get(lam, 0)
                if v:
                    add(conjugate(mu), c * v)
        else:  # m
            for nu, v in kostka_inverse(k)[lam].items():
                add(nu, c * v)
    return SymFunc("s", acc)


def _from_s(f: SymFunc, target: str) -> SymFunc:
    if target == "s":
        return f
    acc: dict[Partition, int] = {}

    def add(lam: Partition, c: int) -> None:
        v = acc.get(lam, 0) + c
        if v:
            acc[lam] = v
        else:
            acc.pop(lam, None)

    for lam, c in f.terms.items():
        k = sum(lam)
        if target == "m":
            for mu, v in kostka_matrix(k)[lam].items():
                add(mu, c * v)
        elif target == "h":
            # the h-coefficients of s_lam are a column of the inverse Kostka
            # matrix; this stays independent of the determinant expansion,
            # which the tests play against it
            for beta in partitions_of(k):
                v = kostka_inverse(k)[beta].get(lam, 0)
                if v:
                    add(beta, c * v)
        else:  # e: transport along the conjugate
            target_lam = conjugate(lam)
            for beta in partitions_of(k):
                v = kostka_inverse(k)[beta].get(target_lam, 0)
                if v:
                    add(beta, c * v)
    return SymFunc(target, acc)


def convert(f: SymFunc, target: str) -> SymFunc:
    """Exact change of basis; round trips are the identity."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}; expected one of {BASES}")
    if target == f.basis:
        return SymFunc(f.basis, f.terms)
    return _from_s(_to_s(f), target)


# ---------------------------------------------------------------------------
# products


def pieri_h(p: int, f: SymFunc) -> SymFunc:
    """Multiply a Schur-basis element by the degree-p complete function:
    each partition grows by every horizontal p-strip."""
    if p < 0:
        raise ValueError("strip size must be nonnegative")
    if f.basis != "s":
        raise BasisMismatchError("pieri_h acts on the s-basis; convert first")
    acc: dict[Partition, int] = {}
    for lam, c in f.terms.items():
        for mu in horizontal_strip_extensions(lam, p):
            acc[mu] = acc.get(mu, 0) + c
    return SymFunc("s", acc)


def pieri_e(p: int, f: SymFunc) -> SymFunc:
    """Multiply a Schur-basis element by the degree-p elementary function:
    each partition grows by every vertical p-strip."""
    if p < 0:
        raise ValueError("strip size must be nonnegative")
    if f.basis != "s":
        raise BasisMismatchError("pieri_e acts on the s-basis; convert first")
    acc: dict[Partition, int] = {}
    for lam, c in f.terms.items():
        for mu in vertical_strip_extensions(lam, p):
            acc[mu] = acc.get(mu, 0) + c
    return SymFunc("s", acc)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the Schur basis via Littlewood-Richardson coefficients.

    Inputs in other bases are converted first; the result is always tagged s.
    """
    fs, gs = _to_s(f), _to_s(g)
    acc: dict[Partition, int] = {}
    for mu, a in fs.terms.items():
        for nu, b in gs.terms.items():
            for lam in partitions_of(sum(mu) + sum(nu)):
                if not contains(mu, lam):
                    continue
                c = lr_coefficient(lam, mu, nu)
                if c:
                    acc[lam] = acc.get(lam, 0) + a * b * c
    return SymFunc("s", {lam: c for lam, c in acc.items() if c})


# ---------------------------------------------------------------------------
# duality and skew functions


def omega(f: SymFunc) -> SymFunc:
    """The duality involution: conjugates Schur indices and swaps the h and e
    tags; monomial-basis input routes through s."""
    if f.basis == "s":
        return SymFunc("s", {conjugate(lam): c for lam, c in f.terms.items()})
    if f.basis == "h":
        return SymFunc("e", f.terms)
    if f.basis == "e":
        return SymFunc("h", f.terms)
    return convert(omega(_to_s(f)), "m")


def skew_schur(lam: Sequence[int], mu: Sequence[int]) -> SymFunc:
    """The skew function of lam/mu as a Schur-basis expansion: the nu-th
    coefficient is the LR count of fillings of lam/mu with content nu."""
    lam, mu = normalize(lam), normalize(mu)
    if not contains(mu, lam):
        return SymFunc.zero("s")
    acc = {}
    for nu in partitions_of(sum(lam) - sum(mu)):
        c = lr_coefficient(lam, mu, nu)
        if c:
            acc[nu] = c
    return SymFunc("s", acc)


def skew_jacobi_trudi(
    lam: Sequence[int], mu: Sequence[int], flavor: str = "h"
) -> SymFunc:
    """Signed determinant expansion of the skew shape lam/mu.

    The h flavor expands det(h_{lam_i - mu_j + j - i}) and equals the skew
    function of lam/mu; the e flavor expands the same determinant in
    elementary functions and equals the skew function of the conjugate pair.
    """
    if flavor not in ("h", "e"):
        raise ValueError("flavor must be 'h' or 'e'")
    lam, mu = normalize(lam), normalize(mu)
    ell = max(len(lam), len(mu))
    lam_p, mu_p = pad(lam, ell), pad(mu, ell)
    acc: dict[Partition, int] = {}
    for perm in itertools.permutations(range(ell)):
        idx = [lam_p[i] - mu_p[perm[i]] + perm[i] - i for i in range(ell)]
        if any(v < 0 for v in idx):
            continue
        key = tuple(sorted((v for v in idx if v), reverse=True))
        acc[key] = acc.get(key, 0) + perm_sign(perm)
    return SymFunc(flavor, {k: v for k, v in acc.items() if v})


# ---------------------------------------------------------------------------
# identity checks


def _signed_sum(vectors: Iterable[Sequence[int]]) -> dict[Partition, int]:
    acc: dict[Partition, int] = {}
    for vec in vectors:
        sp = straighten(vec)
        if sp.sign:
            v = acc.get(sp.partition, 0) + sp.sign
            if v:
                acc[sp.partition] = v
            else:
                del acc[sp.partition]
    return acc


def mirror_identity_check(lam: Sequence[int], p: int, n: Optional[int] = None) -> bool:
    """Check both strip identities for lam and p.

    Adding every composition of p to lam and straightening matches the sum
    over horizontal p-strip extensions; subtracting matches the sum over
    reductions.  With n given, both sides restrict to indices of length at
    most n (requires n >= len(lam)); without it, the addition side is cut at
    length len(lam) + p, beyond which every term straightens to zero (any
    longer support forces a repeated staircase-shifted value).
    """
    lam = normalize(lam)
    if p < 0:
        raise ValueError("strip size must be nonnegative")
    ell = len(lam)
    if n is not None and n < ell:
        raise ValueError(f"length bound {n} is below the partition length {ell}")

    width_add = ell + p if n is None else n
    base = pad(lam, width_add)
    lhs_add = _signed_sum(
        tuple(base[i] + alpha[i] for i in range(width_add))
        for alpha in compositions_of(p, width_add)
    )
    rhs_add = {mu: 1 for mu in horizontal_strip_extensions(lam, p, max_len=n)}
    if lhs_add != rhs_add:
        return False

    width_sub = ell + 1 if n is None else n
    base = pad(lam, width_sub)
    lhs_sub = _signed_sum(
        tuple(base[i] - alpha[i] for i in range(width_sub))
        for alpha in compositions_of(p, width_sub)
    )
    rhs_sub = {mu: 1 for mu in horizontal_strip_reductions(lam, p)}
    return lhs_sub == rhs_sub


def skew_mirror_check(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Check the skew generalization of the subtraction identity:
    the skew function of lam/mu equals the Kostka-weighted signed sum of
    straightened differences lam - alpha over compositions alpha of |mu|."""
    lam, mu = normalize(lam), normalize(mu)
    if not contains(mu, lam):
        return not skew_schur(lam, mu)
    ell = len(lam)
    acc: dict[Partition, int] = {}
    for alpha in compositions_of(sum(mu), ell):
        weight = kostka(mu, (), alpha)
        if not weight:
            continue
        sp = straighten(tuple(lam[i] - alpha[i] for i in range(ell)))
        if sp.sign:
            v = acc.get(sp.partition, 0) + weight * sp.sign
            if v:
                acc[sp.partition] = v
            else:
                del acc[sp.partition]
    return SymFunc("s", acc) == skew_schur(lam, mu)


def newton_check(r: int) -> bool:
    """Check the alternating convolution of h and e in degree r:
    sum_i (-1)^i h_i e_{r-i} vanishes for r >= 1."""
    if r < 1:
        raise ValueError("degree must be positive")
    total = SymFunc.zero("s")
    for i in range(r + 1):
        h_i = SymFunc.element("h", (i,) if i else ())
        e_rest = SymFunc.element("e", (r - i,) if r - i else ())
        term = multiply(h_i, e_rest)
        total = total + (term if i % 2 == 0 else -term)
    return not total


def cauchy_transition_check(k: int, dual: bool = False) -> bool:
    """Check the degree-k Cauchy pairing through transition matrices.

    Expands sum_lam s_lam (x) s_lam over partitions of k in the (m, h)
    coordinate pair and compares with the identity pairing sum_lam m_lam (x)
    h_lam; the dual flavor conjugates the second leg and lands in (m, e).
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    parts = partitions_of(k)
    lhs: dict[tuple[Partition, Partition], int] = {}
    for lam in parts:
        left = convert(SymFunc.element("s", lam), "m")
        second = SymFunc.element("s", conjugate(lam) if dual else lam)
        right = convert(second, "e" if dual else "h")
        for a, ca in left.terms.items():
            for b, cb in right.terms.items():
                key = (a, b)
                v = lhs.get(key, 0) + ca * cb
                if v:
                    lhs[key] = v
                else:
                    del lhs[key]
    rhs = {(lam, lam): 1 for lam in parts}
    return lhs == rhs
