"""Exact sparse polynomials in finitely many variables.

This is the ground-truth side of the library: every ring-level identity has
a brute-force counterpart here, computed monomial by monomial with integer
coefficients.  Exponent vectors are dense tuples of fixed length n inside a
sparse term map.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from typing import Sequence

from .partitions import (
    Partition,
    contains,
    conjugate,
    horizontal_strip_extensions,
    horizontal_strip_reductions,
    horizontal_strips_within,
    normalize,
    pad,
    partitions_of,
)
from .raising import jacobi_trudi_expand, perm_sign, staircase


class SparsePoly:
    """A multivariate polynomial with big-integer coefficients.

    terms maps exponent tuples (length exactly n, nonnegative entries) to
    nonzero integers.  Values are immutable; arithmetic returns new objects.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=()):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        clean: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for {n} variables")
            c = int(c)
            if not c:
                continue
            acc = clean.get(exps, 0) + c
            if acc:
                clean[exps] = acc
            else:
                del clean[exps]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly values are immutable")

    @classmethod
    def zero(cls, n: int) -> "SparsePoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "SparsePoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], coeff: int = 1) -> "SparsePoly":
        return cls(n, {tuple(exps): coeff})

    def _require_same_vars(self, other: "SparsePoly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._require_same_vars(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                del acc[e]
        out = SparsePoly.__new__(SparsePoly)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "terms", acc)
        return out

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "SparsePoly":
        out = SparsePoly.__new__(SparsePoly)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "terms", {e: -c for e, c in self.terms.items()})
        return out

    def __rmul__(self, other: int) -> "SparsePoly":
        if not isinstance(other, int):
            return NotImplemented
        if other == 0:
            return SparsePoly.zero(self.n)
        out = SparsePoly.__new__(SparsePoly)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "terms", {e: other * c for e, c in self.terms.items()})
        return out

    def __mul__(self, other):
        if isinstance(other, int):
            return self.__rmul__(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._require_same_vars(other)
        acc: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                v = acc.get(key, 0) + c1 * c2
                if v:
                    acc[key] = v
                else:
                    del acc[key]
        out = SparsePoly.__new__(SparsePoly)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "terms", acc)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def _ordered(self):
        return sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e)))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits: list[str] = []
        for exps in self._ordered():
            c = self.terms[exps]
            factors = [
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            ]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not bits:
                bits.append(body if c > 0 else f"-{body}")
            else:
                bits.append(("+ " if c > 0 else "- ") + body)
        return " ".join(bits)

    def __repr__(self) -> str:
        return f"SparsePoly({self.n}, {self})"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"exps": list(e), "coeff": str(self.terms[e])} for e in self._ordered()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "SparsePoly":
        return cls(data["n"], [(tuple(t["exps"]), int(t["coeff"])) for t in data["terms"]])

    @classmethod
    def from_json(cls, text: str) -> "SparsePoly":
        return cls.from_json_dict(json.loads(text))


def embed(p: SparsePoly, n: int, offset: int = 0) -> SparsePoly:
    """View p inside n variables, its own variables starting at slot offset."""
    if offset < 0 or offset + p.n > n:
        raise ValueError("embedding does not fit")
    return SparsePoly(
        n,
        {
            (0,) * offset + e + (0,) * (n - offset - p.n): c
            for e, c in p.terms.items()
        },
    )


def restrict_vars(p: SparsePoly, m: int) -> SparsePoly:
    """Set the trailing variables to zero, keeping the first m."""
    if m > p.n:
        raise ValueError("cannot restrict to more variables than present")
    return SparsePoly(
        m,
        [(e[:m], c) for e, c in p.terms.items() if not any(e[m:])],
    )


# ---------------------------------------------------------------------------
# classical generators


@lru_cache(maxsize=None)
def _eval_h(r: int, n: int) -> SparsePoly:
    if r < 0:
        return SparsePoly.zero(n)
    if r == 0:
        return SparsePoly.one(n)
    terms: dict[tuple[int, ...], int] = {}
    for combo in itertools.combinations_with_replacement(range(n), r):
        e = [0] * n
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = 1
    return SparsePoly(n, terms)


@lru_cache(maxsize=None)
def _eval_e(r: int, n: int) -> SparsePoly:
    if r < 0:
        return SparsePoly.zero(n)
    if r == 0:
        return SparsePoly.one(n)
    terms: dict[tuple[int, ...], int] = {}
    for combo in itertools.combinations(range(n), r):
        e = [0] * n
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = 1
    return SparsePoly(n, terms)


def eval_h(r: int, n: int) -> SparsePoly:
    """The complete homogeneous function of degree r in n variables."""
    if n < 0:
        raise ValueError("variable count must be nonnegative")
    return _eval_h(r, n)


def eval_e(r: int, n: int) -> SparsePoly:
    """The elementary function of degree r in n variables (zero for r > n)."""
    if n < 0:
        raise ValueError("variable count must be nonnegative")
    return _eval_e(r, n)


def _distinct_permutations(values: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Each rearrangement of a multiset exactly once (not n! with repeats)."""
    counts = dict.fromkeys(sorted(set(values)), 0)
    for v in values:
        counts[v] += 1
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def walk():
        if len(prefix) == len(values):
            out.append(tuple(prefix))
            return
        for v in counts:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                walk()
                prefix.pop()
                counts[v] += 1

    walk()
    return out


def eval_m(lam: Sequence[int], n: int) -> SparsePoly:
    """The monomial function: the sum over distinct rearrangements of lam
    into n exponent slots; zero when lam has more parts than variables."""
    lam = normalize(lam)
    if n < 0:
        raise ValueError("variable count must be nonnegative")
    if len(lam) > n:
        return SparsePoly.zero(n)
    return SparsePoly(n, {e: 1 for e in _distinct_permutations(pad(lam, n))})


@lru_cache(maxsize=None)
def _h_monomial(beta: tuple[int, ...], n: int) -> SparsePoly:
    # beta sorted descending so prefixes are shared across callers
    if not beta:
        return SparsePoly.one(n)
    return _h_monomial(beta[:-1], n) * _eval_h(beta[-1], n)


def eval_h_monomial(beta: Sequence[int], n: int) -> SparsePoly:
    """Product of complete homogeneous functions indexed by beta."""
    key = tuple(sorted((int(b) for b in beta if b), reverse=True))
    if any(b < 0 for b in key):
        return SparsePoly.zero(n)
    return _h_monomial(key, n)


@lru_cache(maxsize=None)
def _eval_s(lam: Partition, mu: Partition, n: int) -> SparsePoly:
    if not contains(mu, lam):
        return SparsePoly.zero(n)
    terms: dict[tuple[int, ...], int] = {}
    stack: list[tuple[int, Partition, tuple[int, ...]]] = [(0, mu, ())]
    while stack:
        step, shape, exps = stack.pop()
        if step == n:
            if shape == lam:
                v = terms.get(exps, 0) + 1
                terms[exps] = v
            continue
        for nxt in horizontal_strips_within(shape, lam):
            stack.append((step + 1, nxt, exps + (sum(nxt) - sum(shape),)))
    return SparsePoly(n, terms)


def eval_s_tableau(lam: Sequence[int], mu: Sequence[int] = (), n: int = 1) -> SparsePoly:
    """The (skew) Schur polynomial as a sum over tableaux of content monomials.

    Walks chains of horizontal strips from mu up to lam in n steps, one step
    per variable; the number of boxes added at step i is the exponent of x_i.
    """
    if n < 0:
        raise ValueError("variable count must be nonnegative")
    return _eval_s(normalize(lam), normalize(mu), n)


def eval_sym_func(f, n: int) -> SparsePoly:
    """Evaluate a basis-tagged symmetric function in n variables, termwise."""
    total = SparsePoly.zero(n)
    for lam, c in f.terms.items():
        if f.basis == "s":
            p = eval_s_tableau(lam, (), n)
        elif f.basis == "h":
            p = eval_h_monomial(lam, n)
        elif f.basis == "e":
            p = SparsePoly.one(n)
            for part in lam:
                p = p * _eval_e(part, n)
        else:
            p = eval_m(lam, n)
        total = total + c * p
    return total


# ---------------------------------------------------------------------------
# alternants and the classical quotient definition


def alternant(alpha: Sequence[int], n: int) -> SparsePoly:
    """The antisymmetrized monomial: sum of sign(w) x^{w(alpha)} over all
    permutations w of the n variables."""
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValueError("alternant exponents must be nonnegative")
    if len(alpha) > n:
        raise ValueError(f"exponent vector longer than {n} variables")
    padded = pad(alpha, n)
    terms: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(n)):
        key = tuple(padded[perm[i]] for i in range(n))
        v = terms.get(key, 0) + perm_sign(perm)
        if v:
            terms[key] = v
        else:
            del terms[key]
    return SparsePoly(n, terms)


def _staircase_shift(lam: Partition, n: int) -> tuple[int, ...]:
    rho = staircase(n)
    lam_p = pad(lam, n)
    return tuple(lam_p[i] + rho[i] for i in range(n))


def bialternant_check(lam: Sequence[int], n: int) -> bool:
    """Division-free check of the quotient-of-alternants formula: the
    staircase-shifted alternant equals the tableau polynomial times the
    staircase alternant."""
    lam = normalize(lam)
    if len(lam) > n:
        raise ValueError(f"partition has more than {n} parts")
    lhs = alternant(_staircase_shift(lam, n), n)
    rhs = eval_s_tableau(lam, (), n) * alternant(staircase(n), n)
    return lhs == rhs


def alternant_pieri_check(lam: Sequence[int], r: int, n: int) -> bool:
    """Check that multiplying a shifted alternant by a complete function
    expands over horizontal r-strip extensions of bounded length."""
    lam = normalize(lam)
    if len(lam) > n:
        raise ValueError(f"partition has more than {n} parts")
    if r < 0:
        raise ValueError("strip size must be nonnegative")
    lhs = alternant(_staircase_shift(lam, n), n) * eval_h(r, n)
    rhs = SparsePoly.zero(n)
    for mu in horizontal_strip_extensions(lam, r, max_len=n):
        rhs = rhs + alternant(_staircase_shift(mu, n), n)
    return lhs == rhs


# ---------------------------------------------------------------------------
# reduction, splitting, and consistency checks


def reduction_check(lam: Sequence[int], n: int) -> bool:
    """Check the variable-reduction formula: the tableau polynomial in n
    variables equals the sum over powers p of x_n^p times the tableau
    polynomials of the horizontal p-strip reductions in n-1 variables."""
    lam = normalize(lam)
    if n < 1:
        raise ValueError("need at least one variable")
    lhs = eval_s_tableau(lam, (), n)
    rhs = SparsePoly.zero(n)
    for p in range(sum(lam) + 1):
        mus = horizontal_strip_reductions(lam, p)
        if not mus:
            continue
        inner = SparsePoly.zero(n - 1)
        for mu in mus:
            inner = inner + eval_s_tableau(mu, (), n - 1)
        lifted = embed(inner, n)
        rhs = rhs + lifted * SparsePoly.monomial(n, (0,) * (n - 1) + (p,))
    return lhs == rhs


def jacobi_trudi_eval_check(lam: Sequence[int], n: int) -> bool:
    """Check the determinant expansion against the tableau polynomial: the
    signed h-index expansion, evaluated as products of complete functions,
    reproduces the tableau sum exactly."""
    lam = normalize(lam)
    total = SparsePoly.zero(n)
    for beta, c in jacobi_trudi_expand(lam).items():
        total = total + c * eval_h_monomial(beta, n)
    return total == eval_s_tableau(lam, (), n)


def variable_split_check(lam: Sequence[int], a: int, b: int) -> bool:
    """Check the two-alphabet expansion: the tableau polynomial in a+b
    variables equals the sum over inner shapes mu of the skew polynomial in
    the first a variables times the straight polynomial in the last b."""
    from .partitions import subpartitions

    lam = normalize(lam)
    n = a + b
    lhs = eval_s_tableau(lam, (), n)
    rhs = SparsePoly.zero(n)
    for mu in subpartitions(lam):
        left = embed(eval_s_tableau(lam, mu, a), n, 0)
        right = embed(eval_s_tableau(mu, (), b), n, a)
        rhs = rhs + left * right
    return lhs == rhs


def h_split_check(lam: Sequence[int], a: int, b: int) -> bool:
    """Check the composition-indexed split: the tableau polynomial in a+b
    variables equals the signed sum of h-products in the first alphabet times
    straightened difference polynomials in the second."""
    from .partitions import compositions_of
    from .raising import straighten

    lam = normalize(lam)
    n = a + b
    lhs = eval_s_tableau(lam, (), n)
    rhs = SparsePoly.zero(n)
    for total in range(sum(lam) + 1):
        for alpha in compositions_of(total, len(lam)):
            sp = straighten(tuple(lam[i] - alpha[i] for i in range(len(lam))))
            if not sp.sign:
                continue
            left = embed(eval_h_monomial(alpha, a), n, 0)
            right = embed(eval_s_tableau(sp.partition, (), b), n, a)
            rhs = rhs + sp.sign * (left * right)
    return lhs == rhs


def product_oracle(
    mu: Sequence[int], nu: Sequence[int], n: int
) -> dict[Partition, int]:
    """Recover the Schur expansion of a product by brute polynomial force.

    Multiplies the two tableau polynomials in n variables and repeatedly
    peels the lexicographically leading term, which is the leading monomial
    of a unique Schur polynomial with unit coefficient.  Requires
    n >= |mu| + |nu| so that no contributing partition outruns the variables.
    """
    mu, nu = normalize(mu), normalize(nu)
    if n < sum(mu) + sum(nu):
        raise ValueError(f"need at least {sum(mu) + sum(nu)} variables for faithfulness")
    prod = eval_s_tableau(mu, (), n) * eval_s_tableau(nu, (), n)
    work = dict(prod.terms)
    coeffs: dict[Partition, int] = {}
    while work:
        lead = max(work)
        lam = tuple(p for p in lead if p)
        if any(lead[i] < lead[i + 1] for i in range(len(lead) - 1)):
            raise ArithmeticError(
                f"leading exponent {lead} is not a partition; peeling failed"
            )
        c = work[lead]
        coeffs[lam] = c
        for e, v in _eval_s(lam, (), n).terms.items():
            w = work.get(e, 0) - c * v
            if w:
                work[e] = w
            else:
                work.pop(e, None)
    return coeffs


def cauchy_truncated_check(k: int, n: int, dual: bool = False) -> bool:
    """Compare the degree-(k, k) slice of the Cauchy kernel in two alphabets
    of n variables against the diagonal sum of Schur polynomial products.

    The plain kernel is the product of geometric series 1/(1 - x_i y_j)
    truncated at degree k; the dual kernel is the finite product of
    (1 + x_i y_j) paired with conjugate shapes on the Schur side.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if n < 1:
        raise ValueError("need at least one variable per alphabet")
    width = 2 * n
    kernel: dict[tuple[int, ...], int] = {(0,) * width: 1}
    for i in range(n):
        for j in range(n):
            powers = (0, 1) if dual else tuple(range(k + 1))
            nxt: dict[tuple[int, ...], int] = {}
            for e, c in kernel.items():
                for t in powers:
                    out = list(e)
                    out[i] += t
                    out[n + j] += t
                    if sum(out[:n]) > k or sum(out[n:]) > k:
                        continue
                    key = tuple(out)
                    nxt[key] = nxt.get(key, 0) + c
            kernel = nxt
    lhs = {
        e: c
        for e, c in kernel.items()
        if sum(e[:n]) == k and sum(e[n:]) == k
    }
    rhs: dict[tuple[int, ...], int] = {}
    for lam in partitions_of(k):
        px = eval_s_tableau(lam, (), n)
        py = eval_s_tableau(conjugate(lam) if dual else lam, (), n)
        for ex, cx in px.terms.items():
            for ey, cy in py.terms.items():
                key = ex + ey
                rhs[key] = rhs.get(key, 0) + cx * cy
    return lhs == {e: c for e, c in rhs.items() if c}


def clear_caches() -> None:
    """Drop memoized polynomials (mainly for benchmarking)."""
    _eval_h.cache_clear()
    _eval_e.cache_clear()
    _h_monomial.cache_clear()
    _eval_s.cache_clear()
