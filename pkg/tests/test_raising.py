import itertools
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from schurkit.partitions import dominates, partitions_of
from schurkit.raising import (
    SignedPartition,
    adjacent_swap_identity_check,
    apply_raising,
    jacobi_trudi_expand,
    perm_sign,
    staircase,
    straighten,
)

int_vectors = st.lists(st.integers(min_value=-3, max_value=6), min_size=0, max_size=5).map(tuple)


def test_staircase():
    assert staircase(0) == ()
    assert staircase(1) == (0,)
    assert staircase(4) == (3, 2, 1, 0)


def test_perm_sign():
    assert perm_sign(()) == 1
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert perm_sign((2, 0, 1)) == 1


def test_apply_raising_examples():
    assert apply_raising((1, 1), 1, 2) == (2, 0)
    assert apply_raising((3, 2, 1), 1, 3) == (4, 2, 0)
    assert apply_raising((0, 2), 1, 2) == (1, 1)


def test_apply_raising_rejects_bad_indices():
    with pytest.raises(IndexError):
        apply_raising((1, 1), 2, 1)
    with pytest.raises(IndexError):
        apply_raising((1, 1), 1, 3)
    with pytest.raises(IndexError):
        apply_raising((1, 1), 0, 1)


@given(int_vectors, st.data())
def test_apply_raising_moves_up_in_dominance(alpha, data):
    if len(alpha) < 2:
        return
    i = data.draw(st.integers(min_value=1, max_value=len(alpha) - 1))
    j = data.draw(st.integers(min_value=i + 1, max_value=len(alpha)))
    assert dominates(apply_raising(alpha, i, j), alpha)


def test_straighten_examples():
    assert straighten((2, 1)) == SignedPartition(1, (2, 1))
    assert straighten((1, 3)) == SignedPartition(-1, (2, 2))
    assert straighten((1, 2)) == SignedPartition(0, None)
    assert straighten((0, 2)) == SignedPartition(-1, (1, 1))
    assert straighten(()) == SignedPartition(1, ())
    assert straighten((2, -1)).sign == 0


def test_straighten_ignores_trailing_zeros():
    assert straighten((2, 1, 0, 0)) == straighten((2, 1))
    assert straighten((1, 3, 0)) == straighten((1, 3))


def test_straighten_fixes_partitions():
    for k in range(9):
        for lam in partitions_of(k):
            assert straighten(lam) == SignedPartition(1, lam)


@given(int_vectors)
def test_straighten_result_is_canonical(alpha):
    sp = straighten(alpha)
    if sp.sign == 0:
        assert sp.partition is None
    else:
        assert sp.sign in (1, -1)
        assert sum(sp.partition) == sum(alpha)


def test_adjacent_swap_examples():
    assert adjacent_swap_identity_check((), 1, 3, ())
    assert adjacent_swap_identity_check((4,), 2, 2, (1,))
    assert adjacent_swap_identity_check((), 0, 2, ())
    # a case where both sides vanish: (1,2) maps to itself under the swap
    assert straighten((1, 2)).sign == 0
    assert adjacent_swap_identity_check((), 1, 2, ())


@given(
    st.lists(st.integers(min_value=-2, max_value=5), max_size=2).map(tuple),
    st.integers(min_value=-2, max_value=5),
    st.integers(min_value=-2, max_value=5),
    st.lists(st.integers(min_value=-2, max_value=5), max_size=2).map(tuple),
)
def test_adjacent_swap_identity_random(alpha, r, s, beta):
    assert adjacent_swap_identity_check(alpha, r, s, beta)


def test_jacobi_trudi_examples():
    assert jacobi_trudi_expand((2, 1)) == {(2, 1): 1, (3,): -1}
    assert jacobi_trudi_expand((1, 1)) == {(1, 1): 1, (2,): -1}
    assert jacobi_trudi_expand((4,)) == {(4,): 1}
    assert jacobi_trudi_expand(()) == {(): 1}


def test_jacobi_trudi_unitriangular():
    # at most l! surviving terms, unit coefficient on the diagonal, and every
    # other index strictly dominates
    for k in range(7):
        for lam in partitions_of(k):
            terms = jacobi_trudi_expand(lam)
            assert len(terms) <= factorial(max(len(lam), 1))
            assert terms[lam] == 1
            for mu in terms:
                if mu != lam:
                    assert dominates(mu, lam) and not dominates(lam, mu)


def _jt_matches_straighten(alpha):
    expansion = jacobi_trudi_expand(alpha)
    sp = straighten(alpha)
    if sp.sign == 0:
        return expansion == {}
    reference = jacobi_trudi_expand(sp.partition)
    return expansion == {mu: sp.sign * c for mu, c in reference.items()}


def test_jacobi_trudi_consistent_with_straightening_exhaustive():
    for length in range(4):
        for alpha in itertools.product(range(-3, 7), repeat=length):
            assert _jt_matches_straighten(alpha), alpha


@settings(max_examples=300)
@given(st.lists(st.integers(min_value=-3, max_value=6), min_size=4, max_size=5).map(tuple))
def test_jacobi_trudi_consistent_with_straightening_random(alpha):
    assert _jt_matches_straighten(alpha)
