from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import figures as fig
from rsqsym.bijections import rho_row
from rsqsym.compositions import compositions_of, lambda_of, partitions_of
from rsqsym.insertion import (
    as_biword_matrix,
    biword,
    check_commutation,
    dual_row_insert,
    insert_word,
    rsct_insert,
    rsk_pair,
)
from rsqsym.tableaux import Filling, Kind, enumerate_fillings


def test_schensted_figure():
    F = Filling(fig.FIG_READ_F, Kind.RSCT)
    res = rsct_insert(F, 3)
    assert res.result == Filling(fig.FIG_SCHENSTED_RESULT, Kind.RSCT)
    assert res.bumped == [3, 2, 2]
    assert res.path == [(4, 2), (5, 2), (6, 2), (3, 1)]
    assert res.new_cell == (3, 1)
    assert [(s.value, s.remaining) for s in res.steps] == [
        (v, fig.digits(w)) for v, w in fig.FIG_SCHENSTED_SCANS]


def test_small_examples():
    assert rsct_insert(Filling([[1]], Kind.RSCT), 1).result.rows == ((1,), (1,))
    assert rsct_insert(Filling([], Kind.RSCT), 2).result.rows == ((2,),)
    res = dual_row_insert(Filling([[3, 1]], Kind.RRS), 2)
    assert res.result.rows == ((3, 2), (1,)) and res.bumped == [1]
    with pytest.raises(ValueError):
        rsct_insert(Filling([[1]], Kind.RSCT), 0)


@pytest.mark.parametrize("n", range(0, 5))
def test_rsct_insert_stays_rsct(n):
    for alpha in compositions_of(n) if n else [()]:
        for F in (enumerate_fillings(alpha, Kind.RSCT, max(n, 1)) if n else [Filling([], Kind.RSCT)]):
            for x in range(1, n + 3):
                res = rsct_insert(F, x)
                G = res.result
                assert G.is_valid() and G.size == F.size + 1
                assert sorted(G.entries()) == sorted([*F.entries(), x])
                assert all(a >= b for a, b in zip(res.bumped, res.bumped[1:]))


@pytest.mark.parametrize("n", range(1, 6))
def test_dual_insertion_shape(n):
    for lam in partitions_of(n):
        for T in enumerate_fillings(lam, Kind.RRS, n):
            for x in range(1, n + 2):
                res = dual_row_insert(T, x)
                assert res.result.is_valid()
                cols = [k for _, k in res.path]
                assert all(a >= b for a, b in zip(cols, cols[1:]))


@pytest.mark.parametrize("n", range(1, 6))
def test_commutation(n):
    for lam in partitions_of(n):
        for T in enumerate_fillings(lam, Kind.RRS, n):
            for x in range(1, 7):
                assert check_commutation(T, x)


words = st.lists(st.integers(1, 6), max_size=9)


@settings(max_examples=200, deadline=None)
@given(words)
def test_word_insertion_commutes(word):
    T = Filling([], Kind.RRS)
    for x in word:
        T = dual_row_insert(T, x).result
    assert rho_row(T) == insert_word(word)


def test_biword_order():
    assert biword([[1, 2], [0, 1]]) == [(1, 1), (1, 2), (1, 2), (2, 2)]
    assert as_biword_matrix({(2, 1): 1, (1, 1): 0}) == {(2, 1): 1}
    with pytest.raises(ValueError):
        as_biword_matrix([[-1]])


def _matrices(total):
    for entries in product(range(3), repeat=9):
        if sum(entries) <= total:
            yield [list(entries[0:3]), list(entries[3:6]), list(entries[6:9])]


def test_rsk_pair_injective_with_equal_partitions():
    seen = {}
    for A in _matrices(4):
        P, Q = rsk_pair(A)
        assert P.is_valid() and Q.is_valid()
        assert lambda_of(P.shape) == lambda_of(Q.shape)
        assert (P, Q) not in seen, (A, seen.get((P, Q)))
        seen[P, Q] = A
        At = [list(col) for col in zip(*A)]
        assert rsk_pair(At) == (Q, P)


@pytest.mark.parametrize("s", range(0, 4))
def test_rsk_pair_is_onto_pairs(s):
    # with entries <= 3, pairs of RSCTs of equal partition are counted by 3x3 matrices of sum s
    def rscts(lam):
        return [F for a in compositions_of(s) if lambda_of(a) == lam
                for F in enumerate_fillings(a, Kind.RSCT, 3)]

    pairs = sum(len(rscts(lam)) ** 2 for lam in partitions_of(s)) if s else 1
    mats = [A for A in product(range(s + 1), repeat=9) if sum(A) == s]
    images = {rsk_pair([list(A[0:3]), list(A[3:6]), list(A[6:9])]) for A in mats}
    assert len(images) == len(mats) == pairs
