from __future__ import annotations

import pytest

from rankcode.errors import BudgetExceeded, CodeError
from rankcode.extremal import a_search, a_upper_bound, theoretical_A
from rankcode.field import field_new
from rankcode.gf2 import rank_table


def brute_A(N, n, r, d):
    """Plain Bron-Kerbosch with pivoting on the distance graph."""
    R = rank_table(N, n)
    verts = [v for v in range(1 << (N * n)) if R[v] == r]
    nbr = {v: {u for u in verts if u != v and R[u ^ v] >= d} for v in verts}
    best = 0

    def bk(size, P, X):
        nonlocal best
        if not P and not X:
            best = max(best, size)
            return
        if size + len(P) <= best:
            return
        pivot = max(P | X, key=lambda u: len(nbr[u] & P))
        for v in list(P - nbr[pivot]):
            bk(size + 1, P & nbr[v], X & nbr[v])
            P = P - {v}
            X = X | {v}

    bk(0, set(verts), set())
    return best


# Dense instances where the plain oracle takes minutes.  A(2,2,2) at N=4 is
# covered by test_known_values; the (3,3) ones are hard for the solver too.
SLOW = {(3, 3, 2, 2), (3, 3, 3, 2), (4, 2, 2, 2)}
CASES = [
    (N, n, r, d)
    for N, n in [(2, 2), (3, 2), (3, 3), (4, 2)]
    for r in range(0, n + 1)
    for d in range(1, n + 1)
    if (N, n, r, d) not in SLOW
]


@pytest.mark.parametrize("N,n,r,d", CASES)
def test_exact_matches_bron_kerbosch(N, n, r, d):
    res = a_search(field_new(N), n, r, d)
    assert res.size == brute_A(N, n, r, d)
    assert res.witness.verify()
    assert len(res.witness) == res.size


@pytest.mark.parametrize("N,n,r,d", CASES)
def test_greedy_is_a_valid_lower_bound(N, n, r, d):
    res = a_search(field_new(N), n, r, d, mode="greedy", seed=5)
    assert res.witness.verify()
    assert res.size <= a_search(field_new(N), n, r, d).size


def test_known_values():
    assert a_search(field_new(3), 3, 1, 2).size == 7
    for N in range(2, 5):
        for n in range(2, N + 1):
            assert a_search(field_new(N), n, 1, 2).size == theoretical_A(n, 1, 2, N) == 2**n - 1
            assert a_search(field_new(N), n, n, n).size == theoretical_A(n, n, n, N) == 2**N - 1


def test_upper_bound():
    assert a_upper_bound(3, 3, 3) == 7
    assert a_upper_bound(2, 1, 2) == 3 * 2
    with pytest.raises(CodeError):
        a_upper_bound(3, 4, 3)


def test_rank_beyond_n_and_budget():
    assert a_search(field_new(3), 2, 3, 1).size == 0
    with pytest.raises(BudgetExceeded):
        a_search(field_new(4), 4, 2, 4, max_bits=10)
