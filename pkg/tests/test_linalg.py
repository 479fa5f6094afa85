import numpy as np
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from zhualg import _accel
from zhualg.linalg import bareiss_pivots, bareiss_rank, determinant, hermite_normal_form, modular_rank

matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_bareiss_rank_matches_sympy(rows):
    assert bareiss_rank(rows) == sympy.Matrix(rows).rank()
    piv = bareiss_pivots(rows)
    assert sympy.Matrix([rows[i] for i in piv]).rank() == len(piv)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_modular_rank_small_entries(rows):
    r, piv = modular_rank(np.array(rows), _accel.PRIME_A)
    assert r == sympy.Matrix(rows).rank()
    assert sympy.Matrix([rows[i] for i in piv]).rank() == r


def test_modular_rank_can_drop_at_a_bad_prime():
    # det = 6: full rank over Q, rank 1 mod 2 and mod 3
    m = np.array([[2, 0], [0, 3]])
    assert modular_rank(m, 3)[0] == 1
    assert bareiss_rank(m.tolist()) == 2


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant(rows):
    assert determinant(rows) == sympy.Matrix(rows).det()


def test_hnf_index():
    g = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    H = hermite_normal_form(g)
    assert np.prod([H[i][i] for i in range(3)]) == 4
    for i in range(3):
        for j in range(i + 1, 3):
            assert H[i][j] == 0
        for j in range(i):
            assert 0 <= H[i][j] < H[i][i]
