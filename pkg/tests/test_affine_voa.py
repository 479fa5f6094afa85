from math import comb

import pytest

from zhualg.affine_voa import (
    ConjectureViolation,
    affine_zhu_dim,
    sl2_c2_closed_form,
    sl2_c2_from_character,
    sl2_matrices,
    sl2_refined_character,
    slN_c2_grade,
    slN_c2_total,
)
from zhualg.qseries import extract


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in partitions(n - part, part):
            yield (part,) + rest


def a1_lattice_voa_graded_dims(Q):
    """States beta(-k1)...beta(-kr) e^{m beta}: grade = sum k_i + m^2."""
    dims = [0] * (Q + 1)
    for m in range(-Q, Q + 1):
        for osc in range(Q + 1):
            g = osc + m * m
            if g <= Q:
                dims[g] += sum(1 for _ in partitions(osc))
    return dims


def test_affine_zhu_examples():
    for k in range(1, 6):
        assert affine_zhu_dim("A1", k) == sum((a + 1) ** 2 for a in range(k + 1))
    for N in range(2, 6):
        assert affine_zhu_dim(f"A{N - 1}", 1) == comb(2 * N, N) - 1
    assert affine_zhu_dim("E8", 1) == 1


def test_slN_grade_examples():
    g = slN_c2_grade(2, 1, 0)
    assert [w for w, _ in g.plus] == [(0,)] and g.minus == [] and g.dim == 1
    g = slN_c2_grade(2, 1, 1)
    assert [w for w, _ in g.plus] == [(1,)] and [w for w, _ in g.minus] == [(0,)] and g.dim == 3
    assert slN_c2_grade(2, 1, 3).plus == [] and slN_c2_grade(2, 1, 3).minus == []
    for N, k in [(2, 1), (2, 3), (3, 2), (4, 1)]:
        assert slN_c2_grade(N, k, N * k).dim == 1


def test_slN_totals():
    r = slN_c2_total(2, 1)
    assert (r.total, r.matches_zhu, r.per_grade) == (5, True, [1, 3, 1])
    r = slN_c2_total(3, 1)
    assert (r.total, r.matches_zhu) == (19, True)
    r = slN_c2_total(2, 2)
    assert r.total == 14 and r.per_grade == [1, 3, 6, 3, 1]


def test_sl2_grades_below_level_are_symmetric_powers():
    k = 3
    for m in range(k + 1):
        assert slN_c2_grade(2, k, m).dim == comb(m + 2, 2)


@pytest.mark.parametrize("N,k", [(2, 4), (3, 3), (4, 2), (5, 1)])
def test_conjecture_holds_beyond_acceptance_grid(N, k):
    r = slN_c2_total(N, k)
    assert r.matches_zhu


def test_conjecture_violation_carries_evidence(monkeypatch):
    import zhualg.affine_voa as av

    monkeypatch.setattr(av, "affine_zhu_dim", lambda *_: 999)
    with pytest.raises(ConjectureViolation) as exc:
        av.slN_c2_total(2, 1)
    assert exc.value.evidence["per_grade"] == [1, 3, 1]


def test_slN_grade_lists_are_level_k_dominant():
    for N, k in [(3, 1), (3, 2), (4, 1)]:
        for m in range(N * k + 1):
            g = slN_c2_grade(N, k, m)
            for mu, d in g.plus + g.minus:
                assert min(mu) >= 0 and sum(mu) <= k and d > 0
            assert all(k - sum(nu) >= 1 for nu, _ in g.minus)


def test_sl2_matrices():
    A, B = sl2_matrices(3)
    assert A == [[1, 1, 1], [1, 2, 2], [1, 2, 3]]
    assert B == [[0, 0, 1], [0, 1, 2], [1, 2, 3]]


def test_refined_character_vacuum_and_k1():
    for k in (1, 2, 3):
        assert sl2_refined_character(k, 3).coeff(0, 0) == {0: 1}
    ch = sl2_refined_character(1, 2)
    assert ch.at_t1_z1() == [1, 3, 4]
    part = extract(ch, lambda q, t: q == t)
    assert part.at_t1_z1() == [1, 3, 1]


@pytest.mark.parametrize("Q", range(5))
def test_refined_character_matches_lattice_oracle(Q):
    assert sl2_refined_character(1, Q).at_t1_z1() == a1_lattice_voa_graded_dims(Q)


def test_closed_form_examples():
    assert sl2_c2_closed_form(3, 0) == {0: 1}
    # -chi_0^2 + chi_1^2 = z^2 + 1 + z^-2
    assert sl2_c2_closed_form(1, 1) == {2: 1, 0: 1, -2: 1}
    assert sum(sl2_c2_closed_form(2, 4).values()) == 1
    assert sl2_c2_closed_form(2, 5) == {}


@pytest.mark.parametrize("k", [1, 2, 3])
def test_two_routes_agree(k):
    ext = sl2_c2_from_character(k)
    assert ext.polys == [sl2_c2_closed_form(k, m) for m in range(2 * k + 1)]
    assert ext.total == affine_zhu_dim("A1", k)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_conjecture_specialises_to_sl2_closed_form(k):
    assert slN_c2_total(2, k).per_grade == [sum(sl2_c2_closed_form(k, m).values()) for m in range(2 * k + 1)]


def test_extraction_beyond_2k_vanishes():
    ext = sl2_c2_from_character(1, Q=4)
    assert ext.per_grade == [1, 3, 1, 0, 0]


def test_truncation_too_small():
    with pytest.raises(ValueError):
        sl2_c2_from_character(2, Q=3)
