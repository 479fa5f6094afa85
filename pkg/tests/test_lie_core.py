import pytest

from zhualg.lie_core import LieError, NegativeLabel, level_weights, root_system, weyl_dim

POSITIVE_ROOT_COUNTS = {"A1": 1, "A2": 3, "A4": 10, "B3": 9, "C4": 16, "D5": 20, "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}


@pytest.mark.parametrize("spec,count", sorted(POSITIVE_ROOT_COUNTS.items()))
def test_positive_root_counts(spec, count):
    R = root_system(spec)
    assert len(R.positive_roots) == count
    assert R.root_norm(R.theta) == 2
    assert weyl_dim(R, (0,) * R.rank) == 1


def test_weyl_dim_examples():
    for a in range(6):
        assert weyl_dim(root_system("A1"), (a,)) == a + 1
    assert weyl_dim(root_system("A2"), (1, 1)) == 8
    assert weyl_dim(root_system("E8"), (0,) * 7 + (1,)) == 248
    with pytest.raises(NegativeLabel):
        weyl_dim(root_system("A2"), (-1, 0))


@pytest.mark.parametrize(
    "spec,labels,dim",
    [("G2", (1, 0), 7), ("G2", (0, 1), 14), ("F4", (0, 0, 0, 1), 26), ("F4", (1, 0, 0, 0), 52),
     ("B3", (0, 0, 1), 8), ("C3", (1, 0, 0), 6), ("D4", (0, 1, 0, 0), 28), ("E6", (1, 0, 0, 0, 0, 0), 27),
     ("E7", (0, 0, 0, 0, 0, 0, 1), 56), ("E7", (1, 0, 0, 0, 0, 0, 0), 133)],
)
def test_weyl_dim_known_modules(spec, labels, dim):
    assert weyl_dim(root_system(spec), labels) == dim


def test_diagram_automorphism_invariance():
    R = root_system("A3")
    assert weyl_dim(R, (1, 0, 2)) == weyl_dim(R, (2, 0, 1))


def test_e8_roots_match_lattice():
    from zhualg.catalog import get_lattice
    from zhualg.lattice_core import enumerate_vectors

    roots = set(root_system("E8").positive_roots)
    lattice_roots = {v for v in enumerate_vectors(get_lattice("E8"), 2) if any(v)}
    assert lattice_roots == roots | {tuple(-x for x in r) for r in roots}


def test_level_weights():
    assert level_weights(root_system("A1"), 1) == [(0,), (1,)]
    assert len(level_weights(root_system("A2"), 1)) == 3
    assert level_weights(root_system("E8"), 1) == [(0,) * 8]
    for k in range(6):
        assert len(level_weights(root_system("A1"), k)) == k + 1
    for N in range(2, 7):
        assert len(level_weights(root_system(f"A{N - 1}"), 1)) == N


def test_bad_spec():
    with pytest.raises(LieError):
        root_system("H3")
    with pytest.raises(LieError):
        root_system("E9")
