"""Named lattices: root lattices A_n, D_n, E_6-8 and the glued lattice D14A1[11].

The shipped JSON files under ``zhualg/data/lattices/{roots,glued}`` are written by
``python -m zhualg.catalog --write`` from the constructions below; the test
suite checks that they agree.
"""
from __future__ import annotations

import argparse
import json
import re
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .lattice_core import Lattice, load_lattice, make_lattice
from .lie_core import cartan_matrix
from .linalg import inverse


class UnknownLattice(KeyError):
    pass


DATA_DIR = Path(str(resources.files("zhualg") / "data" / "lattices"))

ROOT_LATTICES = ["A1", "A2", "A3", "A4", "D4", "E6", "E7", "E8"]


def root_lattice(spec: str) -> Lattice:
    m = re.fullmatch(r"([ADE])(\d+)", spec)
    if not m:
        raise UnknownLattice(spec)
    return make_lattice(cartan_matrix(spec), spec)


def _d_roots(n: int) -> list[list[Fraction]]:
    """Simple roots of D_n in the standard embedding into Z^n."""
    out = []
    for i in range(n - 1):
        v = [Fraction(0)] * n
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        out.append(v)
    v = [Fraction(0)] * n
    v[n - 2] = v[n - 1] = Fraction(1)
    out.append(v)
    return out


def glued(basis: list[list[Fraction]], metric: list[Fraction], glue: list[Fraction], name: str) -> Lattice:
    """Lattice spanned by ``basis`` plus one glue vector with 2*glue in the span.

    Vectors live in an ambient space with diagonal ``metric``.
    """

    def ip(u, v):
        return sum(a * m * b for a, m, b in zip(u, metric, v))

    n = len(basis)
    gram = [[ip(b, c) for c in basis] for b in basis]
    ginv = inverse(gram)
    pairings = [ip(b, glue) for b in basis]
    coeffs = [sum(ginv[i][j] * pairings[j] for j in range(n)) for i in range(n)]
    if any((2 * c).denominator != 1 for c in coeffs):
        raise ValueError("2*glue is not in the base lattice")
    k = next(i for i, c in enumerate(coeffs) if c.denominator == 2)
    # shift the glue so its k-th coefficient is 1/2; then b_k = 2*glue' - (rest)
    shift = coeffs[k] - Fraction(1, 2)
    g = [gv - shift * bv for gv, bv in zip(glue, basis[k])]
    new_basis = basis[:k] + [g] + basis[k + 1:]
    new_gram = [[ip(b, c) for c in new_basis] for b in new_basis]
    return make_lattice([[int(v) for v in row] for row in new_gram], name)


def d14a1_11() -> Lattice:
    """D14 + A1 glued by (spinor class of D14, nonzero class of A1)."""
    n = 14
    # ambient: 14 standard coordinates plus one coordinate of squared length 2 for A1
    metric = [Fraction(1)] * n + [Fraction(2)]
    basis = [v + [Fraction(0)] for v in _d_roots(n)]
    basis.append([Fraction(0)] * n + [Fraction(1)])
    glue = [Fraction(1, 2)] * n + [Fraction(1, 2)]
    return glued(basis, metric, glue, "D14A1_11")


CONSTRUCTIONS = {name: (lambda s=name: root_lattice(s)) for name in ROOT_LATTICES}
CONSTRUCTIONS["D14A1_11"] = d14a1_11


def shipped_names() -> list[str]:
    return sorted(p.stem for p in DATA_DIR.glob("*/*.json"))


def get_lattice(name_or_path: str) -> Lattice:
    """Resolve a catalog name (e.g. "E8", "D14A1_11", "D5") or a JSON file path."""
    p = Path(name_or_path)
    if p.suffix == ".json" or p.exists():
        if not p.exists():
            raise UnknownLattice(name_or_path)
        return load_lattice(p)
    for shipped in DATA_DIR.glob(f"*/{name_or_path}.json"):
        return load_lattice(shipped)
    try:
        return root_lattice(name_or_path)
    except Exception:
        raise UnknownLattice(name_or_path) from None


def write_catalog(target: Path = DATA_DIR) -> list[Path]:
    written = []
    for name, build in CONSTRUCTIONS.items():
        L = build()
        sub = target / ("roots" if name in ROOT_LATTICES else "glued")
        sub.mkdir(parents=True, exist_ok=True)
        path = sub / f"{name}.json"
        path.write_text(json.dumps({"name": name, "gram": [list(r) for r in L.gram]}) + "\n")
        written.append(path)
    return written


def main() -> None:
    ap = argparse.ArgumentParser(description="Regenerate the shipped lattice catalog")
    ap.add_argument("--write", action="store_true")
    ap.add_argument("--dir", type=Path, default=DATA_DIR)
    args = ap.parse_args()
    if args.write:
        for p in write_catalog(args.dir):
            print(p)


if __name__ == "__main__":
    main()
