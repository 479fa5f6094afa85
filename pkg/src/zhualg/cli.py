"""Command-line front end.

    zhualg lattice {info|zhu|c2|bound|classify} <name|file.json>
    zhualg affine {zhu|c2-conj|sl2-char} ...
    zhualg minimal <p> <q>
    zhualg catalog run <dir>

Reports are JSON on stdout (or ``--out``).  Exit codes: 0 ok, 2 parse error,
3 resource limit, 4 validation error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import affine_voa, lattice_core, lattice_voa, minimal_models
from .catalog import UnknownLattice, get_lattice
from .lattice_core import LatticeError, load_lattice
from .lattice_voa import ResourceCaps, ResourceLimit
from .lie_core import LieError

EXIT_OK, EXIT_PARSE, EXIT_RESOURCE, EXIT_VALIDATION = 0, 2, 3, 4


class CliParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliParseError(message)


def _default_threads() -> int:
    env = os.environ.get("ZHUALG_THREADS")
    if env:
        return int(env)
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", type=Path, help="write the report here instead of stdout")
    common.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    common.add_argument("--threads", type=int, default=None, help="worker threads (env ZHUALG_THREADS)")
    common.add_argument("--max-degree", type=int, default=lattice_voa.DEFAULT_CAPS.max_degree)
    common.add_argument("--max-monomials", type=int, default=lattice_voa.DEFAULT_CAPS.max_monomials)
    common.add_argument("--rank-method", choices=["exact", "modular"], default="exact")

    p = _Parser(prog="zhualg", description="Zhu and C2-algebra dimensions of VOAs")
    sub = p.add_subparsers(dest="family", required=True)

    lat = sub.add_parser("lattice", help="lattice VOAs")
    lsub = lat.add_subparsers(dest="command", required=True)
    for name in ("info", "zhu", "c2", "bound", "classify"):
        sp = lsub.add_parser(name, parents=[common])
        sp.add_argument("lattice", help="catalog name or path to a lattice JSON file")
        if name == "classify":
            sp.add_argument("--effort", choices=["full", "bound_only"], default="full")

    aff = sub.add_parser("affine", help="affine Lie algebra VOAs")
    asub = aff.add_subparsers(dest="command", required=True)
    sp = asub.add_parser("zhu", parents=[common])
    sp.add_argument("algebra", help='e.g. "A2", "E8", "G2"')
    sp.add_argument("level", type=int)
    sp = asub.add_parser("c2-conj", parents=[common])
    sp.add_argument("N", type=int)
    sp.add_argument("level", type=int)
    sp = asub.add_parser("sl2-char", parents=[common])
    sp.add_argument("level", type=int)
    sp.add_argument("--order", type=int, default=None, help="q truncation (default 2k)")

    mm = sub.add_parser("minimal", parents=[common], help="Virasoro minimal models")
    mm.add_argument("p", type=int)
    mm.add_argument("q", type=int)

    cat = sub.add_parser("catalog", help="batch runs over lattice files")
    csub = cat.add_subparsers(dest="command", required=True)
    sp = csub.add_parser("run", parents=[common])
    sp.add_argument("dir", type=Path)
    sp.add_argument("--effort", choices=["full", "bound_only"], default="full")
    return p


def _caps(args) -> ResourceCaps:
    threads = args.threads if args.threads is not None else _default_threads()
    return ResourceCaps(
        max_degree=args.max_degree,
        max_monomials=args.max_monomials,
        rank_method=args.rank_method,
        threads=threads,
    )


def _lattice_report(args) -> dict:
    L = get_lattice(args.lattice)
    name = L.name or args.lattice
    caps = _caps(args)
    cmd = args.command
    if cmd == "info":
        s = lattice_core.summary(L)
        cosets = lattice_core.discriminant_cosets(L)
        return {
            "lattice": name,
            "rank": L.rank,
            "det": s.det,
            "mu": s.mu,
            "M": s.M,
            "cosets": [{"label": list(c.label), "min_norm": str(c.min_norm), "count": c.count} for c in cosets],
        }
    if cmd == "zhu":
        cosets = lattice_core.discriminant_cosets(L)
        return {
            "lattice": name,
            "zhu_dim": sum(c.count ** 2 for c in cosets),
            "coset_counts": [c.count for c in cosets],
        }
    if cmd == "c2":
        res = lattice_voa.c2_dim_lattice(L, caps)
        return {
            "lattice": name,
            "c2_dim": res.total,
            "small_vector_count": res.small_vector_count,
            "per_alpha": [{"alpha": list(a), "dims": list(d)} for a, d in res.per_alpha],
        }
    if cmd == "bound":
        s = lattice_core.summary(L)
        return {"lattice": name, "rank": L.rank, "mu": s.mu, "M": s.M, "c2_lower_bound": lattice_voa.c2_lower_bound(L)}
    if cmd == "classify":
        v = lattice_voa.anomaly_verdict(L, args.effort, caps)
        v.lattice = name
        return v.to_json()
    raise CliParseError(f"unknown lattice command {cmd}")


def _affine_report(args) -> dict:
    cmd = args.command
    if cmd == "zhu":
        return {"algebra": args.algebra, "level": args.level, "zhu_dim": affine_voa.affine_zhu_dim(args.algebra, args.level)}
    if cmd == "c2-conj":
        res = affine_voa.slN_c2_total(args.N, args.level, check=False)
        out = res.to_json()
        out["c2_conjecture"]["nonnegative"] = all(d >= 0 for d in res.per_grade)
        return out
    if cmd == "sl2-char":
        Q = args.order if args.order is not None else 2 * args.level
        ext = affine_voa.sl2_c2_from_character(args.level, Q)
        closed = [affine_voa.sl2_c2_closed_form(args.level, m) for m in range(Q + 1)]
        return {
            "algebra": "A1",
            "level": args.level,
            "order": Q,
            "zhu_dim": affine_voa.affine_zhu_dim("A1", args.level),
            "c2_from_character": ext.per_grade,
            "c2_closed_form": [sum(p.values()) for p in closed],
            "agree": ext.polys == closed,
        }
    raise CliParseError(f"unknown affine command {cmd}")


def _catalog_report(args) -> list:
    if not args.dir.is_dir():
        raise UnknownLattice(str(args.dir))
    caps = _caps(args)
    out = []
    for path in sorted(args.dir.glob("*.json")):
        L = load_lattice(path)
        v = lattice_voa.anomaly_verdict(L, args.effort, caps)
        out.append(v.to_json())
    return out


def _pretty(report) -> str:
    rows = report if isinstance(report, list) else [report]
    lines = []
    for r in rows:
        for k, v in r.items():
            if k == "per_alpha":
                v = f"<{len(v)} entries>"
            lines.append(f"{k:>20}  {v}")
        lines.append("")
    return "\n".join(lines)


def _emit(payload, args, stream) -> None:
    pretty = getattr(args, "pretty", False)
    text = _pretty(payload) if pretty else json.dumps(payload)
    out = getattr(args, "out", None)
    if out is not None:
        out.write_text(text + "\n")
    else:
        stream.write(text + "\n")


def run(argv: list[str] | None = None, stream=None) -> int:
    stream = stream or sys.stdout
    parser = build_parser()
    args = None
    try:
        args = parser.parse_args(argv)
        if args.family == "lattice":
            report = _lattice_report(args)
        elif args.family == "affine":
            report = _affine_report(args)
        elif args.family == "minimal":
            z, c = minimal_models.minimal_dims(args.p, args.q)
            report = {"p": args.p, "q": args.q, "zhu_dim": z, "c2_dim": c, "verdict": "NonAnomalous"}
        else:
            report = _catalog_report(args)
    except CliParseError as e:
        _emit({"error": "ParseError", "message": str(e)}, args, stream)
        return EXIT_PARSE
    except ResourceLimit as e:
        _emit({"error": "ResourceLimit", "message": str(e)}, args, stream)
        return EXIT_RESOURCE
    except UnknownLattice as e:
        _emit({"error": "UnknownLattice", "message": f"unknown lattice {e.args[0]!r}"}, args, stream)
        return EXIT_VALIDATION
    except (LatticeError, LieError, ValueError) as e:
        _emit({"error": type(e).__name__, "message": str(e)}, args, stream)
        return EXIT_VALIDATION
    _emit(report, args, stream)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
