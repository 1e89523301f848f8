"""Command line front end.

Subcommands expose the counting functions, the Dirichlet-series identity
checks, per-icosian similar-sublattice and coincidence computations, shell
enumeration, and the bundled oracle verification.  All arithmetic output
is exact; matrices are printed entrywise over Z[tau].

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 domain
error (zero/non-primitive/non-admissible input).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .a4 import csl_of, denominator_of, ssl_of
from .counting import (
    check_soc_identity,
    check_ssl_identity,
    f_soc_values,
    f_ssl_values,
)
from .icosian import (
    Icosian,
    NotAdmissibleError,
    NotPrimitiveError,
    enumerate_by_trace_norm,
)
from .oracle import verify_all

_PROFILES = {
    # (ssl max, dual ssl max, soc max, csl samples, series limit)
    "smoke": (5, 5, 2, 10, 60),
    "default": (11, 9, 5, 100, 200),
    "deep": (12, 10, 6, 1000, 400),
}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _parse_zcoords(tokens: Sequence[str], parser: argparse.ArgumentParser) -> Icosian:
    flat = " ".join(tokens).replace(",", " ").split()
    if len(flat) != 8:
        parser.error("expected 8 integer coordinates, got %d" % len(flat))
    try:
        zc = tuple(int(t) for t in flat)
    except ValueError:
        parser.error("coordinates must be integers")
    return Icosian.from_zcoords(zc)


def _matrix_text(rows: Sequence[Sequence[object]], indent: str = "  ") -> str:
    cells = [[str(x) for x in row] for row in rows]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(indent + " ".join(c.rjust(width) for c in row) for row in cells)


def _cmd_count(args, parser) -> int:
    values = (f_ssl_values if args.kind == "ssl" else f_soc_values)(args.max)
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "max": args.max,
            "values": [{"n": i, "count": c} for i, c in enumerate(values[1:], 1)],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        label = "scale" if args.kind == "ssl" else "index"
        lines = [f"{label:>5s}  count"]
        lines += [f"{i:5d}  {c}" for i, c in enumerate(values[1:], 1)]
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_series(args, parser) -> int:
    check = check_ssl_identity if args.kind == "ssl" else check_soc_identity
    ok = check(args.limit)
    name = (
        "similar-sublattice Dirichlet identity"
        if args.kind == "ssl"
        else "coincidence Dirichlet identity"
    )
    if args.format == "json":
        payload = {"kind": args.kind, "limit": args.limit, "ok": ok}
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        _emit(f"{name}, checked to {args.limit}: {'ok' if ok else 'MISMATCH'}", args.out)
    return 0 if ok else 1


def _cmd_csl(args, parser) -> int:
    q = _parse_zcoords(args.coords, parser)
    result = csl_of(q)
    den = denominator_of(q)
    ext = result.extension
    if args.format == "json":
        payload = {
            "input": list(q.zcoords()),
            "reduced_norm": str(q.nr()),
            "sigma": result.sigma,
            "denominator": den if isinstance(den, int) else str(den),
            "alpha": str(ext.alpha),
            "extended": list(ext.extended.zcoords()),
            "rotation": [[str(x) for x in row] for row in result.rotation.entries],
            "basis": [list(row) for row in result.lattice.basis],
            "index": result.lattice.index,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        lines = [
            "input zcoords: " + " ".join(str(c) for c in q.zcoords()),
            f"reduced norm: {q.nr()}",
            "extended zcoords: " + " ".join(str(c) for c in ext.extended.zcoords()),
            f"extension multiplier alpha: {ext.alpha}",
            f"coincidence index sigma: {result.sigma}",
            f"rotation denominator: {den}",
            "rotation matrix:",
            _matrix_text(result.rotation.entries),
            "coincidence site lattice (HNF rows):",
            _matrix_text(result.lattice.basis),
            f"lattice index: {result.lattice.index}",
        ]
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_ssl(args, parser) -> int:
    p = _parse_zcoords(args.coords, parser)
    sub = ssl_of(p)
    scale = p.norm_quadruple()
    if args.format == "json":
        payload = {
            "input": list(p.zcoords()),
            "reduced_norm": str(p.nr()),
            "norm_scale": scale,
            "basis": [list(row) for row in sub.basis],
            "index": sub.index,
            "gram": [list(row) for row in sub.gram()],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        lines = [
            "input zcoords: " + " ".join(str(c) for c in p.zcoords()),
            f"reduced norm: {p.nr()}",
            f"norm scale: {scale}",
            f"lattice index: {sub.index}",
            "similar sublattice (HNF rows):",
            _matrix_text(sub.basis),
            "gram matrix:",
            _matrix_text(sub.gram()),
        ]
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_enumerate(args, parser) -> int:
    shell = enumerate_by_trace_norm(args.trace_norm)
    if args.primitive:
        shell = [q for q in shell if q.is_primitive()]
    if args.format == "json":
        payload = {
            "trace_norm": args.trace_norm,
            "primitive_only": bool(args.primitive),
            "count": len(shell),
            "zcoords": [list(q.zcoords()) for q in shell],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        lines = [" ".join(str(c) for c in q.zcoords()) for q in shell]
        lines.append(f"count: {len(shell)}")
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_verify(args, parser) -> int:
    ssl_m, dual_m, soc_n, samples, series_limit = _PROFILES[args.profile]
    report = verify_all(
        max_ssl_m=ssl_m,
        max_ssl_m_dual=dual_m,
        max_soc_n=soc_n,
        csl_samples=samples,
        seed=args.seed,
        series_limit=series_limit,
        threads=args.threads,
    )
    if args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        _emit("\n".join(report.summary_lines()), args.out)
    return 0 if report.ok else 1


def _add_io_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--out", metavar="FILE", default=None,
                     help="write the output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="a4csl",
        description="Exact similar-sublattice and coincidence computations "
        "for the A4 root lattice via the icosian ring.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_count = subs.add_parser("count", help="tabulate a counting function")
    p_count.add_argument("kind", choices=("ssl", "soc"))
    p_count.add_argument("--max", type=int, default=20, metavar="N")
    _add_io_flags(p_count)
    p_count.set_defaults(func=_cmd_count)

    p_series = subs.add_parser(
        "series", help="check a Dirichlet-series identity coefficientwise"
    )
    p_series.add_argument("kind", choices=("ssl", "soc"))
    p_series.add_argument("--limit", type=int, default=200, metavar="N")
    _add_io_flags(p_series)
    p_series.set_defaults(func=_cmd_series)

    p_csl = subs.add_parser(
        "csl", help="coincidence rotation and CSL of a primitive admissible icosian"
    )
    p_csl.add_argument("coords", nargs="+", help="8 integer coordinates")
    _add_io_flags(p_csl)
    p_csl.set_defaults(func=_cmd_csl)

    p_ssl = subs.add_parser(
        "ssl", help="similar sublattice generated by an icosian"
    )
    p_ssl.add_argument("coords", nargs="+", help="8 integer coordinates")
    _add_io_flags(p_ssl)
    p_ssl.set_defaults(func=_cmd_ssl)

    p_enum = subs.add_parser(
        "enumerate-icosians", help="list the icosian shell of a given trace norm"
    )
    p_enum.add_argument("--trace-norm", type=int, required=True, metavar="T")
    p_enum.add_argument("--primitive", action="store_true",
                        help="keep only primitive icosians")
    _add_io_flags(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = subs.add_parser(
        "verify", help="run the brute-force oracles against the closed forms"
    )
    p_verify.add_argument("--profile", choices=tuple(_PROFILES), default="default")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--threads", type=int, default=1)
    _add_io_flags(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, parser)
    except SystemExit as exc:  # parser.error inside a command
        return int(exc.code or 0)
    except (NotPrimitiveError, NotAdmissibleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
