"""Command-line interface.

Subcommands: count, gen, check, reconstruct, verify, bipartite, oracle.
Machine-readable output goes to stdout, diagnostics to stderr. Exit codes:
0 success/feasible, 1 infeasible or unsupported class, 2 usage or I/O error,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .feasibility import RegularInstance, SpanOneInstance, check_degree_sequence
from .hypergraphs import from_incidence
from .necklaces import count_lyndon, count_necklaces, gen_lyndon, gen_necklaces
from .oracle import exists_distinct_rows
from .reconstruct import (
    ConstructionInvariantError,
    rec_regular_with_plan,
    rec_span_one_with_plan,
    twin_free_bipartite,
    verify,
)
from .words import BinaryMatrix

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _parse_degrees_text(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("no degrees given")
    return tuple(int(p) for p in parts)


def _read_degrees_file(path: str) -> tuple[int, ...]:
    with open(path, encoding="utf-8") as handle:
        lines = [line.strip() for line in handle if line.strip()]
    if not lines:
        raise ValueError(f"degree file {path} is empty")
    return tuple(int(line) for line in lines)


def _degrees_from_args(args: argparse.Namespace) -> tuple[int, ...]:
    """Resolve the degree source options to a nonincreasing vector."""
    if getattr(args, "degrees", None) is not None:
        raw = _parse_degrees_text(args.degrees)
    elif getattr(args, "degrees_file", None) is not None:
        raw = _read_degrees_file(args.degrees_file)
    elif getattr(args, "n", None) is not None and getattr(args, "v", None) is not None:
        if args.n < 1:
            raise ValueError("--n must be positive")
        if args.v < 0:
            raise ValueError("--v must be nonnegative")
        raw = (args.v,) * args.n
    else:
        raise ValueError("give --degrees, --degrees-file, or both --n and --v")
    ordered = tuple(sorted(raw, reverse=True))
    if ordered != raw:
        print("note: degrees sorted nonincreasingly", file=sys.stderr)
    return ordered


def _add_degree_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--degrees", help="comma-separated degree list")
    parser.add_argument("--degrees-file", help="file with one degree per line")
    parser.add_argument("--n", type=int, help="column count (with --v: regular instance)")
    parser.add_argument("--v", type=int, help="uniform degree (with --n)")


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _render_matrix(
    matrix: BinaryMatrix, fmt: str, h: int, plan: dict | None = None
) -> str:
    if fmt == "lines":
        return matrix.to_lines()
    if fmt == "csv":
        return matrix.to_csv()
    if fmt == "edges":
        return from_incidence(matrix).to_edges_text()
    payload = {"n": matrix.ncols, "m": matrix.nrows, "h": h, "rows": list(matrix.rows)}
    if plan is not None:
        payload["plan"] = plan
    return json.dumps(payload)


def cmd_count(args: argparse.Namespace) -> int:
    counter = count_lyndon if args.kind == "lyndon" else count_necklaces
    print(counter(args.n, args.h))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    stream = gen_lyndon(args.n, args.h) if args.kind == "lyndon" else gen_necklaces(args.n, args.h)
    emitted = 0
    for word in stream:
        if args.limit is not None and emitted >= args.limit:
            break
        print(word)
        emitted += 1
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    degrees = _degrees_from_args(args)
    check = check_degree_sequence(degrees, args.h)
    if check.kind == "unsupported":
        print(json.dumps({"supported": False, "reason": "span>1"}))
        print("degree sequence spans more than two values", file=sys.stderr)
        return EXIT_NEGATIVE
    assert check.result is not None
    print(json.dumps(check.result.to_json_dict()))
    return EXIT_OK if check.result.feasible else EXIT_NEGATIVE


def cmd_reconstruct(args: argparse.Namespace) -> int:
    degrees = _degrees_from_args(args)
    check = check_degree_sequence(degrees, args.h)
    if check.kind == "unsupported":
        print("unsupported degree class: span>1", file=sys.stderr)
        return EXIT_NEGATIVE
    assert check.result is not None
    if not check.result.feasible:
        print(f"infeasible: {check.result.violated}", file=sys.stderr)
        return EXIT_NEGATIVE
    if isinstance(check.instance, RegularInstance):
        built = rec_regular_with_plan(check.instance)
    else:
        assert isinstance(check.instance, SpanOneInstance)
        built = rec_span_one_with_plan(check.instance)
    _emit(_render_matrix(built.matrix, args.format, args.h, built.plan_json()), args.output)
    return EXIT_OK


def _read_matrix_lines(path: str) -> BinaryMatrix:
    with open(path, encoding="utf-8") as handle:
        rows = [line.strip() for line in handle if line.strip()]
    if not rows:
        raise ValueError(f"matrix file {path} is empty")
    return BinaryMatrix(tuple(rows), len(rows[0]))


def cmd_verify(args: argparse.Namespace) -> int:
    degrees = _degrees_from_args(args)
    check = check_degree_sequence(degrees, args.h)
    if check.kind == "unsupported" or check.instance is None:
        raise ValueError("cannot verify against this degree sequence")
    matrix = _read_matrix_lines(args.matrix)
    result = verify(matrix, check.instance)
    print(json.dumps({"valid": result.ok, "problem": result.problem}))
    return EXIT_OK if result.ok else EXIT_NEGATIVE


def cmd_bipartite(args: argparse.Namespace) -> int:
    matrix = twin_free_bipartite(args.n, args.k)
    _emit(_render_matrix(matrix, args.format, args.k), args.output)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    degrees = _degrees_from_args(args)
    result = exists_distinct_rows(len(degrees), args.h, degrees)
    witness = list(result.witness.rows) if result.witness is not None else None
    print(json.dumps({"exists": result.exists, "witness": witness}))
    return EXIT_OK if result.exists else EXIT_NEGATIVE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperdeg",
        description=(
            "Decide and construct uniform-hypergraph realizations of regular "
            "and almost-regular degree sequences"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count necklaces or Lyndon words")
    p_count.add_argument("--n", type=int, required=True, help="word length")
    p_count.add_argument("--h", type=int, required=True, help="word density")
    p_count.add_argument("--kind", choices=("lyndon", "necklace"), required=True)
    p_count.set_defaults(func=cmd_count)

    p_gen = sub.add_parser("gen", help="generate necklaces or Lyndon words")
    p_gen.add_argument("--n", type=int, required=True, help="word length")
    p_gen.add_argument("--h", type=int, required=True, help="word density")
    p_gen.add_argument("--kind", choices=("lyndon", "necklace"), required=True)
    p_gen.add_argument("--limit", type=int, help="stop after this many words")
    p_gen.set_defaults(func=cmd_gen)

    p_check = sub.add_parser("check", help="feasibility of a degree sequence")
    p_check.add_argument("--h", type=int, required=True, help="edge size / row sum")
    _add_degree_source(p_check)
    p_check.set_defaults(func=cmd_check)

    p_rec = sub.add_parser("reconstruct", help="build a witness incidence matrix")
    p_rec.add_argument("--h", type=int, required=True, help="edge size / row sum")
    _add_degree_source(p_rec)
    p_rec.add_argument(
        "--format", choices=("lines", "csv", "json", "edges"), default="lines"
    )
    p_rec.add_argument("--output", help="write to this path instead of stdout")
    p_rec.set_defaults(func=cmd_reconstruct)

    p_ver = sub.add_parser("verify", help="check a matrix against a degree sequence")
    p_ver.add_argument("--h", type=int, required=True, help="edge size / row sum")
    _add_degree_source(p_ver)
    p_ver.add_argument("--matrix", required=True, help="matrix file, one row per line")
    p_ver.set_defaults(func=cmd_verify)

    p_bip = sub.add_parser(
        "bipartite", help="twin-free k-regular bipartite biadjacency matrix"
    )
    p_bip.add_argument("--n", type=int, required=True, help="vertices per side")
    p_bip.add_argument("--k", type=int, required=True, help="vertex degree")
    p_bip.add_argument(
        "--format", choices=("lines", "csv", "json", "edges"), default="lines"
    )
    p_bip.add_argument("--output", help="write to this path instead of stdout")
    p_bip.set_defaults(func=cmd_bipartite)

    p_oracle = sub.add_parser(
        "oracle", help="small-instance exhaustive existence search"
    )
    p_oracle.add_argument("--h", type=int, required=True, help="edge size / row sum")
    _add_degree_source(p_oracle)
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConstructionInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
