"""Command-line interface.

Subcommands: info, fvector, facets, faces, gram, verify. Output is plain text
by default or JSON with --format json; identical invocations produce byte-
identical output. Exit codes: 0 success, 1 parse/usage errors, 2 group not
Frobenius, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from math import comb
from typing import List, Optional, Tuple

from . import embedding, faces, oracle
from .errors import CapExceededError, GroupSpecError, NotFrobeniusError
from .groups import FrobeniusSystem, build_from_spec

__all__ = ["main", "run", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_FROBENIUS = 2
EXIT_CAP = 3

FACET_PRINT_CAP = 1000
FACE_ENUM_CAP = 100_000


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad flags; reroute to the usage exit code."""

    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="frobtope",
        description="Exact face structure of permutation-matrix polytopes of Frobenius groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "group_spec",
            help="dihedral:<n> | cyclic:<n> | pq:<p>,<q>,<u> | a4 | gens:<degree>;<perm>;...",
        )
        p.add_argument(
            "--format",
            choices=("text", "json"),
            default="text",
            help="output format (default text)",
        )
        p.add_argument("--output", metavar="PATH", help="write output to a file instead of stdout")
        p.add_argument(
            "--cap",
            type=int,
            default=oracle.DEFAULT_VERTEX_CAP,
            help="vertex-count cap for brute-force geometry (default %(default)s)",
        )
        return p

    add("info", "group parameters, dimension, vertex and facet counts")
    add("fvector", "face counts in every dimension")
    p_facets = add("facets", "stream the facet vertex sets")
    p_facets.add_argument(
        "--all",
        action="store_true",
        help=f"print every facet (default: first {FACET_PRINT_CAP})",
    )
    p_faces = add("faces", "face count (and enumeration when small) in one dimension")
    p_faces.add_argument("--dim", type=int, required=True, help="face dimension k, from -1 up")
    add("gram", "census of all pairwise vertex inner products")
    add("verify", "cross-validate the combinatorial claims against brute-force geometry")
    return parser


def _header(spec: str, system: FrobeniusSystem) -> str:
    return f"group {spec}: n={system.n} h={system.h} |G|={system.order}"


def _cmd_info(spec: str, system: FrobeniusSystem, args) -> Tuple[dict, List[str]]:
    dim, _basis = embedding.affine_rank(embedding.vertex_matrices(system))
    payload = {
        "group": spec,
        "n": system.n,
        "h": system.h,
        "order": system.order,
        "dim": dim,
        "is_regular": system.is_regular,
        "vertex_count": system.order,
        "facet_count": str(system.n**system.h),
        "kernel": [list(g.images) for g in system.kernel_elems],
        "complement": [list(g.images) for g in system.complement_elems],
    }
    lines = [
        _header(spec, system),
        (
            f"dim {dim}, {system.order} vertices, {system.n**system.h} facets, "
            f"regular: {'yes' if system.is_regular else 'no'}"
        ),
        "kernel: " + " | ".join(g.one_line() for g in system.kernel_elems),
        "complement: " + " | ".join(g.one_line() for g in system.complement_elems),
    ]
    return payload, lines


def _cmd_fvector(spec: str, system: FrobeniusSystem, args) -> Tuple[dict, List[str]]:
    fv = faces.fvector(system.n, system.h)
    payload = {
        "group": spec,
        "n": system.n,
        "h": system.h,
        "dim": fv.dim,
        "fvector": fv.as_strings(),
    }
    lines = [
        _header(spec, system),
        f"f-vector (f_-1 .. f_{fv.dim}): " + " ".join(fv.as_strings()),
    ]
    return payload, lines


def _cmd_facets(spec: str, system: FrobeniusSystem, args) -> Tuple[dict, List[str]]:
    total = system.n**system.h
    limit = total if args.all else min(total, FACET_PRINT_CAP)
    shown: List[Tuple[int, ...]] = []
    for fd in faces.enumerate_facets(system):
        if len(shown) >= limit:
            break
        shown.append(fd.members)
    payload = {
        "group": spec,
        "facet_count": str(total),
        "shown": len(shown),
        "facets": [list(members) for members in shown],
    }
    lines = [_header(spec, system), f"{total} facets, showing {len(shown)}"]
    lines.extend(",".join(str(i) for i in members) for members in shown)
    return payload, lines


def _cmd_faces(spec: str, system: FrobeniusSystem, args) -> Tuple[dict, List[str]]:
    k = args.dim
    count = faces.count_faces_in_dim(system, k)
    payload = {
        "group": spec,
        "dim": k,
        "count": str(count),
    }
    lines = [_header(spec, system), f"{count} faces of dim {k}"]
    top = (system.n - 1) * system.h
    enumerable: Optional[List[Tuple[int, ...]]] = None
    if k == top:
        enumerable = [tuple(range(system.order))]
    elif k == -1:
        enumerable = [()]
    elif comb(system.order, k + 1) <= FACE_ENUM_CAP:
        enumerable = [
            members
            for members in combinations(range(system.order), k + 1)
            if faces.is_proper_face(system, members)
        ]
    if enumerable is not None:
        payload["faces"] = [list(m) for m in enumerable]
        lines.extend(",".join(str(i) for i in m) if m else "(empty face)" for m in enumerable)
    return payload, lines


def _cmd_gram(spec: str, system: FrobeniusSystem, args) -> Tuple[dict, List[str]]:
    census = embedding.gram_census(system)
    payload = {
        "group": spec,
        "n": census.degree,
        "order": census.order,
        "diagonal_pairs": census.diagonal_pairs,
        "same_coset_pairs": census.same_coset_pairs,
        "cross_coset_pairs": census.cross_coset_pairs,
        "values": {"diagonal": census.degree, "same_coset": 0, "cross_coset": 1},
        "pattern_ok": census.pattern_ok,
    }
    lines = [
        _header(spec, system),
        (
            f"gram census: diagonal {census.diagonal_pairs} pairs (value {census.degree}), "
            f"same-coset {census.same_coset_pairs} pairs (value 0), "
            f"cross-coset {census.cross_coset_pairs} pairs (value 1)"
        ),
        f"pattern ok: {'yes' if census.pattern_ok else 'no'}",
    ]
    if not census.pattern_ok:
        lines.extend(
            f"violation: <{a},{b}> = {v}" for a, b, v in census.violations
        )
    return payload, lines


def _cmd_verify(spec: str, system: FrobeniusSystem, args) -> Tuple[dict, List[str]]:
    report = oracle.verify_theorem(system, max_vertices=args.cap)
    payload = report.to_json_dict()
    lines = [_header(spec, system)]
    for check in report.checks:
        line = f"check {check.name}: {'pass' if check.passed else 'FAIL'}"
        if check.witness:
            line += f" ({check.witness})"
        lines.append(line)
    lines.append(f"facet count: {report.facet_count}")
    lines.append("f-vector (oracle):  " + " ".join(str(x) for x in report.fvector_oracle))
    lines.append("f-vector (formula): " + " ".join(str(x) for x in report.fvector_formula))
    lines.append(
        "result: all checks passed" if report.all_passed else "result: CHECKS FAILED"
    )
    return payload, lines


_HANDLERS = {
    "info": _cmd_info,
    "fvector": _cmd_fvector,
    "facets": _cmd_facets,
    "faces": _cmd_faces,
    "gram": _cmd_gram,
    "verify": _cmd_verify,
}


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        system = build_from_spec(args.group_spec)
        payload, lines = _HANDLERS[args.command](args.group_spec, system, args)
    except GroupSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotFrobeniusError as exc:
        msg = f"error: {exc}"
        if exc.witness is not None:
            msg += f" [witness {exc.witness.one_line()}]"
        print(msg, file=sys.stderr)
        return EXIT_NOT_FROBENIUS
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    if args.command == "verify" and not all(
        c.get("pass") for c in payload.get("checks", [])
    ):
        return EXIT_USAGE
    return EXIT_OK


def run() -> None:
    raise SystemExit(main())
