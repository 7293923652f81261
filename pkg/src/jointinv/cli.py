"""Command-line interface.

Exit codes: 0 success, 2 bad input (syntax, schema, unknown catalog name,
poles/degeneracies), 1 internal invariant violation.  All output is
deterministic; JSON mode emits one compact object.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog as _catalog
from . import documents
from .echelon import commuting_closure, genericity_string, rref
from .errors import CatalogError, ParseError, PoleError, SchemaError
from .fields import FieldSystem
from .invariants import expected_invariant_count, polynomial_invariants
from .liealg import adjoint_fields, coadjoint_fields
from .darboux import verify_darboux

_INPUT_ERRORS = (SchemaError, ParseError, CatalogError, PoleError, ZeroDivisionError)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="jointinv",
        description="Exact joint invariants of families of vector fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, representation=True, degree=False):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument(
            "--system",
            metavar="DOC",
            help="path to a JSON document, inline JSON, or '-' for stdin",
        )
        src.add_argument("--catalog", metavar="NAME", help="built-in catalog name")
        if representation:
            p.add_argument(
                "--representation",
                choices=("adjoint", "coadjoint"),
                help="realization to use for structure-constants input",
            )
        if degree:
            p.add_argument(
                "--max-degree",
                type=int,
                default=3,
                metavar="N",
                help="ansatz degree bound (default 3)",
            )
        p.add_argument(
            "--format", choices=("human", "json"), default="human", dest="fmt"
        )
        p.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")

    p = sub.add_parser("reduce", help="reduced row echelon form of a system")
    add_common(p)
    p = sub.add_parser("closure", help="bracket until the reduced family commutes")
    add_common(p)
    p = sub.add_parser("bracket-table", help="all pairwise Lie brackets")
    add_common(p)
    p = sub.add_parser("rank", help="generic rank and expected invariant count")
    add_common(p)
    p = sub.add_parser("invariants", help="search for polynomial joint invariants")
    add_common(p, degree=True)
    p = sub.add_parser(
        "generate", help="realize structure constants as a field system"
    )
    add_common(p)
    p = sub.add_parser("verify", help="verify a product/exponential invariant")
    add_common(p)
    p.add_argument(
        "--darboux",
        metavar="DOC",
        required=True,
        help="path to a verifier JSON document, inline JSON, or '-'",
    )
    p = sub.add_parser("catalog", help="list catalog entries or show one")
    p.add_argument("name", nargs="?", help="entry to show (omit to list)")
    p.add_argument("--format", choices=("human", "json"), default="human", dest="fmt")
    p.add_argument("--output", metavar="PATH")
    return parser


def _read_document(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith("{"):
        return arg
    path = Path(arg)
    try:
        return path.read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {arg!r}: {exc}") from None


def _load_payload(args):
    """Returns ("fields", FieldSystem) or ("sc", StructureConstants, prefix)."""
    if args.catalog:
        entry = _catalog.get(args.catalog)
        if entry.kind == "fields":
            return ("fields", entry.fields)
        return ("sc", entry.structure, entry.basis_prefix)
    text = _read_document(args.system)
    doc = documents.as_document(text)
    if "vars" in doc:
        return ("fields", documents.parse_system(doc))
    if "dim" in doc:
        sc, prefix = documents.parse_structure_constants(doc)
        return ("sc", sc, prefix)
    raise SchemaError("document is neither a system nor structure constants")


def _realize(payload, args) -> FieldSystem:
    representation = getattr(args, "representation", None)
    if payload[0] == "fields":
        if representation:
            raise SchemaError(
                "--representation only applies to structure-constants input"
            )
        return payload[1]
    _, sc, prefix = payload
    if not representation:
        raise SchemaError(
            "structure-constants input requires --representation "
            "(adjoint or coadjoint)"
        )
    if representation == "adjoint":
        return adjoint_fields(sc, prefix)
    return coadjoint_fields(sc, prefix)


def _emit(args, human: str, doc) -> None:
    text = documents.dumps_canonical(doc) if args.fmt == "json" else human
    text += "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _rows_block(echelon):
    return [[str(c) for c in row.coeffs] for row in echelon.rows]


def _human_rows(rows):
    return "\n".join("  [" + ", ".join(r) + "]" for r in rows)


def _cmd_reduce(args):
    system = _realize(_load_payload(args), args)
    echelon = rref(system)
    rows = _rows_block(echelon)
    pivots = [p + 1 for p in echelon.pivots]
    locus = genericity_string(echelon)
    human = (
        f"pivots: {pivots}\n"
        f"rows:\n{_human_rows(rows)}\n"
        f"genericity: {locus}"
    )
    _emit(args, human, {"pivots": pivots, "rows": rows, "genericity": locus})
    return 0


def _cmd_closure(args):
    system = _realize(_load_payload(args), args)
    echelon, iterations = commuting_closure(system)
    rows = _rows_block(echelon)
    pivots = [p + 1 for p in echelon.pivots]
    locus = genericity_string(echelon)
    expected = system.ctx.nvars - len(echelon.rows)
    human = (
        f"iterations: {iterations}\n"
        f"pivots: {pivots}\n"
        f"rows:\n{_human_rows(rows)}\n"
        f"genericity: {locus}\n"
        f"expected joint invariants: {expected}\n"
        f"next: run 'invariants' on this system to search for them"
    )
    _emit(
        args,
        human,
        {
            "pivots": pivots,
            "rows": rows,
            "iterations": iterations,
            "genericity": locus,
            "expected_invariants": expected,
        },
    )
    return 0


def _cmd_bracket_table(args):
    system = _realize(_load_payload(args), args)
    pairs = []
    for i in range(len(system.members)):
        for j in range(i + 1, len(system.members)):
            b = system.members[i].bracket(system.members[j])
            pairs.append(
                {
                    "i": i + 1,
                    "j": j + 1,
                    "zero": b.is_zero(),
                    "bracket": [str(c) for c in b.coeffs],
                }
            )
    lines = [
        f"[X{p['i']}, X{p['j']}] = [" + ", ".join(p["bracket"]) + "]"
        for p in pairs
    ]
    human = "\n".join(lines) if lines else "no pairs"
    _emit(args, human, {"pairs": pairs})
    return 0


def _cmd_rank(args):
    system = _realize(_load_payload(args), args)
    rank = system.generic_rank()
    expected = system.ctx.nvars - rank
    human = (
        f"fields: {len(system.members)}\n"
        f"vars: {system.ctx.nvars}\n"
        f"generic rank: {rank}\n"
        f"expected joint invariants: {expected}"
    )
    _emit(
        args,
        human,
        {
            "fields": len(system.members),
            "vars": system.ctx.nvars,
            "generic_rank": rank,
            "expected_invariants": expected,
        },
    )
    return 0


def _cmd_invariants(args):
    system = _realize(_load_payload(args), args)
    if args.max_degree < 1:
        raise SchemaError("--max-degree must be at least 1")
    result = polynomial_invariants(system, args.max_degree)
    expected = expected_invariant_count(system)
    basis = [str(p) for p in result.basis]
    lines = [
        f"degree bound: {result.degree_bound}",
        f"expected joint invariants: {expected}",
        f"basis ({len(basis)} found, functionally independent: "
        f"{result.independent_count}):",
    ]
    lines.extend(f"  {b}" for b in basis)
    if not basis:
        lines.append("  (none at this degree bound)")
    _emit(
        args,
        "\n".join(lines),
        {
            "degree_bound": result.degree_bound,
            "expected_invariants": expected,
            "basis": basis,
            "independent_count": result.independent_count,
        },
    )
    return 0


def _cmd_generate(args):
    payload = _load_payload(args)
    if payload[0] != "sc":
        raise SchemaError("generate requires structure-constants input")
    system = _realize(payload, args)
    doc = documents.system_document(system)
    human = documents.dumps_canonical(doc)
    _emit(args, human, doc)
    return 0


def _cmd_verify(args):
    system = _realize(_load_payload(args), args)
    expr = documents.parse_darboux(_read_document(args.darboux), system.ctx)
    ok = verify_darboux(system, expr)
    _emit(args, "VERIFIED" if ok else "NOT VERIFIED", {"verified": ok})
    return 0


def _cmd_catalog(args):
    if args.name is None:
        entries = [
            {"name": n, "description": _describe(n)} for n in _catalog.names()
        ]
        human = "\n".join(f"{e['name']:12s} {e['description']}" for e in entries)
        _emit(args, human, {"names": [e["name"] for e in entries]})
        return 0
    entry = _catalog.get(args.name)
    if entry.kind == "fields":
        doc = documents.system_document(entry.fields)
    else:
        doc = documents.constants_document(entry.structure, entry.basis_prefix)
    _emit(args, documents.dumps_canonical(doc), doc)
    return 0


def _describe(name):
    if name == "so_pq(p,q)":
        return "rotation family of signature (p,q); instantiate like so_pq(2,1)"
    return _catalog.get(name).description


_COMMANDS = {
    "reduce": _cmd_reduce,
    "closure": _cmd_closure,
    "bracket-table": _cmd_bracket_table,
    "rank": _cmd_rank,
    "invariants": _cmd_invariants,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "catalog": _cmd_catalog,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal invariant violation; should not fire
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
