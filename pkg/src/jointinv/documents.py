"""JSON ingestion and emission.

Three document shapes, all strict about their keys:

    system     {"vars": [..], "params": [..]?, "fields": [[expr x |vars|], ..]}
    constants  {"dim": d, "basis_prefix": str?, "brackets":
                   [{"i": i, "j": j, "k": k, "c": rational-string}, ..]}
               with 1-based indices, i < j rows only; omitted pairs are zero
    darboux    {"factors": [[base-expr, exponent-expr], ..],
                "exp": [[coeff-expr, kind, arg-expr], ..]}
               with kind one of "rational" | "log" | "arctan"

Emission is deterministic: fixed key order, compact separators, canonical
scalar strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .context import VarContext
from .darboux import DarbouxExpr
from .errors import ParseError, SchemaError
from .fields import FieldSystem, VectorField
from .liealg import StructureConstants
from .parsing import parse_scalar


def as_document(doc):
    if isinstance(doc, dict):
        return doc
    try:
        loaded = json.loads(doc)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    if not isinstance(loaded, dict):
        raise SchemaError("top-level JSON value must be an object")
    return loaded


def _check_keys(doc, required, optional=()):
    missing = [k for k in required if k not in doc]
    if missing:
        raise SchemaError(f"missing required keys: {', '.join(missing)}")
    unknown = [k for k in doc if k not in required and k not in optional]
    if unknown:
        raise SchemaError(f"unknown keys: {', '.join(unknown)}")


def _name_list(value, what):
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise SchemaError(f"{what} must be a list of strings")
    return value


def _scalar(text, ctx, where):
    if not isinstance(text, str):
        raise SchemaError(f"{where}: expected an expression string")
    try:
        return parse_scalar(text, ctx)
    except ParseError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def parse_system(doc) -> FieldSystem:
    """Read a system document into a field family over a fresh context."""
    doc = as_document(doc)
    _check_keys(doc, required=("vars", "fields"), optional=("params",))
    var_names = _name_list(doc["vars"], "vars")
    params = _name_list(doc.get("params", []), "params")
    try:
        ctx = VarContext(var_names, params)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    rows = doc["fields"]
    if not isinstance(rows, list):
        raise SchemaError("fields must be a list of coefficient rows")
    members = []
    for i, row in enumerate(rows, start=1):
        if not isinstance(row, list):
            raise SchemaError(f"field {i} must be a list of expressions")
        if len(row) != len(var_names):
            raise SchemaError(
                f"field {i} has {len(row)} coefficients for {len(var_names)} vars"
            )
        coeffs = [
            _scalar(entry, ctx, f"field {i}, component {j}")
            for j, entry in enumerate(row, start=1)
        ]
        members.append(VectorField(ctx, coeffs))
    return FieldSystem(ctx, members)


def system_document(system: FieldSystem) -> dict:
    doc = {"vars": list(system.ctx.variables)}
    if system.ctx.parameters:
        doc["params"] = list(system.ctx.parameters)
    doc["fields"] = [[str(c) for c in f.coeffs] for f in system.members]
    return doc


def _rational_constant(text, where) -> Fraction:
    if isinstance(text, str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"{where}: invalid rational constant {text!r}") from None
    raise SchemaError(f"{where}: expected a rational constant string")


def parse_structure_constants(doc):
    """Read a constants document; returns (StructureConstants, basis_prefix)."""
    doc = as_document(doc)
    _check_keys(doc, required=("dim", "brackets"), optional=("basis_prefix",))
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError("dim must be a positive integer")
    prefix = doc.get("basis_prefix", "x")
    if not isinstance(prefix, str) or not prefix:
        raise SchemaError("basis_prefix must be a nonempty string")
    rows = doc["brackets"]
    if not isinstance(rows, list):
        raise SchemaError("brackets must be a list of objects")
    table: dict = {}
    for idx, row in enumerate(rows, start=1):
        if not isinstance(row, dict):
            raise SchemaError(f"bracket {idx} must be an object")
        _check_keys(row, required=("i", "j", "k", "c"))
        i, j, k = row["i"], row["j"], row["k"]
        for label, v in (("i", i), ("j", j), ("k", k)):
            if not isinstance(v, int) or not (1 <= v <= dim):
                raise SchemaError(f"bracket {idx}: index {label}={v!r} out of range")
        if not i < j:
            raise SchemaError(f"bracket {idx}: requires i < j, got ({i}, {j})")
        c = _rational_constant(row["c"], f"bracket {idx}")
        table.setdefault((i, j), []).append((k, c))
    try:
        sc = StructureConstants(dim, table)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    return sc, prefix


def constants_document(sc: StructureConstants, prefix="x") -> dict:
    brackets = []
    for (i, j) in sorted(sc.table):
        for k, c in sc.table[(i, j)]:
            brackets.append({"i": i, "j": j, "k": k, "c": str(c)})
    return {"dim": sc.dim, "basis_prefix": prefix, "brackets": brackets}


def parse_darboux(doc, ctx: VarContext) -> DarbouxExpr:
    """Read a verifier document against an existing context."""
    doc = as_document(doc)
    _check_keys(doc, required=("factors", "exp"))
    factors = []
    if not isinstance(doc["factors"], list):
        raise SchemaError("factors must be a list of [base, exponent] pairs")
    for idx, pair in enumerate(doc["factors"], start=1):
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(f"factor {idx} must be a [base, exponent] pair")
        base = _scalar(pair[0], ctx, f"factor {idx} base")
        exponent = _scalar(pair[1], ctx, f"factor {idx} exponent")
        factors.append((base, exponent))
    atoms = []
    if not isinstance(doc["exp"], list):
        raise SchemaError("exp must be a list of [coeff, kind, arg] triples")
    for idx, triple in enumerate(doc["exp"], start=1):
        if not isinstance(triple, list) or len(triple) != 3:
            raise SchemaError(f"exp atom {idx} must be a [coeff, kind, arg] triple")
        coeff = _scalar(triple[0], ctx, f"exp atom {idx} coefficient")
        kind = triple[1]
        arg = _scalar(triple[2], ctx, f"exp atom {idx} argument")
        atoms.append((coeff, kind, arg))
    try:
        return DarbouxExpr(ctx, factors, atoms)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def darboux_document(expr: DarbouxExpr) -> dict:
    return {
        "factors": [[str(base), str(exponent)] for base, exponent in expr.factors],
        "exp": [
            [str(coeff), kind, str(arg)] for coeff, kind, arg in expr.exp_atoms
        ],
    }


def dumps_canonical(doc) -> str:
    """Compact, insertion-ordered JSON used for all machine output."""
    return json.dumps(doc, separators=(",", ":"))
