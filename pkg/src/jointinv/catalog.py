"""Built-in example systems and algebras, addressable by stable CLI names.

Coordinate realizations are stored exactly as classically printed; the
so(4)-family entries are generated from the standard matrix realization of
the metric-preserving algebra, with basis M_ab = (E_ab - E_ba) * eta ordered
(1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .context import VarContext
from .errors import CatalogError
from .fields import FieldSystem, VectorField
from .liealg import StructureConstants
from .parsing import parse_scalar

_SO_PQ_RE = re.compile(r"so_pq\((\d+),(\d+)\)\Z")

CATALOG_NAMES = (
    "so3",
    "so_pq(p,q)",
    "sl2_triple",
    "olver_r4",
    "sl3",
    "so4",
    "so22",
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    fields: FieldSystem | None = None
    structure: StructureConstants | None = None
    basis_prefix: str = "x"
    # known joint invariants, keyed by realization ("fields", "adjoint",
    # "coadjoint"); verified by the test suite, not at load time
    expected: dict = field(default_factory=dict)

    @property
    def kind(self):
        return "fields" if self.fields is not None else "structure_constants"


def _system(var_names, rows, params=()):
    ctx = VarContext(var_names, params)
    members = [
        VectorField(ctx, [parse_scalar(entry, ctx) for entry in row])
        for row in rows
    ]
    return FieldSystem(ctx, members)


def _so3():
    fields = _system(
        ["x", "y", "z"],
        [["y", "-x", "0"], ["0", "z", "-y"], ["z", "0", "-x"]],
    )
    return CatalogEntry(
        name="so3",
        description="infinitesimal rotations of R^3 (3 fields, 3 vars)",
        fields=fields,
        expected={"fields": ("x^2+y^2+z^2",)},
    )


def _sl2_triple():
    # raising/grading/lowering triple acting on coefficient space of binary
    # quadratics; the lowering field is x*d/dy + 2y*d/dz
    fields = _system(
        ["x", "y", "z"],
        [["2*y", "z", "0"], ["-2*x", "0", "2*z"], ["0", "x", "2*y"]],
    )
    return CatalogEntry(
        name="sl2_triple",
        description="the classical sl(2) triple acting on R^3 (3 fields, 3 vars)",
        fields=fields,
        expected={"fields": ("x*z-y^2",)},
    )


def _olver_r4():
    fields = _system(
        ["x", "y", "z", "w"],
        [["0", "z", "-y", "0"], ["1", "w", "0", "y"]],
    )
    return CatalogEntry(
        name="olver_r4",
        description="two fields on R^4 that are not bracket-closed (2 fields, 4 vars)",
        fields=fields,
        expected={"fields": ("y^2+z^2-w^2",)},
    )


def so_pq_system(p, q) -> FieldSystem:
    """Generators of the signature-(p, q) rotation algebra: plane rotations
    within each sign block and one hyperbolic rotation joining them."""
    if p < 1 or q < 1:
        raise CatalogError(f"invalid signature ({p}, {q}): need p >= 1 and q >= 1")
    n = p + q
    ctx = VarContext([f"x{i}" for i in range(1, n + 1)])
    zero = parse_scalar("0", ctx)
    members = []
    for i in range(1, n):
        coeffs = [zero] * n
        if i == p:
            # hyperbolic rotation in the (x_p, x_{p+1}) plane
            coeffs[i - 1] = parse_scalar(f"x{i + 1}", ctx)
            coeffs[i] = parse_scalar(f"x{i}", ctx)
        else:
            coeffs[i - 1] = parse_scalar(f"x{i + 1}", ctx)
            coeffs[i] = parse_scalar(f"-x{i}", ctx)
        members.append(VectorField(ctx, coeffs))
    return FieldSystem(ctx, members)


def so_pq_invariant_text(p, q) -> str:
    plus = "+".join(f"x{i}^2" for i in range(1, p + 1))
    minus = "".join(f"-x{p + i}^2" for i in range(1, q + 1))
    return plus + minus


def _so_pq_entry(p, q):
    return CatalogEntry(
        name=f"so_pq({p},{q})",
        description=f"rotation family of signature ({p},{q}) "
        f"({p + q - 1} fields, {p + q} vars)",
        fields=so_pq_system(p, q),
        expected={"fields": (so_pq_invariant_text(p, q),)},
    )


_SL3_BRACKETS = {
    (1, 2): ((2, 1),),
    (1, 3): ((3, 2),),
    (1, 4): ((4, -1),),
    (1, 6): ((6, 1),),
    (1, 7): ((7, -2),),
    (1, 8): ((8, -1),),
    (2, 4): ((1, 1), (5, -1)),
    (2, 5): ((2, 1),),
    (2, 6): ((3, 1),),
    (2, 7): ((8, -1),),
    (3, 4): ((6, -1),),
    (3, 5): ((3, -1),),
    (3, 7): ((1, 1),),
    (3, 8): ((2, 1),),
    (4, 5): ((4, -1),),
    (4, 8): ((7, -1),),
    (5, 6): ((6, 2),),
    (5, 7): ((7, -1),),
    (5, 8): ((8, -2),),
    (6, 7): ((4, 1),),
    (6, 8): ((5, 1),),
}

_SL3_COADJOINT_INVARIANTS = (
    "x5^2+x1^2-x1*x5+3*x7*x3+3*x8*x6+3*x2*x4",
    "2*x1^3-3*x5*x1^2+9*x2*x4*x1-3*x1*x5^2-18*x1*x8*x6+9*x7*x3*x1"
    "+2*x5^3+9*x5*x8*x6-18*x7*x5*x3+9*x5*x2*x4+27*x7*x6*x2+27*x4*x3*x8",
)

_SL3_ADJOINT_INVARIANTS = (
    "x5^2+x1*x5+x1^2+x7*x3+x8*x6+x4*x2",
    "-x1^2*x5-x1*x6*x8+x1*x4*x2-x1*x5^2-x3*x7*x5+x4*x8*x3+x2*x6*x7+x4*x5*x2",
)


def _sl3():
    sc = StructureConstants(8, _SL3_BRACKETS)
    return CatalogEntry(
        name="sl3",
        description="sl(3,R) structure constants (dim 8, 21 bracket pairs)",
        structure=sc,
        expected={
            "coadjoint": _SL3_COADJOINT_INVARIANTS,
            "adjoint": _SL3_ADJOINT_INVARIANTS,
        },
    )


def metric_rotation_constants(signs) -> StructureConstants:
    """Structure constants of the algebra preserving the diagonal metric with
    the given +/-1 signs, in the basis M_ab = (E_ab - E_ba) * eta for a < b."""
    n = len(signs)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    index = {pair: i + 1 for i, pair in enumerate(pairs)}

    def basis_matrix(a, b):
        m = [[Fraction(0)] * n for _ in range(n)]
        m[a][b] = Fraction(signs[b])
        m[b][a] = Fraction(-signs[a])
        return m

    mats = {pair: basis_matrix(*pair) for pair in pairs}
    table = {}
    for i, p1 in enumerate(pairs):
        for p2 in pairs[i + 1 :]:
            m1, m2 = mats[p1], mats[p2]
            comm = [
                [
                    sum(m1[r][k] * m2[k][c] - m2[r][k] * m1[k][c] for k in range(n))
                    for c in range(n)
                ]
                for r in range(n)
            ]
            entries = []
            for (a, b), idx in index.items():
                coeff = comm[a][b] / signs[b]
                if coeff:
                    entries.append((idx, coeff))
            if entries:
                table[(index[p1], index[p2])] = tuple(entries)
    return StructureConstants(len(pairs), table)


def _so4():
    return CatalogEntry(
        name="so4",
        description="so(4) structure constants (dim 6)",
        structure=metric_rotation_constants((1, 1, 1, 1)),
    )


def _so22():
    return CatalogEntry(
        name="so22",
        description="so(2,2) structure constants (dim 6)",
        structure=metric_rotation_constants((1, 1, -1, -1)),
    )


_BUILDERS = {
    "so3": _so3,
    "sl2_triple": _sl2_triple,
    "olver_r4": _olver_r4,
    "sl3": _sl3,
    "so4": _so4,
    "so22": _so22,
}

_cache: dict = {}


def get(name: str) -> CatalogEntry:
    """Look up a catalog entry; so_pq takes explicit integers, e.g.
    "so_pq(2,1)"."""
    if name in _cache:
        return _cache[name]
    match = _SO_PQ_RE.match(name)
    if match:
        entry = _so_pq_entry(int(match.group(1)), int(match.group(2)))
    elif name in _BUILDERS:
        entry = _BUILDERS[name]()
    else:
        raise CatalogError(f"unknown catalog name {name!r}")
    _cache[name] = entry
    return entry


def names():
    return CATALOG_NAMES
