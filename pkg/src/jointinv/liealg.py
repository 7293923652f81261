"""Abstract Lie algebras given by structure constants, and their adjoint and
coadjoint realizations as linear vector fields.

Basis indices are 1-based throughout, matching the JSON schema.  Brackets are
stored for i < j only; the rest follows by antisymmetry.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .context import VarContext
from .fields import FieldSystem, VectorField
from .poly import Polynomial
from .ratfunc import RationalFunction


class StructureConstants:
    """Sparse table c with [e_i, e_j] = sum_k c[(i,j)][k] * e_k for i < j."""

    __slots__ = ("dim", "table")

    def __init__(self, dim, table, require_jacobi=True):
        dim = int(dim)
        if dim < 1:
            raise ValueError("dimension must be positive")
        clean = {}
        for (i, j), entries in table.items():
            if not (1 <= i < j <= dim):
                raise ValueError(
                    f"bracket pair ({i}, {j}) must satisfy 1 <= i < j <= dim"
                )
            merged = {}
            for k, c in entries:
                if not (1 <= k <= dim):
                    raise ValueError(f"bracket target {k} out of range")
                merged[k] = merged.get(k, Fraction(0)) + Fraction(c)
            merged = {k: c for k, c in merged.items() if c}
            if merged:
                clean[(i, j)] = tuple(sorted(merged.items()))
        self.dim = dim
        self.table = clean
        if require_jacobi and not validate_jacobi(self):
            raise ValueError("structure constants violate the Jacobi identity")

    def pair_count(self):
        """Number of basis pairs with a nonzero bracket."""
        return len(self.table)

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a dict k -> coefficient (any i, j)."""
        if i == j:
            return {}
        if i < j:
            return dict(self.table.get((i, j), ()))
        return {k: -c for k, c in self.table.get((j, i), ())}

    def bracket_vectors(self, u, v):
        """Bracket of two coefficient vectors (dicts index -> Fraction)."""
        out = {}
        for i, a in u.items():
            if not a:
                continue
            for j, b in v.items():
                if not b:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    s = out.get(k, Fraction(0)) + a * b * c
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return out

    def __repr__(self):
        return f"StructureConstants(dim={self.dim}, pairs={len(self.table)})"


def validate_jacobi(sc: StructureConstants) -> bool:
    """Exact check of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
    over all index triples."""
    d = sc.dim
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            for k in range(j + 1, d + 1):
                total = {}
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = sc.bracket_basis(a, b)
                    for m, coeff in inner.items():
                        for t, c2 in sc.bracket_basis(m, c).items():
                            s = total.get(t, Fraction(0)) + coeff * c2
                            if s:
                                total[t] = s
                            elif t in total:
                                del total[t]
                if total:
                    return False
    return True


def _linear_coefficient(ctx: VarContext, weights) -> RationalFunction:
    """sum_i weights[i] * x_i as a canonical rational function; weights maps
    1-based basis indices to Fractions."""
    if not weights:
        return RationalFunction.zero(ctx)
    denom = math.lcm(*(w.denominator for w in weights.values()))
    terms = {}
    width = len(ctx.names)
    for i, w in weights.items():
        mono = [0] * width
        mono[i - 1] = 1
        terms[tuple(mono)] = int(w * denom)
    num = Polynomial(ctx, terms)
    if denom == 1:
        return RationalFunction.from_poly(num)
    return RationalFunction(num, Polynomial.constant(ctx, denom))


def representation_context(sc: StructureConstants, prefix="x") -> VarContext:
    return VarContext([f"{prefix}{m}" for m in range(1, sc.dim + 1)])


def adjoint_fields(sc: StructureConstants, prefix="x") -> FieldSystem:
    """Fundamental fields of the action on the algebra itself: the field of
    basis element m has j-th coefficient sum_i x_i c[(m,i)][j]."""
    if not validate_jacobi(sc):
        raise ValueError("structure constants violate the Jacobi identity")
    ctx = representation_context(sc, prefix)
    d = sc.dim
    members = []
    for m in range(1, d + 1):
        coeffs = []
        for j in range(1, d + 1):
            weights = {}
            for i in range(1, d + 1):
                c = sc.bracket_basis(m, i).get(j)
                if c:
                    weights[i] = c
            coeffs.append(_linear_coefficient(ctx, weights))
        members.append(VectorField(ctx, coeffs))
    return FieldSystem(ctx, members)


def coadjoint_fields(sc: StructureConstants, prefix="x") -> FieldSystem:
    """Fundamental fields of the dual action: the field of basis element m
    has j-th coefficient -sum_i x_i c[(m,j)][i]."""
    if not validate_jacobi(sc):
        raise ValueError("structure constants violate the Jacobi identity")
    ctx = representation_context(sc, prefix)
    d = sc.dim
    members = []
    for m in range(1, d + 1):
        coeffs = []
        for j in range(1, d + 1):
            weights = {}
            bracket = sc.bracket_basis(m, j)
            for i, c in bracket.items():
                weights[i] = -c
            coeffs.append(_linear_coefficient(ctx, weights))
        members.append(VectorField(ctx, coeffs))
    return FieldSystem(ctx, members)
