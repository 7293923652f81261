"""Degree-bounded search for joint polynomial invariants.

A candidate F = sum_j c_j m_j ranges over all variable monomials of degree 1
through the bound (constants are trivially invariant and excluded).  Each
field X, cleared of denominators, turns X(F) = 0 into one linear equation per
monomial of the resulting polynomial -- parameter monomials included, so an
invariant holds identically in any symbolic parameters.  The rational
nullspace of that system, put in reduced echelon form over the graded-lex
column order and scaled to primitive integer vectors, is the returned basis.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .fields import FieldSystem, matrix_rank_rf
from .poly import Polynomial, grlex_key, mono_mul, monomials_up_to_degree
from .ratfunc import RationalFunction


class InvariantBasis:
    """Result of a bounded search: linearly independent polynomial
    invariants plus their generic functional independence count."""

    __slots__ = ("degree_bound", "basis", "independent_count")

    def __init__(self, degree_bound, basis, independent_count):
        self.degree_bound = degree_bound
        self.basis = tuple(basis)
        self.independent_count = independent_count

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self):
        return (
            f"InvariantBasis(degree_bound={self.degree_bound}, "
            f"size={len(self.basis)}, independent={self.independent_count})"
        )


# ----------------------------------------------------------------------
# sparse exact linear algebra over Q


def sparse_rref(rows):
    """Reduced row echelon form of sparse rows (dicts col -> Fraction).

    Returns {pivot_col: row}; every returned row has a 1 at its pivot and no
    entry in any other pivot column.  The result is the unique RREF of the
    row space, independent of input order.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while True:
            hit = None
            for col in row:
                if col in pivots:
                    hit = col
                    break
            if hit is None:
                break
            factor = row[hit]
            for c, v in pivots[hit].items():
                s = row.get(c, Fraction(0)) - factor * v
                if s:
                    row[c] = s
                elif c in row:
                    del row[c]
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        pivots[lead] = {c: v * inv for c, v in row.items()}
    # back-substitute so pivot columns are cleared everywhere
    for lead in sorted(pivots, reverse=True):
        row = pivots[lead]
        for other in [c for c in row if c != lead and c in pivots]:
            factor = row[other]
            for c, v in pivots[other].items():
                s = row.get(c, Fraction(0)) - factor * v
                if s:
                    row[c] = s
                elif c in row:
                    del row[c]
    return pivots


def nullspace(rows, ncols):
    """Canonical basis of {v : A v = 0}: the reduced echelon form (over the
    given column order) of the kernel of the sparse system."""
    pivots = sparse_rref(rows)
    free_cols = [c for c in range(ncols) if c not in pivots]
    vectors = []
    for f in free_cols:
        vec = {f: Fraction(1)}
        for lead, row in pivots.items():
            if f in row:
                vec[lead] = -row[f]
        vectors.append(vec)
    return list(sparse_rref(vectors).values())


def reduce_against(pivots, vector):
    """Remainder of a sparse vector after elimination by RREF pivot rows."""
    vec = dict(vector)
    while True:
        hit = next((c for c in vec if c in pivots), None)
        if hit is None:
            return vec
        factor = vec[hit]
        for c, v in pivots[hit].items():
            s = vec.get(c, Fraction(0)) - factor * v
            if s:
                vec[c] = s
            elif c in vec:
                del vec[c]


# ----------------------------------------------------------------------
# polynomial/vector conversions


def _poly_vector(p: Polynomial, col_of):
    vec = {}
    for m, c in p.terms.items():
        col = col_of.get(m)
        if col is None:
            raise ValueError(f"monomial outside the ansatz space: {p}")
        vec[col] = Fraction(c)
    return vec


def _vector_poly(vec, monos, ctx) -> Polynomial:
    """Scale a rational vector to a primitive integer polynomial whose
    graded-lex leading coefficient is positive."""
    if not vec:
        return Polynomial.zero(ctx)
    scale = math.lcm(*(v.denominator for v in vec.values()))
    ints = {monos[c]: int(v * scale) for c, v in vec.items()}
    g = math.gcd(*ints.values())
    lead = max(ints, key=grlex_key)
    sign = -1 if ints[lead] < 0 else 1
    return Polynomial(ctx, {m: v // (g * sign) for m, v in ints.items()})


def poly_span_pivots(polys):
    """RREF pivots of the span of polynomials over their own monomials,
    using a shared graded-lex-descending column order."""
    monos = sorted({m for p in polys for m in p.terms}, key=grlex_key, reverse=True)
    col_of = {m: i for i, m in enumerate(monos)}
    rows = [_poly_vector(p, col_of) for p in polys]
    return sparse_rref(rows), col_of


def poly_in_span(polys, target: Polynomial) -> bool:
    """Exact linear solve: is target a Q-combination of polys?"""
    if target.is_zero():
        return True
    if not polys:
        return False
    monos = sorted(
        {m for p in polys for m in p.terms} | set(target.terms),
        key=grlex_key,
        reverse=True,
    )
    col_of = {m: i for i, m in enumerate(monos)}
    pivots = sparse_rref(_poly_vector(p, col_of) for p in polys)
    return not reduce_against(pivots, _poly_vector(target, col_of))


def spans_equal(polys_a, polys_b) -> bool:
    """Do two polynomial families span the same Q-vector space?"""
    monos = sorted(
        {m for p in list(polys_a) + list(polys_b) for m in p.terms},
        key=grlex_key,
        reverse=True,
    )
    col_of = {m: i for i, m in enumerate(monos)}
    rref_a = sparse_rref(_poly_vector(p, col_of) for p in polys_a)
    rref_b = sparse_rref(_poly_vector(p, col_of) for p in polys_b)
    return rref_a == rref_b


# ----------------------------------------------------------------------
# the search itself


def polynomial_invariants(system: FieldSystem, max_degree: int) -> InvariantBasis:
    """All polynomial joint invariants of degree <= max_degree with zero
    constant term, as a deterministic reduced basis."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    ctx = system.ctx
    monos = monomials_up_to_degree(ctx, max_degree)
    col_of = {m: i for i, m in enumerate(monos)}
    equations = []
    for member in system.members:
        _, nums = member.cleared()
        by_mono: dict = {}
        for j, mono in enumerate(monos):
            acc = {}
            for k in range(ctx.nvars):
                e = mono[k]
                if not e or nums[k].is_zero():
                    continue
                dm = mono[:k] + (e - 1,) + mono[k + 1 :]
                for tm, tc in nums[k].terms.items():
                    mm = mono_mul(tm, dm)
                    v = acc.get(mm, 0) + tc * e
                    if v:
                        acc[mm] = v
                    elif mm in acc:
                        del acc[mm]
            for mm, coeff in acc.items():
                by_mono.setdefault(mm, {})[j] = Fraction(coeff)
        equations.extend(by_mono[key] for key in sorted(by_mono, key=grlex_key))
    vectors = nullspace(equations, len(monos))
    basis = [_vector_poly(vec, monos, ctx) for vec in vectors]
    return InvariantBasis(max_degree, basis, functional_independence(basis))


def expected_invariant_count(system: FieldSystem) -> int:
    """Locally, a rank-r family on n coordinates admits n - r independent
    joint invariants."""
    return system.ctx.nvars - system.generic_rank()


def functional_independence(polys) -> int:
    """Generic rank of the Jacobian matrix of the polynomials."""
    polys = list(polys)
    if not polys:
        return 0
    ctx = polys[0].ctx
    rows = [
        [RationalFunction.from_poly(p.derivative(name)) for name in ctx.variables]
        for p in polys
    ]
    return matrix_rank_rf(rows)


def annihilates(system: FieldSystem, poly: Polynomial) -> bool:
    """Syntactic check that every field in the system kills the polynomial."""
    return all(member.apply(poly).is_zero() for member in system.members)
