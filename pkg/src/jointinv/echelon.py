"""Reduced row echelon form of a field family over the rational function
field, and the closure loop that brackets until the family commutes.

Everything here is generic: dividing by a pivot entry silently restricts to
the open set where it is nonzero.  The accumulated restriction is reported as
the "genericity" locus, the product of the distinct denominator factors left
in the reduced rows.
"""

from __future__ import annotations

from .fields import FieldSystem, VectorField
from .poly import Polynomial, exact_div, poly_gcd
from .ratfunc import RationalFunction


class EchelonSystem:
    """Fields whose coefficient matrix is in reduced row echelon form.

    `pivots` holds one 0-based column index per row, strictly increasing;
    entry (i, pivots[j]) is 1 if i == j and 0 otherwise.  Zero rows are
    never stored.
    """

    __slots__ = ("ctx", "rows", "pivots")

    def __init__(self, ctx, rows, pivots):
        self.ctx = ctx
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)
        if len(self.rows) != len(self.pivots):
            raise ValueError("one pivot column per row required")
        if any(a >= b for a, b in zip(self.pivots, self.pivots[1:])):
            raise ValueError("pivot columns must be strictly increasing")
        for i, row in enumerate(self.rows):
            for j, col in enumerate(self.pivots):
                entry = row.coeffs[col]
                if not (entry.is_one() if i == j else entry.is_zero()):
                    raise ValueError(
                        f"row {i} is not reduced at pivot column {col}"
                    )

    def __len__(self):
        return len(self.rows)

    def field_system(self) -> FieldSystem:
        return FieldSystem(self.ctx, self.rows)

    def __repr__(self):
        return f"EchelonSystem(pivots={list(self.pivots)})"


def _pick_pivot(rows, start, col):
    """Cheapest nonzero entry in `col` at row >= start; ties go to the
    lowest row index.  Returns the row index or None."""
    best = None
    for r in range(start, len(rows)):
        entry = rows[r][col]
        if entry.is_zero():
            continue
        key = entry.complexity()
        if best is None or key < best[0]:
            best = (key, r)
    return None if best is None else best[1]


def rref(system: FieldSystem) -> EchelonSystem:
    """Gauss-Jordan over the function field; preserves the row space and
    keeps exactly generic-rank many rows."""
    ctx = system.ctx
    rows = [list(f.coeffs) for f in system.members]
    ncols = ctx.nvars
    zero = RationalFunction.zero(ctx)
    pivots = []
    rank = 0
    for col in range(ncols):
        pr = _pick_pivot(rows, rank, col)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        pivot = rows[rank][col]
        if not pivot.is_one():
            inv = pivot.reciprocal()
            row = rows[rank]
            for c in range(col, ncols):
                if not row[c].is_zero():
                    row[c] = row[c] * inv
        for r in range(len(rows)):
            if r == rank:
                continue
            entry = rows[r][col]
            if entry.is_zero():
                continue
            row = rows[r]
            row[col] = zero
            for c in range(col + 1, ncols):
                if not rows[rank][c].is_zero():
                    row[c] = row[c] - entry * rows[rank][c]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    fields = [VectorField(ctx, rows[i]) for i in range(rank)]
    return EchelonSystem(ctx, fields, pivots)


def is_abelian(echelon: EchelonSystem) -> bool:
    """True iff every pairwise bracket of the rows is the zero field."""
    rows = echelon.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if not rows[i].bracket(rows[j]).is_zero():
                return False
    return True


def bracket_independence_check(echelon: EchelonSystem, i, j) -> bool:
    """True iff [rows[i], rows[j]] is nonzero.  A nonzero bracket of echelon
    rows has zero entries in every pivot column, so it always enlarges the
    row space."""
    rows = echelon.rows
    if i == j or not (0 <= i < len(rows)) or not (0 <= j < len(rows)):
        raise IndexError(f"invalid row pair ({i}, {j})")
    return not rows[i].bracket(rows[j]).is_zero()


def _first_nonzero_bracket(echelon: EchelonSystem):
    rows = echelon.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            b = rows[i].bracket(rows[j])
            if not b.is_zero():
                return b
    return None


def commuting_closure(system: FieldSystem):
    """Reduce, then repeatedly append the first nonzero pairwise bracket
    (lexicographic (i, j) scan) and re-reduce, until the family commutes.

    Returns (echelon, iteration_count).  Each append raises the generic rank
    by one, so the loop runs at most |vars| times; the joint invariants of
    the result are those of the input.
    """
    echelon = rref(system)
    iterations = 0
    while True:
        extra = _first_nonzero_bracket(echelon)
        if extra is None:
            return echelon, iterations
        iterations += 1
        if iterations > system.ctx.nvars:
            raise RuntimeError("closure failed to terminate within |vars| steps")
        echelon = rref(FieldSystem(system.ctx, echelon.rows + (extra,)))


# ----------------------------------------------------------------------
# genericity locus


def _coprime_insert(factors, poly):
    """Refine a pairwise-coprime factor list with a new polynomial."""
    stack = [poly]
    while stack:
        f = stack.pop()
        c = f.content()
        if c > 1 or f.leading_coeff() < 0:
            sign = -1 if f.leading_coeff() < 0 else 1
            f = Polynomial(f.ctx, {m: v // (c * sign) for m, v in f.terms.items()})
        if f.degree() <= 0:
            continue
        for i, g in enumerate(factors):
            d = poly_gcd(f, g)
            if d.degree() <= 0:
                continue
            if d == g:
                stack.append(exact_div(f, g))
            else:
                # split g by the common part, retry f against the pieces
                factors[i : i + 1] = [d, exact_div(g, d)]
                stack.append(f)
            break
        else:
            factors.append(f)


def genericity_factors(echelon: EchelonSystem):
    """Distinct pairwise-coprime denominator factors of the reduced rows,
    sorted deterministically."""
    factors = []
    for row in echelon.rows:
        for coeff in row.coeffs:
            if not coeff.den.is_one():
                _coprime_insert(factors, coeff.den)
    factors.sort(key=lambda p: (p.degree(), str(p)))
    return factors


def genericity_string(echelon: EchelonSystem) -> str:
    """Product form of the genericity locus; "1" when unrestricted."""
    factors = genericity_factors(echelon)
    if not factors:
        return "1"
    pieces = [
        str(f) if f.term_count() == 1 else f"({f})"
        for f in factors
    ]
    return "*".join(pieces)
