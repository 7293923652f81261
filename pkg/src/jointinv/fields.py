"""Vector fields as first-order differential operators.

A field is the coefficient tuple of sum_k c_k * d/dx_k over a shared context;
it applies to scalars, brackets with other fields, and a family of fields has
an exact generic rank over the rational function field.
"""

from __future__ import annotations

from fractions import Fraction

from .context import VarContext
from .errors import ExactDivisionError
from .poly import Polynomial, exact_div, poly_gcd
from .ratfunc import RationalFunction


def reduce_by_factors(num: Polynomial, factors) -> RationalFunction:
    """Canonical num / prod(factors) where the denominator's factor list is
    known: one gcd per factor beats one gcd against the opaque product."""
    if num.is_zero():
        return RationalFunction.zero(num.ctx)
    den = Polynomial.one(num.ctx)
    for f in factors:
        if f.is_one():
            continue
        # full cancellation is the common case for bracket numerators, and
        # a failed exact division bails out on the first leading term
        try:
            num = exact_div(num, f)
            continue
        except ExactDivisionError:
            pass
        g = poly_gcd(num, f)
        if g.is_constant():
            den = den * f
        else:
            num = exact_div(num, g)
            den = den * exact_div(f, g)
    return RationalFunction._coprime(num, den)


class VectorField:
    __slots__ = ("ctx", "coeffs", "_cleared")

    def __init__(self, ctx: VarContext, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != ctx.nvars:
            raise ValueError(
                f"expected {ctx.nvars} coefficients, got {len(coeffs)}"
            )
        for c in coeffs:
            ctx.require_same(c.ctx)
        self.ctx = ctx
        self.coeffs = coeffs
        self._cleared = None

    @classmethod
    def zero(cls, ctx):
        z = RationalFunction.zero(ctx)
        return cls(ctx, [z] * ctx.nvars)

    @classmethod
    def from_polys(cls, ctx, polys):
        return cls(ctx, [RationalFunction.from_poly(p) for p in polys])

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def cleared(self):
        """Denominator-free view: (d, nums) with d the least common
        denominator and nums[k] = coeffs[k] * d, all polynomials."""
        if self._cleared is not None:
            return self._cleared
        ctx = self.ctx
        common = Polynomial.one(ctx)
        for c in self.coeffs:
            if not c.den.is_one():
                g = poly_gcd(common, c.den)
                if g.is_constant():
                    common = common * c.den
                else:
                    common = common * exact_div(c.den, g)
        nums = [
            Polynomial.zero(ctx)
            if c.is_zero()
            else c.num * exact_div(common, c.den)
            for c in self.coeffs
        ]
        self._cleared = (common, nums)
        return self._cleared

    def apply(self, f):
        """Directional derivative sum_k c_k * df/dx_k of a scalar.

        Computed over a common denominator so the only rational reduction
        is one factor-aware pass at the end."""
        if isinstance(f, Polynomial):
            f = RationalFunction.from_poly(f)
        self.ctx.require_same(f.ctx)
        p, nums = self.cleared()
        a, b = f.num, f.den
        db = None if b.is_one() else b
        total = Polynomial.zero(self.ctx)
        for k, name in enumerate(self.ctx.variables):
            if nums[k].is_zero():
                continue
            da = a.derivative(name)
            if db is None:
                term = da
            else:
                term = da * b - a * b.derivative(name)
            if not term.is_zero():
                total = total + nums[k] * term
        if db is None:
            return reduce_by_factors(total, (p,))
        return reduce_by_factors(total, (p, b, b))

    def bracket(self, other: "VectorField") -> "VectorField":
        """Lie bracket [self, other]: component j is self(other_j) - other(self_j).

        With self = P/p and other = Q/q (P, Q polynomial vectors), component
        j over the common denominator p^2 q^2 is

            p * sum_k P_k (dQ_j q - Q_j dq)  -  q * sum_k Q_k (dP_j p - P_j dp)

        which keeps the whole computation polynomial; zero components are
        detected without any gcd work."""
        self.ctx.require_same(other.ctx)
        ctx = self.ctx
        names = ctx.variables
        p, P = self.cleared()
        q, Q = other.cleared()
        dp = [p.derivative(name) for name in names]
        dq = [q.derivative(name) for name in names]
        coeffs = []
        for j in range(len(names)):
            qj, pj = Q[j], P[j]
            dqj = [qj.derivative(name) for name in names]
            dpj = [pj.derivative(name) for name in names]
            first = Polynomial.zero(ctx)
            second = Polynomial.zero(ctx)
            for k in range(len(names)):
                if not P[k].is_zero():
                    t = dqj[k] * q - qj * dq[k]
                    if not t.is_zero():
                        first = first + P[k] * t
                if not Q[k].is_zero():
                    t = dpj[k] * p - pj * dp[k]
                    if not t.is_zero():
                        second = second + Q[k] * t
            num = first * p - second * q
            coeffs.append(reduce_by_factors(num, (p, p, q, q)))
        return VectorField(ctx, coeffs)

    def scaled(self, factor: RationalFunction) -> "VectorField":
        return VectorField(self.ctx, [factor * c for c in self.coeffs])

    def evaluate(self, point):
        """Coefficient vector at a point; raises PoleError on a pole."""
        return [c.evaluate(point) for c in self.coeffs]

    def describe(self):
        """Debug rendering like "(y)*d/dx + (-x)*d/dy"."""
        parts = [
            f"({c})*d/d{name}"
            for name, c in zip(self.ctx.variables, self.coeffs)
            if not c.is_zero()
        ]
        return " + ".join(parts) if parts else "0"

    def __eq__(self, other):
        return (
            isinstance(other, VectorField)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self):
        return f"VectorField({self})"


class FieldSystem:
    """Ordered family of vector fields over one context (matrix row order)."""

    __slots__ = ("ctx", "members")

    def __init__(self, ctx: VarContext, members):
        members = tuple(members)
        for f in members:
            ctx.require_same(f.ctx)
        self.ctx = ctx
        self.members = members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def coefficient_matrix(self):
        return [list(f.coeffs) for f in self.members]

    def generic_rank(self) -> int:
        """Rank of the coefficient matrix over the rational function field."""
        return matrix_rank_rf(self.coefficient_matrix())

    def rank_at_point(self, point) -> int:
        """Rank of the coefficient matrix evaluated at a point (no poles)."""
        rows = [f.evaluate(point) for f in self.members]
        return matrix_rank_fractions(rows)

    def denominators(self):
        """Distinct coefficient denominators, for pole avoidance."""
        out = []
        for f in self.members:
            for c in f.coeffs:
                if not c.den.is_one() and all(c.den != d for d in out):
                    out.append(c.den)
        return out

    def __repr__(self):
        return f"FieldSystem({len(self.members)} fields over {self.ctx!r})"


def matrix_rank_rf(matrix) -> int:
    """Exact rank of a matrix of rational functions by forward elimination."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        best = None
        for r in range(rank, len(rows)):
            entry = rows[r][col]
            if entry.is_zero():
                continue
            key = entry.complexity()
            if best is None or key < best[0]:
                best = (key, r)
        if best is None:
            continue
        _, pr = best
        rows[rank], rows[pr] = rows[pr], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            entry = rows[r][col]
            if entry.is_zero():
                continue
            factor = entry / pivot
            row = rows[r]
            row[col] = RationalFunction.zero(pivot.ctx)
            for c in range(col + 1, ncols):
                if not rows[rank][c].is_zero():
                    row[c] = row[c] - factor * rows[rank][c]
        rank += 1
        if rank == len(rows):
            break
    return rank


def matrix_rank_fractions(rows) -> int:
    """Rank of a matrix of Fractions by exact Gaussian elimination."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pr = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                factor = rows[r][col] / pivot
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


# ----------------------------------------------------------------------
# deterministic sample points (reproducible rank sanity checks)

_LCG_MULT = 1103515245
_LCG_ADD = 12345
_LCG_MOD = 2**31


def sample_points(ctx: VarContext, avoid=(), count=20, seed=20140625):
    """Deterministic small-integer points where none of the `avoid`
    polynomials (or rational-function denominators) vanish."""
    avoid_polys = []
    for item in avoid:
        if isinstance(item, RationalFunction):
            if not item.den.is_one():
                avoid_polys.append(item.den)
        else:
            avoid_polys.append(item)
    state = seed % _LCG_MOD
    points = []
    attempts = 0
    while len(points) < count:
        attempts += 1
        if attempts > 10000 * count:
            raise RuntimeError("could not find enough pole-free sample points")
        point = {}
        for name in ctx.names:
            state = (_LCG_MULT * state + _LCG_ADD) % _LCG_MOD
            v = (state >> 16) % 18 - 9  # in [-9, 8] \ remap 0
            if v >= 0:
                v += 1
            point[name] = Fraction(v)
        if any(p.evaluate(point) == 0 for p in avoid_polys):
            continue
        points.append(point)
    return points
