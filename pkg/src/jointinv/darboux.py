"""Exact verification of product/exponential first integrals.

The verifiable class is F = prod_i base_i^e_i * exp(sum_j c_j * atom_j) with
rational-function bases, exponents and atom coefficients free of the
differentiated variables, and atoms one of g, log(g), arctan(g) for rational
g.  Along any field X the logarithmic derivative X(F)/F is then itself a
rational function:

    X(F)/F = sum_i e_i * X(base_i)/base_i + sum_j c_j * D_X(atom_j)

with D_X(g) = X(g), D_X(log g) = X(g)/g, D_X(arctan g) = X(g)/(1 + g^2),
so invariance is an exact zero test, no floating point anywhere.
"""

from __future__ import annotations

from .fields import FieldSystem, VectorField
from .ratfunc import RationalFunction

ATOM_KINDS = ("rational", "log", "arctan")


class DarbouxExpr:
    """factors: (base, exponent) pairs; exp_atoms: (coeff, kind, arg)."""

    __slots__ = ("ctx", "factors", "exp_atoms")

    def __init__(self, ctx, factors=(), exp_atoms=()):
        factors = tuple(factors)
        exp_atoms = tuple(exp_atoms)
        for base, exponent in factors:
            ctx.require_same(base.ctx)
            if base.is_zero():
                raise ValueError("zero base in a power factor")
            if exponent.uses_variables():
                raise ValueError(
                    "factor exponents may involve parameters only, "
                    f"got {exponent}"
                )
        for coeff, kind, arg in exp_atoms:
            ctx.require_same(coeff.ctx)
            ctx.require_same(arg.ctx)
            if kind not in ATOM_KINDS:
                raise ValueError(f"unknown atom kind {kind!r}")
            if coeff.uses_variables():
                raise ValueError(
                    "exponential coefficients may involve parameters only, "
                    f"got {coeff}"
                )
            if kind == "log" and arg.is_zero():
                raise ValueError("log atom with zero argument")
        self.ctx = ctx
        self.factors = factors
        self.exp_atoms = exp_atoms

    def log_derivative(self, field: VectorField) -> RationalFunction:
        self.ctx.require_same(field.ctx)
        total = RationalFunction.zero(self.ctx)
        for base, exponent in self.factors:
            df = field.apply(base)
            if not df.is_zero():
                total = total + exponent * (df / base)
        for coeff, kind, arg in self.exp_atoms:
            dg = field.apply(arg)
            if dg.is_zero():
                continue
            if kind == "rational":
                term = dg
            elif kind == "log":
                term = dg / arg
            else:  # arctan
                term = dg / (RationalFunction.one(self.ctx) + arg * arg)
            total = total + coeff * term
        return total

    def __repr__(self):
        return (
            f"DarbouxExpr(factors={len(self.factors)}, "
            f"exp_atoms={len(self.exp_atoms)})"
        )


def verify_darboux(system: FieldSystem, expr: DarbouxExpr) -> bool:
    """True iff the expression is a joint invariant of every field in the
    system: all logarithmic derivatives vanish identically (in the
    parameters too)."""
    return all(expr.log_derivative(field).is_zero() for field in system.members)
