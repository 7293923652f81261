"""Canonical quotients of integer polynomials: the scalar field of the system.

Every value is fully reduced on construction: numerator and denominator share
no factor (neither polynomial nor integer content), and the denominator's
leading coefficient is positive.  Equality of canonical forms is therefore
plain syntactic equality, and a value is zero exactly when its numerator has
no terms.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .context import VarContext
from .errors import PoleError
from .poly import Polynomial, exact_div, poly_gcd


def _strip_content(num, den):
    """Divide out the shared integer content and force a positive-leading
    denominator.  Assumes the primitive parts are already coprime."""
    c = math.gcd(num.content(), den.content())
    if den.leading_coeff() < 0:
        c = -c
    if c != 1:
        num = Polynomial(num.ctx, {m: v // c for m, v in num.terms.items()})
        den = Polynomial(den.ctx, {m: v // c for m, v in den.terms.items()})
    return num, den


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.one(num.ctx)
        num.ctx.require_same(den.ctx)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num = Polynomial.zero(num.ctx)
            den = Polynomial.one(num.ctx)
        else:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = exact_div(num, g)
                den = exact_div(den, g)
            num, den = _strip_content(num, den)
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num, den):
        """Wrap an already-canonical pair without re-reducing."""
        rf = object.__new__(cls)
        rf.num = num
        rf.den = den
        return rf

    @classmethod
    def _coprime(cls, num, den):
        """Wrap a pair whose primitive parts are known coprime; only the
        integer content and the denominator sign still need normalizing."""
        if num.is_zero():
            return cls.zero(num.ctx)
        num, den = _strip_content(num, den)
        return cls._reduced(num, den)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def from_poly(cls, p: Polynomial):
        return cls._reduced(p, Polynomial.one(p.ctx))

    @classmethod
    def from_int(cls, ctx: VarContext, value):
        return cls._reduced(Polynomial.constant(ctx, value), Polynomial.one(ctx))

    @classmethod
    def from_fraction(cls, ctx: VarContext, value: Fraction):
        value = Fraction(value)
        return cls._reduced(
            Polynomial.constant(ctx, value.numerator),
            Polynomial.constant(ctx, value.denominator),
        )

    @classmethod
    def zero(cls, ctx):
        return cls.from_int(ctx, 0)

    @classmethod
    def one(cls, ctx):
        return cls.from_int(ctx, 1)

    @classmethod
    def variable(cls, ctx, name):
        return cls.from_poly(Polynomial.variable(ctx, name))

    # ------------------------------------------------------------------
    # predicates

    @property
    def ctx(self):
        return self.num.ctx

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self):
        return self.den.is_one()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return Fraction(self.num.constant_value(), self.den.constant_value())

    def uses_variables(self):
        """True if any differentiated variable occurs in the value."""
        n = self.ctx.nvars
        return any(
            any(m[i] for i in range(n))
            for p in (self.num, self.den)
            for m in p.terms
        )

    def complexity(self):
        """Cheapness key used for pivot selection: smaller is simpler."""
        return (
            self.num.term_count()
            + self.den.term_count()
            + max(self.num.degree(), 0)
            + max(self.den.degree(), 0)
        )

    # ------------------------------------------------------------------
    # arithmetic

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            self.ctx.require_same(other.ctx)
            return other
        if isinstance(other, Polynomial):
            self.ctx.require_same(other.ctx)
            return RationalFunction.from_poly(other)
        if isinstance(other, int):
            return RationalFunction.from_int(self.ctx, other)
        if isinstance(other, Fraction):
            return RationalFunction.from_fraction(self.ctx, other)
        return NotImplemented

    def __neg__(self):
        return RationalFunction._reduced(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.num, self.den
        c, d = other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        if b == d:
            return RationalFunction(a + c, b)
        g = poly_gcd(b, d)
        if g.is_constant():
            # coprime denominators: no polynomial factor can cancel
            return RationalFunction._coprime(a * d + c * b, b * d)
        b1 = exact_div(b, g)
        d1 = exact_div(d, g)
        num = a * d1 + c * b1
        if num.is_zero():
            return RationalFunction.zero(self.ctx)
        h = poly_gcd(num, g)
        den = b * d1
        if not h.is_constant():
            num = exact_div(num, h)
            den = exact_div(den, h)
        return RationalFunction._coprime(num, den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.num, self.den
        c, d = other.num, other.den
        if a.is_zero() or c.is_zero():
            return RationalFunction.zero(self.ctx)
        g1 = poly_gcd(a, d)
        if not g1.is_constant():
            a = exact_div(a, g1)
            d = exact_div(d, g1)
        g2 = poly_gcd(c, b)
        if not g2.is_constant():
            c = exact_div(c, g2)
            b = exact_div(b, g2)
        return RationalFunction._coprime(a * c, b * d)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        num, den = self.den, self.num
        if den.leading_coeff() < 0:
            num, den = -num, -den
        return RationalFunction._reduced(num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("exponent must be an integer")
        if n < 0:
            return self.reciprocal() ** (-n)
        if n == 0:
            return RationalFunction.one(self.ctx)
        return RationalFunction._reduced(self.num**n, self.den**n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = self._coerce(other)
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    __hash__ = None

    # ------------------------------------------------------------------
    # calculus and evaluation

    def derivative(self, name):
        """Partial derivative with respect to a variable (never a parameter)."""
        if not self.ctx.is_variable(name):
            raise ValueError(f"cannot differentiate with respect to {name!r}")
        dn = self.num.derivative(name)
        if self.den.is_one():
            return RationalFunction._reduced(dn, self.den)
        dd = self.den.derivative(name)
        if dd.is_zero():
            return RationalFunction(dn, self.den)
        # deflate by gcd(den, den') so repeated factors are not squared
        g = poly_gcd(self.den, dd)
        if g.is_constant():
            return RationalFunction(
                dn * self.den - self.num * dd, self.den * self.den
            )
        dhat = exact_div(self.den, g)
        w = exact_div(dd, g)
        return RationalFunction(dn * dhat - self.num * w, self.den * dhat)

    def evaluate(self, point) -> Fraction:
        dval = self.den.evaluate(point)
        if dval == 0:
            raise PoleError(f"denominator {self.den} vanishes at the point")
        return self.num.evaluate(point) / dval

    # ------------------------------------------------------------------
    # printing

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        num_s = str(self.num)
        if self.num.term_count() > 1:
            num_s = f"({num_s})"
        den_s = str(self.den)
        if not self._bare_denominator():
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    def _bare_denominator(self):
        """True when the denominator may be printed without parentheses:
        a positive integer or a single variable power with coefficient 1."""
        if self.den.term_count() != 1:
            return False
        mono, coeff = next(iter(self.den.terms.items()))
        if coeff != 1:
            return sum(1 for e in mono if e) == 0  # bare positive integer
        return sum(1 for e in mono if e) <= 1

    def __repr__(self):
        return f"RationalFunction({self})"
