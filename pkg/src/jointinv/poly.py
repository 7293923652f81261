"""Sparse multivariate polynomials over the integers.

A monomial is a dense exponent tuple, one slot per context name (variables
first, then parameters).  Terms are kept in a dict keyed by monomial; no zero
coefficient is ever stored, so equality of term dicts is equality of values.
The term order everywhere is graded lexicographic in the context's name order.

The gcd is the classical content/primitive-part recursion over Z: a
subresultant pseudo-remainder sequence handles the univariate base case, a
content-stripped sequence handles polynomial coefficients, contents are
folded from the cheaper operand with early exit, and a sound evaluate-mod-p
certificate skips the remainder sequence outright in the (common) coprime
case.  Everything is exact and deterministic.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .context import VarContext
from .errors import ExactDivisionError


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_degree(m):
    return sum(m)


def mono_divides(a, b):
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_quot(a, b):
    return tuple(x - y for x, y in zip(a, b))


def grlex_key(m):
    return (sum(m), m)


class Polynomial:
    """Canonical sparse polynomial with integer coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: VarContext, terms=None):
        self.ctx = ctx
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, ctx):
        return cls(ctx)

    @classmethod
    def constant(cls, ctx, value):
        value = int(value)
        if value == 0:
            return cls(ctx)
        return cls(ctx, {(0,) * len(ctx.names): value})

    @classmethod
    def one(cls, ctx):
        return cls.constant(ctx, 1)

    @classmethod
    def variable(cls, ctx, name):
        i = ctx.index(name)
        expo = [0] * len(ctx.names)
        expo[i] = 1
        return cls(ctx, {tuple(expo): 1})

    @classmethod
    def from_monomial(cls, ctx, mono, coeff=1):
        return cls(ctx, {tuple(mono): int(coeff)})

    # ------------------------------------------------------------------
    # predicates and accessors

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(mono_degree(m) == 0 for m in self.terms)

    def is_one(self):
        return self.terms == {(0,) * len(self.ctx.names): 1}

    def constant_value(self):
        if self.is_zero():
            return 0
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((mono_degree(m) for m in self.terms), default=-1)

    def degree_in(self, index):
        return max((m[index] for m in self.terms), default=-1)

    def term_count(self):
        return len(self.terms)

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def uses_index(self, index):
        return any(m[index] for m in self.terms)

    def content(self):
        """Nonnegative gcd of all integer coefficients (0 for the zero poly)."""
        return math.gcd(*self.terms.values()) if self.terms else 0

    # ------------------------------------------------------------------
    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self.ctx.require_same(other.ctx)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.ctx, other)
        return NotImplemented

    def __neg__(self):
        return Polynomial(self.ctx, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return Polynomial(self.ctx, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial(self.ctx)
            return Polynomial(self.ctx, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return Polynomial(self.ctx)
        shorter, longer = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        out = {}
        for m1, c1 in shorter.terms.items():
            for m2, c2 in longer.terms.items():
                m = mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        return Polynomial(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, mono, coeff=1):
        """Multiply by a single term coeff * x^mono (fast path)."""
        if coeff == 0:
            return Polynomial(self.ctx)
        return Polynomial(
            self.ctx, {mono_mul(m, mono): c * coeff for m, c in self.terms.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    __hash__ = None

    # ------------------------------------------------------------------
    # calculus and evaluation

    def derivative(self, name):
        ctx = self.ctx
        if not ctx.is_variable(name):
            raise ValueError(f"cannot differentiate with respect to {name!r}")
        i = ctx.index(name)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if not e:
                continue
            dm = m[:i] + (e - 1,) + m[i + 1 :]
            out[dm] = out.get(dm, 0) + c * e
        return Polynomial(ctx, out)

    def evaluate(self, point):
        """Exact value at a point assigning every variable and parameter."""
        try:
            vals = [Fraction(point[name]) for name in self.ctx.names]
        except KeyError as exc:
            raise ValueError(f"missing assignment for {exc.args[0]!r}") from None
        total = Fraction(0)
        for m, c in self.terms.items():
            t = Fraction(c)
            for v, e in zip(vals, m):
                if e:
                    t *= v**e
            total += t
        return total

    def flip_signs(self, indices):
        """Substitute x_i -> -x_i for every index in `indices`."""
        idx = set(indices)
        out = {}
        for m, c in self.terms.items():
            swaps = sum(m[i] for i in idx)
            out[m] = -c if swaps % 2 else c
        return Polynomial(self.ctx, out)

    # ------------------------------------------------------------------
    # printing

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[m]
            body = self._term_str(m, abs(c))
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def _term_str(self, mono, coeff):
        names = self.ctx.names
        parts = []
        for name, e in zip(names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        if not parts:
            return str(coeff)
        if coeff != 1:
            parts.insert(0, str(coeff))
        return "*".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


# ----------------------------------------------------------------------
# exact division and gcd


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact quotient a / b; raises ExactDivisionError if b does not divide a."""
    a.ctx.require_same(b.ctx)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return a
    if b.is_one():
        return a
    if b.is_constant():
        k = b.constant_value()
        out = {}
        for m, c in a.terms.items():
            q, r = divmod(c, k)
            if r:
                raise ExactDivisionError("inexact constant division")
            out[m] = q
        return Polynomial(a.ctx, out)
    lead_b = b.leading_monomial()
    lc_b = b.terms[lead_b]
    rem = dict(a.terms)
    out = {}
    while rem:
        m = max(rem, key=grlex_key)
        c = rem[m]
        if not mono_divides(lead_b, m):
            raise ExactDivisionError("leading monomial does not divide")
        q, r = divmod(c, lc_b)
        if r:
            raise ExactDivisionError("leading coefficient does not divide")
        qm = mono_quot(m, lead_b)
        out[qm] = q
        for mb, cb in b.terms.items():
            mm = mono_mul(qm, mb)
            v = rem.get(mm, 0) - q * cb
            if v:
                rem[mm] = v
            elif mm in rem:
                del rem[mm]
    return Polynomial(a.ctx, out)


def _positive_primitive(p: Polynomial) -> Polynomial:
    """Primitive part with positive leading coefficient (0 stays 0)."""
    if p.is_zero():
        return p
    c = p.content()
    if p.leading_coeff() < 0:
        c = -c
    if c == 1:
        return p
    return Polynomial(p.ctx, {m: v // c for m, v in p.terms.items()})


def _min_exponents(p: Polynomial):
    it = iter(p.terms)
    lo = list(next(it))
    for m in it:
        for i, e in enumerate(m):
            if e < lo[i]:
                lo[i] = e
    return lo


def _coeffs_by_degree(p: Polynomial, index):
    """View p as univariate in `index`: degree -> coefficient polynomial."""
    buckets = {}
    for m, c in p.terms.items():
        d = m[index]
        stripped = m[:index] + (0,) + m[index + 1 :]
        buckets.setdefault(d, {})[stripped] = c
    return {d: Polynomial(p.ctx, t) for d, t in buckets.items()}


def _content_pp(p: Polynomial, index):
    """Content and primitive part of p with respect to one variable.
    Folding starts from the smallest coefficient so the running gcd
    collapses to a constant as early as possible."""
    coeffs = sorted(
        _coeffs_by_degree(p, index).values(),
        key=lambda c: (len(c.terms), c.degree()),
    )
    content = coeffs[0]
    for c in coeffs[1:]:
        if content.is_one():
            return content, p
        if content.is_constant():
            # only integer content left to collect
            value = math.gcd(content.content(), *(x.content() for x in coeffs))
            content = Polynomial.constant(p.ctx, value)
            break
        content = poly_gcd(content, c)
    if content.is_one():
        return content, p
    return content, exact_div(p, content)


def _prem(a: Polynomial, b: Polynomial, index) -> Polynomial:
    """Pseudo-remainder of a by b, both viewed as univariate in `index`."""
    db = b.degree_in(index)
    ctx = a.ctx
    lead_b = _coeffs_by_degree(b, index)[db]
    r = a
    e = a.degree_in(index) - db + 1
    zero_mono = [0] * len(ctx.names)
    while not r.is_zero():
        dr = r.degree_in(index)
        if dr < db:
            break
        lead_r = _coeffs_by_degree(r, index)[dr]
        shift_mono = list(zero_mono)
        shift_mono[index] = dr - db
        r = lead_b * r - (lead_r * b).shift(tuple(shift_mono))
        e -= 1
    if e > 0:
        r = lead_b**e * r
    return r


def _prem_relaxed(a: Polynomial, b: Polynomial, index) -> Polynomial:
    """Remainder of a by b in `index` up to a constant factor: the integer
    content is divided out after every reduction step and the final
    lead^e scaling is skipped.  Only valid where the caller normalizes by
    full content anyway (the primitive remainder sequence)."""
    db = b.degree_in(index)
    lead_b = _coeffs_by_degree(b, index)[db]
    r = a
    zero_mono = [0] * len(a.ctx.names)
    while not r.is_zero():
        dr = r.degree_in(index)
        if dr < db:
            break
        lead_r = _coeffs_by_degree(r, index)[dr]
        shift_mono = list(zero_mono)
        shift_mono[index] = dr - db
        r = lead_b * r - (lead_r * b).shift(tuple(shift_mono))
        c = r.content()
        if c > 1:
            r = Polynomial(r.ctx, {m: v // c for m, v in r.terms.items()})
    return r


def _prs_gcd_subresultant(a: Polynomial, b: Polynomial, index) -> Polynomial:
    """Subresultant pseudo-remainder sequence for univariate input (integer
    coefficients); a, b primitive in `index`, deg(a) >= deg(b) >= 1.
    Returns the last nonzero remainder, or 1 when coprime."""
    ctx = a.ctx
    prev, cur = a, b
    d = prev.degree_in(index) - cur.degree_in(index)
    psi = Polynomial.constant(ctx, -1)
    beta = Polynomial.constant(ctx, (-1) ** (d + 1))
    while True:
        if cur.degree_in(index) == 0:
            return Polynomial.one(ctx)
        nxt = _prem(prev, cur, index)
        if nxt.is_zero():
            return cur
        nxt = exact_div(nxt, beta)
        lc_cur = _coeffs_by_degree(cur, index)[cur.degree_in(index)]
        if d > 0:
            psi = exact_div((-lc_cur) ** d, psi ** (d - 1))
        d = cur.degree_in(index) - nxt.degree_in(index)
        beta = (-lc_cur) * psi**d
        prev, cur = cur, nxt


def _prs_gcd_primitive(a: Polynomial, b: Polynomial, index) -> Polynomial:
    """Primitive pseudo-remainder sequence for multivariate input: stripping
    the full content after every step curbs coefficient swell far better
    than the subresultant correction when coefficients are polynomials."""
    prev, cur = a, b
    while True:
        if cur.degree_in(index) == 0:
            return Polynomial.one(a.ctx)
        r = _prem_relaxed(prev, cur, index)
        if r.is_zero():
            return cur
        _, r = _content_pp(r, index)
        prev, cur = cur, r


# fixed specialization data for the coprimality certificate: evaluation
# rows for the substituted variables and a large prime for the univariate
# Euclid on the images.  All word-sized arithmetic.
_CERT_VALUES = (
    (2, 3, 5, 7, 11, 13, 17, 19),
    (3, 7, 2, 13, 5, 19, 11, 17),
    (5, 2, 9, 4, 7, 3, 8, 6),
)
_CERT_PRIMES = (2147483647, 2147483629, 2147483563)


def _specialized_image(p: Polynomial, index, values, prime) -> dict:
    """Image of p in GF(prime)[x_index] after substituting fixed integers
    for every other name; {degree: residue}, sparse."""
    out: dict = {}
    for m, c in p.terms.items():
        v = c
        for i, e in enumerate(m):
            if i != index and e:
                v *= values[i] ** e
        d = m[index]
        s = (out.get(d, 0) + v) % prime
        if s:
            out[d] = s
        elif d in out:
            del out[d]
    return out


def _gf_images_coprime(da: dict, db: dict, prime) -> bool:
    """Euclidean gcd of two univariate images over GF(prime); True when the
    gcd is constant."""

    def to_list(d):
        out = [0] * (max(d) + 1)
        for k, v in d.items():
            out[k] = v
        return out

    fa, fb = to_list(da), to_list(db)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while True:
        if len(fb) == 1:
            return True
        inv = pow(fb[-1], prime - 2, prime)
        r = list(fa)
        while len(r) >= len(fb):
            lr = r[-1]
            if lr:
                scale = lr * inv % prime
                shift = len(r) - len(fb)
                for i, y in enumerate(fb):
                    r[shift + i] = (r[shift + i] - scale * y) % prime
            r.pop()
        while r and not r[-1]:
            r.pop()
        if not r:
            return False  # nontrivial common factor in the image
        fa, fb = fb, r


def _certified_coprime(a: Polynomial, b: Polynomial, index) -> bool:
    """Sound but incomplete coprimality test for polynomials primitive in
    `index`.  A common divisor of positive degree in x_index would survive
    specializing the other names and reducing mod a prime, as long as the
    leading coefficients do not vanish in the image; so degree-preserving
    coprime images certify gcd = 1.  Inconclusive images fall back to the
    remainder sequence."""
    width = len(a.ctx.names)
    others = [
        i
        for i in range(width)
        if i != index and (a.uses_index(i) or b.uses_index(i))
    ]
    da, db = a.degree_in(index), b.degree_in(index)
    for row, prime in zip(_CERT_VALUES, _CERT_PRIMES):
        values = [0] * width
        for pos, i in enumerate(others):
            values[i] = row[pos % len(row)]
        ia = _specialized_image(a, index, values, prime)
        ib = _specialized_image(b, index, values, prime)
        if ia.get(da, 0) == 0 or ib.get(db, 0) == 0:
            continue  # a leading coefficient vanished; inconclusive
        return _gf_images_coprime(ia, ib, prime)
    return False


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor, normalized: a result of positive degree is
    primitive with positive leading coefficient (content dropped, so
    gcd(2x+2y, 4x+4y) = x+y); a constant result is the plain integer gcd of
    the two contents; gcd(0, 0) = 0."""
    a.ctx.require_same(b.ctx)
    ctx = a.ctx
    if a.is_zero():
        return _positive_primitive(b) if not b.is_constant() else Polynomial.constant(ctx, b.content())
    if b.is_zero():
        return _positive_primitive(a) if not a.is_constant() else Polynomial.constant(ctx, a.content())
    if a.is_constant() or b.is_constant():
        return Polynomial.constant(ctx, math.gcd(a.content(), b.content()))
    if len(a.terms) == 1 or len(b.terms) == 1:
        # any common divisor of a monomial is a monomial
        mono = tuple(
            min(x, y) for x, y in zip(_min_exponents(a), _min_exponents(b))
        )
        if any(mono):
            return Polynomial.from_monomial(ctx, mono, 1)
        return Polynomial.constant(ctx, math.gcd(a.content(), b.content()))
    width = len(ctx.names)
    used_a = {i for i in range(width) if a.uses_index(i)}
    used_b = {i for i in range(width) if b.uses_index(i)}
    common = sorted(used_a & used_b)
    if not common:
        # disjoint variable sets: only integer content can be shared
        return Polynomial.constant(ctx, math.gcd(a.content(), b.content()))
    # work from the cheap side: the gcd divides it whole
    small, big = (a, b) if (len(a.terms), a.degree()) <= (len(b.terms), b.degree()) else (b, a)
    if used_a == {common[0]} == used_b and len(common) == 1:
        # univariate: integer contents, subresultant remainder sequence
        index = common[0]
        c_small, pp_small = _content_pp(small, index)
        c_big, pp_big = _content_pp(big, index)
        cont = math.gcd(c_small.content(), c_big.content())
        if _certified_coprime(pp_big, pp_small, index):
            g = Polynomial.one(ctx)
        else:
            if pp_big.degree_in(index) < pp_small.degree_in(index):
                pp_big, pp_small = pp_small, pp_big
            g = _prs_gcd_subresultant(pp_big, pp_small, index)
            g = _positive_primitive(g)
        result = Polynomial.constant(ctx, cont) * g
        if result.is_constant():
            return Polynomial.constant(ctx, math.gcd(a.content(), b.content()))
        return _positive_primitive(result)
    # the main variable with the cheapest remainder sequence
    index = min(
        common,
        key=lambda i: (
            min(a.degree_in(i), b.degree_in(i)),
            max(a.degree_in(i), b.degree_in(i)),
            -i,
        ),
    )
    cont_small, pp_small = _content_pp(small, index)
    # gcd(cont_small, content of big) without materializing the latter:
    # fold against big's coefficients, cheapest first, stopping early
    cont = cont_small
    if not cont.is_constant():
        for c in sorted(
            _coeffs_by_degree(big, index).values(),
            key=lambda c: (len(c.terms), c.degree()),
        ):
            cont = poly_gcd(cont, c)
            if cont.is_constant():
                break
    if cont.is_constant():
        cont = Polynomial.constant(
            ctx, math.gcd(cont.content(), big.content())
        )
    # primitive-part gcd: the running remainder argument stays primitive in
    # the main variable, so the big side may keep its content
    d_small = pp_small.degree_in(index)
    d_big = big.degree_in(index)
    if d_small == 0 or _certified_coprime(big, pp_small, index):
        g = Polynomial.one(ctx)
    elif d_big >= d_small:
        g = _prs_gcd_primitive(big, pp_small, index)
        _, g = _content_pp(g, index)
    else:
        _, pp_big = _content_pp(big, index)
        if pp_big.degree_in(index) >= d_small:
            g = _prs_gcd_primitive(pp_big, pp_small, index)
        else:
            g = _prs_gcd_primitive(pp_small, pp_big, index)
        _, g = _content_pp(g, index)
    result = cont * g
    if result.is_constant():
        return Polynomial.constant(ctx, math.gcd(a.content(), b.content()))
    return _positive_primitive(result)


def monomials_up_to_degree(ctx: VarContext, max_degree, min_degree=1):
    """All variable-only monomials with min_degree <= total degree <=
    max_degree, sorted graded-lex descending."""
    width = len(ctx.names)
    out = []
    for d in range(min_degree, max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(ctx.nvars), d):
            expo = [0] * width
            for i in combo:
                expo[i] += 1
            out.append(tuple(expo))
    out.sort(key=grlex_key, reverse=True)
    return out
