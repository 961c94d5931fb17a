"""Exact integer polynomials and reduced rational functions in one variable ``q``.

Both types are immutable and hashable.  ``RatFunc`` keeps a canonical form:
numerator and denominator are coprime over Q, the pair has integer content 1,
and the denominator has a positive leading coefficient.  Two equal rational
functions therefore have identical representations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Integral, Rational
from typing import Iterable, Sequence, Union


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


class NotPolynomialError(ValueError):
    """Raised when a rational function does not reduce to an integer polynomial."""


def _trim(coeffs: Sequence[int]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _content(coeffs: Sequence[int]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


class IntPoly:
    """Polynomial in ``q`` with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``.  The zero polynomial has
    an empty coefficient tuple and degree ``-inf``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _trim(int(c) for c in coeffs)
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "IntPoly":
        # coeffs already trimmed
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls._raw((c,) if c else ())

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> "IntPoly":
        if c == 0:
            return ZERO_POLY
        return cls._raw((0,) * exp + (c,))

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def content(self) -> int:
        return _content(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, Integral):
            return self.coeffs == ((int(other),) if other else ())
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(("IntPoly", self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __neg__(self):
        return IntPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, Integral):
            other = IntPoly.const(int(other))
        elif not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Integral):
            other = IntPoly.const(int(other))
        elif not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Integral):
            c = int(other)
            if c == 0:
                return ZERO_POLY
            return IntPoly._raw(tuple(c * x for x in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        if len(a) == 1:
            return other * a[0]
        if len(b) == 1:
            return self * b[0]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE_POLY, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation at an integer, Fraction or anything supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_power(self, n: int) -> "IntPoly":
        """Return ``p(q**n)``."""
        if n == 1 or len(self.coeffs) <= 1:
            return self
        out = [0] * ((len(self.coeffs) - 1) * n + 1)
        for i, c in enumerate(self.coeffs):
            out[i * n] = c
        return IntPoly._raw(tuple(out))

    def primitive(self) -> "IntPoly":
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        if c == 1:
            return self
        return IntPoly._raw(tuple(x // c for x in self.coeffs))

    def divmod_exact(self, other: "IntPoly") -> "IntPoly":
        """Exact quotient in Z[q]; raises ValueError if ``other`` does not divide."""
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        b = other.coeffs
        if len(b) == 1:
            d = b[0]
            if any(x % d for x in self.coeffs):
                raise ValueError("inexact division")
            return IntPoly._raw(tuple(x // d for x in self.coeffs))
        r = list(self.coeffs)
        db, lb = len(b) - 1, b[-1]
        if len(r) - 1 < db:
            if r:
                raise ValueError("inexact division")
            return ZERO_POLY
        quot = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c == 0:
                continue
            qc, rem = divmod(c, lb)
            if rem:
                raise ValueError("inexact division")
            quot[i - db] = qc
            for j in range(db + 1):
                r[i - db + j] -= qc * b[j]
        if any(r):
            raise ValueError("inexact division")
        return IntPoly._raw(_trim(quot))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)


ZERO_POLY = IntPoly._raw(())
ONE_POLY = IntPoly._raw((1,))


def format_poly(coeffs: Sequence, var: str = "q") -> str:
    """Render coefficients (constant term first) as e.g. ``q^2 + 3q + 1``."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _prem(a: tuple, b: tuple) -> tuple:
    """Pseudo-remainder of ``a`` by ``b`` (coefficient tuples, b nonzero)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def _pp(coeffs: tuple) -> tuple:
    c = _content(coeffs)
    if coeffs[-1] < 0:
        c = -c
    if c == 1:
        return coeffs
    return tuple(x // c for x in coeffs)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Q[q] (content 1, positive leading coefficient).

    gcd(0, 0) is 0.
    """
    x, y = a.coeffs, b.coeffs
    if not x:
        return IntPoly._raw(_pp(y)) if y else ZERO_POLY
    if not y:
        return IntPoly._raw(_pp(x))
    if len(x) == 1 or len(y) == 1:
        return ONE_POLY
    x, y = _pp(x), _pp(y)
    if len(x) < len(y):
        x, y = y, x
    while y:
        if len(y) == 1:
            return ONE_POLY
        r = _prem(x, y)
        x, y = y, (_pp(r) if r else ())
    return IntPoly._raw(x)


Coercible = Union["RatFunc", IntPoly, int, Fraction]


class RatFunc:
    """Reduced quotient of two integer polynomials in ``q``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = _as_poly_pair(num)
        den = _as_poly_pair(den)
        n = num[0] * den[1]
        d = num[1] * den[0]
        if d.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(n, d)
        if not g.is_one() and not g.is_zero():
            n = n.divmod_exact(g)
            d = d.divmod_exact(g)
        self._set(*_normalize(n, d))

    def _set(self, num: IntPoly, den: IntPoly):
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly) -> "RatFunc":
        r = object.__new__(cls)
        r._set(num, den)
        return r

    @classmethod
    def q(cls) -> "RatFunc":
        return cls._raw(IntPoly._raw((0, 1)), ONE_POLY)

    @classmethod
    def coerce(cls, x: Coercible) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Integral):
            return cls._raw(IntPoly.const(int(x)), ONE_POLY)
        if isinstance(x, IntPoly):
            return cls._raw(x, ONE_POLY)
        if isinstance(x, Rational):
            return cls._raw(IntPoly.const(x.numerator), IntPoly.const(x.denominator))
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(("RatFunc", self.num.coeffs, self.den.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_one() and d.is_one():
            return RatFunc._raw(a + c, ONE_POLY)
        if b == d:
            n = a + c
            return _reduced(n, b)
        g = poly_gcd(b, d)
        if g.is_one():
            return _from_coprime_parts(a * d + c * b, b * d)
        bg, dg = b.divmod_exact(g), d.divmod_exact(g)
        n = a * dg + c * bg
        # gcd(n, b*d/g) divides g when the operands are reduced
        g2 = poly_gcd(n, g)
        den = bg * d
        if not g2.is_one() and not n.is_zero():
            n = n.divmod_exact(g2)
            den = den.divmod_exact(g2)
        return _from_coprime_parts(n, den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Integral):
            return _from_coprime_parts(self.num * int(other), self.den)
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RAT_ZERO
        if b.is_one() and d.is_one():
            return RatFunc._raw(a * c, ONE_POLY)
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_one():
            a, d = a.divmod_exact(g1), d.divmod_exact(g1)
        if not g2.is_one():
            c, b = c.divmod_exact(g2), b.divmod_exact(g2)
        return _from_coprime_parts(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return _from_coprime_parts(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return _from_coprime_parts(self.num ** e, self.den ** e)

    def subs_power(self, n: int) -> "RatFunc":
        """Return the function of ``q**n``; coprimality is preserved."""
        if n == 1:
            return self
        return RatFunc._raw(self.num.compose_power(n), self.den.compose_power(n))

    def __call__(self, q0) -> Fraction:
        return self.evaluate(q0)

    def evaluate(self, q0) -> Fraction:
        """Exact value at a rational point; raises PoleError at a pole."""
        q0 = Fraction(q0)
        d = self.den(q0)
        if d == 0:
            raise PoleError(f"{self} has a pole at q={q0}")
        return Fraction(self.num(q0)) / d

    def as_poly(self) -> IntPoly:
        """The integer polynomial equal to this function, or NotPolynomialError."""
        if not self.den.is_one():
            raise NotPolynomialError(
                f"not an integer polynomial: denominator {self.den} in {self}"
            )
        return self.num

    def __repr__(self):
        return f"RatFunc({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        n = str(self.num)
        if len([c for c in self.num.coeffs if c]) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"


def _as_poly_pair(x) -> tuple:
    if isinstance(x, RatFunc):
        return x.num, x.den
    if isinstance(x, IntPoly):
        return x, ONE_POLY
    if isinstance(x, Integral):
        return IntPoly.const(int(x)), ONE_POLY
    if isinstance(x, Rational):
        return IntPoly.const(x.numerator), IntPoly.const(x.denominator)
    if isinstance(x, (list, tuple)):
        return IntPoly(x), ONE_POLY
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _normalize(n: IntPoly, d: IntPoly) -> tuple:
    if n.is_zero():
        return ZERO_POLY, ONE_POLY
    c = gcd(n.content(), d.content())
    if d.lc < 0:
        c = -c
    if c != 1:
        n = IntPoly._raw(tuple(x // c for x in n.coeffs))
        d = IntPoly._raw(tuple(x // c for x in d.coeffs))
    return n, d


def _from_coprime_parts(n: IntPoly, d: IntPoly) -> RatFunc:
    if d.is_zero():
        raise ZeroDivisionError("zero denominator")
    return RatFunc._raw(*_normalize(n, d))


def _reduced(n: IntPoly, d: IntPoly) -> RatFunc:
    if n.is_zero():
        return RAT_ZERO
    g = poly_gcd(n, d)
    if not g.is_one():
        n, d = n.divmod_exact(g), d.divmod_exact(g)
    return _from_coprime_parts(n, d)


RAT_ZERO = RatFunc._raw(ZERO_POLY, ONE_POLY)
RAT_ONE = RatFunc._raw(ONE_POLY, ONE_POLY)
Q = RatFunc.q()


def ratfunc_arith(a: Coercible, b: Coercible, op: str) -> RatFunc:
    """Dispatch helper: ``op`` is one of add, sub, mul, div."""
    a, b = RatFunc.coerce(a), RatFunc.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
