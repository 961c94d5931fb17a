"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are coefficient vectors over the power basis 1, z, ..., z^{phi(N)-1},
reduced modulo the N-th cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from ..coeffring import IntPoly


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Tuple[int, ...]:
    """Coefficients of Phi_n, constant term first."""
    p = IntPoly.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            p = p.divmod_exact(IntPoly(cyclotomic_poly(d)))
    return p.coeffs


@lru_cache(maxsize=None)
def _power_table(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Reduced coordinates of z^e for 0 <= e < n."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z and reduce with the monic Phi_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


class CycloElement:
    """An element of Q(zeta_N); immutable."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: Sequence):
        self.N = N
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def zero(cls, N: int) -> "CycloElement":
        return cls(N, [0] * (len(cyclotomic_poly(N)) - 1))

    @classmethod
    def rational(cls, N: int, r) -> "CycloElement":
        c = [Fraction(0)] * (len(cyclotomic_poly(N)) - 1)
        c[0] = Fraction(r)
        return cls(N, c)

    @classmethod
    def root(cls, N: int, e: int, mult=1) -> "CycloElement":
        """mult * zeta_N^e."""
        return cls(N, [mult * x for x in _power_table(N)[e % N]])

    @classmethod
    def from_exponents(cls, N: int, terms) -> "CycloElement":
        """Sum of ``c * zeta^e`` over ``(e, c)`` pairs."""
        table = _power_table(N)
        acc = [Fraction(0)] * (len(cyclotomic_poly(N)) - 1)
        for e, c in terms:
            for i, x in enumerate(table[e % N]):
                if x:
                    acc[i] += c * x
        return cls(N, acc)

    def _same(self, other):
        if self.N != other.N:
            raise ValueError("elements of different cyclotomic fields")

    def __add__(self, other):
        if not isinstance(other, CycloElement):
            other = CycloElement.rational(self.N, other)
        self._same(other)
        return CycloElement(self.N, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.N, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CycloElement):
            r = Fraction(other)
            return CycloElement(self.N, [a * r for a in self.coeffs])
        self._same(other)
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        table = _power_table(self.N)
        deg = len(a)
        out = list(prod[:deg])
        for e in range(deg, len(prod)):
            c = prod[e]
            if c:
                for i, x in enumerate(table[e]):
                    if x:
                        out[i] += c * x
        return CycloElement(self.N, out)

    __rmul__ = __mul__

    def conjugate(self) -> "CycloElement":
        """Complex conjugation, zeta -> zeta^{-1}."""
        return CycloElement.from_exponents(self.N, [(-e, c) for e, c in enumerate(self.coeffs) if c])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, CycloElement):
            return self.N == other.N and self.coeffs == other.coeffs
        try:
            r = Fraction(other)
        except TypeError:
            return NotImplemented
        return self.is_rational() and self.coeffs[0] == r

    def __hash__(self):
        return hash((self.N, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*z^{e}" for e, c in enumerate(self.coeffs) if c]
        return f"Cyclo{self.N}({' + '.join(terms) or '0'})"
