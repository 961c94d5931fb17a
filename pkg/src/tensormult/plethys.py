"""Truncated power series in T over k independent alphabets.

A ``SymSeries`` keeps, for each level m <= N, a dict from k-tuples of
partitions of m (power-sum indices, one per alphabet) to RatFunc
coefficients.  On top of that live the Adams operations, the plethystic
Log/Exp pair, and the k-point Cauchy function.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Mapping, Tuple

from .coeffring import RAT_ONE, RAT_ZERO, IntPoly, RatFunc
from .partitions import centralizer_poly, norm, partitions, union
from .symfunc import SymFunc, hall_littlewood_power

Key = Tuple[tuple, ...]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


class SymSeries:
    """Element of Lambda_k[[T]] truncated after T^N (k = 0 gives series in T alone)."""

    __slots__ = ("k", "N", "levels")

    def __init__(self, k: int, N: int, levels: Iterable[Mapping] | None = None):
        if k < 0 or N < 0:
            raise ValueError("need k >= 0 and N >= 0")
        self.k = k
        self.N = N
        lv: List[Dict[Key, RatFunc]] = [dict() for _ in range(N + 1)]
        if levels is not None:
            for m, terms in enumerate(levels):
                if m > N:
                    break
                for key, c in terms.items():
                    key = tuple(tuple(p) for p in key)
                    if len(key) != k or any(sum(p) != m for p in key):
                        raise ValueError(f"key {key} does not sit at level {m}")
                    c = RatFunc.coerce(c)
                    if not c.is_zero():
                        lv[m][key] = c
        self.levels = lv

    @classmethod
    def _wrap(cls, k: int, N: int, levels: List[Dict[Key, RatFunc]]) -> "SymSeries":
        s = object.__new__(cls)
        s.k, s.N = k, N
        s.levels = [{key: c for key, c in lv.items() if not c.is_zero()} for lv in levels]
        return s

    @classmethod
    def zero(cls, k: int, N: int) -> "SymSeries":
        return cls._wrap(k, N, [dict() for _ in range(N + 1)])

    @classmethod
    def scalar(cls, c, k: int, N: int) -> "SymSeries":
        s = cls.zero(k, N)
        c = RatFunc.coerce(c)
        if not c.is_zero():
            s.levels[0][((),) * k] = c
        return s

    @classmethod
    def one(cls, k: int, N: int) -> "SymSeries":
        return cls.scalar(1, k, N)

    @classmethod
    def monomial(cls, parts: Key, c, N: int) -> "SymSeries":
        """``c * p_{parts[0]}(x_1) ... p_{parts[k-1]}(x_k) * T^m``."""
        parts = tuple(tuple(p) for p in parts)
        m = sum(parts[0])
        s = cls.zero(len(parts), N)
        if m <= N:
            c = RatFunc.coerce(c)
            if not c.is_zero():
                s.levels[m][parts] = c
        return s

    @classmethod
    def from_symfuncs(cls, level: int, factors: List[SymFunc], c=1, N: int | None = None):
        """``c * f_1(x_1) ... f_k(x_k) * T^level`` for homogeneous f_i of degree ``level``."""
        N = level if N is None else N
        k = len(factors)
        s = cls.zero(k, N)
        if level > N:
            return s
        c = RatFunc.coerce(c)
        pw = [f.to_power().terms for f in factors]
        for combo in product(*(list(t.items()) for t in pw)):
            key = tuple(p for p, _ in combo)
            if any(sum(p) != level for p in key):
                raise ValueError("factors must be homogeneous of degree `level`")
            v = c
            for _, x in combo:
                v = v * x
            s.levels[level][key] = s.levels[level].get(key, RAT_ZERO) + v
        return cls._wrap(k, N, s.levels)

    def _check(self, other: "SymSeries"):
        if self.k != other.k:
            raise ValueError("series over different numbers of alphabets")

    def truncate(self, N: int) -> "SymSeries":
        N = min(N, self.N)
        return SymSeries._wrap(self.k, N, [dict(lv) for lv in self.levels[: N + 1]])

    def constant(self) -> RatFunc:
        return self.levels[0].get(((),) * self.k, RAT_ZERO)

    def coefficient(self, m: int) -> Dict[Key, RatFunc]:
        return dict(self.levels[m]) if m <= self.N else {}

    def __eq__(self, other):
        if not isinstance(other, SymSeries):
            return NotImplemented
        return self.k == other.k and self.N == other.N and self.levels == other.levels

    def is_zero(self) -> bool:
        return not any(self.levels)

    def __add__(self, other: "SymSeries") -> "SymSeries":
        self._check(other)
        N = min(self.N, other.N)
        out = []
        for m in range(N + 1):
            lv = dict(self.levels[m])
            for key, c in other.levels[m].items():
                lv[key] = lv.get(key, RAT_ZERO) + c
            out.append(lv)
        return SymSeries._wrap(self.k, N, out)

    def __neg__(self):
        return SymSeries._wrap(
            self.k, self.N, [{key: -c for key, c in lv.items()} for lv in self.levels]
        )

    def __sub__(self, other: "SymSeries") -> "SymSeries":
        return self + (-other)

    def scale(self, c) -> "SymSeries":
        c = RatFunc.coerce(c)
        return SymSeries._wrap(
            self.k, self.N, [{key: v * c for key, v in lv.items()} for lv in self.levels]
        )

    def __mul__(self, other):
        if not isinstance(other, SymSeries):
            return self.scale(other)
        self._check(other)
        N = min(self.N, other.N)
        out: List[Dict[Key, RatFunc]] = [dict() for _ in range(N + 1)]
        for a in range(N + 1):
            la = self.levels[a]
            if not la:
                continue
            for b in range(N + 1 - a):
                lb = other.levels[b]
                if not lb:
                    continue
                acc = out[a + b]
                for ka, ca in la.items():
                    for kb, cb in lb.items():
                        key = tuple(union(x, y) for x, y in zip(ka, kb))
                        v = ca * cb
                        prev = acc.get(key)
                        acc[key] = v if prev is None else prev + v
        return SymSeries._wrap(self.k, N, out)

    __rmul__ = __mul__

    def __repr__(self):
        n = sum(len(lv) for lv in self.levels)
        return f"SymSeries(k={self.k}, N={self.N}, terms={n})"


def adams(n: int, f: SymSeries) -> SymSeries:
    """psi_n: p_rho -> p_{n rho} in every alphabet, q -> q^n, T -> T^n."""
    if n < 1:
        raise ValueError("Adams operations are indexed by n >= 1")
    if n == 1:
        return f
    out: List[Dict[Key, RatFunc]] = [dict() for _ in range(f.N + 1)]
    for m, lv in enumerate(f.levels):
        if n * m > f.N:
            break
        for key, c in lv.items():
            nk = tuple(tuple(n * x for x in p) for p in key)
            out[n * m][nk] = c.subs_power(n)
    return SymSeries._wrap(f.k, f.N, out)


def _psi_sum(f: SymSeries, weight) -> SymSeries:
    acc = SymSeries.zero(f.k, f.N)
    for n in range(1, f.N + 1):
        w = weight(n)
        if w:
            acc = acc + adams(n, f).scale(w)
    return acc


def _without_constant(f: SymSeries) -> SymSeries:
    lv = [dict(x) for x in f.levels]
    lv[0] = {}
    return SymSeries._wrap(f.k, f.N, lv)


def series_log(f: SymSeries) -> SymSeries:
    """Ordinary logarithm of a series with constant term 1."""
    if f.constant() != RAT_ONE or len(f.levels[0]) != 1:
        raise ValueError("log needs constant term 1")
    u = _without_constant(f)
    acc = SymSeries.zero(f.k, f.N)
    power = SymSeries.one(f.k, f.N)
    for j in range(1, f.N + 1):
        power = power * u
        if power.is_zero():
            break
        acc = acc + power.scale(Fraction((-1) ** (j + 1), j))
    return acc


def series_exp(f: SymSeries) -> SymSeries:
    """Ordinary exponential of a series with zero constant term."""
    if f.levels[0]:
        raise ValueError("exp needs zero constant term")
    acc = SymSeries.one(f.k, f.N)
    term = SymSeries.one(f.k, f.N)
    for j in range(1, f.N + 1):
        term = (term * f).scale(Fraction(1, j))
        if term.is_zero():
            break
        acc = acc + term
    return acc


def pleth_log(f: SymSeries) -> SymSeries:
    """Log(f) = sum_n mu(n)/n psi_n(log f)."""
    if f.constant() != RAT_ONE or len(f.levels[0]) != 1:
        raise ValueError("plethystic Log needs constant term 1")
    return _psi_sum(series_log(f), lambda n: Fraction(mobius(n), n))


def pleth_exp(f: SymSeries) -> SymSeries:
    """Exp(f) = exp(sum_n psi_n(f)/n)."""
    if f.levels[0]:
        raise ValueError("plethystic Exp needs zero constant term")
    return series_exp(_psi_sum(f, lambda n: Fraction(1, n)))


def h_weight(la, g: int) -> RatFunc:
    """q^{g <la,la>} / a_la(q)."""
    return RatFunc(IntPoly.monomial(g * norm(la)), centralizer_poly(la))


@lru_cache(maxsize=None)
def cauchy_omega(g: int, k: int, N: int) -> SymSeries:
    """The k-point Cauchy function with genus weight g, truncated at T^N.

    The result is cached; treat it as read-only.
    """
    if g < 0 or k < 1 or N < 0:
        raise ValueError("need g >= 0, k >= 1, N >= 0")
    levels: List[Dict[Key, RatFunc]] = [dict() for _ in range(N + 1)]
    levels[0][((),) * k] = RAT_ONE
    for m in range(1, N + 1):
        acc = levels[m]
        for la in partitions(m):
            w = h_weight(la, g)
            hp = list(hall_littlewood_power(la).items())
            for combo in product(hp, repeat=k):
                v = w
                for _, c in combo:
                    v = v * c
                key = tuple(rho for rho, _ in combo)
                prev = acc.get(key)
                acc[key] = v if prev is None else prev + v
    return SymSeries._wrap(k, N, levels)


@lru_cache(maxsize=None)
def log_omega(g: int, k: int, N: int) -> SymSeries:
    """pleth_log(cauchy_omega(g, k, N)), cached; treat as read-only."""
    return pleth_log(cauchy_omega(g, k, N))
