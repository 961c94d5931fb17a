"""Integer partitions stored as weakly decreasing tuples of positive ints.

The empty tuple is the unique partition of 0.  Enumeration order is reverse
lexicographic, e.g. ``(3,), (2, 1), (1, 1, 1)``, and every basis indexed by
partitions in this package uses that order.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence, Tuple

from .coeffring import IntPoly, RatFunc

Partition = Tuple[int, ...]


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate and normalize a sequence of parts (zeros are dropped)."""
    p = tuple(int(x) for x in parts if x != 0)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {parts!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts!r}")
    return p


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return ()
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from partitions(m)


def size(la: Partition) -> int:
    return sum(la)


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for x in la if x > j) for j in range(la[0]))


def add(la: Partition, mu: Partition) -> Partition:
    """Componentwise sum ``la + mu``."""
    n = max(len(la), len(mu))
    return tuple(
        (la[i] if i < len(la) else 0) + (mu[i] if i < len(mu) else 0) for i in range(n)
    )


def union(la: Partition, mu: Partition) -> Partition:
    return tuple(sorted(la + mu, reverse=True))


def scale(d: int, la: Partition) -> Partition:
    if d < 1:
        raise ValueError("scale factor must be >= 1")
    return tuple(d * x for x in la)


def combine(la: Partition, mu, mode: str) -> Partition:
    """``mode`` is 'sum', 'union' or 'scale' (then ``mu`` is the integer factor)."""
    if mode == "sum":
        return add(la, mu)
    if mode == "union":
        return union(la, mu)
    if mode == "scale":
        return scale(mu, la)
    raise ValueError(f"unknown mode {mode!r}")


def multiplicities(la: Partition) -> dict:
    return dict(Counter(la))


def n_of(la: Partition) -> int:
    """``sum (i-1) * la_i``."""
    return sum(i * x for i, x in enumerate(la))


def norm(la: Partition) -> int:
    """``<la, la> = 2 n(la) + |la|``, the dimension of the centralizer of a
    nilpotent of Jordan type ``la``."""
    return 2 * n_of(la) + sum(la)


@lru_cache(maxsize=None)
def z_of(la: Partition) -> int:
    return prod(i ** m * factorial(m) for i, m in Counter(la).items())


def stats(la: Partition) -> dict:
    return {"size": sum(la), "n_of": n_of(la), "norm": norm(la), "z_of": z_of(la)}


@lru_cache(maxsize=None)
def centralizer_poly(la: Partition) -> IntPoly:
    """Order of the centralizer of a unipotent element of Jordan type ``la``
    in GL_{|la|}(F_q), as a polynomial in q."""
    # q^{|la|+2n(la)} prod_i phi_{m_i}(1/q)  =  q^e * prod_{i,j<=m_i} (q^j - 1)
    e = sum(la) + 2 * n_of(la)
    p = IntPoly.const(1)
    for m in Counter(la).values():
        for j in range(1, m + 1):
            p = p * IntPoly.monomial(j, 1) - p
            e -= j
    return p * IntPoly.monomial(e)


def centralizer_order(la: Partition) -> RatFunc:
    return RatFunc.coerce(centralizer_poly(la))


def gl_order(n: int) -> IntPoly:
    """|GL_n(F_q)| as a polynomial in q."""
    p = IntPoly.monomial(n * (n - 1) // 2)
    for j in range(1, n + 1):
        p = p * IntPoly.monomial(j) - p
    return p


def dominance_leq(la: Partition, mu: Partition) -> bool:
    """True iff ``la`` is dominated by ``mu``."""
    if sum(la) != sum(mu):
        raise ValueError(f"dominance needs equal sizes: {la} vs {mu}")
    s = t = 0
    for i in range(max(len(la), len(mu))):
        s += la[i] if i < len(la) else 0
        t += mu[i] if i < len(mu) else 0
        if s > t:
            return False
    return True


def format_partition(la: Partition) -> str:
    return "[" + ",".join(str(x) for x in la) + "]"


_PART_RE = re.compile(r"\s*\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]\s*$")


def parse_partition(text: str) -> Partition:
    m = _PART_RE.match(text)
    if not m:
        raise ValueError(f"bad partition syntax: {text!r}")
    body = m.group(1).strip()
    parts = [int(x) for x in body.split(",")] if body else []
    if any(x <= 0 for x in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return make_partition(parts)
