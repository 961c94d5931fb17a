"""Symmetric functions of bounded degree with coefficients in Q(q).

Everything is stored and multiplied in the power-sum basis; the Schur,
monomial and complete bases are reached through per-degree transition
tables built from symmetric group characters.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping

from .coeffring import RAT_ZERO, IntPoly, RatFunc
from .partitions import (
    Partition,
    conjugate,
    n_of,
    partitions,
    union,
    z_of,
)

BASES = ("power", "schur", "monomial", "complete")


# ---------------------------------------------------------------------------
# symmetric group characters

@lru_cache(maxsize=None)
def sn_character(la: Partition, rho: Partition) -> int:
    """Irreducible character of S_n indexed by ``la`` at cycle type ``rho``.

    ``(n,)`` is the trivial character and ``(1,)*n`` the sign.  Computed with
    the Murnaghan-Nakayama rule on beta-sets.
    """
    if sum(la) != sum(rho):
        raise ValueError(f"size mismatch: {la} vs {rho}")
    return _mn(tuple(la), tuple(sorted(rho, reverse=True)))


@lru_cache(maxsize=None)
def _mn(la: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    L = len(la)
    beta = [la[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        nb = sorted((c if x == b else x) for x in beta)[::-1]
        new = tuple(v - (L - 1 - i) for i, v in enumerate(nb))
        new = tuple(x for x in new if x > 0)
        total += (-1) ** height * _mn(new, rest)
    return total


# ---------------------------------------------------------------------------
# transition tables, indexed [degree][partition] -> {partition: Fraction}

def _mat_inverse(rows: list) -> list:
    """Inverse of a square Fraction matrix by Gauss-Jordan."""
    n = len(rows)
    a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _sparse(mapping: Mapping) -> dict:
    return {k: v for k, v in mapping.items() if v != 0}


@lru_cache(maxsize=None)
def _complete_to_power(n: int) -> dict:
    """h_la = sum_rho A[la][rho] p_rho."""
    hn = {m: {rho: Fraction(1, z_of(rho)) for rho in partitions(m)} for m in range(n + 1)}
    out = {}
    for la in partitions(n):
        acc = {(): Fraction(1)}
        for part in la:
            nxt: Dict[Partition, Fraction] = {}
            for a, ca in acc.items():
                for b, cb in hn[part].items():
                    key = union(a, b)
                    nxt[key] = nxt.get(key, 0) + ca * cb
            acc = nxt
        out[la] = _sparse(acc)
    return out


@lru_cache(maxsize=None)
def _table(basis: str, direction: str, n: int) -> dict:
    """Transition table for one degree.

    direction 'to_power': basis element -> power-sum expansion.
    direction 'from_power': p_rho -> expansion in ``basis``.
    """
    parts = partitions(n)
    if basis == "power":
        return {la: {la: Fraction(1)} for la in parts}
    if basis == "schur":
        if direction == "to_power":
            return {
                la: _sparse({rho: Fraction(sn_character(la, rho), z_of(rho)) for rho in parts})
                for la in parts
            }
        return {
            rho: _sparse({la: Fraction(sn_character(la, rho)) for la in parts}) for rho in parts
        }
    A = _complete_to_power(n)
    if basis == "complete":
        if direction == "to_power":
            return A
        inv = _mat_inverse([[A[la].get(rho, Fraction(0)) for rho in parts] for la in parts])
        # inv[rho][la]: p_rho = sum_la inv[rho][la] h_la
        return {rho: _sparse(dict(zip(parts, inv[i]))) for i, rho in enumerate(parts)}
    if basis == "monomial":
        if direction == "from_power":
            return {
                rho: _sparse({mu: z_of(rho) * A[mu].get(rho, 0) for mu in parts})
                for rho in parts
            }
        inv = _mat_inverse([[A[la].get(rho, Fraction(0)) for rho in parts] for la in parts])
        # m_mu = sum_rho inv[rho][mu] / z_rho p_rho
        return {
            mu: _sparse(
                {rho: inv[i][j] / z_of(rho) for i, rho in enumerate(parts)}
            )
            for j, mu in enumerate(parts)
        }
    raise ValueError(f"unknown basis {basis!r}")


# ---------------------------------------------------------------------------

class SymFunc:
    """A symmetric function as ``{partition: RatFunc}`` in a named basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, terms: Mapping | None = None, basis: str = "power"):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        for la, c in (terms or {}).items():
            c = RatFunc.coerce(c)
            if not c.is_zero():
                clean[tuple(la)] = c
        self.terms = clean

    @classmethod
    def basis_element(cls, basis: str, la: Partition) -> "SymFunc":
        return cls({tuple(la): 1}, basis)

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({(): 1}, "power")

    def degrees(self) -> set:
        return {sum(la) for la in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def to_power(self) -> "SymFunc":
        return self.convert("power")

    def convert(self, target: str) -> "SymFunc":
        if target == self.basis:
            return self
        if self.basis == "power":
            pw = self.terms
        else:
            pw = _apply(self.terms, lambda la: _table(self.basis, "to_power", sum(la))[la])
        if target == "power":
            return SymFunc(pw, "power")
        return SymFunc(
            _apply(pw, lambda rho: _table(target, "from_power", sum(rho))[rho]), target
        )

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.to_power().terms == other.to_power().terms

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if other.basis != self.basis:
            other = other.convert(self.basis)
        out = dict(self.terms)
        for la, c in other.terms.items():
            out[la] = out.get(la, RAT_ZERO) + c
        return SymFunc(out, self.basis)

    def __neg__(self):
        return SymFunc({la: -c for la, c in self.terms.items()}, self.basis)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        c = RatFunc.coerce(c)
        return SymFunc({la: v * c for la, v in self.terms.items()}, self.basis)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def coefficient(self, la: Partition) -> RatFunc:
        return self.terms.get(tuple(la), RAT_ZERO)

    def adams(self, d: int) -> "SymFunc":
        """``f(x^d; q^d)`` returned in the power basis."""
        pw = self.to_power().terms
        return SymFunc(
            {tuple(d * x for x in rho): c.subs_power(d) for rho, c in pw.items()}, "power"
        )

    def at_q(self, q0) -> dict:
        """Evaluate every coefficient at q = q0 (same basis)."""
        return {la: c.evaluate(q0) for la, c in self.terms.items()}

    def __repr__(self):
        body = " + ".join(f"({c})*{self.basis[0]}{list(la)}" for la, c in sorted(self.terms.items()))
        return f"SymFunc<{self.basis}>[{body or '0'}]"


def _apply(terms: Mapping, table_row) -> dict:
    out: Dict[Partition, RatFunc] = {}
    for la, c in terms.items():
        for mu, t in table_row(la).items():
            out[mu] = out.get(mu, RAT_ZERO) + c * t
    return out


def convert(f: SymFunc, target: str) -> SymFunc:
    return f.convert(target)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product, computed and returned in the power basis."""
    a, b = f.to_power().terms, g.to_power().terms
    out: Dict[Partition, RatFunc] = {}
    for la, ca in a.items():
        for mu, cb in b.items():
            key = union(la, mu)
            out[key] = out.get(key, RAT_ZERO) + ca * cb
    return SymFunc(out, "power")


def hall_pairing(f: SymFunc, g: SymFunc) -> RatFunc:
    """Bilinear form with <p_la, p_mu> = z_la delta."""
    a, b = f.to_power().terms, g.to_power().terms
    if len(b) < len(a):
        a, b = b, a
    acc = RAT_ZERO
    for la, c in a.items():
        d = b.get(la)
        if d is not None:
            acc = acc + c * d * z_of(la)
    return acc


# ---------------------------------------------------------------------------
# tableaux and Kostka-Foulkes polynomials

def _horizontal_strips(shape: Partition, k: int, bound: Partition) -> Iterable[Partition]:
    """Shapes ``mu`` inside ``bound`` with ``mu / shape`` a horizontal strip of size k."""
    rows = len(bound)
    cur = list(shape) + [0] * (rows - len(shape))

    def rec(i: int, left: int, acc: list):
        if i == rows:
            if left == 0:
                yield tuple(x for x in acc if x > 0)
            return
        hi = bound[i]
        if i > 0:
            hi = min(hi, cur[i - 1])  # strip condition: new row i <= old row i-1
        for add_ in range(min(left, hi - cur[i]), -1, -1):
            yield from rec(i + 1, left - add_, acc + [cur[i] + add_])

    yield from rec(0, k, [])


def semistandard_tableaux(shape: Partition, content: Partition) -> list:
    """All SSYT of the given shape and content, as tuples of rows."""
    shape, content = tuple(shape), tuple(content)
    if sum(shape) != sum(content):
        return []
    chains = [((), [])]
    for letter, k in enumerate(content, start=1):
        nxt = []
        for sh, hist in chains:
            for mu in _horizontal_strips(sh, k, shape):
                nxt.append((mu, hist + [mu]))
        chains = nxt
    out = []
    for sh, hist in chains:
        if sh != shape:
            continue
        rows = [[] for _ in shape]
        prev: Partition = ()
        for letter, mu in enumerate(hist, start=1):
            for i, length in enumerate(mu):
                start = prev[i] if i < len(prev) else 0
                rows[i].extend([letter] * (length - start))
            prev = mu
        out.append(tuple(tuple(r) for r in rows))
    return out


def reading_word(tableau) -> list:
    """Rows read left to right, from the bottom row to the top row."""
    word = []
    for row in reversed(tableau):
        word.extend(row)
    return word


def charge(word: Iterable[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content."""
    w = list(word)
    used = [False] * len(w)
    total = 0
    remaining = len(w)
    while remaining:
        present = {w[i] for i in range(len(w)) if not used[i]}
        top = 0
        while top + 1 in present:
            top += 1
        pos = len(w)
        index = 0
        for letter in range(1, top + 1):
            # scan leftwards cyclically from pos for the letter
            found = None
            for j in range(pos - 1, -1, -1):
                if not used[j] and w[j] == letter:
                    found = j
                    break
            if found is None:
                if letter > 1:
                    index += 1
                for j in range(len(w) - 1, pos - 1, -1):
                    if not used[j] and w[j] == letter:
                        found = j
                        break
            used[found] = True
            remaining -= 1
            total += index
            pos = found
    return total


@lru_cache(maxsize=None)
def kostka_foulkes(nu: Partition, la: Partition) -> IntPoly:
    """K_{nu,la}(t) as an IntPoly in t (t plays the role of q)."""
    nu, la = tuple(nu), tuple(la)
    if sum(nu) != sum(la):
        raise ValueError(f"size mismatch: {nu} vs {la}")
    coeffs: Dict[int, int] = {}
    for tab in semistandard_tableaux(nu, la):
        c = charge(reading_word(tab))
        coeffs[c] = coeffs.get(c, 0) + 1
    if not coeffs:
        return IntPoly()
    return IntPoly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])


def kostka_number(nu: Partition, la: Partition) -> int:
    return kostka_foulkes(nu, la)(1)


@lru_cache(maxsize=None)
def transformed_kostka(nu: Partition, la: Partition) -> IntPoly:
    """q^{n(la)} K_{nu,la}(1/q)."""
    k = kostka_foulkes(nu, la)
    if k.is_zero():
        return k
    top = n_of(la)
    out = [0] * (top + 1)
    for e, c in enumerate(k.coeffs):
        out[top - e] = c
    return IntPoly(out)


@lru_cache(maxsize=None)
def hall_littlewood_transformed(la: Partition) -> SymFunc:
    """H~_la(x; q) in the Schur basis."""
    la = tuple(la)
    return SymFunc(
        {nu: RatFunc.coerce(transformed_kostka(nu, la)) for nu in partitions(sum(la))},
        "schur",
    )


@lru_cache(maxsize=None)
def hall_littlewood_power(la: Partition) -> dict:
    """Power-sum coefficients of H~_la as ``{rho: RatFunc}`` (cached)."""
    return dict(hall_littlewood_transformed(la).to_power().terms)


def schur(la: Partition) -> SymFunc:
    return SymFunc.basis_element("schur", la)


def complete(la: Partition) -> SymFunc:
    return SymFunc.basis_element("complete", la)


def monomial(la: Partition) -> SymFunc:
    return SymFunc.basis_element("monomial", la)


def power(la: Partition) -> SymFunc:
    return SymFunc.basis_element("power", la)


__all__ = [
    "BASES",
    "SymFunc",
    "charge",
    "complete",
    "conjugate",
    "convert",
    "hall_littlewood_power",
    "hall_littlewood_transformed",
    "hall_pairing",
    "kostka_foulkes",
    "kostka_number",
    "monomial",
    "multiply",
    "power",
    "reading_word",
    "schur",
    "semistandard_tableaux",
    "sn_character",
    "transformed_kostka",
]
