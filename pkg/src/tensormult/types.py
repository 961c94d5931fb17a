"""Types of GL_n(F_q) characters, their Schur functions, and H_omega(q).

A type is a multiset of pairs ``(d, la)`` (degree, nonempty partition) kept
in a canonical non-increasing order; a multitype is a k-tuple of types of
equal size together with a genus ``g``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .coeffring import RAT_ZERO, IntPoly, NotPolynomialError, RatFunc
from .partitions import (
    Partition,
    add,
    conjugate,
    format_partition,
    make_partition,
    partitions,
    scale,
    union,
    z_of,
)
from .plethys import log_omega
from .symfunc import SymFunc, sn_character

Pair = Tuple[int, Partition]


def _pair_key(pair: Pair):
    # (d, mu) <= (d', la) iff mu < la lexicographically, or mu == la and d >= d'
    d, la = pair
    return (la, -d)


@dataclass(frozen=True)
class TypeT:
    """An element of T_n: pairs ``(degree, partition)`` in canonical order."""

    pairs: Tuple[Pair, ...]

    def __post_init__(self):
        norm = []
        for d, la in self.pairs:
            d = int(d)
            la = make_partition(la)
            if d < 1:
                raise ValueError(f"degree must be >= 1, got {d}")
            if not la:
                raise ValueError("partitions in a type must be nonempty")
            norm.append((d, la))
        norm.sort(key=_pair_key, reverse=True)
        object.__setattr__(self, "pairs", tuple(norm))

    @classmethod
    def of(cls, *pairs) -> "TypeT":
        return cls(tuple(pairs))

    @property
    def size(self) -> int:
        return sum(d * sum(la) for d, la in self.pairs)

    @property
    def is_split(self) -> bool:
        return all(d == 1 for d, _ in self.pairs)

    def __str__(self):
        return ",".join(f"{d}:{format_partition(la)}" for d, la in self.pairs)


@dataclass(frozen=True)
class MultiType:
    types: Tuple[TypeT, ...]
    g: int = 0

    def __post_init__(self):
        ts = tuple(t if isinstance(t, TypeT) else TypeT(tuple(t)) for t in self.types)
        if not ts:
            raise ValueError("a multitype needs at least one type")
        sizes = {t.size for t in ts}
        if len(sizes) != 1:
            raise ValueError(f"types of different sizes: {sorted(sizes)}")
        if self.g < 0:
            raise ValueError("genus must be >= 0")
        object.__setattr__(self, "types", ts)

    @property
    def k(self) -> int:
        return len(self.types)

    @property
    def n(self) -> int:
        return self.types[0].size

    def __str__(self):
        return f"g={self.g}; " + " ; ".join(str(t) for t in self.types)


# ---------------------------------------------------------------------------
# grammar:  g=<int>; <type> ; <type> ...   with <type> = d:[p,..],d:[p,..]

class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, got {got!r}", self._byte())
        self.pos += 1

    def integer(self) -> int:
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", self._byte())
        return int(self.text[start:self.pos])

    def _byte(self) -> int:
        return len(self.text[: self.pos].encode())


def parse_multitype(text: str) -> MultiType:
    sc = _Scanner(text)
    sc.expect("g")
    sc.expect("=")
    g = sc.integer()
    types = []
    while sc.peek() == ";":
        sc.pos += 1
        types.append(_parse_type(sc))
    if sc.peek():
        raise ParseError(f"unexpected {sc.peek()!r}", sc._byte())
    if not types:
        raise ParseError("no types given", sc._byte())
    try:
        return MultiType(tuple(types), g)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from exc


def _parse_type(sc: _Scanner) -> TypeT:
    pairs = []
    while True:
        start = sc._byte()
        d = sc.integer()
        sc.expect(":")
        sc.expect("[")
        parts = []
        if sc.peek() != "]":
            parts.append(sc.integer())
            while sc.peek() == ",":
                sc.pos += 1
                parts.append(sc.integer())
        sc.expect("]")
        try:
            pairs.append((d, make_partition(parts)))
            TypeT(((d, make_partition(parts)),))
        except ValueError as exc:
            raise ParseError(str(exc), start) from exc
        if sc.peek() != ",":
            break
        sc.pos += 1
    return TypeT(tuple(pairs))


def parse_type(text: str) -> TypeT:
    sc = _Scanner(text)
    t = _parse_type(sc)
    if sc.peek():
        raise ParseError(f"unexpected {sc.peek()!r}", sc._byte())
    return t


# ---------------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def types_of_size(n: int) -> Tuple[TypeT, ...]:
    """All types of size n, sorted by their string form."""
    pairs = sorted(
        {(d, la) for d in range(1, n + 1) for m in range(1, n // d + 1) for la in partitions(m)},
        key=_pair_key,
        reverse=True,
    )
    out = []

    def rec(start: int, left: int, acc: list):
        if left == 0:
            out.append(TypeT(tuple(acc)))
            return
        for i in range(start, len(pairs)):
            d, la = pairs[i]
            w = d * sum(la)
            if w <= left:
                rec(i, left - w, acc + [pairs[i]])

    rec(0, n, [])
    return tuple(sorted(set(out), key=str))


def multitypes(n: int, k: int, g: int, ordered: bool = True) -> List[MultiType]:
    ts = types_of_size(n)
    if ordered:
        combos = product(ts, repeat=k)
    else:
        from itertools import combinations_with_replacement

        combos = combinations_with_replacement(ts, k)
    return [MultiType(tuple(c), g) for c in combos]


# ---------------------------------------------------------------------------
# type operations

def type_dual(w: TypeT) -> TypeT:
    return TypeT(tuple((d, conjugate(la)) for d, la in w.pairs))


def omega_plus(w: TypeT) -> Partition:
    out: Partition = ()
    for d, la in w.pairs:
        out = add(out, scale(d, la))
    return out


_FAMILIES = ("schur", "complete", "power", "monomial", "hall_littlewood")


def _family_element(family: str, la: Partition) -> SymFunc:
    if family == "hall_littlewood":
        from .symfunc import hall_littlewood_transformed

        return hall_littlewood_transformed(la)
    return SymFunc.basis_element(family, la)


def type_symfunc(w: TypeT, family: str = "schur") -> SymFunc:
    """prod_i u_{w^i}(x^{d_i}; q^{d_i}) in the power basis."""
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    acc = SymFunc.one()
    for d, la in w.pairs:
        acc = acc * _family_element(family, la).adams(d)
    return acc


@lru_cache(maxsize=None)
def _type_schur_power(w: TypeT) -> Dict[Partition, RatFunc]:
    return dict(type_symfunc(w, "schur").terms)


@lru_cache(maxsize=None)
def _twisted_lr_table(w: TypeT) -> Dict[Partition, Fraction]:
    """Power-sum expansion of s_w from characters:  rho -> coefficient."""
    per_pair = []
    for d, la in w.pairs:
        per_pair.append(
            [
                (scale(d, alpha), Fraction(sn_character(la, alpha), z_of(alpha)))
                for alpha in partitions(sum(la))
            ]
        )
    out: Dict[Partition, Fraction] = {}
    for combo in product(*per_pair):
        rho: Partition = ()
        c = Fraction(1)
        for part, v in combo:
            rho = union(rho, part)
            c *= v
        if c:
            out[rho] = out.get(rho, 0) + c
    return out


def twisted_lr(w: TypeT, mu: Partition) -> int:
    """Coefficient of s_mu in s_w, from symmetric group characters."""
    mu = tuple(mu)
    if sum(mu) != w.size:
        raise ValueError(f"|mu| = {sum(mu)} but |w| = {w.size}")
    total = sum(
        (sn_character(mu, rho) * c for rho, c in _twisted_lr_table(w).items()), Fraction(0)
    )
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral twisted LR coefficient {total}")
    return int(total)


def twisted_lr_expansion(w: TypeT) -> Dict[Partition, int]:
    """``{mu: c_w^mu}`` over all mu with nonzero coefficient."""
    out = {}
    for mu in partitions(w.size):
        c = twisted_lr(w, mu)
        if c:
            out[mu] = c
    return out


def type_schur_decomposition(w: TypeT, blocks: Sequence) -> Dict[tuple, int]:
    """Per-block Schur expansions of s_w multiplied out.

    ``blocks`` is a sequence whose items are either integers (lengths of
    consecutive runs of ``w.pairs``) or explicit lists of pairs; either way
    they must split the pairs of ``w`` exactly.  The result maps tuples
    ``(la^1, ..., la^r)`` to ``prod_i c_{block_i}^{la^i}``.
    """
    block_types = []
    if all(isinstance(b, int) for b in blocks):
        if sum(blocks) != len(w.pairs) or any(b <= 0 for b in blocks):
            raise ValueError("block lengths must be positive and cover all pairs")
        pos = 0
        for b in blocks:
            block_types.append(TypeT(w.pairs[pos : pos + b]))
            pos += b
    else:
        seen: Counter = Counter()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            bt = TypeT(tuple(b))
            block_types.append(bt)
            seen.update(bt.pairs)
        if seen != Counter(w.pairs):
            raise ValueError("blocks do not partition the pairs of the type")
    expansions = [twisted_lr_expansion(bt) for bt in block_types]
    out = {}
    for combo in product(*(e.items() for e in expansions)):
        key = tuple(la for la, _ in combo)
        c = 1
        for _, v in combo:
            c *= v
        out[key] = c
    return out


# ---------------------------------------------------------------------------
# H_omega

def r_omega(mt: MultiType) -> int:
    """Sign exponent k n + sum_{i,j} |w_i^j|."""
    return mt.k * mt.n + sum(sum(la) for t in mt.types for _, la in t.pairs)


def paired_log_omega(mt: MultiType) -> RatFunc:
    """Hall pairing of s_{w'} with the T^n coefficient of Log Omega."""
    n = mt.n
    level = log_omega(mt.g, mt.k, n).levels[n]
    expansions = [list(_type_schur_power(type_dual(t)).items()) for t in mt.types]
    acc = RAT_ZERO
    for combo in product(*expansions):
        key = tuple(rho for rho, _ in combo)
        c = level.get(key)
        if c is None:
            continue
        w = 1
        for rho, v in combo:
            w = v * w * z_of(rho)
        acc = acc + c * w
    return acc


def h_omega_ratfunc(mt: MultiType) -> RatFunc:
    sign = -1 if r_omega(mt) % 2 else 1
    return paired_log_omega(mt) * RatFunc(IntPoly([-sign, sign]))


def h_omega(mt: MultiType) -> IntPoly:
    """The multiplicity polynomial H_omega(q) of a multitype."""
    val = h_omega_ratfunc(mt)
    try:
        return val.as_poly()
    except NotPolynomialError as exc:
        raise NotPolynomialError(f"H_omega for {mt} is not a polynomial: {val}") from exc


def h_omega_ss(lams: Sequence[Partition], g: int) -> RatFunc:
    """(q-1) <h_lams, Log Omega> for a multipartition (split semisimple case)."""
    lams = [tuple(la) for la in lams]
    n = sum(lams[0])
    level = log_omega(g, len(lams), n).levels[n]
    from .symfunc import complete

    expansions = [list(complete(la).to_power().terms.items()) for la in lams]
    acc = RAT_ZERO
    for combo in product(*expansions):
        key = tuple(rho for rho, _ in combo)
        c = level.get(key)
        if c is None:
            continue
        w = 1
        for rho, v in combo:
            w = v * w * z_of(rho)
        acc = acc + c * w
    return acc * RatFunc(IntPoly([-1, 1]))


def split_semisimple_type(la: Partition) -> TypeT:
    """The type (1,(1^{la_1})) (1,(1^{la_2})) ... attached to a partition."""
    return TypeT(tuple((1, (1,) * part) for part in la))


def regular_semisimple_type(la: Partition) -> TypeT:
    """The type (la_1,(1)) (la_2,(1)) ... attached to a partition."""
    return TypeT(tuple((part, (1,)) for part in la))


def nilpotent_type(la: Partition) -> TypeT:
    return TypeT(((1, tuple(la)),))


def generic_exists(mt: MultiType) -> bool:
    """True iff the gcd of the partition sizes appearing in mt is 1."""
    d = 0
    for t in mt.types:
        for _, la in t.pairs:
            d = gcd(d, sum(la))
    return d == 1


__all__ = [
    "MultiType",
    "ParseError",
    "TypeT",
    "generic_exists",
    "h_omega",
    "h_omega_ratfunc",
    "h_omega_ss",
    "multitypes",
    "nilpotent_type",
    "omega_plus",
    "paired_log_omega",
    "parse_multitype",
    "parse_type",
    "r_omega",
    "regular_semisimple_type",
    "split_semisimple_type",
    "twisted_lr",
    "twisted_lr_expansion",
    "type_dual",
    "type_schur_decomposition",
    "type_symfunc",
    "types_of_size",
]
