"""Character tables of GL_1(F_q) and GL_2(F_q) with exact cyclotomic values.

Everything is parametrized by discrete logarithms.  Fix a generator ``gam``
of F_{q^2}^x (order N = q^2 - 1); then ``nu = gam^(q+1)`` generates F_q^x.
A root of unity ``zeta`` of order N carries all character values:

* linear characters of F_q^x:      alpha_i(nu^a) = zeta^((q+1) i a)
* characters of F_{q^2}^x:         theta_j(gam^c) = zeta^(j c)

Values are stored in the group ring Z[C_N] as ``{exponent: int}`` dicts and
only reduced modulo Phi_N when a final answer is extracted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from ..types import MultiType, TypeT
from .cyclotomic import CycloElement

SUPPORTED_Q = (3, 5, 7)

GroupRing = Dict[int, int]


class UnsupportedQError(ValueError):
    pass


class InsufficientQError(ValueError):
    """No generic tuple of the requested type exists in the table."""


class MixedTablesError(ValueError):
    pass


@dataclass(frozen=True)
class ConjClass:
    kind: str  # central, nonsemisimple, split, anisotropic (GL_2); element (GL_1)
    params: Tuple[int, ...]
    size: int
    centralizer_dim: int


@dataclass(frozen=True)
class Character:
    kind: str  # linear, steinberg, principal, cuspidal (GL_2); linear (GL_1)
    params: Tuple[int, ...]
    degree: int
    type_tag: TypeT
    levi: str  # 'G', 'T' (split torus) or 'Tw' (nonsplit torus)
    values: Tuple[Tuple[Tuple[int, int], ...], ...] = field(repr=False, compare=False)
    table_id: Tuple[int, int] = field(repr=False, default=(0, 0))

    def value(self, i: int) -> GroupRing:
        return dict(self.values[i])


@dataclass
class CharacterTable:
    n: int
    q: int
    N: int  # order of the root of unity carrying the values
    classes: List[ConjClass]
    characters: List[Character]

    @property
    def group_order(self) -> int:
        if self.n == 1:
            return self.q - 1
        return (self.q ** 2 - 1) * (self.q ** 2 - self.q)

    def value(self, chi: Character, i: int) -> CycloElement:
        return CycloElement.from_exponents(self.N, chi.values[i])

    def characters_of_type(self, t: TypeT) -> List[Character]:
        return [c for c in self.characters if c.type_tag == t]


def _gr(*terms) -> Tuple[Tuple[int, int], ...]:
    """Group-ring element from (exponent, coefficient) terms, mod N applied later."""
    acc: Dict[int, int] = {}
    for e, c in terms:
        acc[e] = acc.get(e, 0) + c
    return tuple(sorted((e, c) for e, c in acc.items() if c))


def _gr_mod(g, N) -> Tuple[Tuple[int, int], ...]:
    return _gr(*((e % N, c) for e, c in g))


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n ** 0.5) + 1))


@lru_cache(maxsize=None)
def build_table_gl1(q: int) -> CharacterTable:
    if not _is_prime(q):
        raise UnsupportedQError(f"GL_1 table needs prime q, got {q}")
    N = q - 1
    classes = [ConjClass("element", (a,), 1, 1) for a in range(N)]
    tag = TypeT(((1, (1,)),))
    chars = []
    for i in range(N):
        vals = tuple(_gr_mod([(i * a, 1)], N) for a in range(N))
        chars.append(Character("linear", (i,), 1, tag, "G", vals, (1, q)))
    return CharacterTable(1, q, N, classes, chars)


@lru_cache(maxsize=None)
def build_table_gl2(q: int) -> CharacterTable:
    """All q^2 - 1 irreducible characters of GL_2(F_q), q in SUPPORTED_Q."""
    if q not in SUPPORTED_Q:
        raise UnsupportedQError(f"GL_2 oracle supports q in {SUPPORTED_Q}, got {q}")
    N = q * q - 1
    s = q + 1  # exponent step: nu^a = gam^(s a)
    classes: List[ConjClass] = []
    for a in range(q - 1):
        classes.append(ConjClass("central", (a,), 1, 4))
    for a in range(q - 1):
        classes.append(ConjClass("nonsemisimple", (a,), q * q - 1, 2))
    for a in range(q - 1):
        for b in range(a + 1, q - 1):
            classes.append(ConjClass("split", (a, b), q * (q + 1), 2))
    seen = set()
    for c in range(N):
        if c % s == 0 or c in seen:
            continue
        seen.update({c, (c * q) % N})
        classes.append(ConjClass("anisotropic", (c, (c * q) % N), q * (q - 1), 2))

    def values(fn):
        return tuple(_gr_mod(fn(cl), N) for cl in classes)

    def lin(i):
        def f(cl):
            k, p = cl.kind, cl.params
            if k in ("central", "nonsemisimple"):
                return [(s * i * 2 * p[0], 1)]
            if k == "split":
                return [(s * i * (p[0] + p[1]), 1)]
            return [(s * i * p[0], 1)]  # det = norm(z) = gam^(c(q+1))

        return f

    def stein(i):
        def f(cl):
            k, p = cl.kind, cl.params
            if k == "central":
                return [(s * i * 2 * p[0], q)]
            if k == "nonsemisimple":
                return []
            if k == "split":
                return [(s * i * (p[0] + p[1]), 1)]
            return [(s * i * p[0], -1)]

        return f

    def principal(i, j):
        def f(cl):
            k, p = cl.kind, cl.params
            if k == "central":
                return [(s * (i + j) * p[0], q + 1)]
            if k == "nonsemisimple":
                return [(s * (i + j) * p[0], 1)]
            if k == "split":
                a, b = p
                return [(s * (i * a + j * b), 1), (s * (i * b + j * a), 1)]
            return []

        return f

    def cusp(j):
        def f(cl):
            k, p = cl.kind, cl.params
            if k == "central":
                return [(j * s * p[0], q - 1)]
            if k == "nonsemisimple":
                return [(j * s * p[0], -1)]
            if k == "split":
                return []
            c = p[0]
            return [(j * c, -1), (j * c * q, -1)]

        return f

    tid = (2, q)
    t_lin = TypeT(((1, (1, 1)),))
    t_st = TypeT(((1, (2,)),))
    t_ps = TypeT(((1, (1,)), (1, (1,))))
    t_cu = TypeT(((2, (1,)),))
    chars: List[Character] = []
    for i in range(q - 1):
        chars.append(Character("linear", (i,), 1, t_lin, "G", values(lin(i)), tid))
    for i in range(q - 1):
        chars.append(Character("steinberg", (i,), q, t_st, "G", values(stein(i)), tid))
    for i in range(q - 1):
        for j in range(i + 1, q - 1):
            chars.append(
                Character("principal", (i, j), q + 1, t_ps, "T", values(principal(i, j)), tid)
            )
    seen = set()
    for j in range(N):
        if (j * (q - 1)) % N == 0 or j in seen:
            continue  # theta_j = theta_j^q: not regular
        seen.update({j, (j * q) % N})
        chars.append(Character("cuspidal", (j, (j * q) % N), q - 1, t_cu, "Tw", values(cusp(j)), tid))
    return CharacterTable(2, q, N, classes, chars)


def build_table(n: int, q: int) -> CharacterTable:
    if n == 1:
        return build_table_gl1(q)
    if n == 2:
        return build_table_gl2(q)
    raise UnsupportedQError("oracle supports n <= 2")


# ---------------------------------------------------------------------------
# genericity

def _restrictions(chi: Character, q: int, n: int):
    """Exponent data of the character theta of the defining datum.

    Returns (exponent on Z_G mod q-1, options on split torus, options on
    nonsplit torus); an option set is None when the torus does not lie in
    a conjugate of the Levi.
    """
    N = q * q - 1
    if n == 1:
        return chi.params[0] % (q - 1), None, None
    if chi.kind in ("linear", "steinberg"):
        i = chi.params[0]
        return (2 * i) % (q - 1), {(i % (q - 1), i % (q - 1))}, {((q + 1) * i) % N}
    if chi.kind == "principal":
        i, j = chi.params
        return (i + j) % (q - 1), {(i, j), (j, i)}, None
    if chi.kind == "cuspidal":
        j, jq = chi.params
        return j % (q - 1), None, {j % N, jq % N}
    raise ValueError(f"unknown character kind {chi.kind!r}")


def is_generic_tuple(chars: Sequence[Character]) -> bool:
    """Genericity of a tuple of irreducible characters of GL_1 or GL_2."""
    if not chars:
        raise ValueError("empty tuple")
    tids = {c.table_id for c in chars}
    if len(tids) != 1:
        raise MixedTablesError("characters come from different tables")
    n, q = tids.pop()
    N = q * q - 1
    data = [_restrictions(c, q, n) for c in chars]
    # Z_G: the product must be trivial
    if sum(d[0] for d in data) % (q - 1):
        return False
    if n == 1:
        return True
    # split torus, every choice of Weyl conjugates
    if all(d[1] is not None for d in data):
        for combo in product(*(sorted(d[1]) for d in data)):
            e1 = sum(x for x, _ in combo) % (q - 1)
            e2 = sum(y for _, y in combo) % (q - 1)
            if e1 == 0 and e2 == 0:
                return False
    # nonsplit torus, every choice of Frobenius conjugates
    if all(d[2] is not None for d in data):
        for combo in product(*(sorted(d[2]) for d in data)):
            if sum(combo) % N == 0:
                return False
    return True


def find_generic_tuple(table: CharacterTable, types: Sequence[TypeT]) -> Optional[Tuple[Character, ...]]:
    """First generic tuple of the given types, in table order."""
    pools = [table.characters_of_type(t) for t in types]
    if any(not p for p in pools):
        return None
    for combo in product(*pools):
        if is_generic_tuple(combo):
            return combo
    return None


def all_generic_tuples(table: CharacterTable, types: Sequence[TypeT]):
    pools = [table.characters_of_type(t) for t in types]
    for combo in product(*pools):
        if is_generic_tuple(combo):
            yield combo


# ---------------------------------------------------------------------------
# multiplicities

def _gr_mul(a: GroupRing, b, N: int) -> GroupRing:
    out: GroupRing = {}
    for e1, c1 in a.items():
        for e2, c2 in b:
            e = (e1 + e2) % N
            out[e] = out.get(e, 0) + c1 * c2
    return out


def oracle_multiplicity(chars: Sequence[Character], g: int) -> int:
    """<Lambda (x) X_1 (x) ... (x) X_k, 1> by summing over conjugacy classes.

    Lambda(x) = q^(g dim C_G(x)).  Raises ArithmeticError when the result is
    not a rational integer.
    """
    tids = {c.table_id for c in chars}
    if len(tids) != 1:
        raise MixedTablesError("characters come from different tables")
    n, q = tids.pop()
    table = build_table(n, q)
    N = table.N
    total: GroupRing = {}
    for idx, cl in enumerate(table.classes):
        acc: GroupRing = {0: cl.size * q ** (g * cl.centralizer_dim)}
        for chi in chars:
            acc = _gr_mul(acc, chi.values[idx], N)
            if not acc:
                break
        for e, c in acc.items():
            total[e] = total.get(e, 0) + c
    val = CycloElement.from_exponents(N, total.items())
    if not val.is_rational():
        raise ArithmeticError(f"multiplicity is not rational: {val}")
    r = val.to_rational() / table.group_order
    if r.denominator != 1:
        raise ArithmeticError(f"multiplicity is not an integer: {r}")
    return int(r)


def inner_product(table: CharacterTable, a: Character, b: Character) -> Fraction:
    """<a, b> = |G|^-1 sum_x a(x) conj(b(x))."""
    N = table.N
    total: GroupRing = {}
    for idx, cl in enumerate(table.classes):
        conj_b = tuple(((-e) % N, c) for e, c in b.values[idx])
        prod_ = _gr_mul({e: c * cl.size for e, c in a.values[idx]}, conj_b, N)
        for e, c in prod_.items():
            total[e] = total.get(e, 0) + c
    val = CycloElement.from_exponents(N, total.items())
    return val.to_rational() / table.group_order


def oracle_vs_formula(mt: MultiType, q0: int, every_tuple: bool = False) -> dict:
    """Compare H_omega(q0) with a brute-force multiplicity for n <= 2."""
    from ..types import h_omega

    if mt.n > 2:
        raise UnsupportedQError("oracle supports n <= 2")
    table = build_table(mt.n, q0)
    chosen = find_generic_tuple(table, mt.types)
    if chosen is None:
        raise InsufficientQError(f"no generic tuple of type {mt} at q={q0}")
    formula = h_omega(mt)(q0)
    oracle = oracle_multiplicity(chosen, mt.g)
    report = {
        "multitype": str(mt),
        "q": q0,
        "formula": formula,
        "oracle": oracle,
        "match": formula == oracle,
        "characters": [f"{c.kind}{list(c.params)}" for c in chosen],
    }
    if every_tuple:
        values = {oracle_multiplicity(c, mt.g) for c in all_generic_tuples(table, mt.types)}
        report["all_values"] = sorted(values)
        report["match"] = report["match"] and values == {formula}
    return report


def minimal_q(mt: MultiType, candidates: Sequence[int] = SUPPORTED_Q) -> Optional[int]:
    """Smallest supported q admitting a generic tuple of type mt."""
    for q in candidates:
        try:
            table = build_table(mt.n, q)
        except UnsupportedQError:
            continue
        if find_generic_tuple(table, mt.types) is not None:
            return q
    return None


__all__ = [
    "SUPPORTED_Q",
    "Character",
    "CharacterTable",
    "ConjClass",
    "InsufficientQError",
    "MixedTablesError",
    "UnsupportedQError",
    "all_generic_tuples",
    "build_table",
    "build_table_gl1",
    "build_table_gl2",
    "find_generic_tuple",
    "inner_product",
    "is_generic_tuple",
    "minimal_q",
    "oracle_multiplicity",
    "oracle_vs_formula",
]
