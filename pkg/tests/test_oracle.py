from collections import Counter
from itertools import product

import pytest

from tensormult.coeffring import IntPoly
from tensormult.oracle import (
    InsufficientQError,
    MixedTablesError,
    UnsupportedQError,
    build_table,
    build_table_gl1,
    build_table_gl2,
    inner_product,
    is_generic_tuple,
    minimal_q,
    oracle_multiplicity,
    oracle_vs_formula,
)
from tensormult.oracle.cyclotomic import CycloElement, cyclotomic_poly
from tensormult.types import MultiType, TypeT, h_omega

LIN = TypeT.of((1, (1, 1)))
ST = TypeT.of((1, (2,)))
PS = TypeT.of((1, (1,)), (1, (1,)))
CU = TypeT.of((2, (1,)))


def _gl2(p):
    for a, b, c, d in product(range(p), repeat=4):
        if (a * d - b * c) % p:
            yield (a, b, c, d)


def _mul(x, y, p):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def _inv(x, p):
    a, b, c, d = x
    det = pow((a * d - b * c) % p, -1, p)
    return ((d * det) % p, (-b * det) % p, (-c * det) % p, (a * det) % p)


def _classes(p):
    group = list(_gl2(p))
    seen, out = set(), []
    for x in group:
        if x in seen:
            continue
        orbit = {_mul(_mul(g, x, p), _inv(g, p), p) for g in group}
        seen |= orbit
        out.append(orbit)
    return out


def _kind(x, p):
    a, b, c, d = x
    tr, det = (a + d) % p, (a * d - b * c) % p
    roots = [t for t in range(p) if (t * t - tr * t + det) % p == 0]
    if not roots:
        return "anisotropic"
    if len(roots) == 2:
        return "split"
    return "central" if b == 0 and c == 0 and a == d else "nonsemisimple"


def _fixed_lines(x, p):
    lines = [(1, t) for t in range(p)] + [(0, 1)]
    a, b, c, d = x
    n = 0
    for u, v in lines:
        w1, w2 = (a * u + b * v) % p, (c * u + d * v) % p
        if (u * w2 - v * w1) % p == 0:
            n += 1
    return n


@pytest.mark.parametrize("p", [3, 5])
def test_class_sizes_brute_force(p):
    brute = Counter((_kind(next(iter(c)), p), len(c)) for c in _classes(p))
    table = build_table_gl2(p)
    assert Counter((c.kind, c.size) for c in table.classes) == brute
    assert sum(c.size for c in table.classes) == table.group_order == len(list(_gl2(p)))


def test_steinberg_is_permutation_character_minus_one():
    p = 3
    table = build_table_gl2(p)
    st = next(c for c in table.characters if c.kind == "steinberg" and c.params == (0,))
    by_kind = {}
    for idx, cl in enumerate(table.classes):
        by_kind.setdefault(cl.kind, set()).add(table.value(st, idx).to_rational())
    for orbit in _classes(p):
        x = next(iter(orbit))
        assert by_kind[_kind(x, p)] == {_fixed_lines(x, p) - 1}


@pytest.mark.parametrize("q", [3, 5, 7])
def test_table_shape_and_orthogonality(q):
    t = build_table_gl2(q)
    assert len(t.characters) == len(t.classes) == q * q - 1
    degrees = Counter(c.degree for c in t.characters)
    assert degrees == {1: q - 1, q: q - 1, q + 1: (q - 1) * (q - 2) // 2, q - 1: q * (q - 1) // 2}
    assert sum(c.degree ** 2 for c in t.characters) == t.group_order
    for a in t.characters[:: max(1, len(t.characters) // 12)]:
        for b in t.characters:
            assert inner_product(t, a, b) == (1 if a is b else 0)


def test_unsupported_q():
    for q in (2, 4, 9, 11):
        with pytest.raises(UnsupportedQError):
            build_table_gl2(q)
    with pytest.raises(UnsupportedQError):
        build_table(3, 3)


def test_cyclotomic_basics():
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    z = CycloElement.root(8, 1)
    assert z * z * z * z == -1
    assert z * z.conjugate() == 1
    s = sum((CycloElement.root(8, e) for e in range(8)), CycloElement.zero(8))
    assert s == 0


# ---------------------------------------------------------------------------
# genericity


def _chars(t, kind, *params):
    return next(c for c in t.characters if c.kind == kind and c.params == params)


def test_generic_example_order_two():
    # three twists whose product generates the subgroup of order 2 = n
    t = build_table_gl2(5)
    a = [_chars(t, "steinberg", i) for i in (0, 0, 2)]
    assert is_generic_tuple(a)
    lin = [_chars(t, "linear", i) for i in (0, 1, 1)]
    assert is_generic_tuple(lin)


def test_trivial_twists_are_not_generic():
    t = build_table_gl2(5)
    assert not is_generic_tuple([_chars(t, "steinberg", 0)] * 3)
    assert not is_generic_tuple([_chars(t, "linear", 0)] * 3)


def test_nontrivial_central_product_is_not_generic():
    t = build_table_gl2(5)
    assert not is_generic_tuple([_chars(t, "linear", 1), _chars(t, "linear", 0)])


def test_mixed_tables():
    with pytest.raises(MixedTablesError):
        is_generic_tuple([build_table_gl2(3).characters[0], build_table_gl2(5).characters[0]])


# ---------------------------------------------------------------------------
# multiplicities


@pytest.mark.parametrize("q", [3, 5, 7])
def test_gl1_pair_genus_one(q):
    t = build_table_gl1(q)
    chars = [t.characters[1], t.characters[q - 2]]
    assert is_generic_tuple(chars)
    assert oracle_multiplicity(chars, 1) == q


@pytest.mark.parametrize("g", [0, 1, 2])
def test_trivial_character_against_brute_force(g):
    # <Lambda, 1> with Lambda(x) = q^{g dim C(x)}; q^{dim C(x)} counts all commuting matrices
    p = 3
    t = build_table_gl2(p)
    triv = _chars(t, "linear", 0)
    allmat = list(product(range(p), repeat=4))
    total = 0
    for x in _gl2(p):
        commuting = sum(1 for y in allmat if _mul(x, y, p) == _mul(y, x, p))
        total += commuting ** g
    assert total % t.group_order == 0
    assert oracle_multiplicity([triv], g) == total // t.group_order


@pytest.mark.parametrize("q", [3, 5])
def test_three_steinberg(q):
    rep = oracle_vs_formula(MultiType((ST,) * 3, 0), q)
    assert rep["match"] and rep["oracle"] == 1


@pytest.mark.parametrize("q", [5, 7])
def test_four_cuspidal(q):
    mt = MultiType((CU,) * 4, 0)
    rep = oracle_vs_formula(mt, q)
    assert rep["match"]
    assert h_omega(mt).degree == 1 and h_omega(mt).lc == 1


def test_four_cuspidal_interpolation():
    mt = MultiType((CU,) * 4, 0)
    v5 = oracle_vs_formula(mt, 5)["oracle"]
    v7 = oracle_vs_formula(mt, 7)["oracle"]
    slope = (v7 - v5) // 2
    assert IntPoly([v5 - 5 * slope, slope]) == h_omega(mt)


def test_cuspidal_pair_genus_one():
    rep = oracle_vs_formula(MultiType((CU, CU), 1), 3)
    assert rep["match"]


@pytest.mark.parametrize(
    "types,g,q",
    [((ST, ST, PS), 0, 5), ((CU, CU, ST), 0, 3), ((PS, PS), 1, 5), ((LIN, ST, CU, CU), 0, 3)],
)
def test_value_independent_of_the_chosen_tuple(types, g, q):
    rep = oracle_vs_formula(MultiType(types, g), q, every_tuple=True)
    assert rep["match"], rep
    assert len(rep["all_values"]) == 1


def test_insufficient_q():
    # at q = 3 every 4-tuple of cuspidal characters has a vanishing sub-sum on the nonsplit torus
    four = MultiType((CU,) * 4, 0)
    with pytest.raises(InsufficientQError):
        oracle_vs_formula(four, 3)
    assert minimal_q(four) == 5
    rep = oracle_vs_formula(MultiType((LIN,), 0), 3)
    assert rep["match"] and rep["oracle"] == 0  # sign of det is generic on its own


def test_single_cuspidal():
    rep = oracle_vs_formula(MultiType((CU,), 0), 3)
    assert rep["match"] and rep["oracle"] == 0


def test_minimal_q():
    assert minimal_q(MultiType((ST,) * 3, 0)) == 3
    assert minimal_q(MultiType((PS, PS, PS), 0)) in (3, 5, 7)


def test_n_three_is_rejected():
    with pytest.raises(UnsupportedQError, match="n <= 2"):
        oracle_vs_formula(MultiType((TypeT.of((1, (3,))),) * 3, 0), 3)
