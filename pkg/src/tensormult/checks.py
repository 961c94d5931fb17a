"""Named invariant sweeps.  Each returns a list of human-readable failures.

Used by the ``selftest`` subcommand and by the acceptance suite.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from typing import List, Sequence, Tuple

from .coeffring import IntPoly, RatFunc
from .partitions import conjugate, n_of, partitions, z_of
from .plethys import SymSeries, adams, cauchy_omega, pleth_exp, pleth_log
from .quiver import RootClass, build_quiver, classify_root, d_omega
from .symfunc import (
    SymFunc,
    complete,
    hall_littlewood_transformed,
    kostka_foulkes,
    monomial,
    schur,
    sn_character,
)
from .types import (
    MultiType,
    TypeT,
    h_omega,
    multitypes,
    nilpotent_type,
    r_omega,
    regular_semisimple_type,
    split_semisimple_type,
)


def _unipotent_triple(a, b, c) -> MultiType:
    return MultiType(tuple(TypeT(((1, la),)) for la in (a, b, c)), 0)


def paper_regression() -> List[str]:
    """n=3, k=3, g=0 unipotent triples: q for (3)^3, 1 for (2,1) placements, else 0."""
    fails = []
    q = IntPoly([0, 1])
    for a, b, c in product(partitions(3), repeat=3):
        trip = (a, b, c)
        if trip == ((3,),) * 3:
            want = q
        elif sorted(trip) == [(2, 1), (3,), (3,)]:
            want = IntPoly([1])
        else:
            want = IntPoly()
        got = h_omega(_unipotent_triple(a, b, c))
        if got != want:
            fails.append(f"{trip}: got {got}, expected {want}")
    return fails


def quiver_anchors() -> List[str]:
    fails = []
    mt = _unipotent_triple((3,), (3,), (3,))
    qv, v = build_quiver(mt)
    if v.center != 3 or v.legs != ((2, 1),) * 3:
        fails.append(f"E6~ dimension vector wrong: {v}")
    if classify_root(qv, v) != RootClass.IMAGINARY or d_omega(qv, v) != 2:
        fails.append("E6~ case should be imaginary with d = 2")
    mt = _unipotent_triple((2, 1), (3,), (3,))
    qv, v = build_quiver(mt)
    if v.legs != ((1,), (2, 1), (2, 1)):
        fails.append(f"E6 dimension vector wrong: {v}")
    if classify_root(qv, v) != RootClass.REAL or d_omega(qv, v) != 0:
        fails.append("E6 case should be real with d = 0")
    return fails


def sweep_shape_and_roots(
    n_values: Sequence[int], k_values: Sequence[int], g_values: Sequence[int], ordered=False
) -> Tuple[int, List[str], List[str]]:
    """Return (count, shape failures, root-correspondence failures)."""
    shape_fail, root_fail = [], []
    count = 0
    for n in n_values:
        for k in k_values:
            for g in g_values:
                for mt in multitypes(n, k, g, ordered=ordered):
                    count += 1
                    h = h_omega(mt)
                    qv, v = build_quiver(mt)
                    rc = classify_root(qv, v)
                    d = d_omega(qv, v)
                    if not h.is_zero():
                        if h.lc != 1 or 2 * h.degree != d:
                            shape_fail.append(f"{mt}: H = {h}, d = {d}")
                        elif all(t.is_split for t in mt.types) and any(c < 0 for c in h.coeffs):
                            shape_fail.append(f"{mt}: split but H = {h}")
                    if h.is_zero() != (rc == RootClass.NOT_ROOT):
                        root_fail.append(f"{mt}: H = {h}, root class {rc.value}")
                    elif g == 0 and (h == 1) != (rc == RootClass.REAL):
                        root_fail.append(f"{mt}: H = {h}, root class {rc.value}")
    return count, shape_fail, root_fail


def imaginary_for_positive_genus(
    n_values: Sequence[int], k_values: Sequence[int], g_values: Sequence[int], ordered=False
) -> List[str]:
    fails = []
    for n in n_values:
        for k in k_values:
            for g in g_values:
                for mt in multitypes(n, k, g, ordered=ordered):
                    qv, v = build_quiver(mt)
                    if classify_root(qv, v) != RootClass.IMAGINARY:
                        fails.append(f"{mt}: not imaginary")
                    elif h_omega(mt).is_zero():
                        fails.append(f"{mt}: H vanishes")
    return fails


def oracle_sweep(n: int, k_values, g_values, q_values) -> Tuple[int, int, List[str]]:
    """Return (checked, skipped for lack of generic tuples, mismatches)."""
    from .oracle import InsufficientQError, oracle_vs_formula

    checked = skipped = 0
    fails = []
    for q0 in q_values:
        for k in k_values:
            for g in g_values:
                for mt in multitypes(n, k, g):
                    try:
                        rep = oracle_vs_formula(mt, q0)
                    except InsufficientQError:
                        skipped += 1
                        continue
                    checked += 1
                    if not rep["match"]:
                        fails.append(f"q={q0} {mt}: formula {rep['formula']} oracle {rep['oracle']}")
    return checked, skipped, fails


# ---------------------------------------------------------------------------
# algebraic core

def random_series(rng: random.Random, k: int, N: int, constant=0, density=0.5) -> SymSeries:
    """Sparse series with small rational coefficients, some involving q."""
    levels = [dict() for _ in range(N + 1)]
    if constant:
        levels[0][((),) * k] = constant
    q = RatFunc.q()
    for m in range(1, N + 1):
        for key in product(partitions(m), repeat=k):
            if rng.random() < density:
                c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                if rng.random() < 0.3:
                    c = RatFunc.coerce(c) * q + rng.randint(-1, 1)
                levels[m][key] = c
    return SymSeries(k, N, levels)


def exp_log_roundtrip(N: int = 6, trials: int = 4, seed: int = 1) -> List[str]:
    rng = random.Random(seed)
    fails = []
    for t in range(trials):
        k = 1 + t % 2
        f = random_series(rng, k, N, density=0.8 if k == 1 else 0.25)
        if pleth_log(pleth_exp(f)) != f:
            fails.append(f"Log(Exp f) != f (trial {t}, k={k})")
        one = SymSeries.one(k, N) + f
        if pleth_exp(pleth_log(one)) != one:
            fails.append(f"Exp(Log(1+f)) != 1+f (trial {t}, k={k})")
    return fails


def adams_composition(N: int = 6, seed: int = 2) -> List[str]:
    rng = random.Random(seed)
    fails = []
    for k in (1, 2, 3):
        f = random_series(rng, k, N, constant=1, density=0.05 if k == 3 else 0.3)
        for m, n in ((2, 2), (2, 3), (3, 2)):
            if adams(m, adams(n, f)) != adams(m * n, f):
                fails.append(f"psi_{m} psi_{n} != psi_{m*n} (k={k})")
    return fails


def sn_orthogonality(n_max: int = 6) -> List[str]:
    fails = []
    for n in range(1, n_max + 1):
        ps = partitions(n)
        for la in ps:
            for mu in ps:
                s = sum(
                    Fraction(sn_character(la, r) * sn_character(mu, r), z_of(r)) for r in ps
                )
                if s != (la == mu):
                    fails.append(f"<chi^{la}, chi^{mu}> = {s}")
    return fails


def kostka_spot_values(n_max: int = 5) -> List[str]:
    fails = []
    if kostka_foulkes((2, 1), (1, 1, 1)) != IntPoly([0, 1, 1]):
        fails.append("K_{(2,1),(1,1,1)} != t + t^2")
    for n in range(1, n_max + 1):
        for la in partitions(n):
            if kostka_foulkes((n,), la) != IntPoly.monomial(n_of(la)):
                fails.append(f"K_{{({n}),{la}}} != t^{n_of(la)}")
    return fails


def hall_littlewood_at_one(n_max: int = 6) -> List[str]:
    fails = []
    for n in range(1, n_max + 1):
        for la in partitions(n):
            at1 = {mu: c for mu, c in hall_littlewood_transformed(la).at_q(1).items()}
            h = complete(la).convert("schur").terms
            want = {mu: c.evaluate(1) for mu, c in h.items()}
            if {m: v for m, v in at1.items() if v} != want:
                fails.append(f"H~_{la}(x;1) != h_{la}")
    return fails


def gl2_orthogonality(q_values=(3, 5, 7)) -> List[str]:
    from .oracle import build_table_gl2, inner_product

    fails = []
    for q0 in q_values:
        t = build_table_gl2(q0)
        if sum(c.size for c in t.classes) != t.group_order:
            fails.append(f"q={q0}: class sizes do not sum to |G|")
        if len(t.characters) != q0 * q0 - 1 or len(t.classes) != q0 * q0 - 1:
            fails.append(f"q={q0}: wrong number of classes or characters")
        for a in t.characters:
            for b in t.characters:
                if inner_product(t, a, b) != (1 if a is b else 0):
                    fails.append(f"q={q0}: <{a.kind}{a.params}, {b.kind}{b.params}> wrong")
        # column orthogonality: sum_chi |chi(x)|^2 = |C_G(x)|
        for idx, cl in enumerate(t.classes):
            tot = sum(
                (t.value(c, idx) * t.value(c, idx).conjugate() for c in t.characters),
                t.value(t.characters[0], idx) * 0,
            )
            if tot != Fraction(t.group_order, cl.size):
                fails.append(f"q={q0}: column orthogonality fails at {cl.kind}{cl.params}")
    return fails


# ---------------------------------------------------------------------------
# Omega from the H families

def _series_from_terms(k: int, N: int, terms) -> SymSeries:
    """Sum of ``c * prod_i f_i(x_i) T^n`` for (n, [f_1..f_k], c) items."""
    acc = SymSeries.zero(k, N)
    for n, factors, c in terms:
        if c:
            acc = acc + SymSeries.from_symfuncs(n, factors, c, N)
    return acc


def omega_reconstruction(N: int = 3, k_values=(1, 2, 3), g_values=(0, 1)) -> List[str]:
    fails = []
    qm1 = RatFunc(IntPoly([-1, 1]))
    for k in k_values:
        for g in g_values:
            omega = cauchy_omega(g, k, N)
            ss, nil, pw = [], [], []
            for n in range(1, N + 1):
                for lams in product(partitions(n), repeat=k):
                    mt_ss = MultiType(tuple(split_semisimple_type(la) for la in lams), g)
                    ss.append((n, [monomial(la) for la in lams], RatFunc.coerce(h_omega(mt_ss)) / qm1))
                    duals = tuple(conjugate(la) for la in lams)
                    mt_n = MultiType(tuple(nilpotent_type(la) for la in duals), g)
                    nil.append((n, [schur(la) for la in lams], RatFunc.coerce(h_omega(mt_n)) / qm1))
                    mt_r = MultiType(tuple(regular_semisimple_type(la) for la in lams), g)
                    z = 1
                    for la in lams:
                        z *= z_of(la)
                    sign = -1 if r_omega(mt_r) % 2 else 1
                    pw.append(
                        (
                            n,
                            [SymFunc.basis_element("power", la) for la in lams],
                            RatFunc.coerce(h_omega(mt_r)) * sign / (qm1 * z),
                        )
                    )
            for name, terms in (("semisimple", ss), ("nilpotent", nil), ("power", pw)):
                if pleth_exp(_series_from_terms(k, N, terms)) != omega:
                    fails.append(f"{name} formula does not rebuild Omega (k={k}, g={g})")
    return fails
