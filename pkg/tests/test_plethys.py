import random
from fractions import Fraction

import pytest

from tensormult.coeffring import Q
from tensormult.plethys import (
    SymSeries,
    adams,
    cauchy_omega,
    mobius,
    pleth_exp,
    pleth_log,
)
from tensormult.symfunc import power, schur
from tensormult.checks import random_series

N = 5


def geometric(N):
    # 1 + T + T^2 + ... in k = 0 alphabets
    return SymSeries(0, N, [{(): 1} for _ in range(N + 1)])


def t_only(N):
    levels = [dict() for _ in range(N + 1)]
    levels[1][()] = 1
    return SymSeries(0, N, levels)


def test_mobius():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_exp_of_t_is_geometric():
    assert pleth_exp(t_only(N)) == geometric(N)


def test_log_of_geometric_is_t():
    assert pleth_log(geometric(N)) == t_only(N)


def test_trivial_cases():
    assert pleth_exp(SymSeries.zero(1, N)) == SymSeries.one(1, N)
    assert pleth_log(SymSeries.one(1, N)).is_zero()


def test_constant_term_errors():
    with pytest.raises(ValueError):
        pleth_log(SymSeries.scalar(2, 1, N))
    with pytest.raises(ValueError):
        pleth_exp(SymSeries.one(1, N))


def test_adams_examples():
    f = SymSeries.from_symfuncs(1, [power((1,))], 1, N)
    assert adams(2, f) == SymSeries.from_symfuncs(2, [power((2,))], 1, N)
    assert adams(1, f) == f
    g = SymSeries.from_symfuncs(1, [power((1,))], Q, N)
    assert adams(2, g) == SymSeries.from_symfuncs(2, [power((2,))], Q ** 2, N)


def test_log_exp_of_p1():
    f = SymSeries.from_symfuncs(1, [power((1,))], 1, N)
    assert pleth_log(pleth_exp(f)) == f


def test_exp_of_p1_is_sum_of_complete():
    # Exp(p_1 T) = sum_m h_m T^m
    from tensormult.symfunc import complete

    f = SymSeries.from_symfuncs(1, [power((1,))], 1, N)
    want = SymSeries.one(1, N)
    for m in range(1, N + 1):
        want = want + SymSeries.from_symfuncs(m, [complete((m,))], 1, N)
    assert pleth_exp(f) == want


@pytest.mark.parametrize("seed", [3, 4])
def test_exp_is_homomorphism(seed):
    rng = random.Random(seed)
    f = random_series(rng, 1, 4, density=0.6)
    g = random_series(rng, 1, 4, density=0.6)
    assert pleth_exp(f + g) == pleth_exp(f) * pleth_exp(g)


@pytest.mark.parametrize("seed,k", [(5, 1), (6, 2)])
def test_round_trip(seed, k):
    rng = random.Random(seed)
    f = random_series(rng, k, 5, density=0.7 if k == 1 else 0.2)
    assert pleth_log(pleth_exp(f)) == f


def test_round_trip_detects_perturbation():
    rng = random.Random(7)
    f = random_series(rng, 1, 4, density=0.6)
    h = pleth_exp(f)
    bumped = h + SymSeries.from_symfuncs(4, [schur((2, 2))], Fraction(1, 7), 4)
    assert pleth_log(bumped) != f


def test_series_product_truncates():
    f = SymSeries.from_symfuncs(3, [power((3,))], 1, 4)
    assert (f * f).is_zero()


def test_omega_low_terms():
    om = cauchy_omega(0, 1, 3)
    assert om.constant() == 1
    want = SymSeries.from_symfuncs(1, [schur((1,))], 1 / (Q - 1), 3)
    assert om.truncate(1) == SymSeries.one(1, 1) + want.truncate(1)
    om2 = cauchy_omega(1, 2, 2)
    want2 = SymSeries.from_symfuncs(1, [schur((1,)), schur((1,))], Q / (Q - 1), 2)
    assert om2.truncate(1) == SymSeries.one(2, 1) + want2.truncate(1)
    for g in (0, 1, 2):
        for k in (1, 2, 3):
            assert cauchy_omega(g, k, 1).constant() == 1
