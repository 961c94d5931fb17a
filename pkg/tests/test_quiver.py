from itertools import product

import numpy as np
import pytest

from tensormult.quiver import (
    CometQuiver,
    DimVector,
    RootClass,
    build_quiver,
    classify_root,
    classify_vector,
    d_omega,
    leg_dimensions,
    quiver_summary,
    simple_reflection,
    tits_data,
)
from tensormult.types import MultiType, TypeT, types_of_size


def T(*pairs):
    return TypeT.of(*pairs)


def _box(qv, bound):
    bounds = [bound] * qv.num_vertices if isinstance(bound, int) else bound
    for v in product(*(range(b + 1) for b in bounds)):
        if any(v):
            yield np.array(v)


@pytest.mark.parametrize(
    "legs,bound,count",
    [((1, 1), 1, 6), ((2,), 1, 6), ((1, 1, 1), 2, 12), ((2, 2, 1), 3, 36), ((1, 2, 3), (4, 2, 3, 2, 3, 2, 1), 63)],
)
def test_dynkin_positive_root_counts(legs, bound, count):
    # A3, A3, D4, E6, E7 (E7 boxed by its highest root): real roots are exactly the vectors of norm 2
    qv = CometQuiver(0, legs)
    C = qv.cartan()
    real = norm2 = 0
    for v in _box(qv, bound):
        rc = classify_vector(C, qv.loops(), v)
        assert rc != RootClass.IMAGINARY
        real += rc == RootClass.REAL
        if int(v @ C @ v) == 2:
            norm2 += 1
            assert rc == RootClass.REAL
    assert real == norm2 == count


def test_affine_e6_roots():
    qv = CometQuiver(0, (2, 2, 2))
    C = qv.cartan()
    delta = np.array([3, 2, 1, 2, 1, 2, 1])
    assert not (C @ delta).any()
    imag = [v for v in _box(qv, 3) if classify_vector(C, qv.loops(), v) == RootClass.IMAGINARY]
    assert len(imag) == 1 and (imag[0] == delta).all()


def test_cartan_matrix():
    qv = CometQuiver(2, (2, 1))
    C = qv.cartan()
    assert (C == C.T).all()
    assert C[0, 0] == -2
    assert list(np.diag(C)[1:]) == [2, 2, 2]
    assert sorted(qv.edges()) == [(0, 1), (0, 3), (1, 2)]


def test_single_vertex():
    for g, v, pairing, p in [(0, 1, 2, 0), (1, 3, 0, 1), (2, 1, -2, 2)]:
        qv = CometQuiver(g, ())
        data = tits_data(qv, [v])
        assert data["pairing"] == pairing and data["p_of"] == p
    assert classify_root(CometQuiver(0, ()), [1]) == RootClass.REAL
    assert classify_root(CometQuiver(0, ()), [2]) == RootClass.NOT_ROOT
    for m in range(1, 5):
        assert classify_root(CometQuiver(1, ()), [m]) == RootClass.IMAGINARY
    assert d_omega(CometQuiver(1, ()), [1]) == 2


def test_d4():
    qv = CometQuiver(0, (1, 1, 1))
    assert classify_root(qv, [2, 1, 1, 1]) == RootClass.REAL
    assert classify_root(qv, [2, 1, 1, 0]) == RootClass.NOT_ROOT
    assert classify_root(qv, [0, 1, 0, 1]) == RootClass.NOT_ROOT  # disconnected support


def test_e6_anchors():
    three = T((1, (3,)))
    qv, v = build_quiver(MultiType((three,) * 3, 0))
    assert qv.legs == (2, 2, 2) and v == DimVector(3, ((2, 1),) * 3)
    data = tits_data(qv, v)
    assert data["pairing"] == 0 and data["p_of"] == 1
    assert classify_root(qv, v) == RootClass.IMAGINARY and d_omega(qv, v) == 2
    qv, v = build_quiver(MultiType((T((1, (2, 1))), three, three), 0))
    assert v.legs == ((1,), (2, 1), (2, 1))
    assert classify_root(qv, v) == RootClass.REAL and d_omega(qv, v) == 0


def test_leg_dimensions():
    for n in range(1, 7):
        assert leg_dimensions(T((1, (1,) * n))) == ()
        assert leg_dimensions(T((1, (n,)))) == tuple(range(n - 1, 0, -1))
    # degree repeats the diagram: (2,(1)) has two columns of length 1
    assert leg_dimensions(T((2, (1,)))) == (1,)
    assert leg_dimensions(T((1, (2, 1)), (2, (1,)))) == (3, 2, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_legs_strictly_decrease(n):
    for w in types_of_size(n):
        _, v = build_quiver(MultiType((w,), 0))
        assert v.is_strictly_decreasing()
        assert all(x < n for x in v.legs[0])


def test_reflections_preserve_form_and_class():
    three = T((1, (3,)))
    qv, v = build_quiver(MultiType((T((1, (2, 1))), three, three), 0))
    C = qv.cartan()
    x = v.flat()
    for i in range(1, qv.num_vertices):
        y = simple_reflection(qv, x, i)
        assert int(y @ C @ y) == int(x @ C @ x)
        if (y >= 0).all() and y.any():
            assert classify_vector(C, qv.loops(), y) == classify_vector(C, qv.loops(), x)


def test_no_reflection_at_loop_vertex():
    with pytest.raises(ValueError):
        simple_reflection(CometQuiver(1, (1,)), [1, 1], 0)


def test_shape_mismatch():
    with pytest.raises(ValueError):
        tits_data(CometQuiver(0, (1,)), [1, 1, 1])
    with pytest.raises(ValueError):
        classify_vector(np.eye(2, dtype=int) * 2, [0, 0], [0, 0])


def test_summary():
    s = quiver_summary(MultiType((T((1, (3,))),) * 3, 0))
    assert s == {"legs": [[2, 1]] * 3, "loops": 0, "center": 3, "root_class": "imaginary", "d_omega": 2}
