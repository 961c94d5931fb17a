"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

import time
from functools import lru_cache

import pytest

from tensormult import checks

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # running as a script from elsewhere
    ACCEPTANCE_LINES = []


def _report(num, title, fails, elapsed, budget, detail=""):
    ok = not fails and elapsed < budget
    line = f"{'PASS' if ok else 'FAIL'}  [{num}] {title}  ({elapsed:.1f} s, budget {budget:.0f} s{detail})"
    print(line)
    ACCEPTANCE_LINES.append(line)
    for f in fails[:10]:
        print(f"        {f}")
    return ok


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


@lru_cache(maxsize=None)
def _main_sweep():
    # every ordered multitype with n <= 4, k <= 3, g <= 1
    return _timed(lambda: checks.sweep_shape_and_roots(range(1, 5), range(1, 4), (0, 1), ordered=True))


def test_1_paper_value_regression():
    fails, dt = _timed(checks.paper_regression)
    assert _report(1, "paper values for unipotent triples at n=3", fails, dt, 5)


def test_2_quiver_anchors():
    fails, dt = _timed(checks.quiver_anchors)
    assert _report(2, "affine E6 / E6 quiver anchors", fails, dt, 1)


def test_3_oracle_equivalence():
    (checked, skipped, fails), dt = _timed(
        lambda: checks.oracle_sweep(2, (2, 3, 4), (0, 1), (3, 5))
    )
    detail = f"; {checked} compared, {skipped} without a generic tuple"
    assert checked > 0
    assert _report(3, "GL_2 brute force equals H(q0) at q0 in {3,5}", fails, dt, 300, detail)


def test_4_polynomial_shape():
    (count, shape, _), dt = _main_sweep()
    assert _report(4, "monic integer H of degree d/2, nonnegative when split", shape, dt, 600, f"; {count} multitypes")


def test_5_root_correspondence():
    (count, _, roots), dt = _main_sweep()
    assert _report(5, "H != 0 iff root, H = 1 iff real (g = 0)", roots, dt, 600, f"; {count} multitypes")


def test_6_positive_genus():
    fails, dt = _timed(lambda: checks.imaginary_for_positive_genus(range(1, 4), range(1, 4), (1, 2), ordered=True))
    assert _report(6, "g >= 1: imaginary roots and H != 0", fails, dt, 120)


def test_7_algebraic_core():
    def run():
        fails = []
        fails += checks.exp_log_roundtrip(N=6)
        fails += checks.adams_composition(N=6)
        fails += checks.sn_orthogonality(6)
        fails += checks.kostka_spot_values(6)
        fails += checks.hall_littlewood_at_one(6)
        fails += checks.gl2_orthogonality((3, 5, 7))
        return fails

    fails, dt = _timed(run)
    assert _report(7, "Exp/Log, Adams, S_n, Kostka-Foulkes, H~(x;1), GL_2 tables", fails, dt, 120)


def test_8_omega_reconstruction():
    fails, dt = _timed(lambda: checks.omega_reconstruction(N=3, k_values=(1, 2, 3), g_values=(0, 1)))
    assert _report(8, "semisimple, nilpotent and power formulas rebuild Omega to T^3", fails, dt, 120)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
