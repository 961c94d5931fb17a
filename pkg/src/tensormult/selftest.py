"""Invariant suites behind ``tensormult selftest``."""

from __future__ import annotations

import time
from typing import Callable, List, Tuple

from . import checks

Check = Tuple[str, Callable[[], List[str]]]


def _sweep(n_values, k_values, g_values, which: int):
    def run():
        _, shape, roots = checks.sweep_shape_and_roots(n_values, k_values, g_values)
        return (shape, roots)[which]

    return run


def _oracle(k_values, g_values, q_values):
    def run():
        _, _, fails = checks.oracle_sweep(2, k_values, g_values, q_values)
        return fails

    return run


QUICK: List[Check] = [
    ("paper_value_regression", checks.paper_regression),
    ("quiver_anchors", checks.quiver_anchors),
    ("sn_character_orthogonality", lambda: checks.sn_orthogonality(5)),
    ("kostka_foulkes_spot_values", lambda: checks.kostka_spot_values(4)),
    ("hall_littlewood_at_q_1", lambda: checks.hall_littlewood_at_one(4)),
    ("exp_log_roundtrip", lambda: checks.exp_log_roundtrip(N=4, trials=2)),
    ("adams_composition", lambda: checks.adams_composition(N=4)),
    ("gl2_table_orthogonality", lambda: checks.gl2_orthogonality((3,))),
    ("polynomial_shape", _sweep(range(1, 4), range(1, 4), (0, 1), 0)),
    ("root_correspondence", _sweep(range(1, 4), range(1, 4), (0, 1), 1)),
    ("oracle_equivalence", _oracle((2, 3), (0, 1), (3,))),
]

FULL: List[Check] = [
    ("paper_value_regression", checks.paper_regression),
    ("quiver_anchors", checks.quiver_anchors),
    ("sn_character_orthogonality", lambda: checks.sn_orthogonality(6)),
    ("kostka_foulkes_spot_values", lambda: checks.kostka_spot_values(5)),
    ("hall_littlewood_at_q_1", lambda: checks.hall_littlewood_at_one(6)),
    ("exp_log_roundtrip", lambda: checks.exp_log_roundtrip(N=6)),
    ("adams_composition", lambda: checks.adams_composition(N=6)),
    ("gl2_table_orthogonality", lambda: checks.gl2_orthogonality((3, 5, 7))),
    ("omega_reconstruction", checks.omega_reconstruction),
    ("polynomial_shape", _sweep(range(1, 5), range(1, 4), (0, 1), 0)),
    ("root_correspondence", _sweep(range(1, 5), range(1, 4), (0, 1), 1)),
    (
        "positive_genus_imaginary",
        lambda: checks.imaginary_for_positive_genus(range(1, 4), range(1, 4), (1, 2)),
    ),
    ("oracle_equivalence", _oracle((2, 3, 4), (0, 1), (3, 5))),
]


def run(depth: str = "quick", out=print) -> bool:
    suite = {"quick": QUICK, "full": FULL}[depth]
    ok = True
    start = time.perf_counter()
    for name, fn in suite:
        t = time.perf_counter()
        try:
            fails = fn()
        except Exception as exc:  # a crash is a failed invariant
            fails = [f"{type(exc).__name__}: {exc}"]
        status = "PASS" if not fails else "FAIL"
        out(f"{status}  {name}  ({time.perf_counter() - t:.2f} s)")
        for f in fails[:5]:
            out(f"      {f}")
        ok = ok and not fails
    out(f"{'all passed' if ok else 'FAILURES'} in {time.perf_counter() - start:.1f} s")
    return ok
