"""Comet-shaped quivers, dimension vectors and Kac root classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .partitions import conjugate
from .types import MultiType, TypeT, generic_exists


class RootClass(str, enum.Enum):
    NOT_ROOT = "not_root"
    REAL = "real"
    IMAGINARY = "imaginary"


@dataclass(frozen=True)
class CometQuiver:
    """k legs glued at a central vertex that carries g loops.

    ``legs[i]`` is the number of vertices on leg i (0 allowed).  Vertex 0 is
    the centre; leg vertices follow leg by leg, nearest the centre first.
    """

    g: int
    legs: Tuple[int, ...]

    @property
    def num_vertices(self) -> int:
        return 1 + sum(self.legs)

    def vertex(self, leg: int, j: int) -> int:
        """Flat index of the j-th vertex (1-based) on ``leg``."""
        if not 1 <= j <= self.legs[leg]:
            raise IndexError(f"leg {leg} has no vertex {j}")
        return 1 + sum(self.legs[:leg]) + j - 1

    def edges(self) -> List[Tuple[int, int]]:
        out = []
        for i, length in enumerate(self.legs):
            prev = 0
            for j in range(1, length + 1):
                v = self.vertex(i, j)
                out.append((prev, v))
                prev = v
        return out

    def loops(self) -> np.ndarray:
        lp = np.zeros(self.num_vertices, dtype=np.int64)
        lp[0] = self.g
        return lp

    def cartan(self) -> np.ndarray:
        C = np.zeros((self.num_vertices,) * 2, dtype=np.int64)
        C[np.diag_indices_from(C)] = 2
        C[0, 0] = 2 - 2 * self.g
        for a, b in self.edges():
            C[a, b] -= 1
            C[b, a] -= 1
        return C


@dataclass(frozen=True)
class DimVector:
    center: int
    legs: Tuple[Tuple[int, ...], ...]

    def flat(self) -> np.ndarray:
        return np.array([self.center] + [x for leg in self.legs for x in leg], dtype=np.int64)

    def shape(self) -> Tuple[int, ...]:
        return tuple(len(leg) for leg in self.legs)

    def is_strictly_decreasing(self) -> bool:
        for leg in self.legs:
            seq = (self.center,) + tuple(leg)
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)) or any(x <= 0 for x in leg):
                return False
        return True


def leg_dimensions(w: TypeT) -> Tuple[int, ...]:
    """Dimensions v_1 > v_2 > ... along the leg of a type (centre excluded)."""
    n = w.size
    cols: List[int] = []
    for d, la in w.pairs:
        cols.extend(conjugate(la) * d)
    dims = []
    v = n
    for c in cols[:-1]:
        v -= c
        dims.append(v)
    return tuple(dims)


def build_quiver(mt: MultiType) -> Tuple[CometQuiver, DimVector]:
    legs = tuple(leg_dimensions(t) for t in mt.types)
    qv = CometQuiver(mt.g, tuple(len(x) for x in legs))
    return qv, DimVector(mt.n, legs)


def _as_flat(qv: CometQuiver, v) -> np.ndarray:
    if isinstance(v, DimVector):
        if v.shape() != qv.legs:
            raise ValueError(f"dimension vector shape {v.shape()} does not fit legs {qv.legs}")
        return v.flat()
    arr = np.asarray(v, dtype=np.int64)
    if arr.shape != (qv.num_vertices,):
        raise ValueError(f"expected {qv.num_vertices} entries, got shape {arr.shape}")
    return arr


def tits_data(qv: CometQuiver, a, b=None) -> dict:
    """Cartan matrix, the pairing (a, b) and p(a) = 1 - (a, a)/2."""
    C = qv.cartan()
    x = _as_flat(qv, a)
    y = x if b is None else _as_flat(qv, b)
    aa = int(x @ C @ x)
    return {"cartan": C, "pairing": int(x @ C @ y), "p_of": 1 - aa // 2}


def d_omega(qv: CometQuiver, v) -> int:
    x = _as_flat(qv, v)
    return 2 - int(x @ qv.cartan() @ x)


def _support_connected(C: np.ndarray, x: np.ndarray) -> bool:
    supp = [i for i in range(len(x)) if x[i] != 0]
    if not supp:
        return False
    seen = {supp[0]}
    stack = [supp[0]]
    sset = set(supp)
    while stack:
        i = stack.pop()
        for j in sset:
            if j not in seen and C[i, j] != 0:
                seen.add(j)
                stack.append(j)
    return seen == sset


def classify_vector(C: np.ndarray, loops: Sequence[int], v) -> RootClass:
    """Kac classification of a non-negative vector for a symmetric Cartan matrix.

    Reflects at loop-free vertices (largest positive (v, e_i) first) until the
    vector is a simple root, lies in the fundamental set, or leaves the
    positive cone.
    """
    x = np.array(v, dtype=np.int64)
    if (x < 0).any() or not x.any():
        raise ValueError("classify_vector needs a nonzero non-negative vector")
    C = np.asarray(C, dtype=np.int64)
    free = [i for i in range(len(x)) if loops[i] == 0]
    while True:
        if (x < 0).any():
            return RootClass.NOT_ROOT
        nz = np.flatnonzero(x)
        if len(nz) == 1 and x[nz[0]] == 1 and loops[nz[0]] == 0:
            return RootClass.REAL
        if not _support_connected(C, x):
            return RootClass.NOT_ROOT
        cx = C @ x
        best, best_val = -1, 0
        for i in free:
            if cx[i] > best_val:
                best, best_val = i, cx[i]
        if best < 0:
            if (cx[nz] <= 0).all():
                return RootClass.IMAGINARY
            return RootClass.NOT_ROOT
        x[best] -= best_val


def classify_root(qv: CometQuiver, v) -> RootClass:
    return classify_vector(qv.cartan(), qv.loops(), _as_flat(qv, v))


def simple_reflection(qv: CometQuiver, v, i: int) -> np.ndarray:
    """s_i(v) = v - (v, e_i) e_i at a loop-free vertex i."""
    if qv.loops()[i]:
        raise ValueError("no simple reflection at a vertex carrying loops")
    x = _as_flat(qv, v).copy()
    x[i] -= int((qv.cartan() @ x)[i])
    return x


def quiver_summary(mt: MultiType) -> dict:
    qv, v = build_quiver(mt)
    return {
        "legs": [list(leg) for leg in v.legs],
        "loops": qv.g,
        "center": v.center,
        "root_class": classify_root(qv, v).value,
        "d_omega": d_omega(qv, v),
    }


__all__ = [
    "CometQuiver",
    "DimVector",
    "RootClass",
    "build_quiver",
    "classify_root",
    "classify_vector",
    "d_omega",
    "generic_exists",
    "leg_dimensions",
    "quiver_summary",
    "simple_reflection",
    "tits_data",
]
