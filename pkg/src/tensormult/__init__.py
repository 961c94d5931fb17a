"""Generic tensor-product multiplicities for GL_n(F_q) from symmetric functions.

The central entry point is :func:`h_omega`, which returns the multiplicity
polynomial of a multitype; :func:`build_quiver` and :func:`classify_root`
give the matching comet-shaped quiver and its Kac root class.
"""

from .coeffring import IntPoly, NotPolynomialError, PoleError, RatFunc
from .partitions import conjugate, partitions
from .plethys import SymSeries, adams, cauchy_omega, pleth_exp, pleth_log
from .quiver import (
    CometQuiver,
    DimVector,
    RootClass,
    build_quiver,
    classify_root,
    d_omega,
    tits_data,
)
from .symfunc import SymFunc, hall_littlewood_transformed, hall_pairing, kostka_foulkes
from .types import (
    MultiType,
    TypeT,
    generic_exists,
    h_omega,
    parse_multitype,
    twisted_lr,
    type_symfunc,
)

__version__ = "0.1.0"

__all__ = [
    "CometQuiver",
    "DimVector",
    "IntPoly",
    "MultiType",
    "NotPolynomialError",
    "PoleError",
    "RatFunc",
    "RootClass",
    "SymFunc",
    "SymSeries",
    "TypeT",
    "adams",
    "build_quiver",
    "cauchy_omega",
    "classify_root",
    "conjugate",
    "d_omega",
    "generic_exists",
    "h_omega",
    "hall_littlewood_transformed",
    "hall_pairing",
    "kostka_foulkes",
    "parse_multitype",
    "partitions",
    "pleth_exp",
    "pleth_log",
    "tits_data",
    "twisted_lr",
    "type_symfunc",
]
