"""Exact computations on finite pseudo effect algebras."""

from .algebra import (
    PoGroupSpec,
    PseudoEffectAlgebra,
    build_algebra,
    complement_left,
    complement_right,
    interval_algebra,
    poset_join,
    poset_meet,
    validate_table,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .zoo import boolean, chain, diamond, horizontal_sum, interval, product, zoo

__version__ = "0.1.0"
