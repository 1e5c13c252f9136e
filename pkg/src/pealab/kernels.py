"""Kernel backend selection.

The compiled extension ``pealab._ckernels`` is used when it was built; the
pure-Python module ``pealab._pykernels`` is the fallback.  Set
``PEALAB_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKENDS = {"python": _pykernels}

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None
else:
    BACKENDS["cython"] = _ckernels

if _ckernels is not None and os.environ.get("PEALAB_PURE_PYTHON", "") in ("", "0"):
    BACKEND = "cython"
    impl = _ckernels
else:
    BACKEND = "python"
    impl = _pykernels

# int64 headroom for the integer fold; larger values go through Python ints
FOLD_INT_LIMIT = 1 << 60


def use(name):
    """Switch the active backend ("cython" or "python"); returns the previous name."""
    global BACKEND, impl
    if name not in BACKENDS:
        raise ValueError(f"kernel backend {name!r} not available (have {sorted(BACKENDS)})")
    prev = BACKEND
    BACKEND, impl = name, BACKENDS[name]
    return prev


def associativity_violations(plus):
    return impl.associativity_violations(plus)


def difference_tables(plus):
    return impl.difference_tables(plus)


def fold_step(ta, tb, tc, prev, cur, n, maximize):
    return impl.fold_step(ta, tb, tc, prev, cur, n, maximize)


def fold_step_objects(ta, tb, tc, prev, cur, n, maximize):
    return impl.fold_step_objects(ta, tb, tc, prev, cur, n, maximize)


def rip_scan(leq):
    return impl.rip_scan(leq)


def rdp0_scan(right_diff, leq, ta, tb, tc):
    return impl.rdp0_scan(right_diff, leq, ta, tb, tc)


def rdp_scan(plus, right_diff, pa, pb, offsets, com, disjoint):
    return impl.rdp_scan(plus, right_diff, pa, pb, offsets, com, disjoint)
