import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import corpus
from pealab import _pykernels, kernels
from pealab.riesz import com_matrix, disjoint_matrix

pytestmark = pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="compiled kernels not built")


def both(fn_name, *args):
    c = getattr(kernels.BACKENDS["cython"], fn_name)(*args)
    p = getattr(_pykernels, fn_name)(*args)
    return c, p


def refinement_inputs(E):
    groups = {}
    for a, b, c in E.triples:
        groups.setdefault(c, []).append((a, b))
    pa, pb, off = [], [], [0]
    for c in sorted(groups):
        for a, b in groups[c]:
            pa.append(a)
            pb.append(b)
        off.append(len(pa))
    return (
        E.plus_array,
        E.right_diff_array,
        np.array(pa, dtype=np.int32),
        np.array(pb, dtype=np.int32),
        np.array(off, dtype=np.int64),
        com_matrix(E),
        disjoint_matrix(E),
    )


@pytest.mark.parametrize("name", corpus.NAMES)
def test_scans_agree(name):
    E = corpus.get(name)
    ta, tb, tc = E.triple_columns
    c, p = both("associativity_violations", E.plus_array)
    assert c == p == []
    c, p = both("difference_tables", E.plus_array)
    assert (c[0] == p[0]).all() and (c[1] == p[1]).all() and c[2] == p[2]
    c, p = both("rip_scan", E.leq_array)
    assert c == p
    c, p = both("rdp0_scan", E.right_diff_array, E.leq_array, ta, tb, tc)
    assert c == p
    c, p = both("rdp_scan", *refinement_inputs(E))
    assert c == p


@pytest.mark.parametrize("name", ["boolean(4)", "product(boolean(2),chain(3))", "twisted_s3", "diamond"])
@pytest.mark.parametrize("maximize", [True, False])
def test_fold_agrees(name, maximize):
    E = corpus.get(name)
    n = len(E)
    ta, tb, tc = E.triple_columns
    rng = random.Random(7)
    for _ in range(20):
        prev = np.array([rng.randint(-50, 50) for _ in range(n)], dtype=np.int64)
        cur = np.array([rng.randint(-50, 50) for _ in range(n)], dtype=np.int64)
        c, p = both("fold_step", ta, tb, tc, prev, cur, n, maximize)
        obj = _pykernels.fold_step_objects(ta.tolist(), tb.tolist(), tc.tolist(), prev.tolist(), cur.tolist(), n, maximize)
        assert c == p == obj


def test_fold_objects_handles_big_integers():
    E = corpus.get("chain(3)")
    ta, tb, tc = (t.tolist() for t in E.triple_columns)
    big = 1 << 80
    prev = [0, big, 2 * big, 3 * big]
    out = kernels.BACKENDS["cython"].fold_step_objects(ta, tb, tc, prev, prev, 4, True)
    assert out == [0, big, 2 * big, 3 * big]


@st.composite
def partial_tables(draw):
    n = draw(st.integers(2, 6))
    cells = draw(st.lists(st.integers(-1, n - 1), min_size=n * n, max_size=n * n))
    return np.array(cells, dtype=np.int32).reshape(n, n)


@settings(max_examples=200, deadline=None)
@given(partial_tables())
def test_random_tables_agree(plus):
    c, p = both("associativity_violations", plus)
    assert c == p
    c, p = both("difference_tables", plus)
    assert (c[0] == p[0]).all() and (c[1] == p[1]).all() and c[2] == p[2]


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.lists(st.booleans(), min_size=n * n, max_size=n * n)))
def test_random_relations_rip_agree(cells):
    n = int(len(cells) ** 0.5)
    leq = np.array(cells, dtype=np.uint8).reshape(n, n)
    c, p = both("rip_scan", leq)
    assert c == p


def test_backend_switch():
    prev = kernels.use("python")
    try:
        assert kernels.BACKEND == "python"
        with pytest.raises(ValueError):
            kernels.use("fortran")
    finally:
        kernels.use(prev)
