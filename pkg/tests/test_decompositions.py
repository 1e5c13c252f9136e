import random
from fractions import Fraction

import pytest

import corpus
from oracles import boolean_atoms
from pealab import boolean, chain, diamond
from pealab.decompositions import (
    MODES,
    center,
    central_lebesgue_decompose,
    check_abs_continuous,
    check_completely_additive,
    check_eps_continuous,
    check_eps_equiv_abs,
    check_jauch_piron,
    check_orthogonal,
    check_sigma_additive,
    check_upwards_continuous,
    eps_delta_table,
    eps_lebesgue_decompose,
    lebesgue_decompose,
    verify_orthogonal_witness,
    yosida_hewitt_decompose,
)
from pealab.errors import NotCommutative, RDPRequired
from pealab.jordan import join, meet
from pealab.measures import SignedMeasure, sample_measure, state_space

F = Fraction
SIMPLEX = corpus.rdp_names()


def _boolean_deltas(n):
    E = boolean(n)
    P = state_space(E)
    out = {}
    for v in P.vertices:
        (i,) = next(boolean_atoms(lab, n) for lab, x in zip(E.labels, v.values) if x == 1 and len(boolean_atoms(lab, n)) == 1)
        out[chr(97 + i)] = v
    return E, P, out


def test_continuity_examples():
    E, P, d = _boolean_deltas(2)
    assert check_abs_continuous(d["a"], d["a"]).holds
    v = check_abs_continuous(d["a"], d["b"])
    assert not v.holds and E.labels[v.witness] == "a"
    o = check_orthogonal(d["a"], d["b"])
    assert o.holds and E.labels[o.witness] == "a"
    assert verify_orthogonal_witness(d["a"], d["b"], o.witness)
    # the complement of the witness certifies the other side
    assert verify_orthogonal_witness(d["b"], d["a"], E.minus(o.witness))
    assert check_eps_continuous(d["a"], d["a"]).holds
    assert not check_eps_continuous(d["a"], d["b"]).holds
    assert check_eps_equiv_abs(E, d["a"], d["a"]) and check_eps_equiv_abs(E, d["a"], d["b"])
    assert not check_orthogonal(d["a"], d["a"]).holds


def test_eps_delta_table_values():
    E, P, d = _boolean_deltas(2)
    m = d["a"] + 2 * d["b"]
    t = 3 * d["a"] + d["b"]
    table = eps_delta_table(m, t)
    assert [(v, dl) for v, dl, _ in table] == [(1, 1), (2, 1), (3, 4)]
    for v, dl, _ in table:
        # any element with t below delta stays below v under m
        assert all(mv < v for mv, tv in zip(m.values, t.values) if tv < dl)


@pytest.mark.parametrize("name", corpus.NAMES)
def test_eps_equiv_abs_random(name):
    E = corpus.get(name)
    P = state_space(E)
    rng = random.Random(21)
    for _ in range(50):
        m1 = sample_measure(E, P, rng, 2, denominator=1)
        m2 = sample_measure(E, P, rng, 2, denominator=1)
        assert check_eps_equiv_abs(E, m1, m2)


def test_lebesgue_examples():
    E, P, d = _boolean_deltas(2)
    m = (d["a"] + d["b"]) / 2
    m1, m2, cert = lebesgue_decompose(E, P, m, d["a"])
    assert m1 == d["a"] / 2 and m2 == d["b"] / 2
    assert cert.engine.lp_optimum == F(1, 2)
    full = d["a"] + d["b"]
    m1, m2, _ = lebesgue_decompose(E, P, m, full)
    assert m1 == m and m2.is_zero()
    m1, m2, _ = lebesgue_decompose(E, P, d["b"], d["a"])
    assert m1.is_zero() and m2 == d["b"]


def test_eps_lebesgue_examples():
    E, P, d = _boolean_deltas(2)
    m = (d["a"] + d["b"]) / 2
    m1, m2, cert = eps_lebesgue_decompose(E, P, m, d["a"])
    assert (m1, m2) == lebesgue_decompose(E, P, m, d["a"])[:2]
    assert cert.meet_with_t_zero is True
    m1, m2, _ = eps_lebesgue_decompose(E, P, m, m)
    assert m1 == m and m2.is_zero()


def test_zero_reference_measure():
    # nothing nonzero is continuous with respect to 0, so all of m is singular
    E, P, d = _boolean_deltas(2)
    m = d["a"] + d["b"]
    z = SignedMeasure.zero(E)
    for fn in (lebesgue_decompose, eps_lebesgue_decompose):
        m1, m2, _ = fn(E, P, m, z)
        assert m1.is_zero() and m2 == m


@pytest.mark.parametrize("n", range(1, 6))
def test_lebesgue_matches_support_split(n):
    E, P, d = _boolean_deltas(n)
    rng = random.Random(n)
    for _ in range(20):
        mw = [F(rng.randint(0, 4), rng.randint(1, 3)) for _ in range(n)]
        tw = [F(rng.randint(0, 1) * rng.randint(1, 3)) for _ in range(n)]
        m = sum((w * d[chr(97 + i)] for i, w in enumerate(mw)), SignedMeasure.zero(E))
        t = sum((w * d[chr(97 + i)] for i, w in enumerate(tw)), SignedMeasure.zero(E))
        on = [i for i in range(n) if tw[i] != 0]
        want1 = sum((mw[i] * d[chr(97 + i)] for i in on), SignedMeasure.zero(E))
        m1, m2, _ = lebesgue_decompose(E, P, m, t)
        assert m1 == want1 and m2 == m - want1
        e1, e2, cert = eps_lebesgue_decompose(E, P, m, t)
        assert (e1, e2) == (m1, m2) and cert.meet_with_t_zero is True
        c1, c2, a0, _ = central_lebesgue_decompose(E, m, t)
        assert (c1, c2) == (m1, m2)
        assert boolean_atoms(E.labels[a0], n) == set(range(n)) - set(on)


@pytest.mark.parametrize("name", SIMPLEX)
def test_lebesgue_properties(name):
    E = corpus.get(name)
    P = state_space(E)
    rng = random.Random(8)
    for _ in range(8):
        m, n, t = (sample_measure(E, P, rng, 2) for _ in range(3))
        m1, m2, cert = lebesgue_decompose(E, P, m, t)
        assert m1 + m2 == m and check_abs_continuous(m1, t).holds
        assert cert.engine.singular_optimum == 0
        assert meet(E, [m2, t]).is_zero()
        assert eps_lebesgue_decompose(E, P, m, t)[:2] == (m1, m2)
        n1, n2, _ = lebesgue_decompose(E, P, n, t)
        s1, s2, _ = lebesgue_decompose(E, P, m + n, t)
        assert (s1, s2) == (m1 + n1, m2 + n2)


def test_center_examples():
    for n in range(1, 5):
        E = boolean(n)
        C = center(E)
        assert len(C.members) == len(E) and C.boolean_algebra_check
    for n in range(2, 8):
        E = chain(n)
        assert [E.labels[a] for a in center(E).members] == [E.labels[E.zero], E.labels[E.one]]
    D = diamond()
    C = center(D)
    assert sorted(D.labels[a] for a in C.members) == ["0", "1"]
    assert D.idx("a") in C.failures


@pytest.mark.parametrize("name", corpus.NAMES)
def test_center_is_boolean(name):
    E = corpus.get(name)
    state_space(E)
    C = center(E)
    assert E.zero in C.members and E.one in C.members
    assert C.boolean_algebra_check
    assert center(E, state_space(E).vertices) == C


def test_central_examples():
    E, P, d = _boolean_deltas(3)
    t = d["a"] + d["b"]
    m = d["a"] + d["b"] + d["c"]
    m1, m2, a0, cert = central_lebesgue_decompose(E, m, t)
    assert E.labels[a0] == "c"
    assert m1 == d["a"] + d["b"] and m2 == d["c"]
    assert cert.maximal and cert.continuity.holds and cert.orthogonal
    m1, m2, a0, _ = central_lebesgue_decompose(E, m, m)
    assert a0 == E.zero and m1 == m and m2.is_zero()
    z = SignedMeasure.zero(E)
    m1, m2, _, _ = central_lebesgue_decompose(E, z, t)
    assert m1.is_zero() and m2.is_zero()
    D = diamond()
    with pytest.raises(RDPRequired):
        central_lebesgue_decompose(D, state_space(D).vertices[0], state_space(D).vertices[1])


@pytest.mark.parametrize("name", SIMPLEX)
def test_central_split_certificates(name):
    E = corpus.get(name)
    P = state_space(E)
    rng = random.Random(3)
    for _ in range(5):
        m, t = sample_measure(E, P, rng), sample_measure(E, P, rng)
        m1, m2, a0, cert = central_lebesgue_decompose(E, m, t)
        assert m1 + m2 == m and cert.orthogonal and cert.continuity.holds
        assert t.values[a0] == 0


def test_additivity_traces_examples():
    E = boolean(3)
    m = sample_measure(E, state_space(E), 1)
    for fn in (check_sigma_additive, check_upwards_continuous, check_completely_additive):
        tr = fn(E, m)
        assert tr.holds and tr.families_checked > 0
    C = chain(5)
    s = state_space(C).vertices[0]
    assert check_sigma_additive(C, s).holds and check_upwards_continuous(C, s).holds
    T = corpus.get("twisted_s3")
    with pytest.raises(NotCommutative):
        check_completely_additive(T, state_space(T).vertices[0])


@pytest.mark.parametrize("name", corpus.NAMES)
def test_yosida_hewitt_degenerate(name):
    E = corpus.get(name)
    P = state_space(E)
    m = sample_measure(E, P, 6, 2)
    for mode in MODES:
        if mode == "ca" and not E.is_commutative:
            continue
        m1, m2, cert = yosida_hewitt_decompose(E, P, m, mode)
        assert m1 == m and m2.is_zero()
        assert cert.engine.singular_optimum == 0
        assert len(cert.face) == len(P.vertices)
        assert all(tr.holds for tr in cert.traces)


def test_yosida_hewitt_ca_needs_commutativity():
    T = corpus.get("twisted_s3")
    P = state_space(T)
    with pytest.raises(NotCommutative):
        yosida_hewitt_decompose(T, P, P.vertices[0], "ca")


def test_join_keeps_additivity_traces():
    E = boolean(3)
    P = state_space(E)
    m, n = sample_measure(E, P, 1), sample_measure(E, P, 2)
    j = join(E, [m, n])
    assert check_completely_additive(E, j).holds and check_sigma_additive(E, j).holds


def test_jauch_piron():
    for n in range(1, 5):
        E = boolean(n)
        P = state_space(E)
        rng = random.Random(n)
        for _ in range(5):
            assert check_jauch_piron(E, sample_measure(E, P, rng))
    C = chain(4)
    assert check_jauch_piron(C, state_space(C).vertices[0])
    D = diamond()
    verdicts = [check_jauch_piron(D, v) for v in state_space(D).vertices]
    assert not any(verdicts)
    assert all(len(v.witness) == 2 and "t(c) = 0" in v.reading for v in verdicts)
