import itertools

import pytest

import corpus
from pealab import (
    PoGroupSpec,
    boolean,
    build_algebra,
    chain,
    complement_left,
    complement_right,
    diamond,
    horizontal_sum,
    interval,
    interval_algebra,
    poset_join,
    poset_meet,
    product,
    validate_table,
    zoo,
)
from pealab.algebra import relabel, same_table
from pealab.errors import (
    AxiomViolation,
    DuplicateLabel,
    IntervalInfinite,
    InvalidUnit,
    SizeLimitExceeded,
    UnknownLabel,
    UnknownZooName,
)
from pealab.zoo import parse_zoo_expr


def chain_triples(n):
    return [(str(i), str(j), str(i + j)) for i in range(n + 1) for j in range(n + 1 - i)]


@pytest.mark.parametrize("name", corpus.NAMES)
def test_corpus_validates(name):
    E = corpus.get(name)
    rep = validate_table(E.labels, E.labels[E.zero], E.labels[E.one], E.export_triples())
    assert rep.ok


def test_sizes():
    assert len(boolean(3)) == 8
    assert len(chain(4)) == 5
    assert len(diamond()) == 6
    assert len(interval((2, 1))) == 6
    assert len(product(chain(2), chain(2))) == 9
    assert len(horizontal_sum(chain(2), chain(3))) == 5


@pytest.mark.parametrize("name", corpus.NAMES)
def test_differences_recover_sums(name):
    E = corpus.get(name)
    for a in range(len(E)):
        for b in E.above(a):
            d = E.left_diff(b, a)
            e = E.right_diff(a, b)
            assert E.add(d, a) == b
            assert E.add(a, e) == b


@pytest.mark.parametrize("name", corpus.NAMES)
def test_order_characterizations_agree(name):
    E = corpus.get(name)
    n = len(E)
    via_right = {(a, b) for a in range(n) for b in range(n) if any(E.add(a, c) == b for c in range(n))}
    via_left = {(a, b) for a in range(n) for b in range(n) if any(E.add(d, a) == b for d in range(n))}
    assert via_right == via_left
    assert via_right == {(a, b) for a in range(n) for b in range(n) if E.leq(a, b)}


@pytest.mark.parametrize("name", corpus.NAMES)
def test_complements(name):
    E = corpus.get(name)
    for a in range(len(E)):
        assert E.add(complement_left(E, a), a) == E.one
        assert E.add(a, complement_right(E, a)) == E.one


@pytest.mark.parametrize("name", corpus.NAMES)
def test_round_trip_from_triples(name):
    E = corpus.get(name)
    F = build_algebra(E.labels, E.labels[E.zero], E.labels[E.one], reversed(E.export_triples()))
    assert F == E
    assert F.digest == E.digest
    assert (F.plus_array == E.plus_array).all()


def test_chain_complements():
    E = chain(3)
    assert complement_left(E, "1") == E.idx("2")
    assert complement_right(E, "1") == E.idx("2")


def _perm(label):
    return tuple(int(ch) for ch in label[1:])


def _inverse(g):
    inv = [0] * 3
    for i, x in enumerate(g):
        inv[x] = i
    return tuple(inv)


def _mul(g, h):
    return tuple(g[h[i]] for i in range(3))


def test_twisted_complements_follow_the_group():
    E = corpus.twisted_s3()
    assert not E.is_commutative
    c = (1, 0, 2)
    differ = 0
    for lab in E.labels:
        if not lab.startswith("g"):
            continue
        g = _perm(lab)
        left = "g" + "".join(map(str, _mul(c, _inverse(g))))
        right = "g" + "".join(map(str, _mul(_inverse(g), c)))
        assert E.labels[complement_left(E, lab)] == left
        assert E.labels[complement_right(E, lab)] == right
        differ += left != right
    assert differ == 4


def test_meets_and_joins():
    E = boolean(3)
    assert E.labels[poset_meet(E, "ab", "bc")] == "b"
    assert E.labels[poset_join(E, "a", "c")] == "ac"
    D = diamond()
    assert poset_meet(D, "a", "b") == D.zero
    assert poset_join(D, "a", "b") == D.one
    H = horizontal_sum(boolean(2), chain(2))
    # two incomparable elements with two minimal upper bounds would have no join; here 1 is the only one
    assert poset_join(H, "L:a", "R:1") == H.one


def test_axiom_failures_are_reported():
    # commutativity is not required, but a sum defined with 1 is
    with pytest.raises(AxiomViolation) as exc:
        build_algebra(["0", "1"], "0", "1", [("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1"), ("1", "1", "1")])
    assert "iv" in exc.value.report.axioms()
    # no complement for x
    rep = validate_table(["0", "x", "1"], "0", "1", [("0", "0", "0"), ("0", "x", "x"), ("x", "0", "x"), ("0", "1", "1"), ("1", "0", "1")])
    assert "ii" in rep.axioms()
    # associativity: (x+x)+x vs x+(x+x) in a truncated table
    triples = [(a, "0", a) for a in "0xy1"] + [("0", a, a) for a in "xy1"]
    triples += [("x", "x", "y"), ("x", "y", "1"), ("y", "x", "1")]
    rep = validate_table(["0", "x", "y", "1"], "0", "1", triples)
    assert rep.ok
    rep = validate_table(["0", "x", "y", "1"], "0", "1", triples[:-1])
    assert not rep.ok


def test_conflicting_sum():
    rep = validate_table(["0", "1"], "0", "1", [("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1"), ("0", "1", "0")])
    assert "table" in rep.axioms()


def test_label_errors():
    with pytest.raises(DuplicateLabel):
        build_algebra(["0", "0"], "0", "0", [])
    with pytest.raises(UnknownLabel):
        build_algebra(["0", "1"], "0", "1", [("0", "z", "1")])
    with pytest.raises(UnknownLabel):
        build_algebra(["0", "a b"], "0", "a b", [])


def test_zoo_names():
    assert zoo("boolean", 2) == boolean(2)
    assert zoo("hsum", chain(1), chain(2)) == horizontal_sum(chain(1), chain(2))
    with pytest.raises(UnknownZooName):
        zoo("torus", 3)
    with pytest.raises(SizeLimitExceeded):
        boolean(13)


def test_zoo_expressions():
    assert parse_zoo_expr("boolean:3") == boolean(3)
    assert parse_zoo_expr("product(chain:2,chain:2)") == product(chain(2), chain(2))
    assert parse_zoo_expr("interval:2,1") == interval((2, 1))
    assert parse_zoo_expr("diamond") == diamond()
    assert parse_zoo_expr("hsum(chain:2, boolean:2)") == horizontal_sum(chain(2), boolean(2))


def test_interval_chain_isomorphism():
    for n in range(1, 7):
        assert same_table(interval(n), chain(n), {str(i): str(i) for i in range(n + 1)})


def test_interval_boolean_isomorphism():
    for n in range(1, 5):
        E = interval((1,) * n)
        F = boolean(n)
        mapping = {}
        for lab in E.labels:
            bits = [int(ch) for ch in lab.strip("()").split(",")]
            mask = sum(1 << i for i, b in enumerate(bits) if b)
            atoms = "".join("abcdefgh"[i] for i in range(n) if mask >> i & 1)
            mapping[lab] = "0" if mask == 0 else "1" if mask == (1 << n) - 1 else atoms
        assert same_table(E, F, mapping)


def test_lexicographic_intervals():
    with pytest.raises(IntervalInfinite):
        interval_algebra(PoGroupSpec(2, "lexicographic", (1, 0)))
    with pytest.raises(InvalidUnit):
        interval_algebra(PoGroupSpec(2, "lexicographic", (0, 3)))
    assert interval_algebra(PoGroupSpec(1, "lexicographic", (3,))) == chain(3)
    with pytest.raises(InvalidUnit):
        interval((2, 0))


def test_relabel():
    E = chain(2)
    F = relabel(E, {"0": "zero", "1": "half", "2": "one"})
    assert same_table(E, F, {"0": "zero", "1": "half", "2": "one"})
    assert F.labels[F.one] == "one"


def test_product_is_componentwise():
    E = product(chain(2), boolean(1))
    for (a, b, c) in E.export_triples():
        x = [s.strip("()").split(",") for s in (a, b, c)]
        assert int(x[0][0]) + int(x[1][0]) == int(x[2][0])


def test_horizontal_sum_glues_at_bounds():
    H = horizontal_sum(chain(2), chain(2))
    assert H.add(H.idx("L:1"), H.idx("R:1")) is None
    assert H.add(H.idx("L:1"), H.idx("L:1")) == H.one


def test_exhaustive_associativity_on_small_tables():
    for name in ("boolean(2)", "chain(3)", "twisted_s3"):
        E = corpus.get(name)
        n = len(E)
        for a, b, c in itertools.product(range(n), repeat=3):
            ab = E.add(a, b)
            bc = E.add(b, c)
            left = E.add(ab, c) if ab is not None else None
            right = E.add(a, bc) if bc is not None else None
            assert left == right
