"""Standard finite algebras: Boolean algebras, Łukasiewicz chains, intervals, sums, products."""

import re
import string

from .algebra import MAX_ELEMENTS, PoGroupSpec, build_algebra, interval_algebra
from .errors import SizeLimitExceeded, UnknownZooName, UsageError


def _guard(n):
    if n > MAX_ELEMENTS:
        raise SizeLimitExceeded(f"algebra would have {n} elements (limit {MAX_ELEMENTS})")


def _subset_label(mask, n):
    if mask == 0:
        return "0"
    if mask == (1 << n) - 1:
        return "1"
    if n <= 26:
        return "".join(string.ascii_lowercase[i] for i in range(n) if mask >> i & 1)
    return "e" + format(mask, f"0{n}b")


def boolean(n):
    """The Boolean algebra 2ⁿ; atoms are labelled a, b, c, ... and joins concatenate."""
    if n < 1:
        raise ValueError("boolean(n) needs n >= 1")
    _guard(1 << n)
    masks = range(1 << n)
    labels = [_subset_label(m, n) for m in masks]
    triples = [(labels[x], labels[y], labels[x | y]) for x in masks for y in masks if not x & y]
    return build_algebra(labels, "0", "1", triples)


def chain(n):
    """The Łukasiewicz chain {0, 1, ..., n} with i + j defined iff i + j <= n."""
    if n < 1:
        raise ValueError("chain(n) needs n >= 1")
    _guard(n + 1)
    labels = [str(i) for i in range(n + 1)]
    triples = [(str(i), str(j), str(i + j)) for i in range(n + 1) for j in range(n + 1 - i)]
    return build_algebra(labels, "0", str(n), triples)


def diamond():
    """{0, a, a', b, b', 1} with a + a' = a' + a = 1 = b + b' = b' + b."""
    labels = ["0", "a", "a'", "b", "b'", "1"]
    triples = [("0", x, x) for x in labels] + [(x, "0", x) for x in labels[1:]]
    triples += [("a", "a'", "1"), ("a'", "a", "1"), ("b", "b'", "1"), ("b'", "b", "1")]
    return build_algebra(labels, "0", "1", triples)


def interval(unit, order="coordinatewise"):
    unit = (unit,) if isinstance(unit, int) else tuple(unit)
    return interval_algebra(PoGroupSpec(len(unit), order, unit))


def horizontal_sum(E1, E2):
    """Glue E1 and E2 along {0, 1}; other elements are tagged L: and R:."""
    _guard(len(E1) + len(E2) - 2)

    def tag(E, side):
        return {
            i: ("0" if i == E.zero else "1" if i == E.one else f"{side}:{lab}")
            for i, lab in enumerate(E.labels)
        }

    t1, t2 = tag(E1, "L"), tag(E2, "R")
    labels = [t1[i] for i in range(len(E1)) if i not in (E1.zero, E1.one)]
    labels += [t2[i] for i in range(len(E2)) if i not in (E2.zero, E2.one)]
    labels = ["0"] + labels + ["1"]
    triples = set()
    for E, t in ((E1, t1), (E2, t2)):
        triples.update((t[a], t[b], t[c]) for a, b, c in E.triples)
    return build_algebra(labels, "0", "1", sorted(triples))


def product(E1, E2):
    """Cartesian product with componentwise partial addition."""
    _guard(len(E1) * len(E2))
    lab = {(x, y): f"({E1.labels[x]},{E2.labels[y]})" for x in range(len(E1)) for y in range(len(E2))}
    labels = [lab[k] for k in sorted(lab)]
    triples = []
    for a1, b1, c1 in E1.triples:
        for a2, b2, c2 in E2.triples:
            triples.append((lab[a1, a2], lab[b1, b2], lab[c1, c2]))
    return build_algebra(labels, lab[E1.zero, E2.zero], lab[E1.one, E2.one], triples)


def zoo(name, *params):
    """Build a named algebra.

    ``name`` is one of boolean(n), chain(n), interval(unit[, order]), diamond,
    horizontal_sum(E1, E2), product(E1, E2).
    """
    builders = {
        "boolean": boolean,
        "chain": chain,
        "interval": interval,
        "diamond": diamond,
        "horizontal_sum": horizontal_sum,
        "hsum": horizontal_sum,
        "product": product,
    }
    try:
        fn = builders[name]
    except KeyError:
        raise UnknownZooName(f"unknown zoo algebra {name!r}; choose from {sorted(builders)}") from None
    return fn(*params)


_TOKEN = re.compile(r"\s*([A-Za-z_]+|-?\d+|[(),:;])")


def parse_zoo_expr(text):
    """Parse expressions like ``boolean:3``, ``interval:2,1``, ``product(chain:2,chain:2)``.

    ``interval-lex:…`` selects the lexicographic order.
    """
    text = text.replace("interval-lex", "intervallex")
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise UsageError(f"cannot parse zoo expression {text!r} at offset {pos}")
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append(None)
    i = 0

    def peek():
        return tokens[i]

    def take(expected=None):
        nonlocal i
        tok = tokens[i]
        if expected is not None and tok != expected:
            raise UsageError(f"zoo expression {text!r}: expected {expected!r}, got {tok!r}")
        i += 1
        return tok

    def ints():
        vals = [int(take())]
        while peek() == "," and tokens[i + 1] is not None and tokens[i + 1].lstrip("-").isdigit():
            take(",")
            vals.append(int(take()))
        return vals

    def expr():
        name = take()
        if name is None or not name.isidentifier():
            raise UsageError(f"zoo expression {text!r}: expected a name")
        if name in ("product", "horizontal_sum", "hsum"):
            take("(")
            left = expr()
            take(",")
            right = expr()
            take(")")
            return zoo(name, left, right)
        if name == "diamond":
            return diamond()
        take(":")
        vals = ints()
        if name in ("boolean", "chain"):
            if len(vals) != 1:
                raise UsageError(f"{name} takes one integer")
            return zoo(name, vals[0])
        if name == "interval":
            return interval(tuple(vals))
        if name == "intervallex":
            return interval(tuple(vals), "lexicographic")
        raise UnknownZooName(f"unknown zoo algebra {name!r}")

    try:
        E = expr()
    except (IndexError, ValueError) as exc:
        raise UsageError(f"cannot parse zoo expression {text!r}: {exc}") from None
    if peek() is not None:
        raise UsageError(f"trailing input in zoo expression {text!r}")
    return E


def all_boolean_labels(n):
    """Labels of boolean(n) keyed by subset mask (used to build relabelings)."""
    return {m: _subset_label(m, n) for m in range(1 << n)}
