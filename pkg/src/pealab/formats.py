"""Text formats for algebras and measures.

Algebra files::

    # comments start with '#'
    elements: 0 a b 1
    zero: 0
    one: 1
    a + b = 1
    ...

The sum list may instead be a JSON array of ``[a, b, c]`` triples following
the header.  Measure files start with ``algebra: <sha256 of the canonical
algebra text>`` followed by one ``label = p/q`` line per element.
"""

import json
import re
from fractions import Fraction

from .algebra import build_algebra
from .errors import AlgebraMismatch, ParseError, UnknownLabel
from .measures import SignedMeasure

_SUM_RE = re.compile(r"^(\S+)\s*\+\s*(\S+)\s*=\s*(\S+)$")
_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _strip(line):
    return line.split("#", 1)[0].strip()


def parse_algebra_text(text):
    """Parse an algebra file into (elements, zero, one, triples)."""
    header = {}
    lines = text.splitlines()
    body_start = len(lines)
    for k, raw in enumerate(lines):
        line = _strip(raw)
        if not line:
            continue
        key, sep, value = line.partition(":")
        if sep and key.strip() in ("elements", "zero", "one"):
            if key.strip() in header:
                raise ParseError(f"line {k + 1}: repeated header field {key.strip()!r}")
            header[key.strip()] = value.strip()
            continue
        body_start = k
        break
    missing = [f for f in ("elements", "zero", "one") if f not in header]
    if missing:
        raise ParseError(f"missing header field(s): {', '.join(missing)}")
    elements = header["elements"].split()
    if not elements:
        raise ParseError("empty element list")
    body = [(k + 1, _strip(raw)) for k, raw in enumerate(lines[body_start:], start=body_start)]
    body = [(n, s) for n, s in body if s]
    triples = []
    if body and body[0][1].startswith("["):
        try:
            data = json.loads("\n".join(s for _, s in body))
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON triple list: {exc}") from None
        if not isinstance(data, list) or not all(isinstance(t, list) and len(t) == 3 for t in data):
            raise ParseError("JSON body must be a list of 3-element lists")
        triples = [tuple(str(x) for x in t) for t in data]
    else:
        for n, s in body:
            m = _SUM_RE.match(s)
            if not m:
                raise ParseError(f"line {n}: expected 'a + b = c', got {s!r}")
            triples.append(m.groups())
    return elements, header["zero"], header["one"], triples


def load_algebra_text(text):
    return build_algebra(*parse_algebra_text(text))


def load_algebra(path):
    with open(path, encoding="utf-8") as fh:
        return load_algebra_text(fh.read())


def export_algebra(E, style="lines"):
    """Canonical text; ``style="json"`` writes the sums as a JSON array."""
    if style == "lines":
        return E.canonical_text()
    if style != "json":
        raise ValueError(f"unknown style {style!r}")
    head = E.canonical_text().splitlines()[:3]
    rows = [json.dumps(list(t)) for t in E.export_triples()]
    return "\n".join(head) + "\n[\n" + ",\n".join("  " + r for r in rows) + "\n]\n"


def parse_rational(s):
    s = s.strip()
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"not an exact rational 'p/q': {s!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {s!r}") from None


def format_rational(v):
    return str(Fraction(v))


def parse_measure_text(E, text):
    digest = None
    values = {}
    for k, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if digest is None:
            key, sep, value = line.partition(":")
            if not sep or key.strip() != "algebra":
                raise ParseError(f"line {k}: measure file must start with 'algebra: <hash>'")
            digest = value.strip()
            continue
        label, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"line {k}: expected 'label = p/q'")
        label = label.strip()
        try:
            i = E.idx(label)
        except UnknownLabel:
            raise ParseError(f"line {k}: unknown element {label!r}") from None
        if i in values:
            raise ParseError(f"line {k}: element {label!r} given twice")
        values[i] = parse_rational(value)
    if digest is None:
        raise ParseError("empty measure file")
    if digest != E.digest:
        raise AlgebraMismatch(f"measure file refers to algebra {digest[:12]}, not {E.digest[:12]}")
    missing = [E.labels[i] for i in range(len(E)) if i not in values]
    if missing:
        raise ParseError(f"no value for element(s): {' '.join(missing)}")
    return SignedMeasure(E, [values[i] for i in range(len(E))])


def load_measure(E, path):
    with open(path, encoding="utf-8") as fh:
        return parse_measure_text(E, fh.read())


def export_measure(m):
    E = m.algebra
    lines = [f"algebra: {E.digest}"]
    lines.extend(f"{lab} = {format_rational(v)}" for lab, v in zip(E.labels, m.values))
    return "\n".join(lines) + "\n"


def write_text(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
