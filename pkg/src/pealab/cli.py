"""Command-line front end.

Exit codes: 0 success, 1 a mathematical property failed, 2 usage or I/O
error, 3 internal inconsistency.
"""

import argparse
import json
import os
import random
import sys

from . import __version__
from .decompositions import (
    central_lebesgue_decompose,
    eps_lebesgue_decompose,
    lebesgue_decompose,
    yosida_hewitt_decompose,
)
from .errors import AxiomViolation, PEAError, UsageError
from .faces import face_decompose, kernel_face
from .formats import export_algebra, export_measure, format_rational, load_algebra, load_measure, write_text
from .jordan import join, meet
from .measures import is_simplex, sample_measure, state_space
from .riesz import rdp_profile
from .zoo import parse_zoo_expr


class Report:
    """Ordered key/value report with text and JSON renderings.

    Text reports are ``key: value`` lines; :func:`parse_text_report` reads
    them back as the same list of pairs.
    """

    def __init__(self, command, algebra=None, seed=None):
        self.items = [("command", command), ("version", __version__)]
        if algebra is not None:
            self.items.append(("algebra", algebra.digest))
        if seed is not None:
            self.items.append(("seed", str(seed)))

    def add(self, key, value):
        self.items.append((key, str(value)))

    def add_measure(self, name, m):
        for lab, v in zip(m.algebra.labels, m.values):
            self.items.append((f"{name} {lab}", format_rational(v)))

    def render(self, fmt):
        if fmt == "json":
            return json.dumps([list(p) for p in self.items], indent=1) + "\n"
        return "".join(f"{k}: {v}\n" for k, v in self.items)


def parse_text_report(text):
    out = []
    for line in text.splitlines():
        k, sep, v = line.partition(": ")
        if not sep:
            raise ValueError(f"bad report line {line!r}")
        out.append((k, v))
    return out


def parse_json_report(text):
    return [tuple(p) for p in json.loads(text)]


def _yes(b):
    return "yes" if b else "no"


def _vector(m):
    return ",".join(format_rational(v) for v in m.values)


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("PEA_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"PEA_SEED must be an integer, got {env!r}") from None


def _emit(args, report, files=()):
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for name, text in files:
            write_text(os.path.join(args.out_dir, name), text)
        ext = "json" if args.format == "json" else "txt"
        write_text(os.path.join(args.out_dir, f"report.{ext}"), report.render(args.format))
    sys.stdout.write(report.render(args.format))


def cmd_check(args):
    try:
        E = load_algebra(args.algebra)
    except AxiomViolation as exc:
        rep = Report("check")
        rep.add("axioms", "violated")
        for v in exc.report.violations:
            rep.add("violation", str(v))
        _emit(args, rep)
        return 1
    seed = _seed(args)
    rep = Report("check", E, seed)
    rep.add("elements", len(E))
    rep.add("axioms", "ok")
    profile = rdp_profile(E)
    for v in profile:
        rep.add(v.property, v.describe(E).split(": ", 1)[1])
    P = state_space(E)
    rep.add("states", len(P.vertices))
    rep.add("affine_dim", P.affine_dim)
    rep.add("simplex", _yes(is_simplex(P)))
    rdp = profile[3].holds
    if rdp and not P.is_empty and args.samples:
        rng = random.Random(seed)
        ok = True
        for _ in range(args.samples):
            m1, m2 = sample_measure(E, P, rng), sample_measure(E, P, rng)
            if join(E, [m1, m2]) + meet(E, [m1, m2]) != m1 + m2:
                ok = False
                break
        rep.add("lattice_identity_samples", args.samples)
        rep.add("lattice_identity", _yes(ok))
        if not ok:
            _emit(args, rep)
            return 1
    _emit(args, rep)
    return 0


def cmd_zoo(args):
    E = parse_zoo_expr(args.expr)
    text = export_algebra(E, args.style)
    if args.output:
        write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_states(args):
    E = load_algebra(args.algebra)
    P = state_space(E)
    rep = Report("states", E)
    rep.add("elements", ",".join(E.labels))
    rep.add("vertices", len(P.vertices))
    for k, v in enumerate(P.vertices, start=1):
        rep.add(f"vertex {k}", _vector(v))
    rep.add("affine_dim", P.affine_dim)
    rep.add("simplex", _yes(is_simplex(P)))
    _emit(args, rep)
    return 0


def _load_measures(E, paths):
    return [load_measure(E, p) for p in paths]


def _lattice_cmd(args, op, name):
    E = load_algebra(args.algebra)
    ms = _load_measures(E, args.measures)
    r = op(E, ms)
    rep = Report(name, E)
    rep.add("inputs", len(ms))
    rep.add_measure("result", r)
    _emit(args, rep, [(f"{name}.pm", export_measure(r))])
    return 0


def cmd_join(args):
    return _lattice_cmd(args, join, "join")


def cmd_meet(args):
    return _lattice_cmd(args, meet, "meet")


def cmd_decompose(args):
    E = load_algebra(args.algebra)
    (m,) = _load_measures(E, [args.measure])
    rep = Report("decompose", E)
    if args.face is not None:
        X = [x for x in args.face.split(",") if x]
        P = state_space(E)
        F = kernel_face(E, P, X)
        m1, m2, cert = face_decompose(E, P, F, m)
        rep.add("method", "face")
        rep.add("kernel", ",".join(E.labels[i] for i in sorted(F.defining_kernel)))
        rep.add("face", ",".join(str(i + 1) for i in F.vertex_indices))
        engine = cert
    elif args.yosida_hewitt is not None:
        P = state_space(E)
        m1, m2, cert = yosida_hewitt_decompose(E, P, m, args.yosida_hewitt)
        rep.add("method", f"yosida-hewitt {args.yosida_hewitt}")
        rep.add("face", ",".join(str(i + 1) for i in cert.face.vertex_indices))
        rep.add("families_checked", sum(t.families_checked for t in cert.traces))
        rep.add("note", cert.note)
        engine = cert.engine
    else:
        t_path, method = next(
            (p, name)
            for p, name in (
                (args.lebesgue, "lebesgue"),
                (args.eps_lebesgue, "eps-lebesgue"),
                (args.central, "central"),
            )
            if p is not None
        )
        (t,) = _load_measures(E, [t_path])
        rep.add("method", method)
        engine = None
        if method == "central":
            m1, m2, a0, cert = central_lebesgue_decompose(E, m, t)
            rep.add("a0", E.labels[a0])
            rep.add("central_null", ",".join(E.labels[a] for a in cert.central_null))
            rep.add("m1 <<_C t", _yes(cert.continuity.holds))
            rep.add("m2 _|_ t", f"yes (witness {E.labels[a0]})")
        else:
            P = state_space(E)
            fn = lebesgue_decompose if method == "lebesgue" else eps_lebesgue_decompose
            m1, m2, cert = fn(E, P, m, t)
            rep.add("face", ",".join(str(i + 1) for i in cert.face.vertex_indices))
            rep.add(f"m1 {cert.continuity.relation} t", _yes(cert.continuity.holds))
            if cert.eps_table is not None:
                for v, d, _ in cert.eps_table:
                    rep.add(f"delta for eps <= {format_rational(v)}", format_rational(d))
                if cert.meet_with_t_zero is not None:
                    rep.add("m2 ^ t = 0", _yes(cert.meet_with_t_zero))
            engine = cert.engine
    if engine is not None:
        rep.add("lp_optimum", format_rational(engine.lp_optimum))
        rep.add("singular_optimum", format_rational(engine.singular_optimum))
        rep.add("uniqueness", engine.note)
    rep.add_measure("m1", m1)
    rep.add_measure("m2", m2)
    _emit(args, rep, [("m1.pm", export_measure(m1)), ("m2.pm", export_measure(m2))])
    return 0


def cmd_sample(args):
    E = load_algebra(args.algebra)
    P = state_space(E)
    m = sample_measure(E, P, _seed(args), args.scale)
    if args.output:
        write_text(args.output, export_measure(m))
    else:
        sys.stdout.write(export_measure(m))
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized checks (fallback: $PEA_SEED, then 0)")
    common.add_argument("--out-dir", default=None, help="also write the report and any measure files here")

    p = argparse.ArgumentParser(prog="pealab", description="Exact computations on finite pseudo effect algebras.")
    p.add_argument("--version", action="version", version=f"pealab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="validate an algebra and report its Riesz profile")
    s.add_argument("algebra")
    s.add_argument("--samples", type=int, default=20, help="random pairs for the lattice identity check")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("zoo", help="write a built-in algebra, e.g. boolean:3 or product(chain:2,chain:2)")
    s.add_argument("expr")
    s.add_argument("-o", "--output")
    s.add_argument("--style", choices=["lines", "json"], default="lines")
    s.set_defaults(func=cmd_zoo)

    s = sub.add_parser("states", parents=[common], help="list the extreme states")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_states)

    for name, func in (("join", cmd_join), ("meet", cmd_meet)):
        s = sub.add_parser(name, parents=[common], help=f"{name} of measures")
        s.add_argument("algebra")
        s.add_argument("measures", nargs="+")
        s.set_defaults(func=func)

    s = sub.add_parser("decompose", parents=[common], help="split a measure")
    s.add_argument("algebra")
    s.add_argument("measure")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--face", metavar="X", help="comma separated elements; face of states vanishing on them")
    g.add_argument("--lebesgue", metavar="T")
    g.add_argument("--eps-lebesgue", metavar="T")
    g.add_argument("--central", metavar="T")
    g.add_argument("--yosida-hewitt", choices=["ca", "sigma", "uc"])
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("sample", parents=[common], help="write a seeded random measure")
    s.add_argument("algebra")
    s.add_argument("-o", "--output")
    s.add_argument("--scale", type=int, default=1)
    s.set_defaults(func=cmd_sample)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PEAError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # anything else is a bug
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
