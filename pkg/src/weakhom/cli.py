"""Command line entry point: ``weakhom VERB [options]``.

Exit codes: 0 when everything passes (or a construction succeeds), 1 when
some identity fails or a construction's condition is violated, 2 for
skipped suites and for input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import braided, io
from .constructions import (
    ConditionFailed,
    NotAMorphism,
    UnknownFixture,
    alpha_twist,
    build_fixture,
    dualize,
    object_permutation,
    xi_square_twist,
    xi_square_untwist,
)
from .bialgebra import PresentedBialgebra
from .linear import fmt, frac, identity
from .yd import AutomorphismPair, YDModule, unit_object

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# argument helpers

def _add_target(p):
    g = p.add_argument_group("target")
    g.add_argument("--fixture", help="fixture name, e.g. example-2.10 or groupoid-pair-3")
    g.add_argument("--lambda", dest="lam", default=None, help="parameter P/Q for example-2.10")
    g.add_argument("--xi", default="diagonal", choices=("diagonal", "printed", "printed-columns"),
                   help="twist variant for example-2.10")
    g.add_argument("--input", help="definition file")


def _add_output(p, formats=True):
    if formats:
        p.add_argument("--format", default="text", choices=("text", "structured"))
    p.add_argument("--out", help="write to this path instead of stdout")


def _host(args) -> PresentedBialgebra:
    obj = _target(args)
    if isinstance(obj, YDModule):
        return obj.host
    if not isinstance(obj, PresentedBialgebra):
        raise UsageError("the target is not a bialgebra")
    return obj


def _target(args):
    if args.input and args.fixture:
        raise UsageError("give either --fixture or --input, not both")
    if args.input:
        return io.load(args.input)
    if not args.fixture:
        raise UsageError("a target is required (--fixture or --input)")
    kw = {}
    if args.fixture == "example-2.10":
        kw["xi"] = args.xi
    elif args.lam is not None:
        raise UsageError("--lambda only applies to example-2.10")
    lam = None if args.lam is None else frac(args.lam)
    return build_fixture(args.fixture, lam=lam, **kw)


def _module(ref: str, args) -> YDModule:
    """``unit`` (the unit object of the target host) or a module file."""
    if ref == "unit":
        return unit_object(_host(args))
    obj = io.load(ref)
    if not isinstance(obj, YDModule):
        raise UsageError(f"{ref} does not define a Yetter-Drinfeld module")
    return obj


def _automorphism(ref: str, H: PresentedBialgebra):
    """``id``, ``perm:i,j,...`` (object permutation of a pair groupoid) or a file."""
    if ref == "id":
        return identity(H.dim)
    if ref.startswith("perm:"):
        perm = tuple(int(v) for v in ref[5:].split(","))
        n = len(perm)
        if n * n != H.dim:
            raise UsageError(f"{ref} needs a host of dimension {n * n}")
        return object_permutation(n, perm)
    obj = io.load(ref)
    if not isinstance(obj, io.NamedAutomorphism):
        raise UsageError(f"{ref} does not define an automorphism")
    return obj.matrix


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_module(M: YDModule, args):
    """Write a module next to a copy of its host (``<out>.host.json``)."""
    if args.out:
        out = Path(args.out)
        host_path = out.with_name(out.stem + ".host.json")
        io.save(M.host, host_path)
        _emit(io.dumps(io.to_dict(M, host_path.name)), out)
    else:
        _emit(io.dumps(io.to_dict(M, args.host_ref)), None)


# ---------------------------------------------------------------------------
# verbs

def cmd_verify(args) -> int:
    target = _target(args)
    name = args.fixture or args.input
    if args.fixture == "example-2.10":
        name = f"{name}(lambda={fmt(frac(args.lam or 2))}, xi={args.xi})"
    report = io.run_suite(target, args.suite, name=name)
    _emit(report.render(args.format), args.out)
    return report.exit_code


def cmd_export(args) -> int:
    if not args.fixture:
        raise UsageError("export-fixture needs --fixture")
    _emit(io.dumps(io.to_dict(_target(args))), args.out)
    return EXIT_PASS


def cmd_dualize(args) -> int:
    _emit(io.dumps(io.to_dict(dualize(_host(args)))), args.out)
    return EXIT_PASS


def cmd_twist(args) -> int:
    H = _host(args)
    if args.mode == "xi-square":
        out = xi_square_twist(H)
    elif args.mode == "xi-square-inverse":
        out = xi_square_untwist(H)
    else:
        if not args.automorphism:
            raise UsageError("the alpha twist needs --automorphism")
        try:
            out = alpha_twist(H, _automorphism(args.automorphism, H))
        except (ConditionFailed, NotAMorphism) as exc:
            sys.stderr.write(f"twist refused: {exc}\n")
            return EXIT_FAIL
    _emit(io.dumps(io.to_dict(out)), args.out)
    return EXIT_PASS


def cmd_tensor(args) -> int:
    M, N = _module(args.left, args), _module(args.right, args)
    _emit_module(braided.tensor_yd(M, N), args)
    return EXIT_PASS


def cmd_conjugate(args) -> int:
    N = _module(args.module, args)
    H = N.host
    g = AutomorphismPair.from_matrices(H, _automorphism(args.alpha, H), _automorphism(args.beta, H))
    _emit_module(braided.conjugate_module(g, N), args)
    return EXIT_PASS


def cmd_braid(args) -> int:
    M, N = _module(args.left, args), _module(args.right, args)
    try:
        b = braided.braiding(M, N)
    except braided.NotBijective as exc:
        sys.stderr.write(f"braiding is not invertible: {exc}\n")
        return EXIT_FAIL
    data = {
        "source_carrier": io._strings(b.c.src.carrier.basis),
        "target_carrier": io._strings(b.c.dst.carrier.basis),
        "c": io._strings(b.c.matrix),
        "c_inv": io._strings(b.c_inv.matrix),
    }
    if args.format == "structured":
        _emit(io.dumps(data), args.out)
    else:
        lines = []
        for key in ("c", "c_inv"):
            lines.append(f"{key}:")
            lines += ["  " + " ".join(f"{v:>5}" for v in row) for row in data[key]]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def cmd_report(args) -> int:
    data = json.loads(Path(args.input).read_text())
    report = io.report_from_structured(data)
    _emit(report.render(args.format), args.out)
    return report.exit_code


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weakhom", description="Exact checks for weak Hom-Hopf structures.")
    sub = p.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("verify", help="run a suite and print a report")
    _add_target(v)
    v.add_argument("--suite", default="all", choices=io.SUITES + ("all",))
    _add_output(v)
    v.set_defaults(fn=cmd_verify)

    e = sub.add_parser("export-fixture", help="write a fixture as a definition file")
    _add_target(e)
    _add_output(e, formats=False)
    e.set_defaults(fn=cmd_export)

    d = sub.add_parser("dualize", help="write the dual structure")
    _add_target(d)
    _add_output(d, formats=False)
    d.set_defaults(fn=cmd_dualize)

    t = sub.add_parser("twist", help="apply the xi-square or alpha twist")
    t.add_argument("mode", choices=("xi-square", "xi-square-inverse", "alpha"))
    t.add_argument("--automorphism", help="id, perm:i,j,... or an automorphism file")
    _add_target(t)
    _add_output(t, formats=False)
    t.set_defaults(fn=cmd_twist)

    for verb, fn, help_ in (("tensor", cmd_tensor, "truncated tensor product of two modules"),
                            ("braid", cmd_braid, "braiding matrices of two modules")):
        s = sub.add_parser(verb, help=help_)
        s.add_argument("--left", default="unit", help="module file or 'unit'")
        s.add_argument("--right", default="unit", help="module file or 'unit'")
        s.add_argument("--host-ref", default="host.json", help=argparse.SUPPRESS)
        _add_target(s)
        _add_output(s, formats=(verb == "braid"))
        s.set_defaults(fn=fn)

    c = sub.add_parser("conjugate", help="conjugate a module by a pair of automorphisms")
    c.add_argument("--module", default="unit", help="module file or 'unit'")
    c.add_argument("--alpha", default="id")
    c.add_argument("--beta", default="id")
    c.add_argument("--host-ref", default="host.json", help=argparse.SUPPRESS)
    _add_target(c)
    _add_output(c, formats=False)
    c.set_defaults(fn=cmd_conjugate)

    r = sub.add_parser("report", help="re-render a structured report")
    r.add_argument("--input", required=True)
    _add_output(r)
    r.set_defaults(fn=cmd_report)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, UnknownFixture, ValueError, ArithmeticError, OSError) as exc:
        msg = f"unknown fixture {exc.args[0]!r}" if isinstance(exc, UnknownFixture) else exc
        sys.stderr.write(f"error: {msg}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
