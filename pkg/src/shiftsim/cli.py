"""Command-line front end: ``shiftsim <command> ...``.

Exit status is 0 on success, 1 when a mathematical check fails (``check``,
or ``member``/``ball`` with ``--assert``), and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import dsl
from .checks import DEFAULT_SEED, SUITES, run_suite
from .classes import GroupClass, NotAMember, closure_falsifier, contains, parse_class
from .config import Limits
from .houghton import (
    HoughtonElement,
    NestingError,
    Triple,
    ball_enumerate,
    chi,
    composite_iso,
    factor_kind,
    factorize,
    minimal_triple,
    reduce_h1_to_g,
)
from .houghton.io import element_to_dict, triple_to_dict
from .perm import EPPerm, Germ, cycle_preview, format_perm, mk_periodic, to_dict
from .shift import germ_shift

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- rendering -----------------------------------------------------------------


def to_json(v: Any) -> Any:
    if isinstance(v, EPPerm):
        return to_dict(v)
    if isinstance(v, Germ):
        return {"germ": to_dict(v.rep)}
    if isinstance(v, HoughtonElement):
        return element_to_dict(v)
    if isinstance(v, Triple):
        return triple_to_dict(v)
    if isinstance(v, GroupClass):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [to_json(x) for x in v]
    return v


def render(v: Any, window: int) -> str:
    if isinstance(v, EPPerm):
        return f"{format_perm(v)}\ncycles on [1..{window}]: {cycle_preview(v, window)}"
    if isinstance(v, Germ):
        return f"germ of {render(v.rep, window)}"
    if isinstance(v, HoughtonElement):
        return f"n={v.n} flat {render(v.flat, window)}"
    if isinstance(v, Triple):
        return f"{dsl.format_expr(v)}\nflat {render(v.element.flat, window)}"
    return dsl.format_expr(v)


def emit(v: Any, args: argparse.Namespace) -> None:
    if args.json:
        print(json.dumps(to_json(v), sort_keys=True))
    else:
        print(render(v, args.window))


# -- inputs --------------------------------------------------------------------


def _value(args: argparse.Namespace, expr: str | None) -> Any:
    if expr is not None:
        return dsl.evaluate(expr, Path.cwd())
    if args.file:
        try:
            data = json.loads(Path(args.file).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
        return dsl.load_value(data)
    raise UsageError("give an expression or --file")


def _one(args: argparse.Namespace) -> Any:
    return _value(args, getattr(args, "expr", None))


def _typed(value: Any, kind: type, what: str) -> Any:
    if not isinstance(value, kind):
        raise UsageError(f"{what} expects a {kind.__name__}, got {type(value).__name__}")
    return value


def _class(text: str | None) -> GroupClass | None:
    return None if text is None else parse_class(text)


def _element(v: Any) -> HoughtonElement:
    if isinstance(v, Triple):
        return v.element
    if isinstance(v, EPPerm):
        return HoughtonElement(1, v)
    return _typed(v, HoughtonElement, "this command")


# -- commands ------------------------------------------------------------------


def cmd_eval(args) -> int:
    emit(_one(args), args)
    return EXIT_OK


def cmd_normalize(args) -> int:
    if args.expr is None and args.file:
        # accept any valid table here, canonical or not
        try:
            data = json.loads(Path(args.file).read_text())
            g = mk_periodic(data["p"], data["T"], data["table"])
        except (OSError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read a permutation from {args.file}") from exc
    else:
        g = _typed(_one(args), EPPerm, "normalize")
    emit(g, args)
    return EXIT_OK


def cmd_mul(args) -> int:
    values = [dsl.evaluate(e, Path.cwd()) for e in args.exprs]
    if not values:
        raise UsageError("mul needs at least one operand")
    acc = values[0]
    for v in values[1:]:
        acc = dsl.mul_values(acc, v)
    emit(acc, args)
    return EXIT_OK


def cmd_inv(args) -> int:
    emit(dsl.invert_value(_one(args)), args)
    return EXIT_OK


def cmd_shift(args) -> int:
    v = _one(args)
    if args.germ:
        v = germ_shift(v if isinstance(v, Germ) else Germ(_typed(v, EPPerm, "shift --germ")))
    else:
        v = dsl.shift_value(v, args.j)
    emit(v, args)
    return EXIT_OK


def cmd_member(args) -> int:
    cls = parse_class(args.cls)
    v = _one(args)
    if isinstance(v, EPPerm):
        ok, detail = contains(cls, v), ""
    else:
        try:
            minimal_triple(_element(v), cls)
            ok, detail = True, ""
        except NotAMember as exc:
            ok, detail = False, f" ({exc})"
    if args.json:
        print(json.dumps({"class": str(cls), "member": ok}))
    else:
        print(("true" if ok else "false") + detail)
    return EXIT_FAIL if args.assert_ and not ok else EXIT_OK


def cmd_chi(args) -> int:
    v = _one(args)
    if isinstance(v, HoughtonElement):
        v = minimal_triple(v)
    emit(chi(_typed(v, Triple, "chi")), args)
    return EXIT_OK


def cmd_check(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(n not in SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    failed = False
    for name in names:
        res = run_suite(name, args.samples, args.seed)
        prefix = f"{name}: " if len(names) > 1 else ""
        print(prefix + res.summary())
        failed |= not res.ok
    return EXIT_FAIL if failed else EXIT_OK


def cmd_ball(args) -> int:
    limits = Limits.from_env()
    gens = [_element(dsl.evaluate(e, Path.cwd())) for e in args.gens]
    ball = ball_enumerate(gens, args.radius, args.n, limits)
    ok = True
    lines = [f"elements: {len(ball)}", "sphere sizes: " + " ".join(map(str, ball.sphere_sizes))]
    if ball.truncated:
        lines.append(f"TRUNCATED at radius {ball.radius} (limit {limits.max_elements} elements)")
    if args.cls:
        cls = parse_class(args.cls)
        outside = [e for e in ball.elements if not _in_hn(e, cls)]
        lines.append(f"outside {cls}: {len(outside)}")
        ok &= not outside
    for text in args.contains or []:
        hit = _element(dsl.evaluate(text, Path.cwd())) in ball
        lines.append(f"contains {text}: {'yes' if hit else 'no'}")
        ok &= hit
    if args.falsify:
        if any(g.n != 1 for g in gens):
            raise UsageError("--falsify works on permutations of N (n = 1)")
        report = closure_falsifier([g.flat for g in gens], args.falsify, args.radius, limits.max_elements)
        lines.append("shift closure: " + report.summary())
        for w in report.witnesses[:10]:
            lines.append(f"  psi[{w.j}]({dsl.format_expr(w.source)}) = {dsl.format_expr(w.image)}")
        ok &= not report.violation
    if args.json:
        print(json.dumps({"elements": len(ball), "sphere_sizes": ball.sphere_sizes,
                          "truncated": ball.truncated, "ok": ok}, sort_keys=True))
    else:
        print("\n".join(lines))
    return EXIT_FAIL if args.assert_ and not ok else EXIT_OK


def _in_hn(e: HoughtonElement, cls: GroupClass) -> bool:
    try:
        minimal_triple(e, cls)
    except NotAMember:
        return False
    return True


def cmd_iso(args) -> int:
    e = _element(_one(args))
    out = composite_iso(e, args.n, _class(args.cls))
    emit(out, args)
    return EXIT_OK


def cmd_factor(args) -> int:
    t = _typed(_one(args), Triple, "factor")
    factors = factorize(t)
    if args.json:
        print(json.dumps([triple_to_dict(f) for f in factors], sort_keys=True))
    else:
        print(f"{len(factors)} factor(s)")
        for f in factors:
            print(f"[{factor_kind(f)}] {dsl.format_expr(f)}")
    return EXIT_OK


def cmd_reduce_h1(args) -> int:
    t = _typed(_one(args), Triple, "reduce-h1")
    cls = _class(args.cls) or t.cls
    emit(reduce_h1_to_g(t, cls), args)
    return EXIT_OK


# every library operation and a command line that reaches it
OPERATIONS: dict[str, list[str]] = {
    "mkFinite": ["eval", "(1 3)(2 5 6 4)"],
    "mkPeriodic": ["normalize", "periodic(2, 4, [3, 1, 5, 2])"],
    "apply": ["eval", "apply(alpha, 9)"],
    "compose": ["mul", "alpha", "lambda"],
    "inverse": ["inv", "alpha"],
    "germEquals": ["eval", "same_germ(alpha, alpha * (1 2))"],
    "psi": ["shift", "-j", "3", "alpha"],
    "insertArrow": ["eval", "insert[1,3](id)"],
    "germShift": ["shift", "--germ", "alpha"],
    "contains": ["member", "E(2)", "alpha"],
    "sectionIntoStabilizer": ["eval", "section[1](E(2), alpha)"],
    "closureFalsifier": ["ball", "alpha", "--radius", "2", "--falsify", "2"],
    "beta": ["eval", "beta(1, [(1,1),(1,3)], 1, 1)"],
    "evalTriple": ["eval", "eval(triple(2, universe, [(2,1)], [((1,1),(2,1))], [id, id], [(1,1)]))"],
    "expand": ["eval", "expand[1,1](triple(2, universe, [], [], [alpha, id], []))"],
    "minimalTriple": ["eval", "minimal(elem(2, alpha), trivial)"],
    "multiply": ["mul", "embed(E(2), [alpha, id])", "embed(E(2), [lambda, id])"],
    "invertTriple": ["inv", "triple(2, universe, [(2,1)], [((1,1),(2,1))], [id, id], [(1,1)])"],
    "chi": ["chi", "triple(2, universe, [(2,1)], [((1,1),(2,1))], [id, id], [(1,1)])"],
    "embedGn": ["eval", "embed(E(2), [alpha, lambda])"],
    "factorize": ["factor", "triple(2, E(2), [(2,1)], [((1,1),(2,1))], [alpha, id], [(1,1)])"],
    "reduceH1ToG": ["reduce-h1", "triple(1, E(2), [(1,3)], [((1,3),(1,3))], [alpha], [(1,3)])"],
    "psi1OnHnG": ["shift", "eval(embed(E(2), [id, lambda]))"],
    "compositeIso": ["iso", "-n", "2", "eval(embed(universe, [alpha * alpha, id]))"],
    "ballEnumerate": ["ball", "alpha", "lambda", "(1 2)", "--radius", "3"],
    "finiteCollapse": ["eval", "collapse(triple(1, sym(3), [], [], [(1 2)], []))"],
    "identitySuites": ["check", "worked-example"],
}


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--file", help="read the input from a JSON file")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--window", type=int, default=Limits().window, help="cycle preview window [1..W]")

    parser = argparse.ArgumentParser(prog="shiftsim", description="Eventually periodic permutations, "
                                     "shifting maps and Houghton-type groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str, expr: bool = True):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        if expr:
            p.add_argument("expr", nargs="?", help="DSL expression")
        p.set_defaults(func=func)
        return p

    add("eval", cmd_eval, "evaluate an expression")
    add("normalize", cmd_normalize, "print the canonical form of a permutation")
    p = add("mul", cmd_mul, "multiply operands (the rightmost acts first)", expr=False)
    p.add_argument("exprs", nargs="+")
    add("inv", cmd_inv, "invert")
    p = add("shift", cmd_shift, "apply the shifting map psi_j")
    p.add_argument("-j", type=int, default=1)
    p.add_argument("--germ", action="store_true", help="shift the germ instead")
    p = add("member", cmd_member, "test membership in a class (or in H_n of a class)", expr=False)
    p.add_argument("cls", metavar="CLASS")
    p.add_argument("expr", nargs="?")
    p.add_argument("--assert", dest="assert_", action="store_true", help="exit 1 when not a member")
    add("chi", cmd_chi, "translation amounts per ray")
    p = add("check", cmd_check, "run a seeded identity suite", expr=False)
    p.add_argument("suite", help="suite name or 'all': " + ", ".join(SUITES))
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p = add("ball", cmd_ball, "enumerate a word ball", expr=False)
    p.add_argument("gens", nargs="*")
    p.add_argument("--radius", type=int, default=4)
    p.add_argument("-n", type=int, help="ray count (needed when there are no generators)")
    p.add_argument("--class", dest="cls", help="check every element lies in this class")
    p.add_argument("--contains", action="append", help="check that this element is in the ball")
    p.add_argument("--falsify", type=int, metavar="J", help="search psi_j images (j <= J) outside the ball")
    p.add_argument("--assert", dest="assert_", action="store_true", help="exit 1 when a check fails")
    p = add("iso", cmd_iso, "re-index an element of H_m(H_n(G)) into H_mn(G)")
    p.add_argument("-n", type=int, required=True, help="inner ray count")
    p.add_argument("--class", dest="cls", help="inner class G")
    add("factor", cmd_factor, "split a triple into H_n and G^n factors")
    p = add("reduce-h1", cmd_reduce_h1, "rewrite an H_1(G) triple as an element of G")
    p.add_argument("--class", dest="cls", help="defaults to the triple's own class")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NestingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
