"""Command-line front end: ``chowq <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage or
parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import verifier as V
from .catalog import RingKind, UnsupportedParameter, make_ring
from .expr import ExprError
from .polynomials import TableMismatch
from .report import SAT, UNSAT
from .rings import (BaseNotTrivial, NoPushforwardData, NonterminationGuard, NotPointRing,
                    NotTopDegree, RingMismatch, point_degree, pushforward)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUITES = ("fulton", "whitney", "euler", "pushpull", "oracle", "example", "odd-identity",
          "comparison", "all")
# (default n, smallest n, largest n) per suite
SUITE_RANGE = {
    "fulton": (4, 1, 8), "whitney": (3, 1, 8), "euler": (3, 2, 5), "pushpull": (3, 2, 4),
    "oracle": (3, 1, 4), "example": (None, None, None), "odd-identity": (3, 1, 5),
    "comparison": (3, 2, 4),
}
ORACLE_KINDS = (RingKind.FLAG_DN, RingKind.FLAG_BN, RingKind.QUADRIC_HALVES,
                RingKind.FLAG_TOWER, RingKind.QUADRIC_INTEGRAL_EVEN)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chowq", description="Chow rings of quadric and isotropic flag bundles.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ring_args(sp):
        sp.add_argument("--kind", required=True, choices=[k.value for k in RingKind])
        sp.add_argument("--n", required=True, type=int)
        sp.add_argument("--point", action="store_true", help="specialise the base to a point")
        sp.add_argument("--json", action="store_true")

    ring_args(sub.add_parser("present", help="list generators, rules and basis"))
    for name, helptext in (("normalize", "print the normal form of an expression"),
                           ("push", "push an expression forward to the base"),
                           ("degree", "degree of a top-degree class over a point")):
        sp = sub.add_parser(name, help=helptext)
        ring_args(sp)
        sp.add_argument("--expr", required=True)
    sp = sub.add_parser("mul", help="multiply normal forms")
    ring_args(sp)
    sp.add_argument("--expr", required=True, action="append",
                    help="factor; repeat for each factor")
    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", required=True, choices=SUITES)
    sp.add_argument("--n", type=int)
    sp.add_argument("--json", action="store_true")
    return p


# -- rendering ---------------------------------------------------------------------------

def present_json(ring) -> dict:
    push = None
    if ring.pushforward_data is not None:
        push = {ring.fiber.monomial_text(b) or "1": v.to_text()
                for b, v in sorted(ring.pushforward_data.items(), key=lambda kv: ring.order_key(kv[0]))
                if v.terms}
    return {
        "ring": {"kind": ring.kind, "n": ring.n},
        "point": ring.point,
        "variant": ring.variant.value,
        "fiber": [{"name": g, "degree": d} for g, d in ring.fiber.items()],
        "base": [{"name": g, "degree": d} for g, d in ring.base.items()],
        "named": {k: v.to_text() for k, v in ring.named.items()},
        "rules": [{"lhs": ring.fiber.monomial_text(r.lhs), "rhs": ring.lift_poly(r.rhs).to_text(),
                   "label": r.label} for r in ring.rules],
        "basis": [ring.fiber.monomial_text(b) or "1" for b in ring.basis],
        "pushforward": push,
    }


def present_text(ring) -> str:
    d = present_json(ring)
    gens = lambda xs: ", ".join(f"{g['name']}({g['degree']})" for g in xs) or "(none)"
    lines = [f"ring: {ring.name}",
             f"coefficients: {d['variant']}",
             f"fiber generators: {gens(d['fiber'])}",
             f"base generators: {gens(d['base'])}"]
    if d["named"]:
        lines.append("named elements:")
        lines += [f"  {k} = {v}" for k, v in d["named"].items()]
    lines.append("rules:")
    lines += [f"  {r['lhs']} -> {r['rhs']}" for r in d["rules"]]
    lines.append(f"basis ({len(d['basis'])}): " + ", ".join(d["basis"]))
    if d["pushforward"] is not None:
        lines.append("pushforward:")
        lines += [f"  {k} -> {v}" for k, v in d["pushforward"].items()]
    return "\n".join(lines)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


# -- verification suites --------------------------------------------------------------------

def _suite_n(suite: str, n: int | None, strict: bool) -> int | None:
    default, lo, hi = SUITE_RANGE[suite]
    if n is None or default is None:
        return default
    if lo <= n <= hi:
        return n
    if strict:
        raise UsageError(f"--n for suite {suite} must lie in {lo}..{hi}")
    return default


def run_suite(suite: str, n: int | None = None, strict: bool = True) -> list[tuple]:
    """(report, expected status) pairs for one suite."""
    if suite == "all":
        out = []
        for s in SUITES[:-1]:
            out += run_suite(s, n, strict=False)
        return out
    n = _suite_n(suite, n, strict)
    if suite == "fulton":
        return [(V.fulton_suite(n, p, all_pairs=True), "PASS") for p in V.Parity]
    if suite == "whitney":
        return [(V.whitney_invariance_check(n, p), "PASS") for p in V.Parity]
    if suite == "euler":
        return [(V.euler_axioms_check(n), "PASS")]
    if suite == "pushpull":
        return [(V.pushpull_check(n), "PASS"),
                (V.projection_formula_check(RingKind.QUADRIC_HALVES, n), "PASS")]
    if suite == "oracle":
        out = []
        for kind in ORACLE_KINDS:
            lo = 2 if kind in (RingKind.QUADRIC_HALVES, RingKind.FLAG_TOWER,
                               RingKind.QUADRIC_INTEGRAL_EVEN) else 1
            out.append((V.oracle_relations_check(kind, max(n, lo)), "PASS"))
        return out
    if suite == "example":
        return [(V.no_subbundle_check(), UNSAT), (V.no_subbundle_check(perturbed=True), SAT)]
    if suite == "odd-identity":
        return [(V.odd_chern_identity_check(n), "PASS")]
    if suite == "comparison":
        return [(V.comparison_check(n), "PASS")]
    raise UsageError(f"unknown suite {suite}")


# -- dispatch ------------------------------------------------------------------------------

def _execute(args) -> tuple[int, str]:
    if args.command == "verify":
        results = run_suite(args.suite, args.n)
        ok = all(rep.status == want for rep, want in results)
        if args.json:
            text = _dump([rep.to_json() for rep, _ in results])
        else:
            text = "\n".join(rep.to_text() for rep, _ in results)
        return (EXIT_OK if ok else EXIT_FAIL), text

    ring = make_ring(args.kind, args.n, point=args.point)
    if args.command == "present":
        return EXIT_OK, _dump(present_json(ring)) if args.json else present_text(ring)
    if args.command == "mul":
        factors = [ring(e) for e in args.expr]
        result = factors[0]
        for f in factors[1:]:
            result = result * f
        return EXIT_OK, _dump(result.to_json()) if args.json else result.to_text()
    element = ring(args.expr)
    ring_json = {"kind": ring.kind, "n": ring.n}
    if args.command == "normalize":
        return EXIT_OK, _dump(element.to_json()) if args.json else element.to_text()
    if args.command == "push":
        value = pushforward(ring, element)
        if args.json:
            return EXIT_OK, _dump({"ring": ring_json, "pushforward": value.to_json()})
        return EXIT_OK, value.to_text()
    if args.command == "degree":
        value = point_degree(ring, element)
        if args.json:
            return EXIT_OK, _dump({"ring": ring_json, "degree": str(value)})
        return EXIT_OK, str(value)
    raise UsageError(f"unknown command {args.command}")


_USAGE_ERRORS = (UsageError, ExprError, UnsupportedParameter, NotPointRing, NotTopDegree,
                 NoPushforwardData, BaseNotTrivial, RingMismatch, TableMismatch)


def run_command(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = _parser().parse_args(argv)
        status, text = _execute(args)
    except _USAGE_ERRORS as exc:
        code = getattr(exc, "code", "USAGE_ERROR")
        print(f"error: {code}: {exc}", file=err)
        return EXIT_USAGE
    except NonterminationGuard as exc:
        print(f"error: NONTERMINATION_GUARD: {exc}", file=err)
        return EXIT_FAIL
    print(text, file=out)
    return status


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
