"""Command-line front end.

Subcommands:

  points INSTANCE D              enumerate the (1/D)-integral points
  mu2 INSTANCE N M A I B J       one triangle product, with the polynomial
                                 identity echoed for the cp2 builtin
  verify SUITE [bounds]          cross-verification sweeps
                                 (ring | homotopy | tropical | wrapped |
                                  numeric | all)
  render INSTANCE OUT.svg        figure of the polygon, points, one triangle
  numeric                        JSON report of all floating-point checks

INSTANCE is a builtin name ("cp2", "dp6") or a path to a JSON instance file;
the same value may be passed via --builtin/--instance.  Every command prints
a human summary by default or a machine-readable report with --json, and
exits 0 exactly when all of its checks pass.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from . import affine, floer, homotopy, numchecks, polyring, render, tropical, wrapped
from .affine import AffinePolygon


class CommandReport:
    """Machine-readable outcome of one command."""

    def __init__(self, command: str, inputs: dict):
        self.command = command
        self.inputs = inputs
        self.results: dict = {}
        self.checks: list[dict] = []
        self._start = time.perf_counter()

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append({"name": name, "pass": bool(passed), "detail": detail})
        return passed

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": self.checks,
            "elapsed_seconds": round(time.perf_counter() - self._start, 6),
        }

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)


_BUILTINS = ("cp2", "dp6")


def resolve_instance(args) -> tuple[str, Optional[AffinePolygon]]:
    """(name, polygon) from --builtin/--instance/positional; the polygon is
    None for the cp2 builtin so callers can use the closed-form index rules."""
    name = args.builtin or args.instance or getattr(args, "instance_arg", None)
    if name is None:
        raise SystemExit("no instance given (use --builtin NAME or --instance PATH)")
    if name == "cp2":
        return name, None
    if name == "dp6":
        widths = getattr(args, "widths", None) or (1, 1, 1)
        return name, affine.dp6_model(widths)
    return name, affine.load_polygon(name)


def _polygon_of(name: str, polygon: Optional[AffinePolygon]) -> AffinePolygon:
    return affine.cp2_model() if polygon is None else polygon


def cmd_points(args) -> CommandReport:
    name, polygon = resolve_instance(args)
    report = CommandReport("points", {"instance": name, "d": args.d})
    poly = _polygon_of(name, polygon)
    problems = affine.validate(poly)
    if not report.check("instance_valid", not problems, "; ".join(problems)):
        return report
    points = affine.fractional_points(poly, args.d)
    report.results["count"] = len(points)
    report.results["points"] = [{"a": p.a, "i": p.i, "d": p.d} for p in points]
    report.check(
        "count_matches_membership_scan",
        len(points) == affine.count_points(poly, args.d),
    )
    if not args.json:
        for p in points:
            if p.d == 0:
                print("q_(0,0)  (unit)")
            else:
                spot = affine.embed(poly, p)
                print(f"q_({p.a},{p.i})  at (eta, xi) = ({spot.eta}, {spot.xi})")
        print(f"total: {len(points)} points")
    return report


def cmd_mu2(args) -> CommandReport:
    name, polygon = resolve_instance(args)
    report = CommandReport(
        "mu2",
        {"instance": name, "n": args.n, "m": args.m, "a": args.a, "i": args.i,
         "b": args.b, "j": args.j},
    )
    q1 = floer.basis_vector(0, args.n, args.a, args.i)
    q2 = floer.basis_vector(args.n, args.n + args.m, args.b, args.j)
    product = floer.mu2(q2, q1, polygon)
    report.results["product"] = floer.sum_to_json(product)
    report.check("computed", True)
    if name == "cp2":
        lhs = polyring.multiply(
            polyring.q_monomial(polyring.QBasisIndex(args.a, args.i, args.n)),
            polyring.q_monomial(polyring.QBasisIndex(args.b, args.j, args.m)),
        )
        expansion = {
            (k.a, k.i): c for k, c in polyring.expand_in_qbasis(lhs).items()
        }
        report.check("matches_polynomial_identity", expansion == product.coeffs())
    if not args.json:
        terms = " + ".join(
            (f"{c}*" if c != 1 else "") + f"q_({a},{i})" for (a, i), c in product.terms
        )
        print(f"mu2(q_({args.b},{args.j})@{args.m}, q_({args.a},{args.i})@{args.n}) = {terms}")
        if name == "cp2":
            rhs = " + ".join(
                (f"{c}*" if c != 1 else "")
                + polyring.q_label(a, i, args.n + args.m)
                for (a, i), c in product.terms
            )
            print(
                f"i.e. {polyring.q_label(args.a, args.i, args.n)} * "
                f"{polyring.q_label(args.b, args.j, args.m)} = {rhs}"
            )
    return report


def _verify_ring(report: CommandReport, max_degree: int) -> None:
    iso = polyring.verify_iso(max_degree)
    report.results["ring"] = {"pairs": iso.pairs_checked, "mismatches": list(iso.mismatches)}
    report.check("ring_isomorphism", iso.ok, f"{iso.pairs_checked} pairs")


def _verify_homotopy(report: CommandReport, max_k: int) -> None:
    ok = True
    for k in range(max_k + 1):
        enum = homotopy.enumerate_admissible(k)
        if len(enum) != 2**k or enum != homotopy.brute_force_admissible(k, 2):
            ok = False
            break
        total = sum(homotopy.homotopy_count(k, 0, 0, h) for h in range(k + 1))
        if total != 2**k:
            ok = False
            break
    report.results["homotopy"] = {"max_k": max_k}
    report.check("homotopy_word_counts", ok)


def _verify_tropical(report: CommandReport, max_nm: int) -> None:
    mismatches = 0
    pairs = 0
    for n in range(1, max_nm + 1):
        for m in range(1, max_nm + 1):
            for a, i in sorted(floer.index_range(0, n)):
                for b, j in sorted(floer.index_range(n, n + m)):
                    top = (n + m - abs(a + b)) // 2
                    product = floer.mu2(
                        floer.basis_vector(n, n + m, b, j),
                        floer.basis_vector(0, n, a, i),
                    ).coeffs()
                    pairs += 1
                    for h in range(top + 1):
                        count = tropical.tropical_structure_constant(a, i, n, b, j, m, h)
                        if count != product.get((a + b, h), 0):
                            mismatches += 1
    report.results["tropical"] = {"pairs": pairs, "mismatches": mismatches}
    report.check("tropical_counts_match_products", mismatches == 0)


def _verify_wrapped(report: CommandReport, max_degree: int) -> None:
    mismatches = 0
    for case in wrapped.Complement:
        for d1 in range(0, max_degree + 1):
            for d2 in range(0, max_degree + 1 - d1):
                for q1 in wrapped.wrapped_basis(case, d1, a_max=d1 + 1, i_max=2):
                    for q2 in wrapped.wrapped_basis(case, d2, a_max=d2 + 1, i_max=2):
                        got = wrapped.wrapped_product(case, q2, q1)
                        oracle = wrapped.laurent_product_in_qbasis(
                            case,
                            wrapped.rational_function(q1),
                            wrapped.rational_function(q2),
                        )
                        if got != oracle:
                            mismatches += 1
    report.results["wrapped"] = {"mismatches": mismatches}
    report.check("wrapped_products_match_localized_ring", mismatches == 0)


def _verify_numeric(report: CommandReport, tol: float) -> None:
    numeric = numchecks.numeric_report(tol=tol)
    report.results["numeric"] = numeric
    for item in numeric["checks"]:
        report.check(item["name"], item["pass"], f"max_error={item['max_error']:.3e}")


def cmd_verify(args) -> CommandReport:
    report = CommandReport("verify", {"suite": args.suite})
    suites = ("ring", "homotopy", "tropical", "wrapped", "numeric") \
        if args.suite == "all" else (args.suite,)
    if "ring" in suites:
        _verify_ring(report, args.max_degree)
    if "homotopy" in suites:
        _verify_homotopy(report, args.max_k)
    if "tropical" in suites:
        _verify_tropical(report, args.max)
    if "wrapped" in suites:
        _verify_wrapped(report, min(args.max_degree, 3))
    if "numeric" in suites:
        _verify_numeric(report, args.tol)
    if not args.json:
        for check in report.checks:
            state = "pass" if check["pass"] else "FAIL"
            detail = f"  ({check['detail']})" if check["detail"] else ""
            print(f"[{state}] {check['name']}{detail}")
    return report


def cmd_render(args) -> CommandReport:
    name, polygon = resolve_instance(args)
    report = CommandReport(
        "render", {"instance": name, "out": args.out, "points": args.points,
                   "triangle": args.triangle},
    )
    poly = _polygon_of(name, polygon)
    triangle = None
    if args.triangle is not None:
        if name != "cp2":
            raise SystemExit("triangle rendering is available for the cp2 builtin")
        a, i, n, b, j, m, h = args.triangle
        triangle = tropical.build_triangle(a, i, n, b, j, m, h)
        report.check("triangle_exists", triangle is not None)
        if triangle is not None:
            report.results["triangle"] = tropical.triangle_to_json(triangle)
    svg = render.render_svg(poly, d=args.points, triangle=triangle)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    report.results["svg_bytes"] = len(svg)
    report.check("written", True, args.out)
    if not args.json:
        print(f"wrote {args.out} ({len(svg)} bytes)")
    return report


def cmd_numeric(args) -> CommandReport:
    report = CommandReport("numeric", {"tol": args.tol})
    _verify_numeric(report, args.tol)
    if not args.json:
        for check in report.checks:
            state = "pass" if check["pass"] else "FAIL"
            print(f"[{state}] {check['name']}  ({check['detail']})")
    return report


def _add_instance_args(parser, positional: bool = True) -> None:
    if positional:
        parser.add_argument(
            "instance_arg", nargs="?", metavar="INSTANCE",
            help="builtin name (cp2, dp6) or JSON instance path",
        )
    parser.add_argument("--builtin", choices=_BUILTINS)
    parser.add_argument("--instance", metavar="PATH")
    parser.add_argument(
        "--widths", type=int, nargs=3, metavar=("W1", "W2", "W3"),
        help="affine widths of the dp6 builtin (default 1 1 1)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affinefloer",
        description="Exact bases, products and cross-checks on singular affine polygons.",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument(
        "--out", dest="report_out", metavar="PATH",
        help="also write the JSON report to PATH",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_points = sub.add_parser("points", help="enumerate (1/d)-integral points")
    _add_instance_args(p_points)
    p_points.add_argument("d", type=int)
    p_points.set_defaults(func=cmd_points)

    p_mu2 = sub.add_parser("mu2", help="one triangle product")
    _add_instance_args(p_mu2)
    for field in ("n", "m", "a", "i", "b", "j"):
        p_mu2.add_argument(field, type=int)
    p_mu2.set_defaults(func=cmd_mu2)

    p_verify = sub.add_parser("verify", help="cross-verification sweeps")
    p_verify.add_argument(
        "suite", choices=("ring", "homotopy", "tropical", "wrapped", "numeric", "all")
    )
    p_verify.add_argument("--max-degree", type=int, default=6, dest="max_degree")
    p_verify.add_argument("--max-k", type=int, default=8, dest="max_k")
    p_verify.add_argument("--max", type=int, default=4)
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.set_defaults(func=cmd_verify)

    p_render = sub.add_parser("render", help="write an SVG figure")
    p_render.add_argument(
        "instance_arg", metavar="INSTANCE",
        help="builtin name (cp2, dp6) or JSON instance path",
    )
    p_render.add_argument("out", metavar="OUT.svg")
    p_render.add_argument("--points", type=int, metavar="D")
    p_render.add_argument(
        "--triangle", type=int, nargs=7, metavar=("A", "I", "N", "B", "J", "M", "H")
    )
    p_render.add_argument("--widths", type=int, nargs=3, metavar=("W1", "W2", "W3"))
    p_render.set_defaults(func=cmd_render, builtin=None, instance=None)

    p_numeric = sub.add_parser("numeric", help="floating-point checks report")
    p_numeric.add_argument("--tol", type=float, default=1e-9)
    p_numeric.set_defaults(func=cmd_numeric)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    if args.report_out:
        with open(args.report_out, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=2)
            fh.write("\n")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
