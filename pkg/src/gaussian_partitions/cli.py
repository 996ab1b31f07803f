"""
Command line front end.

    gaussparts gauss 3 2 --method all
    gaussparts verify 5 4 --suite all --format json
    gaussparts wpart -m 5 --smax 20
    gaussparts phi 5 --at 5
    gaussparts solve 6 6 --route both

Exit status: 0 on success, 1 if any cross-check or verification failed,
2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from .gaussian import (
    check_convolution_residual,
    compare_tables,
    corollary1_check,
    gaussian_by_division,
    gaussian_by_oracle,
    gaussian_by_recurrence,
    theorem1_violations,
    theorem2_branches,
    theorem2_piecewise,
)
from .partitions import DenomTuple, unconstrained_table
from .quasipoly import BUILTIN_ORDERS, builtin_w
from .toeplitz import (
    build_phi,
    format_phi,
    gaussian_phi,
    gaussian_system,
    pnm_by_toeplitz,
    solve_forward,
    toeplitz_sequence,
)

INT64_MAX = 2**63 - 1

BUILDERS = {
    "division": gaussian_by_division,
    "recurrence": gaussian_by_recurrence,
    # Run past n*m so a failure to cancel shows up as excess degree.
    "toeplitz": lambda n, m: pnm_by_toeplitz(n, m, n * m + 10),
    "oracle": gaussian_by_oracle,
}
SUITES = ("theorem1", "theorem2", "residual", "corollary1")


@dataclass
class RunReport:
    command: str
    parameters: dict[str, Any]
    results: list[dict[str, Any]] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    failures: list[dict[str, Any]] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def timed(self, label: str, fn, *args):
        t0 = time.perf_counter()
        out = fn(*args)
        self.timings[label] = time.perf_counter() - t0
        return out

    def check(self, name: str, passed: bool, **detail):
        self.results.append({"check": name, "status": "pass" if passed else "fail"})
        if not passed:
            self.failures.append({"check": name, **detail})


def _jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        if abs(x) > INT64_MAX:
            return {"value": str(x), "bigint": True}
        return x
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def render(report: RunReport, fmt: str, timing: bool) -> str:
    if fmt == "json":
        doc = {
            "command": report.command,
            "parameters": report.parameters,
            "ok": report.ok,
            "results": report.results,
            "failures": report.failures,
        }
        if timing:
            doc["timings"] = report.timings
        return json.dumps(_jsonable(doc), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        keys: list[str] = []
        for row in report.results:
            keys += [k for k in row if k not in keys]
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        w.writerows(report.results)
        return buf.getvalue()
    out = list(report.lines)
    if timing and report.timings:
        out.append("timings:")
        out += [f"  {k}: {v * 1000:.3f} ms" for k, v in report.timings.items()]
    out.append("OK" if report.ok else f"FAILED ({len(report.failures)} discrepancies)")
    return "\n".join(out) + "\n"


def cmd_gauss(n: int, m: int, method: str) -> RunReport:
    rep = RunReport("gauss", {"n": n, "m": m, "method": method})
    names = list(BUILDERS) if method == "all" else [method]
    tables = [rep.timed(name, BUILDERS[name], n, m) for name in names]
    top = n * m
    for s in range(top + 1):
        row = {"s": s}
        row.update({t.method: t[s] for t in tables})
        rep.results.append(row)
    rep.failures += compare_tables(tables, top)
    for t in tables:
        if t.coeffs.degree > top:
            rep.failures.append({"method_a": t.method, "method_b": "degree", "index": t.coeffs.degree,
                                 "value_a": t[t.coeffs.degree], "value_b": 0})
    first = tables[0]
    rep.lines.append(f"P_{n}^{m} = {first.values()}")
    rep.lines.append(f"G({n},{m};t) = {first.coeffs}")
    rep.lines.append(f"sum of coefficients = {sum(first.values())}")
    if len(tables) > 1:
        rep.lines.append(f"methods compared: {', '.join(names)}")
    for f in rep.failures:
        print(f"mismatch: {f}", file=sys.stderr)
    return rep


def _suite_theorem1(rep: RunReport, n: int, m: int):
    tables = [b(n, m) for b in BUILDERS.values()]
    transposed = gaussian_by_division(m, n)
    for t in tables:
        bad = theorem1_violations(t, transposed)
        rep.check(f"theorem1/{t.method}", not bad, violations=bad)
    for d in compare_tables(tables, n * m):
        rep.failures.append(d)


def _suite_theorem2(rep: RunReport, n: int, m: int):
    table = gaussian_by_division(n, m)
    bad = [g for g in range(n + m + 1) if theorem2_piecewise(n, m, g) != table[g]]
    rep.check("theorem2/piecewise", not bad, indices=bad)
    for g in sorted({min(n, m), max(n, m)}):
        vals = theorem2_branches(n, m, g)
        rep.check(f"theorem2/boundary g={g}", len(set(vals.values())) == 1, branches=vals)


def _suite_residual(rep: RunReport, n: int, m: int):
    res = check_convolution_residual(n, m, 2 * n * m)
    rep.check(f"residual/g<={2 * n * m}", res.ok, nonzero=res.nonzero())


def _suite_corollary1(rep: RunReport, n: int, m: int):
    for s in range(n + m + 1):
        a = corollary1_check(n, s, m)
        b = corollary1_check(m, s, n)
        rep.check(f"corollary1/s={s}", a.ok and b.ok,
                  expected=[a.expected, b.expected], got=[a.values, b.values])


def cmd_verify(n: int, m: int, suite: str) -> RunReport:
    rep = RunReport("verify", {"n": n, "m": m, "suite": suite})
    runners = {
        "theorem1": _suite_theorem1,
        "theorem2": _suite_theorem2,
        "residual": _suite_residual,
        "corollary1": _suite_corollary1,
    }
    for name in (SUITES if suite == "all" else [suite]):
        rep.timed(name, runners[name], rep, n, m)
    rep.lines += [f"{r['check']}: {r['status']}" for r in rep.results]
    for f in rep.failures:
        print(f"failure: {f}", file=sys.stderr)
    return rep


def cmd_wpart(d: DenomTuple, s_max: int, consecutive: bool) -> RunReport:
    rep = RunReport("wpart", {"parts": list(d.parts), "smax": s_max})
    values = rep.timed("dp", unconstrained_table, s_max, d)
    quasi = None
    if consecutive and d.m in BUILTIN_ORDERS:
        q = builtin_w(d.m)
        quasi = rep.timed("quasipolynomial", lambda: [q.evaluate(s) for s in range(s_max + 1)])
    for s, w in enumerate(values):
        row = {"s": s, "W": w}
        if quasi is not None:
            row["quasi"] = quasi[s]
            if quasi[s] != w:
                rep.failures.append({"method_a": "dp", "method_b": "quasipolynomial",
                                     "index": s, "value_a": w, "value_b": quasi[s]})
        rep.results.append(row)
    label = f"W_{d.m}" if consecutive else f"W(s, {{{','.join(map(str, d.parts))}}})"
    rep.lines.append(f"{label} for s=0..{s_max}: {values}")
    if quasi is not None:
        rep.lines.append(f"quasi-polynomial:      {quasi}")
    return rep


def cmd_phi(r_max: int, at: int | None) -> RunReport:
    rep = RunReport("phi", {"rmax": r_max, "at": at})
    vals = gaussian_phi(at, r_max) if at is not None else None
    for r in range(r_max + 1):
        text = format_phi(build_phi(r))
        row = {"r": r, "phi": text}
        line = f"Φ_{r} = {text}"
        if vals is not None:
            row["value"] = vals[r]
            line += f"    Φ_{r}({at}) = {vals[r]}"
        rep.results.append(row)
        rep.lines.append(line)
    if vals is not None:
        rep.lines.append(f"values at U(k) = -W_{at}(k): {list(vals)}")
    return rep


def cmd_solve(n: int, m: int, g_max: int, route: str) -> RunReport:
    rep = RunReport("solve", {"n": n, "m": m, "gmax": g_max, "route": route})
    runs = {}
    if route in ("forward", "both"):
        runs["forward"] = rep.timed("forward", lambda: solve_forward(gaussian_system(n, m, g_max), g_max))
    if route in ("closed", "both"):
        runs["closed"] = rep.timed("closed", toeplitz_sequence, n, m, g_max)
    for g in range(g_max + 1):
        rep.results.append({"g": g, **{k: v[g] for k, v in runs.items()}})
    if len(runs) == 2:
        for g, (a, b) in enumerate(zip(runs["forward"], runs["closed"])):
            if a != b:
                rep.failures.append({"method_a": "forward", "method_b": "closed",
                                     "index": g, "value_a": a, "value_b": b})
    for g in range(n * m + 1, g_max + 1):
        for k, v in runs.items():
            if v[g]:
                rep.failures.append({"method_a": k, "method_b": "zero", "index": g,
                                     "value_a": v[g], "value_b": 0})
    for k, v in runs.items():
        rep.lines.append(f"{k}: {v}")
    return rep


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _parts(text: str) -> DenomTuple:
    try:
        return DenomTuple(tuple(int(x) for x in text.split(",")))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--no-timing", action="store_true", help="omit wall-clock timings")

    p = argparse.ArgumentParser(prog="gaussparts", description=__doc__.split("\n\n")[0].strip())
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gauss", parents=[common], help="coefficients of G(n,m;t)")
    g.add_argument("n", type=_positive)
    g.add_argument("m", type=_positive)
    g.add_argument("--method", choices=(*BUILDERS, "all"), default="division")

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("n", type=_positive)
    v.add_argument("m", type=_positive)
    v.add_argument("--suite", choices=(*SUITES, "all"), default="all")

    w = sub.add_parser("wpart", parents=[common], help="restricted partition counts W")
    which = w.add_mutually_exclusive_group(required=True)
    which.add_argument("-m", type=_positive, help="consecutive parts 1..m")
    which.add_argument("-d", type=_parts, help="comma-separated parts, e.g. 1,2,3")
    w.add_argument("--smax", type=_nonneg, default=20)

    ph = sub.add_parser("phi", parents=[common], help="symbolic Phi_r polynomials")
    ph.add_argument("rmax", type=_nonneg)
    ph.add_argument("--at", type=_positive, help="evaluate at U(k) = -W_N(k)")

    so = sub.add_parser("solve", parents=[common], help="Toeplitz solve for P_n^m with timings")
    so.add_argument("n", type=_positive)
    so.add_argument("m", type=_positive)
    so.add_argument("--gmax", type=_nonneg)
    so.add_argument("--route", choices=("forward", "closed", "both"), default="both")
    return p


def run(argv=None) -> tuple[RunReport, argparse.Namespace]:
    args = build_parser().parse_args(argv)
    if args.command == "gauss":
        rep = cmd_gauss(args.n, args.m, args.method)
    elif args.command == "verify":
        rep = cmd_verify(args.n, args.m, args.suite)
    elif args.command == "wpart":
        if args.m is not None:
            rep = cmd_wpart(DenomTuple.consecutive(args.m), args.smax, True)
        else:
            rep = cmd_wpart(args.d, args.smax, False)
    elif args.command == "phi":
        rep = cmd_phi(args.rmax, args.at)
    else:
        g_max = args.gmax if args.gmax is not None else args.n * args.m
        rep = cmd_solve(args.n, args.m, g_max, args.route)
    return rep, args


def main(argv=None) -> int:
    rep, args = run(argv)
    sys.stdout.write(render(rep, args.format, not args.no_timing))
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
