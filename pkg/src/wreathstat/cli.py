"""Command-line front end: ``wreathstat {poly,count,verify}``.

Exit codes: 0 success, 1 verification failure or oracle mismatch,
2 usage or parameter error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import formulas as F
from . import oracle
from .errors import ParameterError
from .perm import GroupSpec
from .polyring import MPoly, series_extract
from .verify import SUITES, run

METHODS = ("oracle", "theorem", "recurrence", "closed-m2", "corollary")


@dataclass(frozen=True)
class OutputRecord:
    spec: GroupSpec
    polynomial: tuple[tuple[int, int, int, str], ...]
    derivation: str

    @classmethod
    def from_poly(cls, spec: GroupSpec, poly: MPoly, derivation: str) -> OutputRecord:
        terms = tuple((a, b, c, str(coeff)) for (a, b, c), coeff in poly.items())
        return cls(spec, terms, derivation)

    def to_poly(self) -> MPoly:
        return MPoly({(a, b, c): int(coeff) for a, b, c, coeff in self.polynomial})

    def to_dict(self) -> dict:
        sp = self.spec
        return {
            "r": sp.r, "s": sp.s, "m": sp.m, "n": sp.n,
            "method": self.derivation,
            "terms": [{"u": a, "v": b, "w": c, "c": coeff} for a, b, c, coeff in self.polynomial],
        }

    @classmethod
    def from_dict(cls, d: dict) -> OutputRecord:
        spec = GroupSpec(d["r"], d["s"], d["n"], d["m"])
        terms = tuple((t["u"], t["v"], t["w"], t["c"]) for t in d["terms"])
        return cls(spec, terms, d["method"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict()) + "\n"

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["u", "v", "w", "c"])
        writer.writerows(self.polynomial)
        return buf.getvalue()

    def to_text(self) -> str:
        return str(self.to_poly()) + "\n"

    def render(self, fmt: str) -> str:
        return {"text": self.to_text, "json": self.to_json, "csv": self.to_csv}[fmt]()


def compute_poly(spec: GroupSpec, method: str, trunc: int | None = None,
                 cap: int = oracle.DEFAULT_CAP, workers: int = 1) -> MPoly:
    r, s, n, m = spec.r, spec.s, spec.n, spec.m
    trunc = max(n, 8) if trunc is None else trunc
    if trunc < n:
        raise ParameterError(f"truncation {trunc} is below n={n}")
    if method == "oracle":
        return oracle.brute_h(spec, cap, workers)
    if method == "theorem":
        return series_extract(F.h_egf(r, m, trunc), n).filter_w_mod(s)
    if method == "recurrence":
        return F.h_recurrence(r, m, n).filter_w_mod(s)
    if m != 2:
        raise ParameterError(f"method {method} applies only to m = 2, got m={m}")
    if method == "closed-m2":
        return series_extract(F.h2_closed(r, s, trunc), n)
    if method == "corollary":
        return F.h2_coefficient_formula(r, s, n)
    raise ParameterError(f"unknown method {method}")


def _emit(text: str, out: str | None):
    sys.stdout.write(text)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_poly(args) -> int:
    spec = GroupSpec(args.r, args.s, args.n, args.m)
    poly = compute_poly(spec, args.method, args.trunc, args.cap, args.workers)
    record = OutputRecord.from_poly(spec, poly, args.method)
    _emit(record.render(args.format), args.out)
    return 0


def cmd_count(args) -> int:
    r, s, n = args.r, args.s, args.n
    if args.excclr is not None:
        if args.fix is not None or args.exca is not None:
            raise ParameterError("--excclr cannot be combined with --fix/--exca")
        value = F.count_excclr(r, s, n, args.excclr)
        k = args.excclr
        pred = lambda st, ec: ec == k  # noqa: E731
        query = {"excclr": k}
    elif args.fix is not None and args.exca is not None:
        value = F.count_fix_exca(r, s, n, args.fix, args.exca)
        fix, exca = args.fix, args.exca
        pred = lambda st, ec: st.fix == fix and st.exc_a == exca  # noqa: E731
        query = {"fix": fix, "exca": exca}
    else:
        raise ParameterError("give either --excclr K or both --fix K and --exca L")
    spec = GroupSpec(r, s, n, 2)
    brute = None
    if spec.ambient_size <= args.cap:
        brute = oracle.brute_count(spec, pred, args.cap)
    if args.format == "json":
        text = json.dumps({"r": r, "s": s, "n": n, **query, "formula": str(value),
                           "oracle": None if brute is None else str(brute)}) + "\n"
    else:
        shown = "skipped (group exceeds cap)" if brute is None else str(brute)
        text = f"formula: {value}\noracle: {shown}\n"
    _emit(text, args.out)
    return 0 if brute is None or brute == value else 1


def _mset(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad m list {text!r}") from exc
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("m values must be positive")
    return vals


def cmd_verify(args) -> int:
    lines = []
    first = None
    passed = failed = 0
    bounds = dict(rmax=args.rmax, nmax=args.nmax, mset=args.mset, dmax=args.dmax, cap=args.cap)
    for cell in run(args.suite, **bounds):
        if cell.ok:
            passed += 1
        else:
            failed += 1
            first = first or cell
        if not (args.quiet and cell.ok):
            lines.append(cell.line())
            print(lines[-1], flush=True)
    summary = f"{passed} passed, {failed} failed"
    if first is not None:
        summary += f"; first failure: {first.suite} {first.label}\n    {first.detail}"
    print(summary)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines + [summary]) + "\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathstat",
        description="Distribution of (fix, exc_A, csum) over {sigma in G(r,s,n) : sigma^m = 1}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_m=True):
        p.add_argument("--r", type=int, required=True, help="number of colors")
        p.add_argument("--s", type=int, default=1, help="divisor of r selecting G(r,s,n)")
        p.add_argument("--n", type=int, required=True, help="number of digits")
        if with_m:
            p.add_argument("--m", type=int, default=2, help="order bound: sigma^m = 1")
        p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP,
                       help="largest |G(r,n)| the oracle may enumerate")
        p.add_argument("--out", help="also write the output to this file")

    p = sub.add_parser("poly", help="print H^(m)_{r,s,n}(u,v,w)")
    common(p)
    p.add_argument("--method", choices=METHODS, default="theorem")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--trunc", type=int, help="series truncation (default max(n, 8))")
    p.add_argument("--workers", type=int, default=1, help="processes for the oracle")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("count", help="involution counts from the m = 2 corollaries")
    common(p, with_m=False)
    p.add_argument("--excclr", type=int, help="colored excedance number k")
    p.add_argument("--fix", type=int, help="number of absolute fixed points")
    p.add_argument("--exca", type=int, help="exc_A value")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run cross-check grids")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--rmax", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--dmax", type=int)
    p.add_argument("--mset", type=_mset, help="comma-separated m values, e.g. 2,3,4,6")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.add_argument("--quiet", action="store_true", help="print failures and summary only")
    p.add_argument("--out", help="also write the report to this file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"wreathstat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
