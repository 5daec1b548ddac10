"""Cross-check grids: every closed form against enumeration or a second derivation.

Each suite yields :class:`Cell` results so callers can stream pass/fail lines.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator

from . import formulas as F
from .oracle import DEFAULT_CAP, brute_count, brute_cyclic_exc, brute_h
from .perm import ColoredPermutation, GroupSpec, cycles, exc_clr, exc_full, order_divides
from .polyring import series_extract

SUITES = ("group", "euler", "ucoeff", "theorem", "m2", "corollaries")


@dataclass
class Cell:
    suite: str
    label: str
    ok: bool
    detail: str = ""
    params: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        out = f"{status} {self.suite} {self.label}"
        if self.detail and not self.ok:
            out += f"\n    {self.detail}"
        return out


def _label(**kw) -> str:
    return " ".join(f"{k}={v}" for k, v in kw.items())


def _divs(r: int) -> list[int]:
    return [s for s in range(1, r + 1) if r % s == 0]


def _feasible(r: int, n: int, cap: int) -> bool:
    return r**n * math.factorial(n) <= cap


def _order_by_cycles(sigma: ColoredPermutation, m: int) -> bool:
    for cyc in cycles(sigma):
        d = len(cyc)
        if m % d or (sum(sigma.z[i - 1] for i in cyc) * (m // d)) % sigma.r:
            return False
    return True


def suite_group(rmax: int = 3, nmax: int = 4, mmax: int = 6) -> Iterator[Cell]:
    for r in range(1, rmax + 1):
        for n in range(nmax + 1):
            bad = ""
            for tau in permutations(range(1, n + 1)):
                for z in product(range(r), repeat=n):
                    sigma = ColoredPermutation(r, z, tau)
                    if exc_full(sigma) != exc_clr(sigma):
                        bad = f"{sigma}: exc={exc_full(sigma)} exc^Clr={exc_clr(sigma)}"
                        break
                    for m in range(1, mmax + 1):
                        if order_divides(sigma, m) != _order_by_cycles(sigma, m):
                            bad = f"{sigma}: sigma^{m} test disagrees with cycle criterion"
                            break
                    if bad:
                        break
                if bad:
                    break
            yield Cell("group", _label(r=r, n=n), not bad, bad, {"r": r, "n": n})


def suite_euler(dmax: int = 7) -> Iterator[Cell]:
    for d in range(1, dmax + 1):
        dist = brute_cyclic_exc(d)
        want = {k: F.eulerian(d - 1, k) for k in range(d) if F.eulerian(d - 1, k)}
        ok = dist == want
        yield Cell("euler", _label(d=d), ok, f"cycles {dist} vs Eulerian {want}", {"d": d})


def suite_ucoeff(rmax: int = 5, bmax: int = 5, imax: int = 5, tmax: int = 25) -> Iterator[Cell]:
    for r in range(1, rmax + 1):
        bad = ""
        for base in range(bmax + 1):
            for i in range(imax + 1):
                for t in range(tmax + 1):
                    a = F.u_coeff_expand(r, base, i, t)
                    b = F.u_coeff_alternating(r, base, i, t)
                    if a != b:
                        bad = f"base={base} i={i} t={t}: expansion {a} vs alternating {b}"
                        break
                if bad:
                    break
            if bad:
                break
        yield Cell("ucoeff", _label(r=r), not bad, bad, {"r": r})


def suite_theorem(
    rmax: int = 4, mset=(1, 2, 3, 4, 6), nmax: int = 6, cap: int = DEFAULT_CAP,
    primes=(2, 3, 5), prime_rmax: int = 6, trunc: int = 8,
) -> Iterator[Cell]:
    for r in range(1, rmax + 1):
        for s in _divs(r):
            for m in mset:
                for n in range(nmax + 1):
                    if not _feasible(r, n, cap):
                        continue
                    got = F.h_poly(r, s, m, n)
                    want = brute_h(GroupSpec(r, s, n, m), cap)
                    rec = F.h_recurrence(r, m, n).filter_w_mod(s)
                    ok = got == want == rec
                    detail = f"theorem {got} | oracle {want} | recurrence {rec}"
                    yield Cell("theorem", _label(r=r, s=s, m=m, n=n), ok, detail,
                               {"r": r, "s": s, "m": m, "n": n})
    for p in primes:
        for r in range(1, prime_rmax + 1):
            ok = F.h_egf_prime(r, p, trunc) == F.h_egf(r, p, trunc)
            yield Cell("theorem", _label(prime=p, r=r, trunc=trunc), ok,
                       "prime-order EGF differs from general EGF", {"r": r, "m": p})


def suite_m2(rmax: int = 6, nmax: int = 6) -> Iterator[Cell]:
    for r in range(1, rmax + 1):
        for s in _divs(r):
            closed = F.h2_closed(r, s, nmax)
            for n in range(nmax + 1):
                got = series_extract(closed, n)
                want = F.h_poly(r, s, 2, n)
                yield Cell("m2", _label(r=r, s=s, m=2, n=n), got == want,
                           f"closed form {got} | theorem {want}",
                           {"r": r, "s": s, "m": 2, "n": n})


def suite_corollaries(rmax: int = 6, nmax: int = 6, cap: int = DEFAULT_CAP) -> Iterator[Cell]:
    for r in range(2, rmax + 1, 2):
        for s in _divs(r):
            if F.m2_case(r, s) != "even-cosh":
                continue
            closed = F.h2_closed(r, s, nmax)
            for n in range(nmax + 1):
                H = F.h2_coefficient_formula(r, s, n)
                ext = series_extract(closed, n)
                problems = []
                if H != ext:
                    problems.append(f"sum {H} vs closed form {ext}")
                spec = GroupSpec(r, s, n, 2)
                brute = _feasible(r, n, cap)
                if brute and H != brute_h(spec, cap):
                    problems.append(f"sum {H} vs oracle {brute_h(spec, cap)}")
                for k in range(n + 1):
                    for ell in range(n + 1):
                        f = F.count_fix_exca(r, s, n, k, ell)
                        e = _coeff_fix_exca(ext, k, ell)
                        o = brute_count(spec, lambda st, _, k=k, ell=ell: st.fix == k and st.exc_a == ell, cap) if brute else f
                        if not f == e == o:
                            problems.append(f"fix={k} exc_A={ell}: formula {f} closed {e} oracle {o}")
                for k in range(r * n + 1):
                    f = F.count_excclr(r, s, n, k)
                    e = _coeff_excclr(ext, r, k)
                    o = brute_count(spec, lambda _, ec, k=k: ec == k, cap) if brute else f
                    if not f == e == o:
                        problems.append(f"exc^Clr={k}: formula {f} closed {e} oracle {o}")
                yield Cell("corollaries", _label(r=r, s=s, m=2, n=n), not problems,
                           "; ".join(problems[:3]), {"r": r, "s": s, "m": 2, "n": n})


def _coeff_fix_exca(H, k: int, ell: int) -> int:
    return sum(c for (a, b, _), c in H.items() if a == k and b == ell)


def _coeff_excclr(H, r: int, k: int) -> int:
    return sum(c for (_, b, cc), c in H.items() if r * b + cc == k)


def run(suite: str, **bounds) -> Iterator[Cell]:
    """Run one named suite, or all of them for ``suite == "all"``."""
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        fn = globals()[f"suite_{name}"]
        accepted = fn.__code__.co_varnames[: fn.__code__.co_argcount]
        yield from fn(**{k: v for k, v in bounds.items() if k in accepted and v is not None})
